#pragma once

#include <stdexcept>
#include <string>

namespace homspec {

// Exit-code mapping used by the CLI: invalid_input -> 2, resource_cap -> 3,
// contract_violation -> 4.

struct invalid_input_error : std::invalid_argument {
    explicit invalid_input_error(const std::string& what) : std::invalid_argument(what) {}
};

struct resource_cap_error : std::runtime_error {
    explicit resource_cap_error(const std::string& what) : std::runtime_error(what) {}
};

struct contract_violation_error : std::logic_error {
    explicit contract_violation_error(const std::string& what) : std::logic_error(what) {}
};

inline void require_input(bool cond, const std::string& what) {
    if (!cond) throw invalid_input_error(what);
}

inline void require_contract(bool cond, const std::string& what) {
    if (!cond) throw contract_violation_error(what);
}

}  // namespace homspec
