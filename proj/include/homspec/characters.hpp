#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "homspec/partitions.hpp"

namespace homspec {

namespace detail {

inline long mn_recurse(std::vector<int> lambda, std::vector<int> rho,
                            std::map<std::pair<std::vector<int>, std::vector<int>>, long>& memo) {
    if (rho.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, rho);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    // Strip one border strip of length rho[0] (the largest cycle) in every
    // admissible way; strips run from row i to row j with sign (-1)^(j-i).
    int r = rho[0];
    std::vector<int> rest(rho.begin() + 1, rho.end());
    int m = static_cast<int>(lambda.size());
    long total = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            int v = lambda[i] - r + (j - i);
            if (j > i && v > lambda[j] - 1) continue;
            int below = (j + 1 < m) ? lambda[j + 1] : 0;
            if (v < below) continue;
            std::vector<int> mu;
            mu.reserve(m);
            for (int k = 0; k < i; ++k) mu.push_back(lambda[k]);
            for (int k = i; k < j; ++k) mu.push_back(lambda[k + 1] - 1);
            mu.push_back(v);
            for (int k = j + 1; k < m; ++k) mu.push_back(lambda[k]);
            while (!mu.empty() && mu.back() == 0) mu.pop_back();
            long sign = ((j - i) % 2 == 0) ? 1 : -1;
            total += sign * mn_recurse(std::move(mu), rest, memo);
        }
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

// Exact character value of the irreducible S^lambda at the class of cycle
// type rho, via the Murnaghan-Nakayama rule. Memoized; safe for concurrent
// callers.
inline long sn_character(const Partition& lambda, const Partition& rho) {
    require_input(lambda.n() == rho.n(), "character arguments must partition the same n");
    static std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);
    return detail::mn_recurse(lambda.parts, rho.parts, memo);
}

}  // namespace homspec
