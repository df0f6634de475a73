#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "homspec/errors.hpp"
#include "homspec/rational.hpp"

namespace homspec {

// Ordered tuple of positive parts summing to n.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        require_input(!parts.empty(), "composition must have at least one part");
        for (int a : parts) require_input(a >= 1, "composition parts must be positive");
    }

    int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts == b.parts; }
};

// Weakly decreasing positive parts; empty partition allowed (n = 0).
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            require_input(parts[i] >= 1, "partition parts must be positive");
            require_input(i == 0 || parts[i - 1] >= parts[i], "partition parts must be weakly decreasing");
        }
    }

    int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i < length() ? parts[i] : 0; }  // 0-based, zero-padded

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

inline Partition sorted_partition(const Composition& a) {
    std::vector<int> p = a.parts;
    std::sort(p.rbegin(), p.rend());
    return Partition(std::move(p));
}

// All partitions of n, lexicographically decreasing from (n) down to (1^n).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Conjugacy class size of the cycle type rho inside S_n.
inline Int class_size(const Partition& rho) {
    int n = rho.n();
    Int den = 1;
    std::vector<int> freq(n + 1, 0);
    for (int p : rho.parts) ++freq[p];
    for (int j = 1; j <= n; ++j) {
        for (int l = 1; l <= freq[j]; ++l) den *= Int(j) * l;
    }
    return factorial(n) / den;
}

// Dimension of the irreducible S^lambda by the hook length formula.
inline Int hook_dimension(const Partition& lambda) {
    int n = lambda.n();
    Int hooks = 1;
    int rows = lambda.length();
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < lambda.parts[i]; ++j) {
            int arm = lambda.parts[i] - j - 1;
            int leg = 0;
            for (int k = i + 1; k < rows && lambda.parts[k] > j; ++k) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(n) / hooks;
}

// lambda dominates the composition mu: prefix sums of lambda bound the sums of
// the k largest parts of mu, for every k.
inline bool dominates(const Partition& lambda, const Composition& mu) {
    if (lambda.n() != mu.n()) return false;
    std::vector<int> sorted = mu.parts;
    std::sort(sorted.rbegin(), sorted.rend());
    long lam = 0, m = 0;
    size_t len = std::max(lambda.parts.size(), sorted.size());
    for (size_t k = 0; k < len; ++k) {
        lam += k < lambda.parts.size() ? lambda.parts[k] : 0;
        m += k < sorted.size() ? sorted[k] : 0;
        if (lam < m) return false;
    }
    return true;
}

inline bool dominates(const Partition& lambda, const Partition& mu) {
    return dominates(lambda, Composition(mu.parts));
}

// lambda/mu is a horizontal strip: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
inline bool interlaces(const Partition& lambda, const Partition& mu) {
    if (lambda.n() < mu.n()) return false;
    for (int i = 0; i < lambda.length(); ++i) {
        if (lambda.part(i) < mu.part(i)) return false;
        if (mu.part(i) < lambda.part(i + 1)) return false;
    }
    return mu.n() <= lambda.n();
}

// Sum of cell contents j - i over the Young diagram of lambda.
inline Int content_sum(const Partition& lambda) {
    Int s = 0;
    for (int i = 0; i < lambda.length(); ++i)
        s += binomial(lambda.parts[i], 2) - Int(i) * lambda.parts[i];
    return s;
}

}  // namespace homspec
