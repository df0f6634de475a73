#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "homspec/errors.hpp"

namespace homspec {

// A permutation of {1,...,n}; images[i-1] is the image of point i.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            require_input(v >= 1 && v <= degree() && !seen[v - 1], "not a bijection on {1..n}");
            seen[v - 1] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    static Permutation transposition(int n, int a, int b) {
        require_input(1 <= a && a <= n && 1 <= b && b <= n, "transposition point out of range");
        Permutation p = identity(n);
        std::swap(p.img_[a - 1], p.img_[b - 1]);
        return p;
    }

    // Cycles given as point lists, e.g. {{1,2,3}} for the 3-cycle 1->2->3->1.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        Permutation p = identity(n);
        for (const auto& c : cycles)
            for (size_t i = 0; i < c.size(); ++i) {
                require_input(c[i] >= 1 && c[i] <= n, "cycle point out of range");
                p.img_[c[i] - 1] = c[(i + 1) % c.size()];
            }
        return Permutation(std::move(p.img_));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int point) const { return img_[point - 1]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const {
        std::vector<int> im(img_.size());
        for (int i = 1; i <= degree(); ++i) im[img_[i - 1] - 1] = i;
        Permutation p;
        p.img_ = std::move(im);
        return p;
    }

    // (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        require_input(a.degree() == b.degree(), "degree mismatch");
        Permutation p;
        p.img_.resize(a.img_.size());
        for (int i = 1; i <= a.degree(); ++i) p.img_[i - 1] = a(b(i));
        return p;
    }

    bool is_identity() const {
        for (int i = 1; i <= degree(); ++i)
            if (img_[i - 1] != i) return false;
        return true;
    }

    // Cycle lengths, weakly decreasing (includes fixed points as 1s).
    std::vector<int> cycle_type() const {
        std::vector<char> seen(img_.size(), 0);
        std::vector<int> type;
        for (int i = 1; i <= degree(); ++i) {
            if (seen[i - 1]) continue;
            int len = 0, j = i;
            while (!seen[j - 1]) {
                seen[j - 1] = 1;
                j = img_[j - 1];
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        return type;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

}  // namespace homspec
