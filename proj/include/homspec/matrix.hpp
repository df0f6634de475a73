#pragma once

#include <vector>

#include "homspec/errors.hpp"
#include "homspec/rational.hpp"

namespace homspec {

inline constexpr int kDenseOperatorCap = 5040;

// Dense exact-rational matrix, row major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        require_input(static_cast<int>(v.size()) == cols_, "vector length mismatch");
        std::vector<Rat> out(rows_, Rat(0));
        for (int i = 0; i < rows_; ++i) {
            Rat s = 0;
            for (int j = 0; j < cols_; ++j) {
                const Rat& x = (*this)(i, j);
                if (x != 0) s += x * v[j];
            }
            out[i] = s;
        }
        return out;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        require_input(a.cols_ == b.rows_, "matrix shape mismatch");
        RatMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rat& x = a(i, k);
                if (x == 0) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Rat& y = b(k, j);
                    if (y != 0) c(i, j) += x * y;
                }
            }
        return c;
    }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        require_input(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch");
        RatMatrix c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
        return c;
    }

    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        require_input(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch");
        RatMatrix c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
        return c;
    }

    friend RatMatrix operator*(const Rat& s, const RatMatrix& a) {
        RatMatrix c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = s * a.a_[i];
        return c;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Fraction-free rank of an integer matrix: cross-multiplication elimination
// with per-row gcd stripping, so no fractions ever appear and growth stays
// bounded by minor sizes.
inline int rank_fraction_free(std::vector<std::vector<Int>> m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    auto strip_gcd = [&](std::vector<Int>& row) {
        Int g = 0;
        for (const Int& x : row) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) return;
        }
        if (g > 1)
            for (Int& x : row) x /= g;
    };
    for (auto& row : m) strip_gcd(row);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const Int p = m[rank][col];
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const Int q = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] = p * m[r][c] - q * m[rank][c];
            strip_gcd(m[r]);
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<Int>> to_integer_rows(const RatMatrix& m) {
    std::vector<std::vector<Int>> out(m.rows(), std::vector<Int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        Int lcm = 1;
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& q = m(i, j);
            out[i][j] = q.get_num() * (lcm / q.get_den());
        }
    }
    return out;
}

inline int rank(const RatMatrix& m) { return rank_fraction_free(to_integer_rows(m)); }

inline int kernel_dimension(const RatMatrix& m) { return m.cols() - rank(m); }

}  // namespace homspec
