#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/error.hpp"

namespace cyclo {

using BigInt = boost::multiprecision::cpp_int;

/// Nonnegative residue of i modulo m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t i, std::int64_t m) {
    std::int64_t r = i % m;
    return r < 0 ? r + m : r;
}

/// Dense square matrix of arbitrary-precision integers, row-major, zero-indexed.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) : dim_(rows.size()), data_() {
        data_.reserve(dim_ * dim_);
        for (const auto& row : rows) {
            if (row.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix literal is not square");
            for (auto v : row) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t d) {
        IntMatrix m(d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix ones(std::size_t d) {
        IntMatrix m(d);
        for (auto& x : m.data_) x = 1;
        return m;
    }

    /// E_{s,t}: a single 1 at (s, t), indices taken modulo d.
    static IntMatrix unit(std::size_t d, std::int64_t s, std::int64_t t) {
        IntMatrix m(d);
        const auto n = static_cast<std::int64_t>(d);
        m(static_cast<std::size_t>(mod_floor(s, n)), static_cast<std::size_t>(mod_floor(t, n))) = 1;
        return m;
    }

    /// P_v: entry (i, j) is 1 iff i - j = v (mod d).
    static IntMatrix permutation(std::size_t d, std::int64_t v) {
        IntMatrix m(d);
        const auto n = static_cast<std::int64_t>(d);
        for (std::size_t j = 0; j < d; ++j) {
            m(static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(j) + v, n)), j) = 1;
        }
        return m;
    }

    std::size_t dim() const { return dim_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    IntMatrix transpose() const {
        IntMatrix t(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    BigInt trace() const {
        BigInt s = 0;
        for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, i);
        return s;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    bool is_symmetric() const { return *this == transpose(); }

    /// Matrix with row r and column c removed.
    IntMatrix minor(std::size_t r, std::size_t c) const {
        if (dim_ == 0 || r >= dim_ || c >= dim_) throw Error(ErrorCode::DimensionMismatch, "minor index out of range");
        IntMatrix m(dim_ - 1);
        for (std::size_t i = 0, mi = 0; i < dim_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0, mj = 0; j < dim_; ++j) {
                if (j == c) continue;
                m(mi, mj++) = (*this)(i, j);
            }
            ++mi;
        }
        return m;
    }

    IntMatrix& operator+=(const IntMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }

    IntMatrix& operator-=(const IntMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }

    IntMatrix& operator*=(const BigInt& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    /// this += s * o, without forming the scaled temporary.
    IntMatrix& add_scaled(const BigInt& s, const IntMatrix& o) {
        check_same(o);
        if (s == 0) return *this;
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * o.data_[i];
        return *this;
    }

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
    friend IntMatrix operator*(const BigInt& s, IntMatrix a) { return a *= s; }
    friend IntMatrix operator*(IntMatrix a, const BigInt& s) { return a *= s; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        a.check_same(b);
        const std::size_t d = a.dim_;
        IntMatrix r(d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t t = 0; t < d; ++t) {
                const BigInt& x = a(i, t);
                if (x == 0) continue;
                for (std::size_t j = 0; j < d; ++j) r(i, j) += x * b(t, j);
            }
        }
        return r;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.dim_ == b.dim_ && a.data_ == b.data_;
    }

    /// Row-major copy of the entries as int64; throws if any entry does not fit.
    std::vector<std::vector<std::int64_t>> to_rows() const {
        std::vector<std::vector<std::int64_t>> rows(dim_, std::vector<std::int64_t>(dim_));
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) rows[i][j] = (*this)(i, j).convert_to<std::int64_t>();
        return rows;
    }

private:
    void check_same(const IntMatrix& o) const {
        if (dim_ != o.dim_)
            throw Error(ErrorCode::DimensionMismatch,
                        "order " + std::to_string(dim_) + " vs " + std::to_string(o.dim_));
    }

    std::size_t dim_ = 0;
    std::vector<BigInt> data_;
};

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact.
inline BigInt determinant(const IntMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Rank by fraction-free elimination.
inline std::size_t rank(const IntMatrix& m) {
    const std::size_t n = m.dim();
    IntMatrix a = m;
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(piv, j));
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

}  // namespace cyclo
