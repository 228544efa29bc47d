#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/matrix.hpp"

namespace cyclo {

using BigRational = boost::multiprecision::cpp_rational;

/// Integer polynomial, coefficients low-to-high. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<std::int64_t> coeffs) {
        for (auto v : coeffs) c_.emplace_back(v);
        normalize();
    }

    /// x - r
    static IntPoly linear(const BigInt& r) { return IntPoly(std::vector<BigInt>{-r, BigInt(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(r));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return IntPoly(std::move(r));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    BigInt operator()(const BigInt& x) const {
        BigInt acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Human-readable form, highest degree first: "x^4 - 8x^3 - 14".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const BigInt& c = c_[i];
            if (c == 0) continue;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (i == 0 || mag != 1) os << mag;
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// det(xI - m) by Faddeev-LeVerrier; the division by k is exact over Z.
inline IntPoly char_poly(const IntMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    IntMatrix mk(n);  // M_0 = 0
    const IntMatrix id = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        mk.add_scaled(c[n - k + 1], id);
        BigInt tr = (m * mk).trace();
        c[n - k] = -tr / static_cast<std::int64_t>(k);
    }
    return IntPoly(std::move(c));
}

/// Horner evaluation with I substituted for x^0.
inline IntMatrix eval_at_matrix(const IntPoly& poly, const IntMatrix& m) {
    const std::size_t n = m.dim();
    IntMatrix acc(n);
    const IntMatrix id = IntMatrix::identity(n);
    const auto& c = poly.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * m;
        acc.add_scaled(c[i], id);
    }
    return acc;
}

/// A real root located to double precision together with its multiplicity.
struct RealRoot {
    double value = 0.0;
    unsigned multiplicity = 1;

    friend bool operator==(const RealRoot&, const RealRoot&) = default;
};

namespace detail {

using RatPoly = std::vector<BigRational>;

inline void trim(RatPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline RatPoly derivative(const RatPoly& a) {
    RatPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<std::int64_t>(i));
    trim(d);
    return d;
}

inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    RatPoly quo;
    if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, BigRational(0));
    while (!a.empty() && a.size() >= b.size()) {
        BigRational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        quo[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    trim(quo);
    return {quo, a};
}

inline RatPoly monic(RatPoly a) {
    trim(a);
    if (a.empty()) return a;
    BigRational lead = a.back();
    for (auto& x : a) x /= lead;
    return a;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline RatPoly sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), BigRational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline BigRational eval(const RatPoly& a, const BigRational& x) {
    BigRational acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

inline int sign(const BigRational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// Yun's square-free decomposition: f = prod a_i^i.
inline std::vector<std::pair<RatPoly, unsigned>> square_free(const RatPoly& f) {
    std::vector<std::pair<RatPoly, unsigned>> out;
    RatPoly fp = derivative(f);
    RatPoly a = gcd(f, fp);
    RatPoly b = divmod(f, a).first;
    RatPoly c = divmod(fp, a).first;
    RatPoly d = sub(c, derivative(b));
    unsigned i = 1;
    while (b.size() > 1) {
        a = gcd(b, d);
        if (a.size() > 1) out.emplace_back(a, i);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = sub(c, derivative(b));
        ++i;
    }
    return out;
}

struct Sturm {
    std::vector<RatPoly> chain;

    explicit Sturm(const RatPoly& f) {
        chain.push_back(f);
        chain.push_back(derivative(f));
        while (chain.back().size() > 1) {
            auto r = divmod(chain[chain.size() - 2], chain.back()).second;
            if (r.empty()) break;
            for (auto& x : r) x = -x;
            chain.push_back(std::move(r));
        }
    }

    int variations(const BigRational& x) const {
        int v = 0, last = 0;
        for (const auto& p : chain) {
            int s = sign(eval(p, x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    }
};

inline void isolate(const Sturm& st, BigRational lo, BigRational hi, int vlo, int vhi,
                    std::vector<std::pair<BigRational, BigRational>>& out) {
    const int count = vlo - vhi;
    if (count == 0) return;
    if (count == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    BigRational mid = (lo + hi) / 2;
    int vmid = st.variations(mid);
    isolate(st, lo, mid, vlo, vmid, out);
    isolate(st, mid, hi, vmid, vhi, out);
}

}  // namespace detail

/// Real roots of an integer polynomial with multiplicities, in increasing
/// order. Roots are isolated by Sturm sequences on the square-free factors and
/// refined by exact bisection to a relative width of 2^-50.
inline std::vector<RealRoot> real_roots(const IntPoly& poly) {
    std::vector<RealRoot> roots;
    if (poly.degree() < 1) return roots;
    detail::RatPoly f;
    for (const auto& c : poly.coeffs()) f.emplace_back(c);

    // Cauchy bound on the magnitude of every root.
    BigRational bound = 0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        BigRational r = abs(f[i] / f.back());
        if (r > bound) bound = r;
    }
    bound += 1;

    const BigRational width_tol(static_cast<std::int64_t>(1), static_cast<std::int64_t>(1) << 50);
    for (const auto& [factor, mult] : detail::square_free(f)) {
        detail::Sturm st(factor);
        // Sturm counts roots in (lo, hi]; nudge the lower end below -bound.
        BigRational lo = -bound - 1, hi = bound;
        std::vector<std::pair<BigRational, BigRational>> brackets;
        detail::isolate(st, lo, hi, st.variations(lo), st.variations(hi), brackets);
        for (auto [a, b] : brackets) {
            // root in (a, b]; factor is square-free so the sign changes across it.
            if (detail::sign(detail::eval(factor, b)) == 0) {
                roots.push_back({b.convert_to<double>(), mult});
                continue;
            }
            int sb = detail::sign(detail::eval(factor, b));
            while (b - a > width_tol * (abs(b) + 1)) {
                BigRational mid = (a + b) / 2;
                int sm = detail::sign(detail::eval(factor, mid));
                if (sm == 0) {
                    a = b = mid;
                    break;
                }
                if (sm == sb)
                    b = mid;
                else
                    a = mid;
            }
            // Report an integer root exactly: it is the only integer candidate in (a, b].
            const BigInt n = numerator(b) / denominator(b) - (b < 0 && denominator(b) != 1 ? 1 : 0);
            if (BigRational(n) > a && detail::sign(detail::eval(factor, BigRational(n))) == 0) a = b = BigRational(n);
            roots.push_back({BigRational((a + b) / 2).convert_to<double>(), mult});
        }
    }
    std::sort(roots.begin(), roots.end(), [](const RealRoot& x, const RealRoot& y) { return x.value < y.value; });
    return roots;
}

}  // namespace cyclo
