#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/number_theory.hpp"

namespace cyclo {

/// Largest field order for which the full discrete-log table is materialized.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 26;

/// Element of F_{p^n} in polynomial basis, identified by its canonical index
/// sum_i c_i p^i. Index 0 is the zero element, index 1 is the unit.
struct FieldElem {
    std::uint32_t index = 0;

    friend constexpr bool operator==(FieldElem, FieldElem) = default;
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

namespace polymod {

// Dense polynomials over F_p, coefficients low-to-high.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly rem(Poly a, const Poly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = nt::powmod(m.back(), p - 2, p);
    while (a.size() > dm) {
        const std::uint64_t c = nt::mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + p - nt::mulmod(c, m[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + nt::mulmod(a[i], b[j], p)) % p;
        }
    }
    trim(r);
    return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
    return rem(mul(a, b, p), m, p);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly result{1};
    base = rem(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Rabin's test: m of degree n is irreducible over F_p iff x^(p^n) = x mod m
/// and gcd(x^(p^(n/r)) - x, m) = 1 for every prime r dividing n.
inline bool is_irreducible(const Poly& m, std::uint64_t p) {
    const std::size_t n = m.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    auto frobenius_power = [&](std::uint64_t times) {
        Poly x{0, 1};
        for (std::uint64_t t = 0; t < times; ++t) x = powmod(x, p, m, p);
        return x;
    };
    auto minus_x = [&](Poly a) {
        a.resize(std::max<std::size_t>(a.size(), 2), 0);
        a[1] = (a[1] + p - 1) % p;
        trim(a);
        return a;
    };
    if (!minus_x(frobenius_power(n)).empty()) return false;
    for (auto [r, e] : nt::factorize(n)) {
        (void)e;
        Poly g = gcd(m, minus_x(frobenius_power(n / r)), p);
        if (g.size() != 1) return false;
    }
    return true;
}

inline bool has_root(const Poly& m, std::uint64_t p) {
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = m.size(); i-- > 0;) acc = (nt::mulmod(acc, x, p) + m[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

}  // namespace polymod

namespace detail {

struct ConwayEntry {
    std::uint64_t p;
    unsigned n;
    std::vector<std::uint64_t> coeffs;  // low-to-high, monic
};

inline const std::vector<ConwayEntry>& conway_table() {
    static const std::vector<ConwayEntry> table = {
        {3, 2, {2, 2, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 0, 0, 2, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {3, 6, {2, 2, 1, 0, 2, 0, 1}},
        {5, 2, {2, 4, 1}},
        {5, 3, {3, 3, 0, 1}},
        {5, 4, {2, 4, 4, 0, 1}},
        {5, 5, {3, 4, 0, 0, 0, 1}},
        {7, 2, {3, 6, 1}},
        {7, 3, {4, 0, 6, 1}},
        {7, 4, {3, 4, 5, 0, 1}},
        {11, 2, {2, 7, 1}},
        {11, 3, {9, 2, 0, 1}},
        {13, 2, {2, 12, 1}},
        {13, 3, {11, 2, 0, 1}},
        {17, 2, {3, 16, 1}},
        {19, 2, {2, 18, 1}},
        {23, 2, {5, 21, 1}},
    };
    return table;
}

}  // namespace detail

/// Conway polynomial for (p, n) when the built-in table has it.
inline std::optional<std::vector<std::uint64_t>> conway_polynomial(std::uint64_t p, unsigned n) {
    for (const auto& e : detail::conway_table()) {
        if (e.p == p && e.n == n) return e.coeffs;
    }
    return std::nullopt;
}

/// Monic irreducible of degree n whose lower coefficients, read as a base-p
/// number, are smallest.
inline std::vector<std::uint64_t> least_irreducible(std::uint64_t p, unsigned n) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint64_t> m(n + 1, 0);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < n; ++i) {
            m[i] = t % p;
            t /= p;
        }
        m[n] = 1;
        if (m[0] != 0 && polymod::is_irreducible(m, p)) return m;
    }
    throw Error(ErrorCode::NoModulusAvailable, "no irreducible polynomial found");
}

struct FieldOptions {
    std::optional<std::vector<std::uint64_t>> modulus;
    std::optional<std::uint32_t> generator;
    bool allow_modulus_search = true;
};

/// A concrete finite field F_{p^n}, p odd, with a fixed generator of the
/// multiplicative group and complete exp/log tables. Immutable once built.
class Field {
public:
    static Field build(std::uint64_t p, unsigned n, const FieldOptions& opts = {}) {
        if (p % 2 == 0) throw Error(ErrorCode::EvenP, "characteristic must be an odd prime, got " + std::to_string(p));
        if (!nt::is_prime(p)) throw Error(ErrorCode::CompositeP, std::to_string(p) + " is not prime");
        if (n < 1) throw Error(ErrorCode::BadModulus, "extension degree must be >= 1");

        std::uint64_t q = 1;
        for (unsigned i = 0; i < n; ++i) {
            if (q > kMaxFieldOrder / p) throw Error(ErrorCode::FieldTooLarge, "p^n exceeds the table limit");
            q *= p;
        }

        Field f;
        f.p_ = p;
        f.n_ = n;
        f.q_ = q;
        f.pow_.resize(n + 1);
        f.pow_[0] = 1;
        for (unsigned i = 1; i <= n; ++i) f.pow_[i] = f.pow_[i - 1] * static_cast<std::uint32_t>(p);

        if (n == 1) {
            f.modulus_ = {0, 1};
        } else if (opts.modulus) {
            const auto& m = *opts.modulus;
            if (m.size() != n + 1 || m.back() != 1)
                throw Error(ErrorCode::BadModulus, "modulus must be monic of degree " + std::to_string(n));
            if (std::any_of(m.begin(), m.end(), [p](std::uint64_t c) { return c >= p; }))
                throw Error(ErrorCode::BadModulus, "modulus coefficients must lie in [0, p)");
            if (!polymod::is_irreducible(m, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
            f.modulus_ = m;
        } else if (auto c = conway_polynomial(p, n)) {
            f.modulus_ = *c;
        } else if (opts.allow_modulus_search) {
            f.modulus_ = least_irreducible(p, n);
        } else {
            throw Error(ErrorCode::NoModulusAvailable,
                        "no tabulated modulus for p=" + std::to_string(p) + ", n=" + std::to_string(n));
        }

        f.order_factors_ = nt::factorize(q - 1);
        if (opts.generator) {
            FieldElem g{*opts.generator};
            if (*opts.generator >= q || !f.has_full_order(g))
                throw Error(ErrorCode::NotAGenerator,
                            "element " + std::to_string(*opts.generator) + " does not generate the multiplicative group");
            f.generator_ = g;
        } else {
            f.generator_ = f.find_generator();
        }
        f.build_tables();
        return f;
    }

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return n_; }
    std::uint64_t order() const { return q_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    FieldElem generator() const { return generator_; }
    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }

    std::vector<std::uint64_t> coeffs(FieldElem x) const {
        std::vector<std::uint64_t> c(n_);
        std::uint32_t t = x.index;
        for (unsigned i = 0; i < n_; ++i) {
            c[i] = t % p_;
            t /= static_cast<std::uint32_t>(p_);
        }
        return c;
    }

    FieldElem from_coeffs(std::span<const std::uint64_t> c) const {
        std::uint32_t idx = 0;
        for (std::size_t i = std::min<std::size_t>(c.size(), n_); i-- > 0;)
            idx = idx * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(c[i] % p_);
        return {idx};
    }

    FieldElem add(FieldElem a, FieldElem b) const {
        const auto p = static_cast<std::uint32_t>(p_);
        if (n_ == 1) {
            std::uint32_t s = a.index + b.index;
            return {s >= p ? s - p : s};
        }
        std::uint32_t x = a.index, y = b.index, r = 0;
        for (unsigned i = 0; i < n_; ++i) {
            std::uint32_t s = x % p + y % p;
            if (s >= p) s -= p;
            r += s * pow_[i];
            x /= p;
            y /= p;
        }
        return {r};
    }

    FieldElem neg(FieldElem a) const {
        const auto p = static_cast<std::uint32_t>(p_);
        std::uint32_t x = a.index, r = 0;
        for (unsigned i = 0; i < n_; ++i) {
            std::uint32_t d = x % p;
            r += (d == 0 ? 0 : p - d) * pow_[i];
            x /= p;
        }
        return {r};
    }

    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

    /// 1 + x without a table lookup: only the constant digit moves.
    FieldElem add_one(FieldElem x) const {
        const auto p = static_cast<std::uint32_t>(p_);
        return {x.index % p == p - 1 ? x.index - (p - 1) : x.index + 1};
    }

    /// Table-driven product.
    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a.index == 0 || b.index == 0) return {0};
        std::uint64_t e = std::uint64_t{dlog_[a.index]} + dlog_[b.index];
        if (e >= q_ - 1) e -= q_ - 1;
        return {exp_[e]};
    }

    /// Schoolbook product reduced by the modulus; independent of the tables.
    FieldElem mul_poly(FieldElem a, FieldElem b) const {
        if (n_ == 1) return {static_cast<std::uint32_t>(nt::mulmod(a.index, b.index, p_))};
        auto r = polymod::mulmod(coeffs(a), coeffs(b), modulus_, p_);
        return from_coeffs(r);
    }

    FieldElem pow_poly(FieldElem base, std::uint64_t e) const {
        FieldElem result = one();
        while (e > 0) {
            if (e & 1) result = mul_poly(result, base);
            base = mul_poly(base, base);
            e >>= 1;
        }
        return result;
    }

    /// g^e for any integer e.
    FieldElem exp(std::int64_t e) const {
        const auto m = static_cast<std::int64_t>(q_ - 1);
        std::int64_t r = e % m;
        if (r < 0) r += m;
        return {exp_[static_cast<std::size_t>(r)]};
    }

    /// Exponent of x base the generator, in [0, q-1).
    std::uint32_t dlog(FieldElem x) const {
        if (x.index == 0) throw Error(ErrorCode::ZeroElement, "discrete log of zero");
        return dlog_[x.index];
    }

    /// Unchecked variant for hot loops; x must be nonzero.
    std::uint32_t dlog_unchecked(FieldElem x) const { return dlog_[x.index]; }

    /// True iff x^((q-1)/r) != 1 for every prime r dividing q-1.
    bool has_full_order(FieldElem x) const {
        if (x.index == 0) return false;
        for (auto [r, e] : order_factors_) {
            (void)e;
            if (pow_poly(x, (q_ - 1) / r) == one()) return false;
        }
        return true;
    }

    const std::vector<std::pair<std::uint64_t, unsigned>>& order_factors() const { return order_factors_; }

private:
    Field() = default;

    FieldElem find_generator() const {
        for (std::uint32_t idx = 1; idx < q_; ++idx) {
            if (has_full_order(FieldElem{idx})) return {idx};
        }
        throw Error(ErrorCode::InvariantViolation, "multiplicative group has no generator");
    }

    void build_tables() {
        exp_.assign(q_ - 1, 0);
        dlog_.assign(q_, 0);
        FieldElem x = one();
        for (std::uint64_t e = 0; e + 1 < q_; ++e) {
            exp_[e] = x.index;
            dlog_[x.index] = static_cast<std::uint32_t>(e);
            x = mul_poly(x, generator_);
        }
        if (x != one()) throw Error(ErrorCode::InvariantViolation, "generator power cycle did not close");
    }

    std::uint64_t p_ = 0;
    unsigned n_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> pow_;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::pair<std::uint64_t, unsigned>> order_factors_;
    FieldElem generator_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> dlog_;
};

}  // namespace cyclo
