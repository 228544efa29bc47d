#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/cyclotomy.hpp"
#include "cyclo/error.hpp"
#include "cyclo/matrix.hpp"
#include "cyclo/number_theory.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/verify.hpp"

namespace cyclo {

inline constexpr std::int64_t kMaxBruteForceOrder = 1'000'000;
inline constexpr std::int64_t kMaxPairEnumerationOrder = 2'000;
inline constexpr double kSpectralTolerance = 1e-9;

/// Outcome of one difference-set detector. `criterion` is the raw condition;
/// `is_diffset` additionally requires a positive lambda, which excludes the
/// degenerate K = {1}.
struct DetectorResult {
    bool criterion = false;
    bool is_diffset = false;
    std::optional<std::int64_t> lambda;
    VerifySuiteResult checks;
};

enum class BruteForceMode { ClassCount, PairEnumeration };

namespace detail {

inline void require_ell_two(const Cyclotomy& c) {
    if (c.ell() == 1) throw Error(ErrorCode::EllOne, "difference-set questions need l >= 2");
}

inline std::int64_t column_square_sum(const Cyclotomy& c, std::int64_t j) {
    std::int64_t s = 0;
    for (std::int64_t i = 0; i < c.ell(); ++i) s += c(i, j) * c(i, j);
    return s;
}

// Elements of K as generator powers, computed without the exp/log tables.
inline std::vector<FieldElem> subgroup_elements(const Field& f, std::int64_t ell) {
    std::vector<FieldElem> out;
    const FieldElem step = f.pow_poly(f.generator(), static_cast<std::uint64_t>(ell));
    FieldElem x = f.one();
    for (std::uint64_t t = 0; t < (f.order() - 1) / static_cast<std::uint64_t>(ell); ++t) {
        out.push_back(x);
        x = f.mul_poly(x, step);
    }
    return out;
}

// Uniform count of representations z = x - y over the nonzero z, if any.
inline std::optional<std::int64_t> uniform_count(const std::vector<std::int64_t>& counts) {
    if (counts.empty()) return std::nullopt;
    for (auto x : counts)
        if (x != counts.front()) return std::nullopt;
    return counts.front();
}

// Representation counts for one representative z = g^i of every class,
// over the set K (with_zero = false) or K u {0}.
inline std::vector<std::int64_t> class_representation_counts(const Cyclotomy& c, bool with_zero) {
    const Field& f = c.field();
    auto in_set = [&](FieldElem x) {
        if (x.index == 0) return with_zero;
        return static_cast<std::int64_t>(f.dlog_unchecked(x)) % c.ell() == 0;
    };
    std::vector<FieldElem> set;
    for (std::int64_t e = 0; e < c.q() - 1; e += c.ell()) set.push_back(f.exp(e));
    if (with_zero) set.push_back(f.zero());
    std::vector<std::int64_t> counts;
    for (std::int64_t i = 0; i < c.ell(); ++i) {
        const FieldElem z = f.exp(i);
        std::int64_t n = 0;
        for (FieldElem y : set)
            if (in_set(f.add(y, z))) ++n;
        counts.push_back(n);
    }
    return counts;
}

// Counts for every nonzero z by enumerating all ordered pairs of the set.
inline std::vector<std::int64_t> pair_representation_counts(const Cyclotomy& c, bool with_zero) {
    const Field& f = c.field();
    std::vector<FieldElem> set = subgroup_elements(f, c.ell());
    if (with_zero) set.push_back(f.zero());
    std::vector<std::int64_t> counts(static_cast<std::size_t>(c.q()), 0);
    for (FieldElem x : set)
        for (FieldElem y : set) ++counts[f.sub(x, y).index];
    counts.erase(counts.begin());
    return counts;
}

inline DetectorResult bruteforce(const Cyclotomy& c, BruteForceMode mode, bool with_zero) {
    require_ell_two(c);
    if (c.q() > kMaxBruteForceOrder)
        throw Error(ErrorCode::ContextTooLarge, "brute-force counting limited to q <= 1000000");
    if (mode == BruteForceMode::PairEnumeration && c.q() > kMaxPairEnumerationOrder)
        throw Error(ErrorCode::ContextTooLarge, "pair enumeration limited to q <= 2000");
    const auto counts = mode == BruteForceMode::ClassCount ? class_representation_counts(c, with_zero)
                                                             : pair_representation_counts(c, with_zero);
    DetectorResult r;
    const auto common = uniform_count(counts);
    r.criterion = common.has_value();
    r.is_diffset = r.criterion && *common >= 1;
    if (r.criterion) r.lambda = *common;
    return r;
}

}  // namespace detail

/// Counts the representations z = x - y with x, y in K for every class of
/// nonzero z (class mode) or for every nonzero z (pair mode, q <= 2000).
inline DetectorResult is_diffset_bruteforce(const Cyclotomy& c, BruteForceMode mode = BruteForceMode::ClassCount) {
    return detail::bruteforce(c, mode, false);
}

/// Column 0 of A constant. On a hit, k odd, l even and (0, 0) = (k - 1)/l.
inline DetectorResult is_diffset_lehmer(const Cyclotomy& c) {
    detail::require_ell_two(c);
    DetectorResult r;
    r.criterion = true;
    for (std::int64_t i = 1; i < c.ell(); ++i)
        if (c(i, 0) != c(0, 0)) r.criterion = false;
    r.is_diffset = r.criterion && c(0, 0) >= 1;
    if (r.criterion) r.lambda = c(0, 0);
    if (r.is_diffset) {
        auto& chk = r.checks.add("column_zero_consequences", Json{{"lambda", c(0, 0)}});
        if (c.k() % 2 == 0) fail(chk, Json{{"reason", "k even"}});
        if (c.ell() % 2 != 0) fail(chk, Json{{"reason", "l odd"}});
        if (c(0, 0) * c.ell() != c.k() - 1) fail(chk, Json{{"reason", "(0,0) != (k-1)/l"}});
    }
    return r;
}

/// k odd and some column j with gcd(j, l) = 1 has the same square sum as
/// column q'. Also checks the column square-sum bounds.
inline DetectorResult is_diffset_sumsq(const Cyclotomy& c) {
    detail::require_ell_two(c);
    DetectorResult r;
    const std::int64_t l = c.ell(), k = c.k();

    // l * sum_i (i, 0)^2 >= (k - 1)^2, with equality iff column 0 is constant.
    const std::int64_t s0 = detail::column_square_sum(c, 0);
    bool col0_const = true;
    for (std::int64_t i = 1; i < l; ++i) col0_const = col0_const && c(i, 0) == c(0, 0);
    auto& lower = r.checks.add("column_zero_lower_bound", Json{{"sum", s0}, {"bound_numerator", (k - 1) * (k - 1)}, {"ell", l}});
    if (l * s0 < (k - 1) * (k - 1) || ((l * s0 == (k - 1) * (k - 1)) != col0_const))
        fail(lower, Json{{"sum", s0}, {"column_zero_constant", col0_const}});

    if (k % 2 == 1) {
        const std::int64_t sq = detail::column_square_sum(c, c.qprime());
        auto& upper = r.checks.add("column_square_upper_bound", Json{{"qprime_sum", sq}});
        for (std::int64_t j = 1; j < l; ++j) {
            const std::int64_t sj = detail::column_square_sum(c, j);
            if (sj > sq) fail(upper, Json{{"j", j}, {"sum", sj}, {"qprime_sum", sq}});
            if (std::gcd(j, l) == 1 && sj == sq && !r.criterion) {
                r.criterion = true;
                upper.params["witness_column"] = j;
            }
        }
    }
    r.is_diffset = r.criterion && k > 1;
    if (r.criterion && (k - 1) % l == 0) r.lambda = (k - 1) / l;
    return r;
}

/// k odd and diag(A^T A) = (a, b, ..., b).
inline DetectorResult is_diffset_gram(const Cyclotomy& c) {
    detail::require_ell_two(c);
    DetectorResult r;
    const IntMatrix a = c.matrix();
    const IntMatrix g = a.transpose() * a;
    bool shape = true;
    for (std::size_t j = 2; j < g.dim(); ++j) shape = shape && g(j, j) == g(1, 1);
    r.criterion = c.k() % 2 == 1 && shape;
    r.is_diffset = r.criterion && c.k() > 1;
    if (r.criterion && (c.k() - 1) % c.ell() == 0) r.lambda = (c.k() - 1) / c.ell();
    return r;
}

namespace detail {

inline std::int64_t require_diffset(const Cyclotomy& c) {
    require_ell_two(c);
    const auto v = is_diffset_lehmer(c);
    if (!v.is_diffset) throw Error(ErrorCode::NotADifferenceSet, "K is not a difference set for this (q, l)");
    return *v.lambda;
}

inline BigInt big_pow(BigInt base, std::int64_t e) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= base;
    return r;
}

inline IntPoly poly_pow(const IntPoly& p, std::int64_t e) {
    IntPoly r{1};
    for (std::int64_t i = 0; i < e; ++i) r = r * p;
    return r;
}

}  // namespace detail

/// A^T A = lambda k J + (k - lambda) I - k E_00, B^T B = (k - lambda)(lambda J + I),
/// sum_{j >= 1} ((0, j) - lambda)^2 = k - 2 lambda, and row q' constant lambda.
inline VerifySuiteResult verify_gram_identities(const Cyclotomy& c) {
    const std::int64_t lam = detail::require_diffset(c);
    VerifySuiteResult r;
    const auto dm = c.derived();
    const auto d = static_cast<std::size_t>(c.ell());
    const BigInt k = c.k(), l = lam;

    auto& ata = r.add("gram_closed_form", Json{{"lambda", lam}});
    IntMatrix want = IntMatrix::ones(d) * BigInt(l * k);
    want.add_scaled(k - l, IntMatrix::identity(d));
    want.add_scaled(-k, IntMatrix::unit(d, 0, 0));
    expect_equal(ata, dm.a.transpose() * dm.a, want);

    auto& btb = r.add("minor_gram_closed_form", Json{{"lambda", lam}});
    IntMatrix wantb = IntMatrix::ones(d - 1) * l + IntMatrix::identity(d - 1);
    wantb *= (k - l);
    expect_equal(btb, dm.b.transpose() * dm.b, wantb);

    auto& row0 = r.add("row_zero_deviation", Json{{"expected", c.k() - 2 * lam}});
    std::int64_t s = 0;
    for (std::int64_t j = 1; j < c.ell(); ++j) s += (c(0, j) - lam) * (c(0, j) - lam);
    if (s != c.k() - 2 * lam) fail(row0, Json{{"sum", s}});

    auto& rowq = r.add("row_qprime_constant", Json{{"lambda", lam}});
    for (std::int64_t j = 0; j < c.ell(); ++j)
        if (c(c.qprime(), j) != lam) fail(rowq, Json{{"j", j}, {"value", c(c.qprime(), j)}});
    return r;
}

/// Characteristic polynomials of M and S with their real roots.
struct SpectralData {
    IntPoly char_m;
    IntPoly char_s;
    std::vector<RealRoot> roots_m;
    std::vector<RealRoot> roots_s;
    double tolerance = kSpectralTolerance;

    friend bool operator==(const SpectralData&, const SpectralData&) = default;
};

inline SpectralData spectral_data(const Cyclotomy& c) {
    const auto dm = c.derived();
    SpectralData out;
    out.char_m = char_poly(dm.m);
    out.char_s = char_poly(dm.s);
    out.roots_m = real_roots(out.char_m);
    out.roots_s = real_roots(out.char_s);
    return out;
}

/// Annihilating polynomials of M and S, their traces, the rank-one residual
/// S^2 - (k - lambda) I = lambda (k - lambda) J, and both characteristic
/// polynomials in closed form.
inline VerifySuiteResult verify_spectral(const Cyclotomy& c) {
    const std::int64_t lam = detail::require_diffset(c);
    VerifySuiteResult r;
    const auto dm = c.derived();
    const std::int64_t k = c.k(), n = k - lam, half = c.ell() / 2;
    const IntPoly quad{lam, -k, 1};     // x^2 - kx + lambda
    const IntPoly split{-n, 0, 1};      // x^2 - (k - lambda)
    const IntPoly lin = IntPoly::linear(n);

    auto& am = r.add("m_annihilator", Json{{"polynomial", (quad * split).to_string()}});
    const IntMatrix rm = eval_at_matrix(quad * split, dm.m);
    if (!rm.is_zero()) fail(am, Json{{"residual", rm}});

    auto& as = r.add("s_annihilator", Json{{"polynomial", (lin * split).to_string()}});
    const IntMatrix rs = eval_at_matrix(lin * split, dm.s);
    if (!rs.is_zero()) fail(as, Json{{"residual", rs}});

    auto& ts = r.add("s_trace", Json{{"expected", n}});
    expect_equal(ts, dm.s.trace(), BigInt(n));
    auto& tm = r.add("m_trace", Json{{"expected", k}});
    expect_equal(tm, dm.m.trace(), BigInt(k));

    const auto d1 = dm.s.dim();
    const IntMatrix resid = dm.s * dm.s - IntMatrix::identity(d1) * BigInt(n);
    auto& rj = r.add("s_square_residual");
    expect_equal(rj, resid, IntMatrix::ones(d1) * BigInt(BigInt(lam) * n));
    auto& rk = r.add("s_square_residual_rank", Json{{"expected", lam > 0 ? 1 : 0}});
    const auto rnk = rank(resid);
    if (rnk != (lam > 0 ? 1u : 0u)) fail(rk, Json{{"rank", rnk}});

    auto& cm = r.add("m_characteristic_polynomial");
    const IntPoly want_m = quad * detail::poly_pow(split, half - 1);
    const IntPoly got_m = char_poly(dm.m);
    if (!(got_m == want_m)) fail(cm, Json{{"computed", got_m.to_string()}, {"expected", want_m.to_string()}});

    auto& cs = r.add("s_characteristic_polynomial");
    const IntPoly want_s = lin * detail::poly_pow(split, half - 1);
    const IntPoly got_s = char_poly(dm.s);
    if (!(got_s == want_s)) fail(cs, Json{{"computed", got_s.to_string()}, {"expected", want_s.to_string()}});
    return r;
}

struct DeterminantValues {
    BigInt predicted;
    BigInt computed;

    friend bool operator==(const DeterminantValues&, const DeterminantValues&) = default;
};

struct DeterminantCertificate {
    DeterminantValues a;
    DeterminantValues b;
    VerifySuiteResult checks;

    friend bool operator==(const DeterminantCertificate&, const DeterminantCertificate&) = default;
};

/// det A = -lambda (k - lambda)^(l/2 - 1), det B = (-1)^(l/2 - 1) (k - lambda)^(l/2).
inline DeterminantCertificate verify_determinants(const Cyclotomy& c) {
    const std::int64_t lam = detail::require_diffset(c);
    const auto dm = c.derived();
    const std::int64_t half = c.ell() / 2;
    const BigInt n = c.k() - lam;
    DeterminantCertificate out;
    out.a = {-BigInt(lam) * detail::big_pow(n, half - 1), determinant(dm.a)};
    out.b = {((half - 1) % 2 == 0 ? 1 : -1) * detail::big_pow(n, half), determinant(dm.b)};
    auto& ca = out.checks.add("det_a", Json{{"predicted", out.a.predicted.str()}});
    expect_equal(ca, out.a.computed, out.a.predicted);
    auto& cb = out.checks.add("det_b", Json{{"predicted", out.b.predicted.str()}});
    expect_equal(cb, out.b.computed, out.b.predicted);
    return out;
}

/// Congruence consequences for a hit, each evaluated only where it applies.
inline VerifySuiteResult verify_congruences(const Cyclotomy& c) {
    const std::int64_t lam = detail::require_diffset(c);
    VerifySuiteResult r;
    const std::int64_t q = c.q(), k = c.k(), l = c.ell();
    const Field& f = c.field();
    const bool two_is_square = f.dlog(f.add_one(f.one())) % 2 == 0;
    const Json base{{"q", q}, {"k", k}, {"ell", l}, {"lambda", lam}};

    if (lam % 2 == 1) {
        auto& chk = r.add("odd_lambda_classes", base);
        const bool case_i = l % 8 == 0 && q % 8 == 1 && k % 8 == 1;
        const bool case_ii = l % 8 == 2 && q % 8 == 7 && k % 8 == (2 * lam + 1) % 8;
        if (!case_i && !case_ii) fail(chk, base);
    }

    if (l % 4 == 2) {
        auto& par = r.add("lambda_parity", base);
        if (lam % 2 != ((k - 1) / 2) % 2) fail(par, base);
        if (l % 8 == 2) {
            auto& c1 = r.add("lambda_parity_two_mod_eight", Json{{"two_is_square", two_is_square}, {"q_mod_8", q % 8}});
            const bool odd = lam % 2 == 1;
            if (odd != (q % 8 == 7) || (!odd && q % 8 != 3) || odd != two_is_square)
                fail(c1, Json{{"lambda", lam}, {"q_mod_8", q % 8}, {"two_is_square", two_is_square}});
        } else {
            auto& c2 = r.add("lambda_parity_six_mod_eight", Json{{"two_is_square", two_is_square}, {"q_mod_8", q % 8}});
            bool odd_even_column = false;
            for (std::int64_t j = 2; j < l; j += 2) odd_even_column = odd_even_column || c(0, j) % 2 == 1;
            if (lam % 2 != 0 || k % 4 != 1 || q % 8 != 7 || !two_is_square || !odd_even_column)
                fail(c2, Json{{"lambda", lam}, {"k_mod_4", k % 4}, {"q_mod_8", q % 8}, {"two_is_square", two_is_square},
                              {"odd_entry_at_even_column", odd_even_column}});
        }
    }

    if (lam % 2 == 1 && l % 8 == 0) {
        auto& chk = r.add("odd_lambda_mod_four", base);
        if (lam % 4 != 1) fail(chk, base);
    }

    if (lam == 1) {
        auto& chk = r.add("unit_lambda_row_zero");
        for (std::int64_t j = 1; j < l; ++j)
            if (c(0, j) != 0 && c(0, j) != 2) fail(chk, Json{{"j", j}, {"value", c(0, j)}});
    }
    return r;
}

/// Smallest even e with lambda = 1 + l + ... + l^e, if one exists.
inline std::optional<unsigned> geometric_exponent(std::int64_t lambda, std::int64_t ell) {
    std::int64_t sum = 1, term = 1;
    for (unsigned e = 0; sum <= lambda; ++e) {
        if (sum == lambda) return e % 2 == 0 ? std::optional<unsigned>(e) : std::nullopt;
        if (term > lambda / ell) break;
        term *= ell;
        sum += term;
    }
    return std::nullopt;
}

struct SchoenbergData {
    std::int64_t q_minus_k = 0;
    bool is_square = false;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> odd_squares;
    std::optional<unsigned> geometric_exponent;
    VerifySuiteResult checks;

    friend bool operator==(const SchoenbergData&, const SchoenbergData&) = default;
};

/// When q - k = l (k - lambda) is a square: 4 | l or l is a sum of two odd
/// squares. When lambda = 1 + l + ... + l^e with e even (lambda = 1 is e = 0):
/// 8 | l or l is a sum of two odd squares.
inline SchoenbergData check_schoenberg_condition(const Cyclotomy& c) {
    const std::int64_t lam = detail::require_diffset(c);
    SchoenbergData out;
    const std::int64_t l = c.ell();
    out.q_minus_k = c.q() - c.k();
    out.is_square = nt::is_perfect_square(static_cast<std::uint64_t>(out.q_minus_k));
    out.odd_squares = nt::odd_square_sum(static_cast<std::uint64_t>(l));
    out.geometric_exponent = geometric_exponent(lam, l);

    auto& sq = out.checks.add("square_excess", Json{{"q_minus_k", out.q_minus_k}, {"is_square", out.is_square}});
    if (out.q_minus_k != l * (c.k() - lam)) fail(sq, Json{{"reason", "q - k != l (k - lambda)"}});
    if (out.is_square && !(l % 4 == 0 || out.odd_squares)) fail(sq, Json{{"ell", l}});

    if (out.geometric_exponent) {
        auto& geo = out.checks.add("geometric_lambda", Json{{"exponent", *out.geometric_exponent}});
        if (!out.is_square) fail(geo, Json{{"reason", "l (k - lambda) should be l^(e+2)"}});
        if (!(l % 8 == 0 || out.odd_squares)) fail(geo, Json{{"ell", l}});
    }
    if (lam == 1) {
        auto& unit = out.checks.add("unit_lambda_ell");
        if (!(l % 8 == 0 || out.odd_squares)) fail(unit, Json{{"ell", l}});
    }
    return out;
}

struct DetectorVerdicts {
    std::optional<bool> bruteforce;  // absent when q exceeds the brute-force limit
    bool lehmer = false;
    bool sumsq = false;
    bool gram = false;

    bool agree() const { return (!bruteforce || *bruteforce == lehmer) && lehmer == sumsq && sumsq == gram; }

    friend bool operator==(const DetectorVerdicts&, const DetectorVerdicts&) = default;
};

struct DiffSetReport {
    std::int64_t q = 0, ell = 0, k = 0, qprime = 0;
    std::optional<std::int64_t> lambda;  // (k - 1)/l when integral
    DetectorVerdicts verdicts;
    bool is_diffset = false;
    VerifySuiteResult detector_checks;
    VerifySuiteResult certificates;
    std::optional<DeterminantCertificate> determinants;
    std::optional<SpectralData> spectrum;
    std::optional<SchoenbergData> schoenberg;

    bool all_pass() const { return verdicts.agree() && detector_checks.all_pass() && certificates.all_pass(); }

    friend bool operator==(const DiffSetReport&, const DiffSetReport&) = default;
};

/// Runs all four detectors and, on a hit, the full certificate battery.
inline DiffSetReport analyze_diffset(const Cyclotomy& c) {
    detail::require_ell_two(c);
    DiffSetReport rep;
    rep.q = c.q();
    rep.ell = c.ell();
    rep.k = c.k();
    rep.qprime = c.qprime();
    if ((c.k() - 1) % c.ell() == 0) rep.lambda = (c.k() - 1) / c.ell();

    if (c.q() <= kMaxBruteForceOrder) rep.verdicts.bruteforce = is_diffset_bruteforce(c).is_diffset;
    const auto lehmer = is_diffset_lehmer(c);
    const auto sumsq = is_diffset_sumsq(c);
    const auto gram = is_diffset_gram(c);
    rep.verdicts.lehmer = lehmer.is_diffset;
    rep.verdicts.sumsq = sumsq.is_diffset;
    rep.verdicts.gram = gram.is_diffset;
    rep.detector_checks.append(lehmer.checks);
    rep.detector_checks.append(sumsq.checks);
    rep.detector_checks.append(gram.checks);

    rep.is_diffset = rep.verdicts.lehmer;
    if (rep.is_diffset) {
        rep.certificates.append(verify_gram_identities(c));
        rep.certificates.append(verify_spectral(c));
        rep.determinants = verify_determinants(c);
        rep.certificates.append(rep.determinants->checks);
        rep.certificates.append(verify_congruences(c));
        rep.schoenberg = check_schoenberg_condition(c);
        rep.certificates.append(rep.schoenberg->checks);
        rep.spectrum = spectral_data(c);
    }
    return rep;
}

/// Cyclotomic criterion for K u {0}: k odd, l even and
/// (0, 0) + 1 = (l/2, 0) + 1 = (i, 0) for every other i.
inline bool modified_criterion(const Cyclotomy& c) {
    detail::require_ell_two(c);
    if (c.k() % 2 == 0 || c.ell() % 2 != 0) return false;
    const std::int64_t h = c.ell() / 2;
    if (c(0, 0) != c(h, 0)) return false;
    for (std::int64_t i = 1; i < c.ell(); ++i)
        if (i != h && c(i, 0) != c(0, 0) + 1) return false;
    return true;
}

struct ModifiedDiffSetReport {
    std::int64_t q = 0, ell = 0, k0 = 0;
    std::optional<std::int64_t> lambda0;  // (k + 1)/l when integral
    bool bruteforce = false;
    bool lehmer_modified = false;
    VerifySuiteResult certificates;

    bool agree() const { return bruteforce == lehmer_modified; }
    bool all_pass() const { return agree() && certificates.all_pass(); }

    friend bool operator==(const ModifiedDiffSetReport&, const ModifiedDiffSetReport&) = default;
};

/// Whether K u {0} is a difference set, by counting and by the cyclotomic
/// criterion; on a hit, the Gram identities for A + I and its (q', 0)-minor.
inline ModifiedDiffSetReport modified_diffset(const Cyclotomy& c, BruteForceMode mode = BruteForceMode::ClassCount) {
    detail::require_ell_two(c);
    ModifiedDiffSetReport rep;
    rep.q = c.q();
    rep.ell = c.ell();
    rep.k0 = c.k() + 1;
    if (rep.k0 % c.ell() == 0) rep.lambda0 = rep.k0 / c.ell();
    rep.bruteforce = detail::bruteforce(c, mode, true).is_diffset;
    rep.lehmer_modified = modified_criterion(c) && rep.lambda0.value_or(0) >= 1;

    if (rep.lehmer_modified && rep.lambda0) {
        const auto d = static_cast<std::size_t>(c.ell());
        const BigInt k0 = rep.k0, l0 = *rep.lambda0;
        const IntMatrix ai = c.matrix() + IntMatrix::identity(d);

        auto& g = rep.certificates.add("shifted_gram_closed_form", Json{{"lambda0", *rep.lambda0}});
        IntMatrix want = IntMatrix::ones(d) * BigInt(l0 * (k0 - 1));
        want.add_scaled(k0 - l0, IntMatrix::identity(d));
        want.add_scaled(-(k0 - 1), IntMatrix::unit(d, 0, 0));
        expect_equal(g, ai.transpose() * ai, want);

        auto& b = rep.certificates.add("shifted_minor_gram_closed_form", Json{{"lambda0", *rep.lambda0}});
        const IntMatrix b0 = ai.minor(static_cast<std::size_t>(c.qprime()), 0);
        IntMatrix wantb = IntMatrix::ones(d - 1) * BigInt(l0 * (k0 - l0 - 1));
        wantb.add_scaled(k0 - l0, IntMatrix::identity(d - 1));
        expect_equal(b, b0.transpose() * b0, wantb);
    }
    return rep;
}

}  // namespace cyclo
