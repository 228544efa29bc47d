#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cyclo/cyclotomy.hpp"
#include "cyclo/error.hpp"
#include "cyclo/matrix.hpp"
#include "cyclo/verify.hpp"

namespace cyclo {

/// Largest field order accepted by the group-ring convolution check.
inline constexpr std::int64_t kMaxConvolutionOrder = 100'000;

/// Element of Z[(F_q, +)], stored densely by canonical field index.
struct GroupRingElem {
    std::vector<std::int64_t> coeff;

    std::size_t support_size() const {
        return static_cast<std::size_t>(std::count_if(coeff.begin(), coeff.end(), [](auto c) { return c != 0; }));
    }

    friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;
};

/// Indicator sum of the coset g^i K.
inline GroupRingElem class_sum(const Cyclotomy& c, std::int64_t i) {
    GroupRingElem a{std::vector<std::int64_t>(static_cast<std::size_t>(c.q()), 0)};
    for (std::int64_t e = c.reduce(i); e < c.q() - 1; e += c.ell()) a.coeff[c.field().exp(e).index] = 1;
    return a;
}

/// Product in the group ring: additive convolution over F_q.
inline GroupRingElem multiply(const Field& f, const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem r{std::vector<std::int64_t>(a.coeff.size(), 0)};
    std::vector<std::uint32_t> sb;
    for (std::uint32_t y = 0; y < b.coeff.size(); ++y)
        if (b.coeff[y] != 0) sb.push_back(y);
    for (std::uint32_t x = 0; x < a.coeff.size(); ++x) {
        const std::int64_t ax = a.coeff[x];
        if (ax == 0) continue;
        for (std::uint32_t y : sb) r.coeff[f.add(FieldElem{x}, FieldElem{y}).index] += ax * b.coeff[y];
    }
    return r;
}

/// Multiplies every pair of class sums in Z[F_q] and checks that the product
/// decomposes as k [i = v + q'] 1 + sum_j (i - v, j - v) alpha_j.
inline VerifySuiteResult verify_structure_constants(const Cyclotomy& c) {
    if (c.q() > kMaxConvolutionOrder)
        throw Error(ErrorCode::ContextTooLarge, "group-ring convolution limited to q <= 100000");
    VerifySuiteResult r;
    auto& chk = r.add("structure_constants", Json{{"pairs", c.ell() * c.ell()}});
    const Field& f = c.field();
    std::vector<GroupRingElem> alpha;
    for (std::int64_t i = 0; i < c.ell(); ++i) alpha.push_back(class_sum(c, i));

    for (std::int64_t i = 0; i < c.ell() && chk.pass; ++i) {
        for (std::int64_t v = 0; v < c.ell() && chk.pass; ++v) {
            const GroupRingElem prod = multiply(f, alpha[static_cast<std::size_t>(i)], alpha[static_cast<std::size_t>(v)]);
            const std::int64_t want0 = c.k() * c.delta(i, v + c.qprime());
            if (prod.coeff[0] != want0) {
                fail(chk, Json{{"i", i}, {"v", v}, {"element", 0}, {"coefficient", prod.coeff[0]}, {"expected", want0}});
                break;
            }
            for (std::uint32_t z = 1; z < prod.coeff.size(); ++z) {
                const std::int64_t j = c.class_of(FieldElem{z});
                const std::int64_t want = c(i - v, j - v);
                if (prod.coeff[z] != want) {
                    fail(chk, Json{{"i", i}, {"v", v}, {"element", z}, {"coefficient", prod.coeff[z]}, {"expected", want}});
                    break;
                }
            }
        }
    }
    return r;
}

/// [alpha_v] on the basis {1, alpha_0, ..., alpha_{l-1}}: block form
/// (0 | r_v ; k c_{v+q'} | A_v).
inline IntMatrix regular_rep(const Cyclotomy& c, std::int64_t v) {
    const auto l = static_cast<std::size_t>(c.ell());
    IntMatrix m(l + 1);
    m(0, 1 + static_cast<std::size_t>(c.reduce(v))) = 1;
    m(1 + static_cast<std::size_t>(c.reduce(v + c.qprime())), 0) = c.k();
    const IntMatrix av = c.shifted(v);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) m(i + 1, j + 1) = av(i, j);
    return m;
}

/// The regular representation is a ring homomorphism on the class sums.
inline VerifySuiteResult verify_regular_representation(const Cyclotomy& c) {
    VerifySuiteResult r;
    auto& chk = r.add("regular_representation", Json{{"pairs", c.ell() * c.ell()}});
    const auto d = static_cast<std::size_t>(c.ell()) + 1;
    std::vector<IntMatrix> rep;
    for (std::int64_t w = 0; w < c.ell(); ++w) rep.push_back(regular_rep(c, w));
    for (std::int64_t u = 0; u < c.ell() && chk.pass; ++u) {
        for (std::int64_t v = 0; v < c.ell() && chk.pass; ++v) {
            IntMatrix rhs = IntMatrix::identity(d) * BigInt(c.k() * c.delta(u, v + c.qprime()));
            for (std::int64_t w = 0; w < c.ell(); ++w) rhs.add_scaled(c(u - v, w - v), rep[static_cast<std::size_t>(w)]);
            expect_equal(chk, rep[static_cast<std::size_t>(u)] * rep[static_cast<std::size_t>(v)], rhs, Json{{"u", u}, {"v", v}});
        }
    }
    return r;
}

namespace detail {

inline std::vector<IntMatrix> all_shifts(const Cyclotomy& c) {
    std::vector<IntMatrix> out;
    for (std::int64_t w = 0; w < c.ell(); ++w) out.push_back(c.shifted(w));
    return out;
}

}  // namespace detail

/// A_u A_v = k (D(u, v+q') I - E_{u+q', v}) + sum_w (u-v, w-v) A_w with D in {0, 1}.
inline VerifySuiteResult verify_matrix_product_law(const Cyclotomy& c) {
    VerifySuiteResult r;
    auto& chk = r.add("matrix_product_law", Json{{"pairs", c.ell() * c.ell()}});
    const auto d = static_cast<std::size_t>(c.ell());
    const auto shifts = detail::all_shifts(c);
    const BigInt k = c.k();
    for (std::int64_t u = 0; u < c.ell() && chk.pass; ++u) {
        for (std::int64_t v = 0; v < c.ell() && chk.pass; ++v) {
            IntMatrix rhs = IntMatrix::identity(d) * BigInt(c.delta(u, v + c.qprime()));
            rhs -= IntMatrix::unit(d, u + c.qprime(), v);
            rhs *= k;
            for (std::int64_t w = 0; w < c.ell(); ++w) rhs.add_scaled(c(u - v, w - v), shifts[static_cast<std::size_t>(w)]);
            expect_equal(chk, shifts[static_cast<std::size_t>(u)] * shifts[static_cast<std::size_t>(v)], rhs,
                         Json{{"u", u}, {"v", v}});
        }
    }
    return r;
}

/// A_u^T A_v = k (D(u, v) I - E_{u, v}) + sum_w (u-v+q', w-v) A_w.
inline VerifySuiteResult verify_transposed_product_law(const Cyclotomy& c) {
    VerifySuiteResult r;
    auto& chk = r.add("transposed_product_law", Json{{"pairs", c.ell() * c.ell()}});
    const auto d = static_cast<std::size_t>(c.ell());
    const auto shifts = detail::all_shifts(c);
    const BigInt k = c.k();
    for (std::int64_t u = 0; u < c.ell() && chk.pass; ++u) {
        for (std::int64_t v = 0; v < c.ell() && chk.pass; ++v) {
            IntMatrix rhs = IntMatrix::identity(d) * BigInt(c.delta(u, v));
            rhs -= IntMatrix::unit(d, u, v);
            rhs *= k;
            for (std::int64_t w = 0; w < c.ell(); ++w)
                rhs.add_scaled(c(u - v + c.qprime(), w - v), shifts[static_cast<std::size_t>(w)]);
            expect_equal(chk, shifts[static_cast<std::size_t>(u)].transpose() * shifts[static_cast<std::size_t>(v)], rhs,
                         Json{{"u", u}, {"v", v}});
        }
    }

    // u = v = 0: A^T A = k (I - E_{0,0}) + sum_w (q', w) A_w.
    auto& gram = r.add("gram_expansion");
    IntMatrix rhs = IntMatrix::identity(d) - IntMatrix::unit(d, 0, 0);
    rhs *= k;
    for (std::int64_t w = 0; w < c.ell(); ++w) rhs.add_scaled(c(c.qprime(), w), shifts[static_cast<std::size_t>(w)]);
    expect_equal(gram, shifts[0].transpose() * shifts[0], rhs);
    return r;
}

/// A_u A_v - A_v A_u = k (E_{v+q', u} - E_{u+q', v}), and the near-normality
/// A^T A - A A^T = k (E_{q', q'} - E_{0, 0}).
inline VerifySuiteResult verify_commutator(const Cyclotomy& c) {
    VerifySuiteResult r;
    auto& chk = r.add("commutator", Json{{"pairs", c.ell() * c.ell()}});
    const auto d = static_cast<std::size_t>(c.ell());
    const auto shifts = detail::all_shifts(c);
    const BigInt k = c.k();
    for (std::int64_t u = 0; u < c.ell() && chk.pass; ++u) {
        for (std::int64_t v = 0; v < c.ell() && chk.pass; ++v) {
            const auto& au = shifts[static_cast<std::size_t>(u)];
            const auto& av = shifts[static_cast<std::size_t>(v)];
            IntMatrix rhs = IntMatrix::unit(d, v + c.qprime(), u) - IntMatrix::unit(d, u + c.qprime(), v);
            expect_equal(chk, au * av - av * au, k * rhs, Json{{"u", u}, {"v", v}});
        }
    }
    auto& normal = r.add("near_normality");
    const auto& a = shifts[0];
    IntMatrix rhs = IntMatrix::unit(d, c.qprime(), c.qprime()) - IntMatrix::unit(d, 0, 0);
    expect_equal(normal, a.transpose() * a - a * a.transpose(), k * rhs);
    return r;
}

/// Trace identities: tr(A_w) = k - 1; tr(A_u A_v) = (q - 2k) D(u - v, q') + k(k - 1);
/// tr(A^2) by parity of k; tr(A^3) = (0, q')(q - 3k) + k^2 (k - 1).
inline VerifySuiteResult verify_traces(const Cyclotomy& c) {
    VerifySuiteResult r;
    const auto shifts = detail::all_shifts(c);
    const BigInt q = c.q(), k = c.k();

    auto& single = r.add("trace_shifted", Json{{"expected", BigInt(k - 1).str()}});
    for (std::int64_t w = 0; w < c.ell(); ++w)
        expect_equal(single, shifts[static_cast<std::size_t>(w)].trace(), k - 1, Json{{"w", w}});

    auto& prod = r.add("trace_product", Json{{"pairs", c.ell() * c.ell()}});
    for (std::int64_t u = 0; u < c.ell() && prod.pass; ++u)
        for (std::int64_t v = 0; v < c.ell() && prod.pass; ++v) {
            const BigInt want = (q - 2 * k) * c.delta(u - v, c.qprime()) + k * (k - 1);
            expect_equal(prod, (shifts[static_cast<std::size_t>(u)] * shifts[static_cast<std::size_t>(v)]).trace(), want,
                         Json{{"u", u}, {"v", v}});
        }

    const IntMatrix& a = shifts[0];
    const IntMatrix a2 = a * a;
    const BigInt want2 = (c.k() % 2 == 0) ? BigInt(k * (k - 1) + q - 2 * k) : BigInt(k * (k - 1));
    auto& sq = r.add("trace_square", Json{{"expected", want2.str()}});
    expect_equal(sq, a2.trace(), want2);

    const BigInt want3 = BigInt(c(0, c.qprime())) * (q - 3 * k) + k * k * (k - 1);
    auto& cube = r.add("trace_cube", Json{{"expected", want3.str()}});
    expect_equal(cube, (a2 * a).trace(), want3);
    return r;
}

/// sum_{i,j} (i, j)^2 = q + k(k - 3), also read off as tr(A^T A).
inline VerifySuiteResult verify_sum_of_squares(const Cyclotomy& c) {
    VerifySuiteResult r;
    const BigInt want = BigInt(c.q()) + BigInt(c.k()) * (c.k() - 3);
    auto& chk = r.add("sum_of_squares", Json{{"expected", want.str()}});
    BigInt s = 0;
    for (auto x : c.table()) s += BigInt(x) * x;
    expect_equal(chk, s, want);
    const IntMatrix a = c.matrix();
    expect_equal(chk, (a.transpose() * a).trace(), want, Json{{"via", "gram_trace"}});
    return r;
}

struct Theorem41Options {
    /// Explicit (i, j, u, v) quadruples; when empty the grid is exhaustive for
    /// l <= exhaustive_limit and sampled otherwise.
    std::vector<std::array<std::int64_t, 4>> quadruples;
    std::int64_t exhaustive_limit = 12;
    std::size_t samples = 10'000;
    std::uint64_t seed = 1;
};

namespace detail {

// sum_w (w - u, i - u)(w - v, j - v) and its mirrored right-hand side.
inline bool column_identity_holds(const Cyclotomy& c, std::int64_t i, std::int64_t j, std::int64_t u, std::int64_t v,
                                  std::int64_t& lhs, std::int64_t& rhs) {
    lhs = 0;
    rhs = c.k() * (c.delta(i, j) * c.delta(u, v) - c.delta(i, u) * c.delta(j, v));
    for (std::int64_t w = 0; w < c.ell(); ++w) {
        lhs += c(w - u, i - u) * c(w - v, j - v);
        rhs += c(w - v, u - v) * c(w - j, i - j);
    }
    return lhs == rhs;
}

// sum_w (w, a)(w + m, b)
inline std::int64_t shifted_column_product(const Cyclotomy& c, std::int64_t a, std::int64_t m, std::int64_t b) {
    std::int64_t s = 0;
    for (std::int64_t w = 0; w < c.ell(); ++w) s += c(w, a) * c(w + m, b);
    return s;
}

// Portable draw in [0, n).
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t n) { return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n)); }

}  // namespace detail

/// Column inner-product identity over quadruples (i, j, u, v), plus its
/// specialization sum_w (w, a)(w + m, b) = sum_w (w, a')(w + m, b') for
/// a + b = a' + b', m = q' + b - a', a' != 0 and (a, b) != (0, 0).
inline VerifySuiteResult verify_theorem41(const Cyclotomy& c, const Theorem41Options& opt = {}) {
    VerifySuiteResult r;
    const std::int64_t l = c.ell();
    std::vector<std::array<std::int64_t, 4>> quads = opt.quadruples;
    std::string mode = "explicit";
    std::mt19937_64 rng(opt.seed);
    if (quads.empty()) {
        if (l <= opt.exhaustive_limit) {
            mode = "exhaustive";
            for (std::int64_t i = 0; i < l; ++i)
                for (std::int64_t j = 0; j < l; ++j)
                    for (std::int64_t u = 0; u < l; ++u)
                        for (std::int64_t v = 0; v < l; ++v) quads.push_back({i, j, u, v});
        } else {
            mode = "sampled";
            for (std::size_t s = 0; s < opt.samples; ++s)
                quads.push_back({detail::draw(rng, l), detail::draw(rng, l), detail::draw(rng, l), detail::draw(rng, l)});
        }
    }
    auto& chk = r.add("column_inner_product_identity",
                      Json{{"mode", mode}, {"quadruples", quads.size()}, {"seed", opt.seed}});
    for (const auto& [i, j, u, v] : quads) {
        std::int64_t lhs = 0, rhs = 0;
        if (!detail::column_identity_holds(c, i, j, u, v, lhs, rhs)) {
            fail(chk, Json{{"i", i}, {"j", j}, {"u", u}, {"v", v}, {"lhs", lhs}, {"rhs", rhs}});
            break;
        }
    }

    auto& snap = r.add("shifted_column_reduction", Json{{"mode", l <= opt.exhaustive_limit ? "exhaustive" : "sampled"}});
    auto check_triple = [&](std::int64_t a, std::int64_t b, std::int64_t a2) {
        if (c.reduce(a2) == 0 || (c.reduce(a) == 0 && c.reduce(b) == 0)) return true;
        const std::int64_t b2 = a + b - a2;
        const std::int64_t m = c.qprime() + b - a2;
        const std::int64_t lhs = detail::shifted_column_product(c, a, m, b);
        const std::int64_t rhs = detail::shifted_column_product(c, a2, m, b2);
        if (lhs != rhs) {
            fail(snap, Json{{"a", a}, {"b", b}, {"a_prime", a2}, {"b_prime", b2}, {"m", m}, {"lhs", lhs}, {"rhs", rhs}});
            return false;
        }
        return true;
    };
    if (l <= opt.exhaustive_limit) {
        for (std::int64_t a = 0; a < l && snap.pass; ++a)
            for (std::int64_t b = 0; b < l && snap.pass; ++b)
                for (std::int64_t a2 = 0; a2 < l && snap.pass; ++a2) check_triple(a, b, a2);
    } else {
        for (std::size_t s = 0; s < opt.samples && snap.pass; ++s)
            check_triple(detail::draw(rng, l), detail::draw(rng, l), detail::draw(rng, l));
    }
    return r;
}

/// Inner products of the columns of A expressed through column 0.
inline VerifySuiteResult verify_column_products(const Cyclotomy& c) {
    VerifySuiteResult r;
    const std::int64_t l = c.ell(), qp = c.qprime(), k = c.k();
    auto col = [&](std::int64_t i, std::int64_t j) {
        std::int64_t s = 0;
        for (std::int64_t w = 0; w < l; ++w) s += c(w, i) * c(w, j);
        return s;
    };

    auto& sq = r.add("column_square");
    for (std::int64_t i = 1; i < l; ++i) {
        std::int64_t rhs = k;
        for (std::int64_t w = 0; w < l; ++w) rhs += c(w, 0) * c(w - i, 0);
        if (col(i, i) != rhs) fail(sq, Json{{"i", i}, {"lhs", col(i, i)}, {"rhs", rhs}});
    }

    auto& cross = r.add("column_cross");
    for (std::int64_t i = 0; i < l; ++i)
        for (std::int64_t j = 0; j < l; ++j) {
            if (i == j) continue;
            std::int64_t rhs = 0;
            for (std::int64_t w = 0; w < l; ++w) rhs += c(w, 0) * c(w - j, i - j);
            if (col(i, j) != rhs) fail(cross, Json{{"i", i}, {"j", j}, {"lhs", col(i, j)}, {"rhs", rhs}});
        }

    if (k % 2 == 1) {
        auto& half = r.add("column_qprime_square");
        const std::int64_t rhs = k + col(0, 0);
        if (col(qp, qp) != rhs) fail(half, Json{{"lhs", col(qp, qp)}, {"rhs", rhs}});

        auto& shift = r.add("column_shift_invariance");
        for (std::int64_t i = 0; i < l; ++i)
            for (std::int64_t j = 0; j < l; ++j) {
                if ((i == 0 && j == 0) || (i == qp && j == qp)) continue;
                if (col(i, j) != col(i + qp, j + qp))
                    fail(shift, Json{{"i", i}, {"j", j}, {"lhs", col(i, j)}, {"rhs", col(i + qp, j + qp)}});
            }
    }
    return r;
}

struct ColumnSurvey {
    struct Entry {
        std::int64_t column = 0;
        bool permutation = false;

        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> columns;

    bool all_permutations() const {
        return std::all_of(columns.begin(), columns.end(), [](const Entry& e) { return e.permutation; });
    }

    friend bool operator==(const ColumnSurvey&, const ColumnSurvey&) = default;
};

/// For odd k, reports for each 1 <= j < q' whether column j of A is a
/// rearrangement of column j + q'. Evidence only; nothing is asserted.
inline ColumnSurvey column_permutation_survey(const Cyclotomy& c) {
    if (c.k() % 2 == 0) throw Error(ErrorCode::KEven, "survey needs odd k");
    if (c.ell() < 4) throw Error(ErrorCode::EllTooSmall, "survey needs l >= 4");
    ColumnSurvey out;
    for (std::int64_t j = 1; j < c.qprime(); ++j) {
        std::vector<std::int64_t> x, y;
        for (std::int64_t w = 0; w < c.ell(); ++w) {
            x.push_back(c(w, j));
            y.push_back(c(w, j + c.qprime()));
        }
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        out.columns.push_back({j, x == y});
    }
    return out;
}

/// Every Schur-ring and matrix identity on one context.
inline VerifySuiteResult verify_schur_suite(const Cyclotomy& c, const Theorem41Options& opt = {}) {
    VerifySuiteResult r;
    if (c.q() <= kMaxConvolutionOrder) r.append(verify_structure_constants(c));
    r.append(verify_regular_representation(c));
    r.append(verify_matrix_product_law(c));
    r.append(verify_transposed_product_law(c));
    r.append(verify_commutator(c));
    r.append(verify_traces(c));
    r.append(verify_sum_of_squares(c));
    r.append(verify_theorem41(c, opt));
    r.append(verify_column_products(c));
    return r;
}

}  // namespace cyclo
