#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/field.hpp"
#include "cyclo/matrix.hpp"
#include "cyclo/verify.hpp"

namespace cyclo {

/// A row-swapped and minor-extracted family derived from the cyclotomic matrix.
struct DerivedMatrices {
    IntMatrix a;  // [(i, j)]
    IntMatrix m;  // [(i + q', j)], symmetric
    IntMatrix b;  // A without row q' and column 0
    IntMatrix s;  // M without row 0 and column 0
};

/// The l^2 cyclotomic numbers of F_q with respect to l and the field's generator.
/// Indices are arbitrary integers, reduced modulo l.
class Cyclotomy {
public:
    static Cyclotomy build(std::shared_ptr<const Field> field, std::uint64_t ell);

    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }

    std::int64_t q() const { return q_; }
    std::int64_t ell() const { return ell_; }
    std::int64_t k() const { return k_; }
    std::int64_t qprime() const { return qprime_; }

    std::int64_t reduce(std::int64_t i) const { return mod_floor(i, ell_); }

    /// Cyclotomic number (i, j) = |(1 + g^i K) cap g^j K|.
    std::int64_t operator()(std::int64_t i, std::int64_t j) const {
        return table_[static_cast<std::size_t>(reduce(i) * ell_ + reduce(j))];
    }

    /// Recounts (i, j) directly by walking g^i K, bypassing the table.
    std::int64_t count(std::int64_t i, std::int64_t j) const {
        const std::int64_t ri = reduce(i), rj = reduce(j);
        std::int64_t n = 0;
        for (std::int64_t e = ri; e < q_ - 1; e += ell_) {
            FieldElem y = field_->add_one(field_->exp(e));
            if (y.index != 0 && static_cast<std::int64_t>(field_->dlog_unchecked(y)) % ell_ == rj) ++n;
        }
        return n;
    }

    /// Coset class of a nonzero element: dlog(x) mod l.
    std::int64_t class_of(FieldElem x) const { return static_cast<std::int64_t>(field_->dlog(x)) % ell_; }

    /// A_v = [(i - v, j - v)]; A_0 is the cyclotomic matrix.
    IntMatrix shifted(std::int64_t v) const {
        const auto d = static_cast<std::size_t>(ell_);
        IntMatrix a(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                a(i, j) = (*this)(static_cast<std::int64_t>(i) - v, static_cast<std::int64_t>(j) - v);
        return a;
    }

    IntMatrix matrix() const { return shifted(0); }

    DerivedMatrices derived() const {
        if (ell_ < 2) throw Error(ErrorCode::EllTooSmall, "minors need l >= 2");
        const auto d = static_cast<std::size_t>(ell_);
        DerivedMatrices out;
        out.a = matrix();
        out.m = IntMatrix(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                out.m(i, j) = (*this)(static_cast<std::int64_t>(i) + qprime_, static_cast<std::int64_t>(j));
        out.b = out.a.minor(static_cast<std::size_t>(qprime_), 0);
        out.s = out.m.minor(0, 0);
        return out;
    }

    const std::vector<std::int64_t>& table() const { return table_; }

    /// 1 when s = t (mod l), else 0.
    std::int64_t delta(std::int64_t s, std::int64_t t) const { return reduce(s - t) == 0 ? 1 : 0; }

private:
    Cyclotomy() = default;

    std::shared_ptr<const Field> field_;
    std::int64_t q_ = 0, ell_ = 0, k_ = 0, qprime_ = 0;
    std::vector<std::int64_t> table_;
};

VerifySuiteResult verify_lemma21(const Cyclotomy& c);

inline Cyclotomy Cyclotomy::build(std::shared_ptr<const Field> field, std::uint64_t ell) {
    const std::uint64_t q = field->order();
    if (ell < 1 || (q - 1) % ell != 0)
        throw Error(ErrorCode::InvalidEll, "l = " + std::to_string(ell) + " does not divide q - 1 = " + std::to_string(q - 1));
    Cyclotomy c;
    c.field_ = std::move(field);
    c.q_ = static_cast<std::int64_t>(q);
    c.ell_ = static_cast<std::int64_t>(ell);
    c.k_ = (c.q_ - 1) / c.ell_;
    c.qprime_ = mod_floor((c.q_ - 1) / 2, c.ell_);
    c.table_.assign(static_cast<std::size_t>(c.ell_ * c.ell_), 0);

    const Field& f = *c.field_;
    for (std::int64_t e = 0; e < c.q_ - 1; ++e) {
        FieldElem y = f.add_one(f.exp(e));
        if (y.index == 0) continue;
        const std::int64_t j = static_cast<std::int64_t>(f.dlog_unchecked(y)) % c.ell_;
        ++c.table_[static_cast<std::size_t>((e % c.ell_) * c.ell_ + j)];
    }

    if (!verify_lemma21(c).all_pass())
        throw Error(ErrorCode::InvariantViolation, "cyclotomic table violates the basic symmetry and sum laws");
    return c;
}

/// Basic laws: the two symmetries, row and column sums, and the even-k
/// symmetry (i, j) = (j, i).
inline VerifySuiteResult verify_lemma21(const Cyclotomy& c) {
    VerifySuiteResult r;
    const std::int64_t l = c.ell(), qp = c.qprime(), k = c.k();
    auto& sym1 = r.add("symmetry_swap_shift");
    auto& sym2 = r.add("symmetry_negate");
    auto& rows = r.add("row_sums");
    auto& cols = r.add("column_sums");
    for (std::int64_t i = 0; i < l; ++i) {
        std::int64_t rs = 0, cs = 0;
        for (std::int64_t j = 0; j < l; ++j) {
            if (c(i, j) != c(j + qp, i + qp))
                fail(sym1, Json{{"i", i}, {"j", j}, {"lhs", c(i, j)}, {"rhs", c(j + qp, i + qp)}});
            if (c(i, j) != c(-i, j - i))
                fail(sym2, Json{{"i", i}, {"j", j}, {"lhs", c(i, j)}, {"rhs", c(-i, j - i)}});
            rs += c(i, j);
            cs += c(j, i);
        }
        const std::int64_t want_row = (i == qp) ? k - 1 : k;
        const std::int64_t want_col = (i == 0) ? k - 1 : k;
        if (rs != want_row) fail(rows, Json{{"row", i}, {"sum", rs}, {"expected", want_row}});
        if (cs != want_col) fail(cols, Json{{"column", i}, {"sum", cs}, {"expected", want_col}});
    }
    if (k % 2 == 0) {
        auto& even = r.add("even_k_symmetric");
        for (std::int64_t i = 0; i < l; ++i)
            for (std::int64_t j = 0; j < l; ++j)
                if (c(i, j) != c(j, i)) fail(even, Json{{"i", i}, {"j", j}});
    }
    return r;
}

/// Structural identities of the table and its matrices beyond the basic laws:
/// the six-term equality chain, the grand total, A_v as a conjugate of A,
/// A_{v+q'} = A_v^T, M = P_{q'} A with M and S symmetric, and the parity of
/// (0, j) tracking the class of 2.
inline VerifySuiteResult verify_cyclotomy_identities(const Cyclotomy& c) {
    VerifySuiteResult r;
    const std::int64_t l = c.ell(), qp = c.qprime();
    const auto d = static_cast<std::size_t>(l);

    auto& chain = r.add("equality_chain");
    for (std::int64_t i = 0; i < l; ++i) {
        for (std::int64_t j = 0; j < l; ++j) {
            const std::array<std::int64_t, 6> v = {c(i, j),          c(j + qp, i + qp),      c(-j + qp, i - j),
                                       c(i - j + qp, -j), c(j - i + qp, -i + qp), c(-i, j - i)};
            for (auto x : v)
                if (x != v[0]) fail(chain, Json{{"i", i}, {"j", j}, {"values", v}});
        }
    }

    auto& total = r.add("total_sum", Json{{"expected", c.q() - 2}});
    std::int64_t sum = 0;
    for (auto x : c.table()) sum += x;
    if (sum != c.q() - 2) fail(total, Json{{"sum", sum}});

    auto& conj = r.add("shift_is_conjugate");
    auto& transp = r.add("shift_by_qprime_transposes");
    const IntMatrix a = c.matrix();
    for (std::int64_t v = 0; v < l; ++v) {
        const IntMatrix p = IntMatrix::permutation(d, v);
        const IntMatrix av = c.shifted(v);
        expect_equal(conj, av, p * a * p.transpose(), Json{{"v", v}});
        expect_equal(transp, c.shifted(v + qp), av.transpose(), Json{{"v", v}});
    }

    if (l >= 2) {
        const auto dm = c.derived();
        auto& perm = r.add("m_is_row_permuted_a");
        expect_equal(perm, dm.m, IntMatrix::permutation(d, qp) * dm.a);
        auto& msym = r.add("m_symmetric");
        expect_equal(msym, dm.m, dm.m.transpose());
        auto& ssym = r.add("s_symmetric");
        expect_equal(ssym, dm.s, dm.s.transpose());
    }

    const Field& f = c.field();
    const FieldElem two = f.add_one(f.one());
    auto& parity = r.add("parity_of_row_zero", Json{{"class_of_two", c.class_of(two)}});
    for (std::int64_t j = 0; j < l; ++j) {
        const bool odd = c(0, j) % 2 == 1;
        if (odd != (c.class_of(two) == j)) fail(parity, Json{{"j", j}, {"value", c(0, j)}});
    }
    return r;
}

}  // namespace cyclo
