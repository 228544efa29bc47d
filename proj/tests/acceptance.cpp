// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyclo/cli.hpp"
#include "cyclo/diffset.hpp"
#include "cyclo/schur.hpp"
#include "cyclo/search.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

Cyclotomy f343() {
    FieldOptions fo;
    fo.modulus = std::vector<std::uint64_t>{4, 0, 6, 1};
    return Cyclotomy::build(std::make_shared<const Field>(Field::build(7, 3, fo)), 6);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double timed(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return seconds_since(t0);
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

// 1. Printed cyclotomic matrices, each under one second.
Outcome matrices() {
    Outcome o;
    struct Case {
        std::string name;
        std::function<Cyclotomy()> build;
        const ref::Table* table;
    };
    const std::vector<Case> cases = {
        {"q=343", f343, &ref::kA343},
        {"q=131", [] { return fixture::build(131, 1, 10, 2); }, &ref::kA131},
        {"q=37", [] { return fixture::build(37, 1, 4, 2); }, &ref::kA37},
        {"q=101", [] { return fixture::build(101, 1, 4, 2); }, &ref::kA101},
        {"q=197", [] { return fixture::build(197, 1, 4, 2); }, &ref::kA197},
        {"q=73", [] { return fixture::build(73, 1, 8, 5); }, &ref::kA73},
    };
    for (const auto& c : cases) {
        bool equal = false;
        const double t = timed([&] { equal = c.build().matrix() == oracle::from_table(*c.table); });
        o.require(equal, c.name + " matrix differs from the printed table");
        o.require(t < 1.0, c.name + " took " + std::to_string(t) + " s");
    }
    return o;
}

// 2. Gram matrix of F_131 and its trace.
Outcome gram() {
    Outcome o;
    const IntMatrix a = fixture::build(131, 1, 10, 2).matrix();
    const IntMatrix g = a.transpose() * a;
    o.require(g == oracle::from_table(ref::kGram131), "A^T A differs from the printed Gram matrix");
    o.require(g.trace() == 261, "trace(A^T A) = " + g.trace().str());
    o.require(BigInt(131 + 13 * 10) == 261, "q + k(k - 3) != 261");
    return o;
}

// 3. Commutator of F_343.
Outcome commutator() {
    Outcome o;
    const IntMatrix a = f343().matrix();
    const IntMatrix d = a.transpose() * a - a * a.transpose();
    o.require(d == oracle::from_table(ref::kCommutator343), "A^T A - A A^T differs from the printed matrix");
    o.require(verify_commutator(f343()).all_pass(), "commutator law");
    return o;
}

// 4. Identity battery on the fixture set.
Outcome identities() {
    Outcome o;
    const auto& fx = fixture::contexts();
    std::size_t primes = 0, powers = 0, even_k = 0, odd_k = 0;
    std::uint64_t max_q = 0;
    const double t = timed([&] {
        for (const auto& s : fx) {
            const auto c = fixture::build(s);
            (s.n == 1 ? primes : powers)++;
            (c.k() % 2 == 0 ? even_k : odd_k)++;
            max_q = std::max<std::uint64_t>(max_q, s.q());
            VerifySuiteResult r = verify_schur_suite(c);
            r.append(verify_lemma21(c));
            r.append(verify_cyclotomy_identities(c));
            for (const char* n : {"structure_constants", "matrix_product_law", "transposed_product_law", "trace_shifted",
                                  "trace_product", "trace_square", "trace_cube", "column_inner_product_identity",
                                  "shifted_column_reduction", "column_square", "column_cross"})
                o.require(r.find(n) != nullptr, s.name() + " missing " + n);
            const auto* t41 = r.find("column_inner_product_identity");
            if (s.ell <= 12) o.require(t41 && t41->params["mode"] == "exhaustive", s.name() + " not exhaustive");
            for (const auto& chk : r.checks) o.require(chk.pass, s.name() + " " + chk.name);
        }
    });
    o.require(fx.size() >= 20, "fewer than 20 contexts");
    o.require(primes > 0 && powers > 0 && even_k > 0 && odd_k > 0, "fixture set lacks variety");
    o.require(max_q <= 5000, "fixture exceeds q = 5000");
    o.require(t < 60.0, "took " + std::to_string(t) + " s");
    o.note(std::to_string(fx.size()) + " contexts (" + std::to_string(primes) + " prime, " + std::to_string(powers) +
           " prime power; " + std::to_string(odd_k) + " odd k, " + std::to_string(even_k) + " even k)");
    return o;
}

// 5. Detector agreement over primes below 10^4.
Outcome detectors() {
    Outcome o;
    std::map<std::uint64_t, std::vector<std::uint64_t>> hits, raw;
    std::size_t contexts = 0;
    const double t = timed([&] {
        for (std::uint64_t p = 3; p < 10'000; p += 2) {
            if (!nt::is_prime(p)) continue;
            for (std::uint64_t l : {2u, 4u, 6u, 8u, 10u}) {
                if ((p - 1) % l != 0) continue;
                ++contexts;
                const auto c = fixture::build(p, 1, l);
                const auto b = is_diffset_bruteforce(c);
                const auto le = is_diffset_lehmer(c);
                const auto s = is_diffset_sumsq(c);
                const auto g = is_diffset_gram(c);
                const bool agree = b.is_diffset == le.is_diffset && le.is_diffset == s.is_diffset && s.is_diffset == g.is_diffset;
                o.require(agree, "p=" + std::to_string(p) + " l=" + std::to_string(l) + " detectors disagree");
                if (b.is_diffset) hits[l].push_back(p);
                if (b.criterion) raw[l].push_back(p);
                if (le.is_diffset) o.require(le.checks.all_pass() && s.checks.all_pass(), "detector side checks");
            }
        }
    });
    std::vector<std::uint64_t> mod4, mod4_raw;
    for (std::uint64_t p = 3; p < 10'000; p += 2)
        if (nt::is_prime(p) && p % 4 == 3) {
            mod4_raw.push_back(p);
            if (p > 3) mod4.push_back(p);
        }
    o.require(hits[2] == mod4, "l=2 hits are not the primes = 3 mod 4 (lambda >= 1)");
    o.require(raw[2] == mod4_raw, "l=2 uniform-count primes are not exactly the primes = 3 mod 4");
    std::vector<std::uint64_t> four, eight;
    for (auto p : hits[4])
        if (p <= 200) four.push_back(p);
    for (auto p : hits[8])
        if (p <= 100) eight.push_back(p);
    o.require(four == std::vector<std::uint64_t>{37, 101, 197}, "l=4 hits <= 200: " + join(four));
    o.require(eight == std::vector<std::uint64_t>{73}, "l=8 hits <= 100: " + join(eight));
    o.require(hits[6].empty(), "l=6 hits: " + join(hits[6]));
    o.require(hits[10].empty(), "l=10 hits: " + join(hits[10]));
    o.require(t < 300.0, "took " + std::to_string(t) + " s");
    o.note(std::to_string(contexts) + " contexts; l=2 hits " + std::to_string(hits[2].size()) +
           " (q = 3 has K = {1}, lambda = 0: counted in the uniform-count set, not as a difference set)");
    o.note("l=4 hits " + join(hits[4]) + "; l=8 hits " + join(hits[8]));
    const std::vector<std::uint64_t> degenerate6 = raw[6], degenerate10 = raw[10];
    o.note("l=6 uniform-count only at " + join(degenerate6) + "; l=10 at " + join(degenerate10) + " (k = 1)");
    return o;
}

// 6. Certificate battery on known hits.
Outcome certificates() {
    Outcome o;
    struct Hit {
        std::uint64_t p, l;
        std::uint32_t g;
    };
    for (const Hit h : std::vector<Hit>{{7, 2, 3}, {31, 2, 3}, {37, 4, 2}, {73, 8, 5}, {101, 4, 2}, {197, 4, 2}}) {
        const auto c = fixture::build(h.p, 1, h.l, h.g);
        const auto rep = analyze_diffset(c);
        const std::string tag = "q=" + std::to_string(h.p);
        o.require(rep.is_diffset, tag + " not a hit");
        o.require(rep.all_pass(), tag + " certificate failure");
        for (const char* n : {"gram_closed_form", "minor_gram_closed_form", "m_annihilator", "s_annihilator", "det_a",
                              "det_b", "row_zero_deviation", "square_excess"})
            o.require(rep.certificates.find(n) != nullptr, tag + " missing " + n);
        for (const auto& chk : rep.certificates.checks) o.require(chk.pass, tag + " " + chk.name);
    }
    const auto d73 = verify_determinants(fixture::build(73, 1, 8, 5));
    o.require(d73.a.computed == -512 && d73.b.computed == -4096, "q=73 determinants");
    const auto d37 = verify_determinants(fixture::build(37, 1, 4, 2));
    o.require(d37.a.computed == -14, "q=37 det(A)");
    const IntPoly cp = char_poly(fixture::build(37, 1, 4, 2).matrix());
    o.require(cp == IntPoly{-14, -20, -4, -8, 1}, "q=37 char poly " + cp.to_string());
    o.note("q=37 char poly " + cp.to_string());
    return o;
}

// 7. Numeric spectra for F_73.
Outcome spectra() {
    Outcome o;
    const auto sd = spectral_data(fixture::build(73, 1, 8, 5));
    const double r2 = 2 * std::sqrt(2.0);
    const bool s_ok = sd.roots_s.size() == 3 && std::abs(sd.roots_s[0].value + r2) < 1e-9 && sd.roots_s[0].multiplicity == 3 &&
                      std::abs(sd.roots_s[1].value - r2) < 1e-9 && sd.roots_s[1].multiplicity == 3 &&
                      std::abs(sd.roots_s[2].value - 8) < 1e-9 && sd.roots_s[2].multiplicity == 1;
    o.require(s_ok, "Spec(S) != {8, +-2 sqrt 2 (x3)}");
    for (double x : {(9 + std::sqrt(77.0)) / 2, (9 - std::sqrt(77.0)) / 2}) {
        bool found = false;
        for (const auto& r : sd.roots_m) found = found || std::abs(r.value - x) < 1e-9;
        o.require(found, "Spec(M) lacks " + std::to_string(x));
    }
    return o;
}

// 8. Oracle equivalence on the fixture set.
Outcome oracles() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& s : fixture::contexts()) {
        if (s.q() > 2000) continue;
        ++checked;
        const auto c = fixture::build(s);
        const auto cs = oracle::cosets(c.field(), s.ell);
        for (std::size_t i = 0; i < s.ell; ++i)
            for (std::size_t j = 0; j < s.ell; ++j)
                o.require(c(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)) ==
                              oracle::cyclotomic_number(c.field(), cs, i, j),
                          s.name() + " table entry");
        if (s.ell < 2) continue;
        const auto cls = is_diffset_bruteforce(c, BruteForceMode::ClassCount);
        const auto pairs = is_diffset_bruteforce(c, BruteForceMode::PairEnumeration);
        o.require(cls.is_diffset == pairs.is_diffset && cls.lambda == pairs.lambda, s.name() + " class vs pair counting");
        const auto mod = modified_diffset(c, BruteForceMode::PairEnumeration);
        o.require(mod.agree() && mod.all_pass(), s.name() + " modified set");
        auto k0 = cs[0];
        k0.insert(0);
        o.require(oracle::is_difference_set(c.field(), k0).first == mod.bruteforce, s.name() + " modified set oracle");
        if (s.ell == 2) o.require(mod.lehmer_modified == (s.q() % 4 == 3), s.name() + " modified l=2 rule");
    }
    // The l = 2 rule for K u {0} over every odd prime power up to 2000.
    std::size_t swept = 0;
    for (std::uint64_t q = 3; q <= 2000; q += 2) {
        const auto pp = nt::prime_power(q);
        if (!pp) continue;
        ++swept;
        const auto c = fixture::build(pp->first, pp->second, 2);
        const auto mod = modified_diffset(c);
        o.require(mod.agree() && mod.bruteforce == (q % 4 == 3), "modified l=2 at q=" + std::to_string(q));
    }
    o.note(std::to_string(checked) + " fixture contexts, " + std::to_string(swept) + " fields in the l=2 sweep");
    return o;
}

// 9. Byte-identical reruns.
Outcome determinism() {
    Outcome o;
    auto run = [](std::vector<std::string> args) {
        args.insert(args.begin(), "cyclo");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
        return std::to_string(code) + "\n" + out.str();
    };
    const std::vector<std::vector<std::string>> configs = {
        {"compute", "--p", "7", "--n", "3", "--modulus", "4,0,6,1", "--ell", "6", "--emit", "a,m,b,s,gram"},
        {"compute", "--p", "131", "--ell", "10", "--emit", "gram", "--format", "csv"},
        {"verify", "--p", "7", "--n", "3", "--modulus", "4,0,6,1", "--ell", "6", "--suite", "all"},
        {"--seed", "9", "verify", "--p", "2003", "--ell", "22"},
        {"diffset", "--p", "73", "--ell", "8", "--generator", "5"},
        {"diffset", "--p", "11", "--ell", "2", "--modified"},
        {"survey", "--p", "131", "--ell", "10", "--generator", "2"},
    };
    for (const auto& cfg : configs) {
        const std::string a = run(cfg), b = run(cfg);
        o.require(a == b && a.rfind("0\n", 0) == 0, "config " + cfg.front() + " " + cfg[1] + " not reproducible");
    }
    const std::string s1 = run({"--jobs", "1", "search", "--ell", "2", "--max-q", "500"});
    const std::string s4 = run({"--jobs", "4", "search", "--ell", "2", "--max-q", "500"});
    o.require(s1 == s4, "search output depends on --jobs");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"matrix reproduction", matrices},
        {"Gram reproduction", gram},
        {"commutator", commutator},
        {"identity battery", identities},
        {"detector agreement", detectors},
        {"certificate battery on hits", certificates},
        {"spectral display", spectra},
        {"oracle equivalence", oracles},
        {"determinism", determinism},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        const double t = seconds_since(t0);
        all = all && o.pass;
        std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
                  << std::fixed << std::setprecision(2) << t << " s)\n";
        std::size_t shown = 0;
        for (const auto& n : o.notes) {
            if (++shown > 12) {
                std::cout << "    ...\n";
                break;
            }
            std::cout << "    " << n << "\n";
        }
    }
    std::cout << (all ? "all criteria PASS" : "some criteria FAIL") << "\n";
    return all ? 0 : 1;
}
