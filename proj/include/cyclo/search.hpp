#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "cyclo/cyclotomy.hpp"
#include "cyclo/diffset.hpp"
#include "cyclo/error.hpp"
#include "cyclo/field.hpp"
#include "cyclo/number_theory.hpp"

namespace cyclo {

inline constexpr std::uint64_t kMaxSearchOrder = 10'000'000;

struct SearchOptions {
    std::uint64_t ell = 2;
    std::uint64_t min_q = 3;
    std::uint64_t max_q = 100;
    bool prime_only = false;
    unsigned jobs = 1;
};

struct SearchHit {
    std::uint64_t p = 0;
    unsigned n = 1;
    std::uint32_t generator = 0;
    bool q_is_prime = false;
    bool k_is_square = false;
    DiffSetReport report;

    friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

/// Odd prime powers q in [min_q, max_q] with q = 1 (mod l), ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> search_candidates(const SearchOptions& opt) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t q = std::max<std::uint64_t>(opt.min_q, 3); q <= opt.max_q; ++q) {
        if (q % 2 == 0 || (q - 1) % opt.ell != 0) continue;
        if (opt.prime_only) {
            if (nt::is_prime(q)) out.emplace_back(q, 1);
            continue;
        }
        if (auto pp = nt::prime_power(q)) out.emplace_back(pp->first, pp->second);
    }
    return out;
}

/// Scans every candidate field with the column-0 detector and runs the full
/// report on each hit. Results are sorted by q regardless of `jobs`.
inline std::vector<SearchHit> search(const SearchOptions& opt) {
    if (opt.ell < 2) throw Error(ErrorCode::EllOne, "search needs l >= 2");
    if (opt.max_q > kMaxSearchOrder)
        throw Error(ErrorCode::RangeTooLarge, "search range limited to q <= 10000000");
    const auto cands = search_candidates(opt);
    std::vector<std::optional<SearchHit>> slots(cands.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cands.size()) return;
            try {
                const auto [p, n] = cands[i];
                auto f = std::make_shared<const Field>(Field::build(p, n));
                const auto c = Cyclotomy::build(f, opt.ell);
                if (!is_diffset_lehmer(c).is_diffset) continue;
                SearchHit h;
                h.p = p;
                h.n = n;
                h.generator = f->generator().index;
                h.q_is_prime = n == 1;
                h.k_is_square = nt::is_perfect_square(static_cast<std::uint64_t>(c.k()));
                h.report = analyze_diffset(c);
                slots[i] = std::move(h);
            } catch (...) {
                std::lock_guard lk(err_mu);
                if (!err) err = std::current_exception();
                next.store(cands.size());
                return;
            }
        }
    };

    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);

    std::vector<SearchHit> hits;
    for (auto& s : slots)
        if (s) hits.push_back(std::move(*s));
    return hits;
}

}  // namespace cyclo
