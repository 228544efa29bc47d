#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace cyclo::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Deterministic Miller-Rabin; the first twelve prime bases are exact below 2^64.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : small) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

inline u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace detail

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
/// Trial division up to 10^6, Pollard rho for whatever cofactor remains.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<u64> primes;
    for (u64 d = 2; d <= 1'000'000 && d * d <= n; d += (d == 2 ? 1 : 2)) {
        while (n % d == 0) {
            primes.push_back(d);
            n /= d;
        }
    }
    if (n > 1) detail::factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

/// floor(sqrt(n)) by Newton iteration.
inline u64 isqrt(u64 n) {
    if (n < 2) return n;
    u64 x = n;
    u64 y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

inline bool is_perfect_square(u64 n) {
    u64 r = isqrt(n);
    return r * r == n;
}

/// Finds odd a <= b with a^2 + b^2 = n, if any.
inline std::optional<std::pair<u64, u64>> odd_square_sum(u64 n) {
    for (u64 a = 1; 2 * a * a <= n; a += 2) {
        u64 rest = n - a * a;
        u64 b = isqrt(rest);
        if (b * b == rest && (b & 1)) return std::pair{a, b};
    }
    return std::nullopt;
}

/// Returns (p, n) when q = p^n for a prime p.
inline std::optional<std::pair<u64, unsigned>> prime_power(u64 q) {
    if (q < 2) return std::nullopt;
    auto f = factorize(q);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

}  // namespace cyclo::nt
