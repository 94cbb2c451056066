#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "acdlab/errors.hpp"
#include "acdlab/subgroups.hpp" // is_prime

namespace acdlab {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; } // operands < 2^31

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 p) {
    internal_check(a % p != 0, "inverse of zero");
    return powmod(a, p - 2, p);
}

inline std::vector<long long> prime_factors(long long n) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

inline long long isqrt_floor(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Square root mod an odd prime (Tonelli-Shanks); requires a to be a
// quadratic residue. Deterministic: scans 2,3,... for a non-residue.
inline u64 sqrtmod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    internal_check(powmod(a, (p - 1) / 2, p) == 1, "sqrtmod of a non-residue");
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    u64 q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
        u64 b = c;
        for (u64 k = 0; k < m - i - 1; ++k) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

// Element of exact multiplicative order e mod p; requires e | p-1.
inline u64 primitive_root_of_unity(u64 p, long long e) {
    internal_check((p - 1) % static_cast<u64>(e) == 0, "order does not divide p-1");
    if (e == 1) return 1;
    auto qs = prime_factors(e);
    for (u64 g = 2; g < p; ++g) {
        u64 z = powmod(g, (p - 1) / static_cast<u64>(e), p);
        bool exact = z != 1;
        for (long long q : qs)
            if (powmod(z, static_cast<u64>(e / q), p) == 1) { exact = false; break; }
        if (exact) return z;
    }
    throw internal_error("no primitive root of unity found");
}

} // namespace acdlab
