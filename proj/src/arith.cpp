#include "circulattice/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace circ {

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t acc = 1;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set is deterministic for all n < 3.3e24.
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<int64_t> distinct_prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

int64_t mult_order(int64_t a, int64_t q) {
    a %= q;
    if (a < 0) a += q;
    if (a == 0) throw std::domain_error("mult_order: a divisible by q");
    // ord divides q-1; strip prime factors while the power stays 1.
    int64_t ord = q - 1;
    for (int64_t f : distinct_prime_factors(q - 1)) {
        while (ord % f == 0 && powmod_u64(static_cast<uint64_t>(a), static_cast<uint64_t>(ord / f),
                                          static_cast<uint64_t>(q)) == 1) {
            ord /= f;
        }
    }
    return ord;
}

int64_t isqrt_i64(int64_t n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    auto s = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

BigInt bigint_pow(const BigInt& base, uint64_t exp) {
    BigInt acc = 1, b = base;
    while (exp) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

uint64_t SplitMix64::next_below(uint64_t bound) {
    if (bound == 0) throw std::domain_error("next_below(0)");
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

}  // namespace circ
