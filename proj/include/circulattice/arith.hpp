#pragma once

// Exact integer utilities shared by all modules: machine-word modular
// arithmetic, deterministic primality, big integers/rationals and a
// platform-independent seeded RNG.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace circ {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// (a * b) mod m without overflow, m < 2^63.
inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(uint64_t n);

// Multiplicative order of a modulo the prime q (a not divisible by q).
int64_t mult_order(int64_t a, int64_t q);

// Prime factors of n (distinct), by trial division. Fine for n < 2^40.
std::vector<int64_t> distinct_prime_factors(int64_t n);

// Largest s with s*s <= n.
int64_t isqrt_i64(int64_t n);

BigInt bigint_pow(const BigInt& base, uint64_t exp);

// SplitMix64: tiny, seedable, identical on every platform. Used wherever
// reproducibility across runs and worker counts matters.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform draw from [0, bound) by rejection.
    uint64_t next_below(uint64_t bound);
};

// Derives an independent stream for (seed, index) pairs, so draws can be
// sharded across workers with schedule-independent results.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
    SplitMix64 s(seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
    s.next();
    return s.next();
}

}  // namespace circ
