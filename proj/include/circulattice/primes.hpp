#pragma once

// Selection of the alphabet prime p: p mod q must be a primitive root mod q,
// with p found either by direct search above n^2 ln n or by the constructive
// arithmetic-progression route (least prime p = r mod Q, Q = q^2 * frak_p).

#include <cstdint>
#include <optional>
#include <string>

#include "circulattice/arith.hpp"

namespace circ {

bool is_primitive(int64_t a, int64_t q);

// Smallest prime in [lo, hi], if any.
std::optional<int64_t> least_prime_in_range(int64_t lo, int64_t hi);

struct LinnikWitnesses {
    int64_t frak_p = 0;  // prime in [4 ln n, 4 ln^2 n]
    int64_t alpha = 0;   // primitive root mod q, < q
    int64_t eps1 = 0;    // in {1, 2}
    int64_t eps2 = 0;    // in {0, 1}
    int64_t Q = 0;       // q^2 * frak_p
    int64_t r = 0;       // (1 + eps1 q)(alpha + eps2 q), coprime to Q
    bool r_composite = false;
    bool r_less_than_Q = false;
};

struct PrimeSelection {
    int64_t q = 0;
    int64_t p = 0;
    std::string method;      // "direct-search" or "linnik-progression"
    BigInt range_lo;         // floor(n^2 ln n)
    BigInt range_hi;         // floor((n^2 ln^2 n)^5.5), reporting precision
    bool beyond_window = false;  // p fell outside [range_lo, range_hi]
    std::optional<LinnikWitnesses> witnesses;
};

// Smallest prime p > n^2 ln n with p mod q primitive mod q. With relax set,
// a p beyond the (astronomical) upper window is returned flagged instead of
// rejected.
PrimeSelection select_p_direct(int64_t q, bool relax = false);

// The constructive route: prime frak_p in [4 ln n, 4 ln^2 n], primitive root
// alpha, eps choices making r coprime to Q = q^2 frak_p, then the least prime
// in the progression {r + kQ}. Throws NoPrimeInWindow when the frak_p window
// is empty.
PrimeSelection select_p_linnik(int64_t q);

}  // namespace circ
