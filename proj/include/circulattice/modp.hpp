#pragma once

// Centered arithmetic modulo an odd prime p and the Euclidean norm on F_p^n.
// Coordinates are stored already centered in [-(p-1)/2, (p-1)/2] so norms are
// plain integer sums of squares, with no per-access lifting.

#include <cstdint>
#include <span>
#include <vector>

#include "circulattice/arith.hpp"

namespace circ {

// The parameter triple (q, p, n = 2q). Constructing one validates all
// primality and size requirements, so downstream code can take them for
// granted.
struct Params {
    int64_t q = 0;  // odd prime, length parameter
    int64_t p = 0;  // odd prime alphabet, p != q
    int64_t n = 0;  // = 2q

    static Params make(int64_t q, int64_t p);

    int64_t half() const { return (p - 1) / 2; }
    int64_t max_norm_sq() const { return n * half() * half(); }
    BigInt code_count() const { return bigint_pow(BigInt(p), static_cast<uint64_t>(q)); }
};

// The representative of z mod p in [-(p-1)/2, (p-1)/2]. p is assumed odd;
// Params::make is the place where bad p gets rejected.
inline int64_t centered_lift(int64_t z, int64_t p) {
    int64_t r = z % p;
    if (r < 0) r += p;
    if (r > (p - 1) / 2) r -= p;
    return r;
}

inline int64_t norm_sq_span(std::span<const int64_t> coords) {
    int64_t s = 0;
    for (int64_t c : coords) s += c * c;
    return s;
}

// A vector of F_p^n in centered representation, with its exact squared norm.
struct FpVector {
    const Params* params = nullptr;
    std::vector<int64_t> coords;
    int64_t norm_sq = 0;

    static FpVector zero(const Params& pr);
    // Lifts arbitrary integer entries into centered range.
    static FpVector from_values(const Params& pr, std::span<const int64_t> vals);

    bool is_zero() const { return norm_sq == 0; }
    std::span<const int64_t> left() const { return {coords.data(), static_cast<size_t>(params->q)}; }
    std::span<const int64_t> right() const {
        return {coords.data() + params->q, static_cast<size_t>(params->q)};
    }
    bool operator==(const FpVector& o) const { return coords == o.coords; }
};

FpVector vec_add(const FpVector& x, const FpVector& y);
FpVector vec_neg(const FpVector& x);
FpVector scalar_mul(int64_t k, const FpVector& x);

// Odometer order over F_p^m with centered digits: position 0 is the most
// significant digit and digit values are ranked -(p-1)/2 < ... < (p-1)/2,
// i.e. the index order is plain lexicographic order on the digit sequence.
uint64_t odometer_index(std::span<const int64_t> digits, int64_t p);
void odometer_vector(uint64_t index, size_t m, int64_t p, std::span<int64_t> out);
// Advances to the next vector; returns false after wrapping past the last one.
bool odometer_next(std::span<int64_t> digits, int64_t p);

}  // namespace circ
