#pragma once

// The action of G = Z/2Z x Z/qZ on F_p^{2q}: simultaneous right rotation of
// both halves, and global negation. Orbits have length 1, 2 or 2q.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "circulattice/modp.hpp"

namespace circ {

struct GroupElement {
    int sign = 0;      // Z/2Z part: 1 negates
    int64_t shift = 0; // Z/qZ part: right-rotates both halves, 0 <= shift < q
};

// out = g . x on raw coordinate arrays of length 2q.
void act_span(const GroupElement& g, std::span<const int64_t> x, int64_t q,
              std::span<int64_t> out);

FpVector act(const GroupElement& g, const FpVector& x);

struct OrbitClass {
    FpVector representative;  // lexicographically least orbit element
    int64_t length = 0;       // 1, 2 or 2q
};

OrbitClass orbit_of(const FpVector& x);

// Raw-kernel form: writes the lex-least orbit element into canon and returns
// the exact orbit length (number of distinct images under all 2n group
// elements).
int64_t canonicalize_span(std::span<const int64_t> x, int64_t q, std::span<int64_t> canon);

// True iff x is the lex-least element of its own orbit.
bool is_canonical_span(std::span<const int64_t> x, int64_t q);

enum class CensusStrategy { Auto, Sweep, Ball };

// Partitions {x in F_p^n : |x|^2 <= w_sq} into G-orbits and counts orbits per
// length. The sweep strategy walks all p^n vectors; the ball strategy
// enumerates only the ball by budgeted backtracking. Both count an orbit
// exactly once (at its canonical element), so the census is identical
// regardless of strategy or worker count.
std::map<int64_t, uint64_t> orbit_census(const Params& pr, int64_t w_sq,
                                         uint64_t budget = 10'000'000,
                                         int workers = 0,
                                         CensusStrategy strategy = CensusStrategy::Auto);

// Single-threaded reference implementation, kept for testing and benchmarks.
std::map<int64_t, uint64_t> orbit_census_serial(const Params& pr, int64_t w_sq,
                                                uint64_t budget = 10'000'000);

}  // namespace circ
