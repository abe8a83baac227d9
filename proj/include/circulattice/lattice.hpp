#pragma once

// Construction A: lift a double circulant code to the integer lattice of all
// vectors reducing into it mod p. Explicit block basis, exact determinant,
// optional Hermite normal form, an independent shortest-vector oracle and the
// packing-density report.

#include <cstdint>
#include <optional>
#include <vector>

#include "circulattice/arith.hpp"
#include "circulattice/counting.hpp"
#include "circulattice/dcode.hpp"
#include "circulattice/modp.hpp"

namespace circ {

using IntMatrix = std::vector<std::vector<int64_t>>;
using BigMatrix = std::vector<std::vector<BigInt>>;

struct LatticeBasis {
    Params params;
    std::vector<int64_t> a;  // code first row
    IntMatrix rows;          // 2q x 2q: [-A^T | I] over [pI | 0]
    BigInt det_abs;          // p^q, verified
    int64_t d_sq = 0;        // code minimum squared norm
    int64_t mu = 0;          // min(d_sq, p^2)
};

// d_sq may be supplied by the caller; otherwise it is recomputed by
// exhaustive codeword scan within the budget.
LatticeBasis construction_a(const DoubleCirculantCode& code,
                            std::optional<int64_t> d_sq = std::nullopt,
                            uint64_t budget = 100'000'000);

// |det| of a square integer matrix by fraction-free (Bareiss) elimination.
BigInt determinant_abs(const IntMatrix& rows);

// Row-span-preserving Hermite normal form: lower triangular, positive
// diagonal, entries below a pivot reduced into [0, pivot). Unique for a
// full-rank lattice.
BigMatrix hermite_normal_form(const IntMatrix& rows);

// Exact shortest nonzero squared norm among lattice vectors of norm^2 <=
// bound_sq, by coefficient enumeration over the basis with floating-point
// pruning and exact integer norms at the leaves. nullopt if the ball holds no
// nonzero vector.
std::optional<int64_t> sv_oracle(const IntMatrix& rows, int64_t bound_sq);

double zeta(int64_t n);  // direct series, remainder < 1e-15

struct DensityReport {
    int64_t mu = 0;
    BigInt det_abs;
    double delta = 0;       // vol S_n(sqrt(mu)/2) / det
    double log2_delta = 0;
    double delta_lb = 0;    // 2^-n |B_{n,p}(d)| p^{-(n-k)} (1 + sqrt(n)/(2d))^-n
    double ratio_minkowski = 0;  // delta / (2^{1-n} zeta(n))
    double ratio_cn = 0;         // delta / (c n 2^-n)
};

DensityReport density(const LatticeBasis& basis);

}  // namespace circ
