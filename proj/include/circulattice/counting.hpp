#pragma once

// Exact lattice-point counting in balls, the type-1/type-2 censuses, ball
// volumes, and the first-moment bound. Counts are arbitrary-precision
// integers; bounds and expectations are exact rationals. Floating point only
// appears in volumes and reported ratios.

#include <cstdint>
#include <vector>

#include "circulattice/arith.hpp"
#include "circulattice/modp.hpp"

namespace circ {

// The density constant (2 - 1/e) / (2 + e^2 pi) ~ 0.0647.
double density_constant();
// The optimizer t = (2 e pi)^{-1} behind the e^2 pi / (2p) coefficient.
double type2_t_constant();

double ball_volume(int64_t n, double d);
double log_ball_volume(int64_t n, double d);

struct RhoResult {
    double exact = 0;   // radius with vol S_n(rho) = p^{n/2}, closed form
    double approx = 0;  // sqrt(p n / (2 e pi))
    double ratio = 0;   // exact / approx
};
RhoResult rho(int64_t n, int64_t p);

// #{x in F_p^n centered : |x|^2 <= d_sq}; digits capped at (p-1)/2, so this
// is defined for every d_sq including whole-space budgets.
BigInt fp_ball_count(int64_t n, int64_t p, int64_t d_sq);

struct BallCount {
    int64_t n = 0, p = 0, d_sq = 0;
    BigInt count;
    double vol_lo = 0;  // vol S_n(d - sqrt(n)/2), clamped at 0
    double vol_hi = 0;  // vol S_n(d + sqrt(n)/2)
};

// The d < p/2 regime where the field count equals |Z^n ∩ S_n(d)|; outside it
// throws RegimeViolation.
BallCount ball_count(int64_t n, int64_t p, int64_t d_sq);

struct Type1Count {
    BigInt count;       // #{(alpha,beta) centered : q(alpha^2+beta^2) <= w_sq}
    BigInt beta_nonzero;  // same with beta != 0 (the pairs with positive probability)
    double disc_bound = 0;  // pi (w sqrt(2/n) + sqrt(2))^2
    bool w_below_half_p = false;
};
Type1Count count_type1(const Params& pr, int64_t w_sq);

// #{x : both half coordinate-sums are 0 mod p, |x|^2 <= w_sq}.
BigInt count_type2(const Params& pr, int64_t w_sq);

// Per-half point counts by (squared norm, coordinate sum mod p), the shared
// table behind count_type2 and the expectation terms.
class HalfTable {
  public:
    HalfTable(const Params& pr, int64_t w_max);
    const BigInt& pt(int64_t s, int64_t sigma) const;  // exact norm s, sum sigma
    BigInt all_pt(int64_t s) const;
    BigInt zero_sum_pt(int64_t s) const;
    // nonconstant with nonzero sum (the "unit right half" class)
    BigInt unit_pt(int64_t s) const;
    int64_t w_max() const { return w_max_; }

  private:
    const Params* params_;
    int64_t w_max_;
    std::vector<BigInt> table_;  // (w_max+1) x p
};

struct MomentBound {
    int64_t w_sq = 0;
    BigInt n1, n2, ball;
    BigRat exact_expectation;  // E[X'(w)], grouped closed form
    BigRat paper_bound;        // (N1-1)/2p + (N2-1) p^{1-n/2}/n + |B| p^{-n/2}/n
    BigRat term_type1, term_type2, term_unit;  // the three exact terms
    bool in_regime = false;    // 4 w_sq < p^2
};

// Requires p primitive mod q (two-code regime); throws NotTwoCodeRegime
// otherwise.
MomentBound moment_bound(const Params& pr, int64_t w_sq);

}  // namespace circ
