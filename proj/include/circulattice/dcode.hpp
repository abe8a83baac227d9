#pragma once

// Double circulant codes over F_p: the kernel of H = [I_q | A] with A a q x q
// circulant. Syndromes, membership, codeword enumeration and exact minimum
// norms. The fast minimum-norm path scans one representative per orbit of the
// group action, in increasing right-half norm; the plain odometer scan is
// kept as the reference implementation.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "circulattice/arith.hpp"
#include "circulattice/cyclic.hpp"
#include "circulattice/modp.hpp"

namespace circ {

struct DoubleCirculantCode {
    const Params* params = nullptr;
    std::vector<int64_t> a;  // first row of A, centered, length q

    static DoubleCirculantCode make(const Params& pr, std::span<const int64_t> first_row);
    // A[r][c] for the circulant built from a.
    int64_t circulant(int64_t r, int64_t c) const {
        int64_t q = params->q;
        return a[static_cast<size_t>(((c - r) % q + q) % q)];
    }
};

struct Syndrome {
    RingElement left;   // x_L
    RingElement right;  // x_R A^T
    RingElement total;  // left + right = x H^T
};

// Computes the right syndrome twice: by the circulant matrix action and as
// the ring product x_R(Z) * abar(Z) with abar = (a_1, a_q, ..., a_2). The two
// must agree; a mismatch throws.
Syndrome syndrome(const DoubleCirculantCode& code, const FpVector& x);

bool contains(const DoubleCirculantCode& code, const FpVector& x);

// Calls fn for each of the p^q codewords exactly once, x_R in odometer order
// with x_L = -x_R A^T. Throws BudgetExceeded if p^q > budget.
void enumerate_codewords(const DoubleCirculantCode& code, uint64_t budget,
                         const std::function<void(const FpVector&)>& fn);

// Precomputed orbit representatives of the nonzero right halves under
// {+-rotation}: one entry per orbit, sorted by (norm, least odometer index of
// any orbit element). Shared across all codes with the same (q, p).
class RepTable {
  public:
    RepTable(const Params& pr, uint64_t budget = 100'000'000);

    const Params& params() const { return *params_; }
    size_t size() const { return norms_.size(); }
    uint64_t word_count() const { return total_; }  // p^q
    int64_t norm_of(size_t i) const { return norms_[i]; }
    uint64_t min_index_of(size_t i) const { return min_idx_[i]; }
    std::span<const int64_t> digits_of(size_t i) const {
        return {digits_.data() + i * static_cast<size_t>(params_->q),
                static_cast<size_t>(params_->q)};
    }

  private:
    const Params* params_;
    uint64_t total_;
    std::vector<int64_t> digits_;   // flattened, size() * q
    std::vector<int64_t> norms_;
    std::vector<uint64_t> min_idx_;
};

struct MinNormResult {
    int64_t d2 = 0;
    std::vector<int64_t> witness;  // full 2q codeword, odometer-first minimizer
    uint64_t words_visited = 0;
};

// Exact minimum squared norm over nonzero codewords, orbit-reduced scan.
MinNormResult min_norm_sq(const DoubleCirculantCode& code, const RepTable& table);

// Value-only variant used in tight search loops.
int64_t min_norm_value(const DoubleCirculantCode& code, const RepTable& table,
                       uint64_t& words_visited);

// Reference implementation: plain odometer over all nonzero right halves.
MinNormResult min_norm_sq_serial(const DoubleCirculantCode& code, uint64_t budget = 100'000'000);

// Prob(x in C_rand) under a uniform first row: 1/|C(x_R)| if x_L lies in the
// cyclic code generated by x_R, else 0. Exact rational.
BigRat membership_probability(const FpVector& x);

DoubleCirculantCode random_code(const Params& pr, uint64_t seed);

}  // namespace circ
