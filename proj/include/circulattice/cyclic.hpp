#pragma once

// The ring R = F_p[Z]/(Z^q - 1), cyclic codes of length q, and the
// factorization structure of Z^q - 1 over F_p.

#include <cstdint>
#include <span>
#include <vector>

#include "circulattice/arith.hpp"
#include "circulattice/modp.hpp"

namespace circ {

// Dense polynomial over F_p with centered coefficients, coeffs[i] on Z^i,
// trimmed so the leading coefficient is nonzero (zero poly = empty vector).
using Poly = std::vector<int64_t>;

int poly_deg(const Poly& f);  // -1 for the zero polynomial
Poly poly_trim(Poly f);
Poly poly_mul(const Poly& u, const Poly& v, int64_t p);
// Remainder of num by den (den nonzero). Exact division over F_p.
Poly poly_rem(Poly num, const Poly& den, int64_t p);
Poly poly_make_monic(Poly f, int64_t p);
Poly poly_gcd(Poly u, Poly v, int64_t p);  // monic, gcd(0,0) = 0
Poly zq_minus_one(int64_t q);

// Element of R, exactly q centered coefficients (u_0, ..., u_{q-1}).
struct RingElement {
    const Params* params = nullptr;
    std::vector<int64_t> coeffs;

    static RingElement from_values(const Params& pr, std::span<const int64_t> vals);
    static RingElement zero(const Params& pr);
    static RingElement one(const Params& pr);
    bool is_zero() const;
    bool operator==(const RingElement& o) const { return coeffs == o.coeffs; }
};

RingElement ring_add(const RingElement& u, const RingElement& v);
// u(Z) v(Z) mod (Z^q - 1, p), centered coefficients.
RingElement ring_mul(const RingElement& u, const RingElement& v);

// The ideal generated by some u(Z) in R, represented by the monic generator
// g = gcd(u, Z^q - 1). The zero code carries g = Z^q - 1.
struct CyclicCode {
    const Params* params = nullptr;
    Poly generator;  // monic divisor of Z^q - 1
    int64_t dimension = 0;
    BigInt cardinality;

    bool operator==(const CyclicCode& o) const { return generator == o.generator; }
};

CyclicCode cyclic_code_of(const RingElement& u);
CyclicCode code_from_generator(const Params& pr, Poly g);
bool code_contains(const CyclicCode& c, const RingElement& x);

// Irreducible monic factors of Z^q - 1 over F_p. The factor degrees are the
// cyclotomic coset sizes: (Z-1) plus (q-1)/m factors of degree
// m = ord_q(p mod q). Equal-degree splitting is randomized internally but
// seeded, so the result is deterministic (sorted by coefficient sequence).
std::vector<Poly> factor_zq_minus_one(const Params& pr);

// Number of irreducible factors, from the coset structure alone.
int64_t factor_count_zq_minus_one(int64_t q, int64_t p);

// All cyclic codes of length q except {0} and F_p^q, one per monic divisor of
// Z^q - 1. Throws BudgetExceeded if there are more than 2^20 divisors.
std::vector<CyclicCode> nontrivial_cyclic_codes(const Params& pr);

}  // namespace circ
