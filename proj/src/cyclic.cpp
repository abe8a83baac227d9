#include "circulattice/cyclic.hpp"

#include <algorithm>
#include <stdexcept>

#include "circulattice/errors.hpp"

namespace circ {

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

static int64_t inv_mod(int64_t a, int64_t p) {
    a = centered_lift(a, p);
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("inverse of 0 mod p");
    return static_cast<int64_t>(powmod_u64(static_cast<uint64_t>(a), static_cast<uint64_t>(p - 2),
                                           static_cast<uint64_t>(p)));
}

Poly poly_mul(const Poly& u, const Poly& v, int64_t p) {
    if (u.empty() || v.empty()) return {};
    Poly out(u.size() + v.size() - 1, 0);
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        for (size_t j = 0; j < v.size(); ++j)
            out[i + j] = centered_lift(out[i + j] + u[i] * v[j], p);
    }
    return poly_trim(std::move(out));
}

Poly poly_rem(Poly num, const Poly& den, int64_t p) {
    num = poly_trim(std::move(num));
    if (den.empty()) throw std::domain_error("poly_rem by zero");
    int64_t lead_inv = inv_mod(den.back(), p);
    while (num.size() >= den.size()) {
        int64_t factor = centered_lift(num.back() * lead_inv, p);
        size_t shift = num.size() - den.size();
        if (factor != 0) {
            for (size_t i = 0; i < den.size(); ++i)
                num[shift + i] = centered_lift(num[shift + i] - factor * den[i], p);
        }
        num.pop_back();
        num = poly_trim(std::move(num));
        if (num.empty()) break;
    }
    return num;
}

Poly poly_make_monic(Poly f, int64_t p) {
    f = poly_trim(std::move(f));
    if (f.empty()) return f;
    int64_t li = inv_mod(f.back(), p);
    for (auto& c : f) c = centered_lift(c * li, p);
    return f;
}

Poly poly_gcd(Poly u, Poly v, int64_t p) {
    u = poly_trim(std::move(u));
    v = poly_trim(std::move(v));
    while (!v.empty()) {
        Poly r = poly_rem(u, v, p);
        u = std::move(v);
        v = std::move(r);
    }
    return poly_make_monic(std::move(u), p);
}

Poly zq_minus_one(int64_t q) {
    Poly f(static_cast<size_t>(q) + 1, 0);
    f[0] = -1;
    f[static_cast<size_t>(q)] = 1;
    return f;
}

RingElement RingElement::from_values(const Params& pr, std::span<const int64_t> vals) {
    if (vals.size() != static_cast<size_t>(pr.q))
        throw std::invalid_argument("RingElement: expected q coefficients");
    RingElement u;
    u.params = &pr;
    u.coeffs.resize(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) u.coeffs[i] = centered_lift(vals[i], pr.p);
    return u;
}

RingElement RingElement::zero(const Params& pr) {
    RingElement u;
    u.params = &pr;
    u.coeffs.assign(static_cast<size_t>(pr.q), 0);
    return u;
}

RingElement RingElement::one(const Params& pr) {
    RingElement u = zero(pr);
    u.coeffs[0] = 1;
    return u;
}

bool RingElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int64_t c) { return c == 0; });
}

static void require_same(const RingElement& u, const RingElement& v) {
    if (u.params == nullptr || v.params == nullptr || u.params->p != v.params->p ||
        u.params->q != v.params->q)
        throw std::invalid_argument("RingElement: mismatched Params");
}

RingElement ring_add(const RingElement& u, const RingElement& v) {
    require_same(u, v);
    RingElement r = u;
    for (size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = centered_lift(u.coeffs[i] + v.coeffs[i], u.params->p);
    return r;
}

RingElement ring_mul(const RingElement& u, const RingElement& v) {
    require_same(u, v);
    const int64_t q = u.params->q, p = u.params->p;
    RingElement r = RingElement::zero(*u.params);
    std::vector<int64_t> acc(static_cast<size_t>(q), 0);
    for (int64_t i = 0; i < q; ++i) {
        if (u.coeffs[static_cast<size_t>(i)] == 0) continue;
        for (int64_t j = 0; j < q; ++j) {
            int64_t k = i + j;
            if (k >= q) k -= q;
            acc[static_cast<size_t>(k)] = centered_lift(
                acc[static_cast<size_t>(k)] +
                    u.coeffs[static_cast<size_t>(i)] * v.coeffs[static_cast<size_t>(j)],
                p);
        }
    }
    r.coeffs = std::move(acc);
    return r;
}

CyclicCode code_from_generator(const Params& pr, Poly g) {
    CyclicCode c;
    c.params = &pr;
    c.generator = poly_make_monic(std::move(g), pr.p);
    c.dimension = pr.q - poly_deg(c.generator);
    c.cardinality = bigint_pow(BigInt(pr.p), static_cast<uint64_t>(c.dimension));
    return c;
}

CyclicCode cyclic_code_of(const RingElement& u) {
    const Params& pr = *u.params;
    Poly up = poly_trim(u.coeffs);
    Poly g = up.empty() ? zq_minus_one(pr.q) : poly_gcd(up, zq_minus_one(pr.q), pr.p);
    return code_from_generator(pr, std::move(g));
}

bool code_contains(const CyclicCode& c, const RingElement& x) {
    if (c.params->p != x.params->p || c.params->q != x.params->q)
        throw std::invalid_argument("code_contains: mismatched Params");
    Poly xr = poly_trim(x.coeffs);
    if (xr.empty()) return true;
    return poly_rem(std::move(xr), c.generator, c.params->p).empty();
}

int64_t factor_count_zq_minus_one(int64_t q, int64_t p) {
    return 1 + (q - 1) / mult_order(p % q, q);
}

// Modular polynomial helpers for equal-degree splitting.
static Poly poly_mulmod(const Poly& u, const Poly& v, const Poly& f, int64_t p) {
    return poly_rem(poly_mul(u, v, p), f, p);
}

static Poly poly_powmod(Poly base, BigInt exp, const Poly& f, int64_t p) {
    Poly acc{1};
    base = poly_rem(std::move(base), f, p);
    while (exp > 0) {
        if ((exp & 1) != 0) acc = poly_mulmod(acc, base, f, p);
        base = poly_mulmod(base, base, f, p);
        exp >>= 1;
    }
    return acc;
}

// Cantor-Zassenhaus equal-degree splitting: f is a squarefree product of
// irreducibles all of degree m. Recurses until fully split.
static void equal_degree_split(const Poly& f, int64_t m, int64_t p, SplitMix64& rng,
                               std::vector<Poly>& out) {
    if (poly_deg(f) == static_cast<int>(m)) {
        out.push_back(f);
        return;
    }
    const BigInt e = (bigint_pow(BigInt(p), static_cast<uint64_t>(m)) - 1) / 2;
    for (;;) {
        Poly r(static_cast<size_t>(poly_deg(f)), 0);
        for (auto& c : r)
            c = centered_lift(static_cast<int64_t>(rng.next_below(static_cast<uint64_t>(p))), p);
        r = poly_trim(std::move(r));
        if (poly_deg(r) < 1) continue;
        Poly g = poly_gcd(r, f, p);
        if (poly_deg(g) <= 0 || poly_deg(g) >= poly_deg(f)) {
            Poly s = poly_powmod(r, e, f, p);
            if (s.empty())
                s = Poly{-1};
            else
                s[0] = centered_lift(s[0] - 1, p);
            g = poly_gcd(s, f, p);
        }
        if (poly_deg(g) > 0 && poly_deg(g) < poly_deg(f)) {
            Poly h = poly_make_monic(
                [&] {
                    // f / g, exact
                    Poly quot;
                    Poly num = f;
                    int64_t li = inv_mod(g.back(), p);
                    quot.assign(num.size() - g.size() + 1, 0);
                    while (num.size() >= g.size()) {
                        int64_t factor = centered_lift(num.back() * li, p);
                        size_t shift = num.size() - g.size();
                        quot[shift] = factor;
                        for (size_t i = 0; i < g.size(); ++i)
                            num[shift + i] = centered_lift(num[shift + i] - factor * g[i], p);
                        num.pop_back();
                        num = poly_trim(std::move(num));
                        if (num.empty()) break;
                    }
                    return quot;
                }(),
                p);
            equal_degree_split(g, m, p, rng, out);
            equal_degree_split(h, m, p, rng, out);
            return;
        }
    }
}

std::vector<Poly> factor_zq_minus_one(const Params& pr) {
    const int64_t q = pr.q, p = pr.p;
    std::vector<Poly> factors;
    factors.push_back(Poly{-1, 1});  // Z - 1
    Poly h(static_cast<size_t>(q), 1);  // 1 + Z + ... + Z^{q-1}
    int64_t m = mult_order(p % q, q);
    if (m == q - 1) {
        factors.push_back(std::move(h));
    } else {
        SplitMix64 rng(0x5eedc0de00000001ULL ^ static_cast<uint64_t>(q * 1000003 + p));
        equal_degree_split(h, m, p, rng, factors);
    }
    std::sort(factors.begin(), factors.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return factors;
}

std::vector<CyclicCode> nontrivial_cyclic_codes(const Params& pr) {
    std::vector<Poly> factors = factor_zq_minus_one(pr);
    size_t k = factors.size();
    if (k > 20) throw BudgetExceeded("nontrivial_cyclic_codes: too many divisors to enumerate");
    std::vector<CyclicCode> out;
    // All nonempty proper subsets of the factor set, in bitmask order.
    for (uint64_t mask = 1; mask + 1 < (uint64_t{1} << k); ++mask) {
        Poly g{1};
        for (size_t i = 0; i < k; ++i)
            if (mask & (uint64_t{1} << i)) g = poly_mul(g, factors[i], pr.p);
        out.push_back(code_from_generator(pr, std::move(g)));
    }
    return out;
}

}  // namespace circ
