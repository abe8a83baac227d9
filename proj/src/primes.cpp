#include "circulattice/primes.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "circulattice/errors.hpp"

namespace circ {

bool is_primitive(int64_t a, int64_t q) {
    a %= q;
    if (a < 0) a += q;
    if (a == 0) throw std::domain_error("is_primitive: a divisible by q");
    return mult_order(a, q) == q - 1;
}

std::optional<int64_t> least_prime_in_range(int64_t lo, int64_t hi) {
    for (int64_t v = std::max<int64_t>(lo, 2); v <= hi; ++v)
        if (is_prime_u64(static_cast<uint64_t>(v))) return v;
    return std::nullopt;
}

static BigInt floor_of(long double x) {
    if (x < 1) return 0;
    // Good to ~18 significant digits; these bounds are reporting values.
    char buf[64];
    snprintf(buf, sizeof buf, "%.0Lf", floorl(x));
    return BigInt(buf);
}

static void fill_window(PrimeSelection& sel, int64_t q) {
    long double n = 2.0L * static_cast<long double>(q);
    long double lo = n * n * logl(n);
    long double hi = powl(n * n * logl(n) * logl(n), 5.5L);
    sel.range_lo = floor_of(lo);
    sel.range_hi = floor_of(hi);
}

PrimeSelection select_p_direct(int64_t q, bool relax) {
    if (q < 3 || !is_prime_u64(static_cast<uint64_t>(q)))
        throw std::domain_error("select_p_direct: q must be an odd prime >= 3");
    PrimeSelection sel;
    sel.q = q;
    sel.method = "direct-search";
    fill_window(sel, q);

    int64_t start = static_cast<int64_t>(sel.range_lo) + 1;
    for (int64_t p = start;; ++p) {
        if (!is_prime_u64(static_cast<uint64_t>(p))) continue;
        if (p % q == 0) continue;
        if (!is_primitive(p % q, q)) continue;
        sel.p = p;
        break;
    }
    if (BigInt(sel.p) > sel.range_hi) {
        if (!relax) throw std::runtime_error("select_p_direct: no prime inside window");
        sel.beyond_window = true;
    }
    return sel;
}

PrimeSelection select_p_linnik(int64_t q) {
    if (q < 3 || !is_prime_u64(static_cast<uint64_t>(q)))
        throw std::domain_error("select_p_linnik: q must be an odd prime >= 3");
    PrimeSelection sel;
    sel.q = q;
    sel.method = "linnik-progression";
    fill_window(sel, q);

    long double n = 2.0L * static_cast<long double>(q);
    int64_t wlo = static_cast<int64_t>(ceill(4.0L * logl(n)));
    int64_t whi = static_cast<int64_t>(floorl(4.0L * logl(n) * logl(n)));
    auto fp = least_prime_in_range(wlo, whi);
    if (!fp)
        throw NoPrimeInWindow("select_p_linnik: no prime in [4 ln n, 4 ln^2 n] for q=" +
                              std::to_string(q));

    LinnikWitnesses w;
    w.frak_p = *fp;
    for (int64_t a = 2; a < q; ++a) {
        if (is_primitive(a, q)) {
            w.alpha = a;
            break;
        }
    }
    if (w.alpha == 0) throw std::logic_error("no primitive root below q");

    bool found = false;
    for (int64_t e1 = 1; e1 <= 2 && !found; ++e1) {
        for (int64_t e2 = 0; e2 <= 1 && !found; ++e2) {
            int64_t r = (1 + e1 * q) * (w.alpha + e2 * q);
            if (std::gcd(r, w.frak_p) == 1) {
                w.eps1 = e1;
                w.eps2 = e2;
                w.r = r;
                found = true;
            }
        }
    }
    if (!found) throw std::logic_error("no eps choice coprime to frak_p");

    w.Q = q * q * w.frak_p;
    if (std::gcd(w.r, w.Q) != 1) throw std::logic_error("r not coprime to Q");
    w.r_composite = !is_prime_u64(static_cast<uint64_t>(w.r));
    w.r_less_than_Q = w.r < w.Q;

    for (int64_t p = w.r;; p += w.Q) {
        if (p >= 2 && is_prime_u64(static_cast<uint64_t>(p))) {
            sel.p = p;
            break;
        }
    }

    // Postconditions of the construction.
    if (sel.p % w.Q != w.r % w.Q) throw std::logic_error("p != r mod Q");
    if (sel.p % q != w.alpha % q) throw std::logic_error("p != alpha mod q");
    if (!is_primitive(sel.p % q, q)) throw std::logic_error("p mod q not primitive");
    if (w.r_composite && w.r_less_than_Q && sel.p <= w.Q)
        throw std::logic_error("expected p > Q for composite r < Q");
    sel.witnesses = w;
    sel.beyond_window = BigInt(sel.p) < sel.range_lo || BigInt(sel.p) > sel.range_hi;
    return sel;
}

}  // namespace circ
