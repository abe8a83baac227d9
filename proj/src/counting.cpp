#include "circulattice/counting.hpp"

#include <cmath>
#include <stdexcept>

#include "circulattice/errors.hpp"
#include "circulattice/primes.hpp"

namespace circ {

double density_constant() {
    return (2.0 - 1.0 / M_E) / (2.0 + M_E * M_E * M_PI);
}

double type2_t_constant() { return 1.0 / (2.0 * M_E * M_PI); }

double log_ball_volume(int64_t n, double d) {
    if (n < 1) throw std::domain_error("log_ball_volume: n >= 1");
    if (d <= 0) return -HUGE_VAL;
    double nn = static_cast<double>(n);
    return 0.5 * nn * std::log(M_PI) - std::lgamma(0.5 * nn + 1.0) + nn * std::log(d);
}

double ball_volume(int64_t n, double d) {
    if (d <= 0) return 0.0;
    return std::exp(log_ball_volume(n, d));
}

RhoResult rho(int64_t n, int64_t p) {
    RhoResult r;
    double nn = static_cast<double>(n);
    // n log rho = (n/2) log p - log vol S_n(1)
    double log_unit = 0.5 * nn * std::log(M_PI) - std::lgamma(0.5 * nn + 1.0);
    r.exact = std::exp((0.5 * nn * std::log(static_cast<double>(p)) - log_unit) / nn);
    r.approx = std::sqrt(static_cast<double>(p) * nn / (2.0 * M_E * M_PI));
    r.ratio = r.exact / r.approx;
    return r;
}

namespace {

void check_dp_size(int64_t entries) {
    if (entries > 50'000'000) throw BudgetExceeded("counting: DP table too large");
}

}  // namespace

BigInt fp_ball_count(int64_t n, int64_t p, int64_t d_sq) {
    if (n < 1 || d_sq < 0) throw std::domain_error("fp_ball_count: bad arguments");
    check_dp_size((d_sq + 1));
    const int64_t h = (p - 1) / 2;
    std::vector<BigInt> pt(static_cast<size_t>(d_sq) + 1, BigInt(0));
    pt[0] = 1;
    for (int64_t coord = 0; coord < n; ++coord) {
        std::vector<BigInt> next(pt.size(), BigInt(0));
        for (int64_t s = 0; s <= d_sq; ++s) {
            if (pt[static_cast<size_t>(s)] == 0) continue;
            int64_t cmax = std::min(h, isqrt_i64(d_sq - s));
            for (int64_t c = -cmax; c <= cmax; ++c)
                next[static_cast<size_t>(s + c * c)] += pt[static_cast<size_t>(s)];
        }
        pt = std::move(next);
    }
    BigInt total = 0;
    for (const BigInt& v : pt) total += v;
    return total;
}

BallCount ball_count(int64_t n, int64_t p, int64_t d_sq) {
    if (4 * d_sq >= p * p)
        throw RegimeViolation("ball_count: requires d < p/2 (4 d_sq < p^2)");
    BallCount bc;
    bc.n = n;
    bc.p = p;
    bc.d_sq = d_sq;
    bc.count = fp_ball_count(n, p, d_sq);
    double d = std::sqrt(static_cast<double>(d_sq));
    double half_diag = 0.5 * std::sqrt(static_cast<double>(n));
    bc.vol_lo = d > half_diag ? ball_volume(n, d - half_diag) : 0.0;
    bc.vol_hi = ball_volume(n, d + half_diag);
    return bc;
}

Type1Count count_type1(const Params& pr, int64_t w_sq) {
    Type1Count t;
    t.count = 0;
    t.beta_nonzero = 0;
    const int64_t q = pr.q, h = pr.half();
    for (int64_t alpha = -h; alpha <= h; ++alpha) {
        int64_t rem = w_sq - q * alpha * alpha;
        if (rem < 0) continue;
        int64_t bmax = std::min(h, isqrt_i64(rem / q));
        t.count += 2 * bmax + 1;
        t.beta_nonzero += 2 * bmax;
    }
    double w = std::sqrt(static_cast<double>(w_sq));
    double r = w * std::sqrt(2.0 / static_cast<double>(pr.n)) + std::sqrt(2.0);
    t.disc_bound = M_PI * r * r;
    t.w_below_half_p = w_sq < h * h;
    return t;
}

HalfTable::HalfTable(const Params& pr, int64_t w_max) : params_(&pr), w_max_(w_max) {
    const int64_t q = pr.q, p = pr.p, h = pr.half();
    check_dp_size((w_max + 1) * p);
    table_.assign(static_cast<size_t>((w_max + 1) * p), BigInt(0));
    auto at = [&](std::vector<BigInt>& tab, int64_t s, int64_t sig) -> BigInt& {
        return tab[static_cast<size_t>(s * p + sig)];
    };
    std::vector<BigInt> cur(table_.size(), BigInt(0));
    at(cur, 0, 0) = 1;
    for (int64_t coord = 0; coord < q; ++coord) {
        std::vector<BigInt> next(table_.size(), BigInt(0));
        for (int64_t s = 0; s <= w_max; ++s) {
            for (int64_t sig = 0; sig < p; ++sig) {
                const BigInt& v = at(cur, s, sig);
                if (v == 0) continue;
                int64_t cmax = std::min(h, isqrt_i64(w_max - s));
                for (int64_t c = -cmax; c <= cmax; ++c) {
                    int64_t nsig = (sig + c) % p;
                    if (nsig < 0) nsig += p;
                    at(next, s + c * c, nsig) += v;
                }
            }
        }
        cur = std::move(next);
    }
    table_ = std::move(cur);
}

const BigInt& HalfTable::pt(int64_t s, int64_t sigma) const {
    return table_[static_cast<size_t>(s * params_->p + sigma)];
}

BigInt HalfTable::all_pt(int64_t s) const {
    BigInt tot = 0;
    for (int64_t sig = 0; sig < params_->p; ++sig) tot += pt(s, sig);
    return tot;
}

BigInt HalfTable::zero_sum_pt(int64_t s) const { return pt(s, 0); }

BigInt HalfTable::unit_pt(int64_t s) const {
    // nonconstant, nonzero sum = all - (sum zero) - (nonzero constants).
    BigInt v = all_pt(s) - zero_sum_pt(s);
    const int64_t q = params_->q, h = params_->half();
    if (s > 0 && s % q == 0) {
        int64_t c2 = s / q;
        int64_t c = isqrt_i64(c2);
        if (c * c == c2 && c <= h) v -= 2;  // +-c constant halves
    }
    return v;
}

BigInt count_type2(const Params& pr, int64_t w_sq) {
    const int64_t half_cap = pr.q * pr.half() * pr.half();
    const int64_t wh = std::min(w_sq, half_cap);
    HalfTable ht(pr, wh);
    // cum_zero[s] = # halves with sum 0 and norm <= s
    std::vector<BigInt> cum(static_cast<size_t>(wh) + 1);
    BigInt acc = 0;
    for (int64_t s = 0; s <= wh; ++s) {
        acc += ht.zero_sum_pt(s);
        cum[static_cast<size_t>(s)] = acc;
    }
    BigInt total = 0;
    for (int64_t s = 0; s <= wh; ++s) {
        const BigInt& left = ht.zero_sum_pt(s);
        if (left == 0) continue;
        total += left * cum[static_cast<size_t>(std::min(w_sq - s, wh))];
    }
    return total;
}

MomentBound moment_bound(const Params& pr, int64_t w_sq) {
    if (pr.p % pr.q == 0 || !is_primitive(pr.p % pr.q, pr.q))
        throw NotTwoCodeRegime("moment_bound: p is not primitive mod q");
    MomentBound mb;
    mb.w_sq = w_sq;
    mb.in_regime = 4 * w_sq < pr.p * pr.p;

    const int64_t q = pr.q, p = pr.p, n = pr.n;
    const int64_t half_cap = q * pr.half() * pr.half();
    const int64_t w = std::min(w_sq, 2 * half_cap);

    Type1Count t1 = count_type1(pr, w);
    mb.n1 = t1.count;

    const int64_t wh = std::min(w, half_cap);
    HalfTable ht(pr, wh);
    std::vector<BigInt> cum_all(static_cast<size_t>(wh) + 1), cum_zero(static_cast<size_t>(wh) + 1),
        cum_unit(static_cast<size_t>(wh) + 1);
    BigInt aa = 0, zz = 0, uu = 0;
    for (int64_t s = 0; s <= wh; ++s) {
        aa += ht.all_pt(s);
        zz += ht.zero_sum_pt(s);
        uu += ht.unit_pt(s);
        cum_all[static_cast<size_t>(s)] = aa;
        cum_zero[static_cast<size_t>(s)] = zz;
        cum_unit[static_cast<size_t>(s)] = uu;
    }
    auto cum_at = [&](const std::vector<BigInt>& cum, int64_t s) -> const BigInt& {
        return cum[static_cast<size_t>(std::min(s, wh))];
    };

    BigInt n2 = 0, ball = 0, unit_pairs = 0;
    for (int64_t s = 0; s <= wh; ++s) {
        BigInt ap = ht.all_pt(s);
        BigInt zp = ht.zero_sum_pt(s);
        BigInt up = ht.unit_pt(s);
        if (ap != 0) ball += ap * cum_at(cum_all, w - s);
        if (zp != 0) n2 += zp * cum_at(cum_zero, w - s);
        if (up != 0) unit_pairs += up * cum_at(cum_all, w - s);  // x_R unit, x_L anything
    }
    mb.n2 = n2;
    mb.ball = ball;

    const BigInt pq1 = bigint_pow(BigInt(p), static_cast<uint64_t>(q - 1));
    const BigInt pq = pq1 * p;

    // Exact expectation E[X'(w)] grouped by the class of the right half.
    mb.term_type1 = BigRat(t1.beta_nonzero, BigInt(2 * p));
    mb.term_type2 = BigRat(n2 - cum_at(cum_zero, w), BigInt(n) * pq1);
    mb.term_unit = BigRat(unit_pairs, BigInt(n) * pq);
    mb.exact_expectation = mb.term_type1 + mb.term_type2 + mb.term_unit;

    mb.paper_bound = BigRat(mb.n1 - 1, BigInt(2 * p)) + BigRat(mb.n2 - 1, BigInt(n) * pq1) +
                     BigRat(mb.ball, BigInt(n) * pq);
    return mb;
}

}  // namespace circ
