#include "circulattice/modp.hpp"

#include <limits>
#include <stdexcept>

namespace circ {

Params Params::make(int64_t q, int64_t p) {
    if (q < 3 || q % 2 == 0 || !is_prime_u64(static_cast<uint64_t>(q)))
        throw std::domain_error("Params: q must be an odd prime >= 3");
    if (p < 3 || p % 2 == 0 || !is_prime_u64(static_cast<uint64_t>(p)))
        throw std::domain_error("Params: p must be an odd prime >= 3");
    if (p == q) throw std::domain_error("Params: p and q must be distinct");
    Params pr;
    pr.q = q;
    pr.p = p;
    pr.n = 2 * q;
    // Coordinates are machine words; make sure n * ((p-1)/2)^2 cannot overflow.
    int64_t h = pr.half();
    if (h != 0 && h > std::numeric_limits<int64_t>::max() / (pr.n * h))
        throw std::domain_error("Params: p too large for exact word-size norms");
    return pr;
}

FpVector FpVector::zero(const Params& pr) {
    FpVector v;
    v.params = &pr;
    v.coords.assign(static_cast<size_t>(pr.n), 0);
    v.norm_sq = 0;
    return v;
}

FpVector FpVector::from_values(const Params& pr, std::span<const int64_t> vals) {
    if (vals.size() != static_cast<size_t>(pr.n))
        throw std::invalid_argument("FpVector: expected n coordinates");
    FpVector v;
    v.params = &pr;
    v.coords.resize(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) v.coords[i] = centered_lift(vals[i], pr.p);
    v.norm_sq = norm_sq_span(v.coords);
    return v;
}

static void require_same_params(const FpVector& x, const FpVector& y) {
    if (x.params == nullptr || y.params == nullptr || x.params->p != y.params->p ||
        x.params->q != y.params->q)
        throw std::invalid_argument("FpVector: mismatched Params");
}

FpVector vec_add(const FpVector& x, const FpVector& y) {
    require_same_params(x, y);
    FpVector r;
    r.params = x.params;
    r.coords.resize(x.coords.size());
    for (size_t i = 0; i < x.coords.size(); ++i)
        r.coords[i] = centered_lift(x.coords[i] + y.coords[i], x.params->p);
    r.norm_sq = norm_sq_span(r.coords);
    return r;
}

FpVector vec_neg(const FpVector& x) {
    FpVector r = x;
    for (auto& c : r.coords) c = -c;  // centered range is symmetric
    return r;
}

FpVector scalar_mul(int64_t k, const FpVector& x) {
    FpVector r;
    r.params = x.params;
    r.coords.resize(x.coords.size());
    int64_t kc = centered_lift(k, x.params->p);
    for (size_t i = 0; i < x.coords.size(); ++i)
        r.coords[i] = centered_lift(kc * x.coords[i], x.params->p);
    r.norm_sq = norm_sq_span(r.coords);
    return r;
}

uint64_t odometer_index(std::span<const int64_t> digits, int64_t p) {
    int64_t h = (p - 1) / 2;
    uint64_t idx = 0;
    for (int64_t d : digits) idx = idx * static_cast<uint64_t>(p) + static_cast<uint64_t>(d + h);
    return idx;
}

void odometer_vector(uint64_t index, size_t m, int64_t p, std::span<int64_t> out) {
    int64_t h = (p - 1) / 2;
    for (size_t i = m; i-- > 0;) {
        out[i] = static_cast<int64_t>(index % static_cast<uint64_t>(p)) - h;
        index /= static_cast<uint64_t>(p);
    }
}

bool odometer_next(std::span<int64_t> digits, int64_t p) {
    int64_t h = (p - 1) / 2;
    for (size_t i = digits.size(); i-- > 0;) {
        if (digits[i] < h) {
            ++digits[i];
            return true;
        }
        digits[i] = -h;
    }
    return false;
}

}  // namespace circ
