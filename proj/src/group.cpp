#include "circulattice/group.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "circulattice/arith.hpp"
#include "circulattice/errors.hpp"

namespace circ {

void act_span(const GroupElement& g, std::span<const int64_t> x, int64_t q,
              std::span<int64_t> out) {
    const int64_t n = 2 * q;
    if (x.size() != static_cast<size_t>(n) || out.size() != static_cast<size_t>(n))
        throw std::invalid_argument("act_span: bad lengths");
    int64_t k = ((g.shift % q) + q) % q;
    const int64_t sgn = (g.sign & 1) ? -1 : 1;
    for (int64_t i = 0; i < q; ++i) {
        int64_t j = (i + k) % q;  // right rotation by k
        out[static_cast<size_t>(j)] = sgn * x[static_cast<size_t>(i)];
        out[static_cast<size_t>(q + j)] = sgn * x[static_cast<size_t>(q + i)];
    }
}

FpVector act(const GroupElement& g, const FpVector& x) {
    FpVector r = x;
    act_span(g, x.coords, x.params->q, r.coords);
    r.norm_sq = x.norm_sq;  // the action permutes and negates coordinates
    return r;
}

namespace {

// Visits all 2n images of x; returns orbit length and optionally the
// canonical (lex-least) image.
int64_t orbit_scan(std::span<const int64_t> x, int64_t q, std::vector<int64_t>* canon_out) {
    const int64_t n = 2 * q;
    std::vector<int64_t> img(static_cast<size_t>(n));
    std::vector<std::vector<int64_t>> seen;
    std::vector<int64_t> canon(x.begin(), x.end());
    for (int sign = 0; sign < 2; ++sign) {
        for (int64_t k = 0; k < q; ++k) {
            act_span(GroupElement{sign, k}, x, q, img);
            if (std::find(seen.begin(), seen.end(), img) == seen.end()) seen.push_back(img);
            if (std::lexicographical_compare(img.begin(), img.end(), canon.begin(), canon.end()))
                canon = img;
        }
    }
    if (canon_out) *canon_out = std::move(canon);
    return static_cast<int64_t>(seen.size());
}

}  // namespace

OrbitClass orbit_of(const FpVector& x) {
    OrbitClass oc;
    std::vector<int64_t> canon;
    oc.length = orbit_scan(x.coords, x.params->q, &canon);
    oc.representative = x;
    oc.representative.coords = std::move(canon);
    oc.representative.norm_sq = x.norm_sq;
    return oc;
}

int64_t canonicalize_span(std::span<const int64_t> x, int64_t q, std::span<int64_t> canon) {
    std::vector<int64_t> c;
    int64_t len = orbit_scan(x, q, &c);
    std::copy(c.begin(), c.end(), canon.begin());
    return len;
}

bool is_canonical_span(std::span<const int64_t> x, int64_t q) {
    const int64_t n = 2 * q;
    std::vector<int64_t> img(static_cast<size_t>(n));
    for (int sign = 0; sign < 2; ++sign) {
        for (int64_t k = 0; k < q; ++k) {
            act_span(GroupElement{sign, k}, x, q, img);
            if (std::lexicographical_compare(img.begin(), img.end(), x.begin(), x.end()))
                return false;
        }
    }
    return true;
}

namespace {

// Recursive ball enumeration: coordinates left to right, squared budget
// shrinking. Counts canonical elements only.
void ball_census_rec(std::vector<int64_t>& x, size_t pos, int64_t budget, const Params& pr,
                     std::map<int64_t, uint64_t>& census, uint64_t& visited, uint64_t cap) {
    if (pos == x.size()) {
        if (++visited > cap) throw BudgetExceeded("orbit_census: ball larger than budget");
        std::vector<int64_t> canon;
        if (is_canonical_span(x, pr.q)) {
            int64_t len = orbit_scan(x, pr.q, nullptr);
            ++census[len];
        }
        return;
    }
    int64_t h = std::min(pr.half(), isqrt_i64(budget));
    for (int64_t c = -h; c <= h; ++c) {
        x[pos] = c;
        ball_census_rec(x, pos + 1, budget - c * c, pr, census, visited, cap);
    }
    x[pos] = 0;
}

bool space_fits_u64(const Params& pr, uint64_t budget, uint64_t& total) {
    total = 1;
    for (int64_t i = 0; i < pr.n; ++i) {
        if (total > budget / static_cast<uint64_t>(pr.p) + 1) return false;
        total *= static_cast<uint64_t>(pr.p);
    }
    return total <= budget;
}

}  // namespace

std::map<int64_t, uint64_t> orbit_census(const Params& pr, int64_t w_sq, uint64_t budget,
                                         int workers, CensusStrategy strategy) {
    if (w_sq < 0) throw std::domain_error("orbit_census: negative radius");
    uint64_t total = 0;
    bool sweep_ok = space_fits_u64(pr, budget, total);
    if (strategy == CensusStrategy::Auto)
        strategy = sweep_ok ? CensusStrategy::Sweep : CensusStrategy::Ball;
    if (strategy == CensusStrategy::Ball) {
        std::map<int64_t, uint64_t> census;
        std::vector<int64_t> x(static_cast<size_t>(pr.n), 0);
        uint64_t visited = 0;
        ball_census_rec(x, 0, std::min(w_sq, pr.max_norm_sq()), pr, census, visited, budget);
        return census;
    }
    if (!sweep_ok) throw BudgetExceeded("orbit_census: p^n exceeds budget");

    const int nthreads = workers > 0 ? workers : omp_get_max_threads();
    std::vector<std::map<int64_t, uint64_t>> partial(static_cast<size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
    {
        const int tid = omp_get_thread_num();
        std::vector<int64_t> x(static_cast<size_t>(pr.n));
        auto& local = partial[static_cast<size_t>(tid)];
#pragma omp for schedule(static)
        for (int64_t idx = 0; idx < static_cast<int64_t>(total); ++idx) {
            odometer_vector(static_cast<uint64_t>(idx), static_cast<size_t>(pr.n), pr.p, x);
            if (norm_sq_span(x) > w_sq) continue;
            if (!is_canonical_span(x, pr.q)) continue;
            ++local[orbit_scan(x, pr.q, nullptr)];
        }
    }
    std::map<int64_t, uint64_t> census;
    for (const auto& m : partial)
        for (auto [len, cnt] : m) census[len] += cnt;
    return census;
}

std::map<int64_t, uint64_t> orbit_census_serial(const Params& pr, int64_t w_sq, uint64_t budget) {
    uint64_t total = 0;
    if (!space_fits_u64(pr, budget, total))
        return orbit_census(pr, w_sq, budget, 1, CensusStrategy::Ball);
    std::map<int64_t, uint64_t> census;
    std::vector<int64_t> x(static_cast<size_t>(pr.n), -pr.half());
    do {
        if (norm_sq_span(x) > w_sq) continue;
        if (!is_canonical_span(x, pr.q)) continue;
        ++census[orbit_scan(x, pr.q, nullptr)];
    } while (odometer_next(x, pr.p));
    return census;
}

}  // namespace circ
