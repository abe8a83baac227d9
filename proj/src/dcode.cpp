#include "circulattice/dcode.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "circulattice/errors.hpp"

namespace circ {

DoubleCirculantCode DoubleCirculantCode::make(const Params& pr, std::span<const int64_t> first_row) {
    if (first_row.size() != static_cast<size_t>(pr.q))
        throw std::invalid_argument("DoubleCirculantCode: expected q entries");
    DoubleCirculantCode c;
    c.params = &pr;
    c.a.resize(first_row.size());
    for (size_t i = 0; i < first_row.size(); ++i) c.a[i] = centered_lift(first_row[i], pr.p);
    return c;
}

namespace {

// out[j] = sum_i xr[i] * a[(i-j) mod q], centered: the right syndrome x_R A^T.
void right_syndrome_span(std::span<const int64_t> a, std::span<const int64_t> xr, int64_t q,
                         int64_t p, std::span<int64_t> out) {
    for (int64_t j = 0; j < q; ++j) {
        int64_t acc = 0;
        for (int64_t i = 0; i < q; ++i)
            acc += xr[static_cast<size_t>(i)] * a[static_cast<size_t>(((i - j) % q + q) % q)];
        out[static_cast<size_t>(j)] = centered_lift(acc, p);
    }
}

}  // namespace

Syndrome syndrome(const DoubleCirculantCode& code, const FpVector& x) {
    const Params& pr = *code.params;
    if (x.params->p != pr.p || x.params->q != pr.q)
        throw std::invalid_argument("syndrome: mismatched Params");
    const int64_t q = pr.q;

    Syndrome s;
    s.left = RingElement::from_values(pr, x.left());

    // Matrix route: (x_R A^T)_j = sum_i x_R[i] A[j][i].
    std::vector<int64_t> right_mat(static_cast<size_t>(q));
    right_syndrome_span(code.a, x.right(), q, pr.p, right_mat);

    // Ring route: x_R(Z) * abar(Z) with abar = (a_1, a_q, a_{q-1}, ..., a_2).
    std::vector<int64_t> abar(static_cast<size_t>(q));
    abar[0] = code.a[0];
    for (int64_t j = 1; j < q; ++j) abar[static_cast<size_t>(j)] = code.a[static_cast<size_t>(q - j)];
    RingElement right_ring =
        ring_mul(RingElement::from_values(pr, x.right()), RingElement::from_values(pr, abar));

    if (!std::equal(right_mat.begin(), right_mat.end(), right_ring.coeffs.begin()))
        throw std::logic_error("syndrome: matrix and ring routes disagree");

    s.right = std::move(right_ring);
    s.total = ring_add(s.left, s.right);
    return s;
}

bool contains(const DoubleCirculantCode& code, const FpVector& x) {
    return syndrome(code, x).total.is_zero();
}

void enumerate_codewords(const DoubleCirculantCode& code, uint64_t budget,
                         const std::function<void(const FpVector&)>& fn) {
    const Params& pr = *code.params;
    const int64_t q = pr.q;
    if (pr.code_count() > budget) throw BudgetExceeded("enumerate_codewords: p^q > budget");

    std::vector<int64_t> xr(static_cast<size_t>(q), -pr.half());
    std::vector<int64_t> word(static_cast<size_t>(pr.n));
    do {
        right_syndrome_span(code.a, xr, q, pr.p, {word.data(), static_cast<size_t>(q)});
        for (int64_t j = 0; j < q; ++j) word[static_cast<size_t>(j)] = -word[static_cast<size_t>(j)];
        std::copy(xr.begin(), xr.end(), word.begin() + q);
        fn(FpVector::from_values(pr, word));
    } while (odometer_next(xr, pr.p));
}

RepTable::RepTable(const Params& pr, uint64_t budget) : params_(&pr) {
    const int64_t q = pr.q, p = pr.p;
    BigInt total = pr.code_count();
    if (total > budget) throw BudgetExceeded("RepTable: p^q > budget");
    total_ = total.convert_to<uint64_t>();

    // Orbit of a right half under the induced action: {+- rot^k(x)}.
    std::vector<int64_t> x(static_cast<size_t>(q), -pr.half());
    std::vector<int64_t> img(static_cast<size_t>(q));
    struct Entry {
        int64_t norm;
        uint64_t min_idx;
        uint32_t offset;
    };
    std::vector<Entry> entries;
    std::vector<int64_t> digit_pool;

    do {
        if (std::all_of(x.begin(), x.end(), [](int64_t v) { return v == 0; })) continue;
        bool canonical = true;
        uint64_t min_idx = odometer_index(x, p);
        for (int sgn = 0; sgn < 2 && canonical; ++sgn) {
            for (int64_t k = 0; k < q; ++k) {
                if (sgn == 0 && k == 0) continue;
                for (int64_t i = 0; i < q; ++i) {
                    int64_t v = x[static_cast<size_t>(i)];
                    img[static_cast<size_t>((i + k) % q)] = sgn ? -v : v;
                }
                if (std::lexicographical_compare(img.begin(), img.end(), x.begin(), x.end())) {
                    canonical = false;
                    break;
                }
                min_idx = std::min(min_idx, odometer_index(img, p));
            }
        }
        if (!canonical) continue;
        Entry e{norm_sq_span(x), min_idx, static_cast<uint32_t>(digit_pool.size())};
        digit_pool.insert(digit_pool.end(), x.begin(), x.end());
        entries.push_back(e);
    } while (odometer_next(x, p));

    std::vector<size_t> order(entries.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        if (entries[i].norm != entries[j].norm) return entries[i].norm < entries[j].norm;
        return entries[i].min_idx < entries[j].min_idx;
    });
    digits_.resize(digit_pool.size());
    norms_.resize(entries.size());
    min_idx_.resize(entries.size());
    for (size_t r = 0; r < order.size(); ++r) {
        const Entry& e = entries[order[r]];
        norms_[r] = e.norm;
        min_idx_[r] = e.min_idx;
        std::copy_n(digit_pool.begin() + e.offset, static_cast<size_t>(q),
                    digits_.begin() + r * static_cast<size_t>(q));
    }
}

namespace {

struct ScanBest {
    int64_t d2 = std::numeric_limits<int64_t>::max();
    uint64_t idx = std::numeric_limits<uint64_t>::max();
    size_t rep = SIZE_MAX;
};

// Core scan: reps in increasing right-half norm, stop once no rep can beat
// or tie the best total. Left-half norm accumulation breaks early past the
// remaining allowance.
ScanBest scan_reps(const DoubleCirculantCode& code, const RepTable& table,
                   uint64_t& words_visited) {
    const Params& pr = *code.params;
    const int64_t q = pr.q, p = pr.p;
    const int64_t* a = code.a.data();
    ScanBest best;
    for (size_t r = 0; r < table.size(); ++r) {
        int64_t nr = table.norm_of(r);
        if (nr > best.d2) break;
        ++words_visited;
        std::span<const int64_t> xr = table.digits_of(r);
        int64_t allowance = best.d2 == std::numeric_limits<int64_t>::max()
                                ? std::numeric_limits<int64_t>::max()
                                : best.d2 - nr;
        int64_t norm_l = 0;
        for (int64_t j = 0; j < q; ++j) {
            int64_t acc = 0;
            for (int64_t i = 0; i < q; ++i)
                acc += xr[static_cast<size_t>(i)] * a[((i - j) % q + q) % q];
            int64_t c = centered_lift(acc, p);
            norm_l += c * c;
            if (norm_l > allowance) break;
        }
        if (norm_l > allowance) continue;
        int64_t total = nr + norm_l;
        if (total < best.d2 || (total == best.d2 && table.min_index_of(r) < best.idx)) {
            best.d2 = total;
            best.idx = table.min_index_of(r);
            best.rep = r;
        }
    }
    return best;
}

}  // namespace

int64_t min_norm_value(const DoubleCirculantCode& code, const RepTable& table,
                       uint64_t& words_visited) {
    return scan_reps(code, table, words_visited).d2;
}

MinNormResult min_norm_sq(const DoubleCirculantCode& code, const RepTable& table) {
    const Params& pr = *code.params;
    MinNormResult res;
    ScanBest best = scan_reps(code, table, res.words_visited);
    res.d2 = best.d2;
    // Reconstruct the odometer-first witness from the orbit's least index.
    std::vector<int64_t> xr(static_cast<size_t>(pr.q));
    odometer_vector(best.idx, static_cast<size_t>(pr.q), pr.p, xr);
    res.witness.resize(static_cast<size_t>(pr.n));
    right_syndrome_span(code.a, xr, pr.q, pr.p, {res.witness.data(), static_cast<size_t>(pr.q)});
    for (int64_t j = 0; j < pr.q; ++j) res.witness[static_cast<size_t>(j)] *= -1;
    std::copy(xr.begin(), xr.end(), res.witness.begin() + pr.q);
    return res;
}

MinNormResult min_norm_sq_serial(const DoubleCirculantCode& code, uint64_t budget) {
    const Params& pr = *code.params;
    const int64_t q = pr.q, p = pr.p;
    if (pr.code_count() > budget) throw BudgetExceeded("min_norm_sq_serial: p^q > budget");

    MinNormResult res;
    res.d2 = std::numeric_limits<int64_t>::max();
    std::vector<int64_t> xr(static_cast<size_t>(q), -pr.half());
    std::vector<int64_t> xl(static_cast<size_t>(q));
    do {
        if (std::all_of(xr.begin(), xr.end(), [](int64_t v) { return v == 0; })) continue;
        ++res.words_visited;
        int64_t nr = norm_sq_span(xr);
        if (nr >= res.d2) continue;
        int64_t total = nr;
        bool over = false;
        for (int64_t j = 0; j < q; ++j) {
            int64_t acc = 0;
            for (int64_t i = 0; i < q; ++i)
                acc += xr[static_cast<size_t>(i)] * code.a[static_cast<size_t>(((i - j) % q + q) % q)];
            int64_t c = centered_lift(acc, p);
            xl[static_cast<size_t>(j)] = -c;
            total += c * c;
            if (total >= res.d2) {
                over = true;
                break;
            }
        }
        if (over) continue;
        res.d2 = total;
        res.witness.assign(xl.begin(), xl.end());
        res.witness.insert(res.witness.end(), xr.begin(), xr.end());
    } while (odometer_next(xr, p));
    return res;
}

BigRat membership_probability(const FpVector& x) {
    const Params& pr = *x.params;
    RingElement xr = RingElement::from_values(pr, x.right());
    RingElement xl = RingElement::from_values(pr, x.left());
    CyclicCode c = cyclic_code_of(xr);
    if (!code_contains(c, xl)) return BigRat(0);
    return BigRat(1) / BigRat(c.cardinality);
}

DoubleCirculantCode random_code(const Params& pr, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int64_t> a(static_cast<size_t>(pr.q));
    for (auto& v : a)
        v = static_cast<int64_t>(rng.next_below(static_cast<uint64_t>(pr.p))) - pr.half();
    return DoubleCirculantCode::make(pr, a);
}

}  // namespace circ
