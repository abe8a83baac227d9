#include "circulattice/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circulattice/errors.hpp"

namespace circ {

LatticeBasis construction_a(const DoubleCirculantCode& code, std::optional<int64_t> d_sq,
                            uint64_t budget) {
    const Params& pr = *code.params;
    const int64_t q = pr.q;
    LatticeBasis b;
    b.params = pr;
    b.a = code.a;
    b.rows.assign(static_cast<size_t>(pr.n), std::vector<int64_t>(static_cast<size_t>(pr.n), 0));
    // Row i (i < q): the codeword with x_R = e_i, so x_L[j] = -A[j][i].
    for (int64_t i = 0; i < q; ++i) {
        for (int64_t j = 0; j < q; ++j)
            b.rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = -code.circulant(j, i);
        b.rows[static_cast<size_t>(i)][static_cast<size_t>(q + i)] = 1;
    }
    for (int64_t i = 0; i < q; ++i) b.rows[static_cast<size_t>(q + i)][static_cast<size_t>(i)] = pr.p;

    b.det_abs = determinant_abs(b.rows);
    if (b.det_abs != bigint_pow(BigInt(pr.p), static_cast<uint64_t>(q)))
        throw std::logic_error("construction_a: determinant is not p^q");

    if (d_sq) {
        b.d_sq = *d_sq;
    } else {
        RepTable table(pr, budget);
        uint64_t visited = 0;
        b.d_sq = min_norm_value(code, table, visited);
    }
    b.mu = std::min(b.d_sq, pr.p * pr.p);
    return b;
}

BigInt determinant_abs(const IntMatrix& rows) {
    const size_t n = rows.size();
    BigMatrix m(n, std::vector<BigInt>(n));
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("determinant_abs: not square");
        for (size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
    }
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    BigInt det = m[n - 1][n - 1] * sign;
    return det < 0 ? BigInt(-det) : det;
}

BigMatrix hermite_normal_form(const IntMatrix& rows) {
    const size_t n = rows.empty() ? 0 : rows[0].size();
    BigMatrix m(rows.size(), std::vector<BigInt>(n));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];

    size_t row = 0;
    for (size_t col = 0; col < n && row < m.size(); ++col) {
        // Euclidean elimination on the column below `row`.
        for (;;) {
            size_t piv = m.size();
            for (size_t i = row; i < m.size(); ++i) {
                if (m[i][col] != 0 && (piv == m.size() || abs(m[i][col]) < abs(m[piv][col])))
                    piv = i;
            }
            if (piv == m.size()) break;  // column already zero below
            std::swap(m[row], m[piv]);
            bool done = true;
            for (size_t i = row + 1; i < m.size(); ++i) {
                if (m[i][col] == 0) continue;
                BigInt f = m[i][col] / m[row][col];
                for (size_t j = 0; j < n; ++j) m[i][j] -= f * m[row][j];
                if (m[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (m[row][col] == 0) continue;
        if (m[row][col] < 0)
            for (size_t j = 0; j < n; ++j) m[row][j] = -m[row][j];
        // Reduce the entries above the pivot into [0, pivot).
        for (size_t i = 0; i < row; ++i) {
            BigInt f = m[i][col] / m[row][col];
            if (m[i][col] - f * m[row][col] < 0) f -= 1;
            if (f != 0)
                for (size_t j = 0; j < n; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    return m;
}

namespace {

// Coefficient enumeration in Gram-Schmidt coordinates. Floating point only
// prunes (with slack); every candidate norm is recomputed exactly at the
// leaf, so the returned minimum is exact.
struct SvEnum {
    const IntMatrix& rows;
    size_t m, n;
    std::vector<std::vector<long double>> mu;
    std::vector<long double> bstar_sq;
    long double radius;
    std::vector<int64_t> coeff;
    std::optional<int64_t> best;

    explicit SvEnum(const IntMatrix& r, int64_t bound_sq)
        : rows(r), m(r.size()), n(r[0].size()), mu(m, std::vector<long double>(m, 0.0L)),
          bstar_sq(m), coeff(m, 0) {
        std::vector<std::vector<long double>> gs(m, std::vector<long double>(n));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < n; ++j) gs[i][j] = static_cast<long double>(rows[i][j]);
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < i; ++j) {
                long double dot = 0;
                for (size_t k = 0; k < n; ++k)
                    dot += static_cast<long double>(rows[i][k]) * gs[j][k];
                mu[i][j] = dot / bstar_sq[j];
                for (size_t k = 0; k < n; ++k) gs[i][k] -= mu[i][j] * gs[j][k];
            }
            long double s = 0;
            for (size_t k = 0; k < n; ++k) s += gs[i][k] * gs[i][k];
            bstar_sq[i] = s;
            if (s <= 0) throw std::invalid_argument("sv_oracle: basis not full rank");
        }
        radius = static_cast<long double>(bound_sq) * (1.0L + 1e-9L) + 1e-6L;
    }

    void leaf() {
        int64_t norm = 0;
        bool nonzero = false;
        for (size_t k = 0; k < n; ++k) {
            int64_t s = 0;
            for (size_t i = 0; i < m; ++i) s += coeff[i] * rows[i][k];
            norm += s * s;
            nonzero = nonzero || s != 0;
        }
        if (!nonzero) return;
        if (!best || norm < *best) {
            best = norm;
            // Only strictly shorter vectors matter from here on.
            radius = std::min(radius,
                              static_cast<long double>(norm - 1) * (1.0L + 1e-9L) + 1e-6L);
        }
    }

    // Levels m..1 fix coeff[lvl-1]; lvl == 0 is a complete vector.
    void rec(size_t lvl, long double used) {
        if (lvl == 0) {
            leaf();
            return;
        }
        const size_t i = lvl - 1;
        long double ctr = 0;
        for (size_t j = lvl; j < m; ++j)
            ctr -= static_cast<long double>(coeff[j]) * mu[j][i];
        long double room = radius - used;
        if (room < 0) return;
        long double hw = sqrtl(room / bstar_sq[i]) + 1e-9L;
        int64_t lo = static_cast<int64_t>(ceill(ctr - hw));
        int64_t hi = static_cast<int64_t>(floorl(ctr + hw));
        for (int64_t c = lo; c <= hi; ++c) {
            long double diff = static_cast<long double>(c) - ctr;
            long double next = used + diff * diff * bstar_sq[i];
            if (next > radius) continue;
            coeff[i] = c;
            rec(lvl - 1, next);
        }
        coeff[i] = 0;
    }
};

}  // namespace

std::optional<int64_t> sv_oracle(const IntMatrix& rows, int64_t bound_sq) {
    if (rows.empty() || bound_sq < 0) return std::nullopt;
    SvEnum e(rows, bound_sq);
    e.rec(rows.size(), 0.0L);
    if (e.best && *e.best > bound_sq) return std::nullopt;
    return e.best;
}

double zeta(int64_t n) {
    if (n < 2) throw std::domain_error("zeta: n >= 2");
    double s = 0;
    for (int64_t k = 1;; ++k) {
        double term = std::pow(static_cast<double>(k), -static_cast<double>(n));
        s += term;
        // Tail below k^{1-n}/(n-1).
        double tail = std::pow(static_cast<double>(k), 1.0 - static_cast<double>(n)) /
                      (static_cast<double>(n) - 1.0);
        if (tail < 1e-15) break;
    }
    return s;
}

DensityReport density(const LatticeBasis& basis) {
    const Params& pr = basis.params;
    const int64_t n = pr.n;
    DensityReport r;
    r.mu = basis.mu;
    r.det_abs = basis.det_abs;

    double log_det = static_cast<double>(pr.q) * std::log(static_cast<double>(pr.p));
    double d = std::sqrt(static_cast<double>(basis.mu));
    double log_delta = log_ball_volume(n, 0.5 * d) - log_det;
    r.delta = std::exp(log_delta);
    r.log2_delta = log_delta / std::log(2.0);

    BigInt ball = fp_ball_count(n, pr.p, basis.mu);
    double log_lb = -static_cast<double>(n) * std::log(2.0) +
                    std::log(ball.convert_to<double>()) - log_det -
                    static_cast<double>(n) *
                        std::log(1.0 + std::sqrt(static_cast<double>(n)) / (2.0 * d));
    r.delta_lb = std::exp(log_lb);

    double log_mink = (1.0 - static_cast<double>(n)) * std::log(2.0) + std::log(zeta(n));
    r.ratio_minkowski = std::exp(log_delta - log_mink);
    double log_cn = std::log(density_constant()) + std::log(static_cast<double>(n)) -
                    static_cast<double>(n) * std::log(2.0);
    r.ratio_cn = std::exp(log_delta - log_cn);
    return r;
}

}  // namespace circ
