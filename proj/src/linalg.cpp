#include "heartfan/linalg.hpp"

#include "heartfan/errors.hpp"

#include <algorithm>

namespace heartfan {

IntMatrix as_rows(const std::vector<LatticeVector>& vs) {
    IntMatrix m;
    m.reserve(vs.size());
    for (const auto& v : vs) m.push_back(v.coords());
    return m;
}

IntMatrix transpose(const IntMatrix& m, std::size_t cols) {
    IntMatrix t(cols, std::vector<Integer>(m.size()));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) t[c][r] = m[r][c];
    return t;
}

RowEchelon rref(RatMatrix m, std::size_t cols) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        Rational inv = 1 / m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

namespace {

RatMatrix to_rational(const std::vector<LatticeVector>& vs, std::size_t dim) {
    RatMatrix m;
    m.reserve(vs.size());
    for (const auto& v : vs) {
        require_rank(dim, v.rank(), "matrix row");
        std::vector<Rational> row(dim);
        for (std::size_t i = 0; i < dim; ++i) row[i] = v[i];
        m.push_back(std::move(row));
    }
    return m;
}

LatticeVector integral_row(const std::vector<Rational>& row) {
    return DualVector(row).clear_denominators();
}

std::size_t first_nonzero(const LatticeVector& v) {
    for (std::size_t i = 0; i < v.rank(); ++i)
        if (v[i] != 0) return i;
    return v.rank();
}

}  // namespace

std::size_t rank_of(const std::vector<LatticeVector>& vs, std::size_t dim) {
    return rref(to_rational(vs, dim), dim).rows.size();
}

std::vector<LatticeVector> canonical_span_basis(const std::vector<LatticeVector>& vs, std::size_t dim) {
    auto e = rref(to_rational(vs, dim), dim);
    std::vector<LatticeVector> out;
    out.reserve(e.rows.size());
    for (const auto& row : e.rows) out.push_back(integral_row(row));
    return out;
}

LatticeVector reduce_modulo(const LatticeVector& x, const std::vector<LatticeVector>& basis) {
    if (basis.empty()) return x.is_zero() ? x : primitive(x);
    std::vector<Rational> r(x.rank());
    for (std::size_t i = 0; i < x.rank(); ++i) r[i] = x[i];
    for (const auto& b : basis) {
        std::size_t p = first_nonzero(b);
        if (r[p] == 0) continue;
        Rational f = r[p] / Rational(b[p]);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= f * b[i];
    }
    return integral_row(r);
}

std::vector<LatticeVector> rational_kernel(const std::vector<LatticeVector>& rows, std::size_t dim) {
    auto e = rref(to_rational(rows, dim), dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<LatticeVector> gens;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(dim, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
        gens.push_back(integral_row(v));
    }
    return canonical_span_basis(gens, dim);
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<LatticeVector>& basis, const LatticeVector& x) {
    std::size_t dim = x.rank();
    std::size_t k = basis.size();
    RatMatrix m(dim, std::vector<Rational>(k + 1));
    for (std::size_t j = 0; j < k; ++j) {
        require_rank(dim, basis[j].rank(), "span basis");
        for (std::size_t i = 0; i < dim; ++i) m[i][j] = basis[j][i];
    }
    for (std::size_t i = 0; i < dim; ++i) m[i][k] = x[i];
    auto e = rref(std::move(m), k + 1);
    std::vector<Rational> y(k, 0);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == k) return std::nullopt;
        y[e.pivots[i]] = e.rows[i][k];
    }
    return y;
}

IntegerEchelon hermite(const IntMatrix& input, std::size_t cols) {
    IntegerEchelon out;
    IntMatrix m = input;
    std::size_t rows = m.size();
    IntMatrix v(rows, std::vector<Integer>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) v[i][i] = 1;

    auto row_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < cols; ++c) m[dst][c] -= q * m[src][c];
        for (std::size_t c = 0; c < rows; ++c) v[dst][c] -= q * v[src][c];
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(m[a], m[b]);
        std::swap(v[a], v[b]);
    };
    auto row_neg = [&](std::size_t a) {
        for (auto& c : m[a]) c = -c;
        for (auto& c : v[a]) c = -c;
    };

    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        while (true) {
            std::size_t best = rows;
            for (std::size_t r = row; r < rows; ++r) {
                if (m[r][col] == 0) continue;
                if (best == rows || abs(m[r][col]) < abs(m[best][col])) best = r;
            }
            if (best == rows) break;
            row_swap(row, best);
            bool clean = true;
            for (std::size_t r = row + 1; r < rows; ++r) {
                if (m[r][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[row][col].get_mpz_t());
                row_sub(r, row, q);
                if (m[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[row][col] == 0) continue;
        if (m[row][col] < 0) row_neg(row);
        for (std::size_t r = 0; r < row; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[row][col].get_mpz_t());
            row_sub(r, row, q);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    out.reduced = std::move(m);
    out.transform = std::move(v);
    return out;
}

std::vector<LatticeVector> integer_kernel(const std::vector<LatticeVector>& rows, std::size_t dim) {
    IntMatrix t(dim, std::vector<Integer>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_rank(dim, rows[r].rank(), "kernel row");
        for (std::size_t c = 0; c < dim; ++c) t[c][r] = rows[r][c];
    }
    auto e = hermite(t, rows.size());
    std::vector<LatticeVector> gens;
    for (std::size_t i = e.rank; i < dim; ++i) gens.emplace_back(e.transform[i]);
    if (gens.empty()) return gens;
    auto h = hermite(as_rows(gens), dim);
    std::vector<LatticeVector> basis;
    for (std::size_t i = 0; i < h.rank; ++i) basis.emplace_back(h.reduced[i]);
    return basis;
}

Integer determinant(const IntMatrix& input) {
    std::size_t n = input.size();
    if (n == 0) return 1;
    IntMatrix m = input;
    Integer prev = 1;
    int s = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            s = -s;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
        }
        prev = m[k][k];
    }
    return s * m[n - 1][n - 1];
}

Integer maximal_minor_gcd(const std::vector<LatticeVector>& rows, std::size_t dim) {
    if (rows.empty()) return 1;
    IntMatrix t(dim, std::vector<Integer>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) t[c][r] = rows[r][c];
    auto e = hermite(t, rows.size());
    if (e.rank < rows.size()) return 0;
    Integer d = 1;
    for (std::size_t i = 0; i < e.rank; ++i) d *= e.reduced[i][e.pivots[i]];
    return abs(d);
}

IntegerLattice::IntegerLattice(const std::vector<LatticeVector>& gens, std::size_t dim) : dim_(dim) {
    for (const auto& g : gens) require_rank(dim, g.rank(), "lattice generator");
    if (gens.empty()) return;
    auto e = hermite(as_rows(gens), dim);
    for (std::size_t i = 0; i < e.rank; ++i) basis_.emplace_back(e.reduced[i]);
    pivots_ = e.pivots;
}

bool IntegerLattice::contains(const LatticeVector& x) const {
    require_rank(dim_, x.rank(), "lattice membership");
    std::vector<Integer> r = x.coords();
    std::size_t col = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::size_t p = pivots_[i];
        for (; col < p; ++col)
            if (r[col] != 0) return false;
        const Integer& piv = basis_[i][p];
        if (!mpz_divisible_p(r[p].get_mpz_t(), piv.get_mpz_t())) return false;
        Integer q = r[p] / piv;
        if (q != 0)
            for (std::size_t c = p; c < dim_; ++c) r[c] -= q * basis_[i][c];
        col = p + 1;
    }
    for (; col < dim_; ++col)
        if (r[col] != 0) return false;
    return true;
}

}  // namespace heartfan
