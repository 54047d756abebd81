#include "torq/zlinalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace torq {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw error("IntMatrix: entry count mismatch");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw error("from_rows: ragged input");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<Vec>& cols) {
    if (cols.empty()) return IntMatrix(0, 0);
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows()) throw error("from_cols: ragged input");
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec IntMatrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Vec IntMatrix::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw error("matrix product: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

Vec IntMatrix::operator*(const Vec& x) const {
    if (x.size() != cols_) throw error("matrix-vector product: dimension mismatch");
    Vec r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
    return r;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
    if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0)
        throw error("vstack: column count mismatch");
    std::size_t c = rows_ ? cols_ : o.cols_;
    IntMatrix r(rows_ + o.rows_, c);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < c; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < c; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw error("hstack: row count mismatch");
    IntMatrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    IntMatrix r(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= rows_) throw error("select_rows: index out of range");
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
    }
    return r;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    std::size_t n = std::min(diag.rows(), diag.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (diag.at(i, i) != 0) ++r;
    return r;
}

Int SmithDecomposition::d(std::size_t i) const {
    if (i >= diag.rows() || i >= diag.cols()) return 0;
    return diag.at(i, i);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(i, k), m.at(j, k));
}
void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m.at(k, i), m.at(k, j));
}
// row i -= q * row t
void row_sub(IntMatrix& m, std::size_t i, std::size_t t, const Int& q) {
    for (std::size_t k = 0; k < m.cols(); ++k) m.at(i, k) -= q * m.at(t, k);
}
void col_sub(IntMatrix& m, std::size_t j, std::size_t t, const Int& q) {
    for (std::size_t k = 0; k < m.rows(); ++k) m.at(k, j) -= q * m.at(k, t);
}
void row_add(IntMatrix& m, std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < m.cols(); ++k) m.at(dst, k) += m.at(src, k);
}
void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t k = 0; k < m.cols(); ++k) m.at(i, k) = -m.at(i, k);
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    IntMatrix m = a;
    IntMatrix left = IntMatrix::identity(a.rows());
    IntMatrix right = IntMatrix::identity(a.cols());
    const std::size_t n = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // pivot = minimal nonzero absolute value in the trailing block
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best;
            for (std::size_t i = t; i < m.rows(); ++i)
                for (std::size_t j = t; j < m.cols(); ++j) {
                    const Int& v = m.at(i, j);
                    if (v == 0) continue;
                    Int av = abs(v);
                    if (!found || av < best) { found = true; best = av; pi = i; pj = j; }
                }
            if (!found) { t = n; break; }
            if (pi != t) { swap_rows(m, t, pi); swap_rows(left, t, pi); }
            if (pj != t) { swap_cols(m, t, pj); swap_cols(right, t, pj); }

            bool clean = true;
            for (std::size_t i = t + 1; i < m.rows(); ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / m.at(t, t);
                if (q != 0) { row_sub(m, i, t, q); row_sub(left, i, t, q); }
                if (m.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < m.cols(); ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / m.at(t, t);
                if (q != 0) { col_sub(m, j, t, q); col_sub(right, j, t, q); }
                if (m.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the trailing block
            bool fix = false;
            for (std::size_t i = t + 1; i < m.rows() && !fix; ++i)
                for (std::size_t j = t + 1; j < m.cols() && !fix; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        row_add(m, t, i);
                        row_add(left, t, i);
                        fix = true;
                    }
            if (!fix) break;
        }
        if (t == n) break;
    }

    for (std::size_t i = 0; i < n; ++i)
        if (m.at(i, i) < 0) { negate_row(m, i); negate_row(left, i); }

    return SmithDecomposition{std::move(left), std::move(m), std::move(right)};
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw error("determinant: matrix not square");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntMatrix m = a;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(m, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) {
    return smith_normal_form(a).rank();
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw error("inverse_unimodular: matrix not square");
    std::size_t n = a.rows();
    // rational Gauss-Jordan on [A | I]
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));
        w[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w[p][c] == 0) ++p;
        if (p == n) throw error("inverse_unimodular: matrix is singular");
        std::swap(w[c], w[p]);
        Rat piv = w[c][c];
        for (std::size_t j = 0; j < 2 * n; ++j) w[c][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& v = w[i][n + j];
            if (denominator(v) != 1)
                throw error("inverse_unimodular: matrix is not unimodular");
            inv.at(i, j) = numerator(v);
        }
    return inv;
}

Int AbelianGroupPresentation::torsion_order() const {
    Int o = 1;
    for (const Int& d : torsion) o *= d;
    return o;
}

CokernelMap::CokernelMap(const IntMatrix& a)
    : rows_(a.rows()), snf_(smith_normal_form(a)), rank_(snf_.rank()) {
    for (std::size_t i = 0; i < rank_; ++i)
        if (snf_.d(i) > 1) torsion_pos_.push_back(i);
    grp_.free_rank = rows_ - rank_;
    for (std::size_t i : torsion_pos_) grp_.torsion.push_back(snf_.d(i));
}

Vec CokernelMap::coords(const Vec& y) const {
    if (y.size() != rows_) throw error("cokernel coords: dimension mismatch");
    Vec z = snf_.left * y;
    Vec out;
    out.reserve(torsion_pos_.size() + grp_.free_rank);
    for (std::size_t i : torsion_pos_) {
        Int r = z[i] % snf_.d(i);
        if (r < 0) r += snf_.d(i);
        out.push_back(r);
    }
    for (std::size_t i = rank_; i < rows_; ++i) out.push_back(z[i]);
    return out;
}

bool CokernelMap::same_class(const Vec& y1, const Vec& y2) const {
    return coords(y1) == coords(y2);
}

AbelianGroupPresentation cokernel(const IntMatrix& a) {
    return CokernelMap(a).group();
}

std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw error("solve_integer: dimension mismatch");
    SmithDecomposition s = smith_normal_form(a);
    Vec c = s.left * b;
    Vec y(a.cols(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int di = s.d(i);
        if (i < a.cols() && di != 0) {
            if (c[i] % di != 0) return std::nullopt;
            y[i] = c[i] / di;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.right * y;
}

std::optional<QVec> solve_rational(const IntMatrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw error("solve_rational: dimension mismatch");
    SmithDecomposition s = smith_normal_form(a);
    Vec c = s.left * b;
    QVec y(a.cols(), Rat(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int di = s.d(i);
        if (i < a.cols() && di != 0) {
            y[i] = Rat(c[i], di);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    QVec x(a.cols(), Rat(0));
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            x[i] += Rat(s.right.at(i, j)) * y[j];
    return x;
}

std::vector<Vec> kernel_basis(const IntMatrix& a) {
    SmithDecomposition s = smith_normal_form(a);
    std::size_t r = s.rank();
    std::vector<Vec> basis;
    for (std::size_t j = r; j < a.cols(); ++j) basis.push_back(s.right.col(j));
    return basis;
}

bool is_primitive(const Vec& v) {
    if (is_zero_vec(v)) throw error("is_primitive: zero vector");
    return gcd_vec(v) == 1;
}

std::vector<Vec> lattice_basis_from_generators(std::size_t n,
                                               const std::vector<Vec>& gens) {
    for (const Vec& g : gens)
        if (g.size() != n) throw error("lattice_basis_from_generators: bad length");
    if (gens.empty()) return {};
    IntMatrix g = IntMatrix::from_cols(gens);
    SmithDecomposition s = smith_normal_form(g);
    IntMatrix linv = inverse_unimodular(s.left);
    std::vector<Vec> basis;
    std::size_t r = s.rank();
    for (std::size_t i = 0; i < r; ++i) basis.push_back(scale(linv.col(i), s.d(i)));
    return basis;
}

std::vector<Vec> lattice_preimage(const IntMatrix& a, std::size_t m,
                                  const std::vector<Vec>& gens) {
    if (a.rows() != m) throw error("lattice_preimage: dimension mismatch");
    IntMatrix big = gens.empty() ? a : a.hstack(IntMatrix::from_cols(gens));
    std::vector<Vec> projected;
    for (const Vec& k : kernel_basis(big))
        projected.emplace_back(k.begin(), k.begin() + a.cols());
    return lattice_basis_from_generators(a.cols(), projected);
}

} // namespace torq
