#ifndef TORQ_ZLINALG_HPP
#define TORQ_ZLINALG_HPP

#include <optional>
#include <vector>

#include "torq/numbers.hpp"

namespace torq {

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// A matrix with r rows and c columns represents a homomorphism
/// Z^c -> Z^r acting on column vectors.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    /// Matrix whose rows are the given vectors.
    static IntMatrix from_rows(const std::vector<Vec>& rows);
    /// Matrix whose columns are the given vectors.
    static IntMatrix from_cols(const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    Vec operator*(const Vec& x) const;
    bool operator==(const IntMatrix& o) const = default;

    /// Rows i of this stacked over rows of o (equal column counts).
    IntMatrix vstack(const IntMatrix& o) const;
    /// Columns of this followed by columns of o (equal row counts).
    IntMatrix hstack(const IntMatrix& o) const;
    /// Submatrix keeping the given rows, in the given order.
    IntMatrix select_rows(const std::vector<std::size_t>& idx) const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

/// left * A * right = diag with left, right unimodular and the diagonal
/// entries nonnegative, each dividing the next, zeros last.
struct SmithDecomposition {
    IntMatrix left;
    IntMatrix diag;
    IntMatrix right;

    std::size_t rank() const;
    /// Diagonal entry i (0 if off the physical diagonal).
    Int d(std::size_t i) const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

Int determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);
/// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... with
/// 2 <= d_1 | d_2 | ...
struct AbelianGroupPresentation {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianGroupPresentation& o) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    /// Order of the torsion part (1 for free groups).
    Int torsion_order() const;
};

/// Cokernel Z^rows / im(A) together with the coordinate transport
/// sending y in Z^rows to its coordinates in the presentation.
class CokernelMap {
public:
    explicit CokernelMap(const IntMatrix& a);

    const AbelianGroupPresentation& group() const { return grp_; }

    /// Coordinates of [y]: torsion components (reduced into [0, d_i))
    /// followed by free components. Length = #torsion + free_rank.
    Vec coords(const Vec& y) const;
    bool is_zero(const Vec& y) const { return is_zero_vec(coords(y)); }
    bool same_class(const Vec& y1, const Vec& y2) const;

private:
    std::size_t rows_;
    SmithDecomposition snf_;
    std::size_t rank_;
    std::vector<std::size_t> torsion_pos_;
    AbelianGroupPresentation grp_;
};

AbelianGroupPresentation cokernel(const IntMatrix& a);

/// Some x with A x = b, if one exists.
std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b);
std::optional<QVec> solve_rational(const IntMatrix& a, const Vec& b);

/// Basis of the saturated kernel lattice {x : A x = 0}.
std::vector<Vec> kernel_basis(const IntMatrix& a);

/// True iff gcd of the entries is 1. The zero vector is rejected.
bool is_primitive(const Vec& v);

/// Basis of the sublattice of Z^n generated by the given vectors.
std::vector<Vec> lattice_basis_from_generators(std::size_t n,
                                               const std::vector<Vec>& gens);

/// Basis of {x : A x lies in the lattice spanned by gens} inside Z^cols(A).
std::vector<Vec> lattice_preimage(const IntMatrix& a, std::size_t m,
                                  const std::vector<Vec>& gens);

} // namespace torq

#endif
