#pragma once

#include "heartfan/lattice.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace heartfan {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

IntMatrix as_rows(const std::vector<LatticeVector>& vs);
IntMatrix transpose(const IntMatrix& m, std::size_t cols);

struct RowEchelon {
    RatMatrix rows;                    // nonzero rows of the reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each row
};

RowEchelon rref(RatMatrix m, std::size_t cols);
std::size_t rank_of(const std::vector<LatticeVector>& vs, std::size_t dim);

// Subspace spanned by vs, as primitive integer rows derived from the reduced echelon form.
// Two spanning sets of the same subspace give identical output.
std::vector<LatticeVector> canonical_span_basis(const std::vector<LatticeVector>& vs, std::size_t dim);

// Reduces x modulo a canonical span basis by clearing its pivot coordinates,
// then returns the primitive positive multiple (zero stays zero).
LatticeVector reduce_modulo(const LatticeVector& x, const std::vector<LatticeVector>& basis);

// Primitive integer basis of {x : a.x = 0 for all rows a} in canonical form.
std::vector<LatticeVector> rational_kernel(const std::vector<LatticeVector>& rows, std::size_t dim);

// Solves sum_j y_j b_j = x over the rationals; nullopt if x is not in the span.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<LatticeVector>& basis, const LatticeVector& x);

// Integer row reduction with unimodular transform: transform * m = reduced,
// reduced in Hermite normal form (positive pivots, entries above pivots reduced).
struct IntegerEchelon {
    IntMatrix reduced;
    IntMatrix transform;
    std::vector<std::size_t> pivots;   // pivot column of reduced rows 0..rank-1
    std::size_t rank = 0;
};

IntegerEchelon hermite(const IntMatrix& m, std::size_t cols);

// Basis of {x in Z^n : a.x = 0 for all rows a}, saturated.
std::vector<LatticeVector> integer_kernel(const std::vector<LatticeVector>& rows, std::size_t dim);

Integer determinant(const IntMatrix& m);

// gcd of the maximal minors of a full-row-rank matrix; equals the index of the row lattice
// inside its saturation. Zero when the rows are dependent.
Integer maximal_minor_gcd(const std::vector<LatticeVector>& rows, std::size_t dim);

// Subgroup of Z^n generated by finitely many vectors, stored as its Hermite basis.
class IntegerLattice {
public:
    IntegerLattice() = default;
    IntegerLattice(const std::vector<LatticeVector>& gens, std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<LatticeVector>& basis() const { return basis_; }
    bool contains(const LatticeVector& x) const;

    friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
        return a.dim_ == b.dim_ && a.basis_ == b.basis_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<LatticeVector> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace heartfan
