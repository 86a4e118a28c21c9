#pragma once

#include <optional>

#include "pgb/integer.hpp"

// Exact lattice algebra over the integers. Lattices are row spans; the single
// canonical form is the row Hermite normal form: echelon shape, positive
// pivots, entries above each pivot reduced into [0, pivot), zero rows dropped.

namespace pgb {

struct HnfResult {
  IntMat H;  // rank x cols, canonical
  Index rank = 0;
};

// U * A = H with U unimodular (rows x rows). H keeps all rows; the first
// `rank` rows are the canonical HNF and the rest are zero.
struct HnfTransform {
  IntMat H;
  IntMat U;
  Index rank = 0;
};

HnfResult hnf(const IntMat& A);
HnfTransform hnf_with_transform(const IntMat& A);

// x with x * A = b if b lies in the row lattice of A.
std::optional<IntVec> solve_in_rowspace(const IntMat& A, const IntVec& b);

// Same, but A must already be in echelon form with non-zero rows (e.g. an
// HNF). Cheaper: no transform is needed.
std::optional<IntVec> solve_echelon(const IntMat& H, const IntVec& b);
bool in_row_lattice(const IntMat& H, const IntVec& b);

// Canonical HNF basis of the intersection of the two row lattices.
IntMat lattice_intersect(const IntMat& A, const IntMat& B);

// Canonical HNF basis of the left kernel {x : x * A = 0}.
IntMat kernel(const IntMat& A);

// Product of the diagonal of a square echelon matrix.
Integer triangular_det(const IntMat& H);

// Content (gcd of all entries) of a matrix; 0 for the zero matrix.
Integer content(const IntMat& A);

// HNF of the full-rank lattice spanned by the rows of A, given a positive
// multiple D of its determinant. Entries are kept reduced modulo D.
IntMat hnf_modular(const IntMat& A, const Integer& D);

// Rational Gauss-Jordan helpers for the small square systems of field
// arithmetic.
std::optional<RatMat> rational_inverse(const RatMat& A);
Rational rational_det(const RatMat& A);

}  // namespace pgb
