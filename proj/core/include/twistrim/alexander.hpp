#pragma once

#include <stdexcept>

#include "twistrim/laurent_poly.hpp"
#include "twistrim/matrix.hpp"
#include "twistrim/presentation.hpp"

namespace twistrim {

/// Rows are relators, columns generators; entries are abelianized Fox
/// derivatives under g_i -> t.
using AlexMatrix = PolyMatrix;

/// Thrown for presentations that are not knot groups.
class NotAKnotGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// d(w)/d(g_i) with every generator sent to t. Uses
/// d(uv) = du + ab(u) dv, d(g_i) = 1, d(g_i^-1) = -t^-1.
LaurentPoly fox_derivative(const Word& w, int generator);

AlexMatrix alexander_matrix(const GroupPresentation& p);

/// Normalized determinant of the Alexander matrix with one row and one
/// column removed (both 0-based). Requires rows == cols.
LaurentPoly alexander_minor(const AlexMatrix& m, std::size_t row, std::size_t col);

/// Alexander polynomial, normalized (min_exp 0, positive constant term).
///
/// The meridian column is dropped. A square remainder, or a Wirtinger
/// presentation with its one redundant relator, goes through a Bareiss
/// determinant; anything else is reduced to echelon form by
/// pseudo-division row operations and the gcd of maximal minors is read
/// off the diagonal. Throws NotAKnotGroup unless the abelianization is Z
/// with every generator mapping to the same generator.
LaurentPoly alexander_polynomial(const GroupPresentation& p);

/// (1 - t)(1 - t^{pq}) / ((1 - t^p)(1 - t^q)), computed by exact division.
LaurentPoly torus_alexander(int p, int q);

inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

/// Res(f, g) as the determinant of the Sylvester matrix (f rows first).
/// Both arguments must be ordinary polynomials (min_exp >= 0).
Integer resultant(const LaurentPoly& f, const LaurentPoly& g);

/// Exact product of delta over all d-th roots of unity, computed as
/// Res(t^d - 1, delta') where delta' is the normalization of delta.
/// Zero iff delta vanishes at some d-th root of unity.
Integer resultant_with_cyclotomic(const LaurentPoly& delta, int d);

}  // namespace twistrim
