#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "quivermod/numeric.hpp"

namespace quivermod {

/// Row-major integer matrix; each inner vector is a row.
using IntMatrix = std::vector<IntVector>;

IntMatrix identity_int(std::size_t n);
IntMatrix transpose(const IntMatrix& a, std::size_t cols);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector row_times(const IntVector& x, const IntMatrix& a);     // x A
IntVector apply_matrix(const IntMatrix& a, const IntVector& x);         // A x
Integer dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scale(const Integer& s, const IntVector& a);
bool is_zero(const IntVector& v);
bool is_nonnegative(const IntVector& v);
/// Divides by the gcd of the entries (zero stays zero).
IntVector primitive(IntVector v);

/// U A V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... .
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  std::size_t rank = 0;
  /// d_1 ... d_rank.
  IntVector invariant_factors;
};

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols);

std::size_t integer_rank(const IntMatrix& a, std::size_t cols);

/// Row-style Hermite normal form; zero rows dropped. Canonical for the row lattice.
IntMatrix hermite_normal_form(const IntMatrix& a, std::size_t cols);

/// Saturated basis (rows) of {x in Z^cols : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols);

/// Unimodular completion of a lattice: rows [0, rank) of `basis` span the
/// saturation of the row lattice of `rows`, all rows together span Z^cols.
struct Saturation {
  IntMatrix basis;
  /// Inverse of `basis`: coordinates of u are u * coordinates.
  IntMatrix coordinates;
  std::size_t rank = 0;
  /// Index of the row lattice in its saturation.
  Integer index = 1;
};

Saturation saturate(const IntMatrix& rows, std::size_t cols);

/// Integer c with c * basis = target, or nullopt.
std::optional<IntVector> solve_integer(const IntMatrix& basis, std::size_t cols, const IntVector& target);

/// Minimal nonzero elements of {x in N^cols : A x = 0} (the Hilbert basis of
/// this normal monoid), by the Contejean-Devie completion procedure. Sorted
/// by total degree, then lexicographically descending.
IntMatrix hilbert_basis_kernel(const IntMatrix& a, std::size_t cols);

/// A binomial x^plus - x^minus.
using Binomial = std::pair<IntVector, IntVector>;

/// Minimal generators of the toric ideal of the columns of A, where `degree`
/// is a positive grading with degree[j] > 0 the degree of column j and
/// constant on fibres. Graver elements (from the Lawrence lifting) bound the
/// degrees; per degree, fibre components under lower-degree moves decide the
/// new generators.
std::vector<Binomial> toric_ideal_generators(const IntMatrix& a, std::size_t cols, const IntVector& degree);

/// All c in N^cols with A c = target, where sum c_j degree_j = total_degree.
IntMatrix fibre(const IntMatrix& a, std::size_t cols, const IntVector& degree, const IntVector& target,
                const Integer& total_degree);

/// Primitive inner facet normals of the cone spanned by `generators` (rows in
/// Z^dim). The cone must be full-dimensional. Sorted lexicographically.
IntMatrix cone_facets(const IntMatrix& generators, std::size_t dim);

}  // namespace quivermod
