#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "quivermod/matrix.hpp"
#include "quivermod/quiver.hpp"

namespace quivermod {

using PresentationPtr = std::shared_ptr<const QuiverPresentation>;

/// A representation over Q: one matrix φ_a of shape d(h(a)) x d(t(a)) per arrow.
/// Relations are not enforced here; see satisfies_relations.
class Representation {
 public:
  /// Throws QuiverError(BAD_MATRIX_SHAPE) if a matrix does not fit d.
  Representation(PresentationPtr quiver, DimensionVector dimension, std::vector<Matrix> maps);

  static Representation zero(PresentationPtr quiver, DimensionVector dimension);
  /// One-dimensional at `vertex`, zero elsewhere.
  static Representation simple(PresentationPtr quiver, VertexId vertex);
  /// Thin representation from one scalar per arrow; arrows touching an
  /// unsupported vertex must carry 0.
  static Representation thin(PresentationPtr quiver, DimensionVector dimension, const std::vector<Rational>& scalars);

  const QuiverPresentation& quiver() const noexcept { return *quiver_; }
  const PresentationPtr& quiver_ptr() const noexcept { return quiver_; }
  const DimensionVector& dimension() const noexcept { return dimension_; }
  const Matrix& map(ArrowId a) const { return maps_.at(a); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

  /// Scalar on arrow a of a thin representation (0 when an endpoint is unsupported).
  Rational thin_scalar(ArrowId a) const;

  /// g·M with φ_a ↦ g_{h(a)} φ_a g_{t(a)}^{-1}; g must be invertible at every vertex.
  Representation base_changed(const std::vector<Matrix>& g) const;

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  PresentationPtr quiver_;
  DimensionVector dimension_;
  std::vector<Matrix> maps_;
};

bool same_presentation(const Representation& m, const Representation& n);

/// Direct sum M ⊕ N (block diagonal, M's basis first).
Representation direct_sum(const Representation& m, const Representation& n);

/// Morphism M -> N: ψ_i of shape d_N(i) x d_M(i).
struct Intertwiner {
  std::vector<Matrix> components;

  friend bool operator==(const Intertwiner&, const Intertwiner&) = default;
};

bool is_intertwiner(const Representation& from, const Representation& to, const Intertwiner& psi);

/// φ_{a_k}···φ_{a_1}; identity for e_i; nullopt for the zero path.
/// Throws QuiverError(FOREIGN_PATH).
std::optional<Matrix> evaluate_path(const Representation& m, const Path& p);

struct RelationCheck {
  bool satisfied = true;
  std::optional<std::size_t> violated_relation;
  Matrix value;
};

RelationCheck satisfies_relations(const Representation& m);

/// Basis of Hom(M, N). Throws QuiverError(PRESENTATION_MISMATCH).
std::vector<Intertwiner> hom_space(const Representation& m, const Representation& n);

/// Deterministic certificate search over the hom space; see README for the bound.
/// False when d_M != d_N. Throws PRESENTATION_MISMATCH.
bool is_isomorphic(const Representation& m, const Representation& n);

struct VertexVector {
  VertexId vertex;
  Matrix vector;  // d(vertex) x 1
};

struct SubRepresentation {
  Representation sub;
  Intertwiner inclusion;  // sub -> M
};

/// Smallest subrepresentation containing the given vectors. Bases at each
/// vertex are in reduced column echelon form.
SubRepresentation subrep_generated_by(const Representation& m, const std::vector<VertexVector>& generators);

/// Subrepresentation spanned at each vertex by the columns of `spans` (which
/// must already be arrow-stable). Throws QuiverError(NOT_SUBREP).
SubRepresentation subrep_from_spans(const Representation& m, const std::vector<Matrix>& spans);

/// M/N computed on a complement of N built from standard basis vectors.
/// Throws QuiverError(NOT_SUBREP) if the inclusion is not injective or not arrow-stable.
Representation quotient_rep(const Representation& m, const Intertwiner& inclusion);

}  // namespace quivermod
