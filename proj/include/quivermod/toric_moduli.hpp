#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivermod/lattice.hpp"
#include "quivermod/representation.hpp"

namespace quivermod {

/// Arrow-exponent lattice L = Z^{Q1} of a quiver with thin dimension vector
/// (1,...,1), its incidence map inc(e_a) = e_{h(a)} - e_{t(a)}, and the
/// relation lattice K from binomial relations.
struct ArrowLattice {
  PresentationPtr quiver;
  std::size_t arrow_count = 0;
  std::size_t vertex_count = 0;
  /// vertex_count x arrow_count.
  IntMatrix incidence;
  /// Generators of K as produced by the relations (rows in Z^{Q1}).
  IntMatrix relation_vectors;
  /// Indices of relations whose thin evaluation vanishes identically.
  std::vector<std::size_t> vanishing_relations;
  /// Basis of K_sat.
  IntMatrix saturated;
  Integer saturation_index = 1;

  /// Quotient L' = L / K_sat with coordinates: π(u) = u * projection.
  std::size_t quotient_rank = 0;
  IntMatrix projection;  // arrow_count x quotient_rank
  IntMatrix lift;        // quotient_rank rows in Z^{Q1}, π(lift_j) = e_j

  IntVector project(const IntVector& arrow_exponents) const;
  /// inc of an L' element.
  IntVector incidence_of(const IntVector& quotient_point) const;
  /// Total arrow degree of an L' element (well defined because K is degree-homogeneous).
  Integer degree_of(const IntVector& quotient_point) const;
  /// Arrow-exponent vector written as a monomial, e.g. "a*k1^2"; "1" for zero.
  std::string monomial_string(const IntVector& arrow_exponents) const;
};

/// Evaluates relations on thin coordinates. Throws NON_TORIC_RELATIONS
/// (not zero, not a two-term binomial with opposite coefficients, or not
/// homogeneous in arrow degree) and TORSION_QUOTIENT (K not saturated).
ArrowLattice thin_reduce_relations(PresentationPtr quiver);

/// A monomial semi-invariant of weight χ_θ^degree.
struct SemiInvariant {
  /// Lexicographically largest arrow-exponent representative.
  IntVector exponent;
  /// Image in L'.
  IntVector point;
  Integer degree = 0;

  friend bool operator==(const SemiInvariant&, const SemiInvariant&) = default;
};

struct SemiInvariantMonoid {
  Theta theta;
  /// Minimal generators sorted by (degree, arrow degree, exponent descending).
  std::vector<SemiInvariant> generators;
};

/// Hilbert basis of {(π(u), n) : u in N^{Q1}, inc(u) = n θ}. Throws VERTEX_MISMATCH, PAIRING_NONZERO.
SemiInvariantMonoid semiinvariant_generators(const ArrowLattice& lattice, const Theta& theta);

/// True iff `point` (in L') lies in the N-span of the generators' points with
/// matching degree.
bool in_monoid(const ArrowLattice& lattice, const SemiInvariantMonoid& monoid, const IntVector& point,
               const Integer& degree);

struct InvariantRing {
  std::vector<SemiInvariant> generators;
  /// Binomials over generator indices: x^first - x^second.
  std::vector<Binomial> relations;
};

/// θ = 0: degree-0 Hilbert basis and minimal binomial generators of the relation ideal.
InvariantRing invariant_ring(const ArrowLattice& lattice);

/// A chart coordinate x^numerator / f^f_power.
struct ChartGenerator {
  /// Coordinates in the common degree-zero lattice L0.
  IntVector coordinates;
  IntVector numerator;
  Integer f_power = 0;
};

struct Chart {
  std::string name;
  SemiInvariant distinguished;
  std::vector<ChartGenerator> generators;
  /// Binomial relations among the generators (empty for free charts).
  std::vector<Binomial> relations;

  bool is_free(std::size_t lattice_rank) const;
};

struct ChartAtlas {
  ArrowLattice lattice;
  Theta theta;
  /// Rank of the common degree-zero lattice L0.
  std::size_t lattice_rank = 0;
  /// Basis of L0 in L' coordinates.
  IntMatrix lattice_basis;
  std::vector<Chart> charts;
  /// transitions[i][j]: row k expresses generator k of chart j as a Laurent
  /// monomial in the generators of chart i.
  std::vector<std::vector<IntMatrix>> transitions;
};

/// Proj of the semi-invariant ring as affine toric charts, one per degree-one
/// generator whose chart is full-dimensional and pointed.
/// Throws NO_DEGREE_ONE, EMPTY_STABLE_LOCUS, PAIRING_NONZERO.
ChartAtlas moduli_atlas(const ArrowLattice& lattice, const Theta& theta);

/// Chart coordinates of a thin representation, or nullopt when f vanishes on it.
std::optional<std::vector<Rational>> chart_coordinates(const ChartAtlas& atlas, std::size_t chart,
                                                       const Representation& m);

/// A representation whose chart coordinates are `point` (free charts only).
Representation lift_chart_point(const ChartAtlas& atlas, std::size_t chart, const std::vector<Rational>& point);

struct QuotientFan {
  std::size_t rank = 0;
  IntMatrix rays;
  /// Each maximal cone as sorted ray indices; cones sorted.
  std::vector<std::vector<std::size_t>> cones;
};

/// Dual cones of free charts. Throws NONSMOOTH_CHART; verifies that cones meet in common faces.
QuotientFan quotient_fan(const ChartAtlas& atlas);

/// Builds a fan from explicit rays and cones (normalised ordering).
QuotientFan make_fan(std::size_t rank, IntMatrix rays, std::vector<std::vector<std::size_t>> cones);

/// Unimodular equivalence of fans. Throws RANK_MISMATCH.
bool fan_equivalent(const QuotientFan& a, const QuotientFan& b);

struct UnstableComponent {
  /// Destabilising vertex subset S (θ(S) < 0).
  std::vector<VertexId> subset;
  /// Arrows that must vanish for S to be closed.
  std::vector<ArrowId> vanishing_arrows;
};

/// Coordinate-subspace description of the unstable locus, redundant pieces removed.
std::vector<UnstableComponent> unstable_locus_thin(const ArrowLattice& lattice, const Theta& theta);

}  // namespace quivermod
