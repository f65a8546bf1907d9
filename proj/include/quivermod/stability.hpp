#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivermod/representation.hpp"

namespace quivermod {

enum class StabilityStatus { Stable, StrictlySemistable, Unstable };

std::string_view status_name(StabilityStatus s);

/// A destabilising (or θ-neutral) proper nonzero subrepresentation.
struct Witness {
  DimensionVector dimension;
  std::int64_t theta_value = 0;
  /// The arrow-closed vertex subset for thin representations; empty otherwise.
  std::vector<VertexId> vertices;
  SubRepresentation subrep;
};

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::Stable;
  std::optional<Witness> witness;
};

/// Exhaustive over arrow-closed vertex subsets of the support.
/// Throws NOT_THIN, PAIRING_NONZERO, ZERO_DIMENSION.
StabilityVerdict is_semistable_thin(const Representation& m, const Theta& theta);

/// Stable iff the vector at vertex 0 generates M. Never strictly semistable.
/// Throws WRONG_DIMENSION, BASE_DIM_NOT_ONE.
StabilityVerdict is_stable_framed(const Representation& m, const StabilityCondition& framing);

/// No 0 < e < d (componentwise, e != 0, d) with θ·e = 0. Exact genericity for
/// thin d, a sufficient condition in general. Throws PAIRING_NONZERO.
bool is_generic(const Theta& theta, const DimensionVector& d);

/// Arrow-closed vertex subsets of a thin representation, as bit masks.
bool is_closed_subset(const Representation& m, std::uint64_t mask);
/// Subrepresentation of a thin M supported on a closed vertex subset.
SubRepresentation thin_subrep(const Representation& m, std::uint64_t mask);
/// Thin M restricted to a vertex subset (the subquotient on that subset).
Representation thin_restriction(const Representation& m, std::uint64_t mask);
std::uint64_t support_mask(const DimensionVector& d);
std::vector<VertexId> mask_vertices(std::uint64_t mask);

struct JHFiltration {
  /// Vertex sets of M_1 ⊂ ... ⊂ M_k = M (M_0 = 0 omitted).
  std::vector<std::vector<VertexId>> chain;
  std::vector<Representation> factors;
};

/// Greedy: the smallest (then lexicographically first) closed θ-neutral subset
/// is split off and the procedure recurses on the quotient. Throws NOT_SEMISTABLE.
JHFiltration jordan_holder_thin(const Representation& m, const Theta& theta);

/// Composition factor multisets agree up to isomorphism. Throws NOT_SEMISTABLE.
bool s_equivalent(const Representation& m, const Representation& n, const Theta& theta);

struct SearchBudget {
  /// Largest number of subspace tuples enumerated per prime.
  std::uint64_t max_subspace_tuples = 200000;
  std::vector<std::uint32_t> primes = {2, 3, 5, 7};
};

enum class SearchOutcome { StableUpToBudget, Witness, Inconclusive };

std::string_view outcome_name(SearchOutcome o);

struct GeneralVerdict {
  SearchOutcome outcome = SearchOutcome::Inconclusive;
  /// Meaningful for Witness, and for StableUpToBudget when exhaustive.
  StabilityStatus status = StabilityStatus::Stable;
  /// True when the result is a proof: thin input, or a complete subspace
  /// enumeration over F_p for a prime not dividing any denominator.
  bool exhaustive = false;
  std::optional<Witness> witness;
  std::string note;
};

/// Heuristic destabiliser search for arbitrary d; never certifies stability
/// without an exhaustive argument. Throws PAIRING_NONZERO.
GeneralVerdict destabilizer_search_general(const Representation& m, const Theta& theta,
                                           const SearchBudget& budget = {});

/// All subspaces of F_p^n as row-reduced bases (k x n row lists, entries in [0, p)).
std::vector<std::vector<std::vector<std::uint32_t>>> subspaces_mod_p(std::size_t n, std::uint32_t p);

}  // namespace quivermod
