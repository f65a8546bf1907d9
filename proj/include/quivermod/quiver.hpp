#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivermod/numeric.hpp"

namespace quivermod {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string name;
  VertexId tail = 0;
  VertexId head = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A path of a quiver, the trivial path e_i, or the absorbing zero element.
///
/// Arrows are stored in application order: for p = a_k ... a_1 the first
/// stored arrow is a_1. Written (right-to-left) order is the reverse.
class Path {
 public:
  /// The zero element.
  Path() = default;
  static Path zero() { return Path(); }
  static Path trivial(VertexId vertex);
  /// Unchecked; the caller guarantees consecutive arrows compose.
  static Path from_arrows(std::vector<ArrowId> applied_order, VertexId tail, VertexId head);

  bool is_zero() const noexcept { return kind_ == Kind::Zero; }
  bool is_trivial() const noexcept { return kind_ == Kind::Trivial; }

  VertexId tail() const noexcept { return tail_; }
  VertexId head() const noexcept { return head_; }
  const std::vector<ArrowId>& arrows() const noexcept { return arrows_; }
  std::size_t length() const noexcept { return arrows_.size(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  enum class Kind { Zero, Trivial, Arrows };

  Kind kind_ = Kind::Zero;
  VertexId tail_ = 0;
  VertexId head_ = 0;
  std::vector<ArrowId> arrows_;
};

/// p·q: q is applied first. Zero when h(q) != t(p) or either factor is zero.
Path compose_paths(const Path& p, const Path& q);

struct RelationTerm {
  Rational coefficient;
  Path path;

  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

struct Relation {
  std::vector<RelationTerm> terms;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Unvalidated input to validate_presentation. Paths are given by arrow names
/// in written order ("k1*a*k2" is {"k1","a","k2"}); an empty name list with
/// trivial_vertex set denotes e_i.
struct RawTerm {
  Rational coefficient = 1;
  std::vector<std::string> written_arrows;
  std::optional<VertexId> trivial_vertex;
};

struct RawRelation {
  std::vector<RawTerm> terms;
};

struct RawArrow {
  std::string name;
  std::int64_t tail = 0;
  std::int64_t head = 0;
};

struct RawQuiver {
  std::string name;
  std::int64_t vertex_count = 0;
  std::vector<RawArrow> arrows;
  std::vector<RawRelation> relations;
};

class QuiverPresentation;

/// Throws ValidationError listing every violation.
QuiverPresentation validate_presentation(const RawQuiver& raw);

/// Quiver with relations. Vertices are 0..n-1. Immutable once validated.
class QuiverPresentation {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(ArrowId id) const { return arrows_.at(id); }
  const std::vector<Relation>& relations() const noexcept { return relations_; }

  std::optional<ArrowId> find_arrow(const std::string& name) const;

  Path arrow_path(ArrowId id) const;
  /// Builds a path from names in written order; zero if the arrows do not compose.
  /// Throws QuiverError(UNKNOWN_ARROW) for unknown names.
  Path path_from_written(const std::vector<std::string>& written) const;

  /// True when the path's arrows exist here and compose consecutively.
  bool owns(const Path& p) const;

  /// Arrow names of p in written order joined by '*' ("e_i" for trivial paths, "0" for zero).
  std::string path_string(const Path& p) const;

  /// Every nonzero path of length <= max_length, trivial paths included.
  std::vector<Path> paths_up_to(std::size_t max_length) const;

  friend bool operator==(const QuiverPresentation&, const QuiverPresentation&) = default;

 private:
  friend QuiverPresentation validate_presentation(const RawQuiver& raw);
  QuiverPresentation() = default;

  std::string name_;
  std::size_t vertex_count_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
};

/// Non-negative integer per vertex.
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<std::int64_t> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::int64_t operator[](std::size_t i) const { return values_.at(i); }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::int64_t total() const;
  bool is_thin() const;

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
  friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Integer weight per vertex.
class Theta {
 public:
  Theta() = default;
  explicit Theta(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {}

  std::size_t size() const noexcept { return weights_.size(); }
  std::int64_t operator[](std::size_t i) const { return weights_.at(i); }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  bool is_zero() const;

  friend bool operator==(const Theta&, const Theta&) = default;

 private:
  std::vector<std::int64_t> weights_;
};

/// θ together with the dimension vector it is a stability condition for (θ·d = 0).
class StabilityCondition {
 public:
  /// Throws QuiverError(PAIRING_NONZERO) or VERTEX_MISMATCH.
  StabilityCondition(Theta theta, DimensionVector dimension);

  const Theta& theta() const noexcept { return theta_; }
  const DimensionVector& dimension() const noexcept { return dimension_; }

  friend bool operator==(const StabilityCondition&, const StabilityCondition&) = default;

 private:
  Theta theta_;
  DimensionVector dimension_;
};

/// Σ θ(i) e(i). Throws QuiverError(VERTEX_MISMATCH) on size disagreement.
std::int64_t theta_pairing(const Theta& theta, const DimensionVector& e);

/// The tilting-summand framing: d(i) = r_i, θ(0) = -Σ_{i>0} r_i, θ(i) = 1 otherwise.
StabilityCondition framing_from_ranks(const std::vector<std::int64_t>& ranks);

}  // namespace quivermod
