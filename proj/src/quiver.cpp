#include "quivermod/quiver.hpp"

#include <set>

#include "quivermod/errors.hpp"

namespace quivermod {

Path Path::trivial(VertexId vertex) {
  Path p;
  p.kind_ = Kind::Trivial;
  p.tail_ = p.head_ = vertex;
  return p;
}

Path Path::from_arrows(std::vector<ArrowId> applied_order, VertexId tail, VertexId head) {
  if (applied_order.empty()) return trivial(tail);
  Path p;
  p.kind_ = Kind::Arrows;
  p.tail_ = tail;
  p.head_ = head;
  p.arrows_ = std::move(applied_order);
  return p;
}

Path compose_paths(const Path& p, const Path& q) {
  if (p.is_zero() || q.is_zero()) return Path::zero();
  if (q.head() != p.tail()) return Path::zero();
  if (p.is_trivial()) return q;
  if (q.is_trivial()) return p;
  std::vector<ArrowId> arrows = q.arrows();
  arrows.insert(arrows.end(), p.arrows().begin(), p.arrows().end());
  return Path::from_arrows(std::move(arrows), q.tail(), p.head());
}

std::optional<ArrowId> QuiverPresentation::find_arrow(const std::string& name) const {
  for (ArrowId i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == name) return i;
  }
  return std::nullopt;
}

Path QuiverPresentation::arrow_path(ArrowId id) const {
  const Arrow& a = arrows_.at(id);
  return Path::from_arrows({id}, a.tail, a.head);
}

Path QuiverPresentation::path_from_written(const std::vector<std::string>& written) const {
  if (written.empty()) throw QuiverError(ErrorCode::Syntax, "empty path");
  Path result;
  bool first = true;
  // Rightmost name is applied first.
  for (auto it = written.rbegin(); it != written.rend(); ++it) {
    const auto id = find_arrow(*it);
    if (!id) throw QuiverError(ErrorCode::UnknownArrow, "unknown arrow '" + *it + "'");
    result = first ? arrow_path(*id) : compose_paths(arrow_path(*id), result);
    first = false;
  }
  return result;
}

bool QuiverPresentation::owns(const Path& p) const {
  if (p.is_zero()) return true;
  if (p.tail() >= vertex_count_ || p.head() >= vertex_count_) return false;
  if (p.is_trivial()) return p.tail() == p.head();
  VertexId at = p.tail();
  for (ArrowId id : p.arrows()) {
    if (id >= arrows_.size() || arrows_[id].tail != at) return false;
    at = arrows_[id].head;
  }
  return at == p.head();
}

std::string QuiverPresentation::path_string(const Path& p) const {
  if (p.is_zero()) return "0";
  if (p.is_trivial()) return "e_" + std::to_string(p.tail());
  std::string out;
  for (auto it = p.arrows().rbegin(); it != p.arrows().rend(); ++it) {
    if (!out.empty()) out += "*";
    out += arrows_.at(*it).name;
  }
  return out;
}

std::vector<Path> QuiverPresentation::paths_up_to(std::size_t max_length) const {
  std::vector<Path> all;
  std::vector<Path> frontier;
  for (VertexId v = 0; v < vertex_count_; ++v) frontier.push_back(Path::trivial(v));
  all = frontier;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (ArrowId a = 0; a < arrows_.size(); ++a) {
        Path q = compose_paths(arrow_path(a), p);
        if (!q.is_zero()) next.push_back(std::move(q));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

QuiverPresentation validate_presentation(const RawQuiver& raw) {
  std::vector<Violation> violations;
  QuiverPresentation q;
  q.name_ = raw.name;
  if (raw.vertex_count < 0) {
    violations.push_back({ErrorCode::DanglingEndpoint, "negative vertex count"});
  }
  q.vertex_count_ = raw.vertex_count < 0 ? 0 : static_cast<std::size_t>(raw.vertex_count);

  std::set<std::string> names;
  for (const RawArrow& a : raw.arrows) {
    if (!names.insert(a.name).second) {
      violations.push_back({ErrorCode::DuplicateName, "arrow name '" + a.name + "' used twice"});
    }
    const auto in_range = [&](std::int64_t v) { return v >= 0 && v < raw.vertex_count; };
    if (!in_range(a.tail) || !in_range(a.head)) {
      violations.push_back({ErrorCode::DanglingEndpoint,
                            "arrow '" + a.name + "' has endpoint outside 0.." +
                                std::to_string(raw.vertex_count - 1)});
    }
    q.arrows_.push_back({a.name, static_cast<VertexId>(in_range(a.tail) ? a.tail : 0),
                         static_cast<VertexId>(in_range(a.head) ? a.head : 0)});
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));

  for (std::size_t r = 0; r < raw.relations.size(); ++r) {
    const RawRelation& rr = raw.relations[r];
    const std::string where = "relation " + std::to_string(r + 1);
    Relation rel;
    bool ok = true;
    bool any_nonzero = false;
    for (const RawTerm& t : rr.terms) {
      Path p;
      if (t.written_arrows.empty()) {
        if (!t.trivial_vertex || *t.trivial_vertex >= q.vertex_count_) {
          violations.push_back({ErrorCode::DanglingEndpoint, where + ": trivial path at unknown vertex"});
          ok = false;
          continue;
        }
        p = Path::trivial(*t.trivial_vertex);
      } else {
        try {
          p = q.path_from_written(t.written_arrows);
        } catch (const QuiverError& e) {
          violations.push_back({e.code(), where + ": " + e.what()});
          ok = false;
          continue;
        }
        if (p.is_zero()) {
          violations.push_back({ErrorCode::NoncomposableTerm, where + ": term does not compose"});
          ok = false;
          continue;
        }
      }
      if (t.coefficient != 0) any_nonzero = true;
      rel.terms.push_back({t.coefficient, std::move(p)});
    }
    if (!ok) continue;
    if (!any_nonzero) {
      violations.push_back({ErrorCode::ZeroRelation, where + ": all coefficients are zero"});
      continue;
    }
    const Path& first = rel.terms.front().path;
    for (const RelationTerm& t : rel.terms) {
      if (t.path.tail() != first.tail() || t.path.head() != first.head()) {
        violations.push_back({ErrorCode::HeterogeneousRelation,
                              where + ": paths " + q.path_string(first) + " and " + q.path_string(t.path) +
                                  " have different endpoints"});
        ok = false;
        break;
      }
    }
    if (ok) q.relations_.push_back(std::move(rel));
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return q;
}

DimensionVector::DimensionVector(std::vector<std::int64_t> values) : values_(std::move(values)) {
  for (auto v : values_) {
    if (v < 0) throw QuiverError(ErrorCode::BadParameter, "negative dimension vector entry");
  }
}

std::int64_t DimensionVector::total() const {
  std::int64_t t = 0;
  for (auto v : values_) t += v;
  return t;
}

bool DimensionVector::is_thin() const {
  for (auto v : values_) {
    if (v > 1) return false;
  }
  return true;
}

bool Theta::is_zero() const {
  for (auto w : weights_) {
    if (w != 0) return false;
  }
  return true;
}

std::int64_t theta_pairing(const Theta& theta, const DimensionVector& e) {
  if (theta.size() != e.size()) {
    throw QuiverError(ErrorCode::VertexMismatch, "theta has " + std::to_string(theta.size()) +
                                                     " entries, dimension vector has " + std::to_string(e.size()));
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < e.size(); ++i) sum += theta[i] * e[i];
  return sum;
}

StabilityCondition::StabilityCondition(Theta theta, DimensionVector dimension)
    : theta_(std::move(theta)), dimension_(std::move(dimension)) {
  if (theta_pairing(theta_, dimension_) != 0) {
    throw QuiverError(ErrorCode::PairingNonzero, "theta . d must vanish");
  }
}

StabilityCondition framing_from_ranks(const std::vector<std::int64_t>& ranks) {
  if (ranks.empty()) throw QuiverError(ErrorCode::RankZero, "empty rank vector");
  for (auto r : ranks) {
    if (r <= 0) throw QuiverError(ErrorCode::RankZero, "summand ranks must be positive");
  }
  if (ranks.front() != 1) throw QuiverError(ErrorCode::NonunitBaseRank, "rank at vertex 0 must be 1");
  std::vector<std::int64_t> theta(ranks.size(), 1);
  std::int64_t rest = 0;
  for (std::size_t i = 1; i < ranks.size(); ++i) rest += ranks[i];
  theta[0] = -rest;
  return StabilityCondition(Theta(std::move(theta)), DimensionVector(ranks));
}

}  // namespace quivermod
