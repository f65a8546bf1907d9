#include "quivermod/stability.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "quivermod/errors.hpp"

namespace quivermod {

std::string_view status_name(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::Stable: return "stable";
    case StabilityStatus::StrictlySemistable: return "strictly-semistable";
    case StabilityStatus::Unstable: return "unstable";
  }
  return "?";
}

std::string_view outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::StableUpToBudget: return "stable-certified-up-to-budget";
    case SearchOutcome::Witness: return "witness";
    case SearchOutcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::uint64_t support_mask(const DimensionVector& d) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::vector<VertexId> mask_vertices(std::uint64_t mask) {
  std::vector<VertexId> out;
  for (VertexId v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

namespace {

constexpr std::size_t kMaxThinVertices = 30;

bool in_mask(std::uint64_t mask, VertexId v) { return (mask >> v) & 1; }

std::int64_t theta_of_mask(const Theta& theta, std::uint64_t mask) {
  std::int64_t s = 0;
  for (VertexId v : mask_vertices(mask)) s += theta[v];
  return s;
}

DimensionVector mask_dimension(std::size_t n, std::uint64_t mask) {
  std::vector<std::int64_t> d(n, 0);
  for (VertexId v : mask_vertices(mask)) d[v] = 1;
  return DimensionVector(std::move(d));
}

void require_thin(const Representation& m, const Theta& theta) {
  if (!m.dimension().is_thin()) throw QuiverError(ErrorCode::NotThin, "dimension vector is not thin");
  if (m.dimension().size() > kMaxThinVertices) throw QuiverError(ErrorCode::NotThin, "too many vertices for subset enumeration");
  if (theta_pairing(theta, m.dimension()) != 0) throw QuiverError(ErrorCode::PairingNonzero, "theta . d_M must vanish");
  if (m.dimension().total() == 0) throw QuiverError(ErrorCode::ZeroDimension, "zero representation");
}

// Lexicographic order on sorted vertex lists.
bool lex_less(std::uint64_t a, std::uint64_t b) { return mask_vertices(a) < mask_vertices(b); }

Witness make_thin_witness(const Representation& m, const Theta& theta, std::uint64_t mask) {
  return Witness{mask_dimension(m.dimension().size(), mask), theta_of_mask(theta, mask), mask_vertices(mask),
                 thin_subrep(m, mask)};
}

}  // namespace

bool is_closed_subset(const Representation& m, std::uint64_t mask) {
  const QuiverPresentation& q = m.quiver();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    if (m.thin_scalar(a) == 0) continue;
    if (in_mask(mask, arrow.tail) && !in_mask(mask, arrow.head)) return false;
  }
  return true;
}

SubRepresentation thin_subrep(const Representation& m, std::uint64_t mask) {
  std::vector<Matrix> spans;
  for (VertexId v = 0; v < m.dimension().size(); ++v) {
    const auto n = static_cast<std::size_t>(m.dimension()[v]);
    spans.push_back(in_mask(mask, v) && n == 1 ? Matrix::identity(1) : Matrix(n, 0));
  }
  return subrep_from_spans(m, spans);
}

Representation thin_restriction(const Representation& m, std::uint64_t mask) {
  const QuiverPresentation& q = m.quiver();
  mask &= support_mask(m.dimension());
  std::vector<Rational> scalars(q.arrow_count());
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    if (in_mask(mask, arrow.tail) && in_mask(mask, arrow.head)) scalars[a] = m.thin_scalar(a);
  }
  return Representation::thin(m.quiver_ptr(), mask_dimension(q.vertex_count(), mask), scalars);
}

StabilityVerdict is_semistable_thin(const Representation& m, const Theta& theta) {
  require_thin(m, theta);
  const std::uint64_t support = support_mask(m.dimension());
  std::optional<std::uint64_t> best;
  std::int64_t best_theta = 0;
  // Enumerate nonempty proper submasks of the support.
  for (std::uint64_t s = (support - 1) & support; s != 0; s = (s - 1) & support) {
    if (!is_closed_subset(m, s)) continue;
    const std::int64_t t = theta_of_mask(theta, s);
    if (t > 0) continue;
    const bool better = !best || t < best_theta ||
                        (t == best_theta && (std::popcount(s) < std::popcount(*best) ||
                                             (std::popcount(s) == std::popcount(*best) && lex_less(s, *best))));
    if (better) {
      best = s;
      best_theta = t;
    }
  }
  if (!best) return {StabilityStatus::Stable, std::nullopt};
  return {best_theta < 0 ? StabilityStatus::Unstable : StabilityStatus::StrictlySemistable,
          make_thin_witness(m, theta, *best)};
}

StabilityVerdict is_stable_framed(const Representation& m, const StabilityCondition& framing) {
  const DimensionVector& d = framing.dimension();
  if (d.size() == 0 || d[0] != 1) throw QuiverError(ErrorCode::BaseDimNotOne, "framing needs d(0) = 1");
  if (m.dimension() != d) throw QuiverError(ErrorCode::WrongDimension, "representation does not have the framing dimension");
  Matrix unit(1, 1);
  unit(0, 0) = 1;
  SubRepresentation generated = subrep_generated_by(m, {VertexVector{0, unit}});
  if (generated.sub.dimension() == m.dimension()) return {StabilityStatus::Stable, std::nullopt};
  const DimensionVector dims = generated.sub.dimension();
  const std::int64_t t = theta_pairing(framing.theta(), dims);
  std::vector<VertexId> verts;
  if (m.dimension().is_thin()) verts = mask_vertices(support_mask(dims));
  return {StabilityStatus::Unstable, Witness{dims, t, std::move(verts), std::move(generated)}};
}

bool is_generic(const Theta& theta, const DimensionVector& d) {
  if (theta_pairing(theta, d) != 0) throw QuiverError(ErrorCode::PairingNonzero, "theta . d must vanish");
  const std::size_t n = d.size();
  std::vector<std::int64_t> e(n, 0);
  while (true) {
    std::size_t i = 0;
    while (i < n && e[i] == d[i]) e[i++] = 0;
    if (i == n) break;
    ++e[i];
    const DimensionVector ev(e);
    if (ev == d) continue;
    if (theta_pairing(theta, ev) == 0) return false;
  }
  return true;
}

JHFiltration jordan_holder_thin(const Representation& m, const Theta& theta) {
  const StabilityVerdict v = is_semistable_thin(m, theta);
  if (v.status == StabilityStatus::Unstable) throw QuiverError(ErrorCode::NotSemistable, "representation is unstable");
  JHFiltration out;
  std::uint64_t remaining = support_mask(m.dimension());
  std::uint64_t accumulated = 0;
  while (remaining) {
    // A closed subset of the current quotient is closed w.r.t. arrows inside `remaining`.
    const Representation current = thin_restriction(m, remaining);
    std::optional<std::uint64_t> pick;
    for (std::uint64_t s = remaining; s != 0; s = (s - 1) & remaining) {
      if (theta_of_mask(theta, s) != 0 || !is_closed_subset(current, s)) continue;
      if (!pick || std::popcount(s) < std::popcount(*pick) ||
          (std::popcount(s) == std::popcount(*pick) && lex_less(s, *pick))) {
        pick = s;
      }
    }
    // remaining itself has θ = 0 and is closed, so pick always exists.
    Representation factor = thin_restriction(m, *pick);
    if (is_semistable_thin(factor, theta).status != StabilityStatus::Stable) {
      throw QuiverError(ErrorCode::NotSemistable, "Jordan-Hölder factor is not stable");
    }
    accumulated |= *pick;
    remaining &= ~*pick;
    out.chain.push_back(mask_vertices(accumulated));
    out.factors.push_back(std::move(factor));
  }
  return out;
}

bool s_equivalent(const Representation& m, const Representation& n, const Theta& theta) {
  if (!same_presentation(m, n)) throw QuiverError(ErrorCode::PresentationMismatch, "different presentations");
  const JHFiltration fm = jordan_holder_thin(m, theta);
  const JHFiltration fn = jordan_holder_thin(n, theta);
  if (fm.factors.size() != fn.factors.size()) return false;
  std::vector<bool> used(fn.factors.size(), false);
  for (const Representation& f : fm.factors) {
    bool matched = false;
    for (std::size_t j = 0; j < fn.factors.size() && !matched; ++j) {
      if (used[j] || fn.factors[j].dimension() != f.dimension()) continue;
      if (is_isomorphic(f, fn.factors[j])) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::vector<std::vector<std::vector<std::uint32_t>>> subspaces_mod_p(std::size_t n, std::uint32_t p) {
  std::vector<std::vector<std::vector<std::uint32_t>>> out;
  for (std::size_t k = 0; k <= n; ++k) {
    // Choose pivot columns c_0 < ... < c_{k-1}.
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
      // Free positions: (row i, column j) with j > pivot_i and j not a pivot.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = pivots[i] + 1; j < n; ++j) {
          if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.emplace_back(i, j);
        }
      }
      std::vector<std::uint32_t> values(free.size(), 0);
      while (true) {
        std::vector<std::vector<std::uint32_t>> basis(k, std::vector<std::uint32_t>(n, 0));
        for (std::size_t i = 0; i < k; ++i) basis[i][pivots[i]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) basis[free[f].first][free[f].second] = values[f];
        out.push_back(std::move(basis));
        std::size_t f = 0;
        while (f < values.size() && values[f] == p - 1) values[f++] = 0;
        if (f == values.size()) break;
        ++values[f];
      }
      // Next pivot combination.
      std::size_t i = k;
      while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
  return out;
}

namespace {

using ModMatrix = std::vector<std::vector<std::uint32_t>>;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::optional<ModMatrix> reduce_mod(const Matrix& m, std::uint32_t p) {
  ModMatrix out(m.rows(), std::vector<std::uint32_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer den = denominator_of(m(i, j)) % p;
      if (den == 0) return std::nullopt;
      Integer num = numerator_of(m(i, j)) % p;
      if (num < 0) num += p;
      const auto n = num.convert_to<std::uint64_t>();
      out[i][j] = static_cast<std::uint32_t>(n * inverse_mod(den.convert_to<std::uint32_t>(), p) % p);
    }
  }
  return out;
}

// w reduced against an RREF row basis; true iff w lies in its span.
bool in_span_mod(const std::vector<std::vector<std::uint32_t>>& basis, std::vector<std::uint32_t> w, std::uint32_t p) {
  for (const auto& row : basis) {
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    const std::uint64_t f = w[pivot];
    if (f == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = static_cast<std::uint32_t>((w[j] + p - f * row[j] % p) % p);
  }
  return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

std::optional<Witness> lift_witness(const Representation& m, const Theta& theta,
                                    const std::vector<const std::vector<std::vector<std::uint32_t>>*>& tuple,
                                    std::uint32_t p) {
  std::vector<Matrix> spans;
  for (VertexId v = 0; v < tuple.size(); ++v) {
    const auto& basis = *tuple[v];
    const auto n = static_cast<std::size_t>(m.dimension()[v]);
    Matrix s(n, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t x = basis[k][j];
        s(j, k) = x > static_cast<std::int64_t>(p / 2) ? x - static_cast<std::int64_t>(p) : x;
      }
    }
    spans.push_back(std::move(s));
  }
  try {
    SubRepresentation sub = subrep_from_spans(m, spans);
    const DimensionVector dims = sub.sub.dimension();
    return Witness{dims, theta_pairing(theta, dims), {}, std::move(sub)};
  } catch (const QuiverError&) {
    return std::nullopt;
  }
}

struct ModPScan {
  bool completed = false;
  bool found_negative = false;
  bool found_neutral = false;
  std::optional<Witness> negative;
  std::optional<Witness> neutral;
};

ModPScan scan_mod_p(const Representation& m, const Theta& theta, std::uint32_t p, std::uint64_t budget) {
  ModPScan scan;
  const QuiverPresentation& q = m.quiver();
  std::vector<ModMatrix> maps;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    auto r = reduce_mod(m.map(a), p);
    if (!r) return scan;
    maps.push_back(std::move(*r));
  }
  const std::size_t nv = q.vertex_count();
  std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> choices;
  std::uint64_t total = 1;
  for (VertexId v = 0; v < nv; ++v) {
    choices.push_back(subspaces_mod_p(static_cast<std::size_t>(m.dimension()[v]), p));
    total *= choices.back().size();
    if (total > budget) return scan;
  }
  const std::int64_t full = m.dimension().total();
  std::vector<std::size_t> index(nv, 0);
  std::vector<const std::vector<std::vector<std::uint32_t>>*> tuple(nv);
  while (true) {
    std::int64_t sub_total = 0;
    std::vector<std::int64_t> dims(nv);
    for (VertexId v = 0; v < nv; ++v) {
      tuple[v] = &choices[v][index[v]];
      dims[v] = static_cast<std::int64_t>(tuple[v]->size());
      sub_total += dims[v];
    }
    if (sub_total != 0 && sub_total != full) {
      const std::int64_t t = theta_pairing(theta, DimensionVector(dims));
      if (t <= 0) {
        bool stable_tuple = true;
        for (ArrowId a = 0; a < q.arrow_count() && stable_tuple; ++a) {
          const Arrow& arrow = q.arrow(a);
          for (const auto& row : *tuple[arrow.tail]) {
            std::vector<std::uint32_t> w(maps[a].size(), 0);
            for (std::size_t i = 0; i < w.size(); ++i) {
              std::uint64_t acc = 0;
              for (std::size_t j = 0; j < row.size(); ++j) acc = (acc + std::uint64_t{maps[a][i][j]} * row[j]) % p;
              w[i] = static_cast<std::uint32_t>(acc);
            }
            if (!in_span_mod(*tuple[arrow.head], std::move(w), p)) {
              stable_tuple = false;
              break;
            }
          }
        }
        if (stable_tuple) {
          (t < 0 ? scan.found_negative : scan.found_neutral) = true;
          auto& slot = t < 0 ? scan.negative : scan.neutral;
          if (!slot) slot = lift_witness(m, theta, tuple, p);
        }
      }
    }
    std::size_t v = 0;
    while (v < nv && index[v] + 1 == choices[v].size()) index[v++] = 0;
    if (v == nv) break;
    ++index[v];
  }
  scan.completed = true;
  return scan;
}

}  // namespace

GeneralVerdict destabilizer_search_general(const Representation& m, const Theta& theta, const SearchBudget& budget) {
  if (theta_pairing(theta, m.dimension()) != 0) throw QuiverError(ErrorCode::PairingNonzero, "theta . d_M must vanish");
  GeneralVerdict out;
  if (m.dimension().is_thin()) {
    StabilityVerdict v = is_semistable_thin(m, theta);
    out.exhaustive = true;
    out.status = v.status;
    out.outcome = v.witness ? SearchOutcome::Witness : SearchOutcome::StableUpToBudget;
    out.witness = std::move(v.witness);
    out.note = "thin: exhaustive closed-subset enumeration";
    return out;
  }
  if (m.dimension().total() == 0) throw QuiverError(ErrorCode::ZeroDimension, "zero representation");

  // (a) subrepresentations generated by single vectors.
  std::optional<Witness> negative;
  std::optional<Witness> neutral;
  const std::int64_t full = m.dimension().total();
  for (VertexId v = 0; v < m.dimension().size(); ++v) {
    const auto n = static_cast<std::size_t>(m.dimension()[v]);
    std::vector<Matrix> candidates;
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(n, 1);
      e(j, 0) = 1;
      candidates.push_back(std::move(e));
    }
    if (n > 1) {
      Matrix ones(n, 1);
      for (std::size_t j = 0; j < n; ++j) ones(j, 0) = 1;
      candidates.push_back(std::move(ones));
    }
    for (const Matrix& c : candidates) {
      SubRepresentation sub = subrep_generated_by(m, {VertexVector{v, c}});
      const DimensionVector dims = sub.sub.dimension();
      if (dims.total() == full) continue;
      const std::int64_t t = theta_pairing(theta, dims);
      if (t < 0 && (!negative || t < negative->theta_value)) {
        negative = Witness{dims, t, {}, std::move(sub)};
      } else if (t == 0 && !neutral) {
        neutral = Witness{dims, t, {}, std::move(sub)};
      }
    }
  }
  if (negative) {
    out.outcome = SearchOutcome::Witness;
    out.status = StabilityStatus::Unstable;
    out.witness = std::move(negative);
    out.note = "generated-subrepresentation search";
    return out;
  }

  // (b) exhaustive subspace enumeration over small prime fields.
  bool certified_semistable = false;
  bool certified_stable = false;
  bool unliftable_negative = false;
  for (std::uint32_t p : budget.primes) {
    ModPScan scan = scan_mod_p(m, theta, p, budget.max_subspace_tuples);
    if (scan.negative) {
      out.outcome = SearchOutcome::Witness;
      out.status = StabilityStatus::Unstable;
      out.witness = std::move(scan.negative);
      out.note = "lifted from F_" + std::to_string(p);
      return out;
    }
    if (!neutral && scan.neutral) neutral = std::move(scan.neutral);
    if (!scan.completed) continue;
    if (scan.found_negative) {
      unliftable_negative = true;
      continue;
    }
    // A rational subrepresentation reduces to one over F_p with the same dimension vector.
    certified_semistable = true;
    if (!scan.found_neutral) {
      certified_stable = true;
      out.note = "no destabilising subspace over F_" + std::to_string(p);
      break;
    }
  }
  if (certified_stable) {
    out.outcome = SearchOutcome::StableUpToBudget;
    out.status = StabilityStatus::Stable;
    out.exhaustive = true;
    return out;
  }
  if (neutral && certified_semistable) {
    out.outcome = SearchOutcome::Witness;
    out.status = StabilityStatus::StrictlySemistable;
    out.exhaustive = true;
    out.witness = std::move(neutral);
    out.note = "semistable by exhaustive F_p enumeration; theta-neutral subrepresentation found";
    return out;
  }
  if (neutral || unliftable_negative || certified_semistable) {
    out.outcome = SearchOutcome::Inconclusive;
    out.witness = std::move(neutral);
    out.note = unliftable_negative ? "destabilising subspaces exist mod p but none lifted"
                                   : "semistable; stability undecided";
    return out;
  }
  out.outcome = SearchOutcome::StableUpToBudget;
  out.status = StabilityStatus::Stable;
  out.exhaustive = false;
  out.note = "no witness within budget (non-exhaustive)";
  return out;
}

}  // namespace quivermod
