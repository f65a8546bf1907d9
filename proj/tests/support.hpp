#pragma once

// Shared generators and brute-force oracles for the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "quivermod/constructions.hpp"
#include "quivermod/errors.hpp"
#include "quivermod/io.hpp"

namespace qtest {

using namespace quivermod;

inline ErrorCode error_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const QuiverError& e) {
    return e.code();
  }
  return ErrorCode::Usage;
}

inline PresentationPtr quiver_from_text(std::string_view text) { return parse_quiver_file(text).quiver; }

inline Matrix to_matrix(const IntMatrix& a, std::size_t cols) {
  Matrix m(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(a[i][j]);
  return m;
}

inline DimensionVector ones(std::size_t n) { return DimensionVector(std::vector<std::int64_t>(n, 1)); }

inline Representation thin_rep(const PresentationPtr& q, const std::vector<Rational>& scalars) {
  return Representation::thin(q, ones(q->vertex_count()), scalars);
}

inline Representation thin_rep(const PresentationPtr& q, std::initializer_list<int> scalars) {
  std::vector<Rational> v;
  for (int s : scalars) v.emplace_back(s);
  return thin_rep(q, v);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

  /// p/q with |p| <= 6, 1 <= q <= 4; zero with probability `zero`.
  Rational rational(double zero = 0.0) {
    if (zero > 0 && chance(zero)) return 0;
    return Rational(uniform(-6, 6)) / Rational(uniform(1, 4));
  }
  Rational nonzero() {
    for (;;) {
      Rational r = rational();
      if (r != 0) return r;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Random thin scalars satisfying the relations of a built-in.
inline std::vector<Rational> random_thin_scalars(const FramedQuiver& fq, Rng& rng) {
  const std::size_t m = fq.quiver->arrow_count();
  std::vector<Rational> s(m);
  if (fq.family == "determinantal") {
    for (auto& x : s) x = rng.rational(0.25);
    if (rng.chance(0.15)) s[0] = s[1] = 0;
    return s;
  }
  // Preprojective: x_i y_i takes one common value c at every i.
  const std::size_t size = m / 2;
  const Rational c = rng.chance(0.3) ? Rational(0) : rng.nonzero();
  for (std::size_t i = 0; i < size; ++i) {
    if (c != 0) {
      s[i] = rng.nonzero();
      s[size + i] = c / s[i];
    } else {
      const bool x_zero = rng.chance(0.5);
      s[i] = x_zero ? Rational(0) : rng.rational(0.3);
      s[size + i] = x_zero ? rng.rational(0.3) : Rational(0);
    }
  }
  return s;
}

/// Random invertible diagonal-by-vertex base change (arbitrary GL for d > 1).
inline std::vector<Matrix> random_base_change(const DimensionVector& d, Rng& rng) {
  std::vector<Matrix> g;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto n = static_cast<std::size_t>(d[i]);
    for (;;) {
      Matrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.rational(0.3);
      if (n == 0 || determinant(m) != 0) {
        g.push_back(std::move(m));
        break;
      }
    }
  }
  return g;
}

inline std::vector<FramedQuiver> builtins() {
  return {build_determinantal(1), build_determinantal(2), build_determinantal(3),
          build_preprojective_affine_A(1), build_preprojective_affine_A(2), build_preprojective_affine_A(3)};
}

// ---- fuzzed presentations ------------------------------------------------

/// Random quiver with homogeneous relations built from random walks.
inline QuiverPresentation random_presentation(Rng& rng) {
  RawQuiver raw;
  raw.name = "fuzz" + std::to_string(rng.uniform(0, 999));
  raw.vertex_count = rng.uniform(1, 4);
  const auto arrows = rng.uniform(1, 6);
  for (std::int64_t a = 0; a < arrows; ++a) {
    const std::string name = (rng.chance(0.5) ? "b" : "z_") + std::to_string(a);
    raw.arrows.push_back({name, rng.uniform(0, raw.vertex_count - 1), rng.uniform(0, raw.vertex_count - 1)});
  }
  // Walks of length 1..3; written order is the reverse of application order.
  std::map<std::pair<std::int64_t, std::int64_t>, std::set<std::vector<std::string>>> walks;
  for (int w = 0; w < 30; ++w) {
    std::int64_t at = rng.uniform(0, raw.vertex_count - 1);
    const std::int64_t start = at;
    std::vector<std::string> applied;
    const auto length = rng.uniform(1, 3);
    for (std::int64_t step = 0; step < length; ++step) {
      std::vector<const RawArrow*> out;
      for (const auto& a : raw.arrows)
        if (a.tail == at) out.push_back(&a);
      if (out.empty()) break;
      const RawArrow* pick = out[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(out.size()) - 1))];
      applied.push_back(pick->name);
      at = pick->head;
    }
    if (applied.empty()) continue;
    std::reverse(applied.begin(), applied.end());
    walks[{start, at}].insert(applied);
  }
  for (const auto& [ends, paths] : walks) {
    if (!rng.chance(0.6)) continue;
    RawRelation rel;
    for (const auto& p : paths) {
      if (rel.terms.size() == 3) break;
      RawTerm t;
      t.coefficient = rng.nonzero();
      t.written_arrows = p;
      rel.terms.push_back(t);
    }
    if (ends.first == ends.second && rng.chance(0.3)) {
      RawTerm t;
      t.coefficient = rng.nonzero();
      t.trivial_vertex = static_cast<VertexId>(ends.first);
      rel.terms.push_back(t);
    }
    raw.relations.push_back(rel);
  }
  return validate_presentation(raw);
}

// ---- thin stability oracle -------------------------------------------------

/// Arrow-closed vertex subsets of a thin representation, by direct inspection of the scalars.
inline std::vector<std::uint64_t> closed_subsets(const Representation& m) {
  const QuiverPresentation& q = m.quiver();
  std::uint64_t support = 0;
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    if (m.dimension()[i] > 0) support |= std::uint64_t{1} << i;
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = support;; s = (s - 1) & support) {
    bool closed = true;
    for (ArrowId a = 0; a < q.arrow_count() && closed; ++a) {
      const Arrow& arr = q.arrow(a);
      if (m.thin_scalar(a) != 0 && (s >> arr.tail & 1) && !(s >> arr.head & 1)) closed = false;
    }
    if (closed) out.push_back(s);
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::int64_t theta_of(const Theta& theta, std::uint64_t s) {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < theta.size(); ++i)
    if (s >> i & 1) v += theta[i];
  return v;
}

inline StabilityStatus thin_status_oracle(const Representation& m, const Theta& theta) {
  std::uint64_t support = 0;
  for (std::size_t i = 0; i < m.dimension().size(); ++i)
    if (m.dimension()[i] > 0) support |= std::uint64_t{1} << i;
  std::int64_t best = 1;
  for (std::uint64_t s : closed_subsets(m)) {
    if (s == 0 || s == support) continue;
    best = std::min(best, theta_of(theta, s));
  }
  if (best < 0) return StabilityStatus::Unstable;
  if (best == 0) return StabilityStatus::StrictlySemistable;
  return StabilityStatus::Stable;
}

/// Every JH filtration of a thin semistable representation, as the sorted
/// multiset of factor supports. JH theory says the set has exactly one element.
inline std::set<std::vector<std::uint64_t>> jh_factor_multisets(const Representation& m, const Theta& theta) {
  const std::vector<std::uint64_t> closed = closed_subsets(m);
  std::uint64_t support = closed.back();
  const QuiverPresentation& q = m.quiver();
  // Stability of the subquotient on vertex set D: every proper nonempty T ⊂ D
  // closed under the nonzero arrows inside D has θ(T) > 0.
  const auto factor_stable = [&](std::uint64_t d) {
    for (std::uint64_t t = (d - 1) & d; t != 0; t = (t - 1) & d) {
      bool is_closed = true;
      for (ArrowId a = 0; a < q.arrow_count() && is_closed; ++a) {
        const Arrow& arr = q.arrow(a);
        if (m.thin_scalar(a) != 0 && (t >> arr.tail & 1) && (d >> arr.head & 1) && !(t >> arr.head & 1))
          is_closed = false;
      }
      if (is_closed && theta_of(theta, t) <= 0) return false;
    }
    return true;
  };
  std::set<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> factors;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t current) {
    if (current == support) {
      auto sorted = factors;
      std::sort(sorted.begin(), sorted.end());
      out.insert(sorted);
      return;
    }
    for (std::uint64_t next : closed) {
      if ((next & current) != current || next == current || theta_of(theta, next) != 0) continue;
      const std::uint64_t d = next & ~current;
      if (!factor_stable(d)) continue;
      factors.push_back(d);
      extend(next);
      factors.pop_back();
    }
  };
  extend(0);
  return out;
}

// ---- exponent enumeration --------------------------------------------------

/// All u in {0..bound}^m with inc(u) = n θ (arrow incidence given per arrow as (tail, head)).
inline std::vector<std::vector<int>> enumerate_weight(const QuiverPresentation& q, const std::vector<std::int64_t>& target,
                                                      int bound) {
  const std::size_t m = q.arrow_count();
  std::vector<std::vector<int>> out;
  std::vector<int> u(m, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == m) {
      std::vector<std::int64_t> w(q.vertex_count(), 0);
      for (std::size_t a = 0; a < m; ++a) {
        w[q.arrow(a).head] += u[a];
        w[q.arrow(a).tail] -= u[a];
      }
      if (w == target) out.push_back(u);
      return;
    }
    for (int k = 0; k <= bound; ++k) {
      u[j] = k;
      rec(j + 1);
    }
    u[j] = 0;
  };
  rec(0);
  return out;
}

inline IntVector to_int_vector(const std::vector<int>& v) {
  IntVector out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace qtest
