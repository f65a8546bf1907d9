#include "quivermod/toric_moduli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "quivermod/errors.hpp"
#include "quivermod/stability.hpp"

namespace quivermod {

namespace {

Integer sum_of(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += x;
  return s;
}

IntVector theta_vector(const Theta& theta) {
  IntVector out;
  for (auto w : theta.weights()) out.emplace_back(w);
  return out;
}

DimensionVector all_ones(std::size_t n) { return DimensionVector(std::vector<std::int64_t>(n, 1)); }

IntMatrix columns_as_rows(const IntMatrix& rows_matrix, std::size_t cols) { return transpose(rows_matrix, cols); }

/// Minimal elements of a finite generating set of a pointed monoid, for a
/// grading positive on every nonzero candidate.
std::vector<std::size_t> minimal_subset(const IntMatrix& candidates, const std::function<Integer(const IntVector&)>& grade) {
  std::map<IntVector, bool> memo;
  std::function<bool(const IntVector&)> member = [&](const IntVector& x) -> bool {
    if (is_zero(x)) return true;
    const Integer gx = grade(x);
    if (gx <= 0) return false;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    bool found = false;
    for (const auto& s : candidates) {
      if (grade(s) <= gx && member(subtract(x, s))) {
        found = true;
        break;
      }
    }
    memo[x] = found;
    return found;
  };
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const IntVector& t = candidates[i];
    bool reducible = false;
    for (std::size_t j = 0; j < candidates.size() && !reducible; ++j) {
      if (j == i || candidates[j] == t) continue;
      if (grade(candidates[j]) >= grade(t)) continue;
      reducible = member(subtract(t, candidates[j]));
    }
    if (!reducible) keep.push_back(i);
  }
  return keep;
}

Rational power(const Rational& base, const Integer& exponent) {
  Rational r = 1;
  for (Integer k = 0; k < exponent; ++k) r *= base;
  return r;
}

Rational monomial_value(const IntVector& exponent, const std::vector<Rational>& scalars) {
  Rational r = 1;
  for (std::size_t a = 0; a < exponent.size(); ++a) {
    if (exponent[a] != 0) r *= power(scalars[a], exponent[a]);
  }
  return r;
}

void require_theta(const ArrowLattice& lattice, const Theta& theta) {
  if (theta.size() != lattice.vertex_count)
    throw QuiverError(ErrorCode::VertexMismatch, "theta has " + std::to_string(theta.size()) + " entries, quiver has " +
                                                     std::to_string(lattice.vertex_count) + " vertices");
  std::int64_t s = 0;
  for (auto w : theta.weights()) s += w;
  if (s != 0) throw QuiverError(ErrorCode::PairingNonzero, "theta does not pair to zero with (1,...,1)");
}

SemiInvariant make_semiinvariant(const ArrowLattice& lattice, const IntVector& point, const Integer& degree) {
  const IntMatrix a = columns_as_rows(lattice.projection, lattice.quotient_rank);
  const IntMatrix f = fibre(a, lattice.arrow_count, IntVector(lattice.arrow_count, 1), point, lattice.degree_of(point));
  if (f.empty()) throw std::logic_error("empty fibre over a monoid element");
  return SemiInvariant{f.front(), point, degree};
}

}  // namespace

IntVector ArrowLattice::project(const IntVector& arrow_exponents) const {
  if (quotient_rank == 0) return {};
  return row_times(arrow_exponents, projection);
}

IntVector ArrowLattice::incidence_of(const IntVector& quotient_point) const {
  IntVector u(arrow_count, 0);
  for (std::size_t j = 0; j < quotient_rank; ++j) u = add(u, scale(quotient_point[j], lift[j]));
  return apply_matrix(incidence, u);
}

Integer ArrowLattice::degree_of(const IntVector& quotient_point) const {
  Integer d = 0;
  for (std::size_t j = 0; j < quotient_rank; ++j) d += quotient_point[j] * sum_of(lift[j]);
  return d;
}

std::string ArrowLattice::monomial_string(const IntVector& arrow_exponents) const {
  std::string out;
  for (std::size_t a = 0; a < arrow_exponents.size(); ++a) {
    if (arrow_exponents[a] == 0) continue;
    if (!out.empty()) out += "*";
    out += quiver->arrow(a).name;
    if (arrow_exponents[a] != 1) out += "^" + to_string(arrow_exponents[a]);
  }
  return out.empty() ? "1" : out;
}

ArrowLattice thin_reduce_relations(PresentationPtr quiver) {
  ArrowLattice lat;
  lat.quiver = quiver;
  lat.arrow_count = quiver->arrow_count();
  lat.vertex_count = quiver->vertex_count();
  lat.incidence.assign(lat.vertex_count, IntVector(lat.arrow_count, 0));
  for (ArrowId a = 0; a < lat.arrow_count; ++a) {
    const Arrow& arrow = quiver->arrow(a);
    lat.incidence[arrow.head][a] += 1;
    lat.incidence[arrow.tail][a] -= 1;
  }

  const auto& relations = quiver->relations();
  for (std::size_t r = 0; r < relations.size(); ++r) {
    std::map<IntVector, Rational> poly;
    for (const auto& term : relations[r].terms) {
      if (term.path.is_zero()) continue;
      IntVector u(lat.arrow_count, 0);
      for (ArrowId a : term.path.arrows()) u[a] += 1;
      poly[u] += term.coefficient;
    }
    std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
    if (poly.empty()) {
      lat.vanishing_relations.push_back(r);
      continue;
    }
    if (poly.size() != 2 || poly.begin()->second != -std::next(poly.begin())->second)
      throw QuiverError(ErrorCode::NonToricRelations,
                        "relation " + std::to_string(r) + " is not a binomial x^u - x^v on thin representations");
    const IntVector k = subtract(std::prev(poly.end())->first, poly.begin()->first);
    if (sum_of(k) != 0)
      throw QuiverError(ErrorCode::NonToricRelations,
                        "relation " + std::to_string(r) + " is not homogeneous in arrow degree");
    if (!is_zero(apply_matrix(lat.incidence, k)))
      throw QuiverError(ErrorCode::NonToricRelations, "relation " + std::to_string(r) + " has inconsistent endpoints");
    lat.relation_vectors.push_back(k);
  }

  const Saturation sat = saturate(lat.relation_vectors, lat.arrow_count);
  if (sat.index != 1)
    throw QuiverError(ErrorCode::TorsionQuotient,
                      "relation lattice has index " + to_string(sat.index) + " in its saturation");
  lat.saturation_index = sat.index;
  lat.saturated.assign(sat.basis.begin(), sat.basis.begin() + static_cast<std::ptrdiff_t>(sat.rank));
  lat.quotient_rank = lat.arrow_count - sat.rank;
  lat.projection.assign(lat.arrow_count, IntVector(lat.quotient_rank, 0));
  for (std::size_t i = 0; i < lat.arrow_count; ++i)
    for (std::size_t j = 0; j < lat.quotient_rank; ++j) lat.projection[i][j] = sat.coordinates[i][sat.rank + j];
  lat.lift.assign(sat.basis.begin() + static_cast<std::ptrdiff_t>(sat.rank), sat.basis.end());
  return lat;
}

SemiInvariantMonoid semiinvariant_generators(const ArrowLattice& lattice, const Theta& theta) {
  require_theta(lattice, theta);
  const std::size_t m = lattice.arrow_count;
  IntMatrix a = lattice.incidence;
  const IntVector th = theta_vector(theta);
  for (std::size_t v = 0; v < lattice.vertex_count; ++v) a[v].push_back(-th[v]);

  // Images (π(u), n) of the Hilbert basis of {(u, n) : inc(u) = nθ}.
  std::set<IntVector> images;
  for (const IntVector& h : hilbert_basis_kernel(a, m + 1)) {
    IntVector u(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(m));
    IntVector key = lattice.project(u);
    key.push_back(h[m]);
    images.insert(key);
  }
  IntMatrix candidates(images.begin(), images.end());
  const auto grade = [&](const IntVector& x) {
    IntVector point(x.begin(), x.end() - 1);
    return lattice.degree_of(point) + x.back();
  };
  SemiInvariantMonoid out;
  out.theta = theta;
  for (std::size_t i : minimal_subset(candidates, grade)) {
    IntVector point(candidates[i].begin(), candidates[i].end() - 1);
    out.generators.push_back(make_semiinvariant(lattice, point, candidates[i].back()));
  }
  std::sort(out.generators.begin(), out.generators.end(), [](const SemiInvariant& x, const SemiInvariant& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    const Integer dx = sum_of(x.exponent), dy = sum_of(y.exponent);
    if (dx != dy) return dx < dy;
    return x.exponent > y.exponent;
  });
  return out;
}

bool in_monoid(const ArrowLattice& lattice, const SemiInvariantMonoid& monoid, const IntVector& point,
               const Integer& degree) {
  IntMatrix gens;
  for (const auto& g : monoid.generators) {
    IntVector x = g.point;
    x.push_back(g.degree);
    gens.push_back(std::move(x));
  }
  IntVector target = point;
  target.push_back(degree);
  const auto grade = [&](const IntVector& x) {
    IntVector p(x.begin(), x.end() - 1);
    return lattice.degree_of(p) + x.back();
  };
  std::map<IntVector, bool> memo;
  std::function<bool(const IntVector&)> member = [&](const IntVector& x) -> bool {
    if (is_zero(x)) return true;
    if (grade(x) <= 0 || x.back() < 0) return false;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    bool found = false;
    for (const auto& g : gens) {
      if (member(subtract(x, g))) {
        found = true;
        break;
      }
    }
    return memo[x] = found;
  };
  return member(target);
}

InvariantRing invariant_ring(const ArrowLattice& lattice) {
  const SemiInvariantMonoid monoid = semiinvariant_generators(lattice, Theta(std::vector<std::int64_t>(lattice.vertex_count, 0)));
  InvariantRing ring;
  for (const auto& g : monoid.generators) {
    if (g.degree == 0) ring.generators.push_back(g);
  }
  if (ring.generators.empty()) return ring;
  IntMatrix cols;
  IntVector degree;
  for (const auto& g : ring.generators) {
    cols.push_back(g.point);
    degree.push_back(sum_of(g.exponent));
  }
  ring.relations = toric_ideal_generators(transpose(cols, lattice.quotient_rank), cols.size(), degree);
  return ring;
}

bool Chart::is_free(std::size_t lattice_rank) const {
  if (generators.size() != lattice_rank) return false;
  if (lattice_rank == 0) return true;
  Matrix h(lattice_rank, lattice_rank);
  for (std::size_t i = 0; i < lattice_rank; ++i)
    for (std::size_t j = 0; j < lattice_rank; ++j) h(i, j) = Rational(generators[i].coordinates[j]);
  const Rational d = determinant(h);
  return d == 1 || d == -1;
}

ChartAtlas moduli_atlas(const ArrowLattice& lattice, const Theta& theta) {
  require_theta(lattice, theta);
  const SemiInvariantMonoid monoid = semiinvariant_generators(lattice, theta);
  std::vector<const SemiInvariant*> degree_one;
  for (const auto& g : monoid.generators) {
    if (g.degree == 1) degree_one.push_back(&g);
  }
  if (degree_one.empty()) throw QuiverError(ErrorCode::NoDegreeOne, "no semi-invariant of degree one");

  const std::vector<Rational> ones(lattice.arrow_count, Rational(1));
  const Representation torus_point = Representation::thin(lattice.quiver, all_ones(lattice.vertex_count), ones);
  if (is_semistable_thin(torus_point, theta).status != StabilityStatus::Stable)
    throw QuiverError(ErrorCode::EmptyStableLocus, "no theta-stable thin representation with all arrows nonzero");

  ChartAtlas atlas;
  atlas.lattice = lattice;
  atlas.theta = theta;
  const std::size_t r = lattice.quotient_rank;

  // Degree-zero lattice L0 generated by g - deg(g) f (independent of f).
  {
    const SemiInvariant& f = *degree_one.front();
    IntMatrix diffs;
    for (const auto& g : monoid.generators) diffs.push_back(subtract(g.point, scale(g.degree, f.point)));
    atlas.lattice_basis = hermite_normal_form(diffs, r);
    atlas.lattice_rank = atlas.lattice_basis.size();
  }
  const std::size_t r0 = atlas.lattice_rank;
  const auto l0_coords = [&](const IntVector& point) {
    auto c = solve_integer(atlas.lattice_basis, r, point);
    if (!c) throw std::logic_error("degree-zero element outside L0");
    return *c;
  };

  for (const SemiInvariant* fp : degree_one) {
    const SemiInvariant& f = *fp;
    IntMatrix elements;
    std::vector<const SemiInvariant*> source;
    for (const auto& g : monoid.generators) {
      IntVector t = l0_coords(subtract(g.point, scale(g.degree, f.point)));
      if (is_zero(t) || std::find(elements.begin(), elements.end(), t) != elements.end()) continue;
      elements.push_back(std::move(t));
      source.push_back(&g);
    }
    Chart chart;
    chart.name = lattice.monomial_string(f.exponent);
    chart.distinguished = f;
    if (r0 == 0) {
      atlas.charts.push_back(std::move(chart));
      continue;
    }
    if (integer_rank(elements, r0) < r0) continue;
    const IntMatrix facets = cone_facets(elements, r0);
    if (integer_rank(facets, r0) < r0) continue;  // not pointed: face of a smaller chart
    IntVector w(r0, 0);
    for (const auto& n : facets) w = add(w, n);
    const auto grade = [&](const IntVector& x) { return dot(w, x); };
    for (std::size_t i : minimal_subset(elements, grade))
      chart.generators.push_back(ChartGenerator{elements[i], source[i]->exponent, source[i]->degree});
    if (!chart.is_free(r0)) {
      IntMatrix cols;
      IntVector degree;
      for (const auto& g : chart.generators) {
        cols.push_back(g.coordinates);
        degree.push_back(grade(g.coordinates));
      }
      chart.relations = toric_ideal_generators(transpose(cols, r0), cols.size(), degree);
    }
    atlas.charts.push_back(std::move(chart));
  }
  if (atlas.charts.empty()) throw QuiverError(ErrorCode::NotPointed, "no pointed chart");

  const std::size_t n = atlas.charts.size();
  atlas.transitions.assign(n, std::vector<IntMatrix>(n));
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix basis;
    for (const auto& g : atlas.charts[i].generators) basis.push_back(g.coordinates);
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& g : atlas.charts[j].generators) {
        auto c = solve_integer(basis, r0, g.coordinates);
        if (!c) throw std::logic_error("chart generators do not span L0");
        atlas.transitions[i][j].push_back(std::move(*c));
      }
    }
  }
  return atlas;
}

std::optional<std::vector<Rational>> chart_coordinates(const ChartAtlas& atlas, std::size_t chart,
                                                       const Representation& m) {
  const Chart& c = atlas.charts.at(chart);
  if (!m.dimension().is_thin() || m.dimension() != all_ones(atlas.lattice.vertex_count))
    throw QuiverError(ErrorCode::NotThin, "chart coordinates need dimension vector (1,...,1)");
  std::vector<Rational> scalars;
  for (ArrowId a = 0; a < atlas.lattice.arrow_count; ++a) scalars.push_back(m.thin_scalar(a));
  const Rational fv = monomial_value(c.distinguished.exponent, scalars);
  if (fv == 0) return std::nullopt;
  std::vector<Rational> out;
  for (const auto& g : c.generators) out.push_back(monomial_value(g.numerator, scalars) / power(fv, g.f_power));
  return out;
}

Representation lift_chart_point(const ChartAtlas& atlas, std::size_t chart, const std::vector<Rational>& point) {
  const ArrowLattice& lat = atlas.lattice;
  const Chart& c = atlas.charts.at(chart);
  if (!c.is_free(atlas.lattice_rank))
    throw QuiverError(ErrorCode::NonsmoothChart, "chart '" + c.name + "' is not an affine space");
  if (point.size() != c.generators.size())
    throw QuiverError(ErrorCode::BadVectorShape, "expected " + std::to_string(c.generators.size()) + " coordinates");

  // Spanning tree inside the support of f.
  const QuiverPresentation& q = *lat.quiver;
  std::vector<bool> reached(lat.vertex_count, false), tree(lat.arrow_count, false);
  std::vector<VertexId> queue{0};
  reached[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (ArrowId a = 0; a < lat.arrow_count; ++a) {
      if (c.distinguished.exponent[a] == 0) continue;
      const Arrow& arrow = q.arrow(a);
      VertexId other;
      if (arrow.tail == queue[k]) other = arrow.head;
      else if (arrow.head == queue[k]) other = arrow.tail;
      else continue;
      if (reached[other]) continue;
      reached[other] = true;
      tree[a] = true;
      queue.push_back(other);
    }
  }
  if (queue.size() != lat.vertex_count)
    throw QuiverError(ErrorCode::EmptyStableLocus, "support of '" + c.name + "' does not connect the quiver");

  IntMatrix tree_incidence;
  std::vector<ArrowId> tree_arrows;
  for (ArrowId a = 0; a < lat.arrow_count; ++a) {
    if (!tree[a]) continue;
    tree_arrows.push_back(a);
    IntVector col(lat.vertex_count);
    for (std::size_t v = 0; v < lat.vertex_count; ++v) col[v] = lat.incidence[v][a];
    tree_incidence.push_back(std::move(col));
  }
  IntMatrix gen_coords;
  for (const auto& g : c.generators) gen_coords.push_back(g.coordinates);

  std::vector<Rational> scalars(lat.arrow_count, Rational(1));
  for (ArrowId b = 0; b < lat.arrow_count; ++b) {
    if (tree[b]) continue;
    IntVector target(lat.vertex_count);
    for (std::size_t v = 0; v < lat.vertex_count; ++v) target[v] = lat.incidence[v][b];
    const auto t = solve_integer(tree_incidence, lat.vertex_count, target);
    if (!t) throw std::logic_error("tree does not span the incidence of an arrow");
    IntVector z(lat.arrow_count, 0);
    z[b] = 1;
    for (std::size_t k = 0; k < tree_arrows.size(); ++k) z[tree_arrows[k]] -= (*t)[k];
    const auto l0 = solve_integer(atlas.lattice_basis, lat.quotient_rank, lat.project(z));
    if (!l0) throw QuiverError(ErrorCode::NonsmoothChart, "arrow '" + q.arrow(b).name + "' is not a chart monomial");
    const auto wts = solve_integer(gen_coords, atlas.lattice_rank, *l0);
    if (!wts || !is_nonnegative(*wts))
      throw QuiverError(ErrorCode::NonsmoothChart, "arrow '" + q.arrow(b).name + "' is not regular on the chart");
    Rational value = 1;
    for (std::size_t l = 0; l < wts->size(); ++l) value *= power(point[l], (*wts)[l]);
    scalars[b] = value;
  }
  return Representation::thin(lat.quiver, all_ones(lat.vertex_count), scalars);
}

QuotientFan make_fan(std::size_t rank, IntMatrix rays, std::vector<std::vector<std::size_t>> cones) {
  std::vector<std::size_t> order(rays.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rays[a] < rays[b]; });
  std::vector<std::size_t> position(rays.size());
  QuotientFan fan;
  fan.rank = rank;
  for (std::size_t k = 0; k < order.size(); ++k) {
    position[order[k]] = k;
    fan.rays.push_back(rays[order[k]]);
  }
  for (auto& cone : cones) {
    for (auto& i : cone) i = position.at(i);
    std::sort(cone.begin(), cone.end());
  }
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  fan.cones = std::move(cones);
  return fan;
}

QuotientFan quotient_fan(const ChartAtlas& atlas) {
  const std::size_t r0 = atlas.lattice_rank;
  IntMatrix rays;
  std::vector<std::vector<std::size_t>> cones;
  std::vector<IntMatrix> chart_rays;
  for (const auto& chart : atlas.charts) {
    if (!chart.is_free(r0)) {
      std::string gens;
      for (const auto& g : chart.generators) {
        if (!gens.empty()) gens += ", ";
        gens += "(";
        for (std::size_t j = 0; j < g.coordinates.size(); ++j)
          gens += (j ? "," : "") + to_string(g.coordinates[j]);
        gens += ")";
      }
      throw QuiverError(ErrorCode::NonsmoothChart,
                        "chart '" + chart.name + "' has Hilbert basis {" + gens + "} of size " +
                            std::to_string(chart.generators.size()) + " in rank " + std::to_string(r0));
    }
    // Dual basis: ray l pairs to δ_kl with generator k.
    Matrix h(r0, r0);
    for (std::size_t i = 0; i < r0; ++i)
      for (std::size_t j = 0; j < r0; ++j) h(i, j) = Rational(chart.generators[i].coordinates[j]);
    const Matrix inv = r0 == 0 ? Matrix() : *inverse(h);
    IntMatrix mine;
    std::vector<std::size_t> cone;
    for (std::size_t l = 0; l < r0; ++l) {
      IntVector ray(r0);
      for (std::size_t j = 0; j < r0; ++j) ray[j] = numerator_of(inv(j, l));
      mine.push_back(ray);
      auto it = std::find(rays.begin(), rays.end(), ray);
      if (it == rays.end()) {
        rays.push_back(ray);
        it = rays.end() - 1;
      }
      cone.push_back(static_cast<std::size_t>(it - rays.begin()));
    }
    chart_rays.push_back(std::move(mine));
    cones.push_back(std::move(cone));
  }

  // σ_i ∩ σ_j is the face cut out by m = f_j - f_i on both cones.
  const auto l0 = [&](const IntVector& point) { return *solve_integer(atlas.lattice_basis, atlas.lattice.quotient_rank, point); };
  for (std::size_t i = 0; i < atlas.charts.size(); ++i) {
    for (std::size_t j = i + 1; j < atlas.charts.size(); ++j) {
      const IntVector m = l0(subtract(atlas.charts[j].distinguished.point, atlas.charts[i].distinguished.point));
      std::set<IntVector> face_i, face_j;
      for (const auto& ray : chart_rays[i]) {
        const Integer v = dot(m, ray);
        if (v < 0) throw std::logic_error("chart cones are not separated");
        if (v == 0) face_i.insert(ray);
      }
      for (const auto& ray : chart_rays[j]) {
        const Integer v = dot(m, ray);
        if (v > 0) throw std::logic_error("chart cones are not separated");
        if (v == 0) face_j.insert(ray);
      }
      if (face_i != face_j) throw std::logic_error("chart cones do not meet in a common face");
    }
  }
  return make_fan(r0, std::move(rays), std::move(cones));
}

bool fan_equivalent(const QuotientFan& a, const QuotientFan& b) {
  if (a.rank != b.rank)
    throw QuiverError(ErrorCode::RankMismatch,
                      "fans of rank " + std::to_string(a.rank) + " and " + std::to_string(b.rank));
  if (a.rays.size() != b.rays.size() || a.cones.size() != b.cones.size()) return false;
  const std::size_t r = a.rank;
  if (r == 0) return true;

  std::vector<std::size_t> basis;
  {
    IntMatrix chosen;
    for (std::size_t i = 0; i < a.rays.size() && basis.size() < r; ++i) {
      chosen.push_back(a.rays[i]);
      if (integer_rank(chosen, r) == chosen.size()) basis.push_back(i);
      else chosen.pop_back();
    }
  }
  if (basis.size() < r) return a.rays == b.rays && a.cones == b.cones;

  Matrix src(r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j) src(j, k) = Rational(a.rays[basis[k]][j]);
  const Matrix src_inv = *inverse(src);

  std::set<std::vector<std::size_t>> target_cones(b.cones.begin(), b.cones.end());
  std::map<IntVector, std::size_t> target_index;
  for (std::size_t i = 0; i < b.rays.size(); ++i) target_index[b.rays[i]] = i;

  std::vector<std::size_t> image(r);
  std::vector<bool> used(b.rays.size(), false);
  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == r) {
      Matrix dst(r, r);
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t j = 0; j < r; ++j) dst(j, c) = Rational(b.rays[image[c]][j]);
      const Matrix map = dst * src_inv;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (denominator_of(map(i, j)) != 1) return false;
      const Rational det = determinant(map);
      if (det != 1 && det != -1) return false;
      std::vector<std::size_t> ray_map(a.rays.size());
      std::vector<bool> hit(b.rays.size(), false);
      for (std::size_t i = 0; i < a.rays.size(); ++i) {
        IntVector img(r, 0);
        for (std::size_t row = 0; row < r; ++row) {
          Rational s = 0;
          for (std::size_t j = 0; j < r; ++j) s += map(row, j) * Rational(a.rays[i][j]);
          img[row] = numerator_of(s);
        }
        const auto it = target_index.find(img);
        if (it == target_index.end() || hit[it->second]) return false;
        hit[it->second] = true;
        ray_map[i] = it->second;
      }
      for (const auto& cone : a.cones) {
        std::vector<std::size_t> mapped;
        for (std::size_t i : cone) mapped.push_back(ray_map[i]);
        std::sort(mapped.begin(), mapped.end());
        if (!target_cones.contains(mapped)) return false;
      }
      return true;
    }
    for (std::size_t t = 0; t < b.rays.size(); ++t) {
      if (used[t]) continue;
      used[t] = true;
      image[k] = t;
      const bool ok = assign(k + 1);
      used[t] = false;
      if (ok) return true;
    }
    return false;
  };
  return assign(0);
}

std::vector<UnstableComponent> unstable_locus_thin(const ArrowLattice& lattice, const Theta& theta) {
  require_theta(lattice, theta);
  const std::size_t n = lattice.vertex_count;
  if (n >= 63) throw QuiverError(ErrorCode::BadParameter, "too many vertices for subset enumeration");
  const QuiverPresentation& q = *lattice.quiver;
  std::vector<UnstableComponent> all;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 1; s < full; ++s) {
    std::int64_t value = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1) value += theta[v];
    if (value >= 0) continue;
    UnstableComponent c;
    c.subset = mask_vertices(s);
    for (ArrowId a = 0; a < lattice.arrow_count; ++a) {
      const Arrow& arrow = q.arrow(a);
      if ((s >> arrow.tail & 1) && !(s >> arrow.head & 1)) c.vanishing_arrows.push_back(a);
    }
    all.push_back(std::move(c));
  }
  std::stable_sort(all.begin(), all.end(), [](const UnstableComponent& x, const UnstableComponent& y) {
    return x.vanishing_arrows.size() < y.vanishing_arrows.size();
  });
  std::vector<UnstableComponent> out;
  for (auto& c : all) {
    const bool redundant = std::any_of(out.begin(), out.end(), [&](const UnstableComponent& kept) {
      return std::includes(c.vanishing_arrows.begin(), c.vanishing_arrows.end(), kept.vanishing_arrows.begin(),
                           kept.vanishing_arrows.end());
    });
    if (!redundant) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace quivermod
