#include <doctest.h>

#include "support.hpp"

using namespace quivermod;
using namespace qtest;

namespace {

using GradedPoint = std::pair<IntVector, Integer>;

const char* kLoop = "quiver loop\nvertices 1\narrow x: 0 -> 0\n";

/// Indecomposable elements of {(π(u), n)} of grade (arrow degree + n) at most `grade`.
std::set<GradedPoint> brute_generators(const ArrowLattice& lattice, const Theta& theta, int grade) {
  std::set<GradedPoint> points;
  for (int n = 0; n <= grade; ++n) {
    std::vector<std::int64_t> target(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) target[i] = n * theta[i];
    for (const auto& u : enumerate_weight(*lattice.quiver, target, grade)) {
      int deg = n;
      for (int x : u) deg += x;
      if (deg == 0 || deg > grade) continue;
      points.emplace(lattice.project(to_int_vector(u)), n);
    }
  }
  std::set<GradedPoint> out;
  for (const auto& x : points) {
    bool decomposable = false;
    for (const auto& y : points) {
      if (y == x || y.second > x.second) continue;
      if (points.count({subtract(x.first, y.first), x.second - y.second})) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.insert(x);
  }
  return out;
}

QuotientFan pp_reference(std::int64_t n) {
  IntMatrix rays;
  std::vector<std::vector<std::size_t>> cones;
  for (std::int64_t k = 0; k <= n + 1; ++k) rays.push_back(IntVector{1, k});
  for (std::size_t k = 0; k + 1 < rays.size(); ++k) cones.push_back({k, k + 1});
  return make_fan(2, rays, cones);
}

}  // namespace

TEST_SUITE("toric") {
  TEST_CASE("thin reduction of relations") {
    const ArrowLattice conifold = thin_reduce_relations(build_determinantal(2).quiver);
    CHECK(conifold.vanishing_relations.size() == 4);
    CHECK(conifold.saturated.empty());
    CHECK(conifold.quotient_rank == 4);

    const ArrowLattice pp = thin_reduce_relations(build_preprojective_affine_A(1).quiver);
    REQUIRE(pp.saturated.size() == 1);
    const IntVector k{1, -1, 1, -1};
    CHECK((pp.saturated[0] == k || pp.saturated[0] == scale(-1, k)));
    CHECK(pp.quotient_rank == 3);
    CHECK(is_zero(pp.project(k)));
    for (std::size_t j = 0; j < pp.quotient_rank; ++j) {
      IntVector e(pp.quotient_rank, 0);
      e[j] = 1;
      CHECK(pp.project(pp.lift[j]) == e);
    }

    CHECK(error_code_of([] {
            thin_reduce_relations(quiver_from_text(std::string(kLoop) + "relation x*x\n"));
          }) == ErrorCode::NonToricRelations);
    CHECK(error_code_of([] {
            thin_reduce_relations(quiver_from_text("quiver t\nvertices 2\narrow a: 0 -> 1\narrow b: 0 -> 1\n"
                                                   "arrow c: 0 -> 1\nrelation a + b - c\n"));
          }) == ErrorCode::NonToricRelations);
    CHECK(error_code_of([] {
            thin_reduce_relations(quiver_from_text(
                "quiver t\nvertices 1\narrow x: 0 -> 0\narrow y: 0 -> 0\nrelation x*x - y\n"));
          }) == ErrorCode::NonToricRelations);
    CHECK(error_code_of([] {
            thin_reduce_relations(quiver_from_text(
                "quiver t\nvertices 1\narrow x: 0 -> 0\narrow y: 0 -> 0\nrelation x*x - y*y\n"));
          }) == ErrorCode::TorsionQuotient);
  }

  TEST_CASE("semi-invariant generators match enumeration") {
    for (const auto& fq : builtins()) {
      const ArrowLattice lattice = thin_reduce_relations(fq.quiver);
      const std::size_t n = fq.quiver->vertex_count();
      for (const Theta& theta : {fq.framing.theta(), Theta(std::vector<std::int64_t>(n, 0))}) {
        const auto monoid = semiinvariant_generators(lattice, theta);
        const int grade = fq.quiver->arrow_count() > 6 ? 2 : 3;
        std::set<GradedPoint> found;
        for (const auto& g : monoid.generators) {
          CHECK(lattice.project(g.exponent) == g.point);
          CHECK(is_nonnegative(g.exponent));
          if (lattice.degree_of(g.point) + g.degree <= grade) found.emplace(g.point, g.degree);
        }
        CHECK(found == brute_generators(lattice, theta, grade));
      }
    }
  }

  TEST_CASE("in_monoid") {
    const auto fq = build_determinantal(2);
    const ArrowLattice lattice = thin_reduce_relations(fq.quiver);
    const auto monoid = semiinvariant_generators(lattice, fq.framing.theta());
    // a^2 k1 has weight θ; a*k1 alone is invariant.
    CHECK(in_monoid(lattice, monoid, lattice.project(IntVector{2, 0, 1, 0}), 1));
    CHECK(in_monoid(lattice, monoid, lattice.project(IntVector{1, 0, 1, 0}), 0));
    CHECK(!in_monoid(lattice, monoid, lattice.project(IntVector{1, 0, 1, 0}), 1));
  }

  TEST_CASE("invariant rings") {
    const ArrowLattice conifold = thin_reduce_relations(build_determinantal(2).quiver);
    const InvariantRing ring = invariant_ring(conifold);
    std::set<std::string> names;
    for (const auto& g : ring.generators) names.insert(conifold.monomial_string(g.exponent));
    CHECK(names == std::set<std::string>{"a*k1", "a*k2", "c*k1", "c*k2"});
    REQUIRE(ring.relations.size() == 1);

    const ArrowLattice pp = thin_reduce_relations(build_preprojective_affine_A(1).quiver);
    const InvariantRing pr = invariant_ring(pp);
    CHECK(pr.generators.size() == 3);
    REQUIRE(pr.relations.size() == 1);
    IntVector sorted_plus = pr.relations[0].first, sorted_minus = pr.relations[0].second;
    std::sort(sorted_plus.begin(), sorted_plus.end());
    std::sort(sorted_minus.begin(), sorted_minus.end());
    CHECK(((sorted_plus == IntVector{0, 1, 1} && sorted_minus == IntVector{0, 0, 2}) ||
           (sorted_plus == IntVector{0, 0, 2} && sorted_minus == IntVector{0, 1, 1})));

    for (const auto& fq : builtins()) {
      const ArrowLattice lattice = thin_reduce_relations(fq.quiver);
      const InvariantRing r = invariant_ring(lattice);
      for (const auto& [plus, minus] : r.relations) {
        IntVector lhs(lattice.quotient_rank, 0), rhs(lattice.quotient_rank, 0);
        for (std::size_t i = 0; i < r.generators.size(); ++i) {
          lhs = add(lhs, scale(plus[i], r.generators[i].point));
          rhs = add(rhs, scale(minus[i], r.generators[i].point));
        }
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("conifold atlas") {
    const auto fq = build_determinantal(2);
    const ChartAtlas atlas = moduli_atlas(thin_reduce_relations(fq.quiver), fq.framing.theta());
    CHECK(atlas.lattice_rank == 3);
    REQUIRE(atlas.charts.size() == 2);
    CHECK(atlas.charts[0].name == "a");
    CHECK(atlas.charts[1].name == "c");
    for (const auto& c : atlas.charts) CHECK(c.is_free(3));
  }

  TEST_CASE("transition maps form a cocycle") {
    for (const auto& fq : builtins()) {
      const ChartAtlas atlas = moduli_atlas(thin_reduce_relations(fq.quiver), fq.framing.theta());
      const std::size_t n = atlas.charts.size();
      const auto coords = [&](std::size_t i) {
        IntMatrix c;
        for (const auto& g : atlas.charts[i].generators) c.push_back(g.coordinates);
        return c;
      };
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(atlas.transitions[i][i] == identity_int(atlas.charts[i].generators.size()));
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(multiply(atlas.transitions[i][j], coords(i)) == coords(j));
          for (std::size_t k = 0; k < n; ++k)
            CHECK(multiply(atlas.transitions[j][k], atlas.transitions[i][j]) == atlas.transitions[i][k]);
        }
      }
    }
  }

  TEST_CASE("charts cover the stable locus and lift back") {
    Rng rng(81);
    for (const auto& fq : builtins()) {
      const ChartAtlas atlas = moduli_atlas(thin_reduce_relations(fq.quiver), fq.framing.theta());
      for (int i = 0; i < 80; ++i) {
        const auto m = thin_rep(fq.quiver, random_thin_scalars(fq, rng));
        const bool stable = is_stable_framed(m, fq.framing).status == StabilityStatus::Stable;
        bool covered = false;
        for (std::size_t c = 0; c < atlas.charts.size(); ++c) {
          const auto point = chart_coordinates(atlas, c, m);
          if (!point) continue;
          covered = true;
          if (!atlas.charts[c].is_free(atlas.lattice_rank)) continue;
          const Representation lifted = lift_chart_point(atlas, c, *point);
          CHECK(satisfies_relations(lifted).satisfied);
          CHECK(chart_coordinates(atlas, c, lifted) == point);
          CHECK(is_isomorphic(lifted, m));
        }
        CHECK(covered == stable);
      }
    }
  }

  TEST_CASE("atlas errors") {
    CHECK(error_code_of([] {
            const auto q = quiver_from_text("quiver t\nvertices 2\narrow a: 0 -> 1\n");
            moduli_atlas(thin_reduce_relations(q), Theta({1, -1}));
          }) == ErrorCode::NoDegreeOne);
    CHECK(error_code_of([] {
            const auto q = quiver_from_text("quiver t\nvertices 3\narrow a: 0 -> 1\n");
            moduli_atlas(thin_reduce_relations(q), Theta({-1, 1, 0}));
          }) == ErrorCode::EmptyStableLocus);
    CHECK(error_code_of([] {
            const auto fq = build_determinantal(2);
            moduli_atlas(thin_reduce_relations(fq.quiver), Theta({1, 1}));
          }) == ErrorCode::PairingNonzero);
  }

  TEST_CASE("quotient fans of the built-ins") {
    for (std::int64_t n = 1; n <= 3; ++n) {
      const auto fq = build_preprojective_affine_A(n);
      const QuotientFan fan = quotient_fan(moduli_atlas(thin_reduce_relations(fq.quiver), fq.framing.theta()));
      CHECK(fan.rank == 2);
      CHECK(fan.cones.size() == static_cast<std::size_t>(n + 1));
      CHECK(fan_equivalent(fan, pp_reference(n)));
    }
    const auto conifold = build_determinantal(2);
    const QuotientFan c =
        quotient_fan(moduli_atlas(thin_reduce_relations(conifold.quiver), conifold.framing.theta()));
    CHECK(fan_equivalent(c, make_fan(3, {IntVector{0, 0, 1}, IntVector{0, 1, 0}, IntVector{1, 0, 0}, IntVector{1, 1, -1}},
                                     {{0, 1, 3}, {0, 2, 3}})));
    const auto d1 = build_determinantal(1);
    const QuotientFan f1 = quotient_fan(moduli_atlas(thin_reduce_relations(d1.quiver), d1.framing.theta()));
    CHECK(fan_equivalent(f1, make_fan(2, {IntVector{1, 0}, IntVector{1, 1}, IntVector{0, 1}}, {{0, 1}, {1, 2}})));
    const auto d3 = build_determinantal(3);
    const QuotientFan f3 = quotient_fan(moduli_atlas(thin_reduce_relations(d3.quiver), d3.framing.theta()));
    CHECK(f3.rank == 4);
    CHECK(f3.rays.size() == 5);
    CHECK(f3.cones.size() == 2);

    const auto loop = quiver_from_text(kLoop);
    const QuotientFan l = quotient_fan(moduli_atlas(thin_reduce_relations(loop), Theta({0})));
    CHECK(l.rank == 1);
    CHECK(l.cones.size() == 1);

    CHECK(error_code_of([&] {
            quotient_fan(moduli_atlas(thin_reduce_relations(conifold.quiver), Theta({0, 0})));
          }) == ErrorCode::NonsmoothChart);
  }

  TEST_CASE("fan equivalence") {
    Rng rng(83);
    for (std::int64_t n = 1; n <= 3; ++n) {
      const QuotientFan ref = pp_reference(n);
      for (int trial = 0; trial < 5; ++trial) {
        IntMatrix u{IntVector{1, 0}, IntVector{0, 1}};
        for (int step = 0; step < 6; ++step) {
          const auto i = static_cast<std::size_t>(rng.uniform(0, 1));
          u[i] = add(u[i], scale(rng.uniform(-2, 2), u[1 - i]));
        }
        IntMatrix rays;
        for (const auto& r : ref.rays) rays.push_back(apply_matrix(u, r));
        CHECK(fan_equivalent(ref, make_fan(2, rays, ref.cones)));
      }
    }
    CHECK(!fan_equivalent(pp_reference(1), pp_reference(2)));
    // Tot O(1) against Tot O(-1) over P^1.
    CHECK(!fan_equivalent(make_fan(2, {IntVector{1, 0}, IntVector{0, 1}, IntVector{-1, -1}}, {{0, 1}, {1, 2}}),
                          make_fan(2, {IntVector{1, 0}, IntVector{1, 1}, IntVector{0, 1}}, {{0, 1}, {1, 2}})));
    CHECK(!fan_equivalent(make_fan(2, {IntVector{1, 0}, IntVector{1, 2}}, {{0, 1}}),
                          make_fan(2, {IntVector{1, 0}, IntVector{0, 1}}, {{0, 1}})));
    CHECK(error_code_of([] {
            fan_equivalent(pp_reference(1), make_fan(3, {IntVector{1, 0, 0}}, {{0}}));
          }) == ErrorCode::RankMismatch);
  }

  TEST_CASE("unstable locus") {
    const auto fq = build_determinantal(2);
    const auto locus = unstable_locus_thin(thin_reduce_relations(fq.quiver), fq.framing.theta());
    REQUIRE(locus.size() == 1);
    CHECK(locus[0].subset == std::vector<VertexId>{0});
    CHECK(locus[0].vanishing_arrows == std::vector<ArrowId>{0, 1});

    const auto pp = build_preprojective_affine_A(1);
    const auto l = unstable_locus_thin(thin_reduce_relations(pp.quiver), pp.framing.theta());
    REQUIRE(l.size() == 1);
    CHECK(l[0].subset == std::vector<VertexId>{0});
    CHECK(l[0].vanishing_arrows == std::vector<ArrowId>{0, 3});
  }
}
