#include <doctest.h>

#include "support.hpp"

using namespace quivermod;
using namespace qtest;

TEST_SUITE("constructions") {
  TEST_CASE("determinantal quivers") {
    for (std::int64_t m = 1; m <= 4; ++m) {
      const auto fq = build_determinantal(m);
      const auto& q = *fq.quiver;
      CHECK(q.name() == "determinantal" + std::to_string(m));
      CHECK(q.vertex_count() == 2);
      CHECK(q.arrow_count() == static_cast<std::size_t>(m + 2));
      // k_i x k_j - k_j x k_i for x in {a, c} and i < j, plus a k_j c - c k_j a.
      CHECK(q.relations().size() == static_cast<std::size_t>(m * (m - 1) + m));
      CHECK(fq.framing.dimension() == ones(2));
      CHECK(fq.framing.theta() == Theta({-1, 1}));
      for (const auto& r : q.relations()) CHECK(r.terms.size() == 2);
    }
    CHECK(error_code_of([] { build_determinantal(0); }) == ErrorCode::BadParameter);
  }

  TEST_CASE("preprojective quivers of type A") {
    for (std::int64_t n = 1; n <= 4; ++n) {
      const auto fq = build_preprojective_affine_A(n);
      const auto& q = *fq.quiver;
      const auto size = static_cast<std::size_t>(n + 1);
      CHECK(q.vertex_count() == size);
      CHECK(q.arrow_count() == 2 * size);
      CHECK(q.relations().size() == size);
      for (std::size_t i = 0; i < size; ++i) {
        CHECK(q.arrow(static_cast<ArrowId>(i)).tail == i);
        CHECK(q.arrow(static_cast<ArrowId>(i)).head == (i + 1) % size);
        CHECK(q.arrow(static_cast<ArrowId>(size + i)).tail == (i + 1) % size);
        const Relation& r = q.relations()[i];
        CHECK(r.terms[0].path.tail() == i);
        CHECK(r.terms[0].path.head() == i);
      }
      CHECK(fq.framing.theta()[0] == -static_cast<std::int64_t>(n));
    }
    CHECK(error_code_of([] { build_preprojective_affine_A(-2); }) == ErrorCode::BadParameter);
  }

  TEST_CASE("built-ins are toric with tilting framings") {
    for (const auto& fq : builtins()) {
      const ArrowLattice lattice = thin_reduce_relations(fq.quiver);
      CHECK(lattice.saturation_index == 1);
      CHECK(is_generic(fq.framing.theta(), fq.framing.dimension()));
      // The all-ones representation with nonzero scalars satisfies every relation.
      Rng rng(static_cast<std::uint64_t>(fq.parameter));
      const auto m = thin_rep(fq.quiver, random_thin_scalars(fq, rng));
      CHECK(satisfies_relations(m).satisfied);
    }
  }
}
