#include <doctest.h>

#include "support.hpp"

using namespace quivermod;
using namespace qtest;

namespace {

IntMatrix ints(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix out;
  for (const auto& r : rows) {
    IntVector row;
    for (int x : r) row.emplace_back(x);
    out.push_back(row);
  }
  return out;
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  IntMatrix a(rows, IntVector(cols));
  for (auto& row : a)
    for (auto& x : row) x = rng.uniform(-bound, bound);
  return a;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n) {
  IntMatrix u = identity_int(n);
  for (int step = 0; step < 8; ++step) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    if (i == j) {
      u[i] = scale(-1, u[i]);
      continue;
    }
    u[i] = add(u[i], scale(rng.uniform(-2, 2), u[j]));
  }
  return u;
}

/// Minimal nonzero elements of {x in {0..bound}^cols : A x = 0}.
std::set<IntVector> brute_hilbert(const IntMatrix& a, std::size_t cols, int bound) {
  std::vector<IntVector> kernel;
  IntVector x(cols, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == cols) {
      if (!is_zero(x) && is_zero(apply_matrix(a, x))) kernel.push_back(x);
      return;
    }
    for (int k = 0; k <= bound; ++k) {
      x[j] = k;
      rec(j + 1);
    }
    x[j] = 0;
  };
  rec(0);
  std::set<IntVector> out;
  for (const auto& v : kernel) {
    bool minimal = true;
    for (const auto& w : kernel)
      if (w != v && is_nonnegative(subtract(v, w))) {
        minimal = false;
        break;
      }
    if (minimal) out.insert(v);
  }
  return out;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("Smith normal form") {
    Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
      const auto rows = static_cast<std::size_t>(rng.uniform(1, 4)), cols = static_cast<std::size_t>(rng.uniform(1, 4));
      const IntMatrix a = random_matrix(rng, rows, cols, 5);
      const SmithForm s = smith_normal_form(a, cols);
      CHECK(multiply(multiply(s.left, a), s.right) == s.diagonal);
      CHECK(abs(determinant(to_matrix(s.left, rows))) == 1);
      CHECK(abs(determinant(to_matrix(s.right, cols))) == 1);
      CHECK(s.rank == rank(to_matrix(a, cols)));
      CHECK(integer_rank(a, cols) == s.rank);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          if (i != j) CHECK(s.diagonal[i][j] == 0);
      for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
        CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
    }
    const SmithForm s = smith_normal_form(ints({{2, 4}, {6, 8}}), 2);
    CHECK(s.invariant_factors == IntVector{2, 4});
  }

  TEST_CASE("Hermite normal form is canonical for the row lattice") {
    Rng rng(72);
    for (int trial = 0; trial < 40; ++trial) {
      const IntMatrix a = random_matrix(rng, 3, 4, 4);
      const IntMatrix h = hermite_normal_form(a, 4);
      CHECK(hermite_normal_form(multiply(random_unimodular(rng, 3), a), 4) == h);
      CHECK(h.size() == integer_rank(a, 4));
    }
    CHECK(hermite_normal_form(ints({{2, 0}, {0, 2}, {1, 1}}), 2) == ints({{1, 1}, {0, 2}}));
  }

  TEST_CASE("integer kernel and saturation") {
    Rng rng(73);
    for (int trial = 0; trial < 40; ++trial) {
      const IntMatrix a = random_matrix(rng, 2, 5, 3);
      const IntMatrix k = integer_kernel(a, 5);
      CHECK(k.size() + integer_rank(a, 5) == 5);
      for (const auto& row : k) CHECK(is_zero(apply_matrix(a, row)));
      if (!k.empty()) CHECK(saturate(k, 5).index == 1);
    }
    const Saturation s = saturate(ints({{2, -2}}), 2);
    CHECK(s.index == 2);
    CHECK(s.rank == 1);
    CHECK(multiply(s.basis, s.coordinates) == identity_int(2));
    CHECK((s.basis[0] == ints({{1, -1}})[0] || s.basis[0] == ints({{-1, 1}})[0]));
  }

  TEST_CASE("solve_integer") {
    Rng rng(74);
    for (int trial = 0; trial < 30; ++trial) {
      const IntMatrix basis = random_matrix(rng, 2, 3, 4);
      if (integer_rank(basis, 3) < 2) continue;
      const IntVector c{rng.uniform(-3, 3), rng.uniform(-3, 3)};
      const auto found = solve_integer(basis, 3, row_times(c, basis));
      REQUIRE(found);
      CHECK(row_times(*found, basis) == row_times(c, basis));
    }
    CHECK(!solve_integer(ints({{2, 0}, {0, 2}}), 2, IntVector{1, 0}));
    CHECK(!solve_integer(ints({{1, 0}}), 2, IntVector{0, 1}));
  }

  TEST_CASE("Hilbert basis matches brute force") {
    const auto check = [](const IntMatrix& a, std::size_t cols, int bound) {
      const IntMatrix h = hilbert_basis_kernel(a, cols);
      std::set<IntVector> in_box;
      for (const auto& v : h) {
        CHECK(is_nonnegative(v));
        CHECK(is_zero(apply_matrix(a, v)));
        bool fits = true;
        for (const auto& x : v) fits = fits && x <= bound;
        if (fits) in_box.insert(v);
      }
      CHECK(in_box == brute_hilbert(a, cols, bound));
    };
    check(ints({{1, 1, -1, -1}}), 4, 3);
    check(ints({{1, 2, -3}}), 3, 4);
    check(ints({{1, -1, 0, 0}, {0, 1, 1, -2}}), 4, 4);
    Rng rng(75);
    for (int trial = 0; trial < 25; ++trial) check(random_matrix(rng, 1, 4, 3), 4, 4);
    const IntMatrix h = hilbert_basis_kernel(ints({{1, 1, -1, -1}}), 4);
    CHECK(h.size() == 4);
  }

  TEST_CASE("toric ideal generators") {
    // Twisted cubic: three quadrics.
    const IntMatrix cubic = ints({{1, 1, 1, 1}, {0, 1, 2, 3}});
    const auto gens = toric_ideal_generators(cubic, 4, IntVector{1, 1, 1, 1});
    CHECK(gens.size() == 3);
    for (const auto& [plus, minus] : gens) {
      CHECK(apply_matrix(cubic, plus) == apply_matrix(cubic, minus));
      CHECK(dot(plus, IntVector{1, 1, 1, 1}) == 2);
    }
    // Segre P1 x P1: one quadric.
    const IntMatrix segre = ints({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}});
    CHECK(toric_ideal_generators(segre, 4, IntVector{1, 1, 1, 1}).size() == 1);
    // Free: no relations.
    CHECK(toric_ideal_generators(identity_int(3), 3, IntVector{1, 1, 1}).empty());
    // Rational normal curve of degree 4: six quadrics.
    const IntMatrix quartic = ints({{1, 1, 1, 1, 1}, {0, 1, 2, 3, 4}});
    CHECK(toric_ideal_generators(quartic, 5, IntVector{1, 1, 1, 1, 1}).size() == 6);
  }

  TEST_CASE("fibre") {
    CHECK(fibre(ints({{1, 1}}), 2, IntVector{1, 1}, IntVector{3}, 3).size() == 4);
    CHECK(fibre(ints({{1, 1, 1}, {0, 1, 2}}), 3, IntVector{1, 1, 1}, IntVector{2, 2}, 2).size() == 2);
  }

  TEST_CASE("cone facets") {
    const IntMatrix f = cone_facets(ints({{1, 0}, {1, 2}}), 2);
    CHECK(f == ints({{0, 1}, {2, -1}}));
    const IntMatrix gens = ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}});
    const IntMatrix g = cone_facets(gens, 3);
    CHECK(g.size() == 4);
    for (const auto& n : g) {
      std::size_t vanishing = 0;
      for (const auto& v : gens) {
        CHECK(dot(n, v) >= 0);
        if (dot(n, v) == 0) ++vanishing;
      }
      CHECK(vanishing >= 2);
    }
  }
}
