#include "quivermod/constructions.hpp"

#include "quivermod/errors.hpp"

namespace quivermod {

namespace {

RawTerm term(Rational coefficient, std::vector<std::string> written) {
  RawTerm t;
  t.coefficient = std::move(coefficient);
  t.written_arrows = std::move(written);
  return t;
}

RawRelation binomial(std::vector<std::string> plus, std::vector<std::string> minus) {
  return RawRelation{{term(1, std::move(plus)), term(-1, std::move(minus))}};
}

}  // namespace

FramedQuiver build_determinantal(std::int64_t m) {
  if (m < 1) throw QuiverError(ErrorCode::BadParameter, "determinantal family needs m >= 1, got " + std::to_string(m));
  RawQuiver raw;
  raw.name = "determinantal" + std::to_string(m);
  raw.vertex_count = 2;
  raw.arrows.push_back({"a", 0, 1});
  raw.arrows.push_back({"c", 0, 1});
  for (std::int64_t i = 1; i <= m; ++i) raw.arrows.push_back({"k" + std::to_string(i), 1, 0});
  const auto k = [](std::int64_t i) { return "k" + std::to_string(i); };
  for (const char* x : {"a", "c"}) {
    for (std::int64_t i = 1; i <= m; ++i)
      for (std::int64_t j = i + 1; j <= m; ++j) raw.relations.push_back(binomial({k(i), x, k(j)}, {k(j), x, k(i)}));
  }
  for (std::int64_t j = 1; j <= m; ++j) raw.relations.push_back(binomial({"a", k(j), "c"}, {"c", k(j), "a"}));
  auto q = std::make_shared<const QuiverPresentation>(validate_presentation(raw));
  return FramedQuiver{"determinantal", m, std::move(q), framing_from_ranks({1, 1})};
}

FramedQuiver build_preprojective_affine_A(std::int64_t n) {
  if (n < 1) throw QuiverError(ErrorCode::BadParameter, "preprojective family needs n >= 1, got " + std::to_string(n));
  const std::int64_t size = n + 1;
  RawQuiver raw;
  raw.name = "preprojectiveA" + std::to_string(n);
  raw.vertex_count = size;
  const auto x = [](std::int64_t i) { return "x" + std::to_string(i); };
  const auto y = [](std::int64_t i) { return "y" + std::to_string(i); };
  for (std::int64_t i = 0; i < size; ++i) raw.arrows.push_back({x(i), i, (i + 1) % size});
  for (std::int64_t i = 0; i < size; ++i) raw.arrows.push_back({y(i), (i + 1) % size, i});
  for (std::int64_t i = 0; i < size; ++i) {
    const std::int64_t prev = (i + size - 1) % size;
    raw.relations.push_back(binomial({x(prev), y(prev)}, {y(i), x(i)}));
  }
  auto q = std::make_shared<const QuiverPresentation>(validate_presentation(raw));
  return FramedQuiver{"preprojective-a", n, std::move(q), framing_from_ranks(std::vector<std::int64_t>(size, 1))};
}

}  // namespace quivermod
