#include <set>

#include "quivermod/errors.hpp"
#include "quivermod/io.hpp"

namespace quivermod {

namespace {

[[noreturn]] void bad(const std::string& message) { throw SyntaxError(ErrorCode::Syntax, 1, 1, message); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  bad("matrix entries must be \"p/q\" strings or integers, found " + j.dump());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (!j.is_string()) bad("expected an integer string, found " + j.dump());
  const Rational r = parse_rational(j.get<std::string>());
  if (denominator_of(r) != 1) bad("expected an integer, found " + j.dump());
  return numerator_of(r);
}

Json binomials_json(const std::vector<Binomial>& relations) {
  Json out = Json::array();
  for (const auto& [plus, minus] : relations) out.push_back({{"plus", vector_json(plus)}, {"minus", vector_json(minus)}});
  return out;
}

std::vector<Binomial> binomials_from_json(const Json& j) {
  std::vector<Binomial> out;
  for (const auto& b : j) out.emplace_back(vector_from_json(b.at("plus")), vector_from_json(b.at("minus")));
  return out;
}

Json semiinvariant_json(const ArrowLattice& lattice, const SemiInvariant& s) {
  return {{"monomial", lattice.monomial_string(s.exponent)},
          {"exponent", vector_json(s.exponent)},
          {"point", vector_json(s.point)},
          {"degree", integer_json(s.degree)}};
}

SemiInvariant semiinvariant_from_json(const Json& j) {
  return SemiInvariant{vector_from_json(j.at("exponent")), vector_from_json(j.at("point")),
                       integer_from_json(j.at("degree"))};
}

Json theta_json(const Theta& theta) {
  Json out = Json::array();
  for (auto w : theta.weights()) out.push_back(std::to_string(w));
  return out;
}

Json int64_vector_json(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(std::to_string(x));
  return out;
}

Json index_json(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(std::to_string(x));
  return out;
}

}  // namespace

Json integer_json(const Integer& value) { return to_string(value); }

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(vector_json(row));
  return out;
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array, found " + j.dump());
  IntVector out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rows, found " + j.dump());
  IntMatrix out;
  for (const auto& row : j) out.push_back(vector_from_json(row));
  return out;
}

Representation parse_rep_file(std::string_view text, PresentationPtr quiver,
                              const std::optional<DimensionVector>& fallback) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SyntaxError(ErrorCode::Syntax, 1, static_cast<int>(e.byte), std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("representation file must be a JSON object");
  DimensionVector d;
  if (j.contains("dim")) {
    std::vector<std::int64_t> values;
    for (const auto& x : j.at("dim")) {
      const Integer v = integer_from_json(x);
      if (v < 0) bad("dimensions must be non-negative");
      values.push_back(v.convert_to<std::int64_t>());
    }
    d = DimensionVector(values);
  } else if (fallback) {
    d = *fallback;
  } else {
    bad("representation file has no \"dim\" and the quiver file no dim line");
  }
  if (d.size() != quiver->vertex_count())
    throw QuiverError(ErrorCode::DimensionMismatch, "dim has " + std::to_string(d.size()) + " entries, quiver has " +
                                                        std::to_string(quiver->vertex_count()) + " vertices");
  const Json arrows = j.contains("arrows") ? j.at("arrows") : Json::object();
  if (!arrows.is_object()) bad("\"arrows\" must be an object");
  for (const auto& [name, _] : arrows.items()) {
    if (!quiver->find_arrow(name)) throw QuiverError(ErrorCode::UnknownArrow, "unknown arrow '" + name + "'");
  }
  std::vector<Matrix> maps;
  for (const auto& arrow : quiver->arrows()) {
    const auto rows = static_cast<std::size_t>(d[arrow.head]);
    const auto cols = static_cast<std::size_t>(d[arrow.tail]);
    Matrix m(rows, cols);
    if (arrows.contains(arrow.name)) {
      const Json& mj = arrows.at(arrow.name);
      if (!mj.is_array() || mj.size() != rows)
        throw QuiverError(ErrorCode::BadMatrixShape, "arrow '" + arrow.name + "' needs " + std::to_string(rows) + " rows");
      for (std::size_t r = 0; r < rows; ++r) {
        if (!mj[r].is_array() || mj[r].size() != cols)
          throw QuiverError(ErrorCode::BadMatrixShape,
                            "arrow '" + arrow.name + "' needs " + std::to_string(cols) + " columns");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(mj[r][c]);
      }
    }
    maps.push_back(std::move(m));
  }
  return Representation(std::move(quiver), d, std::move(maps));
}

Json rep_to_json(const Representation& m) {
  Json arrows = Json::object();
  for (ArrowId a = 0; a < m.quiver().arrow_count(); ++a) {
    Json rows = Json::array();
    const Matrix& mat = m.map(a);
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(to_string(mat(r, c)));
      rows.push_back(std::move(row));
    }
    arrows[m.quiver().arrow(a).name] = std::move(rows);
  }
  return {{"format_version", kFormatVersion}, {"dim", int64_vector_json(m.dimension().values())}, {"arrows", arrows}};
}

Json verdict_to_json(const StabilityVerdict& verdict, const Theta& theta) {
  Json out = {{"format_version", kFormatVersion}, {"status", std::string(status_name(verdict.status))},
              {"theta", theta_json(theta)}};
  if (verdict.witness) {
    out["witness"] = {{"dimension", int64_vector_json(verdict.witness->dimension.values())},
                      {"theta_value", std::to_string(verdict.witness->theta_value)},
                      {"vertices", index_json(verdict.witness->vertices)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json jh_to_json(const JHFiltration& filtration) {
  Json chain = Json::array();
  for (const auto& c : filtration.chain) chain.push_back(index_json(c));
  Json factors = Json::array();
  for (const auto& f : filtration.factors) factors.push_back(int64_vector_json(f.dimension().values()));
  return {{"format_version", kFormatVersion}, {"chain", chain}, {"factor_dimensions", factors}};
}

Json invariants_to_json(const ArrowLattice& lattice, const InvariantRing& ring) {
  Json gens = Json::array();
  for (const auto& g : ring.generators) gens.push_back(semiinvariant_json(lattice, g));
  return {{"format_version", kFormatVersion},
          {"quiver", lattice.quiver->name()},
          {"generators", gens},
          {"relations", binomials_json(ring.relations)}};
}

Json fan_to_json(const QuotientFan& fan) {
  Json cones = Json::array();
  for (const auto& c : fan.cones) cones.push_back(index_json(c));
  return {{"rank", std::to_string(fan.rank)}, {"rays", matrix_json(fan.rays)}, {"cones", cones}};
}

QuotientFan fan_from_json(const Json& j) {
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& c : j.at("cones")) {
    std::vector<std::size_t> cone;
    for (const auto& i : c) cone.push_back(integer_from_json(i).convert_to<std::size_t>());
    cones.push_back(std::move(cone));
  }
  return make_fan(integer_from_json(j.at("rank")).convert_to<std::size_t>(), matrix_from_json(j.at("rays")),
                  std::move(cones));
}

Json atlas_to_json(const ChartAtlas& atlas, const std::optional<QuotientFan>& fan) {
  const ArrowLattice& lat = atlas.lattice;
  Json arrows = Json::array();
  for (const auto& a : lat.quiver->arrows()) arrows.push_back(a.name);
  Json charts = Json::array();
  for (const auto& c : atlas.charts) {
    Json gens = Json::array();
    for (const auto& g : c.generators) {
      const std::string num = lat.monomial_string(g.numerator);
      const std::string den = g.f_power == 0 ? "" : lat.monomial_string(c.distinguished.exponent);
      gens.push_back({{"coordinates", vector_json(g.coordinates)},
                      {"numerator", vector_json(g.numerator)},
                      {"f_power", integer_json(g.f_power)},
                      {"monomial", den.empty() ? num
                                               : num + "/(" + den + ")" +
                                                     (g.f_power == 1 ? "" : "^" + to_string(g.f_power))}});
    }
    charts.push_back({{"name", c.name},
                      {"distinguished", semiinvariant_json(lat, c.distinguished)},
                      {"generators", gens},
                      {"relations", binomials_json(c.relations)},
                      {"free", c.is_free(atlas.lattice_rank)}});
  }
  Json transitions = Json::array();
  for (const auto& row : atlas.transitions) {
    Json r = Json::array();
    for (const auto& t : row) r.push_back(matrix_json(t));
    transitions.push_back(std::move(r));
  }
  return {{"format_version", kFormatVersion},
          {"quiver", lat.quiver->name()},
          {"arrows", arrows},
          {"theta", theta_json(atlas.theta)},
          {"lattice_rank", std::to_string(atlas.lattice_rank)},
          {"lattice_basis", matrix_json(atlas.lattice_basis)},
          {"charts", charts},
          {"transitions", transitions},
          {"fan", fan ? fan_to_json(*fan) : Json(nullptr)}};
}

ChartAtlas atlas_from_json(const Json& j, PresentationPtr quiver) {
  if (j.at("format_version") != kFormatVersion) bad("unsupported format_version");
  if (j.at("quiver") != quiver->name()) bad("atlas belongs to quiver '" + j.at("quiver").get<std::string>() + "'");
  ChartAtlas atlas;
  atlas.lattice = thin_reduce_relations(std::move(quiver));
  std::vector<std::int64_t> theta;
  for (const auto& w : j.at("theta")) theta.push_back(integer_from_json(w).convert_to<std::int64_t>());
  atlas.theta = Theta(theta);
  atlas.lattice_rank = integer_from_json(j.at("lattice_rank")).convert_to<std::size_t>();
  atlas.lattice_basis = matrix_from_json(j.at("lattice_basis"));
  for (const auto& cj : j.at("charts")) {
    Chart c;
    c.name = cj.at("name").get<std::string>();
    c.distinguished = semiinvariant_from_json(cj.at("distinguished"));
    for (const auto& g : cj.at("generators"))
      c.generators.push_back(ChartGenerator{vector_from_json(g.at("coordinates")), vector_from_json(g.at("numerator")),
                                            integer_from_json(g.at("f_power"))});
    c.relations = binomials_from_json(cj.at("relations"));
    atlas.charts.push_back(std::move(c));
  }
  for (const auto& row : j.at("transitions")) {
    std::vector<IntMatrix> r;
    for (const auto& t : row) r.push_back(matrix_from_json(t));
    atlas.transitions.push_back(std::move(r));
  }
  return atlas;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace quivermod
