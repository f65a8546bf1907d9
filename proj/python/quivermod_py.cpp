#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quivermod/constructions.hpp"
#include "quivermod/errors.hpp"
#include "quivermod/io.hpp"

namespace py = pybind11;
using namespace quivermod;

namespace {

struct PyQuiver {
  QuiverFile file;
};

PyQuiver from_framed(const FramedQuiver& fq) {
  return PyQuiver{QuiverFile{fq.quiver, fq.framing.dimension(), fq.framing.theta()}};
}

Theta theta_or_default(const PyQuiver& q, const std::optional<std::vector<std::int64_t>>& theta,
                       const DimensionVector& d) {
  if (theta) return Theta(*theta);
  if (q.file.theta && (!q.file.dimension || *q.file.dimension == d)) return *q.file.theta;
  return framing_from_ranks(d.values()).theta();
}

DimensionVector thin_dimension(const PyQuiver& q) {
  return q.file.dimension ? *q.file.dimension
                          : DimensionVector(std::vector<std::int64_t>(q.file.quiver->vertex_count(), 1));
}

Representation make_thin(const PyQuiver& q, const std::vector<std::string>& scalars) {
  std::vector<Rational> values;
  for (const auto& s : scalars) values.push_back(parse_rational(s));
  return Representation::thin(q.file.quiver, thin_dimension(q), values);
}

}  // namespace

PYBIND11_MODULE(_quivermod, m) {
  m.doc() = "Quiver stability and toric GIT moduli (exact arithmetic)";

  static py::exception<QuiverError> error(m, "QuiverError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const QuiverError& e) {
      py::set_error(error, (std::string(code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<PyQuiver>(m, "Quiver")
      .def_property_readonly("name", [](const PyQuiver& q) { return q.file.quiver->name(); })
      .def_property_readonly("vertex_count", [](const PyQuiver& q) { return q.file.quiver->vertex_count(); })
      .def_property_readonly("arrows",
                             [](const PyQuiver& q) {
                               std::vector<std::tuple<std::string, std::size_t, std::size_t>> out;
                               for (const auto& a : q.file.quiver->arrows()) out.emplace_back(a.name, a.tail, a.head);
                               return out;
                             })
      .def_property_readonly("relation_count", [](const PyQuiver& q) { return q.file.quiver->relations().size(); })
      .def_property_readonly("dimension",
                             [](const PyQuiver& q) -> std::optional<std::vector<std::int64_t>> {
                               if (!q.file.dimension) return std::nullopt;
                               return q.file.dimension->values();
                             })
      .def_property_readonly("theta",
                             [](const PyQuiver& q) -> std::optional<std::vector<std::int64_t>> {
                               if (!q.file.theta) return std::nullopt;
                               return q.file.theta->weights();
                             })
      .def("to_dsl",
           [](const PyQuiver& q) { return emit_quiver_file(*q.file.quiver, q.file.dimension, q.file.theta); })
      .def("__eq__", [](const PyQuiver& a, const PyQuiver& b) {
        return *a.file.quiver == *b.file.quiver && a.file.dimension == b.file.dimension && a.file.theta == b.file.theta;
      });

  m.def("parse_quiver", [](const std::string& text) { return PyQuiver{parse_quiver_file(text)}; }, py::arg("text"));
  m.def("determinantal", [](std::int64_t mm) { return from_framed(build_determinantal(mm)); }, py::arg("m"));
  m.def("preprojective_a", [](std::int64_t n) { return from_framed(build_preprojective_affine_A(n)); },
        py::arg("n"));

  m.def("framing_from_ranks",
        [](const std::vector<std::int64_t>& ranks) {
          const StabilityCondition c = framing_from_ranks(ranks);
          return std::make_pair(c.dimension().values(), c.theta().weights());
        },
        py::arg("ranks"));
  m.def("theta_pairing",
        [](const std::vector<std::int64_t>& theta, const std::vector<std::int64_t>& d) {
          return theta_pairing(Theta(theta), DimensionVector(d));
        },
        py::arg("theta"), py::arg("d"));
  m.def("is_generic",
        [](const std::vector<std::int64_t>& theta, const std::vector<std::int64_t>& d) {
          return is_generic(Theta(theta), DimensionVector(d));
        },
        py::arg("theta"), py::arg("d"));

  m.def("thin_stability_json",
        [](const PyQuiver& q, const std::vector<std::string>& scalars,
           const std::optional<std::vector<std::int64_t>>& theta, bool framed) {
          const Representation rep = make_thin(q, scalars);
          if (framed) {
            const StabilityCondition c = framing_from_ranks(rep.dimension().values());
            return verdict_to_json(is_stable_framed(rep, c), c.theta()).dump();
          }
          const Theta t = theta_or_default(q, theta, rep.dimension());
          return verdict_to_json(is_semistable_thin(rep, t), t).dump();
        },
        py::arg("quiver"), py::arg("scalars"), py::arg("theta") = std::nullopt, py::arg("framed") = false);
  m.def("rep_stability_json",
        [](const PyQuiver& q, const std::string& rep_json, const std::optional<std::vector<std::int64_t>>& theta) {
          const Representation rep = parse_rep_file(rep_json, q.file.quiver, q.file.dimension);
          const Theta t = theta_or_default(q, theta, rep.dimension());
          const GeneralVerdict g = destabilizer_search_general(rep, t);
          Json j = {{"outcome", std::string(outcome_name(g.outcome))}, {"exhaustive", g.exhaustive}, {"note", g.note}};
          if (g.exhaustive || g.witness) j["verdict"] = verdict_to_json(StabilityVerdict{g.status, g.witness}, t);
          return j.dump();
        },
        py::arg("quiver"), py::arg("rep_json"), py::arg("theta") = std::nullopt);
  m.def("jordan_holder_json",
        [](const PyQuiver& q, const std::vector<std::string>& scalars,
           const std::optional<std::vector<std::int64_t>>& theta) {
          const Representation rep = make_thin(q, scalars);
          return jh_to_json(jordan_holder_thin(rep, theta_or_default(q, theta, rep.dimension()))).dump();
        },
        py::arg("quiver"), py::arg("scalars"), py::arg("theta") = std::nullopt);
  m.def("s_equivalent",
        [](const PyQuiver& q, const std::vector<std::string>& a, const std::vector<std::string>& b,
           const std::optional<std::vector<std::int64_t>>& theta) {
          const Representation ra = make_thin(q, a), rb = make_thin(q, b);
          return s_equivalent(ra, rb, theta_or_default(q, theta, ra.dimension()));
        },
        py::arg("quiver"), py::arg("a"), py::arg("b"), py::arg("theta") = std::nullopt);

  m.def("invariant_ring_json",
        [](const PyQuiver& q) {
          const ArrowLattice lat = thin_reduce_relations(q.file.quiver);
          return invariants_to_json(lat, invariant_ring(lat)).dump();
        },
        py::arg("quiver"));
  m.def("moduli_atlas_json",
        [](const PyQuiver& q, const std::optional<std::vector<std::int64_t>>& theta) {
          const ArrowLattice lat = thin_reduce_relations(q.file.quiver);
          const ChartAtlas atlas = moduli_atlas(lat, theta_or_default(q, theta, thin_dimension(q)));
          std::optional<QuotientFan> fan;
          try {
            fan = quotient_fan(atlas);
          } catch (const QuiverError& e) {
            if (e.code() != ErrorCode::NonsmoothChart) throw;
          }
          return dump_json(atlas_to_json(atlas, fan));
        },
        py::arg("quiver"), py::arg("theta") = std::nullopt);
  m.def("fan_equivalent_json",
        [](const std::string& a, const std::string& b) {
          return fan_equivalent(fan_from_json(Json::parse(a)), fan_from_json(Json::parse(b)));
        },
        py::arg("a"), py::arg("b"));
}
