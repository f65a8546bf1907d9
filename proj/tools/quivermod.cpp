// quivermod: command-line front end for quiver stability and toric moduli.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quivermod/constructions.hpp"
#include "quivermod/errors.hpp"
#include "quivermod/io.hpp"

using namespace quivermod;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

std::string tuple_string(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string set_string(const std::vector<VertexId>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

std::string vector_string(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

/// θ from the file when it was given for this dimension vector, otherwise the framing θ_T.
Theta default_theta(const QuiverFile& file, const DimensionVector& d) {
  if (file.theta && (!file.dimension || *file.dimension == d)) return *file.theta;
  return framing_from_ranks(d.values()).theta();
}

DimensionVector thin_dimension(const QuiverFile& file) {
  return file.dimension ? *file.dimension
                        : DimensionVector(std::vector<std::int64_t>(file.quiver->vertex_count(), 1));
}

std::string binomial_string(const std::vector<std::string>& names, const Binomial& b) {
  const auto side = [&](const IntVector& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names[i];
      if (e[i] != 1) s += "^" + to_string(e[i]);
    }
    return s.empty() ? std::string("1") : s;
  };
  return side(b.first) + " - " + side(b.second);
}

void print_witness(std::ostream& out, const Witness& w) {
  out << "witness: dim " << tuple_string(w.dimension.values()) << ", theta " << w.theta_value;
  if (!w.vertices.empty()) out << ", vertices " << set_string(w.vertices);
  out << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quiver representations, stability and toric GIT moduli"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  std::string quiver_path, rep_path, rep2_path, out_path, ranks_text;
  bool theta_from_file = false, framed = false;
  std::int64_t parameter = 0;

  auto* validate = app.add_subcommand("validate", "Check a quiver file");
  validate->add_option("quiver", quiver_path, "Quiver file or - for stdin")->required();

  auto* framing = app.add_subcommand("framing", "Print d_T and theta_T for summand ranks");
  framing->add_option("--ranks", ranks_text, "Comma-separated ranks r0,r1,...")->required();

  auto* stability = app.add_subcommand("stability", "Stability verdict with witness");
  stability->add_option("quiver", quiver_path)->required();
  stability->add_option("--rep", rep_path, "Representation JSON")->required();
  auto* from_file = stability->add_flag("--theta-from-file", theta_from_file, "Use the theta line of the quiver file");
  stability->add_flag("--framed", framed, "Framed criterion: vertex 0 generates")->excludes(from_file);

  auto* jh = app.add_subcommand("jh", "Jordan-Holder filtration of a thin representation");
  jh->add_option("quiver", quiver_path)->required();
  jh->add_option("--rep", rep_path)->required();

  auto* sequiv = app.add_subcommand("sequiv", "S-equivalence of two thin representations");
  sequiv->add_option("quiver", quiver_path)->required();
  sequiv->add_option("--rep", rep_path)->required();
  sequiv->add_option("--rep2", rep2_path)->required();

  auto* invariants = app.add_subcommand("invariants", "Invariant ring for theta = 0");
  invariants->add_option("quiver", quiver_path)->required();

  auto* moduli = app.add_subcommand("moduli", "Toric chart atlas as JSON");
  moduli->add_option("quiver", quiver_path)->required();
  moduli->add_option("--out", out_path, "Write to a file instead of stdout");

  auto* fan = app.add_subcommand("fan", "Fan of the moduli space");
  fan->add_option("quiver", quiver_path)->required();

  auto* builtin = app.add_subcommand("builtin", "Emit a built-in quiver file");
  builtin->require_subcommand(1);
  auto* determinantal = builtin->add_subcommand("determinantal", "Determinantal family");
  determinantal->add_option("m", parameter)->required();
  auto* preprojective = builtin->add_subcommand("preprojective-a", "Affine type-A preprojective algebra");
  preprojective->add_option("n", parameter)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[USAGE]: " << e.what() << "\n";
    return 2;
  }

  std::ostream& out = std::cout;
  try {
    const auto load = [&] { return parse_quiver_file(read_input(quiver_path)); };
    const auto load_rep = [&](const QuiverFile& f, const std::string& path) {
      return parse_rep_file(read_input(path), f.quiver, f.dimension);
    };

    if (*validate) {
      const QuiverFile f = load();
      const auto& q = *f.quiver;
      if (json) {
        out << dump_json({{"format_version", kFormatVersion},
                          {"valid", true},
                          {"quiver", q.name()},
                          {"vertices", std::to_string(q.vertex_count())},
                          {"arrows", std::to_string(q.arrow_count())},
                          {"relations", std::to_string(q.relations().size())}});
      } else {
        out << "valid: " << q.name() << " (" << q.vertex_count() << " vertices, " << q.arrow_count() << " arrows, "
            << q.relations().size() << " relations)\n";
        if (f.dimension && f.theta)
          out << "theta.d = " << theta_pairing(*f.theta, *f.dimension) << "\n";
      }
    } else if (*framing) {
      std::vector<std::int64_t> ranks;
      std::stringstream ss(ranks_text);
      for (std::string item; std::getline(ss, item, ',');) {
        try {
          std::size_t used = 0;
          ranks.push_back(std::stoll(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
          throw UsageError("bad rank '" + item + "'");
        }
      }
      const StabilityCondition c = framing_from_ranks(ranks);
      if (json) {
        Json d = Json::array(), t = Json::array();
        for (auto v : c.dimension().values()) d.push_back(std::to_string(v));
        for (auto v : c.theta().weights()) t.push_back(std::to_string(v));
        out << dump_json({{"format_version", kFormatVersion}, {"dim", d}, {"theta", t}});
      } else {
        out << "d_T = " << tuple_string(c.dimension().values()) << "\n";
        out << "theta_T = " << tuple_string(c.theta().weights()) << "\n";
      }
    } else if (*stability) {
      const QuiverFile f = load();
      const Representation m = load_rep(f, rep_path);
      if (theta_from_file && !f.theta) throw UsageError("quiver file has no theta line");
      if (framed) {
        const StabilityCondition c = framing_from_ranks(m.dimension().values());
        const StabilityVerdict v = is_stable_framed(m, c);
        if (json) out << dump_json(verdict_to_json(v, c.theta()));
        else {
          out << status_name(v.status) << "\n";
          if (v.witness) print_witness(out, *v.witness);
        }
      } else {
        const Theta theta = theta_from_file ? *f.theta : default_theta(f, m.dimension());
        const GeneralVerdict g = destabilizer_search_general(m, theta);
        if (json) {
          Json j = {{"format_version", kFormatVersion},
                    {"outcome", std::string(outcome_name(g.outcome))},
                    {"exhaustive", g.exhaustive},
                    {"note", g.note}};
          if (g.outcome != SearchOutcome::Inconclusive && (g.exhaustive || g.witness)) {
            StabilityVerdict v{g.status, g.witness};
            const Json vj = verdict_to_json(v, theta);
            j["status"] = vj["status"];
            j["theta"] = vj["theta"];
            j["witness"] = vj["witness"];
          }
          out << dump_json(j);
        } else {
          if (g.outcome == SearchOutcome::Inconclusive) out << "inconclusive\n";
          else if (g.exhaustive || g.witness) out << status_name(g.status) << "\n";
          else out << outcome_name(g.outcome) << "\n";
          if (g.witness) print_witness(out, *g.witness);
          if (!g.note.empty()) out << "note: " << g.note << "\n";
        }
      }
    } else if (*jh) {
      const QuiverFile f = load();
      const Representation m = load_rep(f, rep_path);
      const JHFiltration filtration = jordan_holder_thin(m, default_theta(f, m.dimension()));
      if (json) out << dump_json(jh_to_json(filtration));
      else {
        for (std::size_t k = 0; k < filtration.chain.size(); ++k)
          out << "M" << k + 1 << " = " << set_string(filtration.chain[k]) << ", factor dim "
              << tuple_string(filtration.factors[k].dimension().values()) << "\n";
      }
    } else if (*sequiv) {
      const QuiverFile f = load();
      const Representation m = load_rep(f, rep_path);
      const Representation n = load_rep(f, rep2_path);
      const bool same = s_equivalent(m, n, default_theta(f, m.dimension()));
      if (json) out << dump_json({{"format_version", kFormatVersion}, {"s_equivalent", same}});
      else out << (same ? "s-equivalent" : "not s-equivalent") << "\n";
    } else if (*invariants) {
      const QuiverFile f = load();
      const ArrowLattice lat = thin_reduce_relations(f.quiver);
      const InvariantRing ring = invariant_ring(lat);
      if (json) out << dump_json(invariants_to_json(lat, ring));
      else {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < ring.generators.size(); ++i) {
          names.push_back("g" + std::to_string(i + 1));
          out << names.back() << " = " << lat.monomial_string(ring.generators[i].exponent) << "\n";
        }
        for (const auto& b : ring.relations) out << "relation " << binomial_string(names, b) << "\n";
      }
    } else if (*moduli || *fan) {
      const QuiverFile f = load();
      const DimensionVector d = thin_dimension(f);
      if (d != DimensionVector(std::vector<std::int64_t>(d.size(), 1)))
        throw QuiverError(ErrorCode::NotThin, "toric moduli need dimension vector (1,...,1)");
      const ArrowLattice lat = thin_reduce_relations(f.quiver);
      const ChartAtlas atlas = moduli_atlas(lat, default_theta(f, d));
      if (*moduli) {
        std::optional<QuotientFan> qf;
        try {
          qf = quotient_fan(atlas);
        } catch (const QuiverError& e) {
          if (e.code() != ErrorCode::NonsmoothChart) throw;
        }
        const std::string text = dump_json(atlas_to_json(atlas, qf));
        if (out_path.empty()) {
          out << text;
        } else {
          std::ofstream file(out_path, std::ios::binary);
          if (!file) throw UsageError("cannot write '" + out_path + "'");
          file << text;
        }
      } else {
        const QuotientFan qf = quotient_fan(atlas);
        if (json) {
          Json j = fan_to_json(qf);
          j["format_version"] = kFormatVersion;
          out << dump_json(j);
        } else {
          out << "rank " << qf.rank << "\n";
          for (std::size_t i = 0; i < qf.rays.size(); ++i) out << "ray " << i << " " << vector_string(qf.rays[i]) << "\n";
          for (const auto& c : qf.cones) {
            out << "cone";
            for (auto i : c) out << " " << i;
            out << "\n";
          }
        }
      }
    } else if (*builtin) {
      const FramedQuiver fq = *determinantal ? build_determinantal(parameter) : build_preprojective_affine_A(parameter);
      out << emit_quiver_file(*fq.quiver, fq.framing.dimension(), fq.framing.theta());
    }
  } catch (const SyntaxError& e) {
    std::cerr << "error[" << code_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const QuiverError& e) {
    std::cerr << "error[" << code_name(e.code()) << "]: " << e.what() << "\n";
    return is_mathematical_refusal(e.code()) ? 1 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error[USAGE]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error[INTERNAL]: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
