#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "quivermod/stability.hpp"
#include "quivermod/toric_moduli.hpp"

namespace quivermod {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// A parsed quiver file: the presentation plus the optional `dim` and `theta` lines.
struct QuiverFile {
  PresentationPtr quiver;
  std::optional<DimensionVector> dimension;
  std::optional<Theta> theta;
};

/// Throws SyntaxError (SYNTAX, UNKNOWN_ARROW, NONCOMPOSABLE_TERM) with the
/// first error's line and column, or ValidationError.
QuiverFile parse_quiver_file(std::string_view text);

std::string emit_quiver_file(const QuiverPresentation& quiver, const std::optional<DimensionVector>& dimension = {},
                             const std::optional<Theta>& theta = {});

/// {"format_version":1,"dim":[...],"arrows":{"a":[["p/q",...],...],...}}.
/// `dim` may be omitted when `fallback` is given.
Representation parse_rep_file(std::string_view text, PresentationPtr quiver,
                              const std::optional<DimensionVector>& fallback = {});
Json rep_to_json(const Representation& m);

Json integer_json(const Integer& value);
Json vector_json(const IntVector& v);
Json matrix_json(const IntMatrix& m);
IntVector vector_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);

Json verdict_to_json(const StabilityVerdict& verdict, const Theta& theta);
Json jh_to_json(const JHFiltration& filtration);
Json invariants_to_json(const ArrowLattice& lattice, const InvariantRing& ring);
Json fan_to_json(const QuotientFan& fan);
QuotientFan fan_from_json(const Json& j);
Json atlas_to_json(const ChartAtlas& atlas, const std::optional<QuotientFan>& fan);
/// Rebuilds an atlas from its JSON over the same quiver.
ChartAtlas atlas_from_json(const Json& j, PresentationPtr quiver);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_json(const Json& j);

}  // namespace quivermod
