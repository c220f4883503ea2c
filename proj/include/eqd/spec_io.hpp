#ifndef EQD_SPEC_IO_HPP
#define EQD_SPEC_IO_HPP

#include <string>

#include <json.hpp>

#include "eqd/discrepancy.hpp"

namespace eqd {

using json = nlohmann::ordered_json;

/// Point-spec file:
///   { "mode": "primitive" | "product",
///     "primitive_min_poly": [a0, .., ad],        // primitive mode; ascending,
///                                                // numbers or decimal strings
///     "coords": [ { "num": [..], "den": d }, .. ],
///     "coord_min_polys": [ [..] | null, .. ],    // optional; required in product mode
///     "integral": [ true, .. ],                  // optional per-coordinate declaration
///     "compositum_degree_is_product": true }     // required in product mode
AlgebraicPointSpec parse_point_spec(const json& j, const std::string& name);
AlgebraicPointSpec load_point_spec(const std::string& path);

/// Function-spec file:
///   { "kind": "constant", "dimension": N, "value": c }
///   { "kind": "trig_bump", "dimension": N, "bump_width": w,
///     "terms": [ { "n": [..], "cos": a, "sin": b }, .. ] }
///   { "kind": "sampled", "dimension": N, "grid": M, "samples": [..],
///     "lip": L, "bump_width": w }
TestFunction parse_function_spec(const json& j, const std::string& name);
TestFunction load_function_spec(const std::string& path);

/// FNV-1a digest of the file bytes, as a hex string.
std::string file_digest(const std::string& path);

/// Common report envelope: tool name/version, command, input digests.
json report_envelope(const std::string& command,
                     const std::vector<std::pair<std::string, std::string>>& inputs);

json to_json(const HeightReport& rep);
json to_json(const GenDegReport& rep);
json to_json(const DiscrepancyReport& rep);
json to_json(const SpectrumTable& table);
json to_json(const DeltaOptimum& opt);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace eqd

#endif
