#pragma once

// JSON encodings of instances, halfspaces, results and reduction metadata.
// Scalars are strings in the canonical "p" / "p/q" form, so every value
// round-trips bit-exactly. Malformed input throws Error(kParse).

#include <string>
#include <string_view>

#include "json.hpp"

#include "hsdisc/base_problems.hpp"
#include "hsdisc/geometry.hpp"
#include "hsdisc/reductions.hpp"
#include "hsdisc/solvers.hpp"

namespace hsdisc {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text);
// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json to_json(const ColoredInstance& inst);
ColoredInstance colored_from_json(const Json& j);

Json to_json(const Halfspace& h);
Halfspace halfspace_from_json(const Json& j);

Json to_json(const KSumInstance& inst);
KSumInstance ksum_from_json(const Json& j);

Json to_json(const PointSetInstance& inst);
PointSetInstance points_from_json(const Json& j);

Json to_json(const KSumWitness& w);
Json to_json(const DegeneracyWitness& w);

// {"w", "xi", "value", "queries", "abs_mode"}.
Json to_json(const SolveResult& r);
SolveResult solve_result_from_json(const Json& j);

Json to_json(const QueryReport& r);

// Metadata written next to a reduced instance; together they rebuild the
// reduction object.
Json reduction_meta(const KSumReduction& red);
Json reduction_meta(const DegeneracyReduction& red);
KSumReduction ksum_reduction_from_json(const Json& instance, const Json& meta);
DegeneracyReduction degeneracy_reduction_from_json(const Json& instance, const Json& meta);

Json to_json(const KSumVerdict& v);
Json to_json(const DegeneracyVerdict& v);

}  // namespace hsdisc
