#include "hsdisc/io.hpp"

#include <fstream>
#include <sstream>

namespace hsdisc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::string text_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  bad("expected a number string");
}

ExactScalar scalar(const Json& j) { return parse_scalar(text_of(j)); }
ExactInt integer(const Json& j) { return parse_int(text_of(j)); }

std::size_t count_of(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) bad(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

const Json& array(const Json& j) {
  if (!j.is_array()) bad("expected a JSON array");
  return j;
}

Json scalars(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_text(x));
  return a;
}

RatVector scalars_from(const Json& j) {
  RatVector v;
  for (const auto& x : array(j)) v.push_back(scalar(x));
  return v;
}

Json indices(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto i : v) a.push_back(i);
  return a;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

Json to_json(const ColoredInstance& inst) {
  Json j;
  j["dim"] = inst.dim;
  j["red"] = Json::array();
  for (const auto& p : inst.red) j["red"].push_back(scalars(p));
  j["blue"] = Json::array();
  for (const auto& p : inst.blue) j["blue"].push_back(scalars(p));
  return j;
}

ColoredInstance colored_from_json(const Json& j) {
  ColoredInstance inst;
  inst.dim = count_of(j, "dim");
  for (const auto& p : array(field(j, "red"))) inst.red.push_back(scalars_from(p));
  for (const auto& p : array(field(j, "blue"))) inst.blue.push_back(scalars_from(p));
  try {
    inst.validate();
  } catch (const Error& e) {
    bad(e.what());
  }
  return inst;
}

Json to_json(const Halfspace& h) {
  Json j;
  j["w"] = scalars(h.w());
  j["xi"] = to_text(h.xi());
  return j;
}

Halfspace halfspace_from_json(const Json& j) {
  try {
    return Halfspace(scalars_from(field(j, "w")), scalar(field(j, "xi")));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument) bad(e.what());
    throw;
  }
}

Json to_json(const KSumInstance& inst) {
  Json j;
  j["k"] = inst.k;
  j["values"] = Json::array();
  for (const auto& v : inst.values) j["values"].push_back(to_text(v));
  return j;
}

KSumInstance ksum_from_json(const Json& j) {
  KSumInstance inst;
  inst.k = count_of(j, "k");
  for (const auto& v : array(field(j, "values"))) inst.values.push_back(integer(v));
  return inst;
}

Json to_json(const PointSetInstance& inst) {
  Json j;
  j["dim"] = inst.dim;
  j["coord_bound"] = inst.coord_bound ? Json(to_text(*inst.coord_bound)) : Json(nullptr);
  j["points"] = Json::array();
  for (const auto& p : inst.points) {
    Json row = Json::array();
    for (const auto& c : p) row.push_back(to_text(c));
    j["points"].push_back(row);
  }
  return j;
}

PointSetInstance points_from_json(const Json& j) {
  PointSetInstance inst;
  inst.dim = count_of(j, "dim");
  const Json& b = field(j, "coord_bound");
  if (!b.is_null()) inst.coord_bound = integer(b);
  for (const auto& p : array(field(j, "points"))) {
    std::vector<ExactInt> row;
    for (const auto& c : array(p)) row.push_back(integer(c));
    inst.points.push_back(std::move(row));
  }
  try {
    inst.validate();
  } catch (const Error& e) {
    bad(e.what());
  }
  return inst;
}

Json to_json(const KSumWitness& w) { return Json{{"indices", indices(w.indices)}}; }
Json to_json(const DegeneracyWitness& w) { return Json{{"indices", indices(w.indices)}}; }

Json to_json(const SolveResult& r) {
  Json j;
  j["w"] = scalars(r.halfspace.w());
  j["xi"] = to_text(r.halfspace.xi());
  j["value"] = to_text(r.value);
  j["queries"] = r.queries;
  j["abs_mode"] = r.abs_mode;
  return j;
}

SolveResult solve_result_from_json(const Json& j) {
  const Json& q = field(j, "queries");
  const Json& a = field(j, "abs_mode");
  if (!q.is_number_unsigned() || !a.is_boolean()) bad("malformed solve result");
  SolveResult r{halfspace_from_json(j), integer(field(j, "value")), q.get<std::uint64_t>(), a.get<bool>(), false, {}};
  return r;
}

Json to_json(const QueryReport& r) {
  Json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["queries"] = r.queries;
  j["candidates"] = r.candidates;
  return j;
}

Json reduction_meta(const KSumReduction& red) {
  Json j;
  j["kind"] = "ksum";
  j["gamma"] = to_text(red.gamma);
  j["source"] = to_json(red.source);
  j["index_map"] = Json::array();
  for (const auto& s : red.index_map)
    j["index_map"].push_back(Json{{"source", s.source}, {"line", s.line}, {"red", s.red}, {"blue", s.blue}});
  return j;
}

Json reduction_meta(const DegeneracyReduction& red) {
  Json j;
  j["kind"] = "degeneracy";
  j["gamma"] = to_text(red.gamma);
  j["source"] = to_json(red.source);
  j["index_map"] = Json::array();
  for (std::size_t i = 0; i < red.source.points.size(); ++i)
    j["index_map"].push_back(Json{{"source", i}, {"red", i}, {"blue", i}});
  return j;
}

KSumReduction ksum_reduction_from_json(const Json& instance, const Json& meta) {
  if (field(meta, "kind") != "ksum") bad("metadata is not a k-Sum reduction");
  KSumReduction red;
  red.instance = colored_from_json(instance);
  red.gamma = scalar(field(meta, "gamma"));
  red.source = ksum_from_json(field(meta, "source"));
  for (const auto& s : array(field(meta, "index_map"))) {
    GadgetSlot slot{count_of(s, "source"), count_of(s, "line"), count_of(s, "red"), count_of(s, "blue")};
    if (slot.red >= red.instance.red.size() || slot.blue >= red.instance.blue.size() ||
        slot.source >= red.source.values.size() || slot.line > red.instance.dim)
      bad("index_map entry out of range");
    red.index_map.push_back(slot);
  }
  return red;
}

DegeneracyReduction degeneracy_reduction_from_json(const Json& instance, const Json& meta) {
  if (field(meta, "kind") != "degeneracy") bad("metadata is not a degeneracy reduction");
  DegeneracyReduction red;
  red.instance = colored_from_json(instance);
  red.gamma = scalar(field(meta, "gamma"));
  red.source = points_from_json(field(meta, "source"));
  if (red.instance.red.size() != red.source.points.size() || red.instance.blue.size() != red.source.points.size())
    bad("reduced instance does not match its source");
  return red;
}

Json to_json(const KSumVerdict& v) {
  Json j;
  j["oracle"] = v.oracle;
  j["reduced"] = v.reduced;
  j["agree"] = v.agree;
  j["optimum"] = to_text(v.optimum);
  j["cap_holds"] = v.cap_holds;
  j["oracle_witness"] = v.oracle_witness ? indices(v.oracle_witness->indices) : Json(nullptr);
  j["witness"] = v.witness ? indices(v.witness->indices) : Json(nullptr);
  j["witness_valid"] = v.witness_valid;
  return j;
}

Json to_json(const DegeneracyVerdict& v) {
  Json j;
  j["oracle"] = v.oracle;
  j["reduced"] = v.reduced;
  j["agree"] = v.agree;
  j["optimum"] = to_text(v.optimum);
  j["sheared"] = v.sheared;
  j["oracle_witness"] = v.oracle_witness ? indices(v.oracle_witness->indices) : Json(nullptr);
  j["witness"] = v.witness ? indices(v.witness->indices) : Json(nullptr);
  j["witness_valid"] = v.witness_valid;
  return j;
}

}  // namespace hsdisc
