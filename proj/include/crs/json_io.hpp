// json_io.hpp -- file formats. Everything is JSON with a "format": 1 field;
// element indices are 0-based, set members and sequence positions 1-based.

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "crs/crcore.hpp"
#include "crs/finset.hpp"
#include "crs/semigroup.hpp"
#include "crs/transfer.hpp"

namespace crs {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

namespace io {

inline void check_format(json const& j, char const* what) {
  if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected a JSON object");
  if (!j.contains("format") || !j["format"].is_number_integer() ||
      j["format"].get<int>() != kFormatVersion)
    throw std::invalid_argument(std::string(what) + ": missing or unsupported \"format\"");
}

inline std::uint64_t get_uint(json const& j, char const* what, std::uint64_t lo,
                              std::uint64_t hi) {
  if (!j.is_number_integer() || j.is_number_float() || j.get<long long>() < 0)
    throw std::invalid_argument(std::string(what) + ": expected a nonnegative integer");
  auto v = j.get<std::uint64_t>();
  if (v < lo || v > hi)
    throw std::invalid_argument(std::string(what) + ": value " + std::to_string(v) +
                                " out of range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  return v;
}

inline Semigroup parse_semigroup(json const& j) {
  check_format(j, "semigroup");
  Semigroup s;
  s.n = static_cast<std::size_t>(get_uint(j.at("n"), "semigroup n", 1, kMaxSemigroupSize));
  if (!j.contains("table") || !j["table"].is_array() || j["table"].size() != s.n)
    throw std::invalid_argument("semigroup: table must be an n-row array");
  s.table.reserve(s.n * s.n);
  for (auto const& row : j["table"]) {
    if (!row.is_array() || row.size() != s.n)
      throw std::invalid_argument("semigroup: table must be square (n x n)");
    for (auto const& e : row)
      s.table.push_back(static_cast<elem_t>(get_uint(e, "table entry", 0, 65535)));
  }
  if (j.contains("name")) s.name = j["name"].get<std::string>();
  return s;
}

inline json dump_semigroup(Semigroup const& s) {
  json rows = json::array();
  for (std::size_t x = 0; x < s.n; ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < s.n; ++y) row.push_back(s.at(x, y));
    rows.push_back(std::move(row));
  }
  json j{{"format", kFormatVersion}, {"n", s.n}, {"table", std::move(rows)}};
  if (!s.name.empty()) j["name"] = s.name;
  return j;
}

inline ElemSet parse_elemset(json const& j, std::size_t n) {
  check_format(j, "element set");
  if (!j.contains("elements") || !j["elements"].is_array())
    throw std::invalid_argument("element set: missing \"elements\" array");
  ElemSet a(n);
  for (auto const& e : j["elements"])
    a.insert(static_cast<elem_t>(get_uint(e, "element", 0, n - 1)));
  return a;
}

inline json dump_elemset(ElemSet const& a) {
  return json{{"format", kFormatVersion}, {"elements", a.members()}};
}

inline finset_t parse_finset(json const& j, char const* what = "set") {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(std::string(what) + ": expected a nonempty integer array");
  std::vector<unsigned> members;
  for (auto const& e : j)
    members.push_back(static_cast<unsigned>(get_uint(e, what, 1, kMaxUniverse)));
  return set_from_members(members);
}

inline json dump_finset(finset_t s) { return json(set_members(s)); }

inline BlockSeq parse_blocks(json const& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("blocks: expected a nonempty array of sets");
  BlockSeq b;
  for (auto const& e : j) b.push_back(parse_finset(e, "block"));
  return b;
}

inline json dump_blocks(BlockSeq const& b) {
  json j = json::array();
  for (finset_t h : b) j.push_back(dump_finset(h));
  return j;
}

inline SetFamily parse_family(json const& j) {
  check_format(j, "set family");
  if (!j.contains("sets") || !j["sets"].is_array())
    throw std::invalid_argument("set family: missing \"sets\" array");
  std::vector<finset_t> sets;
  for (auto const& e : j["sets"]) sets.push_back(parse_finset(e));
  return make_family(std::move(sets));
}

inline json dump_family(SetFamily const& x) {
  json sets = json::array();
  for (finset_t s : x.sets) sets.push_back(dump_finset(s));
  return json{{"format", kFormatVersion}, {"sets", std::move(sets)}};
}

inline SeqFun parse_fun(json const& j, std::size_t n) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
    throw std::invalid_argument("sequence: expected {\"values\": [...], \"default\": e}");
  SeqFun f;
  for (auto const& e : j["values"])
    f.values.push_back(static_cast<elem_t>(get_uint(e, "sequence value", 0, n - 1)));
  f.def = j.contains("default")
              ? static_cast<elem_t>(get_uint(j["default"], "sequence default", 0, n - 1))
              : 0;
  return f;
}

inline json dump_fun(SeqFun const& f) {
  return json{{"values", f.values}, {"default", f.def}};
}

inline FunFamily parse_funs(json const& j, std::size_t n, std::size_t r_max) {
  check_format(j, "function family");
  if (!j.contains("funs") || !j["funs"].is_array() || j["funs"].empty())
    throw std::invalid_argument("function family: missing nonempty \"funs\" array");
  std::vector<SeqFun> funs;
  for (auto const& e : j["funs"]) funs.push_back(parse_fun(e, n));
  std::size_t longest = 1;
  for (auto const& f : funs) longest = std::max(longest, f.values.size());
  return make_family(std::move(funs), std::max(r_max, longest));
}

inline json dump_funs(std::vector<SeqFun> const& funs) {
  json fs = json::array();
  for (auto const& f : funs) fs.push_back(dump_fun(f));
  return json{{"format", kFormatVersion}, {"funs", std::move(fs)}};
}

inline CrWitness parse_witness(json const& j) {
  check_format(j, "witness");
  CrWitness w;
  w.m = static_cast<std::size_t>(get_uint(j.at("m"), "witness m", 1, 64));
  if (!j.contains("a") || !j["a"].is_array())
    throw std::invalid_argument("witness: missing \"a\" array");
  for (auto const& e : j["a"])
    w.a.push_back(static_cast<elem_t>(get_uint(e, "witness element", 0, 65535)));
  if (!j.contains("t") || !j["t"].is_array())
    throw std::invalid_argument("witness: missing \"t\" array");
  for (auto const& e : j["t"])
    w.t.push_back(static_cast<unsigned>(get_uint(e, "witness index", 1, kMaxUniverse)));
  check_witness_shape(w);
  return w;
}

inline json dump_witness(CrWitness const& w) {
  return json{{"format", kFormatVersion}, {"m", w.m}, {"a", w.a}, {"t", w.t}};
}

inline CompressionPlan parse_plan(json const& j, std::size_t n) {
  check_format(j, "compression plan");
  if (!j.contains("blocks")) throw std::invalid_argument("compression plan: missing \"blocks\"");
  CompressionPlan plan;
  plan.blocks = parse_blocks(j["blocks"]);
  plan.filler = j.contains("d")
                    ? static_cast<elem_t>(get_uint(j["d"], "filler", 0, n - 1))
                    : 0;
  auto rep = validate_blockseq(plan.blocks);
  if (!rep.ok)
    throw std::invalid_argument("compression plan: block " +
                                std::to_string(rep.violating_index) +
                                " undercuts its predecessor");
  return plan;
}

inline json dump_plan(CompressionPlan const& plan) {
  return json{{"format", kFormatVersion}, {"blocks", dump_blocks(plan.blocks)},
              {"d", plan.filler}};
}

inline json load_json(std::istream& in, char const* what) {
  json j;
  try {
    in >> j;
  } catch (json::parse_error const& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
  return j;
}

inline json load_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return load_json(in, path.c_str());
}

}  // namespace io
}  // namespace crs
