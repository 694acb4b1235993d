#pragma once

// Text plumbing: relation spaces and operation tables as JSON, relations as
// edge lists, information tables with set-valued attributes, DOT digraphs
// (plain arrows for relations and table orders, covering arrows for
// lattices), and JSON forms of the values the command line prints. Parsing
// validates shape eagerly and reports what is wrong with the document, not
// where the library later trips over it.

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "drs/claim.hpp"
#include "drs/core.hpp"
#include "drs/groupoid.hpp"
#include "drs/lattice.hpp"
#include "drs/quotient.hpp"
#include "drs/relation.hpp"

namespace drs {

using Json = nlohmann::ordered_json;

namespace io_detail {

inline nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Error::Kind::malformed_document,
                "invalid JSON (byte " + std::to_string(e.byte) + ")");
  }
}

inline std::vector<std::string> string_array(const nlohmann::json& j,
                                             const std::string& what) {
  if (!j.is_array())
    throw Error(Error::Kind::malformed_document,
                what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string())
      throw Error(Error::Kind::malformed_document,
                  what + " must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace io_detail

// ---------------------------------------------------------------------------
// Relation spaces.

struct SpaceDocument {
  FiniteRelationSpace space;
  std::string name;
  std::string source;
};

// JSON form: {"universe": [...], "relation": [[a,b], ...]} plus an optional
// {"metadata": {"name": ..., "source": ...}} block.
inline SpaceDocument parse_space_json(const std::string& text) {
  nlohmann::json j = io_detail::parse_json(text);
  if (!j.is_object() || !j.contains("universe") || !j.contains("relation"))
    throw Error(Error::Kind::malformed_document,
                "space document needs universe and relation fields");
  auto labels = io_detail::string_array(j["universe"], "universe");
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!j["relation"].is_array())
    throw Error(Error::Kind::malformed_document,
                "relation must be an array of label pairs");
  for (const auto& p : j["relation"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() ||
        !p[1].is_string())
      throw Error(Error::Kind::malformed_document,
                  "relation must be an array of label pairs");
    pairs.push_back({p[0].get<std::string>(), p[1].get<std::string>()});
  }
  SpaceDocument doc{FiniteRelationSpace::from_labels(labels, pairs), "", ""};
  if (j.contains("metadata")) {
    const auto& m = j["metadata"];
    if (!m.is_object())
      throw Error(Error::Kind::malformed_document,
                  "metadata must be an object");
    if (m.contains("name")) doc.name = m["name"].get<std::string>();
    if (m.contains("source")) doc.source = m["source"].get<std::string>();
  }
  return doc;
}

// Edge-list form: one pair per line, optionally preceded by '#' comments.
// A single label on a line declares an isolated element. The universe is the
// labels in order of first appearance.
inline SpaceDocument parse_space_edges(const std::string& text) {
  std::vector<std::string> labels;
  std::set<std::string> seen;
  auto declare = [&](const std::string& l) {
    if (seen.insert(l).second) labels.push_back(l);
  };
  std::vector<std::pair<std::string, std::string>> pairs;
  std::set<std::pair<std::string, std::string>> pair_seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) {
      declare(a);
      continue;
    }
    if (ls >> extra)
      throw Error(Error::Kind::malformed_document,
                  "line " + std::to_string(lineno) +
                      ": expected one or two labels");
    if (!pair_seen.insert({a, b}).second)
      throw Error(Error::Kind::duplicate_pair,
                  "line " + std::to_string(lineno) + ": duplicate pair " + a +
                      " " + b);
    declare(a);
    declare(b);
    pairs.push_back({a, b});
  }
  return {FiniteRelationSpace::from_labels(labels, pairs), "", ""};
}

// Sniffs the format: JSON documents start with '{'.
inline SpaceDocument parse_space_document(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_space_json(text);
  return parse_space_edges(text);
}

inline FiniteRelationSpace parse_space(const std::string& text) {
  return parse_space_document(text).space;
}

inline std::string emit_space(const FiniteRelationSpace& s,
                              const std::string& name = "",
                              const std::string& source = "") {
  Json j;
  j["universe"] = s.labels();
  Json rel = Json::array();
  for (auto [a, b] : s.pairs())
    rel.push_back(Json::array({s.label(a), s.label(b)}));
  j["relation"] = std::move(rel);
  if (!name.empty() || !source.empty()) {
    Json m = Json::object();
    if (!name.empty()) m["name"] = name;
    if (!source.empty()) m["source"] = source;
    j["metadata"] = std::move(m);
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Information tables: set-valued attributes over named objects.

struct InfoTable {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  // values[attribute][object] = sorted value set
  std::vector<std::vector<std::vector<std::string>>> values;

  bool deterministic() const {
    for (const auto& row : values)
      for (const auto& cell : row)
        if (cell.size() != 1) return false;
    return true;
  }
};

// {"objects": [...], "attributes": [...],
//  "values": {attribute: {object: [vals...]}}}; every cell must be present.
inline InfoTable parse_table(const std::string& text) {
  nlohmann::json j = io_detail::parse_json(text);
  if (!j.is_object() || !j.contains("objects") || !j.contains("attributes") ||
      !j.contains("values"))
    throw Error(Error::Kind::malformed_document,
                "table document needs objects, attributes and values fields");
  InfoTable t;
  t.objects = io_detail::string_array(j["objects"], "objects");
  t.attributes = io_detail::string_array(j["attributes"], "attributes");
  if (t.objects.empty() || t.attributes.empty())
    throw Error(Error::Kind::malformed_document,
                "table needs at least one object and one attribute");
  const auto& vals = j["values"];
  if (!vals.is_object())
    throw Error(Error::Kind::malformed_document,
                "values must map attributes to object value sets");
  for (const auto& [attr, row] : vals.items())
    if (std::find(t.attributes.begin(), t.attributes.end(), attr) ==
        t.attributes.end())
      throw Error(Error::Kind::unknown_label,
                  "value entry for unknown attribute " + attr);
  for (const auto& attr : t.attributes) {
    if (!vals.contains(attr))
      throw Error(Error::Kind::malformed_document,
                  "values missing attribute " + attr);
    const auto& row = vals[attr];
    if (!row.is_object())
      throw Error(Error::Kind::malformed_document,
                  "values must map attributes to object value sets");
    for (const auto& [obj, cell] : row.items())
      if (std::find(t.objects.begin(), t.objects.end(), obj) ==
          t.objects.end())
        throw Error(Error::Kind::unknown_label,
                    "value entry for unknown object " + obj);
    std::vector<std::vector<std::string>> cells;
    for (const auto& obj : t.objects) {
      if (!row.contains(obj))
        throw Error(Error::Kind::malformed_document,
                    "value set missing for (" + attr + "," + obj + ")");
      auto cell = io_detail::string_array(row[obj],
                                          "value set (" + attr + "," + obj + ")");
      std::sort(cell.begin(), cell.end());
      cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
      cells.push_back(std::move(cell));
    }
    t.values.push_back(std::move(cells));
  }
  return t;
}

// Objects become related when they agree on every chosen attribute; the
// result is an equivalence by construction. An empty choice would relate
// everything vacuously, so it is rejected instead of silently degenerating.
inline FiniteRelationSpace table_to_space(
    const InfoTable& t, const std::vector<std::string>& chosen) {
  if (chosen.empty())
    throw Error(Error::Kind::precondition, "empty attribute selection");
  std::vector<int> idx;
  for (const auto& name : chosen) {
    auto it = std::find(t.attributes.begin(), t.attributes.end(), name);
    if (it == t.attributes.end())
      throw Error(Error::Kind::unknown_label, "unknown attribute: " + name);
    idx.push_back((int)(it - t.attributes.begin()));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  int n = (int)t.objects.size();
  for (int x = 0; x < n; ++x)
    for (int w = 0; w < n; ++w) {
      bool agree = true;
      for (int a : idx)
        if (t.values[a][x] != t.values[a][w]) {
          agree = false;
          break;
        }
      if (agree) pairs.push_back({t.objects[x], t.objects[w]});
    }
  return FiniteRelationSpace::from_labels(t.objects, pairs);
}

// ---------------------------------------------------------------------------
// Operation tables.

// {"universe": [...], "table": [[labels...], ...]}; row a, column b.
inline FiniteGroupoid parse_groupoid(const std::string& text) {
  nlohmann::json j = io_detail::parse_json(text);
  if (!j.is_object() || !j.contains("universe") || !j.contains("table"))
    throw Error(Error::Kind::malformed_document,
                "table document needs universe and table fields");
  auto labels = io_detail::string_array(j["universe"], "universe");
  if (!j["table"].is_array())
    throw Error(Error::Kind::malformed_document,
                "table must be an array of label rows");
  auto find = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end())
      throw Error(Error::Kind::unknown_label, "unknown label '" + l + "'");
    return (int)(it - labels.begin());
  };
  std::vector<std::vector<int>> table;
  for (const auto& row : j["table"]) {
    std::vector<int> r;
    for (const auto& cell : io_detail::string_array(row, "table row"))
      r.push_back(find(cell));
    table.push_back(std::move(r));
  }
  return FiniteGroupoid(labels, table);
}

inline std::string emit_groupoid(const FiniteGroupoid& g) {
  Json j;
  j["universe"] = g.labels();
  Json rows = Json::array();
  for (int a = 0; a < g.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.size(); ++b) row.push_back(g.label(g.op(a, b)));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// DOT export. Same input, same bytes: nodes in universe order, arrows in
// row-major order.

inline std::string export_dot(const FiniteRelationSpace& s) {
  std::string out = "digraph space {\n";
  for (const auto& l : s.labels()) out += "  \"" + l + "\";\n";
  for (auto [a, b] : s.pairs())
    out += "  \"" + s.label(a) + "\" -> \"" + s.label(b) + "\";\n";
  out += "}\n";
  return out;
}

// Arrows of the absorption order ab = b.
inline std::string export_dot(const FiniteGroupoid& g) {
  std::string out = "digraph order {\n";
  for (const auto& l : g.labels()) out += "  \"" + l + "\";\n";
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (g.op(a, b) == b)
        out += "  \"" + g.label(a) + "\" -> \"" + g.label(b) + "\";\n";
  out += "}\n";
  return out;
}

// Covering arrows only, pointing upward.
inline std::string export_dot(const FiniteRelationSpace& s,
                              const FiniteLattice& lat) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (Subset v : lat.elements())
    out += "  \"" + set_to_string(s, v) + "\";\n";
  for (auto [i, j] : covers(lat))
    out += "  \"" + set_to_string(s, lat.element(i)) + "\" -> \"" +
           set_to_string(s, lat.element(j)) + "\";\n";
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// JSON views of printable values.

inline Json json_of(const FiniteRelationSpace& s) {
  Json j;
  j["universe"] = s.labels();
  Json rel = Json::array();
  for (auto [a, b] : s.pairs())
    rel.push_back(Json::array({s.label(a), s.label(b)}));
  j["relation"] = std::move(rel);
  return j;
}

inline Json json_set(const FiniteRelationSpace& s, Subset v) {
  Json j = Json::array();
  for (int i : members(v)) j.push_back(s.label(i));
  return j;
}

inline Json json_of(const FiniteRelationSpace& s, const RoughClass& c) {
  Json j;
  j["kind"] = eq_kind_name(c.kind);
  j["lower"] = json_set(s, c.a_l);
  j["upper"] = json_set(s, c.a_u);
  Json mem = Json::array();
  for (Subset v : c.members) mem.push_back(json_set(s, v));
  j["members"] = std::move(mem);
  return j;
}

inline Json json_of(const ClaimSpec& c) {
  Json j;
  j["claim"] = c.id;
  j["module"] = c.module;
  j["hypothesis"] = c.hypothesis;
  j["expect"] = c.expect == Expect::hold   ? "hold"
                : c.expect == Expect::fail ? "fail"
                                           : "open";
  j["summary"] = c.summary;
  return j;
}

inline Json json_of(const ClaimReport& r) {
  Json j;
  j["claim"] = r.claim;
  j["hypothesis"] = r.hypothesis;
  j["expect"] = r.expect == Expect::hold   ? "hold"
                : r.expect == Expect::fail ? "fail"
                                           : "open";
  j["verdict"] = r.verdict == Verdict::holds ? "holds" : "fails";
  j["sweep_size"] = r.sweep_size;
  if (r.seed) j["seed"] = *r.seed;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) {
    Json w;
    w["space"] = json_of(r.witness->space);
    Json sets = Json::array();
    for (Subset v : r.witness->sets)
      sets.push_back(json_set(r.witness->space, v));
    w["sets"] = std::move(sets);
    w["detail"] = r.witness->detail;
    j["witness"] = std::move(w);
  }
  return j;
}

}  // namespace drs
