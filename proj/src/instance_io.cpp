// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arbopack/instance_io.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "arbopack/matroid.hpp"
#include "arbopack/mixed_graph.hpp"

namespace arbopack {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

void require_keys(const json& j, const std::string& what,
                  const std::set<std::string>& allowed) {
  for (const auto& item : j.items()) {
    if (allowed.count(item.key()) == 0) {
      fail("unknown key '" + item.key() + "' in " + what);
    }
  }
}

const json& need(const json& j, const std::string& what,
                 const std::string& key) {
  if (!j.is_object()) fail(what + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) fail(what + " is missing key '" + key + "'");
  return *it;
}

int need_int(const json& j, const std::string& what, const std::string& key) {
  const json& v = need(j, what, key);
  if (!v.is_number_integer()) {
    fail("key '" + key + "' in " + what + " must be an integer");
  }
  return v.get<int>();
}

std::string need_string(const json& j, const std::string& what,
                        const std::string& key) {
  const json& v = need(j, what, key);
  if (!v.is_string()) {
    fail("key '" + key + "' in " + what + " must be a string");
  }
  return v.get<std::string>();
}

const json& need_array(const json& j, const std::string& what,
                       const std::string& key) {
  const json& v = need(j, what, key);
  if (!v.is_array()) fail("key '" + key + "' in " + what + " must be a list");
  return v;
}

std::vector<int> int_list(const json& v, const std::string& what) {
  if (!v.is_array()) fail(what + " must be a list of integers");
  std::vector<int> out;
  for (const json& x : v) {
    if (!x.is_number_integer()) fail(what + " must be a list of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

// Label table for one document. Order of the vertices list defines ids.
struct LabelTable {
  std::vector<std::string> labels;
  std::map<std::string, int> index;

  int resolve(const json& v, const std::string& what) const {
    if (!v.is_string()) fail(what + " must be a vertex label string");
    const std::string label = v.get<std::string>();
    auto it = index.find(label);
    if (it == index.end()) {
      fail(what + " names unknown vertex '" + label + "'");
    }
    return it->second;
  }
};

LabelTable parse_labels(const json& doc) {
  LabelTable t;
  const json& vertices = need_array(doc, "document", "vertices");
  for (const json& v : vertices) {
    if (!v.is_string()) fail("entries of 'vertices' must be strings");
    const std::string label = v.get<std::string>();
    if (label.empty()) fail("vertex labels must be nonempty");
    if (!t.index.emplace(label, static_cast<int>(t.labels.size())).second) {
      fail("duplicate vertex label '" + label + "'");
    }
    t.labels.push_back(label);
  }
  return t;
}

// An [tail,head] pair; `what` names the list entry in error messages.
std::pair<int, int> parse_endpoint_pair(const json& v, const LabelTable& t,
                                        const std::string& what) {
  if (!v.is_array() || v.size() != 2) {
    fail(what + " must be a [tail, head] pair of labels");
  }
  return {t.resolve(v[0], what), t.resolve(v[1], what)};
}

Matroid parse_matroid(const json& doc) {
  const json& m = need(doc, "document", "matroid");
  if (!m.is_object()) fail("'matroid' must be an object");
  const std::string type = need_string(m, "matroid", "type");
  const int elements = need_int(m, "matroid", "elements");
  try {
    if (type == "free") {
      require_keys(m, "matroid", {"type", "elements"});
      return Matroid::free_matroid(elements);
    }
    if (type == "uniform") {
      require_keys(m, "matroid", {"type", "elements", "rank"});
      return Matroid::uniform(elements, need_int(m, "matroid", "rank"));
    }
    if (type == "partition") {
      require_keys(m, "matroid", {"type", "elements", "class_of", "limits"});
      return Matroid::partition(
          elements, int_list(need(m, "matroid", "class_of"), "'class_of'"),
          int_list(need(m, "matroid", "limits"), "'limits'"));
    }
    if (type == "graphic") {
      require_keys(m, "matroid", {"type", "elements", "aux_vertices",
                                  "aux_edges"});
      const int aux_vertices = need_int(m, "matroid", "aux_vertices");
      std::vector<Edge> aux_edges;
      for (const json& e : need_array(m, "matroid", "aux_edges")) {
        std::vector<int> pair = int_list(e, "entries of 'aux_edges'");
        if (pair.size() != 2) {
          fail("entries of 'aux_edges' must be [u, v] pairs");
        }
        aux_edges.push_back(Edge{pair[0], pair[1]});
      }
      return Matroid::graphic(elements, aux_vertices, std::move(aux_edges));
    }
    if (type == "linear_gf2") {
      require_keys(m, "matroid", {"type", "elements", "rows", "columns"});
      const int rows = need_int(m, "matroid", "rows");
      std::vector<std::uint64_t> columns;
      for (const json& c : need_array(m, "matroid", "columns")) {
        std::uint64_t col = 0;
        for (int row : int_list(c, "entries of 'columns'")) {
          if (row < 0 || row >= rows) {
            fail("column row index " + std::to_string(row) +
                 " outside [0, rows)");
          }
          col |= std::uint64_t{1} << row;
        }
        columns.push_back(col);
      }
      return Matroid::linear_gf2(elements, rows, std::move(columns));
    }
  } catch (const std::invalid_argument& e) {
    fail(std::string("bad matroid params: ") + e.what());
  }
  fail("unknown matroid type '" + type + "'");
}

Placement parse_roots(const json& doc, const LabelTable& t, int elements) {
  const json& roots = need_array(doc, "document", "roots");
  if (static_cast<int>(roots.size()) != elements) {
    fail("'roots' must place every element exactly once (expected " +
         std::to_string(elements) + " entries, got " +
         std::to_string(roots.size()) + ")");
  }
  std::vector<int> vertex_of(elements, -1);
  for (const json& r : roots) {
    if (!r.is_object()) fail("entries of 'roots' must be objects");
    require_keys(r, "a 'roots' entry", {"element", "vertex"});
    const int element = need_int(r, "a 'roots' entry", "element");
    if (element < 0 || element >= elements) {
      fail("root element id " + std::to_string(element) +
           " outside [0, elements)");
    }
    if (vertex_of[element] != -1) {
      fail("element " + std::to_string(element) + " is placed twice");
    }
    vertex_of[element] =
        t.resolve(need(r, "a 'roots' entry", "vertex"), "a root vertex");
  }
  return Placement{std::move(vertex_of)};
}

json label_list(const std::vector<std::string>& labels, VertexSet x) {
  json out = json::array();
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
    if (contains(x, v)) out.push_back(labels[v]);
  }
  return out;
}

json element_list(ElemSet x) {
  json out = json::array();
  for (int e = 0; e < kMaxElements; ++e) {
    if ((x >> e) & 1) out.push_back(e);
  }
  return out;
}

json matroid_json(const Matroid& m) {
  json out;
  out["elements"] = m.size();
  switch (m.family()) {
    case Matroid::Family::kFree:
      out["type"] = "free";
      break;
    case Matroid::Family::kUniform:
      out["type"] = "uniform";
      out["rank"] = m.uniform_rank();
      break;
    case Matroid::Family::kPartition:
      out["type"] = "partition";
      out["class_of"] = m.partition_class_of();
      out["limits"] = m.partition_limits();
      break;
    case Matroid::Family::kGraphic: {
      out["type"] = "graphic";
      out["aux_vertices"] = m.graphic_aux_vertices();
      json edges = json::array();
      for (const Edge& e : m.graphic_aux_edges()) {
        edges.push_back({e.u, e.v});
      }
      out["aux_edges"] = std::move(edges);
      break;
    }
    case Matroid::Family::kLinearGf2: {
      out["type"] = "linear_gf2";
      out["rows"] = m.linear_rows();
      json columns = json::array();
      for (std::uint64_t col : m.linear_columns()) {
        json rows = json::array();
        for (int r = 0; r < m.linear_rows(); ++r) {
          if ((col >> r) & 1) rows.push_back(r);
        }
        columns.push_back(std::move(rows));
      }
      out["columns"] = std::move(columns);
      break;
    }
  }
  return out;
}

json dependence_json(const NamedInstance& named,
                     const PlacementDependence& dep) {
  json out;
  out["vertex"] = named.labels[dep.vertex];
  out["elements"] = element_list(dep.elements);
  return out;
}

json certificate_json(const NamedInstance& named, const Certificate& cert) {
  const std::vector<std::string>& labels = named.labels;
  json out;
  out["deficit"] = cert.deficit;
  switch (cert.kind) {
    case Certificate::Kind::kDeficientSet:
      out["kind"] = "deficient-set";
      out["set"] = label_list(labels, cert.deficient_set);
      break;
    case Certificate::Kind::kDeficientSubpartition: {
      out["kind"] = "deficient-subpartition";
      out["component"] = label_list(labels, cert.group);
      json parts = json::array();
      json demands = json::array();
      for (VertexSet part : cert.parts.parts) {
        parts.push_back(label_list(labels, part));
        demands.push_back(
            eval_component_demand(named.instance, cert.group, part));
      }
      json maximizers = json::array();
      for (VertexSet z : cert.maximizers) {
        maximizers.push_back(label_list(labels, z));
      }
      out["parts"] = std::move(parts);
      out["demands"] = std::move(demands);
      out["maximizers"] = std::move(maximizers);
      out["edge_count"] =
          named.instance.graph().subpartition_edge_count(cert.parts);
      break;
    }
    case Certificate::Kind::kDeficientBisetFamily: {
      out["kind"] = "deficient-biset-family";
      out["group"] = label_list(labels, cert.group);
      json parts = json::array();
      for (VertexSet part : cert.parts.parts) {
        parts.push_back(label_list(labels, part));
      }
      json bisets = json::array();
      for (const BiSet& b : cert.bisets) {
        json one;
        one["inner"] = label_list(labels, b.inner);
        one["outer"] = label_list(labels, b.outer);
        bisets.push_back(std::move(one));
      }
      out["parts"] = std::move(parts);
      out["bisets"] = std::move(bisets);
      out["edge_count"] =
          named.instance.graph().subpartition_edge_count(cert.parts);
      break;
    }
  }
  return out;
}

ArborItem parse_item(const json& v, const LabelTable& t) {
  if (!v.is_object()) fail("entries of 'items' must be objects");
  require_keys(v, "an 'items' entry", {"kind", "id", "direction"});
  const std::string kind = need_string(v, "an 'items' entry", "kind");
  ArborItem item;
  if (kind == "arc") {
    item.kind = ArborItem::Kind::kArc;
  } else if (kind == "edge") {
    item.kind = ArborItem::Kind::kEdge;
  } else {
    fail("item kind must be 'arc' or 'edge', got '" + kind + "'");
  }
  item.id = need_int(v, "an 'items' entry", "id");
  auto [tail, head] = parse_endpoint_pair(need(v, "an 'items' entry",
                                               "direction"),
                                          t, "an item 'direction'");
  item.tail = tail;
  item.head = head;
  return item;
}

}  // namespace

NamedInstance parse_instance_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document must be a JSON object");
  require_keys(doc, "document",
               {"vertices", "edges", "arcs", "matroid", "roots"});

  LabelTable t = parse_labels(doc);
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    for (const json& e : need_array(doc, "document", "edges")) {
      auto [u, v] = parse_endpoint_pair(e, t, "an 'edges' entry");
      edges.push_back(Edge{u, v});
    }
  }
  std::vector<Arc> arcs;
  if (doc.contains("arcs")) {
    for (const json& a : need_array(doc, "document", "arcs")) {
      auto [tail, head] = parse_endpoint_pair(a, t, "an 'arcs' entry");
      arcs.push_back(Arc{tail, head});
    }
  }
  Matroid matroid = parse_matroid(doc);
  Placement placement = parse_roots(doc, t, matroid.size());
  MixedGraph graph(static_cast<int>(t.labels.size()), std::move(edges),
                   std::move(arcs));
  return NamedInstance{
      Instance(std::move(graph), std::move(matroid), std::move(placement)),
      std::move(t.labels)};
}

nlohmann::json instance_document(const NamedInstance& named) {
  const MixedGraph& g = named.instance.graph();
  if (static_cast<int>(named.labels.size()) != g.vertex_count()) {
    throw std::invalid_argument("label list does not match vertex count");
  }
  json doc;
  doc["vertices"] = named.labels;
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({named.labels[e.u], named.labels[e.v]});
  }
  doc["edges"] = std::move(edges);
  json arcs = json::array();
  for (const Arc& a : g.arcs()) {
    arcs.push_back({named.labels[a.tail], named.labels[a.head]});
  }
  doc["arcs"] = std::move(arcs);
  doc["matroid"] = matroid_json(named.instance.matroid());
  json roots = json::array();
  const std::vector<int>& vertex_of = named.instance.placement().vertex_of;
  for (int e = 0; e < static_cast<int>(vertex_of.size()); ++e) {
    json r;
    r["element"] = e;
    r["vertex"] = named.labels[vertex_of[e]];
    roots.push_back(std::move(r));
  }
  doc["roots"] = std::move(roots);
  return doc;
}

Packing parse_packing_document(const std::string& text,
                               const NamedInstance& named) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("packing document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("packing document must be a JSON object");
  const std::string status = need_string(doc, "packing document", "status");
  if (status != "feasible") {
    fail("packing document status is '" + status +
         "'; only feasible packings carry trees to verify");
  }
  require_keys(doc, "packing document", {"status", "trees"});

  LabelTable t;
  t.labels = named.labels;
  for (int v = 0; v < static_cast<int>(t.labels.size()); ++v) {
    t.index.emplace(t.labels[v], v);
  }

  Packing p;
  for (const json& tree : need_array(doc, "packing document", "trees")) {
    if (!tree.is_object()) fail("entries of 'trees' must be objects");
    require_keys(tree, "a 'trees' entry",
                 {"element", "root", "vertices", "items"});
    Arborescence arb;
    arb.element = need_int(tree, "a 'trees' entry", "element");
    arb.root = t.resolve(need(tree, "a 'trees' entry", "root"), "a tree root");
    for (const json& v : need_array(tree, "a 'trees' entry", "vertices")) {
      arb.vertices |= bit(t.resolve(v, "a tree vertex"));
    }
    for (const json& item : need_array(tree, "a 'trees' entry", "items")) {
      arb.items.push_back(parse_item(item, t));
    }
    p.trees.push_back(std::move(arb));
  }
  return p;
}

nlohmann::json packing_document(const NamedInstance& named,
                                const SolveResult& result) {
  json doc;
  switch (result.status) {
    case SolveResult::Status::kPacked: {
      doc["status"] = "feasible";
      json trees = json::array();
      for (const Arborescence& arb : result.packing->trees) {
        json tree;
        tree["element"] = arb.element;
        tree["root"] = named.labels[arb.root];
        tree["vertices"] = label_list(named.labels, arb.vertices);
        json items = json::array();
        for (const ArborItem& item : arb.items) {
          json one;
          one["kind"] = item.kind == ArborItem::Kind::kArc ? "arc" : "edge";
          one["id"] = item.id;
          one["direction"] = {named.labels[item.tail],
                              named.labels[item.head]};
          items.push_back(std::move(one));
        }
        tree["items"] = std::move(items);
        trees.push_back(std::move(tree));
      }
      doc["trees"] = std::move(trees);
      break;
    }
    case SolveResult::Status::kPlacementDependent:
      doc["status"] = "placement-dependent";
      doc["dependence"] = dependence_json(named, *result.dependence);
      break;
    case SolveResult::Status::kInfeasible:
      doc["status"] = "infeasible";
      doc["certificate"] = certificate_json(named, *result.certificate);
      break;
  }
  return doc;
}

nlohmann::json check_document(const NamedInstance& named,
                              const CheckResult& result,
                              const std::string& condition) {
  json doc;
  doc["condition"] = condition;
  switch (result.status) {
    case CheckResult::Status::kOk:
      doc["status"] = "ok";
      break;
    case CheckResult::Status::kPlacementDependent:
      doc["status"] = "placement-dependent";
      doc["dependence"] = dependence_json(named, *result.dependence);
      break;
    case CheckResult::Status::kViolated:
      doc["status"] = "violated";
      doc["certificate"] = certificate_json(named, *result.certificate);
      break;
  }
  if (result.kiraly_mode.has_value()) {
    doc["mode"] = *result.kiraly_mode == KiralyMode::kFull ? "full"
                                                           : "restricted";
  }
  return doc;
}

nlohmann::json verify_document(const std::vector<Violation>& violations) {
  json doc;
  doc["valid"] = violations.empty();
  json list = json::array();
  for (const Violation& v : violations) {
    json one;
    switch (v.kind) {
      case Violation::Kind::kBadStructure:
        one["kind"] = "bad-structure";
        break;
      case Violation::Kind::kRootMismatch:
        one["kind"] = "root-mismatch";
        break;
      case Violation::Kind::kItemReuse:
        one["kind"] = "item-reuse";
        break;
      case Violation::Kind::kDependentSet:
        one["kind"] = "dependent-set";
        break;
      case Violation::Kind::kCountMismatch:
        one["kind"] = "count-mismatch";
        break;
    }
    one["detail"] = v.detail;
    list.push_back(std::move(one));
  }
  doc["violations"] = std::move(list);
  return doc;
}

nlohmann::json oracle_document(bool exists) {
  json doc;
  doc["exists"] = exists;
  return doc;
}

nlohmann::json error_document(const std::string& message) {
  json doc;
  doc["error"] = message;
  return doc;
}

std::string render_document(const nlohmann::json& doc) {
  return doc.dump(2) + "\n";
}

}  // namespace arbopack
