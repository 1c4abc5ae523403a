#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ubercontract/complex/link.hpp"

namespace ubercontract {

using Json = nlohmann::ordered_json;

inline Json complex_to_json(const PolygonalComplex& c) {
  Json j;
  j["vertices"] = Json::array();
  for (VertexId v = 0; v < c.num_vertices(); ++v) j["vertices"].push_back({{"id", v}, {"label", c.label(v)}});
  j["edges"] = Json::array();
  for (auto [u, v] : c.raw_edges()) j["edges"].push_back({u, v});
  j["polygons"] = Json::array();
  for (const auto& p : c.polygons()) j["polygons"].push_back(p);
  return j;
}

/// Builds a complex from the JSON format; vertex ids may be arbitrary
/// integers and are renumbered densely in order of appearance.
inline PolygonalComplex complex_from_json(const Json& j) {
  auto fail = [](const std::string& why) -> void { throw Error(ErrorCode::kParse, why); };
  if (!j.is_object() || !j.contains("vertices")) fail("complex JSON needs a \"vertices\" array");
  PolygonalComplex c;
  std::map<long long, VertexId> ids;
  const Json& verts = j.at("vertices");
  if (!verts.is_array()) fail("\"vertices\" must be an array");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Json& v = verts[i];
    if (!v.is_object() || !v.contains("id") || !v["id"].is_number_integer()) {
      fail("vertex " + std::to_string(i) + " needs an integer \"id\"");
    }
    long long id = v["id"].get<long long>();
    std::string label = v.contains("label") && v["label"].is_string() ? v["label"].get<std::string>() : std::to_string(id);
    if (ids.count(id)) fail("duplicate vertex id " + std::to_string(id));
    ids[id] = c.add_vertex(label);
  }
  auto lookup = [&](const Json& x, const std::string& where) -> VertexId {
    if (!x.is_number_integer()) fail(where + ": vertex reference must be an integer");
    long long id = x.get<long long>();
    auto it = ids.find(id);
    // Unknown ids are kept out of range so validate() can report them.
    if (it == ids.end()) return c.num_vertices() + static_cast<VertexId>(id < 0 ? -id : id);
    return it->second;
  };
  if (j.contains("edges")) {
    const Json& edges = j.at("edges");
    if (!edges.is_array()) fail("\"edges\" must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Json& e = edges[i];
      std::string where = "edge " + std::to_string(i);
      if (!e.is_array() || e.size() != 2) fail(where + " must be a pair");
      c.add_edge(lookup(e[0], where), lookup(e[1], where));
    }
  }
  if (j.contains("polygons")) {
    const Json& polys = j.at("polygons");
    if (!polys.is_array()) fail("\"polygons\" must be an array");
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const Json& p = polys[i];
      std::string where = "polygon " + std::to_string(i);
      if (!p.is_array()) fail(where + " must be an array");
      std::vector<VertexId> cyc;
      for (const auto& x : p) cyc.push_back(lookup(x, where));
      c.add_polygon(std::move(cyc));
    }
  }
  return c;
}

inline PolygonalComplex parse_complex(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return complex_from_json(j);
}

inline PolygonalComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace detail

inline std::string skeleton_to_dot(const PolygonalComplex& c) {
  std::ostringstream out;
  out << "graph skeleton {\n";
  for (VertexId v = 0; v < c.num_vertices(); ++v) out << "  " << v << " [label=\"" << detail::dot_escape(c.label(v)) << "\"];\n";
  for (auto [u, v] : c.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string link_to_dot(const PolygonalComplex& c, VertexId v) {
  LinkGraph g = link_graph(c, v);
  std::ostringstream out;
  out << "graph link {\n";
  out << "  label=\"link of " << detail::dot_escape(c.label(v)) << "\";\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  " << i << " [label=\"" << detail::dot_escape(c.label(g.nodes[i])) << "\"];\n";
  }
  for (auto [a, b] : g.arcs) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

namespace detail {

/// Cyclic label sequence normalised over rotations and reversal.
inline std::vector<std::string> canonical_cycle(const std::vector<std::string>& cyc) {
  std::vector<std::string> best;
  const std::size_t k = cyc.size();
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < k; ++start) {
      std::vector<std::string> cand(k);
      for (std::size_t i = 0; i < k; ++i) cand[i] = dir == 0 ? cyc[(start + i) % k] : cyc[(start + k - i) % k];
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

}  // namespace detail

/// Isomorphism of labelled complexes: the label-preserving vertex bijection
/// carries edges to edges and polygons to polygons.
inline bool labeled_isomorphic(const PolygonalComplex& a, const PolygonalComplex& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() || a.num_polygons() != b.num_polygons()) {
    return false;
  }
  std::vector<std::string> la = a.labels();
  std::vector<std::string> lb = b.labels();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return false;
  auto edge_set = [](const PolygonalComplex& c) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [u, v] : c.edges()) out.emplace_back(std::minmax(c.label(u), c.label(v)));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (edge_set(a) != edge_set(b)) return false;
  auto poly_set = [](const PolygonalComplex& c) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : c.polygons()) {
      std::vector<std::string> labels;
      for (VertexId v : p) labels.push_back(v < c.num_vertices() ? c.label(v) : "#" + std::to_string(v));
      out.push_back(detail::canonical_cycle(labels));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return poly_set(a) == poly_set(b);
}

}  // namespace ubercontract
