#ifndef EPG_GRAPH_ANALYSIS_HPP
#define EPG_GRAPH_ANALYSIS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "epg/errors.hpp"
#include "epg/planarity.hpp"
#include "epg/simple_graph.hpp"

namespace epg {

/// Vertex partition into connected components. Each component is ascending
/// and components are ordered by their smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// The empty graph counts as connected.
inline bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

inline bool is_complete(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

/// A simple graph is acyclic iff |E| = |V| - (number of components).
inline bool has_cycle(const SimpleGraph& g) {
  return g.edge_count() + connected_components(g).size() > g.vertex_count();
}

inline bool is_forest(const SimpleGraph& g) { return !has_cycle(g); }

inline bool is_tree(const SimpleGraph& g) { return g.vertex_count() >= 1 && is_forest(g) && is_connected(g); }

/// A tree with a vertex adjacent to all others. K_1 and K_2 are stars.
inline bool is_star(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return true;
  return false;
}

struct BipartiteResult {
  bool bipartite = true;
  std::vector<Vertex> odd_cycle;  // closed walk order, empty when bipartite
};

/// BFS 2-coloring. On failure returns an odd cycle through the offending edge.
inline BipartiteResult check_bipartite(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n, kUnset);
  std::vector<std::size_t> depth(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          std::vector<Vertex> left{u}, right{w};
          Vertex a = u, b = w;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          return {false, std::move(left)};
        }
      }
    }
  }
  return {};
}

inline bool is_bipartite(const SimpleGraph& g) { return check_bipartite(g).bipartite; }

inline std::vector<std::size_t> degree_sequence(const SimpleGraph& g) {
  std::vector<std::size_t> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = g.degree(v);
  return out;
}

/// First vertex of odd degree, if any.
inline std::optional<Vertex> odd_degree_vertex(const SimpleGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 == 1) return v;
  return std::nullopt;
}

/// Connected with every degree even. The empty and one-vertex graphs qualify.
inline bool is_eulerian(const SimpleGraph& g) { return !odd_degree_vertex(g) && is_connected(g); }

/// Vertices adjacent to every other vertex.
inline std::vector<Vertex> universal_vertices(const SimpleGraph& g) {
  std::vector<Vertex> out;
  if (g.vertex_count() == 0) return out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == g.vertex_count() - 1) out.push_back(v);
  return out;
}

/// Cone vertices of an enhanced power graph: universal vertices other than
/// the identity, which is vertex 0.
inline std::vector<Vertex> cone_vertices(const SimpleGraph& epg) {
  auto out = universal_vertices(epg);
  std::erase(out, Vertex{0});
  return out;
}

// ---------------------------------------------------------------------------
// PropertyReport

inline constexpr std::array<std::string_view, 11> kPropertyNames = {
    "connected", "components", "complete", "cycle",  "forest",       "tree",
    "star",      "bipartite",  "eulerian", "planar", "cone_vertices"};

inline bool is_property_name(std::string_view name) {
  return std::find(kPropertyNames.begin(), kPropertyNames.end(), name) != kPropertyNames.end();
}

/// Verdicts for a requested subset of properties, plus witnesses for
/// negative answers where one is cheap to give.
struct PropertyReport {
  std::optional<bool> connected;
  std::optional<std::size_t> components;
  std::vector<Vertex> component_representatives;
  std::optional<bool> complete;
  std::optional<bool> cycle;
  std::optional<bool> forest;
  std::optional<bool> tree;
  std::optional<bool> star;
  std::optional<bool> bipartite;
  std::vector<Vertex> odd_cycle;
  std::optional<bool> eulerian;
  std::optional<Vertex> odd_degree_vertex;
  std::optional<bool> planar;
  std::optional<std::vector<Vertex>> cone_vertices;
};

/// How cone vertices are read off: an enhanced power graph excludes the
/// identity (vertex 0); any other graph reports all universal vertices.
enum class ConeMode { exclude_identity, all_universal };

/// Evaluates the named properties. Vertex ids in witnesses are translated to
/// element indices through the graph labels when present.
inline PropertyReport analyze(const SimpleGraph& g, const std::set<std::string>& props,
                              ConeMode cone_mode = ConeMode::exclude_identity) {
  for (const auto& p : props)
    if (!is_property_name(p)) throw ParseError("unknown property '" + p + "'");
  auto label = [&g](Vertex v) -> Vertex { return g.labels().empty() ? v : g.labels()[v].element; };
  auto want = [&props](std::string_view name) { return props.count(std::string(name)) > 0; };

  PropertyReport r;
  if (want("connected") || want("components")) {
    const auto comps = connected_components(g);
    if (want("connected")) r.connected = comps.size() <= 1;
    if (want("components")) r.components = comps.size();
    if (comps.size() > 1)
      for (const auto& c : comps) r.component_representatives.push_back(label(c.front()));
  }
  if (want("complete")) r.complete = is_complete(g);
  if (want("cycle")) r.cycle = has_cycle(g);
  if (want("forest")) r.forest = is_forest(g);
  if (want("tree")) r.tree = is_tree(g);
  if (want("star")) r.star = is_star(g);
  if (want("bipartite")) {
    auto b = check_bipartite(g);
    r.bipartite = b.bipartite;
    for (auto v : b.odd_cycle) r.odd_cycle.push_back(label(v));
  }
  if (want("eulerian")) {
    r.eulerian = is_eulerian(g);
    if (auto v = odd_degree_vertex(g)) r.odd_degree_vertex = label(*v);
  }
  if (want("planar")) r.planar = is_planar(g);
  if (want("cone_vertices")) {
    auto cones = cone_mode == ConeMode::exclude_identity ? cone_vertices(g) : universal_vertices(g);
    for (auto& v : cones) v = label(v);
    r.cone_vertices = std::move(cones);
  }
  return r;
}

inline PropertyReport analyze_all(const SimpleGraph& g, ConeMode cone_mode = ConeMode::exclude_identity) {
  return analyze(g, std::set<std::string>(kPropertyNames.begin(), kPropertyNames.end()), cone_mode);
}

/// Flat JSON: requested properties under their fixed names, witnesses under
/// `component_representatives`, `odd_cycle` and `odd_degree_vertex`.
inline nlohmann::ordered_json to_json(const PropertyReport& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  if (r.connected) j["connected"] = *r.connected;
  if (r.components) j["components"] = *r.components;
  if (r.complete) j["complete"] = *r.complete;
  if (r.cycle) j["cycle"] = *r.cycle;
  if (r.forest) j["forest"] = *r.forest;
  if (r.tree) j["tree"] = *r.tree;
  if (r.star) j["star"] = *r.star;
  if (r.bipartite) j["bipartite"] = *r.bipartite;
  if (r.eulerian) j["eulerian"] = *r.eulerian;
  if (r.planar) j["planar"] = *r.planar;
  if (r.cone_vertices) j["cone_vertices"] = *r.cone_vertices;
  if (!r.component_representatives.empty()) j["component_representatives"] = r.component_representatives;
  if (!r.odd_cycle.empty()) j["odd_cycle"] = r.odd_cycle;
  if (r.eulerian && r.odd_degree_vertex) j["odd_degree_vertex"] = *r.odd_degree_vertex;
  return j;
}

}  // namespace epg

#endif  // EPG_GRAPH_ANALYSIS_HPP
