#ifndef EPG_EPG_GRAPH_HPP
#define EPG_EPG_GRAPH_HPP

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "epg/cyclic_lattice.hpp"
#include "epg/finite_group.hpp"
#include "epg/simple_graph.hpp"

namespace epg {

/// Enhanced power graph: x ~ y (x != y) iff some cyclic subgroup holds both.
/// Every cyclic subgroup lies in a maximal one, so the union of cliques over
/// the maximal cyclic subgroups already has every edge.
inline SimpleGraph build_epg(const FiniteGroup& g, const CyclicLattice& lattice) {
  SimpleGraph graph(g.order());
  for (const auto& sub : lattice.subgroups()) {
    if (!sub.maximal) continue;
    for (std::size_t i = 0; i < sub.elements.size(); ++i)
      for (std::size_t j = i + 1; j < sub.elements.size(); ++j) graph.add_edge(sub.elements[i], sub.elements[j]);
  }
  std::vector<VertexLabel> labels(g.order());
  for (Element x = 0; x < g.order(); ++x) labels[x] = {x, g.orders()[x]};
  graph.set_labels(std::move(labels));
  graph.set_name(g.name());
  return graph;
}

/// Pairwise definition, straight from "x and y are both powers of some z".
/// Quadratic in |G| per call; meant for cross-checking build_epg.
inline bool adjacent_oracle(const FiniteGroup& g, Element x, Element y) {
  g.check_element(x);
  g.check_element(y);
  if (x == y) throw DomainError("adjacent_oracle: x and y must differ");
  for (Element z = 0; z < g.order(); ++z) {
    bool has_x = false, has_y = false;
    Element acc = z;
    for (std::size_t k = 1; k <= g.orders()[z]; ++k) {
      has_x = has_x || acc == x;
      has_y = has_y || acc == y;
      acc = g.multiply(acc, z);
    }
    if (has_x && has_y) return true;
  }
  return false;
}

/// The graph with vertex 0 removed; vertex v of the result is vertex v+1 of
/// the input. Labels are carried over, so element indices survive.
inline SimpleGraph build_deleted(const SimpleGraph& epg) {
  if (epg.vertex_count() == 0) return SimpleGraph(0);
  const std::size_t n = epg.vertex_count() - 1;
  SimpleGraph out(n);
  for (auto [u, v] : epg.edges())
    if (u != 0) out.add_edge(u - 1, v - 1);
  if (!epg.labels().empty()) out.set_labels({epg.labels().begin() + 1, epg.labels().end()});
  out.set_name(epg.name().empty() ? std::string{} : epg.name() + " minus identity");
  return out;
}

/// A group together with its lattice, enhanced power graph, and deleted graph.
struct EpgBundle {
  FiniteGroup group;
  CyclicLattice lattice;
  SimpleGraph epg;
  SimpleGraph deleted;
  std::vector<Element> deleted_to_element;  // deleted vertex v -> element

  static EpgBundle build(FiniteGroup g) {
    auto lattice = build_lattice(g);
    auto epg = build_epg(g, lattice);
    auto deleted = build_deleted(epg);
    std::vector<Element> remap;
    for (Element x = 1; x < g.order(); ++x) remap.push_back(x);
    return {std::move(g), std::move(lattice), std::move(epg), std::move(deleted), std::move(remap)};
  }
};

inline std::string vertex_caption(const SimpleGraph& g, Vertex v) {
  if (g.labels().empty()) return "v" + std::to_string(v);
  const auto& l = g.labels()[v];
  return "g" + std::to_string(l.element) + " (o=" + std::to_string(l.order) + ")";
}

/// Graphviz DOT. Node ids are vertex indices; labels read "g<i> (o=<order>)".
inline void write_dot(std::ostream& out, const SimpleGraph& g) {
  std::string name = g.name();
  std::string escaped;
  for (char c : name) {
    if (c == '"' || c == '\\') escaped += '\\';
    escaped += c;
  }
  out << "graph \"" << escaped << "\" {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << " [label=\"" << vertex_caption(g, v) << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

/// One "u v" line per edge, u < v, 0-based, lexicographic.
inline void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_dot(const SimpleGraph& g) {
  std::ostringstream s;
  write_dot(s, g);
  return s.str();
}

inline std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream s;
  write_edge_list(s, g);
  return s.str();
}

}  // namespace epg

#endif  // EPG_EPG_GRAPH_HPP
