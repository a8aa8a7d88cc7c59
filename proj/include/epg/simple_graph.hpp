#ifndef EPG_SIMPLE_GRAPH_HPP
#define EPG_SIMPLE_GRAPH_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "epg/errors.hpp"

namespace epg {

using Vertex = std::uint32_t;

struct VertexLabel {
  std::uint32_t element = 0;
  std::size_t order = 0;
  bool operator==(const VertexLabel&) const = default;
};

/// Undirected simple graph on 0..n-1 backed by a symmetric bit matrix.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
  }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    set(u, v);
    set(v, u);
  }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  std::size_t degree(Vertex u) const noexcept {
    std::size_t d = 0;
    for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::span<const std::uint64_t> row(Vertex u) const noexcept {
    return std::span<const std::uint64_t>(bits_).subspan(u * words_, words_);
  }

  /// Neighbors of u, ascending.
  std::vector<Vertex> neighbors(Vertex u) const {
    std::vector<Vertex> out;
    const auto r = row(u);
    for (std::size_t w = 0; w < r.size(); ++w) {
      auto word = r[w];
      while (word != 0) {
        out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
        word &= word - 1;
      }
    }
    return out;
  }

  /// Edges {u, v} with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<VertexLabel> labels) { labels_ = std::move(labels); }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Structural equality: same vertex count and edge set.
  bool same_edges(const SimpleGraph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

 private:
  void check(Vertex v) const {
    if (v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  }
  void set(Vertex u, Vertex v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<VertexLabel> labels_;
  std::string name_;
};

}  // namespace epg

#endif  // EPG_SIMPLE_GRAPH_HPP
