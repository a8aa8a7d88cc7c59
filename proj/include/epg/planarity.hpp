#ifndef EPG_PLANARITY_HPP
#define EPG_PLANARITY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "epg/simple_graph.hpp"

namespace epg {

namespace detail {

/// Left-right planarity criterion (de Fraysseix-Rosenstiehl, in the
/// formulation of Brandes). Decision only; no embedding is produced.
class LeftRightTester {
 public:
  explicit LeftRightTester(const SimpleGraph& g) : g_(g) {}

  bool run() {
    const std::size_t n = g_.vertex_count();
    height_.assign(n, kNone);
    parent_edge_.assign(n, kNone);
    out_edges_.assign(n, {});
    oriented_ = SimpleGraph(n);

    std::vector<std::size_t> roots;
    for (Vertex v = 0; v < n; ++v) {
      if (height_[v] != kNone) continue;
      height_[v] = 0;
      roots.push_back(v);
      orient(v);
    }
    for (auto& adj : out_edges_)
      std::stable_sort(adj.begin(), adj.end(),
                       [this](std::size_t a, std::size_t b) { return nesting_depth_[a] < nesting_depth_[b]; });
    const std::size_t m = edges_.size();
    ref_.assign(m, kNone);
    lowpt_edge_.assign(m, kNone);
    stack_bottom_.assign(m, kNone);
    for (auto r : roots)
      if (!test(static_cast<Vertex>(r))) return false;
    return true;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Edge {
    Vertex from;
    Vertex to;
  };

  struct Interval {
    std::size_t low = kNone;
    std::size_t high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };

  struct ConflictPair {
    Interval left;
    Interval right;
    std::size_t id = 0;
    void swap() { std::swap(left, right); }
  };

  bool conflicting(const Interval& i, std::size_t edge) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[edge];
  }

  // Writes through an absent edge are no-ops.
  void set_ref(std::size_t edge, std::size_t target) {
    if (edge != kNone) ref_[edge] = target;
  }

  std::size_t lowest(const ConflictPair& p) const {
    if (p.left.empty() && p.right.empty()) return kNone;
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  std::size_t top_id() const { return stack_.empty() ? kNone : stack_.back().id; }

  std::size_t new_edge(Vertex v, Vertex w) {
    edges_.push_back({v, w});
    lowpt_.push_back(0);
    lowpt2_.push_back(0);
    nesting_depth_.push_back(0);
    out_edges_[v].push_back(edges_.size() - 1);
    return edges_.size() - 1;
  }

  void orient(Vertex v) {
    const std::size_t e = parent_edge_[v];
    for (Vertex w : g_.neighbors(v)) {
      if (oriented_.adjacent(v, w)) continue;
      oriented_.add_edge(v, w);
      const std::size_t vw = new_edge(v, w);
      lowpt_[vw] = height_[v];
      lowpt2_[vw] = height_[v];
      if (height_[w] == kNone) {
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[vw] = height_[w];
      }
      nesting_depth_[vw] = 2 * lowpt_[vw];
      if (lowpt2_[vw] < height_[v]) nesting_depth_[vw] += 1;
      if (e != kNone) {
        if (lowpt_[vw] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
          lowpt_[e] = lowpt_[vw];
        } else if (lowpt_[vw] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
        }
      }
    }
  }

  bool test(Vertex v) {
    const std::size_t e = parent_edge_[v];
    const auto& adj = out_edges_[v];
    for (std::size_t idx = 0; idx < adj.size(); ++idx) {
      const std::size_t ei = adj[idx];
      const Vertex w = edges_[ei].to;
      stack_bottom_[ei] = top_id();
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        push({Interval{}, Interval{ei, ei}, 0});
      }
      if (lowpt_[ei] < height_[v]) {
        if (idx == 0) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  void push(ConflictPair p) {
    p.id = next_id_++;
    stack_.push_back(p);
  }

  bool add_constraints(std::size_t ei, std::size_t e) {
    ConflictPair p;
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          set_ref(p.right.low, q.right.high);
        }
        p.right.low = q.right.low;
      } else {
        set_ref(q.right.low, lowpt_edge_[e]);
      }
    } while (top_id() != stack_bottom_[ei]);

    while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      set_ref(p.right.low, q.right.high);
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        set_ref(p.left.low, q.left.high);
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) push(p);
    return true;
  }

  void remove_back_edges(std::size_t e) {
    const Vertex u = edges_[e].from;
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && edges_[p.left.high].to == u) p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {
        set_ref(p.left.low, p.right.low);
        p.left.low = kNone;
      }
      while (p.right.high != kNone && edges_[p.right.high].to == u) p.right.high = ref_[p.right.high];
      if (p.right.high == kNone && p.right.low != kNone) {
        set_ref(p.right.low, p.left.low);
        p.right.low = kNone;
      }
      stack_.push_back(p);  // same pair, same id
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      const std::size_t hl = stack_.back().left.high;
      const std::size_t hr = stack_.back().right.high;
      ref_[e] = (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
    }
  }

  const SimpleGraph& g_;
  SimpleGraph oriented_;
  std::vector<std::size_t> height_;
  std::vector<std::size_t> parent_edge_;
  std::vector<std::vector<std::size_t>> out_edges_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> lowpt_;
  std::vector<std::size_t> lowpt2_;
  std::vector<std::size_t> nesting_depth_;
  std::vector<std::size_t> ref_;
  std::vector<std::size_t> lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;
  std::vector<ConflictPair> stack_;
  std::size_t next_id_ = 0;
};

}  // namespace detail

/// Generic planarity decision. Rejects early when |E| > 3|V| - 6, then runs
/// the left-right criterion.
inline bool is_planar(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n >= 3 && g.edge_count() > 3 * n - 6) return false;
  return detail::LeftRightTester(g).run();
}

}  // namespace epg

#endif  // EPG_PLANARITY_HPP
