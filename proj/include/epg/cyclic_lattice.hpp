#ifndef EPG_CYCLIC_LATTICE_HPP
#define EPG_CYCLIC_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "epg/finite_group.hpp"

namespace epg {

struct CyclicSubgroup {
  std::vector<Element> elements;    // ascending
  std::vector<Element> generators;  // Gen(a), ascending
  bool maximal = false;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Element x) const { return std::binary_search(elements.begin(), elements.end(), x); }
};

/// The distinct cyclic subgroups of a group, its partition into gen-classes,
/// and the order spectrum pi_e(G) with its divisibility-maximal part mu(G).
class CyclicLattice {
 public:
  static CyclicLattice build(const FiniteGroup& g);

  std::span<const CyclicSubgroup> subgroups() const noexcept { return subgroups_; }
  const CyclicSubgroup& subgroup(std::size_t index) const { return subgroups_.at(index); }

  /// Index of the subgroup <x>.
  std::size_t class_of(Element x) const { return class_of_.at(x); }

  /// All y with <y> = <x>.
  std::span<const Element> gen_class(Element x) const { return subgroups_[class_of(x)].generators; }

  const std::vector<std::size_t>& pi_e() const noexcept { return spectrum_; }
  const std::vector<std::size_t>& mu() const noexcept { return maximal_orders_; }

  std::vector<std::size_t> maximal_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
      if (subgroups_[i].maximal) out.push_back(i);
    return out;
  }

 private:
  std::vector<CyclicSubgroup> subgroups_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> spectrum_;
  std::vector<std::size_t> maximal_orders_;
};

inline CyclicLattice CyclicLattice::build(const FiniteGroup& g) {
  const std::size_t n = g.order();
  CyclicLattice lattice;
  lattice.class_of_.assign(n, n);
  std::map<std::vector<Element>, std::size_t> index_of;

  for (Element x = 0; x < n; ++x) {
    if (lattice.class_of_[x] != n) continue;
    const std::size_t o = g.orders()[x];
    std::vector<Element> powers(o);
    Element acc = FiniteGroup::identity();
    for (std::size_t k = 0; k < o; ++k) {
      powers[k] = acc;
      acc = g.multiply(acc, x);
    }
    CyclicSubgroup sub;
    for (std::size_t k = 1; k <= o; ++k)
      if (std::gcd(k, o) == 1) sub.generators.push_back(powers[k % o]);
    std::sort(sub.generators.begin(), sub.generators.end());
    sub.elements = std::move(powers);
    std::sort(sub.elements.begin(), sub.elements.end());

    const auto [it, inserted] = index_of.emplace(sub.elements, lattice.subgroups_.size());
    if (inserted) lattice.subgroups_.push_back(std::move(sub));
    for (Element y : lattice.subgroups_[it->second].generators) lattice.class_of_[y] = it->second;
  }

  // <a> is contained in C iff a generator of <a> lies in C.
  const auto count = lattice.subgroups_.size();
  for (std::size_t i = 0; i < count; ++i) {
    auto& a = lattice.subgroups_[i];
    a.maximal = true;
    for (std::size_t j = 0; j < count && a.maximal; ++j) {
      const auto& b = lattice.subgroups_[j];
      if (b.size() > a.size() && b.size() % a.size() == 0 && b.contains(a.generators.front())) a.maximal = false;
    }
  }

  std::vector<std::size_t> orders(g.orders().begin(), g.orders().end());
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  lattice.spectrum_ = orders;
  for (auto o : orders) {
    const bool dominated =
        std::any_of(orders.begin(), orders.end(), [o](std::size_t other) { return other != o && other % o == 0; });
    if (!dominated) lattice.maximal_orders_.push_back(o);
  }
  return lattice;
}

inline CyclicLattice build_lattice(const FiniteGroup& g) { return CyclicLattice::build(g); }

inline std::vector<Element> gen_class(const CyclicLattice& lattice, Element x) {
  const auto cls = lattice.gen_class(x);
  return {cls.begin(), cls.end()};
}

inline const std::vector<std::size_t>& pi_e(const CyclicLattice& lattice) { return lattice.pi_e(); }
inline const std::vector<std::size_t>& mu(const CyclicLattice& lattice) { return lattice.mu(); }

}  // namespace epg

#endif  // EPG_CYCLIC_LATTICE_HPP
