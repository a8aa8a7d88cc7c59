#ifndef EPG_THEOREM_VERIFY_HPP
#define EPG_THEOREM_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "epg/cyclic_lattice.hpp"
#include "epg/epg_graph.hpp"
#include "epg/finite_group.hpp"
#include "epg/graph_analysis.hpp"
#include "epg/group_spec.hpp"
#include "epg/number_theory.hpp"

namespace epg {

// ---------------------------------------------------------------------------
// Rosters

enum RosterFamily : unsigned {
  kCyclicFamily = 1U << 0U,
  kAbelianFamily = 1U << 1U,  // non-cyclic abelian shapes
  kDihedralFamily = 1U << 2U,
  kDicyclicFamily = 1U << 3U,
  kMetacyclicFamily = 1U << 4U,
  kPermutationFamily = 1U << 5U,
  kAllFamilies = (1U << 6U) - 1U,
};

/// Group order a spec will produce, computed without building it.
inline std::size_t spec_order(const GroupSpec& spec);

namespace detail {

struct NamedPermGroup {
  const char* name;
  unsigned degree;
  std::size_t order;
  const char* generators;
};

inline constexpr NamedPermGroup kPermRoster[] = {
    {"S3", 3, 6, "(0 1),(0 1 2)"},
    {"A4", 4, 12, "(0 1 2),(1 2 3)"},
    {"S4", 4, 24, "(0 1),(0 1 2 3)"},
    {"A5", 5, 60, "(0 1 2),(0 1 2 3 4)"},
};

inline GroupSpec named_perm_spec(const NamedPermGroup& p) {
  auto spec = parse_group_spec("perm:" + std::to_string(p.degree) + ":" + p.generators);
  spec.name = p.name;
  return spec;
}

inline void integer_partitions(unsigned n, unsigned max_part, std::vector<unsigned>& current,
                               std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    integer_partitions(n - part, part, current, out);
    current.pop_back();
  }
}

/// Non-cyclic abelian groups of order n, one per shape.
inline std::vector<GroupSpec> abelian_shapes_of_order(std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> shapes{{}};
  bool any = false;
  for (const auto& [p, e] : factorize(n)) {
    std::vector<std::vector<unsigned>> partitions;
    std::vector<unsigned> scratch;
    integer_partitions(e, e, scratch, partitions);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& shape : shapes)
      for (auto part : partitions) {
        std::sort(part.begin(), part.end());
        auto extended = shape;
        for (auto k : part) extended.push_back(ipow(p, k));
        next.push_back(std::move(extended));
      }
    shapes = std::move(next);
    any = true;
  }
  std::vector<GroupSpec> out;
  if (!any) return out;
  for (const auto& shape : shapes) {
    bool cyclic = true;
    for (const auto& [p, e] : factorize(n)) {
      const auto count = std::count_if(shape.begin(), shape.end(), [p = p](std::uint64_t q) { return q % p == 0; });
      if (count > 1) cyclic = false;
    }
    if (cyclic) continue;
    std::vector<GroupSpec> parts;
    for (auto q : shape) parts.push_back(GroupSpec::cyclic(static_cast<unsigned>(q)));
    out.push_back(GroupSpec::product(std::move(parts)));
  }
  return out;
}

inline std::size_t family_rank(const GroupSpec& spec) { return spec.family.index(); }

}  // namespace detail

inline std::size_t spec_order(const GroupSpec& spec) {
  struct Visitor {
    std::size_t operator()(const family::Cyclic& c) const { return c.n; }
    std::size_t operator()(const family::DirectProduct& p) const {
      std::size_t n = 1;
      for (const auto& s : p.parts) n *= spec_order(s);
      return n;
    }
    std::size_t operator()(const family::Dihedral& d) const { return 2 * std::size_t{d.m}; }
    std::size_t operator()(const family::Dicyclic& d) const { return 4 * std::size_t{d.m}; }
    std::size_t operator()(const family::Metacyclic& m) const { return std::size_t{m.m} * m.n; }
    std::size_t operator()(const family::PermClosure& p) const {
      for (const auto& known : detail::kPermRoster)
        if (detail::named_perm_spec(known) == GroupSpec{p, {}}) return known.order;
      return make_group(GroupSpec{p, {}}).order();
    }
    std::size_t operator()(const family::CayleyFile& f) const { return make_group(GroupSpec{f, {}}).order(); }
  };
  return std::visit(Visitor{}, spec.family);
}

inline void sort_roster(std::vector<GroupSpec>& roster) {
  std::stable_sort(roster.begin(), roster.end(), [](const GroupSpec& a, const GroupSpec& b) {
    return std::make_tuple(spec_order(a), detail::family_rank(a), to_string(a)) <
           std::make_tuple(spec_order(b), detail::family_rank(b), to_string(b));
  });
}

/// Deterministic roster of groups with order <= max_order, sorted by
/// (order, family, serialized parameters).
///  - cyclic: Z_1 .. Z_max
///  - abelian: every non-cyclic abelian shape, as a product of prime-power cyclics
///  - dihedral: dihedral:m for m >= 3 (m = 1, 2 duplicate Z_2 and Z_2 x Z_2)
///  - dicyclic: dicyclic:m for m >= 2
///  - metacyclic: non-abelian Z_m : Z_n (m >= 3, n >= 2), minus the dihedral
///    parameters, one k per class {k^j : gcd(j, n) = 1}
///  - permutation: S3, A4, S4, A5
inline std::vector<GroupSpec> roster_generate(std::size_t max_order, unsigned families = kAllFamilies) {
  std::vector<GroupSpec> roster;
  if (families & kCyclicFamily)
    for (unsigned n = 1; n <= max_order; ++n) roster.push_back(GroupSpec::cyclic(n));
  if (families & kAbelianFamily)
    for (std::uint64_t n = 4; n <= max_order; ++n)
      for (auto& s : detail::abelian_shapes_of_order(n)) roster.push_back(std::move(s));
  if (families & kDihedralFamily)
    for (unsigned m = 3; 2 * m <= max_order; ++m) roster.push_back(GroupSpec::dihedral(m));
  if (families & kDicyclicFamily)
    for (unsigned m = 2; 4 * m <= max_order; ++m) roster.push_back(GroupSpec::dicyclic(m));
  if (families & kMetacyclicFamily)
    for (unsigned m = 3; 2 * m <= max_order; ++m)
      for (unsigned n = 2; m * n <= max_order; ++n)
        for (unsigned k = 2; k < m; ++k) {
          if (std::gcd(k, m) != 1 || pow_mod(k, n, m) != 1) continue;
          if (n == 2 && k == m - 1) continue;
          bool canonical = true;
          for (unsigned j = 1; j <= n && canonical; ++j)
            if (std::gcd(j, n) == 1 && pow_mod(k, j, m) < k) canonical = false;
          if (canonical) roster.push_back(GroupSpec::metacyclic(m, n, k));
        }
  if (families & kPermutationFamily)
    for (const auto& p : detail::kPermRoster)
      if (p.order <= max_order) roster.push_back(detail::named_perm_spec(p));
  sort_roster(roster);
  return roster;
}

/// G x Z_n for non-cyclic roster groups G of order <= 24 and n in {3,5,7,9}
/// coprime to |G|, capped at max_order.
inline std::vector<GroupSpec> coprime_product_roster(std::size_t max_order) {
  std::vector<GroupSpec> out;
  for (const auto& g : roster_generate(std::min<std::size_t>(24, max_order), kAllFamilies & ~kCyclicFamily)) {
    const auto order = spec_order(g);
    for (unsigned n : {3U, 5U, 7U, 9U})
      if (std::gcd(order, std::size_t{n}) == 1 && order * n <= max_order)
        out.push_back(GroupSpec::product({g, GroupSpec::cyclic(n)}));
  }
  sort_roster(out);
  return out;
}

// ---------------------------------------------------------------------------
// Checks

enum class Direction { iff, implies };

struct CheckOutcome {
  bool graph_side = false;
  bool group_side = false;
  bool consistent = true;  // internal side conditions, e.g. three-way equivalences
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
};

struct TheoremCheck {
  std::string id;
  std::string statement;
  Direction direction = Direction::iff;
  std::function<bool(const FiniteGroup&)> applies;
  std::function<CheckOutcome(const EpgBundle&)> evaluate;
  std::function<std::vector<GroupSpec>(std::size_t)> default_roster;
  std::size_t min_meaningful_order = 1;  // below this, an empty roster is expected

  bool passes(const CheckOutcome& o) const {
    if (!o.consistent) return false;
    return direction == Direction::iff ? o.graph_side == o.group_side : (!o.group_side || o.graph_side);
  }
};

struct Counterexample {
  GroupSpec spec;
  bool graph_side = false;
  bool group_side = false;
  nlohmann::ordered_json witness;
};

struct TheoremReport {
  std::string theorem;
  std::size_t tested = 0;
  std::size_t passed = 0;
  bool vacuous = true;
  bool unexpected_vacuous = false;
  std::vector<Counterexample> counterexamples;
  double ms = 0.0;
  std::size_t skipped = 0;           // roster members rejected by the filter
  std::size_t group_side_true = 0;   // tested groups on each branch
  std::size_t group_side_false = 0;
  std::size_t graph_side_true = 0;
  std::size_t graph_side_false = 0;
};

/// Builds each group once and shares the bundle between checks.
class BundleCache {
 public:
  explicit BundleCache(BuildOptions options = {}) : options_(options) {}

  std::shared_ptr<const EpgBundle> get(const GroupSpec& spec) {
    const auto key = to_string(spec);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto bundle = std::make_shared<const EpgBundle>(EpgBundle::build(make_group(spec, options_)));
    cache_.emplace(key, bundle);
    return bundle;
  }

 private:
  BuildOptions options_;
  std::map<std::string, std::shared_ptr<const EpgBundle>> cache_;
};

namespace detail {

inline bool is_elementary_abelian_2(const FiniteGroup& g) {
  const auto o = g.orders();
  return std::all_of(o.begin() + 1, o.end(), [](std::size_t x) { return x == 2; });
}

inline bool is_power_of(std::size_t value, std::uint64_t p) {
  while (value % p == 0) value /= p;
  return value == 1;
}

inline std::vector<Element> to_elements(const SimpleGraph& g, const std::vector<Vertex>& vs) {
  std::vector<Element> out;
  for (auto v : vs) out.push_back(g.labels().empty() ? v : g.labels()[v].element);
  return out;
}

/// The prime p when Z(G) is a nontrivial p-group and |pi(G)| >= 2.
inline std::optional<std::uint64_t> t53_prime(const FiniteGroup& g) {
  if (prime_divisors(g.order()).size() < 2) return std::nullopt;
  return prime_power_base(center(g).size());
}

inline bool t31_applies(const FiniteGroup& g) {
  const auto* product = std::get_if<family::DirectProduct>(&g.spec().family);
  if (!product || product->parts.size() < 2) return false;
  const auto* last = std::get_if<family::Cyclic>(&product->parts.back().family);
  if (!last || last->n < 2) return false;
  return std::gcd(g.order() / last->n, std::size_t{last->n}) == 1;
}

}  // namespace detail

/// All checks, in id order.
inline const std::vector<TheoremCheck>& theorem_registry() {
  static const std::vector<TheoremCheck> registry = [] {
    using detail::to_elements;
    auto full = [](std::size_t max_order) { return roster_generate(max_order); };
    auto always = [](const FiniteGroup&) { return true; };
    std::vector<TheoremCheck> r;

    r.push_back({"T2.1", "equal-order gen-classes of distinct cyclic subgroups share no edge", Direction::iff,
                 always,
                 [](const EpgBundle& b) {
                   CheckOutcome o{true, true};
                   const auto subs = b.lattice.subgroups();
                   for (std::size_t i = 0; i < subs.size() && o.graph_side; ++i)
                     for (std::size_t j = i + 1; j < subs.size() && o.graph_side; ++j) {
                       if (subs[i].size() != subs[j].size()) continue;
                       for (auto x : subs[i].generators)
                         for (auto y : subs[j].generators)
                           if (b.epg.adjacent(x, y) && o.graph_side) {
                             o.graph_side = false;
                             o.witness = {{"edge", {x, y}}};
                           }
                     }
                   return o;
                 },
                 full, 1});

    r.push_back({"T2.2", "EPG has a cycle iff some element has order >= 3", Direction::iff, always,
                 [](const EpgBundle& b) {
                   const auto o = b.group.orders();
                   const auto big = std::find_if(o.begin(), o.end(), [](std::size_t x) { return x >= 3; });
                   CheckOutcome out{has_cycle(b.epg), big != o.end()};
                   if (big != o.end()) out.witness = {{"element", big - o.begin()}, {"order", *big}};
                   return out;
                 },
                 full, 1});

    r.push_back({"C2.3", "bipartite <=> tree <=> star <=> elementary abelian 2-group", Direction::iff, always,
                 [](const EpgBundle& b) {
                   const bool bip = is_bipartite(b.epg), tree = is_tree(b.epg), star = is_star(b.epg);
                   CheckOutcome o{bip, detail::is_elementary_abelian_2(b.group), bip == tree && tree == star};
                   o.witness = {{"bipartite", bip}, {"tree", tree}, {"star", star}};
                   return o;
                 },
                 full, 1});

    r.push_back({"T2.4", "EPG complete iff G cyclic", Direction::iff, always,
                 [](const EpgBundle& b) {
                   CheckOutcome o{is_complete(b.epg), is_cyclic(b.group)};
                   o.witness = {{"edges", b.epg.edge_count()}};
                   return o;
                 },
                 full, 1});

    r.push_back({"T3.1", "G x Z_n with gcd(|G|, n) = 1 has cone vertex (e, generator)", Direction::implies,
                 detail::t31_applies,
                 [](const EpgBundle& b) {
                   const auto cones = cone_vertices(b.epg);
                   CheckOutcome o{std::binary_search(cones.begin(), cones.end(), Vertex{1}), true};
                   o.witness = {{"cone_vertices", to_elements(b.epg, cones)}};
                   return o;
                 },
                 coprime_product_roster, 12});

    r.push_back({"T3.2", "abelian G: cone vertex iff a Sylow subgroup is cyclic", Direction::iff,
                 [](const FiniteGroup& g) { return is_abelian(g); },
                 [](const EpgBundle& b) {
                   const auto shape = abelian_shape(b.group);
                   CheckOutcome o{!cone_vertices(b.epg).empty(), has_cyclic_sylow(shape)};
                   o.witness = {{"shape", shape.prime_powers()}};
                   return o;
                 },
                 full, 1});

    r.push_back({"T3.3", "non-abelian p-group: cone vertex iff generalized quaternion", Direction::iff,
                 [](const FiniteGroup& g) { return is_p_group(g).has_value() && !is_abelian(g); },
                 [](const EpgBundle& b) {
                   const auto cones = cone_vertices(b.epg);
                   CheckOutcome o{!cones.empty(), is_generalized_quaternion(b.group)};
                   o.witness = {{"cone_vertices", to_elements(b.epg, cones)},
                                {"prime_order_subgroups", prime_order_subgroup_count(b.group)}};
                   return o;
                 },
                 full, 8});

    // Z_p is simple with a complete graph, so only non-abelian simple groups
    // are in scope.
    r.push_back({"T3.4", "non-abelian simple G has no cone vertex", Direction::implies,
                 [](const FiniteGroup& g) { return g.order() >= 2 && !is_abelian(g) && is_simple(g); },
                 [](const EpgBundle& b) {
                   const auto cones = cone_vertices(b.epg);
                   CheckOutcome o{cones.empty(), true};
                   o.witness = {{"cone_vertices", to_elements(b.epg, cones)}};
                   return o;
                 },
                 full, 60});

    r.push_back({"T4.1", "EPG planar iff pi_e(G) is within {1,2,3,4}", Direction::iff, always,
                 [](const EpgBundle& b) {
                   const auto& spectrum = b.lattice.pi_e();
                   const bool small = std::all_of(spectrum.begin(), spectrum.end(), [](std::size_t o) { return o <= 4; });
                   CheckOutcome o{is_planar(b.epg), small};
                   o.witness = {{"pi_e", spectrum}};
                   return o;
                 },
                 full, 1});

    r.push_back({"T4.2", "EPG Eulerian iff |G| odd; odd order forces all degrees even", Direction::iff, always,
                 [](const EpgBundle& b) {
                   const bool odd = b.group.order() % 2 == 1;
                   const auto bad = odd_degree_vertex(b.epg);
                   CheckOutcome o{is_eulerian(b.epg), odd, !(odd && bad)};
                   if (bad) o.witness = {{"odd_degree_vertex", *bad}, {"degree", b.epg.degree(*bad)}};
                   return o;
                 },
                 full, 1});

    r.push_back({"T5.1", "p-group: deleted EPG connected iff unique minimal subgroup", Direction::iff,
                 [](const FiniteGroup& g) { return is_p_group(g).has_value(); },
                 [](const EpgBundle& b) {
                   const auto comps = connected_components(b.deleted);
                   CheckOutcome o{comps.size() <= 1, has_unique_minimal_subgroup(b.group)};
                   o.witness = {{"components", comps.size()},
                                {"prime_order_subgroups", prime_order_subgroup_count(b.group)}};
                   return o;
                 },
                 full, 2});

    r.push_back({"T5.2", "|pi(Z(G))| >= 2 implies deleted EPG connected", Direction::implies,
                 [](const FiniteGroup& g) { return prime_divisors(center(g).size()).size() >= 2; },
                 [](const EpgBundle& b) {
                   const auto comps = connected_components(b.deleted);
                   CheckOutcome o{comps.size() <= 1, true};
                   o.witness = {{"components", comps.size()}, {"center_order", center(b.group).size()}};
                   return o;
                 },
                 [](std::size_t max_order) {
                   auto roster = roster_generate(max_order);
                   auto extra = coprime_product_roster(max_order);
                   roster.insert(roster.end(), extra.begin(), extra.end());
                   sort_roster(roster);
                   return roster;
                 },
                 6});

    r.push_back(
        {"T5.3",
         "Z(G) a nontrivial p-group, |pi(G)| >= 2: deleted EPG connected iff every non-central element of "
         "order p is adjacent to a non-p-element",
         Direction::iff, [](const FiniteGroup& g) { return detail::t53_prime(g).has_value(); },
         [](const EpgBundle& b) {
           const auto p = *detail::t53_prime(b.group);
           const auto z = center(b.group);
           const auto orders = b.group.orders();
           CheckOutcome o{is_connected(b.deleted), true};
           o.witness = {{"p", p}};
           for (Element x = 1; x < b.group.order() && o.group_side; ++x) {
             if (orders[x] != p || std::binary_search(z.begin(), z.end(), x)) continue;
             bool reaches = false;
             for (Vertex y : b.epg.neighbors(x))
               if (y != 0 && !detail::is_power_of(orders[y], p)) reaches = true;
             if (!reaches) {
               o.group_side = false;
               o.witness["isolated_p_element"] = x;
             }
           }
           return o;
         },
         full, 12});

    r.push_back({"T5.4", "deleted EPG is a forest iff every element order is < 4", Direction::iff, always,
                 [](const EpgBundle& b) {
                   const auto o = b.group.orders();
                   const bool small = std::all_of(o.begin(), o.end(), [](std::size_t x) { return x < 4; });
                   const bool forest = is_forest(b.deleted);
                   CheckOutcome out{forest, small, forest == is_bipartite(b.deleted)};
                   out.witness = {{"forest", forest}, {"bipartite", is_bipartite(b.deleted)}};
                   return out;
                 },
                 full, 1});
    return r;
  }();
  return registry;
}

inline const TheoremCheck* find_check(std::string_view id) {
  for (const auto& c : theorem_registry())
    if (c.id == id) return &c;
  return nullptr;
}

inline TheoremReport run_check(const TheoremCheck& check, const std::vector<GroupSpec>& roster, BundleCache& cache,
                               std::size_t max_order = 0) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.theorem = check.id;
  for (const auto& spec : roster) {
    const auto bundle = cache.get(spec);
    if (!check.applies(bundle->group)) {
      ++report.skipped;
      continue;
    }
    ++report.tested;
    auto outcome = check.evaluate(*bundle);
    ++(outcome.group_side ? report.group_side_true : report.group_side_false);
    ++(outcome.graph_side ? report.graph_side_true : report.graph_side_false);
    if (check.passes(outcome)) {
      ++report.passed;
    } else {
      if (!outcome.consistent) outcome.witness["inconsistent"] = true;
      report.counterexamples.push_back({spec, outcome.graph_side, outcome.group_side, std::move(outcome.witness)});
    }
  }
  report.vacuous = report.tested == 0;
  report.unexpected_vacuous = report.vacuous && max_order >= check.min_meaningful_order;
  report.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline TheoremReport run_check(const TheoremCheck& check, const std::vector<GroupSpec>& roster) {
  BundleCache cache;
  return run_check(check, roster, cache);
}

/// Runs one check over its default roster.
inline TheoremReport run_default(const TheoremCheck& check, std::size_t max_order, BundleCache& cache) {
  return run_check(check, check.default_roster(max_order), cache, max_order);
}

/// All checks over their default rosters, in registry order.
inline std::vector<TheoremReport> run_all(std::size_t max_order) {
  BundleCache cache(BuildOptions{std::max(max_order, kDefaultMaxOrder), Validation::full});
  std::vector<TheoremReport> out;
  for (const auto& check : theorem_registry()) out.push_back(run_default(check, max_order, cache));
  return out;
}

/// `{theorem, tested, passed, vacuous, counterexamples, ms}`; timing can be
/// left out for byte-stable output.
inline nlohmann::ordered_json to_json(const TheoremReport& r, bool include_timing = true) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["tested"] = r.tested;
  j["passed"] = r.passed;
  j["vacuous"] = r.vacuous;
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples)
    j["counterexamples"].push_back(
        {{"spec", to_string(c.spec)}, {"graph_side", c.graph_side}, {"group_side", c.group_side}, {"witness", c.witness}});
  if (include_timing) j["ms"] = r.ms;
  return j;
}

}  // namespace epg

#endif  // EPG_THEOREM_VERIFY_HPP
