#ifndef EPG_FINITE_GROUP_HPP
#define EPG_FINITE_GROUP_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epg/errors.hpp"
#include "epg/group_spec.hpp"
#include "epg/number_theory.hpp"

namespace epg {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 512;

enum class Validation { full, sampled, off };

struct BuildOptions {
  std::size_t max_order = kDefaultMaxOrder;
  Validation validation = Validation::full;
};

/// A finite group stored as its full Cayley table. The identity is always
/// element 0. Immutable once built; share freely between threads.
class FiniteGroup {
 public:
  /// Validates `table` (row-major, n*n) and relabels so the identity is 0.
  /// Throws ValidationError naming the violated law.
  static FiniteGroup from_table(std::size_t n, std::vector<Element> table, GroupSpec spec,
                                const BuildOptions& options = {});

  std::size_t order() const noexcept { return n_; }
  static constexpr Element identity() noexcept { return 0; }

  Element multiply(Element a, Element b) const noexcept { return table_[std::size_t{a} * n_ + b]; }
  Element inverse(Element a) const noexcept { return inverses_[a]; }
  Element power(Element x, std::size_t k) const noexcept {
    Element r = identity();
    for (std::size_t i = 0; i < k % orders_[x]; ++i) r = multiply(r, x);
    return r;
  }
  Element conjugate(Element x, Element g) const noexcept { return multiply(multiply(g, x), inverse(g)); }

  /// o(x). Throws DomainError when x is not an element.
  std::size_t element_order(Element x) const {
    check_element(x);
    return orders_[x];
  }
  std::span<const std::size_t> orders() const noexcept { return orders_; }
  std::span<const Element> row(Element a) const noexcept {
    return std::span<const Element>(table_).subspan(std::size_t{a} * n_, n_);
  }
  std::span<const Element> table() const noexcept { return table_; }

  const GroupSpec& spec() const noexcept { return spec_; }
  FiniteGroup with_spec(GroupSpec spec) const {
    FiniteGroup copy = *this;
    copy.spec_ = std::move(spec);
    return copy;
  }
  std::string name() const { return display_name(spec_); }

  void check_element(Element x) const {
    if (x >= n_)
      throw DomainError("element index " + std::to_string(x) + " out of range for order " + std::to_string(n_));
  }

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<std::size_t> orders_;
  std::vector<Element> inverses_;
  GroupSpec spec_;
};

namespace detail {

inline void check_size(std::size_t n, const BuildOptions& options, std::string_view what) {
  if (n == 0) throw SizeError(std::string(what) + ": order must be positive");
  if (n > options.max_order)
    throw SizeError(std::string(what) + ": order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(options.max_order));
}

/// Closes `seeds` under the table's product. Works for any magma.
inline std::vector<bool> submagma_closure(std::size_t n, std::span<const Element> table,
                                          std::span<const Element> seeds, std::vector<bool> members = {}) {
  if (members.empty()) members.assign(n, false);
  std::vector<Element> elements;
  for (Element x = 0; x < n; ++x)
    if (members[x]) elements.push_back(x);
  std::vector<Element> queue;
  for (auto s : seeds)
    if (!members[s]) {
      members[s] = true;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    const Element x = queue.back();
    queue.pop_back();
    elements.push_back(x);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const Element y = elements[i];
      for (Element p : {table[std::size_t{x} * n + y], table[std::size_t{y} * n + x]}) {
        if (!members[p]) {
          members[p] = true;
          queue.push_back(p);
        }
      }
    }
  }
  return members;
}

/// Light's associativity test: the elements a with (xa)y = x(ay) for all x, y
/// form a submagma, so it suffices to check a generating set.
inline std::optional<std::array<Element, 3>> light_associativity_failure(std::size_t n,
                                                                       std::span<const Element> table) {
  auto mul = [&](Element a, Element b) { return table[std::size_t{a} * n + b]; };
  std::vector<Element> generators;
  std::vector<bool> members(n, false);
  for (Element g = 0; g < n; ++g) {
    if (members[g]) continue;
    generators.push_back(g);
    const Element seed[] = {g};
    members = submagma_closure(n, table, seed, std::move(members));
  }
  for (Element g : generators)
    for (Element x = 0; x < n; ++x) {
      const Element xg = mul(x, g);
      for (Element y = 0; y < n; ++y)
        if (mul(xg, y) != mul(x, mul(g, y))) return std::array<Element, 3>{x, g, y};
    }
  return std::nullopt;
}

inline std::optional<std::array<Element, 3>> sampled_associativity_failure(std::size_t n,
                                                                         std::span<const Element> table) {
  auto mul = [&](Element a, Element b) { return table[std::size_t{a} * n + b]; };
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (int i = 0; i < 200000; ++i) {
    const Element x = pick(rng), y = pick(rng), z = pick(rng);
    if (mul(mul(x, y), z) != mul(x, mul(y, z))) return std::array<Element, 3>{x, y, z};
  }
  return std::nullopt;
}

}  // namespace detail

inline FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<Element> table, GroupSpec spec,
                                           const BuildOptions& options) {
  detail::check_size(n, options, "group table");
  if (table.size() != n * n)
    throw ValidationError("closure", "table has " + std::to_string(table.size()) + " entries, expected " +
                                         std::to_string(n * n));
  for (auto v : table)
    if (v >= n) throw ValidationError("closure", "entry " + std::to_string(v) + " is not an element");

  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = table[i * n + j];
      if (seen[v]) throw ValidationError("latin-square", "row " + std::to_string(i) + " repeats " + std::to_string(v));
      seen[v] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = table[j * n + i];
      if (seen[v])
        throw ValidationError("latin-square", "column " + std::to_string(i) + " repeats " + std::to_string(v));
      seen[v] = true;
    }
  }

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element i = 0; i < n && ok; ++i) ok = table[std::size_t{e} * n + i] == i && table[std::size_t{i} * n + e] == i;
    if (ok) identity = e;
  }
  if (!identity) throw ValidationError("identity", "no two-sided identity element");

  // Swap labels 0 and e so the identity becomes 0.
  if (*identity != 0) {
    const Element e = *identity;
    auto relabel = [e](Element x) -> Element { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<Element> relabeled(n * n);
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j)
        relabeled[std::size_t{relabel(i)} * n + relabel(j)] = relabel(table[std::size_t{i} * n + j]);
    table = std::move(relabeled);
  }

  std::optional<std::array<Element, 3>> failure;
  switch (options.validation) {
    case Validation::full: failure = detail::light_associativity_failure(n, table); break;
    case Validation::sampled: failure = detail::sampled_associativity_failure(n, table); break;
    case Validation::off: break;
  }
  if (failure) {
    const auto [x, y, z] = *failure;
    throw ValidationError("associativity", "(" + std::to_string(x) + "*" + std::to_string(y) + ")*" +
                                               std::to_string(z) + " != " + std::to_string(x) + "*(" +
                                               std::to_string(y) + "*" + std::to_string(z) + ")");
  }

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.spec_ = std::move(spec);
  g.orders_.assign(n, 1);
  g.inverses_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    Element acc = x;
    std::size_t k = 1;
    while (acc != 0) {
      acc = g.multiply(acc, x);
      ++k;
      if (k > n) throw ValidationError("associativity", "element " + std::to_string(x) + " has no finite order");
    }
    g.orders_[x] = k;
    for (Element y = 0; y < n; ++y)
      if (g.multiply(x, y) == 0) {
        g.inverses_[x] = y;
        break;
      }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Constructors

/// Z_n under addition; element i is the residue i.
inline FiniteGroup make_cyclic(std::size_t n, const BuildOptions& options = {}) {
  detail::check_size(n, options, "cyclic");
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  return FiniteGroup::from_table(n, std::move(table), GroupSpec::cyclic(static_cast<unsigned>(n)), options);
}

/// Componentwise product. Element (x_1, ..., x_k) has index
/// x_1 * |G_2|...|G_k| + ... + x_k, so the last factor varies fastest.
inline FiniteGroup make_direct_product(std::span<const FiniteGroup> parts, const BuildOptions& options = {}) {
  std::size_t n = 1;
  for (const auto& p : parts) {
    n *= p.order();
    if (n > options.max_order)
      throw SizeError("direct product: order exceeds cap " + std::to_string(options.max_order));
  }
  std::vector<GroupSpec> specs;
  for (const auto& p : parts) specs.push_back(p.spec());

  std::vector<Element> table{0};
  std::size_t current = 1;
  for (const auto& p : parts) {
    const std::size_t m = p.order();
    const std::size_t next = current * m;
    std::vector<Element> t(next * next);
    for (std::size_t a = 0; a < current; ++a)
      for (std::size_t b = 0; b < current; ++b) {
        const std::size_t ab = table[a * current + b];
        for (std::size_t x = 0; x < m; ++x)
          for (std::size_t y = 0; y < m; ++y)
            t[(a * m + x) * next + (b * m + y)] = static_cast<Element>(ab * m + p.multiply(static_cast<Element>(x), static_cast<Element>(y)));
      }
    table = std::move(t);
    current = next;
  }
  return FiniteGroup::from_table(n, std::move(table), GroupSpec::product(std::move(specs)), options);
}

/// Z_m x Z_n with (i1,j1)(i2,j2) = (i1 + k^j1 * i2 mod m, j1 + j2 mod n).
/// Element (i, j) has index j*m + i.
inline FiniteGroup make_metacyclic(std::size_t m, std::size_t n, std::size_t k, const BuildOptions& options = {}) {
  if (m == 0 || n == 0) throw ParameterError("metacyclic: m and n must be positive");
  if (m * n > options.max_order)
    throw SizeError("metacyclic: order " + std::to_string(m * n) + " exceeds cap " + std::to_string(options.max_order));
  if (std::gcd(k % m, m) != 1 && m > 1) throw ParameterError("metacyclic: gcd(k, m) must be 1");
  if (pow_mod(k, n, m) != 1 % m) throw ParameterError("metacyclic: k^n must be 1 mod m");
  const std::size_t order = m * n;
  std::vector<std::size_t> kpow(n);
  for (std::size_t j = 0; j < n; ++j) kpow[j] = pow_mod(k, j, m);
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t i1 = a % m, j1 = a / m, i2 = b % m, j2 = b / m;
      const std::size_t i = (i1 + kpow[j1] * i2) % m;
      const std::size_t j = (j1 + j2) % n;
      table[a * order + b] = static_cast<Element>(j * m + i);
    }
  return FiniteGroup::from_table(order, std::move(table),
                                 GroupSpec::metacyclic(static_cast<unsigned>(m), static_cast<unsigned>(n),
                                                       static_cast<unsigned>(k)),
                                 options);
}

/// Dihedral group of order 2m, realized as metacyclic(m, 2, m-1).
inline FiniteGroup make_dihedral(std::size_t m, const BuildOptions& options = {}) {
  if (m == 0) throw ParameterError("dihedral: m must be positive");
  if (2 * m > options.max_order)
    throw SizeError("dihedral: order " + std::to_string(2 * m) + " exceeds cap " + std::to_string(options.max_order));
  return make_metacyclic(m, 2, m - 1, options).with_spec(GroupSpec::dihedral(static_cast<unsigned>(m)));
}

/// Dicyclic group of order 4m on pairs (i, j), i in Z_2m, j in {0, 1};
/// element (i, j) has index j*2m + i. Generalized quaternion when m is a
/// power of two.
inline FiniteGroup make_dicyclic(std::size_t m, const BuildOptions& options = {}) {
  if (m < 2) throw ParameterError("dicyclic: m must be at least 2");
  const std::size_t n = 4 * m;
  detail::check_size(n, options, "dicyclic");
  const std::size_t r = 2 * m;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t i1 = a % r, j1 = a / r, i2 = b % r, j2 = b / r;
      std::size_t i = 0, j = 0;
      if (j1 == 0) {
        i = (i1 + i2) % r;
        j = j2;
      } else if (j2 == 0) {
        i = (i1 + r - i2) % r;
        j = 1;
      } else {
        i = (i1 + r - i2 + m) % r;
        j = 0;
      }
      table[a * n + b] = static_cast<Element>(j * r + i);
    }
  return FiniteGroup::from_table(n, std::move(table), GroupSpec::dicyclic(static_cast<unsigned>(m)), options);
}

/// Breadth-first closure of permutations under composition. Elements are
/// numbered in discovery order with the identity first. The product x*y
/// applies x first, then y.
inline FiniteGroup closure_from_generators(std::size_t degree, std::span<const Permutation> generators,
                                           const BuildOptions& options = {}, std::string name = {}) {
  for (const auto& g : generators) {
    if (g.size() != degree) throw ParameterError("generator length differs from degree");
    std::vector<bool> seen(degree, false);
    for (auto v : g) {
      if (v >= degree || seen[v]) throw ParameterError("generator is not a permutation");
      seen[v] = true;
    }
  }
  auto compose = [degree](const Permutation& x, const Permutation& y) {
    Permutation r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = y[x[i]];
    return r;
  };
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::vector<Permutation> elements{id};
  std::map<Permutation, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      auto next = compose(elements[head], g);
      if (index.count(next)) continue;
      if (elements.size() + 1 > options.max_order)
        throw SizeError("permutation closure exceeds cap " + std::to_string(options.max_order));
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));
  std::vector<Permutation> gens(generators.begin(), generators.end());
  return FiniteGroup::from_table(n, std::move(table),
                                 GroupSpec::perm(static_cast<unsigned>(degree), std::move(gens), std::move(name)),
                                 options);
}

/// Parses a Cayley file: first non-comment line is n, then n rows of n
/// whitespace-separated 0-based indices. Lines starting with '#' are ignored.
inline FiniteGroup ingest_cayley(std::string_view text, const BuildOptions& options = {},
                                 GroupSpec spec = GroupSpec::cayley_file("<memory>")) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.push_back(line);
    }
  }
  if (lines.empty()) throw ParseError("cayley: missing order line");
  auto parse_number = [](const std::string& tok) -> long long {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("cayley: '" + tok + "' is not an integer");
    }
    if (used != tok.size()) throw ParseError("cayley: '" + tok + "' is not an integer");
    return v;
  };
  std::vector<long long> header;
  {
    std::istringstream in(lines[0]);
    std::string tok;
    while (in >> tok) header.push_back(parse_number(tok));
  }
  if (header.size() != 1 || header[0] <= 0) throw ParseError("cayley: first line must be a single positive order");
  const auto n = static_cast<std::size_t>(header[0]);
  detail::check_size(n, options, "cayley");
  if (lines.size() != n + 1)
    throw ParseError("cayley: expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::istringstream in(lines[r + 1]);
    std::string tok;
    std::size_t count = 0;
    while (in >> tok) {
      const auto v = parse_number(tok);
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw ValidationError("closure", "row " + std::to_string(r) + " has entry " + tok + " outside [0, n)");
      table.push_back(static_cast<Element>(v));
      ++count;
    }
    if (count != n)
      throw ParseError("cayley: row " + std::to_string(r) + " has " + std::to_string(count) + " entries");
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(spec), options);
}

// ---------------------------------------------------------------------------
// Structural predicates

/// Subgroup generated by `generators`, as a membership mask.
inline std::vector<bool> generated_subgroup(const FiniteGroup& g, std::span<const Element> generators) {
  std::vector<bool> members(g.order(), false);
  std::vector<Element> queue{FiniteGroup::identity()};
  members[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Element s : generators) {
      const Element next = g.multiply(queue[head], s);
      if (!members[next]) {
        members[next] = true;
        queue.push_back(next);
      }
    }
  return members;
}

inline std::vector<Element> members_to_list(const std::vector<bool>& mask) {
  std::vector<Element> out;
  for (Element x = 0; x < mask.size(); ++x)
    if (mask[x]) out.push_back(x);
  return out;
}

inline bool is_abelian(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a + 1; b < g.order(); ++b)
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
  return true;
}

inline bool is_cyclic(const FiniteGroup& g) {
  const auto orders = g.orders();
  return std::find(orders.begin(), orders.end(), g.order()) != orders.end();
}

/// Z(G), ascending.
inline std::vector<Element> center(const FiniteGroup& g) {
  std::vector<Element> out;
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element x = 0; x < g.order() && central; ++x) central = g.multiply(z, x) == g.multiply(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

/// Smallest normal subgroup containing x, ascending.
inline std::vector<Element> normal_closure(const FiniteGroup& g, Element x) {
  g.check_element(x);
  std::vector<bool> in_class(g.order(), false);
  std::vector<Element> conjugates;
  for (Element h = 0; h < g.order(); ++h) {
    const Element c = g.conjugate(x, h);
    if (!in_class[c]) {
      in_class[c] = true;
      conjugates.push_back(c);
    }
  }
  return members_to_list(generated_subgroup(g, conjugates));
}

/// True iff every non-identity element has the whole group as normal closure.
inline bool is_simple(const FiniteGroup& g) {
  if (g.order() < 2) throw DomainError("is_simple: the trivial group is excluded");
  std::vector<bool> checked(g.order(), false);
  for (Element x = 1; x < g.order(); ++x) {
    if (checked[x]) continue;
    if (normal_closure(g, x).size() != g.order()) return false;
    for (Element h = 0; h < g.order(); ++h) checked[g.conjugate(x, h)] = true;
  }
  return true;
}

/// The prime p when |G| = p^k, k >= 1. The trivial group answers nullopt.
inline std::optional<std::uint64_t> is_p_group(const FiniteGroup& g) { return prime_power_base(g.order()); }

/// Number of distinct subgroups of prime order. Each is generated by any of
/// its p-1 non-identity elements.
inline std::size_t prime_order_subgroup_count(const FiniteGroup& g) {
  if (g.order() < 2) throw DomainError("prime_order_subgroup_count: the trivial group is excluded");
  std::map<std::size_t, std::size_t> elements_of_order;
  for (auto o : g.orders())
    if (is_prime(o)) ++elements_of_order[o];
  std::size_t count = 0;
  for (auto [p, c] : elements_of_order) count += c / (p - 1);
  return count;
}

inline bool has_unique_minimal_subgroup(const FiniteGroup& g) { return prime_order_subgroup_count(g) == 1; }

/// Invariant factors of an abelian group in primary form: one prime power
/// per cyclic factor, sorted by (prime, exponent).
struct AbelianShape {
  std::vector<PrimePower> factors;

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& f : factors) n *= ipow(f.prime, f.exponent);
    return n;
  }
  std::vector<std::uint64_t> prime_powers() const {
    std::vector<std::uint64_t> out;
    for (const auto& f : factors) out.push_back(ipow(f.prime, f.exponent));
    return out;
  }
  bool operator==(const AbelianShape&) const = default;
};

/// Primary decomposition computed from element orders alone. For each prime p
/// the count N_k of elements with x^(p^k) = e equals prod p^min(k, e_i), so
/// log_p(N_k / N_(k-1)) is the number of factors with exponent >= k.
inline AbelianShape abelian_shape(const FiniteGroup& g) {
  if (!is_abelian(g)) throw DomainError("abelian_shape: group " + g.name() + " is not abelian");
  AbelianShape shape;
  for (const auto& [p, e] : factorize(g.order())) {
    std::vector<unsigned> at_least;  // at_least[k-1] = #factors with exponent >= k
    std::size_t previous = 1;
    for (unsigned k = 1; k <= e; ++k) {
      const std::uint64_t pk = ipow(p, k);
      std::size_t count = 0;
      for (auto o : g.orders())
        if (pk % o == 0) ++count;
      unsigned rank = 0;
      for (std::size_t ratio = count / previous; ratio > 1; ratio /= p) ++rank;
      previous = count;
      if (rank == 0) break;
      at_least.push_back(rank);
    }
    for (unsigned k = 1; k <= at_least.size(); ++k) {
      const unsigned next = k < at_least.size() ? at_least[k] : 0;
      for (unsigned c = 0; c < at_least[k - 1] - next; ++c) shape.factors.push_back({p, k});
    }
  }
  std::sort(shape.factors.begin(), shape.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return std::pair(a.prime, a.exponent) < std::pair(b.prime, b.exponent); });
  return shape;
}

/// True iff some prime contributes exactly one cyclic factor.
inline bool has_cyclic_sylow(const AbelianShape& shape) {
  std::map<std::uint64_t, int> per_prime;
  for (const auto& f : shape.factors) ++per_prime[f.prime];
  return std::any_of(per_prime.begin(), per_prime.end(), [](const auto& kv) { return kv.second == 1; });
}

/// Non-abelian 2-group with exactly one subgroup of order 2.
inline bool is_generalized_quaternion(const FiniteGroup& g) {
  const auto p = is_p_group(g);
  if (!p || *p != 2) return false;
  if (is_abelian(g)) return false;
  return prime_order_subgroup_count(g) == 1;
}

/// Builds the group a spec describes. CayleyFile specs read from disk.
inline FiniteGroup make_group(const GroupSpec& spec, const BuildOptions& options = {}) {
  struct Visitor {
    const GroupSpec& spec;
    const BuildOptions& options;
    FiniteGroup operator()(const family::Cyclic& c) const { return make_cyclic(c.n, options); }
    FiniteGroup operator()(const family::DirectProduct& p) const {
      std::vector<FiniteGroup> parts;
      for (const auto& s : p.parts) parts.push_back(make_group(s, options));
      return make_direct_product(parts, options);
    }
    FiniteGroup operator()(const family::Dihedral& d) const { return make_dihedral(d.m, options); }
    FiniteGroup operator()(const family::Dicyclic& d) const { return make_dicyclic(d.m, options); }
    FiniteGroup operator()(const family::Metacyclic& m) const { return make_metacyclic(m.m, m.n, m.k, options); }
    FiniteGroup operator()(const family::PermClosure& p) const {
      return closure_from_generators(p.degree, p.generators, options, spec.name);
    }
    FiniteGroup operator()(const family::CayleyFile& f) const {
      std::ifstream in(f.path);
      if (!in) throw ParseError("cannot open Cayley file '" + f.path + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      return ingest_cayley(buffer.str(), options, spec);
    }
  };
  return std::visit(Visitor{spec, options}, spec.family).with_spec(spec);
}

}  // namespace epg

#endif  // EPG_FINITE_GROUP_HPP
