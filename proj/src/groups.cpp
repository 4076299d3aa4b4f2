#include "noncomm/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "noncomm/ffield.hpp"
#include "noncomm/parallel.hpp"

namespace noncomm {

struct Group::Data {
  std::string label;
  std::vector<std::string> keys;
  std::vector<Index> table;
  MulFn mul_fn;
  CommuteFn commute_fn;
  Index identity = 0;
  std::vector<Index> inverse;
  std::vector<Index> orders;
  std::vector<Index> generators;
};

namespace {

constexpr Index kUnset = static_cast<Index>(-1);

void check_keys(const std::vector<std::string>& keys) {
  std::unordered_set<std::string> seen;
  seen.reserve(keys.size());
  for (const auto& k : keys)
    if (!seen.insert(k).second) throw GroupError("duplicate element key: " + k);
}

// Fills orders and inverses from the multiplication.
void compute_orders(Group::MulFn const& mul, std::size_t n, Index identity, std::vector<Index>& orders,
                    std::vector<Index>& inverse) {
  orders.assign(n, 0);
  inverse.assign(n, kUnset);
  for (Index a = 0; a < n; ++a) {
    Index x = a, prev = identity, k = 1;
    while (x != identity) {
      prev = x;
      x = mul(x, a);
      if (++k > n) throw GroupError("element of unbounded order; operation is not a group");
    }
    orders[a] = k;
    inverse[a] = (a == identity) ? identity : prev;
  }
}

}  // namespace

Subgroup::Subgroup(std::vector<Index> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(Index x) const { return std::binary_search(members_.begin(), members_.end(), x); }

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members_ < b.members_;
}

Group Group::from_table(std::string label, std::vector<std::string> keys, std::vector<Index> table,
                        std::vector<Index> generators) {
  const std::size_t n = keys.size();
  if (n == 0) throw GroupError("empty group");
  if (table.size() != n * n) throw GroupError("table size does not match element count");
  check_keys(keys);
  for (auto v : table)
    if (v >= n) throw GroupError("table entry out of range");

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[table[a * n + b]]) throw GroupError("table row is not a permutation");
      seen[table[a * n + b]] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[table[a * n + b]]) throw GroupError("table column is not a permutation");
      seen[table[a * n + b]] = 1;
    }
  }
  Index identity = kUnset;
  for (Index e = 0; e < n && identity == kUnset; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[e * n + x] == x && table[x * n + e] == x;
    if (ok) identity = e;
  }
  if (identity == kUnset) throw GroupError("no identity element");

  auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c))) throw GroupError("operation is not associative");
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 2000; ++t) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c))) throw GroupError("operation is not associative");
    }
  }

  auto data = std::make_shared<Data>();
  data->label = std::move(label);
  data->keys = std::move(keys);
  data->table = std::move(table);
  data->identity = identity;
  const auto* tab = data->table.data();
  compute_orders([tab, n](Index a, Index b) { return tab[a * n + b]; }, n, identity, data->orders, data->inverse);
  Group g(data);
  if (generators.empty()) {
    data->generators = generators_of(g, whole_group(g));
  } else {
    if (closure(g, generators).size() != n) throw GroupError("generators do not generate the group");
    data->generators = std::move(generators);
  }
  return g;
}

Group Group::from_function(std::string label, std::vector<std::string> keys, Index identity, MulFn mul,
                           CommuteFn commute, std::vector<Index> generators) {
  const std::size_t n = keys.size();
  if (n == 0) throw GroupError("empty group");
  if (identity >= n) throw GroupError("identity out of range");
  check_keys(keys);
  auto data = std::make_shared<Data>();
  data->label = std::move(label);
  data->keys = std::move(keys);
  data->mul_fn = std::move(mul);
  data->commute_fn = std::move(commute);
  data->identity = identity;
  compute_orders(data->mul_fn, n, identity, data->orders, data->inverse);

  std::mt19937 rng(12345);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
  const auto& f = data->mul_fn;
  for (int t = 0; t < 200; ++t) {
    const auto a = pick(rng), b = pick(rng), c = pick(rng);
    if (f(f(a, b), c) != f(a, f(b, c))) throw GroupError("operation is not associative");
  }
  Group g(data);
  if (generators.empty()) {
    data->generators = generators_of(g, whole_group(g));
  } else {
    if (closure(g, generators).size() != n) throw GroupError("generators do not generate the group");
    data->generators = std::move(generators);
  }
  return g;
}

const std::string& Group::label() const { return data_->label; }
Index Group::order() const { return static_cast<Index>(data_->keys.size()); }
Index Group::identity() const { return data_->identity; }
Index Group::inverse(Index a) const { return data_->inverse[a]; }
Index Group::element_order(Index a) const { return data_->orders[a]; }

Index Group::mul(Index a, Index b) const {
  if (!data_->table.empty()) return data_->table[static_cast<std::size_t>(a) * data_->keys.size() + b];
  return data_->mul_fn(a, b);
}

bool Group::commutes(Index a, Index b) const {
  if (data_->table.empty() && data_->commute_fn) return data_->commute_fn(a, b);
  return mul(a, b) == mul(b, a);
}

bool Group::has_table() const { return !data_->table.empty(); }
const std::string& Group::key(Index a) const { return data_->keys[a]; }
const std::vector<std::string>& Group::keys() const { return data_->keys; }
std::span<const Index> Group::generators() const { return data_->generators; }

Group Group::relabel(std::string label) const {
  auto data = std::make_shared<Data>(*data_);
  data->label = std::move(label);
  return Group(data);
}

// --- subgroups -------------------------------------------------------------

Subgroup trivial_subgroup(const Group& g) { return Subgroup({g.identity()}); }

Subgroup whole_group(const Group& g) {
  std::vector<Index> all(g.order());
  std::iota(all.begin(), all.end(), Index{0});
  return Subgroup(std::move(all));
}

std::optional<Subgroup> closure_bounded(const Group& g, std::span<const Index> generators, std::size_t limit) {
  std::vector<Index> gens;
  for (auto x : generators) {
    if (x >= g.order()) throw GroupError("generator index out of range");
    if (x != g.identity() && std::find(gens.begin(), gens.end(), x) == gens.end()) gens.push_back(x);
  }
  std::vector<char> in(g.order(), 0);
  std::vector<Index> members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : gens) {
      const Index y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
        if (members.size() > limit) return std::nullopt;
      }
    }
  }
  return Subgroup(std::move(members));
}

Subgroup closure(const Group& g, std::span<const Index> generators) {
  return *closure_bounded(g, generators, g.order());
}

std::vector<Index> generators_of(const Group& g, const Subgroup& s) {
  std::vector<Index> gens;
  Subgroup current = trivial_subgroup(g);
  for (auto m : s.members()) {
    if (current.size() == s.size()) break;
    if (current.contains(m)) continue;
    gens.push_back(m);
    current = closure(g, gens);
  }
  return gens;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Index> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return Subgroup(std::move(out));
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.members().begin(), b.members().end(), a.members().begin(), a.members().end());
}

Subgroup center(const Group& g) {
  std::vector<Index> z;
  const auto gens = g.generators();
  for (Index x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto s : gens) {
      if (!g.commutes(x, s)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(x);
  }
  return Subgroup(std::move(z));
}

Subgroup centralizer(const Group& g, Index x) {
  std::vector<Index> c;
  for (Index y = 0; y < g.order(); ++y)
    if (g.commutes(x, y)) c.push_back(y);
  return Subgroup(std::move(c));
}

namespace {

Index conjugate(const Group& g, Index x, Index by) { return g.mul(g.mul(g.inverse(by), x), by); }

}  // namespace

Subgroup normalizer(const Group& g, const Subgroup& s) {
  const auto gens = generators_of(g, s);
  std::vector<Index> out;
  for (Index y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (auto x : gens) {
      if (!s.contains(conjugate(g, x, y))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(y);
  }
  return Subgroup(std::move(out));
}

bool is_normal(const Group& g, const Subgroup& s) {
  const auto gens = generators_of(g, s);
  for (auto y : g.generators())
    for (auto x : gens)
      if (!s.contains(conjugate(g, x, y))) return false;
  return true;
}

Subgroup normal_closure(const Group& g, const Subgroup& within, std::span<const Index> elements) {
  const auto outer = generators_of(g, within);
  std::vector<Index> gens(elements.begin(), elements.end());
  Subgroup n = closure(g, gens);
  bool changed = true;
  while (changed) {
    changed = false;
    const auto inner = generators_of(g, n);
    for (auto y : outer) {
      for (auto x : inner) {
        const Index c = conjugate(g, x, y);
        if (!n.contains(c)) {
          gens.push_back(c);
          n = closure(g, gens);
          changed = true;
        }
      }
    }
  }
  return n;
}

Subgroup derived_subgroup(const Group& g, const Subgroup& s) {
  const auto gens = generators_of(g, s);
  std::vector<Index> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Index a = gens[i], b = gens[j];
      const Index c = g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
      if (c != g.identity()) comms.push_back(c);
    }
  }
  return normal_closure(g, s, comms);
}

Subgroup derived_subgroup(const Group& g) { return derived_subgroup(g, whole_group(g)); }

std::vector<Subgroup> derived_series(const Group& g) {
  std::vector<Subgroup> series{whole_group(g)};
  while (true) {
    Subgroup next = derived_subgroup(g, series.back());
    if (next.size() == series.back().size()) break;
    series.push_back(std::move(next));
  }
  return series;
}

Group subgroup_as_group(const Group& g, const Subgroup& s, std::string label) {
  const auto members = s.members();
  const std::size_t n = members.size();
  std::vector<std::string> keys;
  keys.reserve(n);
  for (auto m : members) keys.push_back(g.key(m));
  auto local = [members](Index x) {
    return static_cast<Index>(std::lower_bound(members.begin(), members.end(), x) - members.begin());
  };
  std::vector<Index> gens;
  for (auto x : generators_of(g, s)) gens.push_back(local(x));

  if (n <= Group::kTableLimit) {
    std::vector<Index> table(n * n);
    parallel_for(n, [&](std::size_t a) {
      for (std::size_t b = 0; b < n; ++b) table[a * n + b] = local(g.mul(members[a], members[b]));
    });
    return Group::from_table(std::move(label), std::move(keys), std::move(table), std::move(gens));
  }
  std::vector<Index> owned(members.begin(), members.end());
  auto shared = std::make_shared<const std::vector<Index>>(std::move(owned));
  auto find = [shared](Index x) {
    return static_cast<Index>(std::lower_bound(shared->begin(), shared->end(), x) - shared->begin());
  };
  return Group::from_function(
      std::move(label), std::move(keys), find(g.identity()),
      [g, shared, find](Index a, Index b) { return find(g.mul((*shared)[a], (*shared)[b])); },
      [g, shared](Index a, Index b) { return g.commutes((*shared)[a], (*shared)[b]); }, std::move(gens));
}

QuotientMap quotient_map(const Group& g, const Subgroup& n) {
  if (!n.contains(g.identity()) || !is_normal(g, n)) throw GroupError("not normal");
  std::vector<Index> coset_of(g.order(), kUnset);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    const auto id = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (auto m : n.members()) coset_of[g.mul(x, m)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<std::string> keys;
  keys.reserve(m);
  for (auto r : reps) keys.push_back("coset(" + g.key(r) + ")");
  std::vector<Index> gens;
  for (auto s : g.generators()) {
    const Index c = coset_of[s];
    if (c != coset_of[g.identity()] && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  const std::string label = g.label() + "/N" + std::to_string(n.size());
  if (m <= Group::kTableLimit) {
    std::vector<Index> table(m * m);
    parallel_for(m, [&](std::size_t a) {
      for (std::size_t b = 0; b < m; ++b) table[a * m + b] = coset_of[g.mul(reps[a], reps[b])];
    });
    return {Group::from_table(label, std::move(keys), std::move(table), std::move(gens)), std::move(coset_of),
            std::move(reps)};
  }
  auto shared_cosets = std::make_shared<const std::vector<Index>>(coset_of);
  auto shared_reps = std::make_shared<const std::vector<Index>>(reps);
  Group q = Group::from_function(
      label, std::move(keys), coset_of[g.identity()],
      [g, shared_cosets, shared_reps](Index a, Index b) {
        return (*shared_cosets)[g.mul((*shared_reps)[a], (*shared_reps)[b])];
      },
      {}, std::move(gens));
  return {std::move(q), std::move(coset_of), std::move(reps)};
}

Group quotient(const Group& g, const Subgroup& n) { return quotient_map(g, n).group; }

Subgroup preimage(const QuotientMap& q, const Subgroup& s) {
  std::vector<Index> out;
  for (Index x = 0; x < q.coset_of.size(); ++x)
    if (s.contains(q.coset_of[x])) out.push_back(x);
  return Subgroup(std::move(out));
}

bool is_abelian(const Group& g) {
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!g.commutes(gens[i], gens[j])) return false;
  return true;
}

bool is_abelian(const Group& g, const Subgroup& s) {
  const auto gens = generators_of(g, s);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!g.commutes(gens[i], gens[j])) return false;
  return true;
}

bool is_solvable(const Group& g) { return derived_series(g).back().size() == 1; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime_power(std::uint64_t n) { return n > 1 && prime_factors(n).size() == 1; }

bool is_nilpotent(const Group& g) {
  if (g.order() == 1) return true;
  if (center(g).size() == 1) return false;
  for (auto p : prime_factors(g.order()))
    if (sylow(g, p).count != 1) return false;
  return true;
}

SylowInfo sylow(const Group& g, std::uint64_t p) {
  if (!is_prime(p) || g.order() % p != 0) throw GroupError("prime does not divide the group order");
  std::size_t target = 1;
  for (std::uint64_t m = g.order(); m % p == 0; m /= p) target *= p;

  auto p_power = [p](std::size_t k) {
    while (k % p == 0) k /= p;
    return k == 1;
  };
  std::vector<Index> gens;
  Subgroup current = trivial_subgroup(g);
  while (current.size() < target) {
    bool grown = false;
    for (Index x = 0; x < g.order() && current.size() < target; ++x) {
      if (!p_power(g.element_order(x)) || current.contains(x)) continue;
      auto candidate_gens = gens;
      candidate_gens.push_back(x);
      auto candidate = closure_bounded(g, candidate_gens, target);
      if (candidate && p_power(candidate->size())) {
        gens = std::move(candidate_gens);
        current = std::move(*candidate);
        grown = true;
      }
    }
    if (!grown) throw GroupError("Sylow search stalled");
  }
  const std::size_t count = g.order() / normalizer(g, current).size();
  return {p, count, std::move(current)};
}

bool internal_direct_product(const Group& g, const Subgroup& a, const Subgroup& b) {
  if (!is_normal(g, a) || !is_normal(g, b)) return false;
  if (intersection(a, b).size() != 1) return false;
  return a.size() * b.size() == g.order();
}

std::vector<Subgroup> subgroup_lattice(const Group& g, Index bound) {
  if (g.order() > bound) throw GroupError("lattice bound exceeded");
  // Cyclic subgroups with one generator each.
  std::map<Subgroup, Index> cyclic;
  for (Index x = 0; x < g.order(); ++x) {
    const Index gen[] = {x};
    cyclic.emplace(closure(g, gen), x);
  }
  std::set<Subgroup> all;
  std::vector<Subgroup> frontier;
  for (const auto& [s, x] : cyclic) {
    all.insert(s);
    frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier) {
      const auto hg = generators_of(g, h);
      for (const auto& [c, x] : cyclic) {
        if (h.contains(x)) continue;
        auto gens = hg;
        gens.push_back(x);
        Subgroup j = closure(g, gens);
        if (all.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

std::vector<Bitset> commutation_rows(const Group& g) {
  const std::size_t n = g.order();
  std::vector<Bitset> rows(n, Bitset(n));
  parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b)
      if (g.commutes(static_cast<Index>(a), static_cast<Index>(b))) rows[a].set(b);
  });
  return rows;
}

}  // namespace noncomm
