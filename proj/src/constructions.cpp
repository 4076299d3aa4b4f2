#include "noncomm/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace noncomm {
namespace {

using Perm = std::vector<unsigned>;

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (unsigned i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

bool is_even(const Perm& p) {
  std::size_t transpositions = 0;
  std::vector<char> seen(p.size(), 0);
  for (unsigned i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (unsigned j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

// Permutation group on the listed permutations (closed under composition).
// The product a*b applies b first, then a.
Group permutation_group(std::string label, const std::vector<Perm>& perms, const std::vector<Perm>& gens) {
  const std::size_t n = perms.size();
  if (n > Group::kTableLimit) throw GroupError("permutation group too large");
  std::map<Perm, Index> index;
  for (Index i = 0; i < n; ++i) index.emplace(perms[i], i);
  std::vector<Index> table(n * n);
  Perm prod(perms.empty() ? 0 : perms[0].size());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = perms[a][perms[b][i]];
      table[a * n + b] = index.at(prod);
    }
  }
  std::vector<std::string> keys;
  for (const auto& p : perms) keys.push_back(cycle_string(p));
  std::vector<Index> gen_idx;
  for (const auto& g : gens) {
    const Index i = index.at(g);
    if (std::find(gen_idx.begin(), gen_idx.end(), i) == gen_idx.end()) gen_idx.push_back(i);
  }
  return Group::from_table(std::move(label), std::move(keys), std::move(table), std::move(gen_idx));
}

std::vector<Perm> all_perms(unsigned degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Group build_cyclic(unsigned n, std::string label) {
  if (n == 0) throw GroupError("cyclic order must be positive");
  if (n > Group::kTableLimit) throw GroupError("group too large");
  std::vector<std::string> keys;
  for (unsigned i = 0; i < n; ++i) keys.push_back(std::to_string(i));
  std::vector<Index> table(std::size_t{n} * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  std::vector<Index> gens;
  if (n > 1) gens.push_back(1);
  return Group::from_table(std::move(label), std::move(keys), std::move(table), std::move(gens));
}

Group build_dihedral(unsigned order, std::string label) {
  if (order < 2 || order % 2) throw GroupError("dihedral order must be even and >= 2");
  const unsigned n = order / 2;
  auto idx = [n](unsigned i, unsigned j) { return j * n + i; };
  std::vector<std::string> keys(order);
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned i = 0; i < n; ++i) keys[idx(i, j)] = "r^" + std::to_string(i) + (j ? " s" : "");
  std::vector<Index> table(std::size_t{order} * order);
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned i = 0; i < n; ++i)
      for (unsigned l = 0; l < 2; ++l)
        for (unsigned k = 0; k < n; ++k) {
          const unsigned rot = j ? (i + n - k) % n : (i + k) % n;
          table[idx(i, j) * order + idx(k, l)] = idx(rot, (j + l) % 2);
        }
  std::vector<Index> gens;
  if (n > 1) gens.push_back(idx(1, 0));
  gens.push_back(idx(0, 1));
  return Group::from_table(std::move(label), std::move(keys), std::move(table), std::move(gens));
}

Group build_dicyclic(unsigned order, std::string label) {
  if (order < 4 || order % 4) throw GroupError("dicyclic order must be a positive multiple of 4");
  const unsigned m = order / 2;  // order of a
  const unsigned n = order / 4;
  auto idx = [m](unsigned i, unsigned j) { return j * m + i; };
  std::vector<std::string> keys(order);
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned i = 0; i < m; ++i) keys[idx(i, j)] = "a^" + std::to_string(i) + (j ? " x" : "");
  std::vector<Index> table(std::size_t{order} * order);
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned i = 0; i < m; ++i)
      for (unsigned l = 0; l < 2; ++l)
        for (unsigned k = 0; k < m; ++k) {
          Index r;
          if (j == 0) {
            r = idx((i + k) % m, l);
          } else if (l == 0) {
            r = idx((i + m - k) % m, 1);
          } else {
            r = idx((i + m - k + n) % m, 0);
          }
          table[idx(i, j) * order + idx(k, l)] = r;
        }
  return Group::from_table(std::move(label), std::move(keys), std::move(table), {idx(1, 0), idx(0, 1)});
}

Group build_symmetric(unsigned degree, std::string label, bool even_only) {
  if (degree == 0 || degree > 7) throw GroupError("degree unsupported");
  std::vector<Perm> perms;
  for (auto& p : all_perms(degree))
    if (!even_only || is_even(p)) perms.push_back(std::move(p));
  std::vector<Perm> gens;
  if (even_only) {
    for (unsigned k = 2; k < degree; ++k) {
      Perm c(degree);
      std::iota(c.begin(), c.end(), 0u);
      c[0] = 1;
      c[1] = k;
      c[k] = 0;
      gens.push_back(c);
    }
  } else if (degree > 1) {
    Perm cyc(degree), tr(degree);
    for (unsigned i = 0; i < degree; ++i) cyc[i] = (i + 1) % degree;
    std::iota(tr.begin(), tr.end(), 0u);
    std::swap(tr[0], tr[1]);
    gens = {cyc, tr};
  }
  return permutation_group(std::move(label), perms, gens);
}

}  // namespace

Group direct_product(const std::vector<Group>& factors, std::string label) {
  std::size_t order = 1;
  for (const auto& f : factors) order *= f.order();
  if (order > Group::kTableLimit) throw GroupError("group too large");
  const std::size_t k = factors.size();
  auto digits = [&](std::size_t idx) {
    std::vector<Index> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = static_cast<Index>(idx % factors[i].order());
      idx /= factors[i].order();
    }
    return d;
  };
  auto compose = [&](const std::vector<Index>& d) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * factors[i].order() + d[i];
    return static_cast<Index>(idx);
  };
  std::vector<std::string> keys;
  std::vector<std::vector<Index>> dig(order);
  for (std::size_t x = 0; x < order; ++x) {
    dig[x] = digits(x);
    std::string key = "(";
    for (std::size_t i = 0; i < k; ++i) key += (i ? "," : "") + factors[i].key(dig[x][i]);
    keys.push_back(key + ")");
  }
  std::vector<Index> table(order * order);
  std::vector<Index> d(k);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < k; ++i) d[i] = factors[i].mul(dig[a][i], dig[b][i]);
      table[a * order + b] = compose(d);
    }
  std::vector<Index> gens;
  for (std::size_t i = 0; i < k; ++i) {
    for (auto g : factors[i].generators()) {
      std::vector<Index> e(k);
      for (std::size_t j = 0; j < k; ++j) e[j] = factors[j].identity();
      e[i] = g;
      gens.push_back(compose(e));
    }
  }
  return Group::from_table(std::move(label), std::move(keys), std::move(table), std::move(gens));
}

namespace {

// Evaluates a word such as "x^2y^-1" in n using its canonical generators.
Index eval_word(const Group& n, std::string_view word) {
  static const std::string letters = "xyzw";
  Index acc = n.identity();
  std::size_t i = 0;
  auto fail = [&] { return GroupError("bad action word: " + std::string(word)); };
  while (i < word.size()) {
    const char c = word[i++];
    if (c == 'e' || c == '1') continue;
    const auto pos = letters.find(c);
    if (pos == std::string::npos || pos >= n.generators().size()) throw fail();
    Index base = n.generators()[pos];
    long power = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      const std::size_t start = i;
      if (i < word.size() && word[i] == '-') ++i;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
      if (i == start || (i == start + 1 && word[start] == '-')) throw fail();
      power = std::stol(std::string(word.substr(start, i - start)));
    }
    if (power < 0) {
      base = n.inverse(base);
      power = -power;
    }
    for (long t = 0; t < power; ++t) acc = n.mul(acc, base);
  }
  return acc;
}

// Extends generator images to a map on all of n; nullopt when the images do
// not define an automorphism.
std::optional<std::vector<Index>> extend_automorphism(const Group& n, const std::vector<Index>& images) {
  constexpr Index unset = static_cast<Index>(-1);
  const auto gens = n.generators();
  std::vector<Index> map(n.order(), unset);
  std::vector<char> used(n.order(), 0);
  std::vector<Index> queue{n.identity()};
  map[n.identity()] = n.identity();
  used[n.identity()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Index x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Index y = n.mul(x, gens[j]);
      const Index fy = n.mul(map[x], images[j]);
      if (map[y] == unset) {
        if (used[fy]) return std::nullopt;
        map[y] = fy;
        used[fy] = 1;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n.order()) return std::nullopt;
  return map;
}

Group build_semidirect(const Group& n, const Group& h, const std::vector<std::vector<std::string>>& action,
                       std::string label) {
  constexpr Index unset = static_cast<Index>(-1);
  const std::size_t order = std::size_t{n.order()} * h.order();
  if (order > Group::kTableLimit) throw GroupError("group too large");
  if (action.size() != h.generators().size()) throw GroupError("bad action: one image list per generator of H");

  std::vector<std::vector<Index>> gen_auts;
  for (const auto& words : action) {
    if (words.size() != n.generators().size()) throw GroupError("bad action: one image per generator of N");
    std::vector<Index> images;
    for (const auto& w : words) images.push_back(eval_word(n, w));
    auto aut = extend_automorphism(n, images);
    if (!aut) throw GroupError("bad action");
    gen_auts.push_back(std::move(*aut));
  }

  // theta(x * h_j) = theta(x) ∘ theta(h_j); a clash means H's relations fail.
  std::vector<std::vector<Index>> theta(h.order());
  std::vector<Index> id(n.order());
  std::iota(id.begin(), id.end(), Index{0});
  theta[h.identity()] = id;
  std::vector<Index> queue{h.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Index x = queue[i];
    for (std::size_t j = 0; j < gen_auts.size(); ++j) {
      const Index y = h.mul(x, h.generators()[j]);
      std::vector<Index> composed(n.order(), unset);
      for (Index e = 0; e < n.order(); ++e) composed[e] = theta[x][gen_auts[j][e]];
      if (theta[y].empty()) {
        theta[y] = std::move(composed);
        queue.push_back(y);
      } else if (theta[y] != composed) {
        throw GroupError("bad action");
      }
    }
  }

  const Index hn = h.order();
  auto idx = [hn](Index a, Index b) { return a * hn + b; };
  std::vector<std::string> keys(order);
  for (Index a = 0; a < n.order(); ++a)
    for (Index b = 0; b < hn; ++b) keys[idx(a, b)] = "(" + n.key(a) + "," + h.key(b) + ")";
  std::vector<Index> table(order * order);
  for (Index a1 = 0; a1 < n.order(); ++a1)
    for (Index b1 = 0; b1 < hn; ++b1)
      for (Index a2 = 0; a2 < n.order(); ++a2)
        for (Index b2 = 0; b2 < hn; ++b2)
          table[std::size_t{idx(a1, b1)} * order + idx(a2, b2)] =
              idx(n.mul(a1, theta[b1][a2]), h.mul(b1, b2));
  std::vector<Index> gens;
  for (auto g : n.generators()) gens.push_back(idx(g, h.identity()));
  for (auto g : h.generators()) gens.push_back(idx(n.identity(), g));
  return Group::from_table(std::move(label), std::move(keys), std::move(table), std::move(gens));
}

// --- parsing ---------------------------------------------------------------

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw GroupError("unbalanced brackets in descriptor");
    if (c == ',' && depth == 0) {
      out.push_back(strip(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw GroupError("unbalanced brackets in descriptor");
  out.push_back(strip(s.substr(start)));
  return out;
}

unsigned parse_number(std::string_view digits, std::string_view whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
    throw GroupError("bad group descriptor: " + std::string(whole));
  return static_cast<unsigned>(std::stoul(std::string(digits)));
}

}  // namespace

GroupDescriptor GroupDescriptor::cyclic(unsigned n) { return {Kind::cyclic, n, {}, {}}; }
GroupDescriptor GroupDescriptor::dihedral(unsigned order) { return {Kind::dihedral, order, {}, {}}; }
GroupDescriptor GroupDescriptor::dicyclic(unsigned order) { return {Kind::dicyclic, order, {}, {}}; }
GroupDescriptor GroupDescriptor::symmetric(unsigned degree) { return {Kind::symmetric, degree, {}, {}}; }
GroupDescriptor GroupDescriptor::alternating(unsigned degree) { return {Kind::alternating, degree, {}, {}}; }
GroupDescriptor GroupDescriptor::direct(std::vector<GroupDescriptor> factors) {
  return {Kind::direct, 0, std::move(factors), {}};
}
GroupDescriptor GroupDescriptor::semidirect(GroupDescriptor n, GroupDescriptor h,
                                            std::vector<std::vector<std::string>> action) {
  return {Kind::semidirect, 0, {std::move(n), std::move(h)}, std::move(action)};
}

std::string GroupDescriptor::str() const {
  switch (kind) {
    case Kind::cyclic:
      return "C" + std::to_string(param);
    case Kind::dihedral:
      return "D" + std::to_string(param);
    case Kind::dicyclic:
      return param == 8 ? "Q8" : "Dic" + std::to_string(param);
    case Kind::symmetric:
      return "S" + std::to_string(param);
    case Kind::alternating:
      return "A" + std::to_string(param);
    case Kind::direct: {
      std::string s = "direct(";
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i].str();
      return s + ")";
    }
    case Kind::semidirect: {
      std::string s = "semidirect(" + parts[0].str() + "," + parts[1].str();
      const bool bare = action.size() == 1 && action[0].size() == 1;
      for (const auto& words : action) {
        s += bare ? "," : ",[";
        for (std::size_t i = 0; i < words.size(); ++i) s += (i ? "," : "") + words[i];
        if (!bare) s += "]";
      }
      return s + ")";
    }
  }
  return {};
}

nlohmann::ordered_json GroupDescriptor::to_json() const {
  static const char* names[] = {"cyclic", "dihedral", "dicyclic", "symmetric", "alternating", "direct", "semidirect"};
  nlohmann::ordered_json j;
  j["kind"] = names[static_cast<int>(kind)];
  if (kind == Kind::direct || kind == Kind::semidirect) {
    j["parts"] = nlohmann::ordered_json::array();
    for (const auto& p : parts) j["parts"].push_back(p.to_json());
    if (kind == Kind::semidirect) j["action"] = action;
  } else {
    j["param"] = param;
  }
  j["text"] = str();
  return j;
}

GroupDescriptor parse_descriptor(std::string_view text) {
  const auto s = strip(text);
  const auto open = s.find('(');
  if (open == std::string_view::npos) {
    if (s == "Q8") return GroupDescriptor::dicyclic(8);
    if (s.starts_with("Dic")) return GroupDescriptor::dicyclic(parse_number(s.substr(3), s));
    if (s.empty()) throw GroupError("empty group descriptor");
    const auto num = parse_number(s.substr(1), s);
    switch (s[0]) {
      case 'C':
      case 'Z':
        return GroupDescriptor::cyclic(num);
      case 'D':
        return GroupDescriptor::dihedral(num);
      case 'S':
        return GroupDescriptor::symmetric(num);
      case 'A':
        return GroupDescriptor::alternating(num);
      default:
        throw GroupError("bad group descriptor: " + std::string(s));
    }
  }
  if (s.back() != ')') throw GroupError("bad group descriptor: " + std::string(s));
  const auto head = strip(s.substr(0, open));
  const auto args = split_top(s.substr(open + 1, s.size() - open - 2));
  if (head == "direct") {
    if (args.size() < 2) throw GroupError("direct product needs at least two factors");
    std::vector<GroupDescriptor> factors;
    for (auto a : args) factors.push_back(parse_descriptor(a));
    return GroupDescriptor::direct(std::move(factors));
  }
  if (head == "semidirect") {
    if (args.size() < 3) throw GroupError("semidirect product needs N, H and an action");
    std::vector<std::vector<std::string>> action;
    for (std::size_t i = 2; i < args.size(); ++i) {
      auto a = args[i];
      if (!a.empty() && a.front() == '[') {
        if (a.back() != ']') throw GroupError("bad action group: " + std::string(a));
        std::vector<std::string> words;
        for (auto w : split_top(a.substr(1, a.size() - 2))) words.emplace_back(w);
        action.push_back(std::move(words));
      } else {
        action.push_back({std::string(a)});
      }
    }
    return GroupDescriptor::semidirect(parse_descriptor(args[0]), parse_descriptor(args[1]), std::move(action));
  }
  throw GroupError("bad group descriptor: " + std::string(s));
}

Group build(const GroupDescriptor& desc) {
  const std::string label = desc.str();
  switch (desc.kind) {
    case GroupDescriptor::Kind::cyclic:
      return build_cyclic(desc.param, label);
    case GroupDescriptor::Kind::dihedral:
      return build_dihedral(desc.param, label);
    case GroupDescriptor::Kind::dicyclic:
      return build_dicyclic(desc.param, label);
    case GroupDescriptor::Kind::symmetric:
      return build_symmetric(desc.param, label, false);
    case GroupDescriptor::Kind::alternating:
      return build_symmetric(desc.param, label, true);
    case GroupDescriptor::Kind::direct: {
      std::vector<Group> factors;
      for (const auto& p : desc.parts) factors.push_back(build(p));
      return direct_product(factors, label);
    }
    case GroupDescriptor::Kind::semidirect:
      if (desc.parts.size() != 2) throw GroupError("semidirect product needs exactly N and H");
      return build_semidirect(build(desc.parts[0]), build(desc.parts[1]), desc.action, label);
  }
  throw GroupError("unknown descriptor kind");
}

std::vector<GroupDescriptor> order24_descriptors() {
  using D = GroupDescriptor;
  return {
      D::cyclic(24),
      D::direct({D::cyclic(2), D::cyclic(12)}),
      D::direct({D::cyclic(2), D::cyclic(2), D::cyclic(6)}),
      D::symmetric(4),
      D::semidirect(D::dicyclic(8), D::cyclic(3), {{"y", "xy"}}),  // SL(2,3) = Q8 ⋊ C3
      D::direct({D::cyclic(2), D::alternating(4)}),
      D::dihedral(24),
      D::dicyclic(24),
      D::semidirect(D::cyclic(3), D::cyclic(8), {{"x^2"}}),
      D::direct({D::cyclic(4), D::symmetric(3)}),
      D::direct({D::cyclic(2), D::dihedral(12)}),
      D::direct({D::cyclic(2), D::semidirect(D::cyclic(3), D::cyclic(4), {{"x^2"}})}),
      D::semidirect(D::cyclic(3), D::dihedral(8), {{"x^2"}, {"x"}}),
      D::direct({D::cyclic(3), D::dihedral(8)}),
      D::direct({D::cyclic(3), D::dicyclic(8)}),
  };
}

std::vector<Group> order24_catalog() {
  std::vector<Group> groups;
  for (const auto& d : order24_descriptors()) groups.push_back(build(d));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].order() != 24) throw GroupError("catalog entry has wrong order: " + groups[i].label());
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      if (is_isomorphic(groups[i], groups[j]))
        throw GroupError("catalog entries are isomorphic: " + groups[i].label() + " and " + groups[j].label());
  }
  return groups;
}

std::vector<Group> order6_catalog() {
  return {build(GroupDescriptor::cyclic(6)), build(GroupDescriptor::symmetric(3))};
}

std::vector<Group> catalog_for_order(Index order) {
  if (order == 6) return order6_catalog();
  if (order == 24) return order24_catalog();
  throw GroupError("no rival catalog for order " + std::to_string(order));
}

}  // namespace noncomm
