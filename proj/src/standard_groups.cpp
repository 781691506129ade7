#include "opgroup/standard_groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace opgroup {

namespace {

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& s, const Perm& t) {
  Perm out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[t[i]];
  return out;
}

std::string cycle_name(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

// Identity first, then by order of discovery (breadth first from the generators).
std::vector<Perm> closure(std::size_t degree, const std::vector<Perm>& generators) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elements{id};
  std::map<Perm, std::size_t> seen{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Perm& gen : generators) {
      Perm next = compose(elements[i], gen);
      if (seen.emplace(next, elements.size()).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

FiniteGroup from_perms(const std::vector<Perm>& elements) {
  std::map<Perm, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index[elements[i]] = i;
    names.push_back(cycle_name(elements[i]));
  }
  std::vector<std::vector<ElementIndex>> table(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      table[i].push_back(index.at(compose(elements[i], elements[j])));
    }
  }
  return FiniteGroup::from_indices(std::move(names), std::move(table), elements.size());
}

bool is_even(const Perm& p) {
  std::size_t transpositions = 0;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j], ++len) seen[j] = true;
    if (len > 0) transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: n must be positive");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : i == 1 ? "a" : "a" + std::to_string(i));
  }
  std::vector<std::vector<ElementIndex>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i].push_back((i + j) % n);
  }
  return FiniteGroup::from_indices(std::move(names), std::move(table), n);
}

FiniteGroup permutation_group(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators) {
  for (const auto& g : generators) {
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    if (sorted != id) throw std::invalid_argument("permutation_group: not a permutation");
  }
  return from_perms(closure(degree, generators));
}

FiniteGroup symmetric_group(std::size_t degree) {
  if (degree < 2) return permutation_group(degree, {});
  Perm swap(degree), cycle(degree);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
  return permutation_group(degree, {swap, cycle});
}

FiniteGroup alternating_group(std::size_t degree) {
  std::vector<Perm> even;
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (is_even(p)) even.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_perms(even);
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral_group: n must be at least 3");
  Perm rotation(n), reflection(n);
  for (std::size_t i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  return permutation_group(n, {rotation, reflection});
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::string> names;
  for (ElementIndex i = 0; i < a.order(); ++i) {
    for (ElementIndex j = 0; j < b.order(); ++j) names.push_back(a.name(i) + ":" + b.name(j));
  }
  std::vector<std::vector<ElementIndex>> table(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ElementIndex i = a.multiply(x / b.order(), y / b.order());
      const ElementIndex j = b.multiply(x % b.order(), y % b.order());
      table[x].push_back(i * b.order() + j);
    }
  }
  return FiniteGroup::from_indices(std::move(names), std::move(table), n);
}

std::vector<ElementIndex> element_indices(const FiniteGroup& g,
                                          const std::vector<std::string>& names) {
  std::vector<ElementIndex> out;
  for (const auto& name : names) out.push_back(g.require_index(name));
  return out;
}

}  // namespace opgroup
