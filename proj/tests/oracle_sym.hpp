#pragma once

// Symmetric group character table built from first principles, for
// cross-checking the library's recursive evaluator.  Permutation characters
// of Young subgroups are computed by counting cycle-to-row assignments, then
// orthogonalized in an order compatible with dominance.  Deliberately shares
// no code with src/characters.cpp beyond the Int/Rat typedefs.

#include "sylres/algebraic.hpp"
#include "sylres/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using sylres::Int;
using sylres::Partition;
using sylres::Rat;

// prod over distinct part sizes k: k^{m_k} * m_k!
inline Int z_number(const Partition& type) {
  Int z = 1;
  const std::vector<int>& parts = type.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    for (std::size_t t = 1; t <= j - i; ++t) z *= Int(parts[i]) * Int(t);
    i = j;
  }
  return z;
}

// Value of the permutation character of the Young subgroup S_mu on the class
// rho: the number of ways to assign the cycles of an element of type rho to
// the rows of mu so that every row's cycle lengths sum to its part.  Rows
// are distinguishable; the count only depends on the multiset of remaining
// capacities, which is what the memo key uses.
inline Int perm_char_value(const Partition& mu, const Partition& rho) {
  const std::vector<int>& cyc = rho.parts();
  std::map<std::pair<std::size_t, std::vector<int>>, Int> memo;
  std::function<Int(std::size_t, std::vector<int>)> go =
      [&](std::size_t i, std::vector<int> caps) -> Int {
    if (i == cyc.size()) {
      for (int c : caps)
        if (c != 0) return 0;
      return 1;
    }
    std::sort(caps.begin(), caps.end(), std::greater<int>());
    const auto key = std::make_pair(i, caps);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Int total = 0;
    for (std::size_t r = 0; r < caps.size(); ++r) {
      if (caps[r] < cyc[i]) continue;
      std::vector<int> next = caps;
      next[r] -= cyc[i];
      total += go(i + 1, std::move(next));
    }
    memo.emplace(key, total);
    return total;
  };
  return go(0, mu.parts());
}

struct CharacterTable {
  std::vector<Partition> shapes;   // partitions_of(n) order, (n) first
  std::vector<Partition> classes;  // same list
  std::vector<std::vector<Int>> values;  // values[i][j] = chi^shapes[i] on classes[j]

  Int value(const Partition& lam, const Partition& rho) const {
    const auto si = std::find(shapes.begin(), shapes.end(), lam);
    const auto cj = std::find(classes.begin(), classes.end(), rho);
    if (si == shapes.end() || cj == classes.end())
      throw std::invalid_argument("shape or class not in table");
    return values[si - shapes.begin()][cj - classes.begin()];
  }
};

// Gram-Schmidt over the class inner product: the permutation character of
// S_mu is chi^mu plus characters of shapes strictly dominating mu, and
// reverse lexicographic order refines dominance, so subtracting projections
// onto the rows already produced leaves exactly chi^mu.
inline CharacterTable character_table(int n) {
  CharacterTable t;
  t.shapes = sylres::partitions_of(n);
  t.classes = t.shapes;
  const std::size_t k = t.shapes.size();
  std::vector<Int> z(k);
  for (std::size_t j = 0; j < k; ++j) z[j] = z_number(t.classes[j]);

  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Int> row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = perm_char_value(t.shapes[i], t.classes[j]);
    for (const std::vector<Int>& prev : t.values) {
      Rat m = 0;
      for (std::size_t j = 0; j < k; ++j) m += Rat(row[j] * prev[j], z[j]);
      if (boost::multiprecision::denominator(m) != 1)
        throw std::logic_error("non-integral multiplicity in oracle Gram-Schmidt");
      const Int mi = boost::multiprecision::numerator(m);
      for (std::size_t j = 0; j < k; ++j) row[j] -= mi * prev[j];
    }
    t.values.push_back(std::move(row));
  }
  return t;
}

}  // namespace oracle
