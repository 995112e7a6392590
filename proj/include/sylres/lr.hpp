#pragma once

#include "sylres/partition.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sylres {

// A filling of the skew diagram outer/inner; values are parallel to
// SkewShape::cells() (reading order: rows top to bottom, left to right).
struct LRConfiguration {
  SkewShape shape;
  std::vector<int> values;

  LRConfiguration(SkewShape s, std::vector<int> v);
  // Semistandard (rows weak, columns strict) and the right-to-left,
  // top-to-bottom reading word is a reverse lattice word.
  bool is_valid() const;
  Partition content() const;  // multiplicity vector of the entries
  int value_at(int row, int col) const;  // 0 if (row, col) not in the skew part
  std::vector<std::string> render() const;  // dots for inner cells, digits for filling
  bool operator==(const LRConfiguration& o) const {
    return shape.outer == o.shape.outer && shape.inner == o.shape.inner && values == o.values;
  }
};

struct LRResult {
  long long coefficient = 0;
  std::vector<LRConfiguration> witnesses;  // first `witness_cap` in search order
};

// Multiplicity of the outer product: fillings of [lam / mu] of content nu.
// Requires |lam| == |mu| + |nu|; a mu not contained in lam gives 0.
LRResult lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu,
                        long long witness_cap = 16);

// All (mu, nu) with mu, nu of size q and nonzero coefficient in lam.
std::map<std::pair<Partition, Partition>, long long> restriction_pairs(const Partition& lam,
                                                                       int q);

// Explicitly constructed fillings certifying that the companion shapes of
// two_hook_shape(q, x, y) really occur, checked against the enumerator.
struct RecipeReport {
  Partition lam, mu, nu;
  bool even_case = false;
  bool mu_filling_valid = false;    // the constructed mu-filling passes is_valid
  bool mu_filling_found = false;    // and appears among the enumerated fillings
  bool nu_filling_valid = false;    // even case only; odd case uses nu_positive
  bool nu_filling_found = false;
  bool nu_positive = false;         // enumerator confirms the nu coefficient > 0
  bool pass = false;
  LRConfiguration mu_filling() const;
  LRConfiguration nu_filling() const;  // even case only

 private:
  friend RecipeReport verify_recipe_fillings(int q, int x, int y);
  std::vector<int> mu_values_, nu_values_;
};

RecipeReport verify_recipe_fillings(int q, int x, int y);

}  // namespace sylres
