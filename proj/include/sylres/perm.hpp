#pragma once

#include "sylres/partition.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sylres {

// Permutation of {0, ..., n-1} (1-based in all textual I/O).  Composition is
// left-to-right: a.then(b) applies a first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);  // identity
  static Perm from_images(std::vector<int> images);
  // Cycles given with 1-based points; points not mentioned are fixed.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Perm parse(int n, const std::string& cycle_text);  // "(1 2)(3 4)" or "()"

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Perm then(const Perm& next) const;  // x -> next(this(x))
  Perm inverse() const;
  // Relabel through x: returns x o this o x^-1.
  Perm conjugated_by(const Perm& x) const;

  bool is_identity() const;
  int parity() const;  // +1 even, -1 odd
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, 1-based
  CycleType cycle_type() const;                  // includes fixed points
  std::string to_cycle_string() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }

 private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 14695981039346656037ull;
    for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Commutator a^-1 b^-1 a b.
Perm commutator(const Perm& a, const Perm& b);

// Canonical class representative: cycles of decreasing length on consecutive
// points, e.g. type (3,2) on 5 points -> (1 2 3)(4 5).
Perm canonical_of_type(const CycleType& type);

// For g of a type whose parts are all odd and distinct: +1 if g is
// alternating-conjugate to canonical_of_type(type), -1 otherwise.
int split_orientation(const Perm& g);

}  // namespace sylres
