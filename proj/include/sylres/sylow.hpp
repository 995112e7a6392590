#pragma once

#include "sylres/algebraic.hpp"
#include "sylres/perm.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sylres {

// ---------------------------------------------------------------------------
// Block decomposition.  The Sylow p-subgroup of S_n is modeled as the direct
// product, over the p-adic digits of n, of iterated wreath products of C_p,
// each acting on a run of consecutive points.  Blocks are stored largest
// first, matching the digit order of p_adic().
// ---------------------------------------------------------------------------

struct SylowBlock {
  int offset = 0;  // first point of the block, 0-based
  int level = 0;   // block size is p^level
  int size = 1;
};

struct SylowStructure {
  int n = 0;
  int p = 2;
  std::vector<SylowBlock> blocks;

  static SylowStructure of(int n, int p);
};

// Level-i generator on the block starting at `offset`, embedded in S_n:
// the product over t < p^i of the p-cycles
//   (offset+t, offset+t+p^i, ..., offset+t+(p-1)p^i).
// Levels i = 0..level-1 together generate the wreath tower on a block of
// size p^level.
Perm block_generator(int n, int offset, int p, int i);

// Generators of the full Sylow p-subgroup: all block generators.
std::vector<Perm> sylow_generators(int n, int p);

// gamma(2^k) = product of the level-1..k-1 generators on a single block of
// size 2^k; cycle type (2^{k-1}, 2^{k-1}), an even permutation.  gamma(2)
// is the identity.
Perm gamma(int two_k);

// omega2(2^k) = level-0 generator times gamma: a 2^k-cycle (odd for k >= 1).
Perm omega2(int two_k);

// Product over all blocks of the full-block p^level-cycle: cycle type is one
// part p^level per block.  omega_padic(12, 3) has type (9, 3).
Perm omega_padic(int n, int p);
Perm block_cycle(int n, int offset, int p, int level);

// ---------------------------------------------------------------------------
// Wreath coordinates on one block.  A node of level k >= 1 carries a top
// cyclic shift c mod p and p children of level k-1; the element maps
// (child j, point o) -> (child j+c mod p, child_j(o)).  Leaves are level 0.
// ---------------------------------------------------------------------------

struct WreathElement {
  int p = 2;
  int level = 0;
  int shift = 0;                       // meaningful for level >= 1
  std::vector<WreathElement> children;  // p children unless level == 0

  bool is_leaf() const { return level == 0; }
};

// Coordinates of a permutation of p^k points; throws invalid_argument
// "not decomposable" when g does not respect the block tree (equivalently,
// g lies outside the Sylow subgroup of S_{p^k}).
WreathElement wreath_coords(const Perm& g, int p);

// Inverse of wreath_coords.
Perm perm_of(const WreathElement& w);

// Entry j-1 is the sum mod p of the shifts over all level-j nodes,
// j = 1..level.  Each entry is a homomorphism to C_p; together they are the
// abelianization coordinates of the wreath tower.
std::vector<int> shift_sums(const WreathElement& w);

// Per-block coordinates of an element of the full Sylow subgroup; throws
// "not decomposable" if g moves a point across blocks.
std::vector<WreathElement> sylow_coords(const Perm& g, const SylowStructure& st);

bool in_sylow(const Perm& g, const SylowStructure& st);

// ---------------------------------------------------------------------------
// Distinguished vanishing type.  For n with binary digits
// 2^{n_1} > ... > 2^{n_t} (> 1) plus an optional final 1, t >= 2, and an
// even-degree lam |- n, returns the cycle type
//   t even:                    (2^{n_1}, 2^{n_2}, ..., 2^{n_t})
//   t odd, lam its own 2^{n_1}-core:  (2^{n_1}, 2^{n_2-1}, 2^{n_2-1}, 2^{n_3}, ...)
//   t odd otherwise:           (2^{n_1-1}, 2^{n_1-1}, 2^{n_2}, ...)
// with 1s appended for the final binary digit.  The type is always even and
// realizable inside the Sylow 2-subgroup.  Throws domain_error
// "parameters outside range" when t < 2 or the degree is odd.
CycleType construct_g_lambda(const Partition& lam, int n, int p = 2);

// Some permutation of the given cycle type inside the Sylow p-subgroup of
// S_n, by packing each part (a p-power) into the block subdivision, largest
// parts first.  Throws domain_error "parameters outside range" when a part
// is not a p-power or the parts do not pack.
Perm realize_in_sylow(const CycleType& type, int n, int p);

// ---------------------------------------------------------------------------
// Explicit element lists.
// ---------------------------------------------------------------------------

struct EnumeratedGroup {
  std::string name;
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // breadth-first from the identity
  std::unordered_map<Perm, int, PermHash> index;

  // Breadth-first closure of the generators; throws BudgetError once more
  // than `budget` elements appear.
  static EnumeratedGroup closure(int degree, std::vector<Perm> gens,
                                 std::size_t budget, std::string name);

  std::size_t size() const { return elements.size(); }
  bool contains(const Perm& g) const { return index.count(g) != 0; }
  // Position in the element list, or -1.
  int index_of(const Perm& g) const;
};

EnumeratedGroup enumerate_sylow(int n, int p, std::size_t budget);

// The even part P cap A_n.  For p = 2 (and n >= 2) this has index 2 and its
// generator list comes from the two-coset Schreier rewrite {s, tst^-1 : s
// even} u {st^-1, ts : s odd} with t the first odd generator; when P has no
// odd generators the group is returned unchanged apart from the name.
EnumeratedGroup even_part(const EnumeratedGroup& sylow);

// Derived subgroup: closure of the generator commutators under conjugation
// by the group's generators.
EnumeratedGroup derived_subgroup(const EnumeratedGroup& group, std::size_t budget);

// |{h in G : hg = gh}| by direct scan; throws invalid_argument when g is
// not listed.
Int centralizer_order(const EnumeratedGroup& group, const Perm& g);

// Odd element of cycle type ((p-1)^{p^{k-1}}, 1^{...}) normalizing the given
// Sylow subgroup (p odd, largest block p^k), found by exhaustive search over
// that type; nullopt when none exists.
std::optional<Perm> find_odd_normalizing_element(const EnumeratedGroup& sylow,
                                                 const SylowStructure& st);

// ---------------------------------------------------------------------------
// Linear characters.
// ---------------------------------------------------------------------------

// The linear characters of the Sylow subgroup: one per choice of a residue
// mod p for every wreath level of every block.  theta(g) = zeta_p^(v . e(g))
// where e(g) concatenates the per-block shift sums.  Labels render each
// block as its digit string (finest level first), "-" for one-point blocks,
// blocks joined by "|".
class PLinearCharacters {
 public:
  static PLinearCharacters build(const SylowStructure& st);

  std::size_t count() const { return digits_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<int>& digits(std::size_t i) const { return digits_[i]; }
  const SylowStructure& structure() const { return st_; }
  std::size_t slot_count() const { return slots_; }

  // Concatenated shift sums of g (length slot_count()); throws
  // "not decomposable" for elements outside the Sylow subgroup.
  std::vector<int> exponent_vector(const Perm& g) const;
  // zeta_p exponent of character i against a precomputed exponent vector.
  int pairing(std::size_t i, const std::vector<int>& evec) const;
  AlgebraicValue value(std::size_t i, const Perm& g) const;

 private:
  SylowStructure st_;
  std::size_t slots_ = 0;
  std::vector<std::vector<int>> digits_;  // one digit vector per character
  std::vector<std::string> labels_;
};

// The linear characters of an enumerated group, via its abelianization: the
// derived subgroup is computed explicitly, elements are labeled by coset,
// and the dual of the quotient is built generator by generator.  Values are
// roots of unity of order dividing the quotient exponent.
class QLinearCharacters {
 public:
  static QLinearCharacters build(const EnumeratedGroup& group, std::size_t budget);

  std::size_t count() const { return tables_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  long long modulus() const { return modulus_; }
  std::size_t coset_count() const { return coset_reps_.size(); }
  const Perm& coset_rep(int c) const { return coset_reps_[c]; }

  // Coset id of g in group/derived; throws invalid_argument when g is not
  // in the group.
  int coset_of(const Perm& g) const;
  int exponent_at_coset(std::size_t i, int coset) const;
  AlgebraicValue value(std::size_t i, const Perm& g) const;

 private:
  const EnumeratedGroup* group_ = nullptr;
  long long modulus_ = 1;
  std::vector<int> coset_of_;          // element index -> coset id
  std::vector<Perm> coset_reps_;       // first element of each coset
  std::vector<std::vector<int>> tables_;  // character -> exponent per coset
  std::vector<std::string> labels_;
};

// For each character of `from`, the index in `to` of its restriction to
// to's group (compared on coset representatives); throws logic_error if a
// restriction is missing from `to`, which would mean one of the two
// character lists is wrong.
std::vector<std::size_t> restriction_map(const PLinearCharacters& from,
                                         const QLinearCharacters& to);

}  // namespace sylres
