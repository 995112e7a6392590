#pragma once

#include "sylres/algebraic.hpp"
#include "sylres/partition.hpp"

namespace sylres {

Int factorial(int n);
// Order of the centralizer of an element of this cycle type (the z-number).
Int centralizer_order_symmetric(const CycleType& type);
// +1 for even permutations, -1 for odd ones.
int type_parity(const CycleType& type);

// Irreducible degree via the hook length formula.
Int degree(const Partition& lam);

// p-adic valuation of degree(lam): v_p(n!) - sum of v_p over hook lengths.
int nu_p_degree(const Partition& lam, int p);

// Character value chi^lam on the class of the given cycle type, by rim hook
// removal on the largest remaining part.  Memoized process-wide; safe to call
// concurrently.
Int mn_value(const Partition& lam, const CycleType& type);

// Character value on a class consisting of w cycles of length e together
// with an arbitrary type gamma on the remaining points.  Requires
// w >= e-weight(lam); the value is 0 for w strictly above the weight and
// +-multinomial * chi^core(gamma) * prod of quotient degrees at equality,
// with the sign settled by delegating to mn_value.
Int ecycle_products_value(const Partition& lam, int e, int w, const CycleType& gamma);

// True iff degree(lam) is odd, decided by the binary-digit recursion
// (a unique removable hook of size 2^k for the leading digit, then recurse);
// deliberately does not consult nu_p_degree so the two routes stay
// independent.
bool is_odd_degree(const Partition& lam);

// Number of odd-degree irreducible characters of S_n predicted by the
// product over binary digits of n: prod 2^k over digits 2^k present.
Int odd_degree_count_predicted(int n);

// Data of the symmetric-group class that splits under the alternating group
// for a self-conjugate shape: the diagonal hook lengths.
struct SplitClassData {
  std::vector<int> diagonal_hooks;  // strictly decreasing, all odd
  int epsilon = 1;                  // (-1)^((n-d)/2)
  long long radicand = 1;           // epsilon * product of diagonal hooks
  CycleType type() const;
  int d() const { return static_cast<int>(diagonal_hooks.size()); }
};

SplitClassData split_class(const Partition& lam);

enum class AnSign { plus, minus };

// Value of the alternating-group constituent of chi^lam on an even class.
// For lam != lam' the sign is ignored and the value is mn_value.  For
// self-conjugate lam the class must carry a split_label on the splitting
// type: +1 for the class of the canonical representative (cycles filled with
// consecutive points in decreasing length order), -1 for its twin.
AlgebraicValue an_value(const Partition& lam, AnSign sign, const CycleType& type,
                        int split_label = 0);

// Clears the process-wide character value memo (used by benchmarks).
void clear_character_memo();

}  // namespace sylres
