#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sylres {

// Integer partition with weakly decreasing positive parts.  The empty
// partition (of 0) is valid and serializes as "-".
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Parses "4,3,1" (no spaces) or "-" for the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }                          // sum of parts
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int row) const;                              // 1-based, 0 beyond last row
  int col_length(int col) const;                        // 1-based conjugate part

  Partition conjugate() const;
  bool is_self_conjugate() const;
  bool contains(const Partition& inner) const;          // inner fits inside *this

  std::string to_string() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// A cycle type is a partition of n recording cycle lengths including fixed
// points, interpreted as a conjugacy-class label of the symmetric group.
using CycleType = Partition;

struct PartitionHash {
  std::size_t operator()(const Partition& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : p.parts()) h = h * 1099511628211ull + static_cast<std::size_t>(x + 1);
    return h;
  }
};

// Finite sequence of positive integers in arbitrary order.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  // "*" reordering: sort decreasingly, drop nothing (parts are already > 0).
  Partition sorted() const;

 private:
  std::vector<int> parts_;
};

// One cell of a Young diagram together with its hook data.  row/col are
// 1-based.  length = arm + leg + 1.
struct HookData {
  int row = 0;
  int col = 0;
  int length = 0;
  int leg = 0;
  int arm() const { return length - leg - 1; }
};

// Skew diagram outer/inner with inner contained in outer.
struct SkewShape {
  Partition outer;
  Partition inner;
  SkewShape(Partition out, Partition in);
  int size() const { return outer.n() - inner.n(); }
  // Cells (row, col), 1-based, rows top to bottom, columns left to right.
  std::vector<std::pair<int, int>> cells() const;
};

struct CoreQuotient {
  Partition core;
  std::vector<Partition> quotient;  // indexed by beta-number residue 0..e-1
  int weight = 0;
};

struct PadicDigit {
  int exponent = 0;  // power of p
  int coeff = 0;     // 1..p-1
};

struct PadicExpansion {
  int prime = 0;
  std::vector<PadicDigit> digits;  // exponents strictly decreasing
  long long value() const;
};

std::vector<HookData> hooks(const Partition& lam);
std::vector<HookData> hooks_divisible(const Partition& lam, int e);
int hook_length(const Partition& lam, int row, int col);

// Removes the rim hook determined by the hook at (row, col); returns the
// smaller partition and the leg length of the removed rim hook.
std::pair<Partition, int> remove_rim_hook(const Partition& lam, int row, int col);

CoreQuotient core_quotient(const Partition& lam, int e);

PadicExpansion p_adic(long long n, int p);

// True for (n - x, 1^x) shapes, including (1); false for the empty partition.
bool is_hook_partition(const Partition& lam);

// Halving map on partitions of even size: odd parts 2k+1 are listed as k+1
// for the first half (by descending size) and k for the second half, even
// parts 2r become r; zeros are dropped and the result is sorted.
Partition delta2(const Partition& lam);

// The partition (q-x+1, q-y, 2^(x-1), 1^(y-x+1)) of 2q; q must be a power of
// two, 1 <= x <= q-1 and x-1 <= y <= q-2.
Partition two_hook_shape(int q, int x, int y);

struct MuNu {
  bool even_case = false;  // s = y - (x-1) even
  Partition mu;
  Partition nu;
};

// Companion pair of subshapes attached to two_hook_shape(q, x, y).
MuNu mu_nu_constructions(int q, int x, int y);

// (total - ones, 1^ones); requires total >= ones + 1.
Partition hook_shape(int total, int ones);

// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

}  // namespace sylres
