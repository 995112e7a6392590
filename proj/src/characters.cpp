#include "sylres/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace sylres {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int centralizer_order_symmetric(const CycleType& type) {
  Int z = 1;
  std::map<int, int> mult;
  for (int p : type.parts()) ++mult[p];
  for (auto [len, m] : mult) {
    for (int i = 0; i < m; ++i) z *= len;
    z *= factorial(m);
  }
  return z;
}

int type_parity(const CycleType& type) {
  int even_cycles = 0;
  for (int p : type.parts())
    if (p % 2 == 0) ++even_cycles;
  return even_cycles % 2 ? -1 : 1;
}

Int degree(const Partition& lam) {
  Int num = factorial(lam.n());
  Int den = 1;
  for (const HookData& h : hooks(lam)) den *= h.length;
  Int q = num / den;
  if (q * den != num) throw std::logic_error("hook product does not divide n!");
  return q;
}

int nu_p_degree(const Partition& lam, int p) {
  if (p < 2) throw std::invalid_argument("prime must be >= 2");
  long long n = lam.n();
  long long nu_fact = 0;
  for (long long q = p; q <= n; q *= p) nu_fact += n / q;
  long long nu_hooks = 0;
  for (const HookData& h : hooks(lam)) {
    int len = h.length;
    while (len % p == 0) {
      ++nu_hooks;
      len /= p;
    }
  }
  return static_cast<int>(nu_fact - nu_hooks);
}

namespace {

struct MemoKey {
  std::vector<int> lam;
  std::vector<int> type;
  bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    std::size_t h = 0x2545f4914f6cdd1dull;
    for (int x : k.lam) h = h * 1099511628211ull + static_cast<std::size_t>(x + 1);
    h ^= 0x9e3779b97f4a7c15ull;
    for (int x : k.type) h = h * 1099511628211ull + static_cast<std::size_t>(x + 1);
    return h;
  }
};

// Sharded insert-if-absent memo; concurrent writers may race on the same key
// but always store identical values.
class MnMemo {
 public:
  bool lookup(const MemoKey& k, Int* out) {
    Shard& s = shard(k);
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.map.find(k);
    if (it == s.map.end()) return false;
    *out = it->second;
    return true;
  }
  void store(const MemoKey& k, const Int& v) {
    Shard& s = shard(k);
    std::lock_guard<std::mutex> lock(s.mu);
    s.map.emplace(k, v);
  }
  void clear() {
    for (Shard& s : shards_) {
      std::lock_guard<std::mutex> lock(s.mu);
      s.map.clear();
    }
  }

 private:
  struct Shard {
    std::mutex mu;
    std::unordered_map<MemoKey, Int, MemoKeyHash> map;
  };
  Shard& shard(const MemoKey& k) { return shards_[MemoKeyHash{}(k) & 15]; }
  Shard shards_[16];
};

MnMemo& memo() {
  static MnMemo m;
  return m;
}

Int mn_rec(const Partition& lam, const std::vector<int>& type, std::size_t at) {
  if (lam.n() == 0) return 1;
  MemoKey key{lam.parts(), std::vector<int>(type.begin() + at, type.end())};
  Int cached;
  if (memo().lookup(key, &cached)) return cached;

  int piece = type[at];
  Int total = 0;
  Partition conj = lam.conjugate();
  for (int r = 1; r <= lam.rows(); ++r) {
    for (int c = 1; c <= lam.parts()[r - 1]; ++c) {
      int len = (lam.parts()[r - 1] - c) + (conj.parts()[c - 1] - r) + 1;
      if (len != piece) continue;
      auto [rest, leg] = remove_rim_hook(lam, r, c);
      Int sub = mn_rec(rest, type, at + 1);
      if (leg % 2)
        total -= sub;
      else
        total += sub;
    }
  }
  memo().store(key, total);
  return total;
}

}  // namespace

Int mn_value(const Partition& lam, const CycleType& type) {
  if (lam.n() != type.n())
    throw std::invalid_argument("partition and cycle type have different sizes");
  return mn_rec(lam, type.parts(), 0);
}

void clear_character_memo() { memo().clear(); }

Int ecycle_products_value(const Partition& lam, int e, int w, const CycleType& gamma) {
  if (e < 2) throw std::invalid_argument("cycle length must be >= 2");
  if (lam.n() != e * w + gamma.n())
    throw std::invalid_argument("partition and cycle data have different sizes");
  CoreQuotient cq = core_quotient(lam, e);
  if (w < cq.weight) throw std::invalid_argument("lemma hypothesis violated");
  if (w > cq.weight) return 0;

  Int magnitude = factorial(w);
  for (const Partition& q : cq.quotient) magnitude /= factorial(q.n());
  for (const Partition& q : cq.quotient) magnitude *= degree(q);
  Int core_val = mn_value(cq.core, gamma);
  magnitude *= boost::multiprecision::abs(core_val);

  // Settle the sign (and audit the magnitude) against the plain recursion.
  std::vector<int> merged(static_cast<std::size_t>(w), e);
  merged.insert(merged.end(), gamma.parts().begin(), gamma.parts().end());
  std::sort(merged.begin(), merged.end(), std::greater<int>());
  Int direct = mn_value(lam, CycleType(std::move(merged)));
  if (boost::multiprecision::abs(direct) != magnitude)
    throw std::logic_error("cycle-product magnitude disagrees with recursion");
  return direct;
}

bool is_odd_degree(const Partition& lam) {
  Partition cur = lam;
  while (cur.n() > 0) {
    int top = 1;
    while (2 * top <= cur.n()) top *= 2;
    const Partition conj = cur.conjugate();
    int found_row = 0, found_col = 0, count = 0;
    for (int r = 1; r <= cur.rows() && count < 2; ++r) {
      for (int c = 1; c <= cur.parts()[r - 1]; ++c) {
        int len = (cur.parts()[r - 1] - c) + (conj.parts()[c - 1] - r) + 1;
        if (len == top) {
          ++count;
          found_row = r;
          found_col = c;
        }
      }
    }
    if (count != 1) return false;
    cur = remove_rim_hook(cur, found_row, found_col).first;
  }
  return true;
}

Int odd_degree_count_predicted(int n) {
  Int count = 1;
  for (const PadicDigit& d : p_adic(n, 2).digits)
    count <<= d.exponent;  // factor 2^k per binary digit 2^k
  return count;
}

CycleType SplitClassData::type() const { return CycleType(diagonal_hooks); }

SplitClassData split_class(const Partition& lam) {
  if (!lam.is_self_conjugate()) throw std::invalid_argument("not self-conjugate");
  SplitClassData out;
  for (int i = 1; i <= lam.rows(); ++i) {
    if (lam.part(i) < i) break;
    out.diagonal_hooks.push_back(2 * (lam.part(i) - i) + 1);
  }
  int d = out.d();
  out.epsilon = ((lam.n() - d) / 2) % 2 ? -1 : 1;
  long long prod = 1;
  for (int h : out.diagonal_hooks) prod *= h;
  out.radicand = out.epsilon * prod;
  return out;
}

AlgebraicValue an_value(const Partition& lam, AnSign sign, const CycleType& type,
                        int split_label) {
  if (lam.n() != type.n())
    throw std::invalid_argument("partition and cycle type have different sizes");
  if (type_parity(type) != 1) throw std::invalid_argument("not an A_n class");
  if (!lam.is_self_conjugate()) return AlgebraicValue::integer(mn_value(lam, type));

  SplitClassData sc = split_class(lam);
  if (type != sc.type())
    return AlgebraicValue::rational(Rat(mn_value(lam, type)) / 2);

  if (split_label != 1 && split_label != -1)
    throw std::invalid_argument("split class requires a +-1 label");
  int orient = (sign == AnSign::plus ? 1 : -1) * split_label;
  AlgebraicValue v = AlgebraicValue::rational(Rat(sc.epsilon) / 2);
  v += AlgebraicValue::surd(Rat(orient) / 2, sc.radicand);
  return v;
}

}  // namespace sylres
