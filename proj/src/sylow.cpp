#include "sylres/sylow.hpp"

#include "sylres/characters.hpp"
#include "sylres/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace sylres {

namespace {

long long ipow(int p, int e) {
  long long r = 1;
  while (e-- > 0) r *= p;
  return r;
}

// Exponent k with p^k == m, or -1.
int level_of(long long m, int p) {
  int k = 0;
  long long v = 1;
  while (v < m) {
    v *= p;
    ++k;
  }
  return v == m ? k : -1;
}

WreathElement coords_rec(const std::vector<int>& img, int p) {
  WreathElement w;
  w.p = p;
  const int n = static_cast<int>(img.size());
  if (n == 1) return w;
  const int m = n / p;
  w.shift = img[0] / m;
  for (int j = 0; j < p; ++j) {
    const int target = (j + w.shift) % p;
    std::vector<int> child(m);
    for (int o = 0; o < m; ++o) {
      const int y = img[j * m + o];
      if (y / m != target) throw std::invalid_argument("not decomposable");
      child[o] = y % m;
    }
    w.children.push_back(coords_rec(child, p));
  }
  w.level = w.children[0].level + 1;
  return w;
}

void add_shifts(const WreathElement& w, std::vector<int>& acc) {
  if (w.is_leaf()) return;
  acc[w.level - 1] += w.shift;
  for (const WreathElement& c : w.children) add_shifts(c, acc);
}

}  // namespace

SylowStructure SylowStructure::of(int n, int p) {
  if (n < 0 || p < 2) throw std::domain_error("parameters outside range");
  SylowStructure st;
  st.n = n;
  st.p = p;
  int offset = 0;
  for (const PadicDigit& d : p_adic(n, p).digits) {
    const int size = static_cast<int>(ipow(p, d.exponent));
    for (int c = 0; c < d.coeff; ++c) {
      st.blocks.push_back({offset, d.exponent, size});
      offset += size;
    }
  }
  return st;
}

Perm block_generator(int n, int offset, int p, int i) {
  const long long pi = ipow(p, i);
  if (offset < 0 || offset + p * pi > n)
    throw std::domain_error("parameters outside range");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (long long t = 0; t < pi; ++t)
    for (int j = 0; j < p; ++j)
      img[offset + t + j * pi] = offset + static_cast<int>(t + ((j + 1) % p) * pi);
  return Perm::from_images(std::move(img));
}

std::vector<Perm> sylow_generators(int n, int p) {
  std::vector<Perm> gens;
  for (const SylowBlock& b : SylowStructure::of(n, p).blocks)
    for (int i = 0; i < b.level; ++i) gens.push_back(block_generator(n, b.offset, p, i));
  return gens;
}

Perm block_cycle(int n, int offset, int p, int level) {
  Perm g(n);
  for (int i = 0; i < level; ++i) g = g.then(block_generator(n, offset, p, i));
  return g;
}

Perm gamma(int two_k) {
  const int k = level_of(two_k, 2);
  if (k < 0) throw std::domain_error("parameters outside range");
  Perm g(two_k);
  for (int i = 1; i < k; ++i) g = g.then(block_generator(two_k, 0, 2, i));
  return g;
}

Perm omega2(int two_k) {
  const int k = level_of(two_k, 2);
  if (k < 0) throw std::domain_error("parameters outside range");
  return block_cycle(two_k, 0, 2, k);
}

Perm omega_padic(int n, int p) {
  Perm g(n);
  for (const SylowBlock& b : SylowStructure::of(n, p).blocks)
    g = g.then(block_cycle(n, b.offset, p, b.level));
  return g;
}

WreathElement wreath_coords(const Perm& g, int p) {
  if (p < 2) throw std::domain_error("parameters outside range");
  if (level_of(g.degree(), p) < 0) throw std::invalid_argument("not decomposable");
  return coords_rec(g.images(), p);
}

Perm perm_of(const WreathElement& w) {
  if (w.is_leaf()) return Perm(1);
  std::vector<Perm> kids;
  for (const WreathElement& c : w.children) kids.push_back(perm_of(c));
  const int m = kids[0].degree();
  std::vector<int> img(m * w.p);
  for (int j = 0; j < w.p; ++j)
    for (int o = 0; o < m; ++o)
      img[j * m + o] = ((j + w.shift) % w.p) * m + kids[j](o);
  return Perm::from_images(std::move(img));
}

std::vector<int> shift_sums(const WreathElement& w) {
  std::vector<int> acc(w.level, 0);
  add_shifts(w, acc);
  for (int& x : acc) x %= w.p;
  return acc;
}

std::vector<WreathElement> sylow_coords(const Perm& g, const SylowStructure& st) {
  if (g.degree() != st.n) throw std::invalid_argument("not decomposable");
  std::vector<WreathElement> out;
  for (const SylowBlock& b : st.blocks) {
    std::vector<int> img(b.size);
    for (int o = 0; o < b.size; ++o) {
      const int y = g(b.offset + o);
      if (y < b.offset || y >= b.offset + b.size)
        throw std::invalid_argument("not decomposable");
      img[o] = y - b.offset;
    }
    out.push_back(coords_rec(img, st.p));
  }
  return out;
}

bool in_sylow(const Perm& g, const SylowStructure& st) {
  if (g.degree() != st.n) return false;
  try {
    sylow_coords(g, st);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

CycleType construct_g_lambda(const Partition& lam, int n, int p) {
  if (p != 2 || n < 1 || lam.n() != n) throw std::domain_error("parameters outside range");
  if (nu_p_degree(lam, 2) == 0) throw std::domain_error("parameters outside range");
  std::vector<int> high;  // binary exponents above 2^0, decreasing
  for (const PadicDigit& d : p_adic(n, 2).digits)
    if (d.exponent >= 1) high.push_back(d.exponent);
  const int t = static_cast<int>(high.size());
  if (t < 2) throw std::domain_error("parameters outside range");
  std::vector<int> parts;
  if (t % 2 == 0) {
    for (int e : high) parts.push_back(1 << e);
  } else if (core_quotient(lam, 1 << high[0]).core == lam) {
    parts.push_back(1 << high[0]);
    parts.push_back(1 << (high[1] - 1));
    parts.push_back(1 << (high[1] - 1));
    for (int j = 2; j < t; ++j) parts.push_back(1 << high[j]);
  } else {
    parts.push_back(1 << (high[0] - 1));
    parts.push_back(1 << (high[0] - 1));
    for (int j = 1; j < t; ++j) parts.push_back(1 << high[j]);
  }
  if (n % 2 == 1) parts.push_back(1);
  return Partition(std::move(parts));
}

Perm realize_in_sylow(const CycleType& type, int n, int p) {
  if (type.n() != n) throw std::domain_error("parameters outside range");
  std::map<int, std::vector<int>> slots;  // level -> offsets of free slots
  for (const SylowBlock& b : SylowStructure::of(n, p).blocks)
    slots[b.level].push_back(b.offset);
  Perm g(n);
  for (int part : type.parts()) {  // decreasing, so big cycles claim big slots first
    const int lv = level_of(part, p);
    if (lv < 0) throw std::domain_error("parameters outside range");
    auto it = slots.lower_bound(lv);
    if (it == slots.end()) throw std::domain_error("parameters outside range");
    int level = it->first;
    int offset = it->second.back();
    it->second.pop_back();
    if (it->second.empty()) slots.erase(it);
    while (level > lv) {  // split, keeping the leading sub-slot
      --level;
      const int sub = static_cast<int>(ipow(p, level));
      for (int j = 1; j < p; ++j) slots[level].push_back(offset + j * sub);
    }
    if (lv > 0) g = g.then(block_cycle(n, offset, p, lv));
  }
  return g;
}

EnumeratedGroup EnumeratedGroup::closure(int degree, std::vector<Perm> gens,
                                         std::size_t budget, std::string name) {
  EnumeratedGroup g;
  g.name = std::move(name);
  g.degree = degree;
  g.generators = std::move(gens);
  for (const Perm& s : g.generators)
    if (s.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  Perm id(degree);
  g.index.emplace(id, 0);
  g.elements.push_back(std::move(id));
  for (std::size_t at = 0; at < g.elements.size(); ++at) {
    const Perm cur = g.elements[at];  // copy: the vector may reallocate
    for (const Perm& s : g.generators) {
      Perm w = cur.then(s);
      if (g.index.emplace(w, static_cast<int>(g.elements.size())).second) {
        g.elements.push_back(std::move(w));
        if (g.elements.size() > budget)
          throw BudgetError("element budget " + std::to_string(budget) +
                            " exceeded while enumerating " + g.name);
      }
    }
  }
  return g;
}

int EnumeratedGroup::index_of(const Perm& g) const {
  auto it = index.find(g);
  return it == index.end() ? -1 : it->second;
}

EnumeratedGroup enumerate_sylow(int n, int p, std::size_t budget) {
  return EnumeratedGroup::closure(
      n, sylow_generators(n, p), budget,
      "P_" + std::to_string(n) + "[p=" + std::to_string(p) + "]");
}

EnumeratedGroup even_part(const EnumeratedGroup& sylow) {
  EnumeratedGroup q;
  q.degree = sylow.degree;
  q.name = sylow.name.rfind("P_", 0) == 0 ? "Q" + sylow.name.substr(1)
                                          : "even(" + sylow.name + ")";
  const Perm* tau = nullptr;
  for (const Perm& s : sylow.generators)
    if (s.parity() < 0) {
      tau = &s;
      break;
    }
  if (!tau) {
    q.generators = sylow.generators;
    q.elements = sylow.elements;
    q.index = sylow.index;
    return q;
  }
  // Two-coset Schreier generators over the transversal {1, tau}.
  const Perm tinv = tau->inverse();
  std::unordered_set<Perm, PermHash> seen;
  auto add = [&](Perm x) {
    if (!x.is_identity() && seen.insert(x).second) q.generators.push_back(std::move(x));
  };
  for (const Perm& s : sylow.generators) {
    if (s.parity() > 0) {
      add(s);
      add(tau->then(s).then(tinv));
    } else {
      add(s.then(tinv));
      add(tau->then(s));
    }
  }
  for (const Perm& e : sylow.elements)
    if (e.parity() > 0) {
      q.index.emplace(e, static_cast<int>(q.elements.size()));
      q.elements.push_back(e);
    }
  return q;
}

EnumeratedGroup derived_subgroup(const EnumeratedGroup& group, std::size_t budget) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> seen;
  auto add = [&](Perm x) {
    if (x.is_identity() || !seen.insert(x).second) return false;
    gens.push_back(std::move(x));
    return true;
  };
  for (const Perm& a : group.generators)
    for (const Perm& b : group.generators) add(commutator(a, b));
  // Close the generating set under conjugation; conjugation being an
  // automorphism, closing generators suffices for normality.
  while (true) {
    EnumeratedGroup n =
        EnumeratedGroup::closure(group.degree, gens, budget, "derived(" + group.name + ")");
    bool grew = false;
    const std::vector<Perm> snapshot = gens;
    for (const Perm& x : snapshot)
      for (const Perm& g : group.generators) {
        Perm c = x.conjugated_by(g);
        if (!n.contains(c) && add(std::move(c))) grew = true;
      }
    if (!grew) return n;
  }
}

Int centralizer_order(const EnumeratedGroup& group, const Perm& g) {
  if (!group.contains(g)) throw std::invalid_argument("element not in group");
  long long count = 0;
  for (const Perm& h : group.elements)
    if (h.then(g) == g.then(h)) ++count;
  return Int(count);
}

std::optional<Perm> find_odd_normalizing_element(const EnumeratedGroup& sylow,
                                                 const SylowStructure& st) {
  if (st.p == 2 || st.blocks.empty()) return std::nullopt;
  const int n = st.n;
  const long long copies = ipow(st.p, st.blocks[0].level > 0 ? st.blocks[0].level - 1 : 0);
  std::vector<int> target;
  for (long long c = 0; c < copies; ++c) target.push_back(st.p - 1);
  long long rest = n;
  for (int part : target) rest -= part;
  if (rest < 0) return std::nullopt;
  for (long long c = 0; c < rest; ++c) target.push_back(1);
  const Partition want(std::move(target));
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  do {
    Perm cand = Perm::from_images(img);
    if (cand.parity() >= 0 || !(cand.cycle_type() == want)) continue;
    bool normalizes = true;
    for (const Perm& s : sylow.generators)
      if (!sylow.contains(s.conjugated_by(cand))) {
        normalizes = false;
        break;
      }
    if (normalizes) return cand;
  } while (std::next_permutation(img.begin(), img.end()));
  return std::nullopt;
}

PLinearCharacters PLinearCharacters::build(const SylowStructure& st) {
  PLinearCharacters lc;
  lc.st_ = st;
  for (const SylowBlock& b : st.blocks) lc.slots_ += b.level;
  const long long total = ipow(st.p, static_cast<int>(lc.slots_));
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<int> dg(lc.slots_);
    long long r = idx;
    for (int j = static_cast<int>(lc.slots_) - 1; j >= 0; --j) {
      dg[j] = static_cast<int>(r % st.p);
      r /= st.p;
    }
    std::string label;
    std::size_t at = 0;
    for (const SylowBlock& b : st.blocks) {
      if (!label.empty()) label += '|';
      if (b.level == 0) {
        label += '-';
        continue;
      }
      for (int j = 0; j < b.level; ++j) label += static_cast<char>('0' + dg[at++]);
    }
    lc.digits_.push_back(std::move(dg));
    lc.labels_.push_back(std::move(label));
  }
  return lc;
}

std::vector<int> PLinearCharacters::exponent_vector(const Perm& g) const {
  std::vector<int> evec;
  evec.reserve(slots_);
  for (const WreathElement& w : sylow_coords(g, st_))
    for (int e : shift_sums(w)) evec.push_back(e);
  return evec;
}

int PLinearCharacters::pairing(std::size_t i, const std::vector<int>& evec) const {
  int s = 0;
  for (std::size_t j = 0; j < slots_; ++j) s += digits_[i][j] * evec[j];
  return s % st_.p;
}

AlgebraicValue PLinearCharacters::value(std::size_t i, const Perm& g) const {
  return AlgebraicValue::root_of_unity(st_.p, pairing(i, exponent_vector(g)));
}

QLinearCharacters QLinearCharacters::build(const EnumeratedGroup& group, std::size_t budget) {
  QLinearCharacters qc;
  qc.group_ = &group;
  const EnumeratedGroup der = derived_subgroup(group, budget);

  qc.coset_of_.assign(group.size(), -1);
  for (std::size_t e = 0; e < group.size(); ++e) {
    if (qc.coset_of_[e] != -1) continue;
    const int c = static_cast<int>(qc.coset_reps_.size());
    qc.coset_reps_.push_back(group.elements[e]);
    for (const Perm& d : der.elements) {
      const int idx = group.index_of(group.elements[e].then(d));
      if (idx < 0) throw std::logic_error("derived subgroup escapes the group");
      qc.coset_of_[idx] = c;
    }
  }
  const int ncosets = static_cast<int>(qc.coset_reps_.size());
  auto coset_mul = [&](int a, int b) {
    return qc.coset_of_[group.index_of(qc.coset_reps_[a].then(qc.coset_reps_[b]))];
  };
  auto coset_of_perm = [&](const Perm& g) {
    const int idx = group.index_of(g);
    if (idx < 0) throw std::logic_error("generator missing from element list");
    return qc.coset_of_[idx];
  };

  // Exponent of the abelian quotient: lcm of the generator-image orders.
  long long modulus = 1;
  for (const Perm& s : group.generators) {
    const int a = coset_of_perm(s);
    long long ord = 1;
    for (int x = a; x != 0; x = coset_mul(x, a)) ++ord;
    modulus = std::lcm(modulus, ord);
  }
  qc.modulus_ = modulus;

  // Incremental dual: extend the character set one quotient generator at a
  // time.  Adjoining a of relative order d multiplies both the covered
  // subgroup and the character list by d; the extension exponents solve
  // d*y = c (mod modulus) where c is the character's exponent at a^d.
  std::vector<char> covered(ncosets, 0);
  covered[0] = 1;
  std::vector<int> korder{0};
  std::vector<std::vector<int>> tabs{std::vector<int>(ncosets, 0)};
  for (const Perm& s : group.generators) {
    const int a = coset_of_perm(s);
    if (covered[a]) continue;
    std::vector<int> pows;  // a^1 .. a^{d-1}
    int x = a;
    while (!covered[x]) {
      pows.push_back(x);
      x = coset_mul(x, a);
    }
    const long long d = static_cast<long long>(pows.size()) + 1;
    std::vector<std::vector<int>> grown;
    for (const std::vector<int>& tab : tabs) {
      const long long c = tab[x];
      if (modulus % d != 0 || c % d != 0)
        throw std::logic_error("abelian dual extension failed");
      for (long long j = 0; j < d; ++j) {
        const long long y = (c / d + j * (modulus / d)) % modulus;
        std::vector<int> t = tab;
        for (int k : korder)
          for (long long i = 1; i <= d - 1; ++i)
            t[coset_mul(k, pows[i - 1])] = static_cast<int>((t[k] + i * y) % modulus);
        grown.push_back(std::move(t));
      }
    }
    tabs = std::move(grown);
    const std::vector<int> base = korder;
    for (int k : base)
      for (const int pw : pows) {
        const int nk = coset_mul(k, pw);
        if (covered[nk]) throw std::logic_error("abelian dual extension failed");
        covered[nk] = 1;
        korder.push_back(nk);
      }
  }
  if (static_cast<int>(tabs.size()) != ncosets)
    throw std::logic_error("abelian dual is incomplete");

  std::sort(tabs.begin(), tabs.end());
  qc.tables_ = std::move(tabs);
  for (std::size_t i = 0; i < qc.tables_.size(); ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "q%02zu", i);
    qc.labels_.push_back(buf);
  }
  return qc;
}

int QLinearCharacters::coset_of(const Perm& g) const {
  const int idx = group_->index_of(g);
  if (idx < 0) throw std::invalid_argument("element not in group");
  return coset_of_[idx];
}

int QLinearCharacters::exponent_at_coset(std::size_t i, int coset) const {
  return tables_[i][coset];
}

AlgebraicValue QLinearCharacters::value(std::size_t i, const Perm& g) const {
  return AlgebraicValue::root_of_unity(static_cast<int>(modulus_),
                                       tables_[i][coset_of(g)]);
}

std::vector<std::size_t> restriction_map(const PLinearCharacters& from,
                                         const QLinearCharacters& to) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < from.count(); ++i) {
    std::size_t found = to.count();
    for (std::size_t j = 0; j < to.count() && found == to.count(); ++j) {
      bool same = true;
      for (std::size_t c = 0; c < to.coset_count() && same; ++c) {
        const Perm& rep = to.coset_rep(static_cast<int>(c));
        same = from.value(i, rep).equals(to.value(j, rep));
      }
      if (same) found = j;
    }
    if (found == to.count())
      throw std::logic_error("restriction is not in the computed character list");
    out.push_back(found);
  }
  return out;
}

}  // namespace sylres
