#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sylres/characters.hpp"
#include "sylres/errors.hpp"
#include "sylres/sylow.hpp"

#include <algorithm>
#include <set>

using namespace sylres;

namespace {

constexpr std::size_t kBudget = std::size_t(1) << 20;

int nu_p_factorial(int n, int p) {
  int v = 0;
  for (long long q = p; q <= n; q *= p) v += n / int(q);
  return v;
}

Int int_pow(int b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("block decomposition follows the p-adic digits") {
  const SylowStructure s12 = SylowStructure::of(12, 3);
  REQUIRE(s12.blocks.size() == 2);
  CHECK(s12.blocks[0].offset == 0);
  CHECK(s12.blocks[0].size == 9);
  CHECK(s12.blocks[0].level == 2);
  CHECK(s12.blocks[1].offset == 9);
  CHECK(s12.blocks[1].size == 3);
  const SylowStructure s16 = SylowStructure::of(16, 2);
  REQUIRE(s16.blocks.size() == 1);
  CHECK(s16.blocks[0].level == 4);
  const SylowStructure s13 = SylowStructure::of(13, 2);
  REQUIRE(s13.blocks.size() == 3);
  CHECK(s13.blocks[2].size == 1);
  // blocks tile [0, n)
  for (int n = 1; n <= 30; ++n)
    for (int p : {2, 3, 5}) {
      int at = 0;
      for (const SylowBlock& b : SylowStructure::of(n, p).blocks) {
        CHECK(b.offset == at);
        at += b.size;
      }
      CHECK(at == n);
    }
}

TEST_CASE("enumerated orders match the valuation of n factorial") {
  for (int n = 1; n <= 13; ++n)
    CHECK(enumerate_sylow(n, 2, kBudget).size() == int_pow(2, nu_p_factorial(n, 2)));
  CHECK(enumerate_sylow(16, 2, kBudget).size() == 32768);
  for (int n = 1; n <= 9; ++n)
    CHECK(enumerate_sylow(n, 3, kBudget).size() == int_pow(3, nu_p_factorial(n, 3)));
  for (int n = 1; n <= 10; ++n)
    CHECK(enumerate_sylow(n, 5, kBudget).size() == int_pow(5, nu_p_factorial(n, 5)));
}

TEST_CASE("closure respects its budget") {
  CHECK_THROWS_AS(enumerate_sylow(16, 2, 100), BudgetError);
}

TEST_CASE("distinguished elements") {
  CHECK(gamma(2).is_identity());
  CHECK(gamma(4).cycle_type() == Partition::parse("2,2"));
  CHECK(gamma(8).cycle_type() == Partition::parse("4,4"));
  CHECK(gamma(16).cycle_type() == Partition::parse("8,8"));
  CHECK(omega2(2).cycle_type() == Partition::parse("2"));
  CHECK(omega2(16).cycle_type() == Partition::parse("16"));
  for (int two_k : {2, 4, 8, 16}) {
    CHECK(gamma(two_k).parity() == 1);
    if (two_k >= 2) CHECK(omega2(two_k).parity() == -1);
  }
  CHECK(omega_padic(12, 3).cycle_type() == Partition::parse("9,3"));
  CHECK(omega_padic(13, 2).cycle_type() == Partition::parse("8,4,1"));
  // they live in the Sylow subgroup
  const SylowStructure st = SylowStructure::of(16, 2);
  CHECK(in_sylow(gamma(16), st));
  CHECK(in_sylow(omega2(16), st));
}

TEST_CASE("wreath coordinates round trip") {
  const EnumeratedGroup P = enumerate_sylow(8, 2, kBudget);
  CHECK(P.size() == 128);
  for (const Perm& g : P.elements) {
    const WreathElement w = wreath_coords(g, 2);
    CHECK(perm_of(w) == g);
    CHECK(shift_sums(w).size() == 3);
  }
  // shift sums are a homomorphism onto C_2^3
  const Perm a = P.elements[P.size() / 3];
  const Perm b = P.elements[P.size() / 2];
  const auto sa = shift_sums(wreath_coords(a, 2));
  const auto sb = shift_sums(wreath_coords(b, 2));
  const auto sab = shift_sums(wreath_coords(a.then(b), 2));
  for (int j = 0; j < 3; ++j) CHECK(sab[j] == (sa[j] + sb[j]) % 2);
}

TEST_CASE("coordinates reject elements outside the tower") {
  CHECK_THROWS_WITH(wreath_coords(Perm::parse(4, "(1 3)"), 2), "not decomposable");
  const SylowStructure st = SylowStructure::of(6, 2);
  CHECK_THROWS_WITH(sylow_coords(Perm::parse(6, "(4 5 6)"), st), "not decomposable");
  CHECK_FALSE(in_sylow(Perm::parse(6, "(4 5 6)"), st));
  CHECK(in_sylow(Perm::parse(6, "(1 2)(5 6)"), st));
}

TEST_CASE("shift sums of the distinguished elements") {
  CHECK(shift_sums(wreath_coords(gamma(8), 2)) == std::vector<int>{0, 1, 1});
  CHECK(shift_sums(wreath_coords(omega2(8), 2)) == std::vector<int>{1, 1, 1});
  CHECK(shift_sums(wreath_coords(block_generator(8, 0, 2, 0), 2)) == std::vector<int>{1, 0, 0});
}

TEST_CASE("linear characters of the tower") {
  const PLinearCharacters l16 = PLinearCharacters::build(SylowStructure::of(16, 2));
  CHECK(l16.count() == 16);
  CHECK(l16.slot_count() == 4);
  const PLinearCharacters l12 = PLinearCharacters::build(SylowStructure::of(12, 2));
  CHECK(l12.count() == 32);
  CHECK(l12.slot_count() == 5);
  const PLinearCharacters l4 = PLinearCharacters::build(SylowStructure::of(4, 2));
  REQUIRE(l4.count() == 4);
  std::set<std::string> labels;
  for (std::size_t i = 0; i < 4; ++i) labels.insert(l4.label(i));
  CHECK(labels == std::set<std::string>{"00", "01", "10", "11"});
  const PLinearCharacters l5 = PLinearCharacters::build(SylowStructure::of(5, 2));
  CHECK(l5.count() == 4);
  std::set<std::string> labels5;
  for (std::size_t i = 0; i < 4; ++i) labels5.insert(l5.label(i));
  CHECK(labels5 == std::set<std::string>{"00|-", "01|-", "10|-", "11|-"});
  const PLinearCharacters l12p3 = PLinearCharacters::build(SylowStructure::of(12, 3));
  CHECK(l12p3.count() == 27);
}

TEST_CASE("linear character values multiply") {
  const SylowStructure st = SylowStructure::of(8, 2);
  const PLinearCharacters lin = PLinearCharacters::build(st);
  const EnumeratedGroup P = enumerate_sylow(8, 2, kBudget);
  for (std::size_t i = 0; i < lin.count(); ++i)
    for (std::size_t ai = 0; ai < P.size(); ai += 17)
      for (std::size_t bi = 0; bi < P.size(); bi += 29) {
        const Perm& a = P.elements[ai];
        const Perm& b = P.elements[bi];
        CHECK(lin.value(i, a.then(b)).equals(lin.value(i, a) * lin.value(i, b)));
      }
  // pairing against the exponent vector matches value
  const Perm g = omega2(8);
  const auto evec = lin.exponent_vector(g);
  for (std::size_t i = 0; i < lin.count(); ++i) {
    const int e = lin.pairing(i, evec);
    CHECK(lin.value(i, g).equals(AlgebraicValue::root_of_unity(2, e)));
  }
}

TEST_CASE("even part has index two") {
  for (int n = 2; n <= 12; ++n) {
    const EnumeratedGroup P = enumerate_sylow(n, 2, kBudget);
    const EnumeratedGroup Q = even_part(P);
    CHECK(P.size() == 2 * Q.size());
    for (const Perm& g : Q.elements) CHECK(g.parity() == 1);
  }
  // odd p: every element is already even
  const EnumeratedGroup P9 = enumerate_sylow(9, 3, kBudget);
  const EnumeratedGroup Q9 = even_part(P9);
  CHECK(Q9.size() == P9.size());
}

TEST_CASE("the even part of the tower on four points is the klein group") {
  const EnumeratedGroup Q = even_part(enumerate_sylow(4, 2, kBudget));
  REQUIRE(Q.size() == 4);
  std::set<std::string> els;
  for (const Perm& g : Q.elements) els.insert(g.to_cycle_string());
  CHECK(els == std::set<std::string>{"()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"});
  CHECK(Q.contains(gamma(4)));
  CHECK_FALSE(Q.contains(omega2(4)));
}

TEST_CASE("derived subgroup sizes against the abelianization") {
  for (int n = 2; n <= 13; ++n) {
    const EnumeratedGroup P = enumerate_sylow(n, 2, kBudget);
    const PLinearCharacters lin = PLinearCharacters::build(SylowStructure::of(n, 2));
    const EnumeratedGroup D = derived_subgroup(P, kBudget);
    CHECK(D.size() * lin.count() == P.size());
  }
  const EnumeratedGroup Q4 = even_part(enumerate_sylow(4, 2, kBudget));
  CHECK(derived_subgroup(Q4, kBudget).size() == 1);
}

TEST_CASE("centralizer orders of the distinguished elements") {
  for (int k = 1; k <= 3; ++k) {
    const int n = 1 << k;
    const EnumeratedGroup P = enumerate_sylow(n, 2, kBudget);
    CHECK(centralizer_order(P, gamma(n)) == n);
    CHECK(centralizer_order(P, omega2(n)) == n);
  }
  CHECK_THROWS_AS(
      centralizer_order(enumerate_sylow(4, 2, kBudget), Perm::parse(4, "(1 2 3)")),
      std::invalid_argument);
}

TEST_CASE("quotient characters of the even part") {
  const EnumeratedGroup Q4 = even_part(enumerate_sylow(4, 2, kBudget));
  const QLinearCharacters lq = QLinearCharacters::build(Q4, kBudget);
  CHECK(lq.count() == 4);
  CHECK(lq.coset_count() == 4);
  CHECK(lq.modulus() == 2);
  CHECK(lq.label(0) == "q00");
  CHECK(lq.label(3) == "q03");
  // orthogonality over the group
  for (std::size_t i = 0; i < lq.count(); ++i)
    for (std::size_t j = 0; j < lq.count(); ++j) {
      AlgebraicValue s;
      for (const Perm& g : Q4.elements) s += lq.value(i, g) * lq.value(j, g).conj();
      Int v;
      CHECK(s.is_rational_integer(&v));
      CHECK(v == (i == j ? Int(Q4.size()) : Int(0)));
    }
}

TEST_CASE("restriction of tower characters to the even part") {
  for (int n : {4, 5, 6, 8, 10}) {
    const EnumeratedGroup P = enumerate_sylow(n, 2, kBudget);
    const EnumeratedGroup Q = even_part(P);
    const PLinearCharacters lp = PLinearCharacters::build(SylowStructure::of(n, 2));
    const QLinearCharacters lq = QLinearCharacters::build(Q, kBudget);
    const std::vector<std::size_t> map = restriction_map(lp, lq);
    REQUIRE(map.size() == lp.count());
    for (std::size_t i = 0; i < lp.count(); ++i)
      for (std::size_t c = 0; c < lq.coset_count(); ++c) {
        const Perm& g = lq.coset_rep(int(c));
        CHECK(lp.value(i, g).equals(lq.value(map[i], g)));
      }
  }
}

TEST_CASE("normalizing odd elements for odd primes") {
  const auto s33 = find_odd_normalizing_element(enumerate_sylow(6, 3, kBudget),
                                                SylowStructure::of(6, 3));
  REQUIRE(s33.has_value());
  CHECK(s33->to_cycle_string() == "(5 6)");
  const auto s93 = find_odd_normalizing_element(enumerate_sylow(12, 3, kBudget),
                                                SylowStructure::of(12, 3));
  REQUIRE(s93.has_value());
  CHECK(s93->to_cycle_string() == "(4 7)(5 8)(6 9)");
  const auto s55 = find_odd_normalizing_element(enumerate_sylow(10, 5, kBudget),
                                                SylowStructure::of(10, 5));
  REQUIRE(s55.has_value());
  CHECK(s55->to_cycle_string() == "(7 8 10 9)");
  // the witness really normalizes: check on the generators
  for (const auto& [n, p] : std::vector<std::pair<int, int>>{{6, 3}, {12, 3}, {10, 5}}) {
    const EnumeratedGroup P = enumerate_sylow(n, p, kBudget);
    const auto sigma = find_odd_normalizing_element(P, SylowStructure::of(n, p));
    REQUIRE(sigma.has_value());
    CHECK(sigma->parity() == -1);
    for (const Perm& s : P.generators) CHECK(P.contains(s.conjugated_by(*sigma)));
  }
}

TEST_CASE("realize cycle types inside the tower") {
  const Perm g1 = realize_in_sylow(Partition::parse("9,3"), 12, 3);
  CHECK(g1.cycle_type() == Partition::parse("9,3"));
  CHECK(in_sylow(g1, SylowStructure::of(12, 3)));
  const Perm g2 = realize_in_sylow(Partition::parse("4,4,4,4"), 16, 2);
  CHECK(g2.cycle_type() == Partition::parse("4,4,4,4"));
  CHECK(in_sylow(g2, SylowStructure::of(16, 2)));
  const Perm g3 = realize_in_sylow(Partition::parse("8,4,1"), 13, 2);
  CHECK(g3.cycle_type() == Partition::parse("8,4,1"));
  CHECK_THROWS_WITH(realize_in_sylow(Partition::parse("6"), 6, 3), "parameters outside range");
  CHECK_THROWS_WITH(realize_in_sylow(Partition::parse("8,8"), 12, 2), "parameters outside range");
}

TEST_CASE("vanishing types for even degrees") {
  // two binary digits: the type lists them directly
  CHECK(construct_g_lambda(Partition::parse("6,6"), 12) == Partition::parse("8,4"));
  CHECK(construct_g_lambda(Partition::parse("7,5,1"), 13) == Partition::parse("8,4,1"));
  // three digits: the branch depends on the 8-core
  for (const Partition& lam : partitions_of(14)) {
    if (nu_p_degree(lam, 2) == 0) continue;
    const CycleType t = construct_g_lambda(lam, 14);
    const bool core_fixed = core_quotient(lam, 8).weight == 0;
    if (core_fixed)
      CHECK(t == Partition::parse("8,2,2,2"));
    else
      CHECK(t == Partition::parse("4,4,4,2"));
  }
  for (int n : {7, 12, 13, 14}) {
    for (const Partition& lam : partitions_of(n)) {
      if (nu_p_degree(lam, 2) == 0) {
        CHECK_THROWS_WITH(construct_g_lambda(lam, n), "parameters outside range");
        continue;
      }
      const CycleType t = construct_g_lambda(lam, n);
      CHECK(type_parity(t) == 1);
      const Perm g = realize_in_sylow(t, n, 2);
      CHECK(in_sylow(g, SylowStructure::of(n, 2)));
      // the character vanishes there
      CHECK(mn_value(lam, t) == 0);
    }
  }
  // fewer than two binary digits leaves nothing to combine
  CHECK_THROWS_WITH(construct_g_lambda(Partition::parse("4,4"), 8), "parameters outside range");
  CHECK_THROWS_WITH(construct_g_lambda(Partition::parse("8,1"), 9), "parameters outside range");
}
