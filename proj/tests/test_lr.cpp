#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle_sym.hpp"
#include "sylres/characters.hpp"
#include "sylres/lr.hpp"

#include <algorithm>
#include <map>

using namespace sylres;

namespace {

CycleType join(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return CycleType(std::move(parts));
}

// The coefficient as a character inner product: induce chi^mu x chi^nu from
// the Young subgroup and pair with chi^lam, summing over pairs of classes.
Rat induced_multiplicity(const oracle::CharacterTable& tq, const oracle::CharacterTable& tr,
                         const oracle::CharacterTable& tn, const Partition& lam,
                         const Partition& mu, const Partition& nu) {
  Rat s = 0;
  for (const Partition& alpha : tq.classes)
    for (const Partition& beta : tr.classes)
      s += Rat(tq.value(mu, alpha) * tr.value(nu, beta) * tn.value(lam, join(alpha, beta)),
               oracle::z_number(alpha) * oracle::z_number(beta));
  return s;
}

}  // namespace

TEST_CASE("coefficients match the character computation") {
  std::map<int, oracle::CharacterTable> tables;
  for (int m = 0; m <= 8; ++m) tables.emplace(m, oracle::character_table(m));
  for (int m = 2; m <= 8; ++m)
    for (int q = 1; q < m; ++q) {
      const int r = m - q;
      for (const Partition& lam : partitions_of(m))
        for (const Partition& mu : partitions_of(q))
          for (const Partition& nu : partitions_of(r)) {
            const LRResult res = lr_coefficient(lam, mu, nu, 0);
            CHECK(Rat(res.coefficient) ==
                  induced_multiplicity(tables[q], tables[r], tables[m], lam, mu, nu));
          }
    }
}

TEST_CASE("symmetry and conjugation") {
  for (int m = 2; m <= 7; ++m)
    for (int q = 1; q <= m / 2; ++q)
      for (const Partition& lam : partitions_of(m))
        for (const Partition& mu : partitions_of(q))
          for (const Partition& nu : partitions_of(m - q)) {
            const long long c = lr_coefficient(lam, mu, nu, 0).coefficient;
            CHECK(c == lr_coefficient(lam, nu, mu, 0).coefficient);
            CHECK(c == lr_coefficient(lam.conjugate(), mu.conjugate(), nu.conjugate(), 0)
                           .coefficient);
          }
}

TEST_CASE("worked examples") {
  CHECK(lr_coefficient(Partition::parse("4,2,1"), Partition::parse("2,1"), Partition::parse("3,1"))
            .coefficient == 2);
  // Pieri: adding a row of 2 to (2,1)
  CHECK(lr_coefficient(Partition::parse("4,1"), Partition::parse("2,1"), Partition::parse("2"))
            .coefficient == 1);
  CHECK(lr_coefficient(Partition::parse("2,2,1"), Partition::parse("2,1"), Partition::parse("2"))
            .coefficient == 1);
  CHECK(lr_coefficient(Partition::parse("2,1,1,1"), Partition::parse("2,1"), Partition::parse("2"))
            .coefficient == 0);
  // mu not contained in lam
  CHECK(lr_coefficient(Partition::parse("2,2,2"), Partition::parse("3"), Partition::parse("3"))
            .coefficient == 0);
  CHECK_THROWS_WITH(
      lr_coefficient(Partition::parse("2,1"), Partition::parse("1"), Partition::parse("1")),
      "sizes must satisfy |lam| = |mu| + |nu|");
}

TEST_CASE("witnesses certify the count") {
  const LRResult res = lr_coefficient(Partition::parse("4,2,1"), Partition::parse("2,1"),
                                      Partition::parse("3,1"), 16);
  CHECK(res.coefficient == 2);
  CHECK(res.witnesses.size() == 2);
  for (const LRConfiguration& w : res.witnesses) {
    CHECK(w.is_valid());
    CHECK(w.content() == Partition::parse("3,1"));
  }
  CHECK_FALSE(res.witnesses[0] == res.witnesses[1]);
  // the cap truncates the list but not the count
  const LRResult capped = lr_coefficient(Partition::parse("4,2,1"), Partition::parse("2,1"),
                                         Partition::parse("3,1"), 1);
  CHECK(capped.coefficient == 2);
  CHECK(capped.witnesses.size() == 1);
}

TEST_CASE("invalid fillings are rejected") {
  const SkewShape s(Partition::parse("2,1"), Partition::parse("1"));
  // cells are (1,2) and (2,1)
  CHECK(LRConfiguration(s, {1, 1}).is_valid());
  // reading word 2,1 is not a lattice word
  CHECK_FALSE(LRConfiguration(s, {2, 1}).is_valid());
  const SkewShape col(Partition::parse("1,1"), Partition());
  // column strictness
  CHECK_FALSE(LRConfiguration(col, {1, 1}).is_valid());
  CHECK(LRConfiguration(col, {1, 2}).is_valid());
  // row weakness on (2)/()
  const SkewShape row(Partition::parse("2"), Partition());
  CHECK(LRConfiguration(row, {1, 1}).is_valid());
  CHECK_FALSE(LRConfiguration(row, {2, 1}).is_valid());
}

TEST_CASE("restriction pairs for the halved symmetric group") {
  const auto pairs = restriction_pairs(Partition::parse("2,1,1"), 2);
  CHECK(pairs.size() == 3);
  CHECK(pairs.at({Partition::parse("2"), Partition::parse("1,1")}) == 1);
  CHECK(pairs.at({Partition::parse("1,1"), Partition::parse("2")}) == 1);
  CHECK(pairs.at({Partition::parse("1,1"), Partition::parse("1,1")}) == 1);
  // restriction preserves degree
  for (int q = 1; q <= 5; ++q)
    for (const Partition& lam : partitions_of(2 * q)) {
      Int total = 0;
      for (const auto& [mn, c] : restriction_pairs(lam, q))
        total += Int(c) * degree(mn.first) * degree(mn.second);
      CHECK(total == degree(lam));
    }
}

TEST_CASE("companion shapes really occur") {
  for (int q : {2, 4, 8})
    for (int x = 1; x <= q - 1; ++x)
      for (int y = x - 1; y <= q - 2; ++y) {
        const RecipeReport rep = verify_recipe_fillings(q, x, y);
        CHECK(rep.pass);
        CHECK(rep.mu_filling_valid);
        CHECK(rep.mu_filling_found);
        CHECK(rep.mu_filling().is_valid());
        if (rep.even_case) {
          CHECK(rep.nu_filling_valid);
          CHECK(rep.nu_filling_found);
        } else {
          CHECK(rep.nu_positive);
        }
        // the fillings certify the diagonal coefficients
        CHECK(lr_coefficient(rep.lam, rep.mu, rep.mu, 0).coefficient > 0);
        CHECK(lr_coefficient(rep.lam, rep.nu, rep.nu, 0).coefficient > 0);
      }
}
