#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sylres/algebraic.hpp"

using namespace sylres;

TEST_CASE("rational values") {
  AlgebraicValue a = AlgebraicValue::integer(7);
  AlgebraicValue b = AlgebraicValue::rational(Rat(1, 2));
  Int out;
  CHECK(a.is_rational_integer(&out));
  CHECK(out == 7);
  CHECK_FALSE(b.is_rational_integer());
  CHECK((b + b).is_rational_integer(&out));
  CHECK(out == 1);
  CHECK((a - a).is_zero());
  CHECK((a * b).rational_value() == Rat(7, 2));
  CHECK(AlgebraicValue::zero().is_zero());
}

TEST_CASE("roots of unity sum to zero") {
  for (int m : {3, 5, 7, 4, 8, 16}) {
    AlgebraicValue s(m);
    for (int e = 0; e < m; ++e) s += AlgebraicValue::root_of_unity(m, e);
    CHECK(s.is_zero());
  }
}

TEST_CASE("order one and two collapse") {
  CHECK(AlgebraicValue::root_of_unity(1, 0).rational_value() == 1);
  CHECK(AlgebraicValue::root_of_unity(2, 1).rational_value() == -1);
  CHECK(AlgebraicValue::root_of_unity(2, 4).rational_value() == 1);
}

TEST_CASE("surd arithmetic") {
  const AlgebraicValue r3 = AlgebraicValue::surd(Rat(1), -3);
  CHECK((r3 * r3).rational_value() == -3);
  const AlgebraicValue r5 = AlgebraicValue::surd(Rat(1, 2), 5);
  CHECK((r5 * r5).rational_value() == Rat(5, 4));
  // square factors fold out
  const AlgebraicValue r12 = AlgebraicValue::surd(Rat(1), 12);
  CHECK(r12.equals(AlgebraicValue::surd(Rat(2), 3)));
  const AlgebraicValue r4 = AlgebraicValue::surd(Rat(1), 4);
  CHECK(r4.rational_value() == 2);
}

TEST_CASE("zeta_3 equals (-1 + sqrt(-3)) / 2") {
  const AlgebraicValue z = AlgebraicValue::root_of_unity(3, 1);
  AlgebraicValue rhs = AlgebraicValue::rational(Rat(-1, 2));
  rhs += AlgebraicValue::surd(Rat(1, 2), -3);
  CHECK(z.equals(rhs));
  // and conjugation flips to zeta_3^2
  CHECK(z.conj().equals(AlgebraicValue::root_of_unity(3, 2)));
}

TEST_CASE("gauss sum for sqrt(5)") {
  AlgebraicValue s(5);
  s += AlgebraicValue::root_of_unity(5, 1);
  s -= AlgebraicValue::root_of_unity(5, 2);
  s -= AlgebraicValue::root_of_unity(5, 3);
  s += AlgebraicValue::root_of_unity(5, 4);
  CHECK(s.equals(AlgebraicValue::surd(Rat(1), 5)));
}

TEST_CASE("gauss sum for sqrt(-3)") {
  AlgebraicValue s(3);
  s += AlgebraicValue::root_of_unity(3, 1);
  s -= AlgebraicValue::root_of_unity(3, 2);
  CHECK(s.equals(AlgebraicValue::surd(Rat(1), -3)));
}

TEST_CASE("two power orders contain the quadratic surds") {
  // i = zeta_4
  const AlgebraicValue i = AlgebraicValue::root_of_unity(4, 1);
  CHECK((i * i).rational_value() == -1);
  CHECK(i.equals(AlgebraicValue::surd(Rat(1), -1)));
  // sqrt(2) = zeta_8 + zeta_8^7, sqrt(-2) = zeta_8 + zeta_8^3
  AlgebraicValue s2 = AlgebraicValue::root_of_unity(8, 1);
  s2 += AlgebraicValue::root_of_unity(8, 7);
  CHECK(s2.equals(AlgebraicValue::surd(Rat(1), 2)));
  AlgebraicValue sm2 = AlgebraicValue::root_of_unity(8, 1);
  sm2 += AlgebraicValue::root_of_unity(8, 3);
  CHECK(sm2.equals(AlgebraicValue::surd(Rat(1), -2)));
}

TEST_CASE("mixed order products") {
  // (zeta_8)^2 = zeta_4 = i
  const AlgebraicValue z8 = AlgebraicValue::root_of_unity(8, 1);
  CHECK((z8 * z8).equals(AlgebraicValue::root_of_unity(4, 1)));
  // golden ratio: (1 + sqrt 5)/2 satisfies x^2 = x + 1
  AlgebraicValue phi = AlgebraicValue::rational(Rat(1, 2));
  phi += AlgebraicValue::surd(Rat(1, 2), 5);
  AlgebraicValue rhs = phi;
  rhs += AlgebraicValue::integer(1);
  CHECK((phi * phi).equals(rhs));
}

TEST_CASE("conjugation fixes surds of positive radicand") {
  const AlgebraicValue r5 = AlgebraicValue::surd(Rat(3, 7), 5);
  CHECK(r5.conj().equals(r5));
  const AlgebraicValue rm3 = AlgebraicValue::surd(Rat(1), -3);
  CHECK(rm3.conj().equals(-rm3));
}

TEST_CASE("json shape") {
  AlgebraicValue v = AlgebraicValue::rational(Rat(-1, 2));
  v += AlgebraicValue::surd(Rat(1, 2), -3);
  const auto j = v.to_json();
  CHECK(j["radicand"] == -3);
  CHECK(j["p"] == 1);
  CHECK(j["rat"][0] == "-1/2");
  CHECK(j["surd"][0] == "1/2");
  const auto ji = AlgebraicValue::integer(4).to_json();
  CHECK(ji["rat"][0] == "4/1");
  CHECK(ji["radicand"] == 1);
}

TEST_CASE("to_string is readable") {
  AlgebraicValue v = AlgebraicValue::rational(Rat(-1, 2));
  v += AlgebraicValue::surd(Rat(1, 2), -3);
  CHECK(v.to_string().find("sqrt(-3)") != std::string::npos);
}
