#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace sylres {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact element of Q(zeta_m)[sqrt(D)]: value = rat + surd * sqrt(radicand),
// with rat/surd coordinate vectors over the power basis of Q(zeta_m).
//
// Supported cyclotomic orders m: 1 (rationals), an odd prime (basis
// 1..zeta^(m-2)), or a power of two >= 4 (basis 1..zeta^(m/2-1)).
// normalize() folds square factors out of the radicand and rewrites
// sqrt(D) inside the cyclotomic field whenever that field contains it
// (quadratic Gauss sums for odd primes, i and sqrt(+-2) for 2-power orders);
// without this folding, "is this an integer" would be undecidable from the
// coordinates alone.
class AlgebraicValue {
 public:
  AlgebraicValue() : AlgebraicValue(1) {}
  explicit AlgebraicValue(int order);

  static AlgebraicValue rational(const Rat& r);
  static AlgebraicValue integer(const Int& v);
  static AlgebraicValue zero() { return AlgebraicValue(); }
  // zeta_order ^ exponent; order 1 or 2 collapses to a rational.
  static AlgebraicValue root_of_unity(int order, long long exponent);
  // coeff * sqrt(radicand); radicand must be a nonzero square-free-able int.
  static AlgebraicValue surd(const Rat& coeff, long long radicand);

  int order() const { return order_; }
  long long radicand() const { return radicand_; }
  const std::vector<Rat>& rat_coords() const { return rat_; }
  const std::vector<Rat>& surd_coords() const { return surd_; }

  // Adds c * zeta_order^exponent to the rational (surd=false) or surd part.
  void add_root(long long exponent, const Rat& c, bool into_surd = false);

  AlgebraicValue& operator+=(const AlgebraicValue& o);
  AlgebraicValue& operator-=(const AlgebraicValue& o);
  AlgebraicValue operator+(const AlgebraicValue& o) const;
  AlgebraicValue operator-(const AlgebraicValue& o) const;
  AlgebraicValue operator*(const AlgebraicValue& o) const;
  AlgebraicValue& operator*=(const Rat& c);
  AlgebraicValue operator-() const;

  AlgebraicValue conj() const;  // complex conjugation
  void normalize();

  bool is_zero() const;
  // True when the (normalized) value is a rational integer; fills *out.
  bool is_rational_integer(Int* out = nullptr) const;
  // Rational value or throws; use after normalize when rationality is known.
  Rat rational_value() const;

  bool equals(const AlgebraicValue& o) const;

  std::string to_string() const;
  nlohmann::ordered_json to_json() const;

 private:
  void lift_to(int order);
  static int common_order(int a, int b);

  int order_ = 1;
  long long radicand_ = 1;  // 1 means no surd part
  std::vector<Rat> rat_;
  std::vector<Rat> surd_;
};

std::string rat_to_string(const Rat& r);  // canonical "num/den"

}  // namespace sylres
