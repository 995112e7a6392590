#include "sylres/algebraic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sylres {

namespace {

bool is_pow2(int m) { return m > 0 && (m & (m - 1)) == 0; }

bool is_odd_prime(int m) {
  if (m < 3 || m % 2 == 0) return false;
  for (int d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

int basis_size(int order) {
  if (order == 1) return 1;
  if (is_odd_prime(order)) return order - 1;
  if (is_pow2(order) && order >= 4) return order / 2;
  throw std::invalid_argument("unsupported cyclotomic order");
}

int legendre(long long a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  // p is a small odd prime here; brute-force the quadratic residues.
  for (long long x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

}  // namespace

AlgebraicValue::AlgebraicValue(int order) : order_(order) {
  rat_.assign(basis_size(order), Rat(0));
  surd_.assign(basis_size(order), Rat(0));
}

AlgebraicValue AlgebraicValue::rational(const Rat& r) {
  AlgebraicValue v(1);
  v.rat_[0] = r;
  return v;
}

AlgebraicValue AlgebraicValue::integer(const Int& n) { return rational(Rat(n)); }

AlgebraicValue AlgebraicValue::root_of_unity(int order, long long exponent) {
  if (order < 1) throw std::invalid_argument("root order must be positive");
  exponent %= order;
  if (exponent < 0) exponent += order;
  if (order == 1) return rational(Rat(1));
  if (order == 2) return rational(Rat(exponent ? -1 : 1));
  AlgebraicValue v(order);
  v.add_root(exponent, Rat(1));
  return v;
}

AlgebraicValue AlgebraicValue::surd(const Rat& coeff, long long radicand) {
  if (radicand == 0) throw std::invalid_argument("radicand must be nonzero");
  AlgebraicValue v(1);
  v.radicand_ = radicand;
  v.surd_[0] = coeff;
  v.normalize();
  return v;
}

void AlgebraicValue::add_root(long long exponent, const Rat& c, bool into_surd) {
  std::vector<Rat>& vec = into_surd ? surd_ : rat_;
  long long m = order_;
  long long e = exponent % m;
  if (e < 0) e += m;
  if (order_ == 1) {
    vec[0] += c;
    return;
  }
  if (is_pow2(order_)) {
    // zeta^(m/2) = -1
    if (e >= m / 2)
      vec[static_cast<std::size_t>(e - m / 2)] -= c;
    else
      vec[static_cast<std::size_t>(e)] += c;
    return;
  }
  // odd prime p: zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
  if (e == m - 1) {
    for (auto& x : vec) x -= c;
  } else {
    vec[static_cast<std::size_t>(e)] += c;
  }
}

int AlgebraicValue::common_order(int a, int b) {
  if (a == b) return a;
  if (a == 1) return b;
  if (b == 1) return a;
  if (is_pow2(a) && is_pow2(b)) return std::max(a, b);
  throw std::logic_error("incompatible cyclotomic orders");
}

void AlgebraicValue::lift_to(int order) {
  if (order == order_) return;
  AlgebraicValue lifted(order);
  lifted.radicand_ = radicand_;
  if (order_ == 1) {
    lifted.rat_[0] = rat_[0];
    lifted.surd_[0] = surd_[0];
  } else {
    if (!(is_pow2(order_) && is_pow2(order) && order % order_ == 0))
      throw std::logic_error("incompatible cyclotomic orders");
    int stride = order / order_;
    for (std::size_t i = 0; i < rat_.size(); ++i) {
      lifted.add_root(static_cast<long long>(i) * stride, rat_[i], false);
      lifted.add_root(static_cast<long long>(i) * stride, surd_[i], true);
    }
  }
  *this = std::move(lifted);
}

AlgebraicValue& AlgebraicValue::operator+=(const AlgebraicValue& o) {
  AlgebraicValue rhs = o;
  int m = common_order(order_, rhs.order_);
  lift_to(m);
  rhs.lift_to(m);
  if (radicand_ != rhs.radicand_) {
    normalize();
    rhs.normalize();
    bool mine = std::any_of(surd_.begin(), surd_.end(), [](const Rat& r) { return r != 0; });
    bool theirs = std::any_of(rhs.surd_.begin(), rhs.surd_.end(), [](const Rat& r) { return r != 0; });
    if (mine && theirs && radicand_ != rhs.radicand_)
      throw std::logic_error("mixing distinct radicands");
    if (!mine) radicand_ = rhs.radicand_;
  }
  for (std::size_t i = 0; i < rat_.size(); ++i) {
    rat_[i] += rhs.rat_[i];
    surd_[i] += rhs.surd_[i];
  }
  return *this;
}

AlgebraicValue& AlgebraicValue::operator-=(const AlgebraicValue& o) { return *this += -o; }

AlgebraicValue AlgebraicValue::operator+(const AlgebraicValue& o) const {
  AlgebraicValue v = *this;
  v += o;
  return v;
}

AlgebraicValue AlgebraicValue::operator-(const AlgebraicValue& o) const {
  AlgebraicValue v = *this;
  v -= o;
  return v;
}

AlgebraicValue AlgebraicValue::operator-() const {
  AlgebraicValue v = *this;
  for (auto& x : v.rat_) x = -x;
  for (auto& x : v.surd_) x = -x;
  return v;
}

AlgebraicValue& AlgebraicValue::operator*=(const Rat& c) {
  for (auto& x : rat_) x *= c;
  for (auto& x : surd_) x *= c;
  return *this;
}

AlgebraicValue AlgebraicValue::operator*(const AlgebraicValue& o) const {
  AlgebraicValue a = *this, b = o;
  int m = common_order(a.order_, b.order_);
  a.lift_to(m);
  b.lift_to(m);
  if (a.radicand_ != b.radicand_) {
    a.normalize();
    b.normalize();
  }
  bool a_surd = std::any_of(a.surd_.begin(), a.surd_.end(), [](const Rat& r) { return r != 0; });
  bool b_surd = std::any_of(b.surd_.begin(), b.surd_.end(), [](const Rat& r) { return r != 0; });
  if (a_surd && b_surd && a.radicand_ != b.radicand_)
    throw std::logic_error("mixing distinct radicands");
  long long D = a_surd ? a.radicand_ : b.radicand_;

  AlgebraicValue out(m);
  out.radicand_ = D;
  std::size_t len = a.rat_.size();
  auto mul_into = [&](const std::vector<Rat>& u, const std::vector<Rat>& v, bool into_surd,
                      const Rat& scale) {
    for (std::size_t i = 0; i < len; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < len; ++j) {
        if (v[j] == 0) continue;
        out.add_root(static_cast<long long>(i + j), u[i] * v[j] * scale, into_surd);
      }
    }
  };
  mul_into(a.rat_, b.rat_, false, Rat(1));
  mul_into(a.surd_, b.surd_, false, Rat(D));  // sqrt(D)^2 = D
  mul_into(a.rat_, b.surd_, true, Rat(1));
  mul_into(a.surd_, b.rat_, true, Rat(1));
  return out;
}

AlgebraicValue AlgebraicValue::conj() const {
  AlgebraicValue out(order_);
  out.radicand_ = radicand_;
  for (std::size_t i = 0; i < rat_.size(); ++i) {
    out.add_root(-static_cast<long long>(i), rat_[i], false);
    out.add_root(-static_cast<long long>(i), surd_[i], true);
  }
  if (radicand_ < 0)  // conj(sqrt(D)) = -sqrt(D) for negative D
    for (auto& x : out.surd_) x = -x;
  return out;
}

void AlgebraicValue::normalize() {
  bool have_surd = std::any_of(surd_.begin(), surd_.end(), [](const Rat& r) { return r != 0; });
  if (!have_surd) {
    radicand_ = 1;
    return;
  }
  // Split off the square part of the radicand.
  long long d = radicand_;
  long long sq = 1;
  for (long long f = 2; f * f <= std::abs(d); ++f) {
    while (d % (f * f) == 0) {
      d /= f * f;
      sq *= f;
    }
  }
  if (sq != 1)
    for (auto& x : surd_) x *= sq;
  radicand_ = d;

  auto fold = [&](auto&& emit_sqrt) {
    std::vector<Rat> coeff = surd_;
    surd_.assign(surd_.size(), Rat(0));
    radicand_ = 1;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      if (coeff[i] == 0) continue;
      emit_sqrt(static_cast<long long>(i), coeff[i]);
    }
  };

  if (radicand_ == 1) {
    fold([&](long long e, const Rat& c) { add_root(e, c, false); });
    return;
  }
  if (is_odd_prime(order_)) {
    int p = order_;
    long long pstar = (p % 4 == 1) ? p : -p;
    if (radicand_ == pstar) {
      // Gauss sum: sqrt(p*) = sum_j legendre(j, p) zeta^j.
      fold([&](long long e, const Rat& c) {
        for (int j = 1; j < p; ++j) add_root(e + j, c * legendre(j, p), false);
      });
    }
    return;
  }
  if (is_pow2(order_) && order_ >= 4) {
    int m = order_;
    if (radicand_ == -1) {
      fold([&](long long e, const Rat& c) { add_root(e + m / 4, c, false); });
      return;
    }
    if (m % 8 == 0 && (radicand_ == 2 || radicand_ == -2)) {
      long long r = radicand_;
      fold([&](long long e, const Rat& c) {
        // sqrt(2) = zeta_8 + zeta_8^-1, sqrt(-2) = zeta_8 + zeta_8^3
        add_root(e + m / 8, c, false);
        add_root(r == 2 ? e - m / 8 : e + 3 * (m / 8), c, false);
      });
      return;
    }
  }
}

bool AlgebraicValue::is_zero() const {
  AlgebraicValue v = *this;
  v.normalize();
  return std::all_of(v.rat_.begin(), v.rat_.end(), [](const Rat& r) { return r == 0; }) &&
         std::all_of(v.surd_.begin(), v.surd_.end(), [](const Rat& r) { return r == 0; });
}

bool AlgebraicValue::is_rational_integer(Int* out) const {
  AlgebraicValue v = *this;
  v.normalize();
  for (const Rat& r : v.surd_)
    if (r != 0) return false;
  for (std::size_t i = 1; i < v.rat_.size(); ++i)
    if (v.rat_[i] != 0) return false;
  if (boost::multiprecision::denominator(v.rat_[0]) != 1) return false;
  if (out) *out = boost::multiprecision::numerator(v.rat_[0]);
  return true;
}

Rat AlgebraicValue::rational_value() const {
  AlgebraicValue v = *this;
  v.normalize();
  for (const Rat& r : v.surd_)
    if (r != 0) throw std::logic_error("value is not rational");
  for (std::size_t i = 1; i < v.rat_.size(); ++i)
    if (v.rat_[i] != 0) throw std::logic_error("value is not rational");
  return v.rat_[0];
}

bool AlgebraicValue::equals(const AlgebraicValue& o) const { return (*this - o).is_zero(); }

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

std::string AlgebraicValue::to_string() const {
  AlgebraicValue v = *this;
  v.normalize();
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rat& c, std::size_t pow, bool under_surd) {
    if (c == 0) return;
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ')';
    if (pow) os << "*z" << v.order_ << '^' << pow;
    if (under_surd) os << "*sqrt(" << v.radicand_ << ')';
  };
  for (std::size_t i = 0; i < v.rat_.size(); ++i) emit(v.rat_[i], i, false);
  for (std::size_t i = 0; i < v.surd_.size(); ++i) emit(v.surd_[i], i, true);
  if (first) os << '0';
  return os.str();
}

nlohmann::ordered_json AlgebraicValue::to_json() const {
  AlgebraicValue v = *this;
  v.normalize();
  nlohmann::ordered_json j;
  auto strs = [](const std::vector<Rat>& vec) {
    std::vector<std::string> out;
    out.reserve(vec.size());
    for (const Rat& r : vec) out.push_back(rat_to_string(r));
    return out;
  };
  j["rat"] = strs(v.rat_);
  j["surd"] = strs(v.surd_);
  j["radicand"] = v.radicand_;
  j["p"] = v.order_;
  return j;
}

}  // namespace sylres
