#include "sylres/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sylres {

Perm::Perm(int n) : img_(n) {
  for (int i = 0; i < n; ++i) img_[i] = i;
}

Perm Perm::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int x : images) {
    if (x < 0 || x >= static_cast<int>(images.size()) || seen[x])
      throw std::invalid_argument("images do not form a permutation");
    seen[x] = 1;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p(n);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i] - 1;
      int b = cyc[(i + 1) % cyc.size()] - 1;
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("cycle point outside 1..n");
      if (p.img_[a] != a) throw std::invalid_argument("point repeated across cycles");
      p.img_[a] = b;
    }
  }
  return Perm::from_images(std::move(p.img_));
}

Perm Perm::parse(int n, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle text");
    std::size_t close = text.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("unbalanced cycle text");
    std::istringstream is(text.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    int x;
    while (is >> x) cyc.push_back(x);
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  return from_cycles(n, cycles);
}

Perm Perm::then(const Perm& next) const {
  if (degree() != next.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = next.img_[img_[i]];
  Perm p;
  p.img_ = std::move(out);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[img_[i]] = static_cast<int>(i);
  Perm p;
  p.img_ = std::move(out);
  return p;
}

Perm Perm::conjugated_by(const Perm& x) const { return x.inverse().then(*this).then(x); }

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

int Perm::parity() const {
  std::vector<char> seen(img_.size(), 0);
  int transpositions = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 ? -1 : 1;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      cyc.push_back(static_cast<int>(j) + 1);
    }
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  }
  return out;
}

CycleType Perm::cycle_type() const {
  std::vector<int> lens;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return CycleType(std::move(lens));
}

std::string Perm::to_cycle_string() const {
  auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cycs) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse().then(b.inverse()).then(a).then(b);
}

Perm canonical_of_type(const CycleType& type) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : type.parts()) {
    std::vector<int> cyc(len);
    for (int i = 0; i < len; ++i) cyc[i] = next + i;
    next += len;
    if (len > 1) cycles.push_back(std::move(cyc));
  }
  return Perm::from_cycles(type.n(), cycles);
}

int split_orientation(const Perm& g) {
  CycleType type = g.cycle_type();
  {
    const auto& parts = type.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] % 2 == 0) throw std::invalid_argument("type has an even part");
      if (i && parts[i] == parts[i - 1]) throw std::invalid_argument("type has repeated parts");
    }
  }
  Perm rep = canonical_of_type(type);
  // Build x with x o rep o x^-1 = g by aligning cycles of equal (unique) length.
  std::vector<char> seen(g.degree(), 0);
  std::vector<std::vector<int>> g_cycles;  // 0-based, including fixed points
  for (int i = 0; i < g.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = g(j)) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    g_cycles.push_back(std::move(cyc));
  }
  std::sort(g_cycles.begin(), g_cycles.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<int> x(g.degree());
  int next = 0;  // canonical rep uses consecutive points in decreasing length order
  for (const auto& cyc : g_cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) x[next + static_cast<int>(i)] = cyc[i];
    next += static_cast<int>(cyc.size());
  }
  Perm conjugator = Perm::from_images(std::move(x));
  if (!(rep.conjugated_by(conjugator) == g)) throw std::logic_error("conjugator construction failed");
  return conjugator.parity();
}

}  // namespace sylres
