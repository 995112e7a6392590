#include "sylres/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sylres {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
  if (text == "-") return Partition{};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad partition text: \"" + text + "\"");
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::part(int row) const {
  if (row < 1) throw std::invalid_argument("row index is 1-based");
  return row <= rows() ? parts_[row - 1] : 0;
}

int Partition::col_length(int col) const {
  if (col < 1) throw std::invalid_argument("col index is 1-based");
  int count = 0;
  for (int p : parts_)
    if (p >= col) ++count;
  return count;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[j];
  return Partition(std::move(out));
}

bool Partition::is_self_conjugate() const { return *this == conjugate(); }

bool Partition::contains(const Partition& inner) const {
  if (inner.rows() > rows()) return false;
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.parts()[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
}

Partition Composition::sorted() const {
  std::vector<int> v = parts_;
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Partition(std::move(v));
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
  if (!outer.contains(inner)) throw std::invalid_argument("inner shape not contained in outer");
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= outer.rows(); ++r)
    for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) out.emplace_back(r, c);
  return out;
}

std::vector<HookData> hooks(const Partition& lam) {
  std::vector<HookData> out;
  Partition conj = lam.conjugate();
  for (int r = 1; r <= lam.rows(); ++r) {
    for (int c = 1; c <= lam.parts()[r - 1]; ++c) {
      HookData h;
      h.row = r;
      h.col = c;
      h.leg = conj.parts()[c - 1] - r;
      h.length = (lam.parts()[r - 1] - c) + h.leg + 1;
      out.push_back(h);
    }
  }
  return out;
}

std::vector<HookData> hooks_divisible(const Partition& lam, int e) {
  if (e < 2) throw std::invalid_argument("modulus must be >= 2");
  std::vector<HookData> out;
  for (const HookData& h : hooks(lam))
    if (h.length % e == 0) out.push_back(h);
  return out;
}

int hook_length(const Partition& lam, int row, int col) {
  if (row < 1 || row > lam.rows() || col < 1 || col > lam.part(row))
    throw std::invalid_argument("node outside diagram");
  return (lam.part(row) - col) + (lam.col_length(col) - row) + 1;
}

namespace {

// First-column hook lengths, i.e. beta numbers for exactly lam.rows() beads.
std::vector<int> beta_numbers(const Partition& lam, int length) {
  std::vector<int> beta(length);
  for (int i = 1; i <= length; ++i) beta[i - 1] = lam.part(i) + (length - i);
  return beta;  // strictly decreasing
}

Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  std::vector<int> parts;
  int len = static_cast<int>(beta.size());
  for (int i = 1; i <= len; ++i) {
    int p = beta[i - 1] - (len - i);
    if (p < 0) throw std::logic_error("invalid beta set");
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

}  // namespace

std::pair<Partition, int> remove_rim_hook(const Partition& lam, int row, int col) {
  int h = hook_length(lam, row, col);  // validates the node
  std::vector<int> beta = beta_numbers(lam, lam.rows());
  int lo = beta[row - 1] - h;
  int leg = 0;
  for (int i = 0; i < static_cast<int>(beta.size()); ++i) {
    if (i == row - 1) continue;
    if (beta[i] == lo) throw std::logic_error("rim hook removal collision");
    if (beta[i] > lo && beta[i] < beta[row - 1]) ++leg;
  }
  beta[row - 1] = lo;
  return {partition_from_beta(std::move(beta)), leg};
}

CoreQuotient core_quotient(const Partition& lam, int e) {
  if (e < 2) throw std::invalid_argument("modulus must be >= 2");
  int len = std::max(lam.rows(), 1);
  if (len % e) len += e - len % e;  // pad the bead count to a multiple of e
  std::vector<int> beta = beta_numbers(lam, len);

  CoreQuotient out;
  out.quotient.resize(e);
  std::vector<int> beads_per_runner(e, 0);
  std::vector<std::vector<int>> runner(e);  // positions m, collected decreasing
  for (int b : beta) runner[b % e].push_back(b / e);

  for (int r = 0; r < e; ++r) {
    auto& m = runner[r];
    std::sort(m.begin(), m.end(), std::greater<int>());
    int c = static_cast<int>(m.size());
    beads_per_runner[r] = c;
    std::vector<int> parts;
    for (int i = 1; i <= c; ++i) {
      int p = m[i - 1] - (c - i);
      if (p > 0) parts.push_back(p);
    }
    out.quotient[r] = Partition(std::move(parts));
    out.weight += out.quotient[r].n();
  }

  std::vector<int> core_beta;
  for (int r = 0; r < e; ++r)
    for (int m = 0; m < beads_per_runner[r]; ++m) core_beta.push_back(e * m + r);
  out.core = partition_from_beta(std::move(core_beta));

  if (out.core.n() + e * out.weight != lam.n())
    throw std::logic_error("core/quotient weight mismatch");
  return out;
}

PadicExpansion p_adic(long long n, int p) {
  if (p < 2) throw std::invalid_argument("prime must be >= 2");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  PadicExpansion out;
  out.prime = p;
  int exp = 0;
  std::vector<PadicDigit> ascending;
  while (n > 0) {
    int digit = static_cast<int>(n % p);
    if (digit) ascending.push_back({exp, digit});
    n /= p;
    ++exp;
  }
  out.digits.assign(ascending.rbegin(), ascending.rend());
  return out;
}

long long PadicExpansion::value() const {
  long long v = 0;
  for (const auto& d : digits) {
    long long q = 1;
    for (int i = 0; i < d.exponent; ++i) q *= prime;
    v += q * d.coeff;
  }
  return v;
}

bool is_hook_partition(const Partition& lam) {
  if (lam.empty()) return false;
  for (int i = 1; i < lam.rows(); ++i)
    if (lam.parts()[i] != 1) return false;
  return true;
}

Partition delta2(const Partition& lam) {
  if (lam.n() % 2) throw std::invalid_argument("delta2 requires even size");
  std::vector<int> odd_k;  // parts 2k+1 contribute k, kept in descending part order
  std::vector<int> halves;
  for (int p : lam.parts()) {
    if (p % 2)
      odd_k.push_back((p - 1) / 2);
    else
      halves.push_back(p / 2);
  }
  // The odd-part count is even because |lam| is even.
  std::size_t zeta = odd_k.size() / 2;
  std::vector<int> parts;
  for (std::size_t i = 0; i < odd_k.size(); ++i) {
    int v = odd_k[i] + (i < zeta ? 1 : 0);
    if (v > 0) parts.push_back(v);
  }
  parts.insert(parts.end(), halves.begin(), halves.end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

Partition two_hook_shape(int q, int x, int y) {
  if (q < 2 || (q & (q - 1)) != 0) throw std::invalid_argument("q must be a power of two >= 2");
  if (x < 1 || x > q - 1 || y < x - 1 || y > q - 2)
    throw std::invalid_argument("parameters outside range");
  std::vector<int> parts{q - x + 1, q - y};
  parts.insert(parts.end(), x - 1, 2);
  parts.insert(parts.end(), y - x + 1, 1);
  Partition lam(std::move(parts));
  if (lam.n() != 2 * q) throw std::logic_error("two_hook_shape size mismatch");
  return lam;
}

Partition hook_shape(int total, int ones) {
  if (ones < 0 || total < ones + 1) throw std::invalid_argument("bad hook parameters");
  std::vector<int> parts{total - ones};
  parts.insert(parts.end(), ones, 1);
  return Partition(std::move(parts));
}

MuNu mu_nu_constructions(int q, int x, int y) {
  two_hook_shape(q, x, y);  // validates (q, x, y)
  int s = y - (x - 1);
  MuNu out;
  out.even_case = (s % 2 == 0);
  if (out.even_case) {
    // Both companions are hooks of q: (q-y+s/2, 1^(y-s/2)) and its pushdown.
    out.mu = hook_shape(q, y - s / 2);
    out.nu = hook_shape(q, y - s / 2 + 1);
  } else {
    out.mu = hook_shape(q, y - (s - 1) / 2);
    out.nu = delta2(two_hook_shape(q, x, y));
  }
  return out;
}

namespace {
void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int m = std::min(n, max_part); m >= 1; --m) {
    cur.push_back(m);
    gen_partitions(n - m, m, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  return out;
}

}  // namespace sylres
