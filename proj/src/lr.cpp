#include "sylres/lr.hpp"

#include <algorithm>
#include <stdexcept>

namespace sylres {

LRConfiguration::LRConfiguration(SkewShape s, std::vector<int> v)
    : shape(std::move(s)), values(std::move(v)) {
  if (static_cast<int>(values.size()) != shape.size())
    throw std::invalid_argument("filling size does not match skew shape");
}

int LRConfiguration::value_at(int row, int col) const {
  auto cells = shape.cells();
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].first == row && cells[i].second == col) return values[i];
  return 0;
}

Partition LRConfiguration::content() const {
  std::vector<int> counts;
  for (int v : values) {
    if (v < 1) throw std::logic_error("filling entries must be positive");
    if (v > static_cast<int>(counts.size())) counts.resize(v, 0);
    ++counts[v - 1];
  }
  return Partition(std::move(counts));  // throws unless weakly decreasing
}

bool LRConfiguration::is_valid() const {
  const Partition& outer = shape.outer;
  const Partition& inner = shape.inner;
  std::vector<std::vector<int>> grid(outer.rows() + 1);
  for (int r = 1; r <= outer.rows(); ++r) grid[r].assign(outer.part(1) + 1, 0);
  {
    std::size_t at = 0;
    for (auto [r, c] : shape.cells()) {
      if (values[at] < 1) return false;
      grid[r][c] = values[at++];
    }
  }
  for (int r = 1; r <= outer.rows(); ++r) {
    for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) {
      if (c + 1 <= outer.part(r) && grid[r][c] > grid[r][c + 1]) return false;
      bool above_in_skew = r > 1 && c > inner.part(r - 1) && c <= outer.part(r - 1);
      if (above_in_skew && grid[r - 1][c] >= grid[r][c]) return false;
    }
  }
  // Reverse reading word: rows top to bottom, right to left within a row.
  std::vector<int> counts;
  for (int r = 1; r <= outer.rows(); ++r) {
    for (int c = outer.part(r); c > inner.part(r); --c) {
      int v = grid[r][c];
      if (v > static_cast<int>(counts.size())) counts.resize(v, 0);
      ++counts[v - 1];
      if (v >= 2 && counts[v - 1] > counts[v - 2]) return false;
    }
  }
  return true;
}

std::vector<std::string> LRConfiguration::render() const {
  std::vector<std::string> out;
  std::size_t at = 0;
  for (int r = 1; r <= shape.outer.rows(); ++r) {
    std::string line;
    for (int c = 1; c <= shape.outer.part(r); ++c) {
      if (!line.empty()) line += ' ';
      if (c <= shape.inner.part(r)) {
        line += '.';
      } else {
        line += std::to_string(values[at++]);
      }
    }
    out.push_back(std::move(line));
  }
  return out;
}

namespace {

struct Searcher {
  const Partition& lam;
  const Partition& mu;
  const Partition& nu;
  long long cap;
  // Cells in fill order: rows top to bottom, right to left within a row, so
  // both the reading-word lattice condition and the neighbor constraints can
  // be checked incrementally.
  std::vector<std::pair<int, int>> order;
  std::vector<int> counts;             // content so far, counts[v-1]
  std::vector<std::vector<int>> grid;  // by (row, col), 0 = unset or outside
  LRResult result;

  void run() {
    for (int r = 1; r <= lam.rows(); ++r)
      for (int c = lam.part(r); c > mu.part(r); --c) order.emplace_back(r, c);
    counts.assign(nu.rows(), 0);
    grid.assign(lam.rows() + 1, {});
    for (int r = 1; r <= lam.rows(); ++r) grid[r].assign(lam.part(1) + 2, 0);
    place(0);
  }

  void place(std::size_t at) {
    if (at == order.size()) {
      ++result.coefficient;
      if (static_cast<long long>(result.witnesses.size()) < cap) {
        // Re-emit values in SkewShape::cells() order (left to right).
        SkewShape shape(lam, mu);
        std::vector<int> vals;
        for (auto [r, c] : shape.cells()) vals.push_back(grid[r][c]);
        result.witnesses.emplace_back(std::move(shape), std::move(vals));
      }
      return;
    }
    auto [r, c] = order[at];
    int right = (c + 1 <= lam.part(r)) ? grid[r][c + 1] : 0;
    bool above_in_skew = r > 1 && c > mu.part(r - 1) && c <= lam.part(r - 1);
    int above = above_in_skew ? grid[r - 1][c] : 0;
    for (int v = above + 1; v <= nu.rows(); ++v) {
      if (counts[v - 1] >= nu.parts()[v - 1]) continue;        // content bound
      if (v >= 2 && counts[v - 1] >= counts[v - 2]) continue;  // lattice prefix
      if (right && v > right) continue;                        // row weak
      grid[r][c] = v;
      ++counts[v - 1];
      place(at + 1);
      --counts[v - 1];
      grid[r][c] = 0;
    }
  }
};

}  // namespace

LRResult lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu,
                        long long witness_cap) {
  if (lam.n() != mu.n() + nu.n())
    throw std::invalid_argument("sizes must satisfy |lam| = |mu| + |nu|");
  if (!lam.contains(mu)) return {};
  Searcher s{lam, mu, nu, witness_cap, {}, {}, {}, {}};
  s.run();
  return std::move(s.result);
}

std::map<std::pair<Partition, Partition>, long long> restriction_pairs(const Partition& lam,
                                                                       int q) {
  if (lam.n() != 2 * q) throw std::invalid_argument("partition size must be 2q");
  std::map<std::pair<Partition, Partition>, long long> out;
  auto qs = partitions_of(q);
  for (const Partition& mu : qs) {
    if (!lam.contains(mu)) continue;
    for (const Partition& nu : qs) {
      LRResult res = lr_coefficient(lam, mu, nu, 0);
      if (res.coefficient) out[{mu, nu}] = res.coefficient;
    }
  }
  return out;
}

namespace {

// Fill helper addressed by (row, col) on [lam / inner].
struct FillBuilder {
  const Partition& lam;
  const Partition& inner;
  std::vector<std::vector<int>> grid;
  FillBuilder(const Partition& l, const Partition& in) : lam(l), inner(in) {
    grid.assign(l.rows() + 1, {});
    for (int r = 1; r <= l.rows(); ++r) grid[r].assign(l.part(r) + 1, 0);
  }
  void set(int r, int c, int v) {
    if (r < 1 || r > lam.rows() || c <= inner.part(r) || c > lam.part(r))
      throw std::logic_error("recipe cell outside skew diagram");
    if (grid[r][c]) throw std::logic_error("recipe cell set twice");
    grid[r][c] = v;
  }
  std::vector<int> values() const {
    std::vector<int> out;
    for (auto [r, c] : SkewShape(lam, inner).cells()) {
      if (!grid[r][c]) throw std::logic_error("recipe leaves a cell unset");
      out.push_back(grid[r][c]);
    }
    return out;
  }
};

bool filling_found(const LRResult& res, const LRConfiguration& conf) {
  return std::find(res.witnesses.begin(), res.witnesses.end(), conf) != res.witnesses.end();
}

}  // namespace

LRConfiguration RecipeReport::mu_filling() const {
  return LRConfiguration(SkewShape(lam, mu), mu_values_);
}

LRConfiguration RecipeReport::nu_filling() const {
  if (!even_case) throw std::logic_error("nu filling is only constructed in the even case");
  return LRConfiguration(SkewShape(lam, nu), nu_values_);
}

RecipeReport verify_recipe_fillings(int q, int x, int y) {
  RecipeReport rep;
  rep.lam = two_hook_shape(q, x, y);
  MuNu mn = mu_nu_constructions(q, x, y);
  rep.mu = mn.mu;
  rep.nu = mn.nu;
  rep.even_case = mn.even_case;
  int s = y - (x - 1);

  if (mn.even_case) {
    // Filling of [lam / mu] with content mu, in three disconnected pieces:
    // a 1-filled tail of row 1 (s/2 cells), the hook at (2,2) with a
    // 1-filled first row and leg entries 2..x, and a first-column tail whose
    // head is 1 and whose body runs x+1..x+s/2.
    FillBuilder fb(rep.lam, rep.mu);
    for (int c = rep.mu.part(1) + 1; c <= rep.lam.part(1); ++c) fb.set(1, c, 1);
    for (int c = 2; c <= rep.lam.part(2); ++c) fb.set(2, c, 1);
    for (int r = 3; r <= x + 1; ++r) fb.set(r, 2, r - 1);
    int tail_top = x + s / 2 + 1;
    fb.set(tail_top, 1, 1);
    for (int r = tail_top + 1; r <= rep.lam.rows(); ++r) fb.set(r, 1, x + (r - tail_top));
    rep.mu_values_ = fb.values();

    // Filling of [lam / nu] with content nu: a longer 1-filled row-1 tail
    // (s/2+1 cells), the (2,2)-hook with a 2 in its rightmost first-row cell
    // and leg entries 3..x+1, and a column tail x+2..x+s/2+1.
    FillBuilder gb(rep.lam, rep.nu);
    for (int c = rep.nu.part(1) + 1; c <= rep.lam.part(1); ++c) gb.set(1, c, 1);
    for (int c = 2; c < rep.lam.part(2); ++c) gb.set(2, c, 1);
    gb.set(2, rep.lam.part(2), 2);
    for (int r = 3; r <= x + 1; ++r) gb.set(r, 2, r);
    int w_top = x + s / 2 + 2;
    for (int r = w_top; r <= rep.lam.rows(); ++r) gb.set(r, 1, x + 2 + (r - w_top));
    rep.nu_values_ = gb.values();
  } else {
    // Filling of [lam / mu] with content mu: 1-filled row-1 tail of (s+1)/2
    // cells, the (2,2)-hook with 1-filled first row and leg 2..x, and a
    // column tail x+1..x+(s+1)/2 (no extra 1 at its head).
    FillBuilder fb(rep.lam, rep.mu);
    for (int c = rep.mu.part(1) + 1; c <= rep.lam.part(1); ++c) fb.set(1, c, 1);
    for (int c = 2; c <= rep.lam.part(2); ++c) fb.set(2, c, 1);
    for (int r = 3; r <= x + 1; ++r) fb.set(r, 2, r - 1);
    int tail_top = x + (s - 1) / 2 + 2;
    for (int r = tail_top; r <= rep.lam.rows(); ++r) fb.set(r, 1, x + 1 + (r - tail_top));
    rep.mu_values_ = fb.values();
  }

  const long long cap = 1 << 14;
  LRConfiguration mu_conf = rep.mu_filling();
  rep.mu_filling_valid = mu_conf.is_valid() && mu_conf.content() == rep.mu;
  LRResult mu_res = lr_coefficient(rep.lam, rep.mu, rep.mu, cap);
  rep.mu_filling_found = mu_res.coefficient <= cap && filling_found(mu_res, mu_conf);

  LRResult nu_res = lr_coefficient(rep.lam, rep.nu, rep.nu, cap);
  rep.nu_positive = nu_res.coefficient > 0;
  if (mn.even_case) {
    LRConfiguration nu_conf = rep.nu_filling();
    rep.nu_filling_valid = nu_conf.is_valid() && nu_conf.content() == rep.nu;
    rep.nu_filling_found = nu_res.coefficient <= cap && filling_found(nu_res, nu_conf);
    rep.pass = rep.mu_filling_valid && rep.mu_filling_found && rep.nu_filling_valid &&
               rep.nu_filling_found && rep.nu_positive;
  } else {
    rep.pass = rep.mu_filling_valid && rep.mu_filling_found && rep.nu_positive;
  }
  return rep;
}

}  // namespace sylres
