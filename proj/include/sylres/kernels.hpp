#pragma once

#include "sylres/perm.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <type_traits>
#include <vector>

namespace sylres {

// Runs fn(i) for i in [0, n).  With workers > 1 (and OpenMP compiled in)
// iterations are split statically across threads; otherwise they run
// inline, in order.  fn must be safe to call concurrently.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

// Histogram of elements under an arbitrary key function.  The serial
// version is the reference implementation; the parallel one builds
// per-worker histograms and merges them, so the two agree exactly (counts
// are additive and the map ordering is key order either way).
template <class KeyFn>
auto bucket_elements_serial(const std::vector<Perm>& elements, KeyFn&& key)
    -> std::map<std::decay_t<std::invoke_result_t<KeyFn, const Perm&>>, long long> {
  std::map<std::decay_t<std::invoke_result_t<KeyFn, const Perm&>>, long long> out;
  for (const Perm& g : elements) ++out[key(g)];
  return out;
}

template <class KeyFn>
auto bucket_elements_parallel(const std::vector<Perm>& elements, KeyFn&& key, int workers)
    -> std::map<std::decay_t<std::invoke_result_t<KeyFn, const Perm&>>, long long> {
  using Map = std::map<std::decay_t<std::invoke_result_t<KeyFn, const Perm&>>, long long>;
  if (workers <= 1) return bucket_elements_serial(elements, key);
  const std::size_t stripes = static_cast<std::size_t>(workers);
  std::vector<Map> local(stripes);
  parallel_for(stripes, workers, [&](std::size_t w) {
    for (std::size_t i = w; i < elements.size(); i += stripes) ++local[w][key(elements[i])];
  });
  Map out;
  for (const Map& m : local)
    for (const auto& [k, c] : m) out[k] += c;
  return out;
}

// Number of listed elements commuting with g.
long long centralizer_scan_serial(const std::vector<Perm>& elements, const Perm& g);
long long centralizer_scan_parallel(const std::vector<Perm>& elements, const Perm& g,
                                    int workers);

}  // namespace sylres
