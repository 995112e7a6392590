#include "sylres/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sylres {

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
  if (workers > 1 && n > 1) {
    const long long count = static_cast<long long>(n);
#pragma omp parallel for num_threads(workers) schedule(static)
    for (long long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)workers;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

long long centralizer_scan_serial(const std::vector<Perm>& elements, const Perm& g) {
  long long count = 0;
  for (const Perm& h : elements)
    if (h.then(g) == g.then(h)) ++count;
  return count;
}

long long centralizer_scan_parallel(const std::vector<Perm>& elements, const Perm& g,
                                    int workers) {
  if (workers <= 1) return centralizer_scan_serial(elements, g);
  const std::size_t stripes = static_cast<std::size_t>(workers);
  std::vector<long long> local(stripes, 0);
  parallel_for(stripes, workers, [&](std::size_t w) {
    long long c = 0;
    for (std::size_t i = w; i < elements.size(); i += stripes)
      if (elements[i].then(g) == g.then(elements[i])) ++c;
    local[w] = c;
  });
  long long total = 0;
  for (long long c : local) total += c;
  return total;
}

}  // namespace sylres
