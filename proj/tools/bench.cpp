// Times the parallel scan kernels against their serial reference twins on
// the stock groups, then a full theorem-a instance at 1 vs N workers.  Exits
// nonzero if any parallel result disagrees with the serial one.

#include "sylres/kernels.hpp"
#include "sylres/restriction.hpp"
#include "sylres/sylow.hpp"

#include <chrono>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

using namespace sylres;

namespace {

template <class Fn>
long long time_us(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const std::string& name, long long serial_us, long long parallel_us) {
  std::cout << name << ": serial " << serial_us / 1000.0 << "ms, parallel "
            << parallel_us / 1000.0 << "ms, speedup "
            << (parallel_us > 0 ? double(serial_us) / double(parallel_us) : 0.0) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int n = 16;
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--n" && i + 1 < argc) n = std::stoi(argv[++i]);
    if (arg == "--workers" && i + 1 < argc) workers = std::stoi(argv[++i]);
  }
  std::cout << "n=" << n << " workers=" << workers << "\n";

  const std::size_t budget = std::size_t(1) << 20;
  EnumeratedGroup P = enumerate_sylow(n, 2, budget);
  std::cout << "|P_" << n << "| = " << P.size() << "\n";

  bool ok = true;

  // bucketing by (cycle type, abelianization coordinates)
  const SylowStructure st = SylowStructure::of(n, 2);
  const PLinearCharacters lp = PLinearCharacters::build(st);
  auto key = [&lp](const Perm& g) {
    CycleType t = g.cycle_type();
    return std::make_pair(t.parts(), lp.exponent_vector(g));
  };
  decltype(bucket_elements_serial(P.elements, key)) bs, bp;
  const long long t_bs = time_us([&] { bs = bucket_elements_serial(P.elements, key); });
  const long long t_bp =
      time_us([&] { bp = bucket_elements_parallel(P.elements, key, workers); });
  row("bucket P_" + std::to_string(n), t_bs, t_bp);
  if (bs != bp) {
    std::cout << "MISMATCH: parallel bucketing differs from serial\n";
    ok = false;
  }

  // centralizer scans at the distinguished elements
  const Perm om = omega_padic(n, 2);
  long long cs = 0, cp = 0;
  const long long t_cs = time_us([&] { cs = centralizer_scan_serial(P.elements, om); });
  const long long t_cp =
      time_us([&] { cp = centralizer_scan_parallel(P.elements, om, workers); });
  row("centralizer scan", t_cs, t_cp);
  if (cs != cp) {
    std::cout << "MISMATCH: centralizer scans disagree (" << cs << " vs " << cp << ")\n";
    ok = false;
  }

  // one full verification statement, single- versus multi-worker
  long long t1 = 0, tn = 0;
  {
    RestrictionEngine engine(budget, 1);
    t1 = time_us([&] { engine.verify_theorem_a(12, 2); });
  }
  {
    RestrictionEngine engine(budget, workers);
    tn = time_us([&] { engine.verify_theorem_a(12, 2); });
  }
  row("theorem-a n=12", t1, tn);

  std::cout << (ok ? "kernels agree\n" : "kernels disagree\n");
  return ok ? 0 : 1;
}
