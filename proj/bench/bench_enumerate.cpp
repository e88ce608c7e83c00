// Serial reference vs OpenMP enumeration on one degree. Prints wall times and
// whether both paths produced the same curves.
//
//   bench_enumerate [B00 B01 B10 B11] [jobs]
#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "tropabel/enumerate.hpp"

using namespace tropabel;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int omp_default_jobs() { return omp_get_max_threads(); }

}  // namespace

int main(int argc, char** argv) {
  IMat2 B(2, 0, 0, 2);
  if (argc >= 5) B = IMat2(std::atoll(argv[1]), std::atoll(argv[2]), std::atoll(argv[3]), std::atoll(argv[4]));
  const int jobs = argc >= 6 ? std::atoi(argv[5]) : 0;

  // S = M comatrix(B) gives B S^T = det(B) M, symmetric positive definite.
  const IMat2 M(7, 2, 2, 5);
  const IMat2 S_int = M * comatrix(B);
  if (det2(S_int) <= 0) {
    std::cerr << "degree must have positive determinant\n";
    return 2;
  }
  const TropicalTorus t(to_rational(S_int));
  const PointConfig cfg = sample_config(t, 2, 1);
  const SearchBounds bounds = default_bounds(B);

  EnumerationResult serial = enumerate_serial(t, B, 2, cfg, bounds);
  EnumerationResult parallel = serial;
  const double ts = seconds([&] { serial = enumerate_serial(t, B, 2, cfg, bounds); });
  const double tp = seconds([&] { parallel = enumerate(t, B, 2, cfg, bounds, jobs); });

  std::cout << "degree " << to_string(B) << "  S " << to_string(S_int) << "  bounds (" << bounds.slope_bound << ", "
            << bounds.winding_bound << ")\n"
            << "curves      " << serial.curves.size() << "\n"
            << "serial      " << ts << " s\n"
            << "openmp      " << tp << " s  (jobs " << (jobs > 0 ? jobs : omp_default_jobs()) << ")\n"
            << "speedup     " << ts / tp << "\n"
            << "identical   " << (serial == parallel ? "yes" : "NO") << "\n";
  return serial == parallel ? 0 : 1;
}
