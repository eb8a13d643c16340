// Times the serial reference path against the OpenMP path on the same
// ensemble and verifies the emitted records match byte for byte.

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <omp.h>

#include "qpc/complementarity.hpp"
#include "qpc/state_io.hpp"

int main(int argc, char** argv) {
  int samples = argc > 1 ? std::atoi(argv[1]) : 200;
  int rank = argc > 2 ? std::atoi(argv[2]) : 2;
  qpc::SamplerConfig cfg{{2, 2, 2}, rank, 7, samples};
  auto split = qpc::BipartitionSpec::parse("AB:C", 3);
  std::vector<qpc::MeasureKind> kinds(qpc::kAllMeasureKinds.begin(),
                                      qpc::kAllMeasureKinds.end());

  double t0 = omp_get_wtime();
  auto serial = qpc::ensemble_records(cfg, split, kinds, false);
  double t1 = omp_get_wtime();
  auto parallel = qpc::ensemble_records(cfg, split, kinds, true);
  double t2 = omp_get_wtime();

  std::ostringstream a, b;
  qpc::write_samples_csv(a, serial, kinds);
  qpc::write_samples_csv(b, parallel, kinds);
  bool same = a.str() == b.str();

  double ts = t1 - t0, tp = t2 - t1;
  std::printf("samples             %d (rank %d, all six measures)\n", samples, rank);
  std::printf("serial              %.3f s  (%.2f ms/sample)\n", ts, 1e3 * ts / samples);
  std::printf("openmp (%d workers)  %.3f s  (%.2f ms/sample)\n", omp_get_max_threads(), tp,
              1e3 * tp / samples);
  std::printf("speedup             %.2fx\n", ts / tp);
  std::printf("outputs identical   %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
