#pragma once

#include <map>

#include "qpc/measures.hpp"

namespace qpc {

// Right-hand side of the purity-correlation bound P + Q <= b: 1 when
// d_x <= d_y, otherwise 2 - log2(d_y)/log2(d_x).
double bound_for(int d_x, int d_y);

// Signed distance (bound - sum)/sqrt(2) from the line P + Q = bound.
double perpendicular_distance(double sum, double bound);

// Violation tolerances: spectral measures are exact up to eigensolver noise,
// the measurement-based ones inherit the optimizer tolerance.
inline constexpr double kSpectralTol = 1e-6;
inline constexpr double kOptimizerTol = 1e-3;
double violation_tolerance(MeasureKind k);

struct ComplementarityRecord {
  double purity = 0;
  double bound = 0;
  std::vector<MeasureKind> kinds;  // evaluation order
  std::map<MeasureKind, double> measure_values;  // normalized
  std::map<MeasureKind, double> sums;            // purity + value
  std::map<MeasureKind, double> distances;       // (bound - sum)/sqrt(2)
  // Side condition raw Q' <= log2 d_y, automatic for the QMI; recorded as a
  // flag for the other kinds.
  std::map<MeasureKind, bool> side_condition_ok;
};

ComplementarityRecord evaluate(const MultipartiteState& state, const BipartitionSpec& split,
                               const std::vector<MeasureKind>& kinds);

// Purity of AB plus min{Q_{A:C}, Q_{B:C}}, each Q on the two-party reduction;
// kind must be negativity or qmi.
double min_single_party_variant(const MultipartiteState& state, MeasureKind kind);

// One record per sample of the configured ensemble, ordered by sample index.
// The parallel path fans samples out over OpenMP workers; results are
// identical to the serial path regardless of worker count.
std::vector<ComplementarityRecord> ensemble_records(const SamplerConfig& cfg,
                                                    const BipartitionSpec& split,
                                                    const std::vector<MeasureKind>& kinds,
                                                    bool parallel = true);

struct Histogram {
  std::vector<double> edges;     // bins + 1 equal-width edges over [0, bound]
  std::vector<double> rel_freq;  // bins entries, summing to 1
};

struct EnsembleReport {
  int rank = 0;
  int samples = 0;
  double bound = 0;
  std::vector<MeasureKind> kinds;
  std::map<MeasureKind, double> mean_distance;
  std::map<MeasureKind, int> violation_count;
  std::map<MeasureKind, Histogram> histograms;  // over the sums
};

EnsembleReport report_from_records(const std::vector<ComplementarityRecord>& records,
                                   int rank, int bins);

EnsembleReport ensemble_report(const SamplerConfig& cfg, const BipartitionSpec& split,
                               const std::vector<MeasureKind>& kinds, int bins);

}  // namespace qpc
