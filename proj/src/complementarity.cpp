#include "qpc/complementarity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpc {

double bound_for(int d_x, int d_y) {
  if (d_x < 2 || d_y < 2) throw std::invalid_argument("side dimensions must be at least 2");
  if (d_x <= d_y) return 1.0;
  return 2.0 - std::log2(static_cast<double>(d_y)) / std::log2(static_cast<double>(d_x));
}

double perpendicular_distance(double sum, double bound) {
  return (bound - sum) / std::numbers::sqrt2;
}

double violation_tolerance(MeasureKind k) {
  return needs_measurement(k) ? kOptimizerTol : kSpectralTol;
}

ComplementarityRecord evaluate(const MultipartiteState& state, const BipartitionSpec& split,
                               const std::vector<MeasureKind>& kinds) {
  MeasureSet set = compute_measures(state, split, kinds);
  ComplementarityRecord rec;
  rec.purity = set.purity_x;
  rec.bound = bound_for(split.dim_x(state.dims), split.dim_y(state.dims));
  rec.kinds = kinds;
  double log2_dy = std::log2(static_cast<double>(split.dim_y(state.dims)));
  for (const auto& [kind, value] : set.values) {
    rec.measure_values[kind] = value.normalized;
    double sum = rec.purity + value.normalized;
    rec.sums[kind] = sum;
    rec.distances[kind] = perpendicular_distance(sum, rec.bound);
    rec.side_condition_ok[kind] =
        kind == MeasureKind::qmi || value.raw <= log2_dy + kSpectralTol;
  }
  return rec;
}

double min_single_party_variant(const MultipartiteState& state, MeasureKind kind) {
  if (state.dims.size() != 3)
    throw std::invalid_argument("single-party variant needs exactly three parties");
  if (kind != MeasureKind::negativity && kind != MeasureKind::qmi)
    throw std::invalid_argument("single-party variant supports negativity and qmi only");

  double purity = purity_normalized(state, {0, 1});
  BipartitionSpec two{{0}, {1}};
  auto q_of = [&](int a, int b) {
    MultipartiteState red{partial_trace(state.rho, state.dims, {a, b}),
                          {state.dims[a], state.dims[b]}};
    return kind == MeasureKind::negativity
               ? negativity_normalized(red, two)
               : quantum_mutual_information(red, two).normalized;
  };
  return purity + std::min(q_of(0, 2), q_of(1, 2));
}

std::vector<ComplementarityRecord> ensemble_records(const SamplerConfig& cfg,
                                                    const BipartitionSpec& split,
                                                    const std::vector<MeasureKind>& kinds,
                                                    bool parallel) {
  if (cfg.count < 1) throw std::invalid_argument("sample count must be positive");
  split.validate(cfg.dims);
  bool any_scan = std::any_of(kinds.begin(), kinds.end(), needs_measurement);
  if (any_scan && (split.side_y.size() != 1 || cfg.dims[split.side_y[0]] != 2))
    throw std::invalid_argument("measured side must be a single qubit");

  std::vector<ComplementarityRecord> records(cfg.count);
  std::string error;
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < cfg.count; ++i) {
      try {
        records[i] = evaluate(haar_ranked_at(cfg.dims, cfg.rank, cfg.seed, i), split, kinds);
      } catch (const std::exception& e) {
#pragma omp critical
        error = e.what();
      }
    }
  } else {
    for (int i = 0; i < cfg.count; ++i)
      records[i] = evaluate(haar_ranked_at(cfg.dims, cfg.rank, cfg.seed, i), split, kinds);
  }
  if (!error.empty()) throw std::runtime_error(error);
  return records;
}

EnsembleReport report_from_records(const std::vector<ComplementarityRecord>& records,
                                   int rank, int bins) {
  if (records.empty()) throw std::invalid_argument("no records to aggregate");
  if (bins < 1) throw std::invalid_argument("bin count must be positive");

  EnsembleReport rep;
  rep.rank = rank;
  rep.samples = static_cast<int>(records.size());
  rep.bound = records.front().bound;
  rep.kinds = records.front().kinds;

  for (MeasureKind kind : rep.kinds) {
    long double acc = 0;
    int violations = 0;
    std::vector<long long> counts(bins, 0);
    double tol = violation_tolerance(kind);
    for (const auto& rec : records) {
      acc += rec.distances.at(kind);
      double sum = rec.sums.at(kind);
      if (sum > rep.bound + tol) ++violations;
      int b = static_cast<int>(sum / rep.bound * bins);
      counts[std::clamp(b, 0, bins - 1)]++;
    }
    rep.mean_distance[kind] = static_cast<double>(acc / rep.samples);
    rep.violation_count[kind] = violations;
    Histogram hist;
    hist.edges.resize(bins + 1);
    for (int i = 0; i <= bins; ++i) hist.edges[i] = rep.bound * i / bins;
    hist.rel_freq.resize(bins);
    for (int i = 0; i < bins; ++i)
      hist.rel_freq[i] = static_cast<double>(counts[i]) / rep.samples;
    rep.histograms[kind] = std::move(hist);
  }
  return rep;
}

EnsembleReport ensemble_report(const SamplerConfig& cfg, const BipartitionSpec& split,
                               const std::vector<MeasureKind>& kinds, int bins) {
  return report_from_records(ensemble_records(cfg, split, kinds, true), cfg.rank, bins);
}

}  // namespace qpc
