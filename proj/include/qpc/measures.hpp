#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "qpc/states.hpp"

namespace qpc {

// A split of the parties into side X and side Y. Sides must be sorted,
// disjoint, nonempty, and together cover all parties. Measurements (for the
// measured mutual information family) always act on side Y.
struct BipartitionSpec {
  std::vector<int> side_x;
  std::vector<int> side_y;

  // Grammar "AB:C": capital letters name parties alphabetically.
  static BipartitionSpec parse(const std::string& text, int n_parties);

  void validate(const std::vector<int>& dims) const;
  int dim_x(const std::vector<int>& dims) const;
  int dim_y(const std::vector<int>& dims) const;
};

enum class MeasureKind {
  negativity,
  log_negativity,
  qmi,
  measured_mi,
  discord,
  work_deficit,
};

inline constexpr std::array<MeasureKind, 6> kAllMeasureKinds = {
    MeasureKind::negativity, MeasureKind::log_negativity, MeasureKind::qmi,
    MeasureKind::measured_mi, MeasureKind::discord, MeasureKind::work_deficit};

const char* measure_tag(MeasureKind k);  // neg, logneg, qmi, mmi, discord, workdef
std::optional<MeasureKind> measure_from_tag(const std::string& tag);

// True for the kinds whose value comes from the inner measurement search.
bool needs_measurement(MeasureKind k);

// Rank-1 projective measurement on a qubit: projectors onto the +/- Bloch
// directions (sin t cos p, sin t sin p, cos t).
struct MeasurementOnQubit {
  double theta = 0;  // [0, pi]
  double phi = 0;    // [0, 2*pi)
};

std::array<ComplexMatrix, 2> measurement_projectors(const MeasurementOnQubit& m);

struct MeasureValue {
  double raw = 0;         // bits, except negativity (dimensionless)
  double normalized = 0;  // in [0, 1] up to optimizer tolerance
};

// (log2 d_part - S(rho_part)) / log2 d_part.
double purity_normalized(const MultipartiteState& state, const std::vector<int>& part);

double negativity_normalized(const MultipartiteState& state, const BipartitionSpec& split);
double log_negativity_normalized(const MultipartiteState& state, const BipartitionSpec& split);

MeasureValue quantum_mutual_information(const MultipartiteState& state,
                                        const BipartitionSpec& split);
MeasureValue measured_mutual_information(const MultipartiteState& state,
                                         const BipartitionSpec& split);
MeasureValue quantum_discord(const MultipartiteState& state, const BipartitionSpec& split);
MeasureValue work_deficit(const MultipartiteState& state, const BipartitionSpec& split);

// Mutual information of the joint outcome table of two complete projector
// families (one per side), in bits.
double classical_mutual_information(const MultipartiteState& state,
                                    const BipartitionSpec& split,
                                    const std::vector<ComplexMatrix>& meas_x,
                                    const std::vector<ComplexMatrix>& meas_y);

// Two-stage deterministic minimizer over (theta, phi): 32 x 64 coarse grid,
// then shrinking-grid refinement from the best three grid points. Ties break
// toward the lowest grid index.
std::pair<MeasurementOnQubit, double> optimize_measurement(
    const std::function<double(const MeasurementOnQubit&)>& objective);

// Both inner optimizations (minimal conditional entropy for J and D, minimal
// post-dephasing entropy for the work deficit) from a single spectral pass
// over the measurement grid.
struct MeasurementScan {
  double min_conditional_entropy = 0;
  MeasurementOnQubit argmin_conditional;
  double min_dephased_entropy = 0;
  MeasurementOnQubit argmin_dephased;
};

MeasurementScan scan_qubit_measurements(const MultipartiteState& state,
                                        const BipartitionSpec& split);

// All requested measures with shared reductions and a single measurement scan;
// values keep the request order.
struct MeasureSet {
  double purity_x = 0;
  double entropy_x = 0;
  double entropy_y = 0;
  double entropy_xy = 0;
  std::vector<std::pair<MeasureKind, MeasureValue>> values;
};

MeasureSet compute_measures(const MultipartiteState& state, const BipartitionSpec& split,
                            const std::vector<MeasureKind>& kinds);

}  // namespace qpc
