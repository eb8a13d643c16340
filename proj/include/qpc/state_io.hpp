#pragma once

#include <iosfwd>
#include <string>

#include "qpc/complementarity.hpp"

namespace qpc {

// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double v);

// State documents: {"dims": [...], "rho": [[re, im], ...]} with rho row-major.
std::string state_to_json(const MultipartiteState& state);
MultipartiteState state_from_json(const std::string& text);

// Per-sample table: sample_id,purity,<measure>...,sum_<measure>...,dist_<measure>...
void write_samples_csv(std::ostream& os, const std::vector<ComplementarityRecord>& records,
                       const std::vector<MeasureKind>& kinds);

// Aggregate table: rank,measure,mean_distance,violations,samples
void write_aggregate_csv(std::ostream& os, const std::vector<EnsembleReport>& reports);

// Histogram table: bin_low,bin_high,rel_freq
void write_histogram_csv(std::ostream& os, const Histogram& hist);

std::string report_to_json(const EnsembleReport& report);

}  // namespace qpc
