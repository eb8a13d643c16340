#include "qpc/state_io.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace qpc {

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string state_to_json(const MultipartiteState& state) {
  nlohmann::json j;
  j["dims"] = state.dims;
  nlohmann::json rho = nlohmann::json::array();
  for (Eigen::Index r = 0; r < state.rho.rows(); ++r)
    for (Eigen::Index c = 0; c < state.rho.cols(); ++c) {
      const Complex& z = state.rho(r, c);
      rho.push_back({z.real(), z.imag()});
    }
  j["rho"] = std::move(rho);
  return j.dump();
}

MultipartiteState state_from_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    if (dims.empty()) throw std::invalid_argument("state document has empty dims");
    Eigen::Index d = 1;
    for (int x : dims) {
      if (x < 1) throw std::invalid_argument("state document has non-positive dims");
      d *= x;
    }
    const auto& rho = j.at("rho");
    if (!rho.is_array() || static_cast<Eigen::Index>(rho.size()) != d * d)
      throw std::invalid_argument("rho must hold dims-product squared entries");
    ComplexMatrix m(d, d);
    Eigen::Index k = 0;
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c, ++k) {
        const auto& entry = rho.at(k);
        if (!entry.is_array() || entry.size() != 2)
          throw std::invalid_argument("rho entries must be [re, im] pairs");
        m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
      }
    return make_state(std::move(m), std::move(dims));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed state document: ") + e.what());
  }
}

void write_samples_csv(std::ostream& os, const std::vector<ComplementarityRecord>& records,
                       const std::vector<MeasureKind>& kinds) {
  os << "sample_id,purity";
  for (MeasureKind k : kinds) os << ',' << measure_tag(k);
  for (MeasureKind k : kinds) os << ",sum_" << measure_tag(k);
  for (MeasureKind k : kinds) os << ",dist_" << measure_tag(k);
  os << '\n';
  for (size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    os << i << ',' << format_double(rec.purity);
    for (MeasureKind k : kinds) os << ',' << format_double(rec.measure_values.at(k));
    for (MeasureKind k : kinds) os << ',' << format_double(rec.sums.at(k));
    for (MeasureKind k : kinds) os << ',' << format_double(rec.distances.at(k));
    os << '\n';
  }
}

void write_aggregate_csv(std::ostream& os, const std::vector<EnsembleReport>& reports) {
  os << "rank,measure,mean_distance,violations,samples\n";
  for (const auto& rep : reports)
    for (MeasureKind k : rep.kinds)
      os << rep.rank << ',' << measure_tag(k) << ',' << format_double(rep.mean_distance.at(k))
         << ',' << rep.violation_count.at(k) << ',' << rep.samples << '\n';
}

void write_histogram_csv(std::ostream& os, const Histogram& hist) {
  os << "bin_low,bin_high,rel_freq\n";
  for (size_t i = 0; i < hist.rel_freq.size(); ++i)
    os << format_double(hist.edges[i]) << ',' << format_double(hist.edges[i + 1]) << ','
       << format_double(hist.rel_freq[i]) << '\n';
}

std::string report_to_json(const EnsembleReport& report) {
  nlohmann::json j;
  j["rank"] = report.rank;
  j["samples"] = report.samples;
  j["bound"] = report.bound;
  nlohmann::json measures;
  for (MeasureKind k : report.kinds) {
    const Histogram& hist = report.histograms.at(k);
    measures[measure_tag(k)] = {{"mean_distance", report.mean_distance.at(k)},
                                {"violations", report.violation_count.at(k)},
                                {"histogram",
                                 {{"bin_edges", hist.edges}, {"rel_freq", hist.rel_freq}}}};
  }
  j["measures"] = std::move(measures);
  return j.dump(2) + "\n";
}

}  // namespace qpc
