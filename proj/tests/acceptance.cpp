// End-to-end acceptance runs: full-size ensembles, reference statistics,
// structural invariants, and CLI determinism. Prints one line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qpc/complementarity.hpp"
#include "qpc/keyrate.hpp"
#include "qpc/state_io.hpp"
#include "test_util.hpp"

using qpc::MeasureKind;

namespace {

int g_failures = 0;

void report(bool ok, int num, const std::string& name, const std::string& detail) {
  if (!ok) ++g_failures;
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n" << std::flush;
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  const std::vector<int> dims{2, 2, 2};
  const qpc::BipartitionSpec split{{0, 1}, {2}};
  const std::vector<MeasureKind> kinds(qpc::kAllMeasureKinds.begin(),
                                       qpc::kAllMeasureKinds.end());
  const std::uint64_t seed = 42;
  const int samples = 10000;

  // Reference mean distances by measure and rank for the 2x2x2 AB:C ensembles.
  const std::map<MeasureKind, std::array<double, 4>> reference{
      {MeasureKind::negativity, {0.043, 0.390, 0.590, 0.706}},
      {MeasureKind::log_negativity, {0.013, 0.338, 0.531, 0.651}},
      {MeasureKind::qmi, {0.093, 0.354, 0.509, 0.612}},
      {MeasureKind::measured_mi, {0.093, 0.296, 0.481, 0.605}},
      {MeasureKind::discord, {0.093, 0.412, 0.536, 0.619}},
      {MeasureKind::work_deficit, {0.093, 0.372, 0.504, 0.594}}};

  std::map<MeasureKind, std::array<double, 4>> means;
  int total_violations = 0;
  double rank1_elapsed = 0;
  double fig3_max_qmi = 0, fig3_max_neg = 0;

  for (int rank = 1; rank <= 4; ++rank) {
    auto t0 = std::chrono::steady_clock::now();
    qpc::SamplerConfig cfg{dims, rank, seed, samples};
    auto records = qpc::ensemble_records(cfg, split, kinds, true);
    auto rep = qpc::report_from_records(records, rank, 50);
    for (MeasureKind k : kinds) {
      means[k][rank - 1] = rep.mean_distance.at(k);
      total_violations += rep.violation_count.at(k);
    }
    if (rank == 1) {
      // Single-party variant of the sum for the same ensemble.
      for (int i = 0; i < samples; ++i) {
        auto s = qpc::haar_ranked_at(dims, 1, seed, i);
        fig3_max_qmi = std::max(fig3_max_qmi,
                                qpc::min_single_party_variant(s, MeasureKind::qmi));
        fig3_max_neg = std::max(fig3_max_neg,
                                qpc::min_single_party_variant(s, MeasureKind::negativity));
      }
      rank1_elapsed = elapsed_s(t0);
    }
  }

  // 1: rank-1 mean distances against the reference row, inside the time budget.
  {
    bool ok = rank1_elapsed < 600.0;
    std::ostringstream detail;
    for (MeasureKind k : kinds) {
      double got = means[k][0];
      ok = ok && std::abs(got - reference.at(k)[0]) <= 0.005;
      detail << qpc::measure_tag(k) << "=" << fmt(got) << " ";
    }
    detail << "in " << fmt(rank1_elapsed, 1) << " s";
    report(ok, 1, "rank-1 mean distances", detail.str());
  }

  // 2: the QMI mean distance against its closed-form ensemble average.
  {
    const double expected = 0.0936607220555203;
    double got = means[MeasureKind::qmi][0];
    report(std::abs(got - expected) <= 0.002, 2, "rank-1 qmi mean vs analytic value",
           "got " + fmt(got, 6) + ", expected " + fmt(expected, 6));
  }

  // 3: distances grow strictly with rank and match the reference table.
  {
    bool increasing = true, matches = true;
    double worst = 0;
    for (MeasureKind k : kinds) {
      for (int r = 1; r < 4; ++r)
        if (means[k][r] <= means[k][r - 1]) increasing = false;
      for (int r = 0; r < 4; ++r) {
        double dev = std::abs(means[k][r] - reference.at(k)[r]);
        worst = std::max(worst, dev);
        if (dev > 0.05) matches = false;
      }
    }
    report(increasing && matches, 3, "mean distances by rank",
           std::string(increasing ? "strictly increasing" : "not increasing") +
               ", max deviation " + fmt(worst));
  }

  // 4: the GHZ state saturates the bound for both spectral measures.
  {
    auto rec = qpc::evaluate(qpc::ghz_state(), split,
                             {MeasureKind::log_negativity, MeasureKind::qmi});
    double d_log = std::abs(rec.sums.at(MeasureKind::log_negativity) - 1.5);
    double d_qmi = std::abs(rec.sums.at(MeasureKind::qmi) - 1.5);
    report(d_log < 1e-9 && d_qmi < 1e-9, 4, "ghz saturation",
           "|sum-1.5| = " + fmt(std::max(d_log, d_qmi), 12));
  }

  // 5: no sample violates the bound, including the single-party variant.
  {
    bool ok = total_violations == 0 && fig3_max_qmi <= 1.5 + 1e-6 &&
              fig3_max_neg <= 1.5 + 1e-6;
    report(ok, 5, "no bound violations",
           "violations=" + std::to_string(total_violations) + ", variant max qmi=" +
               fmt(fig3_max_qmi) + " neg=" + fmt(fig3_max_neg));
  }

  // 6: key-rate threshold location and sign change.
  {
    double e_star = qpc::werner_threshold();
    double r11 = qpc::ck_rate_lower_bound(0.11, qpc::werner_entropy_from_error(0.11), 4, 4,
                                          1.0);
    bool ok = std::abs(e_star - 0.0357) <= 0.001 && r11 < 0.0;
    report(ok, 6, "werner key-rate threshold",
           "threshold=" + fmt(e_star, 6) + ", rate(e=0.11)=" + fmt(r11));
  }

  // 7: structural invariants on full-rank two-qubit states.
  {
    const qpc::BipartitionSpec ab{{0}, {1}};
    qpc::SampleRng meas_rng(7, 1u << 20);
    bool ok = true;
    std::string first_fail;
    for (int i = 0; i < 1000 && ok; ++i) {
      auto s = qpc::haar_ranked_at({2, 2}, 4, 7, i);
      auto set = qpc::compute_measures(
          s, ab, {MeasureKind::qmi, MeasureKind::measured_mi, MeasureKind::discord});
      double sa = set.entropy_x, sb = set.entropy_y, sab = set.entropy_xy;
      double qmi = set.values[0].second.raw;
      double mmi = set.values[1].second.raw;
      double discord = set.values[2].second.raw;
      auto fx = test_util::random_unitary(2, meas_rng);
      auto fy = test_util::random_unitary(2, meas_rng);
      double cmi = qpc::classical_mutual_information(
          s, ab, {fx.col(0) * fx.col(0).adjoint(), fx.col(1) * fx.col(1).adjoint()},
          {fy.col(0) * fy.col(0).adjoint(), fy.col(1) * fy.col(1).adjoint()});
      if (sab > sa + sb + 1e-8) ok = false, first_fail = "subadditivity";
      if (std::abs(sa - sb) > sab + 1e-8) ok = false, first_fail = "triangle inequality";
      if (qmi > 2.0 * std::min(sa, sb) + 1e-8) ok = false, first_fail = "qmi cap";
      if (mmi > qmi + 1e-9) ok = false, first_fail = "mmi above qmi";
      if (discord < -1e-3) ok = false, first_fail = "negative discord";
      if (cmi > qmi + 1e-9) ok = false, first_fail = "classical above quantum";
    }
    report(ok, 7, "two-qubit entropy and ordering invariants",
           ok ? "1000 states" : "violated: " + first_fail);
  }

  // 8: on pure tripartite states every measurement-based measure collapses to
  // the marginal entropy of the unmeasured-side complement.
  {
    bool ok = true;
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      auto s = qpc::haar_ranked_at(dims, 1, 11, i);
      auto set = qpc::compute_measures(
          s, split,
          {MeasureKind::qmi, MeasureKind::measured_mi, MeasureKind::discord,
           MeasureKind::work_deficit});
      double sc = set.entropy_y;
      double d_qmi = std::abs(set.values[0].second.raw - 2.0 * sc);
      double d_mmi = std::abs(set.values[1].second.raw - sc);
      double d_dis = std::abs(set.values[2].second.raw - sc);
      double d_def = std::abs(set.values[3].second.raw - sc);
      worst = std::max({worst, d_mmi, d_dis, d_def});
      if (d_qmi > 1e-8 || d_mmi > 2e-3 || d_dis > 2e-3 || d_def > 2e-3) ok = false;
    }
    report(ok, 8, "pure-state collapse", "max deviation " + fmt(worst, 6));
  }

  // 9: the CLI emits byte-identical files regardless of the worker count.
  {
    std::vector<std::string> dirs;
    bool ran = true;
    for (int threads : {1, 3, 2}) {
      auto dir = test_util::make_temp_dir();
      auto res = test_util::run_cli(
          "ensemble --ranks 1,2 --samples 250 --seed 42 --threads " +
              std::to_string(threads) + " --out " + dir,
          dir);
      ran = ran && res.exit_code == 0;
      dirs.push_back(dir);
    }
    bool identical = ran;
    std::vector<std::string> names{"aggregate.csv", "samples_rank1.csv", "samples_rank2.csv"};
    for (MeasureKind k : kinds) {
      names.push_back(std::string("hist_rank1_") + qpc::measure_tag(k) + ".csv");
      names.push_back(std::string("hist_rank2_") + qpc::measure_tag(k) + ".csv");
    }
    if (ran) {
      try {
        for (const auto& name : names) {
          auto base = test_util::read_file(dirs[0] + "/" + name);
          for (size_t d = 1; d < dirs.size(); ++d)
            if (test_util::read_file(dirs[d] + "/" + name) != base) identical = false;
        }
      } catch (const std::exception&) {
        identical = false;
      }
    }
    report(identical, 9, "cli output is worker-count invariant",
           ran ? std::to_string(names.size()) + " files x 3 runs" : "cli run failed");
  }

  std::cout << (g_failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
  return g_failures == 0 ? 0 : 1;
}
