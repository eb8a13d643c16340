#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "qpc/keyrate.hpp"
#include "qpc/state_io.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<qpc::MeasureKind> parse_tags(const std::vector<std::string>& tags) {
  std::vector<qpc::MeasureKind> kinds;
  for (const auto& t : tags) {
    auto k = qpc::measure_from_tag(t);
    if (!k)
      throw std::invalid_argument("unknown measure '" + t +
                                  "'; valid tags: neg, logneg, qmi, mmi, discord, workdef");
    kinds.push_back(*k);
  }
  return kinds;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::invalid_argument("cannot read " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"purity-correlation complementarity toolkit for random multipartite states"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "write a state as a JSON document");
  std::string gen_kind;
  gen->add_option("kind", gen_kind, "ghz | werner | haar | haar-ranked")
      ->required()
      ->check(CLI::IsMember({"ghz", "werner", "haar", "haar-ranked"}));
  double gen_p = 0.5;
  gen->add_option("--p", gen_p, "Werner mixing parameter");
  std::vector<int> gen_dims{2, 2, 2};
  gen->add_option("--dims", gen_dims, "local dimensions")->delimiter(',');
  int gen_rank = 1;
  gen->add_option("--rank", gen_rank, "rank for haar-ranked");
  std::uint64_t gen_seed = 0;
  auto* gen_seed_opt = gen->add_option("--seed", gen_seed, "RNG seed (required for haar kinds)");
  std::string gen_out;
  gen->add_option("--out", gen_out, "output file (default: stdout)");

  auto* ens = app.add_subcommand("ensemble", "sample ensembles and emit report files");
  std::vector<int> ens_ranks{1, 2, 3, 4};
  ens->add_option("--ranks", ens_ranks, "ranks to sample")->delimiter(',');
  int ens_samples = 10000;
  ens->add_option("--samples", ens_samples, "samples per rank");
  std::vector<std::string> ens_measures{"neg", "logneg", "qmi", "mmi", "discord", "workdef"};
  ens->add_option("--measures", ens_measures, "measure tags")->delimiter(',');
  std::uint64_t ens_seed = 0;
  ens->add_option("--seed", ens_seed, "RNG seed")->required();
  int ens_bins = 50;
  ens->add_option("--bins", ens_bins, "histogram bin count");
  std::string ens_out = ".";
  ens->add_option("--out", ens_out, "output directory");
  std::string ens_split = "AB:C";
  ens->add_option("--split", ens_split, "bipartition, e.g. AB:C");
  std::vector<int> ens_dims{2, 2, 2};
  ens->add_option("--dims", ens_dims, "local dimensions")->delimiter(',');
  int ens_threads = 0;
  ens->add_option("--threads", ens_threads, "worker count (0 = library default)");
  std::string ens_format = "csv";
  ens->add_option("--format", ens_format)->check(CLI::IsMember({"csv", "json"}));

  auto* chk = app.add_subcommand("check", "evaluate the complementarity sum of a state file");
  std::string chk_file;
  chk->add_option("state", chk_file, "state JSON file")->required();
  std::string chk_split = "AB:C";
  chk->add_option("--split", chk_split, "bipartition, e.g. AB:C");
  std::vector<std::string> chk_measures{"neg", "logneg", "qmi", "mmi", "discord", "workdef"};
  chk->add_option("--measures", chk_measures, "measure tags")->delimiter(',');

  auto* key = app.add_subcommand("keyrate", "Csiszar-Korner rate bound queries");
  std::string key_mode = "error";
  key->add_option("mode", key_mode, "error | werner | threshold")
      ->check(CLI::IsMember({"error", "werner", "threshold"}));
  double key_error = 0;
  auto* key_error_opt = key->add_option("--error", key_error, "bit error rate");
  double key_sab = 0;
  key->add_option("--s-ab", key_sab, "entropy of the shared state, bits");
  int key_dab = 4, key_de = 4;
  key->add_option("--d-ab", key_dab, "dimension of the shared system");
  key->add_option("--d-e", key_de, "eavesdropper dimension");
  double key_b = 1.0;
  key->add_option("--b", key_b, "complementarity constant");
  double key_p = 0;
  auto* key_p_opt = key->add_option("--p", key_p, "Werner mixing parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      qpc::MultipartiteState state;
      if (gen_kind == "ghz") {
        state = qpc::ghz_state();
      } else if (gen_kind == "werner") {
        state = qpc::werner_state(gen_p);
      } else {
        if (gen_seed_opt->count() == 0)
          throw std::invalid_argument("--seed is required for haar sampling");
        state = gen_kind == "haar" ? qpc::haar_pure(gen_dims, gen_seed)
                                   : qpc::haar_ranked_at(gen_dims, gen_rank, gen_seed, 0);
      }
      std::string doc = qpc::state_to_json(state) + "\n";
      if (gen_out.empty())
        std::cout << doc;
      else
        write_file(gen_out, doc);
      return 0;
    }

    if (ens->parsed()) {
      auto kinds = parse_tags(ens_measures);
      auto split = qpc::BipartitionSpec::parse(ens_split, static_cast<int>(ens_dims.size()));
      if (ens_threads > 0) omp_set_num_threads(ens_threads);
      fs::path dir(ens_out);
      fs::create_directories(dir);
      std::vector<qpc::EnsembleReport> reports;
      for (int rank : ens_ranks) {
        qpc::SamplerConfig cfg{ens_dims, rank, ens_seed, ens_samples};
        auto records = qpc::ensemble_records(cfg, split, kinds, true);
        auto report = qpc::report_from_records(records, rank, ens_bins);
        std::string suffix = std::to_string(rank);
        if (ens_format == "json") {
          write_file(dir / ("report_rank" + suffix + ".json"), qpc::report_to_json(report));
        } else {
          std::ostringstream samples;
          qpc::write_samples_csv(samples, records, kinds);
          write_file(dir / ("samples_rank" + suffix + ".csv"), samples.str());
          for (qpc::MeasureKind k : kinds) {
            std::ostringstream hist;
            qpc::write_histogram_csv(hist, report.histograms.at(k));
            write_file(dir / ("hist_rank" + suffix + "_" + qpc::measure_tag(k) + ".csv"),
                       hist.str());
          }
          reports.push_back(std::move(report));
        }
      }
      if (ens_format == "csv") {
        std::ostringstream agg;
        qpc::write_aggregate_csv(agg, reports);
        write_file(dir / "aggregate.csv", agg.str());
      }
      return 0;
    }

    if (chk->parsed()) {
      auto state = qpc::state_from_json(read_file(chk_file));
      auto split = qpc::BipartitionSpec::parse(chk_split, static_cast<int>(state.dims.size()));
      auto kinds = parse_tags(chk_measures);
      auto rec = qpc::evaluate(state, split, kinds);
      nlohmann::json j;
      j["purity"] = rec.purity;
      j["bound"] = rec.bound;
      int violations = 0;
      for (qpc::MeasureKind k : kinds) {
        double sum = rec.sums.at(k);
        if (sum > rec.bound + qpc::violation_tolerance(k)) ++violations;
        j["measures"][qpc::measure_tag(k)] = {
            {"value", rec.measure_values.at(k)},
            {"sum", sum},
            {"distance", rec.distances.at(k)},
            {"side_condition_ok", rec.side_condition_ok.at(k)}};
      }
      j["violations"] = violations;
      std::cout << j.dump(2) << "\n";
      return violations == 0 ? 0 : 2;
    }

    if (key->parsed()) {
      nlohmann::json j;
      if (key_mode == "threshold") {
        double e = qpc::werner_threshold();
        double s = qpc::werner_entropy_from_error(e);
        j["threshold"] = e;
        j["error_rate"] = e;
        j["entropy_ab"] = s;
        j["rate_lower_bound"] = qpc::ck_rate_lower_bound(e, s, 4, 4, 1.0);
      } else if (key_mode == "werner") {
        if (key_p_opt->count() == 0)
          throw std::invalid_argument("--p is required for keyrate werner");
        auto sc = qpc::werner_scenario(key_p);
        j["p"] = key_p;
        j["error_rate"] = sc.error_rate;
        j["entropy_ab"] = sc.entropy_ab;
        j["rate_lower_bound"] = sc.rate_lower_bound;
      } else {
        if (key_error_opt->count() == 0)
          throw std::invalid_argument("--error is required for keyrate error");
        j["error_rate"] = key_error;
        j["entropy_ab"] = key_sab;
        j["rate_lower_bound"] =
            qpc::ck_rate_lower_bound(key_error, key_sab, key_dab, key_de, key_b);
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
