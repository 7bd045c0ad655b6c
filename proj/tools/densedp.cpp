// Copyright 2026 The densedp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// densedp: run private and baseline densest-subgraph experiments.
//
//   densedp run --input ca-GrQc.txt --alg dp-linear --eps 0.5,1,2,4,8
//       --sigma 9.3e-10 --trials 20 --seed 1 --out grqc.csv
//   densedp run --gen planted:1000,60 --alg dp-quasilinear --eps 2 --out p.csv
//   densedp ingest --input ca-GrQc.txt --out-prefix grqc
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "densedp/densedp.hpp"

namespace {

constexpr int kConfigExit = 2;
constexpr int kIoExit = 3;

int run_command(densedp::ExperimentConfig config, const std::string& alg,
                const std::string& gen) {
  config.algorithm = densedp::parse_algorithm(alg);
  if (!gen.empty()) config.generator = densedp::parse_generator(gen);
  if (config.output_path.empty()) throw densedp::ConfigError("--out is required");
  const auto records = densedp::run_experiment(config);
  densedp::write_csv(records, config.output_path);
  std::cerr << "wrote " << records.size() << " records to " << config.output_path << "\n";
  return 0;
}

int ingest_command(const std::string& input, const std::string& prefix, bool skip_header) {
  std::ifstream in(input);
  if (!in) throw densedp::IoError("cannot read '" + input + "'");
  densedp::ParseOptions opts;
  opts.skip_header = skip_header;
  const auto parsed = densedp::parse_edge_list(in, opts);
  const std::string id_map = prefix + ".idmap";
  std::ofstream ids(id_map);
  densedp::write_id_map(parsed, ids);
  std::ofstream sidecar(prefix + ".json");
  sidecar << densedp::sidecar_json(parsed, id_map).dump() << "\n";
  if (!ids || !sidecar) throw densedp::IoError("failed writing '" + prefix + ".*'");
  std::cout << densedp::sidecar_json(parsed, id_map).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private densest subgraph experiments"};
  app.require_subcommand(1);

  densedp::ExperimentConfig config;
  std::string alg = "dp-linear";
  std::string gen;
  double c_value = 0;
  auto* run = app.add_subcommand("run", "Run trials and write a CSV of records");
  auto* input = run->add_option("--input", config.dataset_path, "Edge-list file");
  run->add_option("--gen", gen, "Generator: planted:n,k or twoclique:k1,k2")
      ->excludes(input);
  run->add_flag("--skip-header", config.skip_header, "Ignore the first data line");
  run->add_option("--alg", alg,
                  "exact | charikar | dp-quasilinear | dp-linear | rr-baseline");
  run->add_option("--eps", config.epsilons, "Comma-separated epsilon grid")->delimiter(',');
  run->add_option("--sigma", config.sigma, "Failure probability");
  auto* c_opt = run->add_option("--C", c_value, "Threshold constant (default: smallest valid)");
  run->add_option("--bucket-C", config.bucket_constant, "Bucket width constant");
  run->add_option("--trials", config.trials, "Trials per epsilon");
  run->add_option("--seed", config.seed, "Base seed");
  run->add_option("--out", config.output_path, "CSV output path");
  run->add_option("--threads", config.threads, "Worker threads (0 = auto)");

  std::string ingest_input, prefix;
  bool ingest_skip_header = false;
  auto* ingest = app.add_subcommand("ingest", "Compact an edge list and write its sidecar");
  ingest->add_option("--input", ingest_input, "Edge-list file")->required();
  ingest->add_option("--out-prefix", prefix, "Writes <prefix>.json and <prefix>.idmap")
      ->required();
  ingest->add_flag("--skip-header", ingest_skip_header, "Ignore the first data line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigExit;
  }

  try {
    if (*run) {
      if (c_opt->count() > 0) config.threshold_constant = c_value;
      return run_command(config, alg, gen);
    }
    return ingest_command(ingest_input, prefix, ingest_skip_header);
  } catch (const densedp::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoExit;
  } catch (const densedp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoExit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigExit;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigExit;
  }
}
