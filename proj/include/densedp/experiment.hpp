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

// Experiment runner: repeated seeded trials of one algorithm over an epsilon
// grid, scored against Charikar's peel, with CSV output.

#ifndef DENSEDP_EXPERIMENT_HPP_
#define DENSEDP_EXPERIMENT_HPP_

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "densedp/budget.hpp"
#include "densedp/dp_densest.hpp"
#include "densedp/edge_list.hpp"
#include "densedp/generators.hpp"
#include "densedp/graph.hpp"
#include "densedp/oracles.hpp"

namespace densedp {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Algorithm { kExact, kCharikar, kDpQuasilinear, kDpLinear, kRrBaseline };

inline std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kExact: return "exact";
    case Algorithm::kCharikar: return "charikar";
    case Algorithm::kDpQuasilinear: return "dp-quasilinear";
    case Algorithm::kDpLinear: return "dp-linear";
    case Algorithm::kRrBaseline: return "rr-baseline";
  }
  return "unknown";
}

inline Algorithm parse_algorithm(std::string_view id) {
  for (Algorithm a : {Algorithm::kExact, Algorithm::kCharikar, Algorithm::kDpQuasilinear,
                      Algorithm::kDpLinear, Algorithm::kRrBaseline}) {
    if (algorithm_name(a) == id) return a;
  }
  throw ConfigError("unknown algorithm '" + std::string(id) +
                    "' (expected exact, charikar, dp-quasilinear, dp-linear or rr-baseline)");
}

struct GeneratorSpec {
  enum class Kind { kPlanted, kTwoCliques };
  Kind kind = Kind::kPlanted;
  VertexId first = 0;   // n, or k1
  VertexId second = 0;  // k, or k2
};

// "planted:n,k" or "twoclique:k1,k2".
inline GeneratorSpec parse_generator(std::string_view text) {
  const auto colon = text.find(':');
  const auto comma = text.find(',', colon == std::string_view::npos ? 0 : colon);
  if (colon == std::string_view::npos || comma == std::string_view::npos) {
    throw ConfigError("generator must look like planted:n,k or twoclique:k1,k2");
  }
  GeneratorSpec spec;
  const auto kind = text.substr(0, colon);
  if (kind == "planted") {
    spec.kind = GeneratorSpec::Kind::kPlanted;
  } else if (kind == "twoclique") {
    spec.kind = GeneratorSpec::Kind::kTwoCliques;
  } else {
    throw ConfigError("unknown generator '" + std::string(kind) + "'");
  }
  const auto number = [](std::string_view s) {
    VertexId v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ConfigError("bad generator argument '" + std::string(s) + "'");
    }
    return v;
  };
  spec.first = number(text.substr(colon + 1, comma - colon - 1));
  spec.second = number(text.substr(comma + 1));
  return spec;
}

struct ExperimentConfig {
  std::string dataset_path;
  std::optional<GeneratorSpec> generator;
  bool skip_header = false;
  Algorithm algorithm = Algorithm::kDpLinear;
  std::vector<double> epsilons{1.0};
  double sigma = 0x1.0p-30;
  std::optional<double> threshold_constant;
  double bucket_constant = BudgetOptions{}.bucket_constant;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string output_path;
  // 0 picks min(hardware threads, DENSEDP_THREADS when set).
  unsigned threads = 0;

  void validate() const {
    if (dataset_path.empty() == !generator.has_value()) {
      throw ConfigError("exactly one of a dataset path or a generator is required");
    }
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (epsilons.empty()) throw ConfigError("epsilon grid is empty");
    for (double e : epsilons) {
      if (!(e > 0.0) || !std::isfinite(e)) throw ConfigError("epsilon values must be > 0");
    }
    if (!(sigma > 0.0 && sigma < 1.0)) throw ConfigError("sigma must lie in (0, 1)");
    if (threshold_constant && !(*threshold_constant > 0.0)) {
      throw ConfigError("C must be > 0");
    }
    if (!(bucket_constant > 0.0)) throw ConfigError("bucket constant must be > 0");
  }
};

struct ExperimentRecord {
  std::string dataset;
  VertexId n = 0;
  EdgeCount m = 0;
  std::string algorithm;
  double epsilon = 0;
  std::uint64_t seed = 0;
  double d_star = 0;
  double true_density = 0;
  std::uint64_t set_size = 0;
  double baseline_density = 0;
  double ratio = 0;
  double wall_time_s = 0;
};

struct Dataset {
  std::string name;
  Graph graph;
};

inline Dataset load_dataset(const ExperimentConfig& config) {
  if (config.generator) {
    const GeneratorSpec& g = *config.generator;
    if (g.kind == GeneratorSpec::Kind::kPlanted) {
      if (g.second > g.first) throw ConfigError("planted clique larger than the graph");
      return {"planted-" + std::to_string(g.first) + "-" + std::to_string(g.second),
              gen_planted_clique(g.first, g.second, config.seed)};
    }
    if (g.first < 1 || g.second < 1) throw ConfigError("clique sizes must be >= 1");
    return {"twoclique-" + std::to_string(g.first) + "-" + std::to_string(g.second),
            gen_two_cliques(g.first, g.second)};
  }
  std::ifstream in(config.dataset_path);
  if (!in) throw IoError("cannot read dataset '" + config.dataset_path + "'");
  ParseOptions opts;
  opts.skip_header = config.skip_header;
  ParsedGraph parsed = parse_edge_list(in, opts);
  return {std::filesystem::path(config.dataset_path).stem().string(),
          std::move(parsed.graph)};
}

inline unsigned resolve_threads(unsigned requested, std::size_t jobs) {
  unsigned threads = requested != 0 ? requested
                                    : std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("DENSEDP_THREADS"); cap != nullptr) {
    unsigned value = 0;
    const std::string_view s(cap);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && ptr == s.data() + s.size() && value > 0) {
      threads = std::min(threads, value);
    }
  }
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, jobs)));
}

// One trial. Seeded purely from `seed`, so trials are reproducible in any
// order and on any thread.
inline ExperimentRecord run_trial(const ExperimentConfig& config, const Dataset& data,
                                  Density baseline, double epsilon, std::uint64_t seed) {
  const Graph& g = data.graph;
  std::mt19937_64 rng(seed);
  const auto start = std::chrono::steady_clock::now();
  DensityReport report;
  switch (config.algorithm) {
    case Algorithm::kExact:
      report = exact_densest_bruteforce(g);
      break;
    case Algorithm::kCharikar:
      report = charikar_peel(g);
      break;
    case Algorithm::kRrBaseline:
      report = randomized_response_densest(g, epsilon, rng);
      break;
    case Algorithm::kDpQuasilinear:
    case Algorithm::kDpLinear: {
      BudgetOptions opts;
      opts.threshold_constant = config.threshold_constant;
      opts.bucket_constant = config.bucket_constant;
      const auto budget = PrivacyBudget::make(epsilon, config.sigma, g.num_vertices(), opts);
      report = config.algorithm == Algorithm::kDpLinear
                   ? dp_densest_linear(g, budget, rng)
                   : dp_densest_quasilinear(g, budget, rng);
      break;
    }
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  ExperimentRecord r;
  r.dataset = data.name;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.algorithm = std::string(algorithm_name(config.algorithm));
  r.epsilon = epsilon;
  r.seed = seed;
  r.d_star = report.noisy_density;
  r.true_density = report.true_density.value();
  r.set_size = report.subset.size();
  r.baseline_density = baseline.value();
  if (baseline.edges == 0) {
    r.ratio = report.true_density.edges == 0 ? 1.0 : INFINITY;
  } else {
    r.ratio = r.true_density / r.baseline_density;
  }
  r.wall_time_s = std::max(elapsed.count(), 1e-9);
  return r;
}

// Runs `trials` seeds (base seed + trial index) at every grid point. Records
// come back ordered by (epsilon position, trial) whatever the thread count.
inline std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config,
                                                    const Dataset& data) {
  config.validate();
  if (data.graph.empty()) throw ConfigError("dataset has no vertices");
  if (config.algorithm == Algorithm::kExact &&
      data.graph.num_vertices() > kBruteForceMaxVertices) {
    throw ConfigError("exact search is limited to " +
                      std::to_string(kBruteForceMaxVertices) + " vertices");
  }
  const Density baseline = charikar_peel(data.graph).true_density;
  const std::size_t per_eps = static_cast<std::size_t>(config.trials);
  const std::size_t jobs = config.epsilons.size() * per_eps;
  std::vector<ExperimentRecord> records(jobs);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      try {
        const double eps = config.epsilons[job / per_eps];
        const std::uint64_t seed = config.seed + job % per_eps;
        records[job] = run_trial(config, data, baseline, eps, seed);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = resolve_threads(config.threads, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

inline std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  config.validate();
  return run_experiment(config, load_dataset(config));
}

inline constexpr std::string_view kCsvHeader =
    "dataset,n,m,algorithm,epsilon,seed,d_star,true_density,set_size,"
    "baseline_density,ratio,wall_time_s";

namespace detail {

inline std::string six_digits(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

inline void write_csv(const std::vector<ExperimentRecord>& records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const ExperimentRecord& r : records) {
    out << detail::csv_field(r.dataset) << ',' << r.n << ',' << r.m << ','
        << detail::csv_field(r.algorithm) << ',' << detail::six_digits(r.epsilon) << ','
        << r.seed << ',' << detail::six_digits(r.d_star) << ','
        << detail::six_digits(r.true_density) << ',' << r.set_size << ','
        << detail::six_digits(r.baseline_density) << ',' << detail::six_digits(r.ratio)
        << ',' << detail::six_digits(r.wall_time_s) << '\n';
  }
}

inline void write_csv(const std::vector<ExperimentRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_csv(records, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

// Parses what write_csv produced.
inline std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw IoError("missing or unexpected CSV header");
  }
  std::vector<ExperimentRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          cur += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        fields.push_back(std::move(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(std::move(cur));
    if (fields.size() != 12) {
      throw IoError("CSV line " + std::to_string(line_no) + " has " +
                    std::to_string(fields.size()) + " fields");
    }
    try {
      ExperimentRecord r;
      r.dataset = fields[0];
      r.n = static_cast<VertexId>(std::stoul(fields[1]));
      r.m = std::stoull(fields[2]);
      r.algorithm = fields[3];
      r.epsilon = std::stod(fields[4]);
      r.seed = std::stoull(fields[5]);
      r.d_star = std::stod(fields[6]);
      r.true_density = std::stod(fields[7]);
      r.set_size = std::stoull(fields[8]);
      r.baseline_density = std::stod(fields[9]);
      r.ratio = std::stod(fields[10]);
      r.wall_time_s = std::stod(fields[11]);
      out.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw IoError("CSV line " + std::to_string(line_no) + " has a malformed number");
    }
  }
  return out;
}

}  // namespace densedp

#endif  // DENSEDP_EXPERIMENT_HPP_
