#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rsd/dataset.hpp"
#include "rsd/error.hpp"
#include "rsd/run.hpp"
#include "rsd/search.hpp"
#include "rsd/selection.hpp"

namespace rsd {

namespace {

constexpr std::string_view kModule = "cli";
constexpr int kSweepSteps = 10;  // a = 0, 0.1, ..., 0.9

std::vector<EstimatorKind> parse_estimator_list(const std::string& list) {
  std::vector<EstimatorKind> kinds;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) kinds.push_back(parse_estimator(item));
  if (kinds.empty()) throw Error(Errc::InvalidConfig, kModule, "empty estimator list");
  return kinds;
}

void validate(const RunConfig& c) {
  if (c.input.empty()) throw Error(Errc::InvalidConfig, kModule, "--input is required");
  if (c.target.empty() || c.control.empty())
    throw Error(Errc::InvalidConfig, kModule, "--target and --control are required");
  if (c.target == c.control) throw Error(Errc::InvalidConfig, kModule, "target and control must differ");
  if (c.bins < 2) throw Error(Errc::InvalidConfig, kModule, "--bins must be at least 2");
  if (c.budget < 1) throw Error(Errc::InvalidConfig, kModule, "--budget must be positive");
  const auto kinds = parse_estimator_list(c.estimator);
  if (c.mode != RunMode::bench && kinds.size() != 1)
    throw Error(Errc::InvalidConfig, kModule, "a list of estimators is only accepted in bench mode");
}

SearchConfig search_config(const RunConfig& c, double weight, EstimatorKind kind) {
  SearchConfig s;
  s.weight = weight;
  s.k = c.topk;
  s.alpha = c.alpha;
  s.max_depth = c.max_depth;
  s.estimator = kind;
  s.node_budget = c.budget;
  rsd::validate(s);
  return s;
}

nlohmann::json stats_json(const SearchStats& s, bool timing) {
  nlohmann::json j{{"nodes_expanded", s.nodes_expanded}, {"nodes_pruned", s.nodes_pruned},
                   {"nodes_generated", s.nodes_generated}, {"estimator_calls", s.estimator_calls},
                   {"fccs_evals", s.fccs_evals},         {"ternary_rounds", s.ternary_rounds},
                   {"budget_exhausted", s.budget_exhausted}};
  j["wall_ms"] = timing ? nlohmann::json(s.wall_ms) : nlohmann::json(nullptr);
  return j;
}

bool is_config_error(Errc e) {
  return e == Errc::InvalidConfig || e == Errc::WeightOutOfRange || e == Errc::AlphaOutOfRange;
}

}  // namespace

std::string_view to_string(RunMode mode) noexcept {
  switch (mode) {
    case RunMode::mine: return "mine";
    case RunMode::bench: return "bench";
    case RunMode::sweep: return "sweep";
  }
  return "unknown";
}

RunMode parse_mode(std::string_view name) {
  if (name == "mine") return RunMode::mine;
  if (name == "bench") return RunMode::bench;
  if (name == "sweep") return RunMode::sweep;
  throw Error(Errc::InvalidConfig, kModule, "unknown mode '" + std::string(name) + "'");
}

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{{"input", c.input},         {"target", c.target},       {"control", c.control},
                     {"bins", c.bins},           {"weight", c.weight},       {"topk", c.topk},
                     {"alpha", c.alpha},         {"max_depth", c.max_depth}, {"estimator", c.estimator},
                     {"seed", c.seed},           {"budget", c.budget},       {"out", c.out},
                     {"mode", to_string(c.mode)}, {"timing", c.timing}};
}

void from_json(const nlohmann::json& j, RunConfig& c) {
  try {
    RunConfig d;
    c.input = j.at("input").get<std::string>();
    c.target = j.at("target").get<std::string>();
    c.control = j.at("control").get<std::string>();
    c.bins = j.value("bins", d.bins);
    c.weight = j.value("weight", d.weight);
    c.topk = j.value("topk", d.topk);
    c.alpha = j.value("alpha", d.alpha);
    c.max_depth = j.value("max_depth", d.max_depth);
    c.estimator = j.value("estimator", d.estimator);
    c.seed = j.value("seed", d.seed);
    c.budget = j.value("budget", d.budget);
    c.out = j.value("out", d.out);
    c.mode = parse_mode(j.value("mode", std::string(to_string(d.mode))));
    c.timing = j.value("timing", d.timing);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidConfig, kModule, std::string("bad config document: ") + e.what());
  }
}

Prepared prepare(const RunConfig& config) {
  const CsvText text = read_csv_text(config.input);
  const auto specs = infer_specs(text, config.target, config.control, config.bins);
  const RawTable raw = type_table(text, specs);
  Population population = build_population(stratify(discretize(raw, specs), config.seed));
  std::vector<Proposition> props = generate_propositions(population);
  return {std::move(population), std::move(props)};
}

nlohmann::json execute(const RunConfig& config, bool& budget_hit) {
  validate(config);
  const auto kinds = parse_estimator_list(config.estimator);
  // Search settings are checked before any data is touched.
  for (EstimatorKind k : kinds) search_config(config, config.weight, k);

  const Prepared prepared = prepare(config);
  const Population& population = prepared.population;
  const std::vector<Proposition>& props = prepared.propositions;

  nlohmann::json doc;
  doc["version"] = kOutputVersion;
  doc["config"] = config;
  doc["population"] = {{"size", population.size()},
                       {"m1", population.class_count(0)},
                       {"m2", population.class_count(1)},
                       {"control_labels", population.control_labels()},
                       {"propositions", props.size()}};
  budget_hit = false;

  switch (config.mode) {
    case RunMode::mine: {
      const SearchResult r = mine_topk(population, props, search_config(config, config.weight, kinds[0]));
      budget_hit = r.stats.budget_exhausted;
      doc["results"] = r.results;
      doc["stats"] = stats_json(r.stats, config.timing);
      break;
    }
    case RunMode::bench: {
      nlohmann::json runs = nlohmann::json::array();
      for (EstimatorKind k : kinds) {
        const SearchResult r = mine_topk(population, props, search_config(config, config.weight, k));
        budget_hit = budget_hit || r.stats.budget_exhausted;
        runs.push_back({{"estimator", to_string(k)}, {"results", r.results},
                        {"stats", stats_json(r.stats, config.timing)}});
      }
      doc["runs"] = std::move(runs);
      break;
    }
    case RunMode::sweep: {
      nlohmann::json rows = nlohmann::json::array();
      for (int step = 0; step < kSweepSteps; ++step) {
        const double a = static_cast<double>(step) / kSweepSteps;
        const SearchResult r = mine_topk(population, props, search_config(config, a, kinds[0]));
        budget_hit = budget_hit || r.stats.budget_exhausted;
        nlohmann::json row{{"weight", a}, {"nodes_expanded", r.stats.nodes_expanded}};
        if (r.results.empty()) {
          row["descriptor"] = nullptr;
        } else {
          const ResultEntry& top = r.results.front();
          row["descriptor"] = top.descriptor;
          row["repr"] = top.scores.repr;
          row["covcent"] = top.scores.covcent;
          row["f"] = top.scores.f;
        }
        rows.push_back(std::move(row));
      }
      doc["sweep"] = std::move(rows);
      break;
    }
  }
  return doc;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  bool budget_hit = false;
  nlohmann::json doc;
  try {
    doc = execute(config, budget_hit);
  } catch (const Error& e) {
    diag << "rsd: " << e.what() << '\n';
    return is_config_error(e.code()) ? kExitConfig : kExitData;
  }

  const std::string text = doc.dump(2) + "\n";
  if (config.out.empty()) {
    out << text;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    file << text;
    if (!file) {
      diag << "rsd: cli: cannot write '" << config.out << "'\n";
      return kExitData;
    }
  }
  if (budget_hit) {
    diag << "rsd: search: node budget of " << config.budget << " exhausted; results are partial\n";
    return kExitBudget;
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Representative subgroup discovery with a controlled impact measure", "rsd"};
  RunConfig c;
  std::string mode = "mine";
  app.add_option("--input", c.input, "CSV file with a header row")->required();
  app.add_option("--target", c.target, "numeric target column")->required();
  app.add_option("--control", c.control, "binary control column")->required();
  app.add_option("--bins", c.bins, "equal-frequency bins per numeric attribute")->capture_default_str();
  app.add_option("--weight", c.weight, "trade-off weight a in [0, 1)")->capture_default_str();
  app.add_option("--topk", c.topk, "number of subgroups to report")->capture_default_str();
  app.add_option("--alpha", c.alpha, "approximation factor in (0, 1]")->capture_default_str();
  app.add_option("--max-depth", c.max_depth, "maximum selector length")->capture_default_str();
  auto* est = app.add_option("--estimator", c.estimator,
                             "naive, brig or rawr; bench accepts a comma-separated list (default brig,rawr)")
                  ->capture_default_str();
  app.add_option("--seed", c.seed, "stratification seed")->capture_default_str();
  app.add_option("--budget", c.budget, "maximum expanded nodes per search")->capture_default_str();
  app.add_option("--out", c.out, "output JSON path (stdout when omitted)");
  app.add_option("--mode", mode, "mine, bench or sweep")
      ->check(CLI::IsMember({"mine", "bench", "sweep"}))
      ->capture_default_str();
  app.add_flag("--timing", c.timing, "report wall-clock time in stats");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  c.mode = parse_mode(mode);
  if (c.mode == RunMode::bench && est->count() == 0) c.estimator = "brig,rawr";
  return run(c, std::cout, std::cerr);
}

}  // namespace rsd
