// Copyright 2026 The snsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "snsim/cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "snsim/config_io.hpp"
#include "snsim/engine.hpp"
#include "snsim/filtering.hpp"
#include "snsim/mining.hpp"
#include "snsim/run_io.hpp"
#include "snsim/stats.hpp"

namespace snsim {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double(const std::string& s, const char* what) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v))
    throw UsageError(fmt::format("{}: \"{}\" is not a finite number", what, s));
  return v;
}

Rational parse_fraction(const std::string& s) {
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::uint64_t num = 0, den = 0;
    auto r1 = std::from_chars(s.data(), s.data() + slash, num);
    auto r2 = std::from_chars(s.data() + slash + 1, s.data() + s.size(), den);
    if (r1.ec != std::errc() || r2.ec != std::errc() || r2.ptr != s.data() + s.size() || den == 0)
      throw UsageError("--threshold: expected p/q or a decimal in [0,1]");
    return {num, den};
  }
  const double v = parse_double(s, "--threshold");
  if (v < 0.0 || v > 1.0) throw UsageError("--threshold: expected a value in [0,1]");
  constexpr std::uint64_t kDen = 1'000'000'000;
  return {static_cast<std::uint64_t>(std::llround(v * kDen)), kDen};
}

ValidatedConfig load_validated(const std::string& path, std::optional<std::uint64_t> seed) {
  SimConfig c = load_config(path);
  if (seed) c.seed = *seed;
  return validate_config(std::move(c));
}

struct SimArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool no_events = false;
};

void add_sim_flags(CLI::App* cmd, SimArgs& a) {
  cmd->add_option("--config", a.config, "JSON configuration file")->required();
  cmd->add_option("--seed", a.seed, "RNG seed; overrides the config value");
  cmd->add_option("--out", a.out, "Output directory")->required();
}

int do_simulate(const SimArgs& a, std::ostream& out) {
  const auto cfg = load_validated(a.config, a.seed);
  const RunResult r = run(cfg);
  write_run(a.out, r, !a.no_events);
  write_summary(out, r);
  return kExitOk;
}

int do_pair(const SimArgs& a, std::ostream& out) {
  const auto cfg = load_validated(a.config, a.seed);
  const PairResult p = run_pair(cfg);
  const CategoryReport rep = category_report(p);
  fs::create_directories(a.out);
  write_file_atomic(fs::path(a.out) / "report.csv",
                    [&](std::ostream& os) { write_report_csv(os, rep); });
  write_file_atomic(fs::path(a.out) / "report.txt",
                    [&](std::ostream& os) { write_report_text(os, rep); });
  write_run(fs::path(a.out) / "without", p.without_altruism, !a.no_events);
  write_run(fs::path(a.out) / "with", p.with_altruism, !a.no_events);
  write_report_text(out, rep);
  return kExitOk;
}

struct SweepArgs {
  SimArgs sim;
  std::string param;
  std::vector<std::string> values;
  bool events = false;
};

int do_sweep(const SweepArgs& a, std::ostream& out) {
  const auto base = load_validated(a.sim.config, a.sim.seed);
  const SweepParameter param = parse_sweep_parameter(a.param);
  std::vector<double> values;
  for (const auto& v : a.values) values.push_back(parse_double(v, "--values"));
  const auto results = sweep(base, param, values);

  fs::create_directories(a.sim.out);
  const std::string name(sweep_parameter_name(param));
  std::ostringstream table;
  table << "param,value,posts,likes,shares,modes_log2_w3\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const RunResult& r = results[i];
    write_run(fs::path(a.sim.out) / (name + "_" + a.values[i]), r, a.events);
    fmt::print(table, "{},{},{},{},{},{}\n", name, a.values[i], r.count(EventKind::kPost),
               r.count(EventKind::kLike), r.count(EventKind::kShare),
               modality_count(log2_binned(like_histogram(r)), 3));
  }
  write_file_atomic(fs::path(a.sim.out) / "sweep.csv",
                    [&](std::ostream& os) { os << table.str(); });
  out << table.str();
  return kExitOk;
}

struct MineArgs {
  std::string likes;
  std::string articles;
  std::string events;
  std::string config;
  std::uint64_t min_support = 1;
  double min_conf = 0.0;
  std::string threshold = "1/2";
  std::string out;
};

int do_mine(const MineArgs& a, std::ostream& out) {
  std::vector<LikeRecord> likes;
  ArticleIndex index;
  if (!a.events.empty()) {
    std::optional<SimConfig> cfg;
    if (!a.config.empty()) cfg = load_config(a.config);
    LikeTable t = likes_from_events(read_events(fs::path(a.events)), cfg ? &*cfg : nullptr);
    likes = std::move(t.likes);
    index = std::move(t.index);
  } else {
    likes = read_likes_csv(a.likes);
    index = a.articles.empty() ? index_from_likes(likes) : read_articles_csv(a.articles);
  }
  if (a.min_conf < 0.0 || a.min_conf > 1.0) throw UsageError("--min-conf: expected [0,1]");
  const TransactionSet t = build_transactions(likes, index, parse_fraction(a.threshold));
  const auto rules = mine_pairs(t, a.min_support, a.min_conf);
  fs::create_directories(a.out);
  write_file_atomic(fs::path(a.out) / "transactions.csv",
                    [&](std::ostream& os) { write_transactions_csv(os, t); });
  write_file_atomic(fs::path(a.out) / "rules.csv",
                    [&](std::ostream& os) { write_rules_csv(os, rules); });
  fmt::print(out, "transactions {}\nrules {}\n", t.size(), rules.size());
  return kExitOk;
}

struct TfidfArgs {
  std::string corpus;
  std::string term;
  std::size_t doc = 0;
};

int do_tfidf(const TfidfArgs& a, std::ostream& out) {
  const Corpus c = load_corpus(a.corpus);
  if (a.doc >= c.size())
    throw UsageError(fmt::format("--doc {} out of range (corpus has {} documents)", a.doc,
                                 c.size()));
  const auto tokens = tokenize(a.term);
  if (tokens.size() != 1) throw UsageError("--term must be a single token");
  fmt::print(out, "{}\n", tfidf(tokens.front(), c[a.doc], c));
  return kExitOk;
}

struct ReportArgs {
  std::string observed;
  std::string out;
};

int do_report(const ReportArgs& a, std::ostream& out) {
  const auto rows = repost_report(read_observed_csv(a.observed));
  fs::create_directories(a.out);
  write_file_atomic(fs::path(a.out) / "repost.csv",
                    [&](std::ostream& os) { write_repost_csv(os, rows); });
  write_file_atomic(fs::path(a.out) / "repost.txt",
                    [&](std::ostream& os) { write_repost_text(os, rows); });
  write_repost_text(out, rows);
  return kExitOk;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

int parse_and_dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulator and analytics for altruistic sharing in an SNS tourist community",
               "snsim"};
  app.require_subcommand(1);

  SimArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "One run: events, summary, histograms");
  add_sim_flags(simulate, sim_args);
  simulate->add_flag("--no-events", sim_args.no_events, "Skip events.csv");

  SimArgs pair_args;
  auto* pair = app.add_subcommand("pair", "Runs without and with altruism; category report");
  add_sim_flags(pair, pair_args);
  pair->add_flag("--no-events", pair_args.no_events, "Skip events.csv");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "One run per parameter value");
  add_sim_flags(sweep_cmd, sweep_args.sim);
  sweep_cmd->add_option("--param", sweep_args.param, "L, A or P")->required();
  sweep_cmd->add_option("--values", sweep_args.values, "Comma-separated values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_flag("--events", sweep_args.events, "Also write events.csv per grid point");

  MineArgs mine_args;
  auto* mine = app.add_subcommand("mine", "Majority-engagement transactions and pair rules");
  auto* likes_opt = mine->add_option("--likes", mine_args.likes, "Like CSV");
  mine->add_option("--articles", mine_args.articles, "Article CSV (bucket sizes)")
      ->needs(likes_opt);
  auto* events_opt = mine->add_option("--events", mine_args.events, "events.csv from a run");
  mine->add_option("--config", mine_args.config, "Config supplying category labels")
      ->needs(events_opt);
  likes_opt->excludes(events_opt);
  mine->add_option("--min-support", mine_args.min_support, "Minimum pair support")->required();
  mine->add_option("--min-conf", mine_args.min_conf, "Minimum confidence")->required();
  mine->add_option("--threshold", mine_args.threshold, "Majority fraction (default 1/2)");
  mine->add_option("--out", mine_args.out, "Output directory")->required();

  TfidfArgs tfidf_args;
  auto* tfidf_cmd = app.add_subcommand("tfidf", "Print tfidf(term, document)");
  tfidf_cmd->add_option("--corpus", tfidf_args.corpus, "One document per line")->required();
  tfidf_cmd->add_option("--term", tfidf_args.term, "Term")->required();
  tfidf_cmd->add_option("--doc", tfidf_args.doc, "0-based document index")->required();

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "Before/after repost comparison");
  report->add_option("--observed", report_args.observed, "Observed CSV")->required();
  report->add_option("--out", report_args.out, "Output directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*mine && mine_args.likes.empty() && mine_args.events.empty())
      throw UsageError("mine: one of --likes or --events is required");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "snsim: " << first_line(e.what()) << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "snsim: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*simulate) return do_simulate(sim_args, out);
    if (*pair) return do_pair(pair_args, out);
    if (*sweep_cmd) return do_sweep(sweep_args, out);
    if (*mine) return do_mine(mine_args, out);
    if (*tfidf_cmd) return do_tfidf(tfidf_args, out);
    if (*report) return do_report(report_args, out);
  } catch (const UsageError& e) {
    err << "snsim: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "snsim: " << first_line(e.what()) << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace snsim
