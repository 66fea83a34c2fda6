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

#include <sstream>

#include "doctest.h"
#include "snsim/config_io.hpp"
#include "snsim/engine.hpp"
#include "snsim/filtering.hpp"
#include "snsim/mining.hpp"
#include "snsim/run_io.hpp"
#include "snsim/stats.hpp"
#include "test_util.hpp"

using namespace snsim;
using snsim::testing::slurp;
using snsim::testing::spit;
using snsim::testing::TempDir;
using snsim::testing::tree;

namespace {

const std::string kSmall = std::string(SNSIM_CONFIG_DIR) + "/small.json";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = parse_and_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

bool one_diagnostic_line(const std::string& err) {
  return err.rfind("snsim: ", 0) == 0 && err.find('\n') == err.size() - 1;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) out.push_back(split_csv_line(line));
  return out;
}

}  // namespace

TEST_CASE("simulate writes a deterministic run directory") {
  TempDir d;
  const auto a = cli({"simulate", "--config", kSmall, "--out", d / "a"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.err.empty());
  for (const char* f : {"events.csv", "summary.txt", "categories.csv", "histogram.csv",
                        "histogram_log2.csv", "config.json"})
    CHECK(std::filesystem::exists(d.path() / "a" / f));
  CHECK(a.out == slurp(d.path() / "a" / "summary.txt"));

  const auto b = cli({"simulate", "--config", kSmall, "--out", d / "b"});
  REQUIRE(b.code == kExitOk);
  CHECK(tree(d.path() / "a") == tree(d.path() / "b"));

  // The saved config reproduces the run.
  const auto c = cli({"simulate", "--config", d / "a/config.json", "--out", d / "c"});
  REQUIRE(c.code == kExitOk);
  CHECK(tree(d.path() / "a") == tree(d.path() / "c"));

  const auto other = cli({"simulate", "--config", kSmall, "--seed", "2", "--out", d / "s2"});
  REQUIRE(other.code == kExitOk);
  CHECK(slurp(d.path() / "s2" / "events.csv") != slurp(d.path() / "a" / "events.csv"));
  CHECK(parse_config(slurp(d.path() / "s2" / "config.json")).seed == 2);

  const auto quiet = cli({"simulate", "--config", kSmall, "--no-events", "--out", d / "q"});
  REQUIRE(quiet.code == kExitOk);
  CHECK_FALSE(std::filesystem::exists(d.path() / "q" / "events.csv"));
}

TEST_CASE("simulate output matches the library") {
  TempDir d;
  REQUIRE(cli({"simulate", "--config", kSmall, "--out", d / "r"}).code == kExitOk);
  const RunResult r = run(validate_config(load_config(kSmall)));
  std::ostringstream events, summary;
  write_events(events, r);
  write_summary(summary, r);
  CHECK(slurp(d.path() / "r" / "events.csv") == events.str());
  CHECK(slurp(d.path() / "r" / "summary.txt") == summary.str());

  const EventFile back = read_events(d.path() / "r" / "events.csv");
  CHECK(back.events == r.events);
  REQUIRE(back.articles.size() == r.articles.size());
  for (std::size_t i = 0; i < r.articles.size(); ++i)
    CHECK(back.articles[i].like_count == r.articles[i].like_count);
}

TEST_CASE("pair writes both runs and the category report") {
  TempDir d;
  const auto p = cli({"pair", "--config", kSmall, "--out", d / "p"});
  REQUIRE(p.code == kExitOk);
  const PairResult pr = run_pair(validate_config(load_config(kSmall)));
  std::ostringstream csv, txt;
  write_report_csv(csv, category_report(pr));
  write_report_text(txt, category_report(pr));
  CHECK(slurp(d.path() / "p" / "report.csv") == csv.str());
  CHECK(slurp(d.path() / "p" / "report.txt") == txt.str());
  CHECK(p.out == txt.str());
  CHECK(std::filesystem::exists(d.path() / "p" / "without" / "events.csv"));
  CHECK(std::filesystem::exists(d.path() / "p" / "with" / "events.csv"));

  const auto again = cli({"pair", "--config", kSmall, "--out", d / "p2"});
  REQUIRE(again.code == kExitOk);
  CHECK(tree(d.path() / "p") == tree(d.path() / "p2"));
}

TEST_CASE("sweep over L gives non-increasing like counts") {
  TempDir d;
  const auto s = cli({"sweep", "--config", kSmall, "--param", "L", "--values",
                      "0.5,1.5,2.5,3.5", "--out", d / "s"});
  REQUIRE(s.code == kExitOk);
  const auto rows = csv_rows(slurp(d.path() / "s" / "sweep.csv"));
  REQUIRE(rows.size() == 4);
  const auto lib = sweep(validate_config(load_config(kSmall)), SweepParameter::kLThreshold,
                         std::vector<double>{0.5, 1.5, 2.5, 3.5});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i][0] == "L");
    CHECK(std::stoull(rows[i][3]) == lib[i].count(EventKind::kLike));
    if (i > 0) CHECK(std::stoull(rows[i][3]) <= std::stoull(rows[i - 1][3]));
  }
  CHECK(std::filesystem::exists(d.path() / "s" / "L_2.5" / "summary.txt"));
  CHECK_FALSE(std::filesystem::exists(d.path() / "s" / "L_2.5" / "events.csv"));

  const auto bad = cli({"sweep", "--config", kSmall, "--param", "L", "--values", "1,x",
                        "--out", d / "bad"});
  CHECK(bad.code == kExitUsage);
  CHECK(one_diagnostic_line(bad.err));
  const auto bad_param = cli({"sweep", "--config", kSmall, "--param", "n_minor", "--values",
                              "1", "--out", d / "bad"});
  CHECK(bad_param.code == kExitRuntime);
}

TEST_CASE("mine on a like fixture") {
  TempDir d;
  // Bucket sizes: (1,[x]) has 2 articles, (2,[y]) has 2, (3,[z]) has 1.
  spit(d.path() / "likes.csv",
       "user,rule,category,article\n"
       "u1,1,[x],a1\nu1,2,[y],b1\nu1,2,[y],b2\n"
       "u2,1,[x],a1\nu2,1,[x],a2\nu2,2,[y],b1\nu2,2,[y],b2\n"
       "u3,3,[z],c1\n"
       "u4,1,[x],a2\n");
  const auto m = cli({"mine", "--likes", d / "likes.csv", "--min-support", "1", "--min-conf",
                      "0", "--out", d / "m"});
  REQUIRE(m.code == kExitOk);
  CHECK(m.out == "transactions 3\nrules 2\n");
  CHECK(slurp(d.path() / "m" / "transactions.csv") ==
        "user,items\nu1,\"Rule2,[y]\"\nu2,\"Rule1,[x];Rule2,[y]\"\nu3,\"Rule3,[z]\"\n");
  // u1: [y] only (1 of 2 on [x] is not a majority); u2: [x],[y]; u3: [z]; u4 dropped.
  CHECK(slurp(d.path() / "m" / "rules.csv") ==
        "rule,support,confidence,lift\n"
        "\"Rule1,[x] => Rule2,[y]\",1,1.000000,1.500000\n"
        "\"Rule2,[y] => Rule1,[x]\",1,0.500000,1.500000\n");
}

TEST_CASE("mine on an events file matches the library") {
  TempDir d;
  REQUIRE(cli({"simulate", "--config", kSmall, "--out", d / "r"}).code == kExitOk);
  const auto m = cli({"mine", "--events", d / "r/events.csv", "--config", kSmall,
                      "--min-support", "2", "--min-conf", "0.1", "--out", d / "m"});
  REQUIRE(m.code == kExitOk);

  const SimConfig cfg = load_config(kSmall);
  const LikeTable t = likes_from_events(read_events(d.path() / "r" / "events.csv"), &cfg);
  const auto tx = build_transactions(t.likes, t.index);
  std::ostringstream rules;
  write_rules_csv(rules, mine_pairs(tx, 2, 0.1));
  CHECK(slurp(d.path() / "m" / "rules.csv") == rules.str());

  const auto neither = cli({"mine", "--min-support", "1", "--min-conf", "0", "--out", d / "x"});
  CHECK(neither.code == kExitUsage);
  const auto both = cli({"mine", "--likes", "a", "--events", "b", "--min-support", "1",
                         "--min-conf", "0", "--out", d / "x"});
  CHECK(both.code == kExitUsage);
}

TEST_CASE("tfidf subcommand") {
  TempDir d;
  spit(d.path() / "corpus.txt", "a b a\nb c\n");
  const auto t = cli({"tfidf", "--corpus", d / "corpus.txt", "--term", "a", "--doc", "0"});
  REQUIRE(t.code == kExitOk);
  CHECK(std::abs(std::stod(t.out) - 0.46209812037329684) <= 1e-12);
  const auto out_of_range =
      cli({"tfidf", "--corpus", d / "corpus.txt", "--term", "a", "--doc", "2"});
  CHECK(out_of_range.code == kExitUsage);
  const auto unknown =
      cli({"tfidf", "--corpus", d / "corpus.txt", "--term", "a", "--doc", "1"});
  CHECK(unknown.code == kExitOk);
  CHECK(std::stod(unknown.out) == 0.0);
}

TEST_CASE("report subcommand") {
  TempDir d;
  spit(d.path() / "obs.csv",
       "label,likes_before,reach_before,likes_after,reach_after\n"
       "A,60,435,73,1837\nC,81,1063,45,1220\n");
  const auto r = cli({"report", "--observed", d / "obs.csv", "--out", d / "r"});
  REQUIRE(r.code == kExitOk);
  CHECK(slurp(d.path() / "r" / "repost.csv") ==
        "label,likes_before,reach_before,likes_after,reach_after,likes_delta,reach_delta\n"
        "A,60,435,73,1837,+13,+1402\nC,81,1063,45,1220,-36,+157\n");
  CHECK(r.out == slurp(d.path() / "r" / "repost.txt"));

  spit(d.path() / "bad.csv", "label,likes_before,reach_before,likes_after,reach_after\nA,1,2\n");
  const auto bad = cli({"report", "--observed", d / "bad.csv", "--out", d / "r2"});
  CHECK(bad.code == kExitRuntime);
  CHECK(one_diagnostic_line(bad.err));
}

TEST_CASE("exit codes and diagnostics") {
  TempDir d;
  const auto none = cli({});
  CHECK(none.code == kExitUsage);
  CHECK(one_diagnostic_line(none.err));

  const auto unknown = cli({"simulate", "--config", kSmall, "--out", d / "o", "--bogus"});
  CHECK(unknown.code == kExitUsage);
  CHECK(one_diagnostic_line(unknown.err));

  const auto missing = cli({"simulate", "--config", d / "nope.json", "--out", d / "o"});
  CHECK(missing.code == kExitRuntime);
  CHECK(one_diagnostic_line(missing.err));

  spit(d.path() / "bad.json", R"({"p_alt": 2.0})");
  const auto invalid = cli({"simulate", "--config", d / "bad.json", "--out", d / "o"});
  CHECK(invalid.code == kExitRuntime);
  CHECK(invalid.err.find("p_alt") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(d.path() / "o"));

  const auto help = cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("simulate") != std::string::npos);
}
