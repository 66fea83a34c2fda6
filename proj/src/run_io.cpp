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

#include "snsim/run_io.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>

#include "snsim/config_io.hpp"

namespace snsim {

namespace fs = std::filesystem;

void write_events(std::ostream& os, const RunResult& r) {
  fmt::memory_buffer buf;
  auto flush = [&] {
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    buf.clear();
  };
  for (const Event& e : r.events) {
    switch (e.kind) {
      case EventKind::kPost: {
        const Article& a = r.articles[e.article];
        fmt::format_to(std::back_inserter(buf), "post,{},{},{},{},{}\n", e.step, e.article,
                       e.agent, a.category, a.evaluation);
        break;
      }
      case EventKind::kLike:
        fmt::format_to(std::back_inserter(buf), "like,{},{},{},{}\n", e.step, e.agent,
                       e.article, e.via == LikeVia::kOrganic ? "organic" : "recommendation");
        break;
      case EventKind::kShare:
        fmt::format_to(std::back_inserter(buf), "share,{},{},{},{}\n", e.step, e.agent,
                       e.article, e.recipients);
        break;
    }
    if (buf.size() > (1u << 20)) flush();
  }
  flush();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(std::move(cur));
  return out;
}

namespace {

template <typename T>
T parse_number(const std::string& s, const std::string& where) {
  T value{};
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ConfigError(where + ": expected a number, got \"" + s + "\"");
  return value;
}

std::string where(const std::string& file, std::size_t line) {
  return fmt::format("{}:{}", file, line);
}

std::ifstream open_or_throw(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  return in;
}

}  // namespace

EventFile read_events(std::istream& is) {
  EventFile f;
  std::string line;
  std::size_t n = 0;
  while (std::getline(is, line)) {
    ++n;
    if (line.empty()) continue;
    const auto at = where("events", n);
    const auto fields = split_csv_line(line);
    const std::string& kind = fields[0];
    auto num = [&](std::size_t i) { return parse_number<std::uint32_t>(fields[i], at); };
    if (kind == "post" && fields.size() == 6) {
      Article a{num(2), static_cast<CategoryId>(num(4)), num(3), static_cast<int>(num(5)),
                num(1), 0};
      if (a.id != f.articles.size()) throw ConfigError(at + ": article ids out of order");
      f.articles.push_back(a);
      f.events.push_back({EventKind::kPost, LikeVia::kNone, a.step_posted, a.poster, a.id, 0});
    } else if (kind == "like" && fields.size() == 5) {
      LikeVia via;
      if (fields[4] == "organic")
        via = LikeVia::kOrganic;
      else if (fields[4] == "recommendation")
        via = LikeVia::kRecommendation;
      else
        throw ConfigError(at + ": unknown like channel \"" + fields[4] + "\"");
      const Event e{EventKind::kLike, via, num(1), num(2), num(3), 0};
      if (e.article >= f.articles.size()) throw ConfigError(at + ": like before post");
      ++f.articles[e.article].like_count;
      f.events.push_back(e);
    } else if (kind == "share" && fields.size() == 5) {
      f.events.push_back({EventKind::kShare, LikeVia::kNone, num(1), num(2), num(3), num(4)});
    } else {
      throw ConfigError(at + ": malformed event line");
    }
  }
  return f;
}

EventFile read_events(const fs::path& path) {
  auto in = open_or_throw(path);
  return read_events(in);
}

void write_summary(std::ostream& os, const RunResult& r) {
  std::uint64_t organic = 0, recommended = 0, zero = 0, top = 0;
  for (const Event& e : r.events)
    if (e.kind == EventKind::kLike) (e.via == LikeVia::kOrganic ? organic : recommended)++;
  for (const Article& a : r.articles) {
    zero += a.like_count == 0;
    top = std::max<std::uint64_t>(top, a.like_count);
  }
  fmt::print(os, "seed {}\n", r.seed);
  fmt::print(os, "n_steps {}\n", r.config.n_steps);
  fmt::print(os, "posts {}\n", r.count(EventKind::kPost));
  fmt::print(os, "likes {}\n", organic + recommended);
  fmt::print(os, "organic_likes {}\n", organic);
  fmt::print(os, "recommended_likes {}\n", recommended);
  fmt::print(os, "shares {}\n", r.count(EventKind::kShare));
  fmt::print(os, "zero_like_articles {}\n", zero);
  fmt::print(os, "max_likes {}\n", top);
}

void write_categories_csv(std::ostream& os, const RunResult& r) {
  os << "category,articles,total_likes,like_mean,persons,ratio\n";
  for (const auto& s : summarize(r)) {
    const double ratio = s.persons > 0 ? s.like_mean / s.persons : 0.0;
    fmt::print(os, "{},{:.0f},{:.0f},{:.4f},{:.0f},{:.6f}\n", s.category, s.articles,
               s.like_mean * s.articles, s.like_mean, s.persons, ratio);
  }
}

void write_file_atomic(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    body(out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

void write_run(const fs::path& dir, const RunResult& r, bool with_events) {
  fs::create_directories(dir);
  if (with_events) write_file_atomic(dir / "events.csv", [&](std::ostream& os) { write_events(os, r); });
  write_file_atomic(dir / "summary.txt", [&](std::ostream& os) { write_summary(os, r); });
  write_file_atomic(dir / "categories.csv",
                    [&](std::ostream& os) { write_categories_csv(os, r); });
  const Histogram h = like_histogram(r);
  write_file_atomic(dir / "histogram.csv", [&](std::ostream& os) { write_histogram_csv(os, h); });
  write_file_atomic(dir / "histogram_log2.csv",
                    [&](std::ostream& os) { write_histogram_csv(os, log2_binned(h)); });
  write_file_atomic(dir / "config.json",
                    [&](std::ostream& os) { os << serialize_config(r.config); });
}

LikeTable likes_from_events(const EventFile& f, const SimConfig* config) {
  auto label_of = [&](CategoryId id) -> std::string {
    if (config) {
      const int i = category_index(*config, id);
      if (i >= 0) return config->categories[static_cast<std::size_t>(i)].label;
    }
    return "[R]";
  };
  LikeTable t;
  for (const Article& a : f.articles) ++t.index[{a.category, label_of(a.category)}];
  for (const Event& e : f.events) {
    if (e.kind != EventKind::kLike) continue;
    const Article& a = f.articles[e.article];
    t.likes.push_back({std::to_string(e.agent), a.category, label_of(a.category),
                       std::to_string(e.article)});
  }
  return t;
}

std::vector<LikeRecord> read_likes_csv(const fs::path& path) {
  auto in = open_or_throw(path);
  std::vector<LikeRecord> out;
  std::string line;
  std::size_t n = 0;
  std::getline(in, line);  // header
  ++n;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    const auto at = where(path.string(), n);
    const auto f = split_csv_line(line);
    if (f.size() != 4) throw ConfigError(at + ": expected user,rule,category,article");
    out.push_back({f[0], parse_number<int>(f[1], at), f[2], f[3]});
  }
  return out;
}

ArticleIndex read_articles_csv(const fs::path& path) {
  auto in = open_or_throw(path);
  std::map<Item, std::vector<std::string>> seen;
  std::string line;
  std::size_t n = 0;
  std::getline(in, line);
  ++n;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    const auto at = where(path.string(), n);
    const auto f = split_csv_line(line);
    if (f.size() != 3) throw ConfigError(at + ": expected rule,category,article");
    seen[{parse_number<int>(f[0], at), f[1]}].push_back(f[2]);
  }
  ArticleIndex out;
  for (auto& [item, ids] : seen) {
    std::sort(ids.begin(), ids.end());
    out[item] = static_cast<std::uint64_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
  }
  return out;
}

std::vector<RepostObservation> read_observed_csv(const fs::path& path) {
  auto in = open_or_throw(path);
  std::vector<RepostObservation> out;
  std::string line;
  std::size_t n = 0;
  std::getline(in, line);
  ++n;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    const auto at = where(path.string(), n);
    const auto f = split_csv_line(line);
    if (f.size() != 5)
      throw ConfigError(at + ": expected label,likes_before,reach_before,likes_after,reach_after");
    out.push_back({f[0], parse_number<std::int64_t>(f[1], at),
                   parse_number<std::int64_t>(f[2], at), parse_number<std::int64_t>(f[3], at),
                   parse_number<std::int64_t>(f[4], at)});
  }
  return out;
}

}  // namespace snsim
