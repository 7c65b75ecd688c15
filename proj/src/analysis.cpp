#include "headliner/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "headliner/error.hpp"
#include "headliner/text.hpp"
#include "tsv.hpp"

namespace headliner::analysis {

std::string_view to_string(Author a) { return a == Author::Human ? "human" : "system"; }

std::string_view to_string(SdConvention c) { return c == SdConvention::Population ? "population" : "sample"; }

namespace {

constexpr std::string_view kAggregation =
    "Q1/Q2: arithmetic mean over raters; yes/no questions: majority vote, ties count as no";

bool is_scale_question(std::size_t q) { return q == 1 || q == 2; }

double fraction(std::size_t num, std::size_t den) { return den == 0 ? 0.0 : static_cast<double>(num) / den; }

struct MeanSd {
  double mean = 0.0;
  std::optional<double> sd;
};

std::optional<MeanSd> mean_sd(const std::vector<double> &xs, SdConvention c) {
  if (xs.empty()) return std::nullopt;
  double sum = 0.0;
  for (double x : xs) sum += x;
  MeanSd out;
  out.mean = sum / static_cast<double>(xs.size());
  double sq = 0.0;
  for (double x : xs) sq += (x - out.mean) * (x - out.mean);
  const auto n = static_cast<double>(xs.size());
  if (c == SdConvention::Population) out.sd = std::sqrt(sq / n);
  else if (xs.size() > 1) out.sd = std::sqrt(sq / (n - 1.0));
  return out;
}

Cell to_cell(const std::vector<double> &xs, SdConvention c) {
  Cell cell;
  cell.n = xs.size();
  if (auto ms = mean_sd(xs, c)) {
    cell.mean = ms->mean;
    cell.sd = ms->sd;
  }
  return cell;
}

std::vector<const EvalRecord *> by_author(const std::vector<EvalRecord> &records, Author a) {
  std::vector<const EvalRecord *> out;
  for (const auto &r : records)
    if (r.author == a) out.push_back(&r);
  return out;
}

nlohmann::ordered_json opt(const std::optional<double> &v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::optional<double> EvalRecord::mean(std::size_t q) const {
  const auto &a = answers.at(q - 1);
  std::size_t answered = 0;
  double sum = 0.0;
  for (char c : a) {
    if (c == '-') continue;
    ++answered;
    sum += c - '0';
  }
  if (answered == 0) return std::nullopt;
  return sum / static_cast<double>(answered);
}

std::optional<bool> EvalRecord::verdict(std::size_t q) const {
  if (is_scale_question(q)) return std::nullopt;
  if (q == 6 && verdict(5) != true) return std::nullopt;
  const auto &a = answers.at(q - 1);
  std::size_t yes = 0, answered = 0;
  for (char c : a) {
    if (c == '-') continue;
    ++answered;
    if (c == '1') ++yes;
  }
  if (answered == 0) return std::nullopt;
  return 2 * yes > answered;
}

std::optional<EvalRecord> parse_eval_row(const std::vector<std::string_view> &f) {
  if (f.size() != 3 + kQuestions) return std::nullopt;
  EvalRecord r;
  r.headline_id = std::string(text::trim(f[0]));
  r.variant_id = std::string(text::trim(f[1]));
  auto author = text::to_lower(text::trim(f[2]));
  if (author == "human" || author == "h") r.author = Author::Human;
  else if (author == "system" || author == "s") r.author = Author::System;
  else return std::nullopt;
  if (r.headline_id.empty()) return std::nullopt;

  for (std::size_t q = 1; q <= kQuestions; ++q) r.answers[q - 1] = std::string(text::trim(f[2 + q]));
  const auto raters = r.answers[0].size();
  if (raters == 0) return std::nullopt;
  for (std::size_t q = 1; q <= kQuestions; ++q) {
    const auto &a = r.answers[q - 1];
    if (a.size() != raters) return std::nullopt;
    for (std::size_t i = 0; i < raters; ++i) {
      const char c = a[i];
      const char max = is_scale_question(q) ? '3' : '1';
      if (c == '-') {
        if (q != 6) return std::nullopt;
      } else if (c < '0' || c > max) {
        return std::nullopt;
      } else if (q == 6 && r.answers[4][i] != '1') {
        return std::nullopt;  // Q6 is hidden unless that rater said yes to Q5
      }
    }
  }
  return r;
}

std::vector<EvalRecord> load_eval(const std::filesystem::path &path, ReadStats *stats) {
  std::vector<EvalRecord> out;
  ReadStats local;
  detail::for_each_tsv_row(path, [&](std::size_t line_no, const std::vector<std::string_view> &f) {
    if (line_no == 1 && !f.empty() && text::trim(f[0]) == "id") return;
    ++local.rows;
    if (auto r = parse_eval_row(f)) {
      out.push_back(std::move(*r));
    } else {
      spdlog::warn("eval {}:{}: malformed row skipped", path.string(), line_no);
      ++local.skipped;
    }
  });
  if (stats) *stats = local;
  return out;
}

std::vector<GenOutput> load_generation_outputs(const std::filesystem::path &path, ReadStats *stats) {
  auto in = detail::open_input(path);
  std::vector<GenOutput> out;
  ReadStats local;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    ++local.rows;
    try {
      auto j = nlohmann::json::parse(line);
      const auto id = j.at("headline_id").get<std::string>();
      for (const auto &o : j.at("outputs")) {
        GenOutput g;
        g.headline_id = id;
        g.word = o.at("word").get<std::string>();
        g.cosine = o.at("cosine").get<double>();
        g.prosody = o.at("objectives").at("prosody").get<double>();
        g.connection = o.at("objectives").at("connection").get<double>();
        out.push_back(std::move(g));
      }
    } catch (const nlohmann::json::exception &e) {
      spdlog::warn("generation output {}:{}: {}", path.string(), line_no, e.what());
      ++local.skipped;
    }
  }
  if (stats) *stats = local;
  return out;
}

GenIndex::GenIndex(const std::vector<GenOutput> &outputs) : outputs_(outputs) {
  for (auto &o : outputs_) o.word = text::to_lower(o.word);
  std::sort(outputs_.begin(), outputs_.end(), [](const auto &a, const auto &b) {
    return std::tie(a.headline_id, a.word) < std::tie(b.headline_id, b.word);
  });
}

const GenOutput &GenIndex::join(const EvalRecord &r) const {
  const auto word = text::to_lower(r.variant_id);
  auto it = std::lower_bound(outputs_.begin(), outputs_.end(), std::tie(r.headline_id, word),
                             [](const GenOutput &o, const auto &key) {
                               return std::tie(o.headline_id, o.word) < key;
                             });
  if (it == outputs_.end() || it->headline_id != r.headline_id || it->word != word)
    throw Error(ErrorCode::JoinFailure, "no generation output for '" + r.headline_id + "' / '" + r.variant_id + "'");
  return *it;
}

double humor_rate(const std::vector<EvalRecord> &records, Author author) {
  auto sel = by_author(records, author);
  if (sel.empty()) throw Error(ErrorCode::EmptySelection, fmt::format("no {} records", to_string(author)));
  std::size_t funny = 0;
  for (const auto *r : sel)
    if (r->mean(1).value_or(0.0) >= 1.0) ++funny;
  return fraction(funny, sel.size());
}

MeanSdTable mean_sd_table(const std::vector<EvalRecord> &records, SdConvention sd) {
  MeanSdTable table;
  table.convention = sd;

  const auto human = by_author(records, Author::Human);
  std::map<std::string, std::vector<const EvalRecord *>> groups;
  for (const auto &r : records)
    if (r.author == Author::System) groups[r.headline_id].push_back(&r);
  for (const auto &[id, members] : groups)
    if (members.size() != 3) table.flagged_groups.push_back(id);

  for (std::size_t q = 1; q <= kQuestions; ++q) {
    std::vector<double> hv;
    for (const auto *r : human)
      if (auto m = r->mean(q)) hv.push_back(*m);
    table.rows[0][q - 1] = to_cell(hv, sd);

    std::vector<double> best, avg, worst;
    for (const auto &[id, members] : groups) {
      if (members.size() != 3) continue;
      std::vector<double> xs;
      for (const auto *r : members)
        if (auto m = r->mean(q)) xs.push_back(*m);
      if (xs.empty()) continue;
      best.push_back(*std::max_element(xs.begin(), xs.end()));
      worst.push_back(*std::min_element(xs.begin(), xs.end()));
      double s = 0.0;
      for (double x : xs) s += x;
      avg.push_back(s / static_cast<double>(xs.size()));
    }
    table.rows[1][q - 1] = to_cell(best, sd);
    table.rows[2][q - 1] = to_cell(avg, sd);
    table.rows[3][q - 1] = to_cell(worst, sd);
  }
  return table;
}

ThresholdSweep threshold_sweep(const std::vector<EvalRecord> &records, const GenIndex &gen,
                               const std::vector<double> &thresholds) {
  ThresholdSweep out;
  out.thresholds = thresholds;
  std::vector<double> cosines;
  for (const auto *r : by_author(records, Author::System)) {
    ++out.system_variants;
    if (r->mean(2).value_or(0.0) >= 1.0) cosines.push_back(gen.join(*r).cosine);
  }
  out.surprising = cosines.size();
  if (cosines.empty()) throw Error(ErrorCode::EmptySelection, "no system variant was judged surprising");
  for (double t : thresholds) {
    auto below = std::count_if(cosines.begin(), cosines.end(), [t](double c) { return c < t; });
    out.fractions.push_back(fraction(static_cast<std::size_t>(below), cosines.size()));
  }
  return out;
}

ProsodyPun prosody_pun_crosstab(const std::vector<EvalRecord> &records, const GenIndex &gen) {
  ProsodyPun out;
  std::size_t agree = 0;
  for (const auto *r : by_author(records, Author::System)) {
    ++out.system_variants;
    if (r->verdict(7) != true) continue;
    ++out.punny;
    if (gen.join(*r).prosody > 0.0) ++agree;
  }
  if (out.system_variants == 0) throw Error(ErrorCode::EmptySelection, "no system records");
  out.pun_rate = fraction(out.punny, out.system_variants);
  if (out.punny > 0) out.prosody_agreement = fraction(agree, out.punny);
  return out;
}

ConcretenessSplit concreteness_split(const std::vector<HumicroeditRecord> &corpus, const ConcretenessLexicon &lex,
                                     double quantile, double threshold) {
  std::vector<const HumicroeditRecord *> graded;
  for (const auto &r : corpus)
    if (r.mean_grade && !r.edit.empty()) graded.push_back(&r);
  if (graded.empty()) throw Error(ErrorCode::EmptyCorpus, "no graded records with a replacement word");

  ConcretenessSplit out;
  out.quantile = quantile;
  const auto n = graded.size();
  out.group_size = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::ceil(quantile * static_cast<double>(n) - 1e-9)), 1, n);

  std::sort(graded.begin(), graded.end(), [](const auto *a, const auto *b) {
    if (*a->mean_grade != *b->mean_grade) return *a->mean_grade > *b->mean_grade;
    return a->id < b->id;
  });
  auto concrete_share = [&](auto first, auto last) {
    std::size_t k = 0;
    for (auto it = first; it != last; ++it)
      if (is_concrete(lex, (*it)->edit, (*it)->edit, threshold)) ++k;
    return fraction(k, out.group_size);
  };
  out.top_fraction = concrete_share(graded.begin(), graded.begin() + static_cast<std::ptrdiff_t>(out.group_size));

  std::sort(graded.begin(), graded.end(), [](const auto *a, const auto *b) {
    if (*a->mean_grade != *b->mean_grade) return *a->mean_grade < *b->mean_grade;
    return a->id < b->id;
  });
  out.bottom_fraction = concrete_share(graded.begin(), graded.begin() + static_cast<std::ptrdiff_t>(out.group_size));
  return out;
}

TargetNegativity target_negativity_stats(const std::vector<EvalRecord> &records, const GenIndex &gen) {
  TargetNegativity out;
  std::size_t negative = 0;
  for (const auto *r : by_author(records, Author::System)) {
    if (r->verdict(5) != true) continue;
    ++out.with_target;
    if (gen.join(*r).connection <= 0.0) continue;
    ++out.scored;
    if (r->verdict(6) == true) ++negative;
  }
  if (out.with_target == 0) throw Error(ErrorCode::EmptySelection, "no system variant was judged to have a target");
  out.target_hit_rate = fraction(out.scored, out.with_target);
  if (out.scored > 0) out.negativity_agreement = fraction(negative, out.scored);
  return out;
}

// ---- report ----------------------------------------------------------------

namespace {

nlohmann::ordered_json distributions(const std::vector<EvalRecord> &records) {
  nlohmann::ordered_json out;
  for (auto author : {Author::Human, Author::System}) {
    nlohmann::ordered_json per_q;
    for (std::size_t q = 1; q <= kQuestions; ++q) {
      std::map<char, std::size_t> counts;
      std::size_t total = 0;
      for (const auto &r : records) {
        if (r.author != author) continue;
        for (char c : r.answers[q - 1]) {
          if (c == '-') continue;
          ++counts[c];
          ++total;
        }
      }
      nlohmann::ordered_json shares;
      const char max = is_scale_question(q) ? '3' : '1';
      for (char c = '0'; c <= max; ++c) shares[std::string(1, c)] = fraction(counts[c], total);
      per_q[fmt::format("Q{}", q)] = shares;
    }
    out[std::string(to_string(author))] = per_q;
  }
  return out;
}

std::string skipped(std::string_view why) { return fmt::format("skipped: {}", why); }

}  // namespace

nlohmann::ordered_json build_report(const ReportInputs &in) {
  nlohmann::ordered_json report;
  report["meta"] = {{"aggregation", kAggregation},
                    {"sd_convention", to_string(in.sd)},
                    {"quantile", in.quantile},
                    {"thresholds", in.thresholds},
                    {"eval_records", in.eval.size()}};

  nlohmann::ordered_json hr;
  for (auto a : {Author::Human, Author::System}) {
    try {
      hr[std::string(to_string(a))] = humor_rate(in.eval, a);
    } catch (const Error &) {
      hr[std::string(to_string(a))] = skipped("no records");
    }
  }
  report["humor_rate"] = hr;
  report["distributions"] = distributions(in.eval);

  auto table = mean_sd_table(in.eval, in.sd);
  nlohmann::ordered_json t;
  for (std::size_t row = 0; row < 4; ++row) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto &c : table.rows[row]) cells.push_back({{"mean", opt(c.mean)}, {"sd", opt(c.sd)}, {"n", c.n}});
    t[std::string(MeanSdTable::kRowNames[row])] = cells;
  }
  t["flagged_groups"] = table.flagged_groups;
  report["mean_sd_table"] = t;

  if (!in.gen) {
    report["threshold_sweep"] = skipped("missing join");
    report["prosody_pun"] = skipped("missing join");
    report["target_negativity"] = skipped("missing join");
  } else {
    GenIndex gen(*in.gen);
    auto guarded = [&](const char *key, auto &&fn) {
      try {
        report[key] = fn();
      } catch (const Error &e) {
        report[key] = e.code() == ErrorCode::JoinFailure ? skipped("missing join") : skipped(e.what());
      }
    };
    guarded("threshold_sweep", [&] {
      auto s = threshold_sweep(in.eval, gen, in.thresholds);
      nlohmann::ordered_json j{{"system_variants", s.system_variants}, {"surprising", s.surprising}};
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < s.thresholds.size(); ++i)
        rows.push_back({{"threshold", s.thresholds[i]}, {"dissimilar_fraction", s.fractions[i]}});
      j["by_threshold"] = rows;
      return j;
    });
    guarded("prosody_pun", [&] {
      auto p = prosody_pun_crosstab(in.eval, gen);
      return nlohmann::ordered_json{{"system_variants", p.system_variants},
                                    {"punny", p.punny},
                                    {"pun_rate", p.pun_rate},
                                    {"prosody_agreement", opt(p.prosody_agreement)}};
    });
    guarded("target_negativity", [&] {
      auto s = target_negativity_stats(in.eval, gen);
      return nlohmann::ordered_json{{"with_target", s.with_target},
                                    {"scored", s.scored},
                                    {"target_hit_rate", s.target_hit_rate},
                                    {"negativity_agreement", opt(s.negativity_agreement)}};
    });
  }

  if (!in.corpus || !in.lexicon) {
    report["concreteness_split"] = skipped("missing corpus or concreteness lexicon");
  } else {
    try {
      auto c = concreteness_split(*in.corpus, *in.lexicon, in.quantile);
      report["concreteness_split"] = {{"quantile", c.quantile},
                                      {"group_size", c.group_size},
                                      {"top_fraction", c.top_fraction},
                                      {"bottom_fraction", c.bottom_fraction}};
    } catch (const Error &e) {
      report["concreteness_split"] = skipped(e.what());
    }
  }
  return report;
}

namespace {

std::string pct(const nlohmann::ordered_json &v) {
  if (!v.is_number()) return v.is_string() ? v.get<std::string>() : "-";
  return fmt::format("{:.1f}%", 100.0 * v.get<double>());
}

std::string num(const nlohmann::ordered_json &v) {
  return v.is_number() ? fmt::format("{:.2f}", v.get<double>()) : "-";
}

}  // namespace

std::string render_report(const nlohmann::ordered_json &r) {
  std::ostringstream out;
  out << "# " << r["meta"]["aggregation"].get<std::string>() << "\n";
  out << "# SD convention: " << r["meta"]["sd_convention"].get<std::string>() << "\n\n";

  out << "Humor rate (mean Q1 >= 1)\n";
  for (auto &[k, v] : r["humor_rate"].items()) out << fmt::format("  {:<8}{}\n", k, pct(v));

  out << "\nAnswer distribution per question\n";
  for (auto &[author, per_q] : r["distributions"].items()) {
    for (auto &[q, shares] : per_q.items()) {
      out << fmt::format("  {:<7}{:<4}", author == "human" ? "H" : "S", q);
      for (auto &[answer, share] : shares.items()) out << fmt::format("  {}:{:>6}", answer, pct(share));
      out << '\n';
    }
  }

  out << "\nMean and SD\n" << fmt::format("  {:<7}", "");
  for (std::size_t q = 1; q <= kQuestions; ++q) out << fmt::format("{:>12}", fmt::format("Q{}", q));
  out << '\n';
  for (auto name : MeanSdTable::kRowNames) {
    out << fmt::format("  {:<7}", name);
    for (const auto &c : r["mean_sd_table"][std::string(name)])
      out << fmt::format("{:>12}", fmt::format("{}/{}", num(c["mean"]), num(c["sd"])));
    out << '\n';
  }

  out << "\nSimilarity thresholds among surprising variants\n";
  const auto &sweep = r["threshold_sweep"];
  if (sweep.is_string()) {
    out << "  " << sweep.get<std::string>() << '\n';
  } else {
    for (const auto &row : sweep["by_threshold"])
      out << fmt::format("  cosine < {:<5}{}\n", row["threshold"].get<double>(), pct(row["dissimilar_fraction"]));
  }

  auto section = [&](const char *title, const char *key, std::initializer_list<const char *> fields) {
    out << '\n' << title << '\n';
    const auto &s = r[key];
    if (s.is_string()) {
      out << "  " << s.get<std::string>() << '\n';
      return;
    }
    for (const char *f : fields) out << fmt::format("  {:<22}{}\n", f, pct(s[f]));
  };
  section("Prosody vs. pun", "prosody_pun", {"pun_rate", "prosody_agreement"});
  section("Target and negativity", "target_negativity", {"target_hit_rate", "negativity_agreement"});
  section("Concreteness of human replacements", "concreteness_split", {"top_fraction", "bottom_fraction"});
  return out.str();
}

}  // namespace headliner::analysis
