#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "headliner/headline.hpp"
#include "headliner/resources.hpp"

namespace headliner::analysis {

inline constexpr std::size_t kQuestions = 7;

enum class Author { Human, System };
std::string_view to_string(Author a);

/// One judged headline variant. Answers are stored per rater, one character
/// each: Q1/Q2 use '0'..'3', the yes/no questions '0'/'1', and '-' marks a
/// question the rater did not see (Q6 is only shown after a yes on Q5).
///
/// Aggregation over raters: arithmetic mean for Q1/Q2, majority vote for
/// yes/no questions with ties counted as no.
struct EvalRecord {
  std::string headline_id;
  std::string variant_id;  // the replacement word, used to join generation output
  Author author = Author::System;
  std::array<std::string, kQuestions> answers;

  std::size_t rater_count() const { return answers[0].size(); }

  /// Mean answer for question q (1-based): score mean for Q1/Q2, share of
  /// yes answers otherwise. Nothing when no rater answered.
  std::optional<double> mean(std::size_t q) const;

  /// Majority verdict for a yes/no question. Q6 is absent unless Q5 is yes.
  std::optional<bool> verdict(std::size_t q) const;
};

struct ReadStats {
  std::size_t rows = 0;
  std::size_t skipped = 0;
};

/// TSV `id<TAB>variant<TAB>author<TAB>q1<TAB>...<TAB>q7` (header optional).
std::vector<EvalRecord> load_eval(const std::filesystem::path &path, ReadStats *stats = nullptr);
std::optional<EvalRecord> parse_eval_row(const std::vector<std::string_view> &fields);

/// What the analysis needs from a generated variant.
struct GenOutput {
  std::string headline_id;
  std::string word;
  double cosine = 0.0;
  double prosody = 0.0;
  double connection = 0.0;
};

/// Reads the `outputs` of each JSON-lines generation record.
std::vector<GenOutput> load_generation_outputs(const std::filesystem::path &path, ReadStats *stats = nullptr);

class GenIndex {
 public:
  explicit GenIndex(const std::vector<GenOutput> &outputs);
  /// Throws JoinFailure when the record has no matching output.
  const GenOutput &join(const EvalRecord &r) const;

 private:
  std::vector<GenOutput> outputs_;  // sorted by (headline_id, word)
};

/// Share of the author's variants with mean Q1 >= 1. EmptySelection if none.
double humor_rate(const std::vector<EvalRecord> &records, Author author);

enum class SdConvention { Population, Sample };
std::string_view to_string(SdConvention c);

struct Cell {
  std::optional<double> mean;
  std::optional<double> sd;
  std::size_t n = 0;
};

struct MeanSdTable {
  // rows: human, max, avg, min; columns Q1..Q7
  std::array<std::array<Cell, kQuestions>, 4> rows;
  std::vector<std::string> flagged_groups;  // originals without exactly 3 system variants
  SdConvention convention = SdConvention::Population;

  static constexpr std::array<std::string_view, 4> kRowNames = {"human", "max", "avg", "min"};
};

/// Human row over human variants. For max/avg/min, each original's three
/// system variants are reduced to their best/mean/worst value, and those
/// per-original values are averaged.
MeanSdTable mean_sd_table(const std::vector<EvalRecord> &records, SdConvention sd = SdConvention::Population);

struct ThresholdSweep {
  std::size_t system_variants = 0;
  std::size_t surprising = 0;           // mean Q2 >= 1
  std::vector<double> thresholds;
  std::vector<double> fractions;        // share of surprising variants with cosine < threshold
};

ThresholdSweep threshold_sweep(const std::vector<EvalRecord> &records, const GenIndex &gen,
                               const std::vector<double> &thresholds);

struct ProsodyPun {
  std::size_t system_variants = 0;
  std::size_t punny = 0;
  double pun_rate = 0.0;
  std::optional<double> prosody_agreement;  // among punny, share with prosody > 0
};

ProsodyPun prosody_pun_crosstab(const std::vector<EvalRecord> &records, const GenIndex &gen);

struct ConcretenessSplit {
  double quantile = 0.1;
  std::size_t group_size = 0;
  double top_fraction = 0.0;
  double bottom_fraction = 0.0;
};

/// Share of concrete human replacement words among the top and bottom
/// ceil(quantile * N) records by meanGrade (ties broken by id).
ConcretenessSplit concreteness_split(const std::vector<HumicroeditRecord> &corpus, const ConcretenessLexicon &lex,
                                     double quantile = 0.1, double threshold = kConcreteThreshold);

struct TargetNegativity {
  std::size_t with_target = 0;  // system variants judged to have a target (Q5)
  std::size_t scored = 0;       // ... of which connection > 0
  double target_hit_rate = 0.0;
  std::optional<double> negativity_agreement;  // among scored, share with Q6 yes
};

TargetNegativity target_negativity_stats(const std::vector<EvalRecord> &records, const GenIndex &gen);

struct ReportInputs {
  std::vector<EvalRecord> eval;
  std::optional<std::vector<GenOutput>> gen;
  std::optional<std::vector<HumicroeditRecord>> corpus;
  const ConcretenessLexicon *lexicon = nullptr;
  std::vector<double> thresholds{0.3, 0.2, 0.1};
  double quantile = 0.1;
  SdConvention sd = SdConvention::Population;
};

/// Every statistic the inputs allow; the others are marked as skipped.
nlohmann::ordered_json build_report(const ReportInputs &in);

/// Plain-text rendering of a report (per-question percentages and Table-style means).
std::string render_report(const nlohmann::ordered_json &report);

}  // namespace headliner::analysis
