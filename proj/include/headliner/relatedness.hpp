#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace headliner {

struct RelatednessOptions {
  int window = 5;     // pairs up to this many positions apart
  int min_count = 5;  // words rarer than this are dropped
};

using Sentence = std::vector<std::string>;

/// Windowed co-occurrence counts with PPMI association on top.
///
/// Every unordered pair of in-vocabulary tokens in the same sentence and at
/// most `window` positions apart is counted once. Pruned words still occupy
/// their positions, so pruning never brings two surviving tokens closer.
///
///   totals[i]   = sum_j count(i, j)
///   grand_total = sum_i totals[i]
///   ppmi(i, j)  = max(0, log(count(i, j) * grand_total / (totals[i] * totals[j])))
///
/// The vocabulary is sorted, and rows are stored CSR-style with ascending
/// column indices, so a model built twice from the same input serializes to
/// identical bytes.
class RelatednessModel {
 public:
  RelatednessModel() = default;

  /// Throws EmptyCorpus when the corpus has no tokens or no word reaches
  /// min_count. Tokens are lowercased.
  static RelatednessModel build(const std::vector<Sentence> &sentences, const RelatednessOptions &options);

  /// One sentence per line, whitespace tokenized; blank lines ignored.
  static RelatednessModel build(std::istream &corpus, const RelatednessOptions &options);
  static RelatednessModel build_from_file(const std::filesystem::path &corpus, const RelatednessOptions &options);

  static RelatednessModel load(const std::filesystem::path &path);
  void save(const std::filesystem::path &path) const;
  void save(std::ostream &out) const;

  /// `w1<TAB>w2<TAB>ppmi` for each unordered pair with positive PPMI.
  void export_tsv(std::ostream &out) const;

  /// PPMI; 0 for OOV words or pairs that never co-occur.
  double relatedness(std::string_view w1, std::string_view w2) const;

  /// Positive-PPMI neighbours of w, excluding w, by descending score then
  /// ascending word, at most k entries.
  std::vector<std::pair<std::string, double>> top_related(std::string_view w, std::size_t k) const;

  std::uint64_t count(std::string_view w1, std::string_view w2) const;
  std::uint64_t total(std::string_view w) const;
  std::uint64_t frequency(std::string_view w) const;
  std::uint64_t grand_total() const { return grand_total_; }

  std::optional<std::uint32_t> index_of(std::string_view w) const;
  const std::vector<std::string> &vocabulary() const { return vocab_; }
  const RelatednessOptions &options() const { return options_; }

 private:
  double ppmi_at(std::uint32_t i, std::uint32_t j, std::uint64_t c) const;
  std::uint64_t count_at(std::uint32_t i, std::uint32_t j) const;
  void rebuild_index();

  RelatednessOptions options_;
  std::vector<std::string> vocab_;
  std::vector<std::uint64_t> freq_;
  std::vector<std::uint64_t> totals_;
  std::uint64_t grand_total_ = 0;
  std::vector<std::uint64_t> row_ptr_{0};
  std::vector<std::uint32_t> cols_;
  std::vector<std::uint64_t> counts_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace headliner
