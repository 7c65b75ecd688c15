#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "headliner/prosody.hpp"

namespace headliner::cli {

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::filesystem::path corpus, parses;
  std::filesystem::path grammar, relatedness, embeddings;
  std::filesystem::path concreteness, ipa, polarity, kb;
  std::filesystem::path out;  // JSON-lines; "-" for stdout
  std::uint64_t min_freq = 50;
  double concreteness_threshold = 3.0;
  std::size_t k = 100;
  std::size_t cap = 500;
  std::size_t n_out = 3;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  bool exact_tags = false;
  bool emit_pool = false;
  prosody::ProsodyWeights weights{};
};

nlohmann::ordered_json to_json(const RunConfig &c);

struct AnalyzeConfig {
  std::filesystem::path eval;
  std::optional<std::filesystem::path> gen;
  std::optional<std::filesystem::path> corpus;        // Humicroedit TSV for the concreteness split
  std::optional<std::filesystem::path> concreteness;  // lexicon for the concreteness split
  std::filesystem::path report;                       // JSON; text tables go to `<report>.txt`
  std::vector<double> thresholds{0.3, 0.2, 0.1};
  double quantile = 0.1;
  bool sample_sd = false;
};

int cmd_build_grammar(const std::filesystem::path &corpus, const std::filesystem::path &out,
                      const std::optional<std::filesystem::path> &binary_out = std::nullopt);

int cmd_build_relatedness(const std::filesystem::path &corpus, int window, int min_count,
                          const std::filesystem::path &out,
                          const std::optional<std::filesystem::path> &tsv_out = std::nullopt);

/// Writes `<out>` (JSON lines), `<out>.meta.json` (effective config and
/// summary) and `<out>.txt` (altered headlines, one per line).
int cmd_generate(const RunConfig &config);

int cmd_analyze(const AnalyzeConfig &config);

/// Full command line front end; returns the process exit code.
int run(int argc, const char *const *argv);

}  // namespace headliner::cli
