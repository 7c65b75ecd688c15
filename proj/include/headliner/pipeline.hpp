#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "headliner/embeddings.hpp"
#include "headliner/error.hpp"
#include "headliner/grammar_repo.hpp"
#include "headliner/headline.hpp"
#include "headliner/prosody.hpp"
#include "headliner/relatedness.hpp"
#include "headliner/resources.hpp"
#include "headliner/scoring.hpp"
#include "headliner/target.hpp"

namespace headliner {

/// Everything generation reads. Configure (e.g. grammar min_freq) before
/// sharing; generation only takes const references.
struct Resources {
  GrammarRepo grammar;
  RelatednessModel relatedness;
  EmbeddingStore embeddings;
  ConcretenessLexicon concreteness;
  PronunciationLexicon pronunciation;
  PolarityLexicon polarity;
  CharacterKB kb;
};

struct GenerationParams {
  double concreteness_threshold = kConcreteThreshold;
  std::size_t descriptor_count = kDefaultDescriptorCount;  // k
  std::size_t candidate_cap = 500;
  std::size_t n_out = 3;
  prosody::ProsodyWeights weights{};
};

struct GeneratedVariant {
  ScoredCandidate candidate;
  std::string surface;   // inflected and cased for the slot
  std::string headline;  // rendered altered headline
  std::size_t front_rank = 0;
  double crowding = 0.0;
};

struct PoolCounts {
  std::size_t retrieved = 0;      // slot fillers from the grammar repo
  std::size_t after_removal = 0;  // original word removed
  std::size_t concrete = 0;       // after the concreteness prune
  std::size_t sampled = 0;        // after the cap
  std::size_t scored = 0;         // in-vocabulary
};

struct GenerationResult {
  std::string headline_id;
  std::string headline;
  std::string original_word;
  std::uint64_t seed = 0;
  Target target;
  PoolCounts counts;
  std::vector<GeneratedVariant> outputs;
  std::vector<ScoredCandidate> pool;   // every scored candidate, input order
  std::vector<std::size_t> pool_rank;  // front rank of each pool member

  std::size_t candidates_considered() const { return counts.sampled; }
};

/// Replaces the marked word of one eligible headline. Draw order on the
/// seeded generator: target pick, then the cap sample, then output picks.
///
/// Throws Ineligible, NoTarget, NoRelations, NoCandidates (nothing left
/// after pruning) or AllOOV (nothing scoreable).
GenerationResult generate(const ParsedHeadline &h, const Resources &res, const GenerationParams &params,
                          std::uint64_t seed);

struct HeadlineOutcome {
  std::string headline_id;
  bool eligible = false;
  std::optional<GenerationResult> result;
  std::optional<ErrorCode> error;
  std::string message;
};

/// Runs every headline with its own derived seed. Outcomes follow input
/// order whatever the number of worker threads.
std::vector<HeadlineOutcome> generate_all(const std::vector<ParsedHeadline> &headlines, const Resources &res,
                                          const GenerationParams &params, std::uint64_t run_seed,
                                          std::size_t jobs = 1);

/// Naive agreement: plural nouns and 3rd-singular verbs get s/es/ies, and
/// the original word's capitalization is copied.
std::string realize(std::string_view candidate, const HeadlineToken &original);

/// One JSON-lines record. The scored pool is included only on request.
nlohmann::ordered_json to_json(const GenerationResult &r, bool include_pool = false);

}  // namespace headliner
