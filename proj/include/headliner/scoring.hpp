#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "headliner/embeddings.hpp"
#include "headliner/prosody.hpp"
#include "headliner/relatedness.hpp"
#include "headliner/resources.hpp"
#include "headliner/target.hpp"

namespace headliner {

/// The four humor objectives, all maximized.
struct ObjectiveVector {
  static constexpr std::size_t kSize = 4;

  double prosody = 0.0;       // [0, 1]
  double concreteness = 0.0;  // (raw - 1) / 4, [0, 1]
  double surprise = 0.0;      // (1 - cosine) / 2, [0, 1]
  double connection = 0.0;    // >= 0

  std::array<double, kSize> values() const { return {prosody, concreteness, surprise, connection}; }
  double operator[](std::size_t i) const { return values()[i]; }

  friend bool operator==(const ObjectiveVector &, const ObjectiveVector &) = default;
};

struct ScoringContext {
  const ConcretenessLexicon &concreteness;
  const PronunciationLexicon &pronunciation;
  const EmbeddingStore &embeddings;
  const RelatednessModel &relatedness;
  prosody::ProsodyWeights weights{};
};

struct ScoredCandidate {
  std::string word;
  ObjectiveVector objectives;
  double cosine = 0.0;             // similarity to the original word
  double raw_concreteness = 0.0;   // lexicon value in [1, 5]
  bool prosody_known = true;       // false when either word lacks a transcription
};

/// Scores one replacement. Nothing is returned when the candidate (or the
/// original word) has no embedding, or the candidate has no concreteness
/// score; such candidates leave the pool.
///
/// The original word is looked up by surface form, then by lemma.
std::optional<ScoredCandidate> score_candidate(std::string_view candidate, std::string_view original_form,
                                               std::string_view original_lemma, const Target &target,
                                               const ScoringContext &ctx);

/// max over descriptors of weight * relatedness(candidate, descriptor); 0 when
/// there are no descriptors.
double connection_score(std::string_view candidate, const Target &target, const RelatednessModel &rel);

}  // namespace headliner
