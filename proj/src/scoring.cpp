#include "headliner/scoring.hpp"

#include <algorithm>

namespace headliner {

double connection_score(std::string_view candidate, const Target &target, const RelatednessModel &rel) {
  double best = 0.0;
  for (const auto &d : target.descriptors) best = std::max(best, d.weight * rel.relatedness(candidate, d.word));
  return best;
}

std::optional<ScoredCandidate> score_candidate(std::string_view candidate, std::string_view original_form,
                                               std::string_view original_lemma, const Target &target,
                                               const ScoringContext &ctx) {
  auto original = ctx.embeddings.contains(original_form) ? original_form : original_lemma;
  auto cos = cosine(ctx.embeddings, original, candidate);
  if (!cos) return std::nullopt;
  auto conc = concreteness_of(ctx.concreteness, candidate, candidate);
  if (!conc) return std::nullopt;

  ScoredCandidate out;
  out.word = std::string(candidate);
  out.cosine = *cos;
  out.raw_concreteness = *conc;
  out.objectives.surprise = (1.0 - *cos) / 2.0;
  out.objectives.concreteness = (*conc - 1.0) / 4.0;

  const auto *orig_ipa = ctx.pronunciation.find(original_form);
  if (!orig_ipa) orig_ipa = ctx.pronunciation.find(original_lemma);
  const auto *cand_ipa = ctx.pronunciation.find(candidate);
  if (orig_ipa && cand_ipa) {
    out.objectives.prosody = prosody::prosody_score(orig_ipa->phonemes, cand_ipa->phonemes, ctx.weights);
  } else {
    out.prosody_known = false;
  }

  out.objectives.connection = connection_score(candidate, target, ctx.relatedness);
  return out;
}

}  // namespace headliner
