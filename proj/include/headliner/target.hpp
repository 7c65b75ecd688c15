#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "headliner/headline.hpp"
#include "headliner/relatedness.hpp"
#include "headliner/resources.hpp"
#include "headliner/rng.hpp"

namespace headliner {

inline constexpr std::size_t kDefaultDescriptorCount = 100;

enum class TargetKind { Entity, Subject, Noun };

std::string_view to_string(TargetKind kind);

struct TargetChoice {
  std::string word;      // surface form (full span for entities)
  TargetKind kind = TargetKind::Noun;
  std::string head_word;  // single token used for relatedness lookups
};

struct Descriptor {
  std::string word;
  double weight = 0.0;
};

/// The butt of the joke and the negative words that describe it.
struct Target {
  std::string word;
  TargetKind kind = TargetKind::Noun;
  std::string source;  // "kb" or "relatedness"
  std::vector<Descriptor> descriptors;
};

/// Candidate pools in strict priority: recognised entities, else subjects
/// (nsubj/nsubjpass), else nouns. One member is drawn uniformly from the
/// first non-empty pool. Throws NoTarget when all three are empty.
std::vector<TargetChoice> target_pool(const ParsedHeadline &h);
TargetChoice select_target(const ParsedHeadline &h, Rng &rng);
TargetChoice select_target(const ParsedHeadline &h, std::uint64_t seed);

/// Top-k KB properties for a known entity (weight 1), otherwise the top-k
/// related words (weight = PPMI); then only negative-polarity words are kept.
Target negative_descriptors(const TargetChoice &choice, const CharacterKB &kb, const RelatednessModel &rel,
                            const PolarityLexicon &pol, std::size_t k = kDefaultDescriptorCount);

}  // namespace headliner
