#include "headliner/target.hpp"

#include <unordered_set>

#include "headliner/error.hpp"
#include "headliner/text.hpp"

namespace headliner {

std::string_view to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::Entity: return "entity";
    case TargetKind::Subject: return "subject";
    case TargetKind::Noun: return "noun";
  }
  return "noun";
}

namespace {

bool is_subject(std::string_view deprel) {
  return deprel == "nsubj" || deprel == "nsubjpass" || deprel == "nsubj:pass";
}

}  // namespace

std::vector<TargetChoice> target_pool(const ParsedHeadline &h) {
  std::vector<TargetChoice> pool;
  std::unordered_set<std::string> seen;
  auto push = [&](std::string word, TargetKind kind, std::string head) {
    if (seen.insert(text::to_lower(word)).second) pool.push_back({std::move(word), kind, text::to_lower(head)});
  };

  for (const auto &e : h.entities()) push(e.text, TargetKind::Entity, h.tokens[e.head].form);
  if (!pool.empty()) return pool;
  for (const auto &t : h.tokens)
    if (is_subject(t.deprel)) push(t.form, TargetKind::Subject, t.form);
  if (!pool.empty()) return pool;
  for (const auto &t : h.tokens)
    if (is_noun_tag(t.xpos)) push(t.form, TargetKind::Noun, t.form);
  return pool;
}

TargetChoice select_target(const ParsedHeadline &h, Rng &rng) {
  auto pool = target_pool(h);
  if (pool.empty()) throw Error(ErrorCode::NoTarget, "headline '" + h.id + "' has no entity, subject or noun");
  return pool[static_cast<std::size_t>(rng.below(pool.size()))];
}

TargetChoice select_target(const ParsedHeadline &h, std::uint64_t seed) {
  Rng rng(seed);
  return select_target(h, rng);
}

Target negative_descriptors(const TargetChoice &choice, const CharacterKB &kb, const RelatednessModel &rel,
                            const PolarityLexicon &pol, std::size_t k) {
  Target target{choice.word, choice.kind, {}, {}};
  std::vector<Descriptor> raw;
  const std::vector<std::string> *props = choice.kind == TargetKind::Entity ? kb.properties_of(choice.word) : nullptr;
  if (props) {
    target.source = "kb";
    for (std::size_t i = 0; i < props->size() && i < k; ++i) raw.push_back({(*props)[i], 1.0});
  } else {
    target.source = "relatedness";
    for (auto &[word, score] : rel.top_related(choice.head_word, k)) raw.push_back({word, score});
  }
  std::unordered_set<std::string> seen;
  for (auto &d : raw) {
    if (pol.is_negative(d.word) && seen.insert(d.word).second) target.descriptors.push_back(std::move(d));
  }
  return target;
}

}  // namespace headliner
