#include "headliner/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <numeric>
#include <thread>

#include <spdlog/spdlog.h>

#include "headliner/pareto.hpp"
#include "headliner/rng.hpp"
#include "headliner/text.hpp"

namespace headliner {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel_letter(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

std::string add_s(std::string_view w) {
  std::string s(w);
  if (ends_with(s, "s") || ends_with(s, "x") || ends_with(s, "z") || ends_with(s, "ch") || ends_with(s, "sh"))
    return s + "es";
  if (s.size() > 1 && s.back() == 'y' && !is_vowel_letter(s[s.size() - 2])) return s.substr(0, s.size() - 1) + "ies";
  return s + "s";
}

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

}  // namespace

std::string realize(std::string_view candidate, const HeadlineToken &original) {
  std::string word(candidate);
  if (original.xpos == "NNS" || original.xpos == "VBZ") word = add_s(word);
  const auto &form = original.form;
  const bool all_caps = form.size() > 1 && std::all_of(form.begin(), form.end(), [](char c) {
                          return !std::isalpha(static_cast<unsigned char>(c)) || is_upper(c);
                        });
  if (all_caps) {
    for (auto &c : word) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  } else if (!form.empty() && is_upper(form.front()) && !word.empty()) {
    word.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(word.front())));
  }
  return word;
}

GenerationResult generate(const ParsedHeadline &h, const Resources &res, const GenerationParams &params,
                          std::uint64_t seed) {
  if (!eligible(h)) throw Error(ErrorCode::Ineligible, "headline '" + h.id + "' is not a single noun/verb edit");

  GenerationResult out;
  out.headline_id = h.id;
  out.headline = h.text;
  out.seed = seed;
  const auto &orig = h.edit_token();
  out.original_word = orig.form;
  Rng rng(seed);

  auto choice = select_target(h, rng);
  out.target = negative_descriptors(choice, res.kb, res.relatedness, res.polarity, params.descriptor_count);

  auto pool = res.grammar.slot_candidates(h.slot());
  out.counts.retrieved = pool.size();

  const auto orig_form = text::to_lower(orig.form);
  const auto orig_lemma = text::to_lower(orig.lemma);
  std::erase_if(pool, [&](const std::string &c) { return c == orig_form || c == orig_lemma; });
  out.counts.after_removal = pool.size();

  std::erase_if(pool, [&](const std::string &c) {
    return !is_concrete(res.concreteness, c, c, params.concreteness_threshold);
  });
  out.counts.concrete = pool.size();
  if (pool.empty()) throw Error(ErrorCode::NoCandidates, "headline '" + h.id + "': no concrete candidates");

  if (pool.size() > params.candidate_cap) {
    std::vector<std::string> sampled;
    for (auto i : rng.sample_indices(pool.size(), params.candidate_cap)) sampled.push_back(pool[i]);
    std::sort(sampled.begin(), sampled.end());
    pool = std::move(sampled);
  }
  out.counts.sampled = pool.size();

  ScoringContext ctx{res.concreteness, res.pronunciation, res.embeddings, res.relatedness, params.weights};
  for (const auto &c : pool) {
    if (auto scored = score_candidate(c, orig.form, orig.lemma, out.target, ctx)) out.pool.push_back(std::move(*scored));
  }
  out.counts.scored = out.pool.size();
  if (out.pool.empty()) throw Error(ErrorCode::AllOOV, "headline '" + h.id + "': no candidate has an embedding");

  std::vector<ObjectiveVector> vectors;
  vectors.reserve(out.pool.size());
  for (const auto &c : out.pool) vectors.push_back(c.objectives);
  const auto fronts = pareto::non_dominated_sort(vectors);
  out.pool_rank.assign(out.pool.size(), 0);
  for (const auto &f : fronts)
    for (auto m : f.members) out.pool_rank[m] = f.rank;

  std::size_t remaining = params.n_out;
  for (const auto &f : fronts) {
    if (remaining == 0) break;
    std::vector<std::size_t> picked;
    if (f.members.size() <= remaining) {
      picked.assign(f.members.size(), 0);
      std::iota(picked.begin(), picked.end(), std::size_t{0});
    } else {
      picked = rng.sample_indices(f.members.size(), remaining);
    }
    const auto crowding = pareto::crowding_distance(vectors, f.members);
    for (auto k : picked) {
      const auto &cand = out.pool[f.members[k]];
      GeneratedVariant v;
      v.candidate = cand;
      v.surface = realize(cand.word, orig);
      v.headline = h.render(v.surface);
      v.front_rank = f.rank;
      v.crowding = crowding[k];
      out.outputs.push_back(std::move(v));
    }
    remaining -= picked.size();
  }
  std::sort(out.outputs.begin(), out.outputs.end(), [](const auto &a, const auto &b) {
    if (a.front_rank != b.front_rank) return a.front_rank < b.front_rank;
    if (a.crowding != b.crowding) return a.crowding > b.crowding;
    return a.candidate.word < b.candidate.word;
  });
  return out;
}

std::vector<HeadlineOutcome> generate_all(const std::vector<ParsedHeadline> &headlines, const Resources &res,
                                          const GenerationParams &params, std::uint64_t run_seed,
                                          std::size_t jobs) {
  std::vector<HeadlineOutcome> outcomes(headlines.size());
  auto work = [&](std::size_t i) {
    const auto &h = headlines[i];
    auto &o = outcomes[i];
    o.headline_id = h.id;
    o.eligible = eligible(h);
    if (!o.eligible) return;
    try {
      o.result = generate(h, res, params, derive_seed(run_seed, h.id));
    } catch (const Error &e) {
      o.error = e.code();
      o.message = e.what();
    }
  };

  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, headlines.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < headlines.size(); ++i) work(i);
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (std::size_t t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (auto i = next.fetch_add(1); i < headlines.size(); i = next.fetch_add(1)) work(i);
    });
  }
  workers.clear();
  return outcomes;
}

namespace {

nlohmann::ordered_json candidate_json(const ScoredCandidate &c) {
  nlohmann::ordered_json j;
  j["word"] = c.word;
  j["objectives"] = {{"prosody", c.objectives.prosody},
                     {"concreteness", c.objectives.concreteness},
                     {"surprise", c.objectives.surprise},
                     {"connection", c.objectives.connection}};
  j["cosine"] = c.cosine;
  j["raw_concreteness"] = c.raw_concreteness;
  j["prosody_known"] = c.prosody_known;
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const GenerationResult &r, bool include_pool) {
  nlohmann::ordered_json j;
  j["headline_id"] = r.headline_id;
  j["headline"] = r.headline;
  j["original_word"] = r.original_word;
  j["seed"] = r.seed;
  j["rng"] = Rng::kAlgorithm;
  nlohmann::ordered_json descriptors = nlohmann::ordered_json::array();
  for (const auto &d : r.target.descriptors) descriptors.push_back({{"word", d.word}, {"weight", d.weight}});
  j["target"] = {{"word", r.target.word},
                 {"kind", to_string(r.target.kind)},
                 {"source", r.target.source},
                 {"descriptors", descriptors}};
  j["candidates_considered"] = r.candidates_considered();
  j["counts"] = {{"retrieved", r.counts.retrieved},
                 {"after_removal", r.counts.after_removal},
                 {"concrete", r.counts.concrete},
                 {"sampled", r.counts.sampled},
                 {"scored", r.counts.scored}};
  auto outputs = nlohmann::ordered_json::array();
  for (const auto &v : r.outputs) {
    auto o = candidate_json(v.candidate);
    o["surface"] = v.surface;
    o["front_rank"] = v.front_rank;
    o["crowding"] = std::isinf(v.crowding) ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(v.crowding);
    o["altered_headline"] = v.headline;
    outputs.push_back(std::move(o));
  }
  j["outputs"] = std::move(outputs);
  if (include_pool) {
    auto pool = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.pool.size(); ++i) {
      auto c = candidate_json(r.pool[i]);
      c["front_rank"] = r.pool_rank[i];
      pool.push_back(std::move(c));
    }
    j["pool"] = std::move(pool);
  }
  return j;
}

}  // namespace headliner
