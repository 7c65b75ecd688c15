#include <doctest.h>

#include <set>
#include <sstream>

#include "headliner/error.hpp"
#include "headliner/target.hpp"

using namespace headliner;

namespace {
ParsedHeadline make(std::vector<HeadlineToken> toks) {
  ParsedHeadline h;
  h.id = "t";
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) h.text += ' ';
    toks[i].begin = h.text.size();
    h.text += toks[i].form;
    toks[i].end = h.text.size();
  }
  h.tokens = std::move(toks);
  return h;
}

ParsedHeadline trump() {
  return make({{"Donald", "donald", "NNP", 1, "compound", "B-PERSON"},
               {"Trump", "trump", "NNP", 2, "nsubj", "I-PERSON"},
               {"signs", "sign", "VBZ", -1, "ROOT", ""},
               {"climate", "climate", "NN", 4, "compound", ""},
               {"deal", "deal", "NN", 2, "dobj", ""}});
}

RelatednessModel rel(const std::string &corpus) {
  std::istringstream in(corpus);
  return RelatednessModel::build(in, {5, 1});
}
}  // namespace

TEST_CASE("pool hierarchy") {
  auto pool = target_pool(trump());
  REQUIRE(pool.size() == 1);
  CHECK(pool[0].word == "Donald Trump");
  CHECK(pool[0].kind == TargetKind::Entity);
  CHECK(pool[0].head_word == "trump");

  auto subj = make({{"Cats", "cat", "NNS", 1, "nsubj", ""}, {"rule", "rule", "VBP", -1, "ROOT", ""},
                    {"world", "world", "NN", 1, "dobj", ""}});
  pool = target_pool(subj);
  REQUIRE(pool.size() == 1);
  CHECK(pool[0].word == "Cats");
  CHECK(pool[0].kind == TargetKind::Subject);
  CHECK(select_target(subj, 1).word == "Cats");
  CHECK(select_target(subj, 999).word == "Cats");

  auto nouns = make({{"Paris", "paris", "NN", 2, "compound", ""}, {"climate", "climate", "NN", 2, "compound", ""},
                     {"deal", "deal", "NN", -1, "ROOT", ""}});
  pool = target_pool(nouns);
  CHECK(pool.size() == 3);
  CHECK(pool[0].kind == TargetKind::Noun);
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(select_target(nouns, seed).word == select_target(nouns, seed).word);
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 64; ++seed) seen.insert(select_target(nouns, seed).word);
  CHECK(seen.size() == 3);

  auto none = make({{"Go", "go", "VB", -1, "ROOT", ""}, {"now", "now", "RB", 0, "advmod", ""}});
  CHECK_THROWS_AS(select_target(none, 1), Error);
}

TEST_CASE("entities never lose to subjects or nouns") {
  auto h = trump();
  h.tokens.push_back({"Obama", "obama", "NNP", 2, "dobj", "B-PERSON"});
  for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(select_target(h, seed).kind == TargetKind::Entity);
}

TEST_CASE("descriptors from the knowledge base") {
  CharacterKB kb;
  kb.add("Donald Trump", {"wealthy", "successful", "greedy", "aggressive"});
  PolarityLexicon pol({{"wealthy", 0.5}, {"successful", 0.7}, {"greedy", -0.6}, {"aggressive", -0.4}});
  auto model = rel("trump liar\n");
  auto t = negative_descriptors(target_pool(trump())[0], kb, model, pol, 100);
  CHECK(t.source == "kb");
  REQUIRE(t.descriptors.size() == 2);
  CHECK(t.descriptors[0].word == "greedy");
  CHECK(t.descriptors[1].word == "aggressive");
  CHECK(t.descriptors[0].weight == 1.0);

  // The cap applies before the polarity filter.
  auto capped = negative_descriptors(target_pool(trump())[0], kb, model, pol, 3);
  CHECK(capped.descriptors.size() == 1);
}

TEST_CASE("relatedness fallback") {
  CharacterKB kb;
  PolarityLexicon pol({{"liar", -0.8}, {"rich", 0.3}, {"loud", -0.2}});
  auto model = rel("trump liar\ntrump liar\ntrump rich\ntrump loud\ncat dog\n");
  auto t = negative_descriptors(target_pool(trump())[0], kb, model, pol, 100);
  CHECK(t.source == "relatedness");
  for (const auto &d : t.descriptors) {
    CHECK(pol.is_negative(d.word));
    CHECK(d.weight == model.relatedness("trump", d.word));
  }
  CHECK(t.descriptors.size() == 2);
  CHECK(t.descriptors[0].word == "liar");

  TargetChoice unknown{"nobody", TargetKind::Noun, "nobody"};
  CHECK(negative_descriptors(unknown, kb, model, pol, 100).descriptors.empty());
}
