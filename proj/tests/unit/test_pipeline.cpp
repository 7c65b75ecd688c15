#include <doctest.h>

#include <algorithm>
#include <set>

#include "headliner/error.hpp"
#include "headliner/pareto.hpp"
#include "headliner/pipeline.hpp"
#include "helpers.hpp"
#include "world.hpp"

using namespace headliner;

namespace {
const auto kParis = kDataDir / "paris";

Resources paris_resources() {
  Resources res;
  res.grammar = GrammarRepo::load(kParis / "grammar.tsv");
  res.relatedness = RelatednessModel::build_from_file(kParis / "relatedness_corpus.txt", {5, 1});
  res.embeddings = EmbeddingStore::load(kParis / "embeddings.txt");
  res.concreteness = ConcretenessLexicon::load(kParis / "concreteness.tsv");
  res.pronunciation = PronunciationLexicon::load(kParis / "ipa.tsv");
  res.polarity = PolarityLexicon::load(kParis / "polarity.tsv");
  res.kb = CharacterKB::load(kParis / "kb.tsv");
  return res;
}

ParsedHeadline paris_headline() {
  return load_corpus(kParis / "headlines.tsv", kParis / "headlines.conllu").at(0);
}

bool has(const std::vector<ScoredCandidate> &pool, const std::string &w) {
  return std::any_of(pool.begin(), pool.end(), [&](const auto &c) { return c.word == w; });
}
}  // namespace

TEST_CASE("worked example") {
  auto res = paris_resources();
  auto h = paris_headline();
  auto r = generate(h, res, {}, 7);
  CHECK(r.original_word == "climate");
  CHECK(r.target.word == "Paris");
  CHECK(r.target.kind == TargetKind::Entity);
  CHECK(r.counts.retrieved == 16);
  CHECK(r.counts.after_removal == 15);
  CHECK(r.counts.concrete == 12);
  CHECK_FALSE(has(r.pool, "peace"));
  CHECK_FALSE(has(r.pool, "content"));
  CHECK_FALSE(has(r.pool, "climate"));
  CHECK(has(r.pool, "drug"));

  std::set<std::string> front0;
  for (std::size_t i = 0; i < r.pool.size(); ++i)
    if (r.pool_rank[i] == 0) front0.insert(r.pool[i].word);
  CHECK(front0.count("drug"));
  REQUIRE(r.outputs.size() == 3);
  for (const auto &o : r.outputs) {
    CHECK(o.front_rank == 0);
    CHECK(o.headline.find(o.surface + " deal") != std::string::npos);
  }
}

TEST_CASE("target is the first draw") {
  auto res = paris_resources();
  auto h = paris_headline();
  h.tokens[9].entity.clear();
  h.tokens[1].deprel = "dep";  // no entity or subject: every noun is a candidate target
  for (std::uint64_t seed : {1, 2, 3}) CHECK(generate(h, res, {}, seed).target.word == select_target(h, seed).word);
}

TEST_CASE("determinism") {
  auto res = paris_resources();
  auto h = paris_headline();
  auto a = to_json(generate(h, res, {}, 11), true).dump();
  auto b = to_json(generate(h, res, {}, 11), true).dump();
  CHECK(a == b);
}

TEST_CASE("ineligible and empty pools") {
  auto res = paris_resources();
  auto h = paris_headline();
  auto adj = h;
  adj.tokens[adj.edit_index].xpos = "JJ";
  CHECK_THROWS_WITH_AS(generate(adj, res, {}, 1), doctest::Contains("Ineligible"), Error);

  GenerationParams strict;
  strict.concreteness_threshold = 5.0;
  CHECK_THROWS_WITH_AS(generate(h, res, strict, 1), doctest::Contains("NoCandidates"), Error);

  Resources bare = paris_resources();
  bare.embeddings = EmbeddingStore(4);
  CHECK_THROWS_WITH_AS(generate(h, bare, {}, 1), doctest::Contains("AllOOV"), Error);
}

TEST_CASE("a single candidate is emitted alone") {
  auto res = paris_resources();
  res.grammar = GrammarRepo({{"deal", "NN", "compound", "cash", "NN", 99}});
  auto r = generate(paris_headline(), res, {}, 3);
  REQUIRE(r.outputs.size() == 1);
  CHECK(r.outputs[0].candidate.word == "cash");
  CHECK(r.outputs[0].front_rank == 0);
}

TEST_CASE("outputs fall back to later fronts in rank order") {
  auto res = paris_resources();
  GenerationParams p;
  p.n_out = 12;
  auto r = generate(paris_headline(), res, p, 5);
  CHECK(r.outputs.size() == r.pool.size());
  for (std::size_t i = 1; i < r.outputs.size(); ++i) CHECK(r.outputs[i - 1].front_rank <= r.outputs[i].front_rank);
  std::set<std::string> words;
  for (const auto &o : r.outputs) words.insert(o.candidate.word);
  CHECK(words.size() == r.outputs.size());
}

TEST_CASE("the cap samples uniformly and reproducibly") {
  world::TempDir tmp("pipe");
  world::Options opts;
  opts.headlines = 3;
  opts.ineligible = 0;
  opts.big_slot_fillers = 700;
  opts.big_slot_headlines = 3;
  auto paths = world::write(tmp.path(), opts);
  auto res = world::load(paths);
  auto hs = load_corpus(paths.corpus, paths.parses);
  for (const auto &h : hs) {
    auto r = generate(h, res, {}, 1);
    CHECK(r.counts.concrete >= 700);
    CHECK(r.counts.sampled == 500);
    CHECK(r.pool.size() <= 500);
    auto again = generate(h, res, {}, 1);
    CHECK(to_json(again, true) == to_json(r, true));
    auto other = generate(h, res, {}, 2);
    CHECK(to_json(other, true) != to_json(r, true));
  }
}

TEST_CASE("generate_all keeps input order for any job count") {
  world::TempDir tmp("pipe");
  world::Options opts;
  opts.headlines = 12;
  opts.ineligible = 3;
  auto paths = world::write(tmp.path(), opts);
  auto res = world::load(paths);
  auto hs = load_corpus(paths.corpus, paths.parses);
  auto one = generate_all(hs, res, {}, 9, 1);
  auto four = generate_all(hs, res, {}, 9, 4);
  REQUIRE(one.size() == hs.size());
  REQUIRE(four.size() == hs.size());
  std::size_t ineligible = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    CHECK(one[i].headline_id == hs[i].id);
    CHECK(four[i].headline_id == hs[i].id);
    CHECK(one[i].eligible == four[i].eligible);
    if (!one[i].eligible) ++ineligible;
    REQUIRE(one[i].result.has_value() == four[i].result.has_value());
    if (one[i].result) {
      CHECK(to_json(*one[i].result).dump() == to_json(*four[i].result).dump());
      CHECK(one[i].result->seed == derive_seed(9, hs[i].id));
    }
  }
  CHECK(ineligible == 3);
}

TEST_CASE("surface realization") {
  HeadlineToken nns{"Deals", "deal", "NNS", 0, "dobj", ""};
  CHECK(realize("box", nns) == "Boxes");
  CHECK(realize("city", nns) == "Cities");
  CHECK(realize("day", nns) == "Days");
  CHECK(realize("cash", nns) == "Cashes");
  HeadlineToken vbz{"signs", "sign", "VBZ", 0, "ROOT", ""};
  CHECK(realize("kiss", vbz) == "kisses");
  CHECK(realize("eat", vbz) == "eats");
  HeadlineToken caps{"NASA", "nasa", "NN", 0, "nsubj", ""};
  CHECK(realize("cheese", caps) == "CHEESE");
  HeadlineToken plain{"deal", "deal", "NN", 0, "dobj", ""};
  CHECK(realize("cheese", plain) == "cheese");
}

TEST_CASE("json record layout") {
  auto res = paris_resources();
  auto j = to_json(generate(paris_headline(), res, {}, 7));
  std::vector<std::string> keys;
  for (const auto &[k, _] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"headline_id", "headline", "original_word", "seed", "rng", "target",
                                         "candidates_considered", "counts", "outputs"});
  CHECK(j["rng"] == std::string(Rng::kAlgorithm));
  CHECK(j["outputs"][0].contains("objectives"));
  CHECK(j["outputs"][0].contains("altered_headline"));
}
