#include <doctest.h>

#include <sstream>

#include "headliner/scoring.hpp"
#include "oracles.hpp"

using namespace headliner;

namespace {
struct Fixture {
  ConcretenessLexicon conc{{{"drug", 4.6}, {"cash", 4.7}, {"climate", 2.9}, {"twin", 4.0}, {"ghost", 3.5}}};
  PronunciationLexicon pron;
  EmbeddingStore emb{2};
  RelatednessModel rel;
  std::vector<std::vector<std::string>> sentences{{"drug", "addictive"}, {"drug", "addictive"}, {"drug", "toxic"},
                                                  {"cash", "toxic"},     {"cash", "cold"},      {"paris", "rude"},
                                                  {"paris", "addictive"}};

  Fixture() {
    pron.add("climate", "ˈklaɪmət");
    pron.add("cash", "ˈkæʃ");
    pron.add("drug", "ˈdrʌɡ");
    pron.add("twin", "ˈtwɪn");
    const float climate[] = {1, 0}, drug[] = {0.6f, 0.8f}, cash[] = {-1, 0}, twin[] = {2, 0}, ghost[] = {0, 1};
    emb.add("climate", climate);
    emb.add("drug", drug);
    emb.add("cash", cash);
    emb.add("twin", twin);
    emb.add("ghost", ghost);
    std::string text;
    for (const auto &s : sentences) text += s[0] + " " + s[1] + "\n";
    std::istringstream in(text);
    rel = RelatednessModel::build(in, {5, 1});
  }
  ScoringContext ctx() const { return {conc, pron, emb, rel, {}}; }
};

Target target(std::vector<Descriptor> d) { return {"Paris", TargetKind::Entity, "relatedness", std::move(d)}; }
}  // namespace

TEST_CASE("objective components") {
  Fixture f;
  auto s = score_candidate("cash", "climate", "climate", target({}), f.ctx());
  REQUIRE(s);
  CHECK(s->objectives.prosody == 0.5);  // shared initial k
  CHECK(s->objectives.concreteness == (4.7 - 1.0) / 4.0);
  CHECK(s->objectives.surprise == 1.0);
  CHECK(s->objectives.connection == 0.0);
  CHECK(s->cosine == -1.0);
  CHECK(s->raw_concreteness == 4.7);
  CHECK(s->prosody_known);

  auto same = score_candidate("twin", "climate", "climate", target({}), f.ctx());
  REQUIRE(same);
  CHECK(same->objectives.surprise == 0.0);
}

TEST_CASE("connection is the weighted max over descriptors") {
  Fixture f;
  auto o = oracle::recount(f.sentences, 5, 1);
  auto t = target({{"addictive", 1.0}, {"toxic", 1.5}, {"rude", 2.0}});
  double want = std::max({1.0 * o.ppmi("drug", "addictive"), 1.5 * o.ppmi("drug", "toxic"), 2.0 * o.ppmi("drug", "rude")});
  CHECK(want > 0);
  CHECK(connection_score("drug", t, f.rel) == doctest::Approx(want).epsilon(1e-12));
  auto s = score_candidate("drug", "climate", "climate", t, f.ctx());
  REQUIRE(s);
  CHECK(s->objectives.connection == connection_score("drug", t, f.rel));
  CHECK(connection_score("drug", target({}), f.rel) == 0.0);
}

TEST_CASE("connection never decreases when a descriptor gets closer") {
  Fixture f;
  auto weak = target({{"toxic", 1.0}});
  auto strong = target({{"toxic", 1.0}, {"addictive", 1.0}});
  CHECK(connection_score("drug", strong, f.rel) >= connection_score("drug", weak, f.rel));
}

TEST_CASE("unscoreable candidates") {
  Fixture f;
  CHECK_FALSE(score_candidate("unicorn", "climate", "climate", target({}), f.ctx()));
  CHECK_FALSE(score_candidate("cash", "weather", "weather", target({}), f.ctx()));
  auto no_ipa = score_candidate("ghost", "climate", "climate", target({}), f.ctx());
  REQUIRE(no_ipa);
  CHECK_FALSE(no_ipa->prosody_known);
  CHECK(no_ipa->objectives.prosody == 0.0);
  auto by_lemma = score_candidate("cash", "climates", "climate", target({}), f.ctx());
  REQUIRE(by_lemma);
  CHECK(by_lemma->objectives.prosody == 0.5);
}

TEST_CASE("scores are in range and independent of call order") {
  Fixture f;
  auto t = target({{"addictive", 1.0}});
  auto a = score_candidate("drug", "climate", "climate", t, f.ctx());
  auto b = score_candidate("cash", "climate", "climate", t, f.ctx());
  auto a2 = score_candidate("drug", "climate", "climate", t, f.ctx());
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->objectives == a2->objectives);
  for (const auto &s : {*a, *b}) {
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(s.objectives[i] >= 0.0);
      CHECK(s.objectives[i] <= 1.0);
    }
    CHECK(s.objectives.connection >= 0.0);
  }
}
