#include <doctest.h>

#include <sstream>

#include "headliner/error.hpp"
#include "headliner/headline.hpp"
#include "helpers.hpp"
#include "world.hpp"

using namespace headliner;

namespace {
conllu::Sentence parse(const std::string &s) {
  std::istringstream in(s);
  conllu::Sentence out;
  conllu::read(in, [&](conllu::Sentence &&x) { out = std::move(x); });
  return out;
}

const char *kIllegal =
    "1\tIllegal\tillegal\tADJ\tJJ\t_\t2\tamod\t_\t_\n"
    "2\tImmigrants\timmigrant\tNOUN\tNNS\t_\t3\tnsubj\t_\t_\n"
    "3\tprotest\tprotest\tVERB\tVBP\t_\t0\tROOT\t_\t_\n";
}  // namespace

TEST_CASE("worked example joins with its parse") {
  auto hs = load_corpus(kDataDir / "paris" / "headlines.tsv", kDataDir / "paris" / "headlines.conllu");
  REQUIRE(hs.size() == 1);
  const auto &h = hs[0];
  CHECK(h.edit_token().form == "climate");
  CHECK(h.edit_token().xpos == "NN");
  CHECK(h.tokens[static_cast<std::size_t>(h.edit_token().head)].form == "deal");
  CHECK(h.edit_token().deprel == "compound");
  CHECK(h.human_edit == "marijuana");
  CHECK(h.mean_grade == 1.0);
  CHECK(eligible(h));
  auto slot = h.slot();
  REQUIRE(slot.head_side);
  CHECK(slot.head_side->lemma == "deal");
  CHECK(slot.head_side->deprel == "compound");
  CHECK(h.render("drug") == "City halls and landmarks turn green in support of Paris drug deal");
  auto ents = h.entities();
  REQUIRE(ents.size() == 1);
  CHECK(ents[0].text == "Paris");
  CHECK(ents[0].type == "GPE");
}

TEST_CASE("mean grade parsing and bounds") {
  world::TempDir tmp("hl");
  write_file(tmp / "c.tsv",
             "id\toriginal\tedit\tgrades\tmeanGrade\n"
             "1\tA <b/> c\tx\t10000\t0.8\n"
             "2\tA <b/> c\tx\t10000\t3.5\n"
             "3\n");
  CorpusStats stats;
  auto recs = load_humicroedit(tmp / "c.tsv", &stats);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].mean_grade == 0.8);
  CHECK(stats.malformed == 2);
}

TEST_CASE("spans and eligibility") {
  HumicroeditRecord r{"x", "<Illegal Immigrants/> protest", "Cats", "", std::nullopt};
  auto h = join_parse(r, parse(kIllegal));
  CHECK(h.edit_length == 2);
  CHECK(h.original_span() == "Illegal Immigrants");
  CHECK_FALSE(eligible(h));

  HumicroeditRecord adj{"y", "<Illegal/> Immigrants protest", "Legal", "", std::nullopt};
  CHECK_FALSE(eligible(join_parse(adj, parse(kIllegal))));

  HumicroeditRecord verb{"z", "Illegal Immigrants <protest/>", "dance", "", std::nullopt};
  auto v = join_parse(verb, parse(kIllegal));
  CHECK(eligible(v));
  CHECK_FALSE(v.slot().head_side);
  CHECK(v.slot().dependent_side.size() == 1);

  HumicroeditRecord partial{"w", "Ille<gal/> Immigrants protest", "x", "", std::nullopt};
  CHECK_THROWS_AS(join_parse(partial, parse(kIllegal)), Error);
  HumicroeditRecord unmarked{"u", "Illegal Immigrants protest", "x", "", std::nullopt};
  CHECK_THROWS_AS(join_parse(unmarked, parse(kIllegal)), Error);
  HumicroeditRecord other{"o", "Legal <Aliens/> protest", "x", "", std::nullopt};
  CHECK_THROWS_AS(join_parse(other, parse(kIllegal)), Error);
}

TEST_CASE("missing parses are counted") {
  world::TempDir tmp("hl");
  write_file(tmp / "c.tsv", "a\tIllegal Immigrants <protest/>\tdance\t100\t0.2\nb\tX <y/>\tz\t1\t1\n");
  write_file(tmp / "c.conllu", std::string("# sent_id = a\n") + kIllegal + "\n");
  CorpusStats stats;
  auto hs = load_corpus(tmp / "c.tsv", tmp / "c.conllu", &stats);
  CHECK(hs.size() == 1);
  CHECK(stats.missing_parse == 1);
}

TEST_CASE("tag classes") {
  CHECK(is_noun_tag("NNS"));
  CHECK(is_noun_tag("NNP"));
  CHECK(is_verb_tag("VBD"));
  CHECK_FALSE(is_noun_tag("JJ"));
}
