#include "world.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace world {

namespace fs = std::filesystem;

namespace {

struct Syllables {
  std::mt19937_64 &rng;
  std::set<std::string> used;

  // Returns (spelling, ipa) for a fresh word of 1-3 syllables.
  std::pair<std::string, std::string> fresh() {
    static const std::vector<std::pair<std::string, std::string>> onsets = {
        {"b", "b"}, {"d", "d"}, {"f", "f"}, {"g", "ɡ"}, {"k", "k"}, {"l", "l"}, {"m", "m"}, {"n", "n"},
        {"p", "p"}, {"r", "r"}, {"s", "s"}, {"t", "t"}, {"v", "v"}, {"z", "z"}, {"sh", "ʃ"}, {"ch", "tʃ"}};
    static const std::vector<std::pair<std::string, std::string>> nuclei = {
        {"a", "æ"}, {"e", "e"}, {"i", "ɪ"}, {"o", "ɒ"}, {"u", "ʌ"}, {"ee", "iː"}, {"oo", "uː"}, {"ai", "aɪ"}};
    for (;;) {
      std::string spell, ipa;
      const int syl = 1 + static_cast<int>(rng() % 3);
      for (int s = 0; s < syl; ++s) {
        const auto &on = onsets[rng() % onsets.size()];
        const auto &nu = nuclei[rng() % nuclei.size()];
        spell += on.first + nu.first;
        ipa += (s == 0 ? "ˈ" : "") + on.second + nu.second;
      }
      if (rng() % 2) {
        const auto &coda = onsets[rng() % 13];
        spell += coda.first;
        ipa += coda.second;
      }
      if (used.insert(spell).second) return {spell, ipa};
    }
  }
};

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

struct Tok {
  std::string form, lemma, upos, xpos;
  int head;  // 1-based, 0 root
  std::string deprel, misc = "_";
};

}  // namespace

Paths write(const fs::path &dir, const Options &opts) {
  fs::create_directories(dir);
  Paths p;
  p.dir = dir;
  p.corpus = dir / "headlines.tsv";
  p.parses = dir / "headlines.conllu";
  p.grammar = dir / "grammar.tsv";
  p.relatedness_corpus = dir / "relatedness.txt";
  p.relatedness = dir / "relatedness.bin";
  p.embeddings = dir / "embeddings.txt";
  p.concreteness = dir / "concreteness.tsv";
  p.ipa = dir / "ipa.tsv";
  p.polarity = dir / "polarity.tsv";
  p.kb = dir / "kb.tsv";

  std::mt19937_64 rng(opts.seed);
  auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto pick = [&](const auto &v) -> const auto & { return v[rng() % v.size()]; };

  Syllables gen{rng, {}};
  std::map<std::string, std::string> ipa;
  auto make = [&](std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      auto [w, t] = gen.fresh();
      ipa[w] = t;
      out.push_back(w);
    }
    return out;
  };
  const auto nouns = make(2500 + opts.big_slot_fillers);
  const auto verbs = make(60);
  const auto adjectives = make(60);
  const auto descriptors = make(150);
  const auto first_names = make(20);
  const auto last_names = make(20);

  // Heads of compound slots and objects of verbs.
  std::vector<std::string> heads(nouns.begin(), nouns.begin() + 40);
  const std::string big_head = heads.front();
  // Words that appear in headlines always have embeddings; only the tail of
  // the noun list can be out of vocabulary.
  const std::vector<std::string> common(nouns.begin(), nouns.begin() + 2000);
  const std::set<std::string> rare(nouns.begin() + 2000, nouns.begin() + 2500);

  // Grammar repository.
  std::vector<std::string> grammar_rows;
  auto row = [&](const std::string &h, const std::string &ht, const std::string &rel, const std::string &d,
                 const std::string &dt, long f) {
    grammar_rows.push_back(fmt::format("{}\t{}\t{}\t{}\t{}\t{}", h, ht, rel, d, dt, f));
  };
  std::set<std::string> big_fillers;
  if (opts.big_slot_fillers > 0) {
    for (std::size_t i = 0; i < opts.big_slot_fillers; ++i) {
      const auto &w = nouns[2500 + i];
      big_fillers.insert(w);
      row(big_head, "NN", "compound", w, "NN", 51 + static_cast<long>(rng() % 300));
    }
  }
  for (const auto &h : heads) {
    const std::size_t n = 30 + rng() % 120;
    for (std::size_t i = 0; i < n; ++i) row(h, "NN", "compound", pick(nouns), "NN", 1 + static_cast<long>(rng() % 400));
    for (std::size_t i = 0; i < 25; ++i) row(pick(verbs), "VBZ", "dobj", h, "NN", 1 + static_cast<long>(rng() % 400));
    row(h, "NN", "amod", pick(adjectives), "JJ", 1 + static_cast<long>(rng() % 400));
  }
  for (const auto &v : verbs)
    for (std::size_t i = 0; i < 10; ++i) row(v, "VBZ", "nsubj", pick(nouns), "NN", 1 + static_cast<long>(rng() % 400));
  {
    std::ofstream out(p.grammar);
    for (const auto &r : grammar_rows) out << r << '\n';
  }

  // Lexicons. Fillers of the big slot are all concrete.
  {
    std::ofstream conc(p.concreteness), pron(p.ipa), emb(p.embeddings);
    std::vector<std::string> vocab;
    for (const auto *group : {&nouns, &verbs, &adjectives, &descriptors, &first_names, &last_names})
      vocab.insert(vocab.end(), group->begin(), group->end());
    std::vector<std::string> emb_rows;
    const int dim = 32;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (const auto &w : vocab) {
      const bool big = big_fillers.count(w) > 0;
      if (big || rng() % 10 != 0) conc << w << '\t' << fmt::format("{:.2f}", big ? uniform(3.0, 5.0) : uniform(1.0, 5.0)) << '\n';
      if (rng() % 20 != 0) pron << w << '\t' << ipa[w] << '\n';
      if (!rare.count(w) || rng() % 5 != 0) {
        std::string line = w;
        for (int d = 0; d < dim; ++d) line += fmt::format(" {:.5f}", gauss(rng));
        emb_rows.push_back(std::move(line));
      }
    }
    emb << emb_rows.size() << ' ' << dim << '\n';
    for (const auto &r : emb_rows) emb << r << '\n';
  }
  {
    std::ofstream pol(p.polarity);
    for (const auto &d : descriptors) pol << d << '\t' << fmt::format("{:.2f}", uniform(-1.0, 1.0)) << '\n';
  }
  {
    std::ofstream kb(p.kb);
    for (std::size_t i = 0; i < first_names.size(); i += 2) {
      kb << capitalize(first_names[i]) << ' ' << capitalize(last_names[i]) << '\t';
      for (int j = 0; j < 8; ++j) kb << (j ? "," : "") << pick(descriptors);
      kb << '\n';
    }
  }

  // Relatedness corpus, about 10k tokens.
  {
    std::ofstream out(p.relatedness_corpus);
    std::vector<std::string> mixed;
    for (const auto *group : std::initializer_list<const std::vector<std::string> *>{&descriptors, &last_names, &heads}) mixed.insert(mixed.end(), group->begin(), group->end());
    for (std::size_t i = 0; i < 300; ++i) mixed.push_back(nouns[40 + i]);
    for (int s = 0; s < 1000; ++s) {
      const int len = 6 + static_cast<int>(rng() % 8);
      for (int t = 0; t < len; ++t) out << (t ? " " : "") << pick(mixed);
      out << '\n';
    }
  }
  headliner::RelatednessModel::build_from_file(p.relatedness_corpus, {5, 2}).save(p.relatedness);

  // Headlines and parses.
  std::ofstream tsv(p.corpus), conll(p.parses);
  tsv << "id\toriginal\tedit\tgrades\tmeanGrade\n";
  const std::size_t total = opts.headlines + opts.ineligible;
  for (std::size_t i = 0; i < total; ++i) {
    const bool ineligible = i >= opts.headlines;
    const bool big = !ineligible && i < opts.big_slot_headlines;
    std::vector<Tok> toks;
    const bool entity = rng() % 3 != 0;
    const std::string obj = big ? big_head : pick(heads);
    const std::string mod = pick(common);
    const std::string verb = pick(verbs);
    int verb_id;
    if (entity) {
      const auto k = rng() % first_names.size();
      toks.push_back({capitalize(first_names[k]), first_names[k], "PROPN", "NNP", 2, "compound", "Entity=B-PERSON"});
      toks.push_back({capitalize(last_names[k]), last_names[k], "PROPN", "NNP", 3, "nsubj", "Entity=I-PERSON"});
      verb_id = 3;
    } else {
      const auto subj = pick(common);
      toks.push_back({capitalize(subj), subj, "NOUN", "NN", 2, "nsubj"});
      verb_id = 2;
    }
    toks.push_back({verb + "s", verb, "VERB", "VBZ", 0, "ROOT"});
    const bool adjective = ineligible && i % 2 == 0;
    if (adjective) {
      const auto adj = pick(adjectives);
      toks.push_back({adj, adj, "ADJ", "JJ", verb_id + 2, "amod"});
    } else {
      toks.push_back({mod, mod, "NOUN", "NN", verb_id + 2, "compound"});
    }
    const bool plural = rng() % 2 == 0;
    toks.push_back({plural ? obj + "s" : obj, obj, "NOUN", plural ? "NNS" : "NN", verb_id, "dobj"});

    // Which token carries the edit marker, and how many tokens it spans.
    std::size_t edit = static_cast<std::size_t>(verb_id);  // the modifier, 0-based
    std::size_t span = 1;
    if (ineligible && !adjective) span = 2;
    else if (!ineligible && !big) {
      const auto r = rng() % 4;
      if (r == 1) edit = static_cast<std::size_t>(verb_id - 1);  // the verb (root)
      else if (r == 2) edit = static_cast<std::size_t>(verb_id + 1);  // the object
    }

    std::string original, plain;
    for (std::size_t t = 0; t < toks.size(); ++t) {
      if (t) {
        original += ' ';
        plain += ' ';
      }
      if (t == edit) original += '<';
      original += toks[t].form;
      if (t + 1 == edit + span) original += "/>";
      plain += toks[t].form;
    }
    const std::string id = fmt::format("h{:04d}", i);
    std::string grades;
    int sum = 0;
    for (int g = 0; g < 5; ++g) {
      const int v = static_cast<int>(rng() % 4);
      sum += v;
      grades += static_cast<char>('0' + v);
    }
    tsv << id << '\t' << original << '\t' << pick(nouns) << '\t' << grades << '\t' << fmt::format("{:.1f}", sum / 5.0)
        << '\n';
    conll << "# sent_id = " << id << "\n# text = " << plain << '\n';
    for (std::size_t t = 0; t < toks.size(); ++t) {
      const auto &k = toks[t];
      conll << t + 1 << '\t' << k.form << '\t' << k.lemma << '\t' << k.upos << '\t' << k.xpos << "\t_\t" << k.head
            << '\t' << k.deprel << "\t_\t" << k.misc << '\n';
    }
    conll << '\n';
  }
  return p;
}

headliner::Resources load(const Paths &p) {
  headliner::Resources res;
  res.grammar = headliner::GrammarRepo::load(p.grammar);
  res.relatedness = headliner::RelatednessModel::load(p.relatedness);
  res.embeddings = headliner::EmbeddingStore::load(p.embeddings);
  res.concreteness = headliner::ConcretenessLexicon::load(p.concreteness);
  res.pronunciation = headliner::PronunciationLexicon::load(p.ipa);
  res.polarity = headliner::PolarityLexicon::load(p.polarity);
  res.kb = headliner::CharacterKB::load(p.kb);
  return res;
}

TempDir::TempDir(const std::string &tag) {
  static std::random_device rd;
  for (;;) {
    path_ = fs::temp_directory_path() / fmt::format("headliner-{}-{:016x}", tag, (std::uint64_t{rd()} << 32) | rd());
    if (fs::create_directory(path_)) break;
  }
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace world
