#include "headliner/cli.hpp"

#include <fstream>
#include <iostream>
#include <thread>
#include <unordered_set>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "headliner/analysis.hpp"
#include "headliner/error.hpp"
#include "headliner/pipeline.hpp"
#include "headliner/relatedness.hpp"
#include "headliner/text.hpp"

namespace headliner::cli {

namespace fs = std::filesystem;

namespace {

bool require_files(std::initializer_list<std::pair<const char *, const fs::path *>> files) {
  for (const auto &[flag, path] : files) {
    if (path->empty()) {
      std::cerr << "error: " << flag << " is required\n";
      return false;
    }
    if (!fs::is_regular_file(*path)) {
      std::cerr << "error: " << flag << ": no such file '" << path->string() << "'\n";
      return false;
    }
  }
  return true;
}

std::ofstream open_out(const fs::path &p, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(p, mode | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + p.string() + "'");
  return out;
}

int report_failure(const std::exception &e) {
  std::cerr << "error: " << e.what() << '\n';
  return kExitRuntime;
}

fs::path with_suffix(const fs::path &p, const std::string &suffix) { return fs::path(p.string() + suffix); }

}  // namespace

nlohmann::ordered_json to_json(const RunConfig &c) {
  return {{"corpus", c.corpus.string()},
          {"parses", c.parses.string()},
          {"grammar", c.grammar.string()},
          {"relatedness", c.relatedness.string()},
          {"embeddings", c.embeddings.string()},
          {"concreteness", c.concreteness.string()},
          {"ipa", c.ipa.string()},
          {"polarity", c.polarity.string()},
          {"kb", c.kb.string()},
          {"out", c.out.string()},
          {"min_freq", c.min_freq},
          {"concreteness_threshold", c.concreteness_threshold},
          {"k", c.k},
          {"cap", c.cap},
          {"n_out", c.n_out},
          {"seed", c.seed},
          {"exact_tags", c.exact_tags},
          {"emit_pool", c.emit_pool},
          {"prosody_weights",
           {{"rhyme", c.weights.rhyme},
            {"assonance", c.weights.assonance},
            {"consonance", c.weights.consonance},
            {"alliteration", c.weights.alliteration}}},
          {"rng", Rng::kAlgorithm}};
}

int cmd_build_grammar(const fs::path &corpus, const fs::path &out, const std::optional<fs::path> &binary_out) {
  if (!require_files({{"--corpus", &corpus}})) return kExitUsage;
  try {
    BuildStats stats;
    auto repo = GrammarRepo::build_from_file(corpus, &stats);
    auto tsv = open_out(out);
    repo.save_tsv(tsv);
    if (binary_out) {
      auto bin = open_out(*binary_out, std::ios::binary);
      repo.save_binary(bin);
    }
    std::cerr << fmt::format("build-grammar: {} sentences, {} arcs, {} relations, {} warnings\n", stats.sentences,
                             stats.arcs, repo.rows().size(), stats.malformed);
    return kExitOk;
  } catch (const std::exception &e) {
    return report_failure(e);
  }
}

int cmd_build_relatedness(const fs::path &corpus, int window, int min_count, const fs::path &out,
                          const std::optional<fs::path> &tsv_out) {
  if (window < 1 || min_count < 1) {
    std::cerr << "error: --window and --min-count must be >= 1\n";
    return kExitUsage;
  }
  if (!require_files({{"--corpus", &corpus}})) return kExitUsage;
  try {
    auto model = RelatednessModel::build_from_file(corpus, {window, min_count});
    model.save(out);
    if (tsv_out) {
      auto tsv = open_out(*tsv_out);
      model.export_tsv(tsv);
    }
    std::cerr << fmt::format("build-relatedness: {} words, grand total {}\n", model.vocabulary().size(),
                             model.grand_total());
    return kExitOk;
  } catch (const std::exception &e) {
    return report_failure(e);
  }
}

int cmd_generate(const RunConfig &c) {
  if (!require_files({{"--corpus", &c.corpus},
                      {"--parses", &c.parses},
                      {"--grammar", &c.grammar},
                      {"--relatedness", &c.relatedness},
                      {"--embeddings", &c.embeddings},
                      {"--concreteness", &c.concreteness},
                      {"--ipa", &c.ipa},
                      {"--polarity", &c.polarity},
                      {"--kb", &c.kb}}))
    return kExitUsage;
  if (c.out.empty()) {
    std::cerr << "error: --out is required\n";
    return kExitUsage;
  }
  if (c.n_out == 0 || c.cap == 0 || c.k == 0) {
    std::cerr << "error: --n-out, --cap and --k must be positive\n";
    return kExitUsage;
  }

  try {
    CorpusStats corpus_stats;
    auto headlines = load_corpus(c.corpus, c.parses, &corpus_stats);

    Resources res;
    res.grammar = GrammarRepo::load(c.grammar);
    res.grammar.set_min_freq(c.min_freq);
    res.grammar.set_tag_match(c.exact_tags ? TagMatch::Exact : TagMatch::Coarse);

    // Only words that can appear as an original or a candidate need vectors.
    std::unordered_set<std::string> vocab;
    for (const auto &r : res.grammar.rows()) {
      vocab.insert(r.head_lemma);
      vocab.insert(r.dep_lemma);
    }
    for (const auto &h : headlines) {
      for (const auto &t : h.tokens) {
        vocab.insert(t.form);
        vocab.insert(text::to_lower(t.form));
        vocab.insert(text::to_lower(t.lemma));
      }
    }
    res.embeddings = EmbeddingStore::load(c.embeddings, &vocab);
    res.relatedness = RelatednessModel::load(c.relatedness);
    res.concreteness = ConcretenessLexicon::load(c.concreteness);
    res.pronunciation = PronunciationLexicon::load(c.ipa);
    res.polarity = PolarityLexicon::load(c.polarity);
    res.kb = CharacterKB::load(c.kb);

    GenerationParams params;
    params.concreteness_threshold = c.concreteness_threshold;
    params.descriptor_count = c.k;
    params.candidate_cap = c.cap;
    params.n_out = c.n_out;
    params.weights = c.weights;

    auto outcomes = generate_all(headlines, res, params, c.seed, c.jobs);

    std::size_t eligible_n = 0, generated = 0, failed = 0;
    std::map<std::string, std::size_t> failures;
    std::ostringstream jsonl, txt;
    for (const auto &o : outcomes) {
      if (!o.eligible) continue;
      ++eligible_n;
      if (o.result) {
        ++generated;
        jsonl << to_json(*o.result, c.emit_pool).dump() << '\n';
        for (const auto &v : o.result->outputs) txt << o.headline_id << '\t' << v.headline << '\n';
      } else {
        ++failed;
        ++failures[std::string(to_string(*o.error))];
        spdlog::warn("generate: {}", o.message);
      }
    }
    const auto skipped = headlines.size() - eligible_n;

    if (c.out == "-") {
      std::cout << jsonl.str();
    } else {
      open_out(c.out) << jsonl.str();
      open_out(with_suffix(c.out, ".txt")) << txt.str();
      nlohmann::ordered_json meta;
      meta["config"] = to_json(c);
      meta["summary"] = {{"rows", corpus_stats.rows},
                         {"loaded", corpus_stats.loaded},
                         {"missing_parse", corpus_stats.missing_parse},
                         {"misaligned", corpus_stats.misaligned},
                         {"eligible", eligible_n},
                         {"skipped_ineligible", skipped},
                         {"generated", generated},
                         {"errors", failed},
                         {"errors_by_kind", failures}};
      open_out(with_suffix(c.out, ".meta.json")) << meta.dump(2) << '\n';
    }
    std::cerr << fmt::format("generate: {} headlines, {} eligible, {} skipped, {} generated, {} errors\n",
                             headlines.size(), eligible_n, skipped, generated, failed);
    return kExitOk;
  } catch (const std::exception &e) {
    return report_failure(e);
  }
}

int cmd_analyze(const AnalyzeConfig &c) {
  if (!require_files({{"--eval", &c.eval}})) return kExitUsage;
  if (c.gen && !require_files({{"--gen", &*c.gen}})) return kExitUsage;
  if (c.corpus && !require_files({{"--corpus", &*c.corpus}})) return kExitUsage;
  if (c.concreteness && !require_files({{"--concreteness", &*c.concreteness}})) return kExitUsage;
  if (c.report.empty()) {
    std::cerr << "error: --report is required\n";
    return kExitUsage;
  }
  try {
    analysis::ReportInputs in;
    analysis::ReadStats eval_stats;
    in.eval = analysis::load_eval(c.eval, &eval_stats);
    if (c.gen) in.gen = analysis::load_generation_outputs(*c.gen);
    std::optional<ConcretenessLexicon> lex;
    if (c.corpus) in.corpus = load_humicroedit(*c.corpus);
    if (c.concreteness) {
      lex = ConcretenessLexicon::load(*c.concreteness);
      in.lexicon = &*lex;
    }
    in.thresholds = c.thresholds;
    in.quantile = c.quantile;
    in.sd = c.sample_sd ? analysis::SdConvention::Sample : analysis::SdConvention::Population;

    auto report = analysis::build_report(in);
    report["meta"]["eval_rows"] = eval_stats.rows;
    report["meta"]["eval_rows_skipped"] = eval_stats.skipped;
    open_out(c.report) << report.dump(2) << '\n';
    open_out(with_suffix(c.report, ".txt")) << analysis::render_report(report);
    std::cerr << fmt::format("analyze: {} records ({} malformed rows skipped)\n", in.eval.size(), eval_stats.skipped);
    return kExitOk;
  } catch (const std::exception &e) {
    return report_failure(e);
  }
}

int run(int argc, const char *const *argv) {
  CLI::App app{"Humorous headline generation by single-word substitution"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Config file (TOML/INI)")->envname("HEADLINER_CONFIG");
  std::string log_level = "warn";
  app.add_option("--log-level", log_level, "trace|debug|info|warn|error|off");

  auto *grammar = app.add_subcommand("build-grammar", "Build the grammatical-relation repository from CoNLL-U");
  fs::path g_corpus, g_out;
  std::optional<fs::path> g_bin;
  grammar->add_option("--corpus", g_corpus, "Parsed corpus (CoNLL-U)")->required();
  grammar->add_option("--out", g_out, "Repository TSV")->required();
  grammar->add_option("--binary", g_bin, "Also write the binary index here");

  auto *related = app.add_subcommand("build-relatedness", "Build the PPMI word-association model");
  fs::path r_corpus, r_out;
  std::optional<fs::path> r_tsv;
  int window = 5, min_count = 5;
  related->add_option("--corpus", r_corpus, "Plain text, one sentence per line")->required();
  related->add_option("--window", window, "Co-occurrence window")->capture_default_str();
  related->add_option("--min-count", min_count, "Minimum word frequency")->capture_default_str();
  related->add_option("--out", r_out, "Binary model file")->required();
  related->add_option("--tsv", r_tsv, "Also export w1<TAB>w2<TAB>ppmi");

  auto *gen = app.add_subcommand("generate", "Generate humorous variants for each eligible headline");
  RunConfig rc;
  rc.jobs = std::max(1u, std::thread::hardware_concurrency());
  gen->add_option("--corpus", rc.corpus, "Headlines TSV");
  gen->add_option("--parses", rc.parses, "CoNLL-U parses of the headlines");
  gen->add_option("--grammar", rc.grammar, "Grammar repository (TSV or binary)");
  gen->add_option("--relatedness", rc.relatedness, "Relatedness model");
  gen->add_option("--embeddings", rc.embeddings, "Word vectors (text format)");
  gen->add_option("--concreteness", rc.concreteness, "Concreteness lexicon TSV");
  gen->add_option("--ipa", rc.ipa, "Pronunciation lexicon TSV");
  gen->add_option("--polarity", rc.polarity, "Polarity lexicon TSV");
  gen->add_option("--kb", rc.kb, "Character knowledge base TSV");
  gen->add_option("--out", rc.out, "Output JSON-lines ('-' for stdout)");
  gen->add_option("--seed", rc.seed, "Run seed")->capture_default_str();
  gen->add_option("--min-freq", rc.min_freq, "Grammar relations need freq > this")->capture_default_str();
  gen->add_option("--threshold", rc.concreteness_threshold, "Concreteness threshold")->capture_default_str();
  gen->add_option("--k", rc.k, "Descriptors per target")->capture_default_str();
  gen->add_option("--cap", rc.cap, "Candidate cap")->capture_default_str();
  gen->add_option("--n-out", rc.n_out, "Variants per headline")->capture_default_str();
  gen->add_option("--jobs", rc.jobs, "Worker threads")->capture_default_str();
  gen->add_flag("--exact-tags", rc.exact_tags, "Match full XPOS tags instead of the first two characters");
  gen->add_flag("--emit-pool", rc.emit_pool, "Include every scored candidate in the output");
  gen->add_option("--w-rhyme", rc.weights.rhyme, "Prosody weight for full rhyme")->capture_default_str();
  gen->add_option("--w-assonance", rc.weights.assonance, "Prosody weight for assonance")->capture_default_str();
  gen->add_option("--w-consonance", rc.weights.consonance, "Prosody weight for consonance")->capture_default_str();
  gen->add_option("--w-alliteration", rc.weights.alliteration, "Prosody weight for alliteration")->capture_default_str();

  auto *an = app.add_subcommand("analyze", "Recompute evaluation statistics");
  AnalyzeConfig ac;
  an->add_option("--eval", ac.eval, "Judgements TSV")->required();
  an->add_option("--gen", ac.gen, "Generation output (JSON-lines)");
  an->add_option("--corpus", ac.corpus, "Headlines TSV with human edits and meanGrade");
  an->add_option("--concreteness", ac.concreteness, "Concreteness lexicon TSV");
  an->add_option("--report", ac.report, "Report JSON")->required();
  an->add_option("--thresholds", ac.thresholds, "Similarity thresholds")->capture_default_str();
  an->add_option("--quantile", ac.quantile, "Top/bottom share for the concreteness split")->capture_default_str();
  an->add_flag("--sample-sd", ac.sample_sd, "Use the sample SD (N-1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  spdlog::set_level(spdlog::level::from_str(log_level));
  spdlog::set_default_logger(spdlog::default_logger());

  if (*grammar) return cmd_build_grammar(g_corpus, g_out, g_bin);
  if (*related) return cmd_build_relatedness(r_corpus, window, min_count, r_out, r_tsv);
  if (*gen) return cmd_generate(rc);
  if (*an) return cmd_analyze(ac);
  return kExitUsage;
}

}  // namespace headliner::cli
