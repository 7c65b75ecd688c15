#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "headliner/conllu.hpp"
#include "headliner/grammar_repo.hpp"

namespace headliner {

/// One row of a Humicroedit-style TSV:
/// `id<TAB>original<TAB>edit<TAB>grades<TAB>meanGrade`, where `original`
/// marks the edited span as `<word/>`.
struct HumicroeditRecord {
  std::string id;
  std::string original;
  std::string edit;
  std::string grades;
  std::optional<double> mean_grade;  // in [0, 3]
};

struct CorpusStats {
  std::size_t rows = 0;
  std::size_t loaded = 0;
  std::size_t malformed = 0;
  std::size_t missing_parse = 0;
  std::size_t misaligned = 0;
};

/// A header row starting with `id` is skipped; malformed rows are counted.
std::vector<HumicroeditRecord> load_humicroedit(const std::filesystem::path &path, CorpusStats *stats = nullptr);

struct HeadlineToken {
  std::string form;
  std::string lemma;
  std::string xpos;
  int head = -1;  // 0-based index of the head token, -1 for the root
  std::string deprel;
  std::string entity;  // BIO label from the parse, e.g. "B-PERSON"; empty if none
  std::size_t begin = 0, end = 0;  // byte offsets in ParsedHeadline::text
};

struct EntitySpan {
  std::size_t first = 0, last = 0;  // token range, inclusive
  std::size_t head = 0;             // token whose head lies outside the span
  std::string text;
  std::string type;
};

/// A headline joined with its dependency parse and the marked edit.
struct ParsedHeadline {
  std::string id;
  std::string text;  // original headline without the edit markers
  std::vector<HeadlineToken> tokens;
  std::size_t edit_index = 0;
  std::size_t edit_length = 1;  // tokens covered by the marked span
  std::size_t span_begin = 0, span_end = 0;
  std::optional<std::string> human_edit;
  std::optional<double> mean_grade;

  const HeadlineToken &edit_token() const { return tokens.at(edit_index); }
  std::string original_span() const { return text.substr(span_begin, span_end - span_begin); }

  std::vector<EntitySpan> entities() const;

  /// The replaced token's tag and incident arcs.
  SlotSpec slot() const;

  /// The headline text with the marked span replaced.
  std::string render(std::string_view replacement) const;
};

/// Joins a Humicroedit record with its parse. Throws SpanAlignmentFailure
/// when the marked span does not line up with token boundaries.
ParsedHeadline join_parse(const HumicroeditRecord &record, const conllu::Sentence &parse);

/// Loads the TSV and its CoNLL-U sidecar (matched by `# sent_id`). Records
/// without a parse or with an unalignable span are skipped and counted.
std::vector<ParsedHeadline> load_corpus(const std::filesystem::path &tsv, const std::filesystem::path &conllu,
                                        CorpusStats *stats = nullptr);

/// Single-token edit of a noun or verb.
bool eligible(const ParsedHeadline &h);

bool is_noun_tag(std::string_view xpos);
bool is_verb_tag(std::string_view xpos);

}  // namespace headliner
