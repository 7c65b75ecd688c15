#include "headliner/headline.hpp"

#include <unordered_map>

#include <spdlog/spdlog.h>

#include "headliner/error.hpp"
#include "headliner/text.hpp"
#include "tsv.hpp"

namespace headliner {

namespace {

struct MarkedText {
  std::string plain;
  std::size_t span_begin = 0, span_end = 0;
};

std::optional<MarkedText> strip_marker(std::string_view original) {
  auto open = original.find('<');
  if (open == std::string_view::npos) return std::nullopt;
  auto close = original.find("/>", open);
  if (close == std::string_view::npos) return std::nullopt;
  auto word = original.substr(open + 1, close - open - 1);
  if (text::trim(word).empty() || word.find('<') != std::string_view::npos) return std::nullopt;
  MarkedText m;
  m.plain = std::string(original.substr(0, open)) + std::string(word) + std::string(original.substr(close + 2));
  m.span_begin = open;
  m.span_end = open + word.size();
  return m;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

bool forms_tree(const std::vector<HeadlineToken> &tokens) {
  const auto n = tokens.size();
  for (std::size_t i = 0; i < n; ++i) {
    int cur = static_cast<int>(i);
    std::size_t steps = 0;
    while (cur >= 0) {
      cur = tokens[static_cast<std::size_t>(cur)].head;
      if (++steps > n) return false;
    }
  }
  return true;
}

}  // namespace

bool is_noun_tag(std::string_view xpos) { return xpos.substr(0, 2) == "NN"; }
bool is_verb_tag(std::string_view xpos) { return xpos.substr(0, 2) == "VB"; }

std::vector<HumicroeditRecord> load_humicroedit(const std::filesystem::path &path, CorpusStats *stats) {
  std::vector<HumicroeditRecord> out;
  CorpusStats local;
  detail::for_each_tsv_row(path, [&](std::size_t line_no, const std::vector<std::string_view> &f) {
    if (line_no == 1 && !f.empty() && text::trim(f[0]) == "id") return;
    ++local.rows;
    if (f.size() < 2 || f.size() > 5 || text::trim(f[0]).empty()) {
      spdlog::warn("corpus {}:{}: malformed row skipped", path.string(), line_no);
      ++local.malformed;
      return;
    }
    HumicroeditRecord r;
    r.id = std::string(text::trim(f[0]));
    r.original = std::string(f[1]);
    if (f.size() > 2) r.edit = std::string(text::trim(f[2]));
    if (f.size() > 3) r.grades = std::string(text::trim(f[3]));
    if (f.size() > 4 && !text::trim(f[4]).empty()) {
      r.mean_grade = text::parse_double(f[4]);
      if (!r.mean_grade || *r.mean_grade < 0.0 || *r.mean_grade > 3.0) {
        spdlog::warn("corpus {}:{}: bad meanGrade '{}', row skipped", path.string(), line_no, f[4]);
        ++local.malformed;
        return;
      }
    }
    out.push_back(std::move(r));
  });
  local.loaded = out.size();
  if (stats) *stats = local;
  return out;
}

ParsedHeadline join_parse(const HumicroeditRecord &record, const conllu::Sentence &parse) {
  auto marked = strip_marker(record.original);
  if (!marked)
    throw Error(ErrorCode::SpanAlignmentFailure, "record '" + record.id + "' has no <word/> marker");

  ParsedHeadline h;
  h.id = record.id;
  h.text = marked->plain;
  h.span_begin = marked->span_begin;
  h.span_end = marked->span_end;
  if (!record.edit.empty()) h.human_edit = record.edit;
  h.mean_grade = record.mean_grade;

  std::size_t pos = 0;
  for (const auto &t : parse.tokens) {
    while (pos < h.text.size() && is_space(h.text[pos])) ++pos;
    if (h.text.compare(pos, t.form.size(), t.form) != 0)
      throw Error(ErrorCode::SpanAlignmentFailure,
                  "record '" + record.id + "': token '" + t.form + "' does not match the headline text");
    HeadlineToken tok;
    tok.form = t.form;
    tok.lemma = t.lemma;
    tok.xpos = t.xpos;
    tok.head = t.head - 1;
    tok.deprel = t.deprel;
    if (auto e = t.misc_value("Entity"); e && *e != "O") tok.entity = *e;
    tok.begin = pos;
    tok.end = pos + t.form.size();
    pos = tok.end;
    h.tokens.push_back(std::move(tok));
  }
  if (!forms_tree(h.tokens))
    throw Error(ErrorCode::SpanAlignmentFailure, "record '" + record.id + "': head indices do not form a tree");

  std::optional<std::size_t> first, last;
  for (std::size_t i = 0; i < h.tokens.size(); ++i) {
    const auto &t = h.tokens[i];
    if (t.end > h.span_begin && t.begin < h.span_end) {
      if (!first) first = i;
      last = i;
    }
  }
  if (!first || h.tokens[*first].begin != h.span_begin || h.tokens[*last].end != h.span_end)
    throw Error(ErrorCode::SpanAlignmentFailure,
                "record '" + record.id + "': span '" + h.original_span() + "' is not on token boundaries");
  h.edit_index = *first;
  h.edit_length = *last - *first + 1;
  return h;
}

std::vector<ParsedHeadline> load_corpus(const std::filesystem::path &tsv, const std::filesystem::path &conllu_path,
                                        CorpusStats *stats) {
  CorpusStats local;
  auto records = load_humicroedit(tsv, &local);

  std::unordered_map<std::string, conllu::Sentence> parses;
  auto read = conllu::read_file(conllu_path, [&](conllu::Sentence &&s) {
    if (!s.id.empty()) parses.emplace(s.id, std::move(s));
  });
  if (read.malformed) spdlog::warn("corpus: {} malformed parses skipped", read.malformed);

  std::vector<ParsedHeadline> out;
  for (const auto &r : records) {
    auto it = parses.find(r.id);
    if (it == parses.end()) {
      spdlog::warn("corpus: no parse for '{}', skipped", r.id);
      ++local.missing_parse;
      continue;
    }
    try {
      out.push_back(join_parse(r, it->second));
    } catch (const Error &e) {
      spdlog::warn("corpus: {}", e.what());
      ++local.misaligned;
    }
  }
  local.loaded = out.size();
  spdlog::info("corpus: {} rows, {} loaded, {} without parse, {} misaligned, {} malformed", local.rows, local.loaded,
               local.missing_parse, local.misaligned, local.malformed);
  if (stats) *stats = local;
  return out;
}

bool eligible(const ParsedHeadline &h) {
  if (h.edit_length != 1 || h.edit_index >= h.tokens.size()) return false;
  const auto &tag = h.tokens[h.edit_index].xpos;
  return is_noun_tag(tag) || is_verb_tag(tag);
}

std::vector<EntitySpan> ParsedHeadline::entities() const {
  std::vector<EntitySpan> out;
  std::optional<EntitySpan> open;
  auto close = [&] {
    if (!open) return;
    open->text = text.substr(tokens[open->first].begin, tokens[open->last].end - tokens[open->first].begin);
    open->head = open->first;
    for (auto i = open->first; i <= open->last; ++i) {
      auto hd = tokens[i].head;
      if (hd < static_cast<int>(open->first) || hd > static_cast<int>(open->last)) {
        open->head = i;
        break;
      }
    }
    out.push_back(*open);
    open.reset();
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto &label = tokens[i].entity;
    if (label.empty()) {
      close();
      continue;
    }
    const bool inside = label.rfind("I-", 0) == 0;
    const auto type = label.size() > 2 && label[1] == '-' ? label.substr(2) : label;
    if (inside && open && open->type == type) {
      open->last = i;
      continue;
    }
    close();
    open = EntitySpan{i, i, i, {}, type};
  }
  close();
  return out;
}

SlotSpec ParsedHeadline::slot() const {
  SlotSpec s;
  const auto &t = edit_token();
  s.tag = t.xpos;
  if (t.head >= 0) {
    const auto &head = tokens[static_cast<std::size_t>(t.head)];
    s.head_side = IncidentRelation{t.deprel, text::to_lower(head.lemma), head.xpos};
  }
  for (const auto &d : tokens) {
    if (d.head == static_cast<int>(edit_index)) s.dependent_side.push_back({d.deprel, text::to_lower(d.lemma), d.xpos});
  }
  return s;
}

std::string ParsedHeadline::render(std::string_view replacement) const {
  return text.substr(0, span_begin) + std::string(replacement) + text.substr(span_end);
}

}  // namespace headliner
