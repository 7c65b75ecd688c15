#include "headliner/resources.hpp"

#include <algorithm>
#include <unordered_set>

#include <spdlog/spdlog.h>

#include "headliner/error.hpp"
#include "headliner/text.hpp"
#include "tsv.hpp"

namespace headliner {

namespace {

std::string normalize_entity(std::string_view name) {
  std::string out;
  for (auto piece : text::split_ws(name)) {
    if (!out.empty()) out += ' ';
    out += text::to_lower(piece);
  }
  return out;
}

// Shared loader for the two `word<TAB>score` lexicons.
std::unordered_map<std::string, double> load_scored_words(const std::filesystem::path &path, double lo, double hi,
                                                          std::string_view what, LoadStats *stats) {
  std::unordered_map<std::string, double> entries;
  LoadStats local;
  detail::for_each_tsv_row(path, [&](std::size_t line_no, const std::vector<std::string_view> &fields) {
    std::optional<double> score;
    if (fields.size() == 2 && !text::trim(fields[0]).empty()) score = text::parse_double(fields[1]);
    if (!score || !(*score >= lo && *score <= hi)) {
      spdlog::warn("{} {}:{}: malformed row rejected", what, path.string(), line_no);
      ++local.warnings;
      return;
    }
    auto [it, inserted] = entries.emplace(text::to_lower(text::trim(fields[0])), *score);
    if (!inserted) {
      spdlog::warn("{} {}:{}: duplicate '{}' ignored", what, path.string(), line_no, it->first);
      ++local.warnings;
    }
  });
  local.rows = entries.size();
  if (entries.empty()) throw Error(ErrorCode::EmptyLexicon, std::string(what) + " '" + path.string() + "' is empty");
  spdlog::info("{}: loaded {} entries ({} warnings)", what, local.rows, local.warnings);
  if (stats) *stats = local;
  return entries;
}

}  // namespace

// ---- concreteness ----------------------------------------------------------

ConcretenessLexicon::ConcretenessLexicon(std::unordered_map<std::string, double> entries) {
  for (auto &[word, score] : entries) entries_.emplace(text::to_lower(word), score);
}

ConcretenessLexicon ConcretenessLexicon::load(const std::filesystem::path &path, LoadStats *stats) {
  ConcretenessLexicon lex;
  lex.entries_ = load_scored_words(path, 1.0, 5.0, "concreteness", stats);
  return lex;
}

std::optional<double> ConcretenessLexicon::find(std::string_view word) const {
  auto it = entries_.find(text::to_lower(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> concreteness_of(const ConcretenessLexicon &lex, std::string_view word, std::string_view lemma) {
  if (auto s = lex.find(word)) return s;
  return lex.find(lemma);
}

bool is_concrete(const ConcretenessLexicon &lex, std::string_view word, std::string_view lemma, double threshold) {
  auto s = concreteness_of(lex, word, lemma);
  return s && *s >= threshold;
}

// ---- pronunciation ---------------------------------------------------------

PronunciationLexicon PronunciationLexicon::load(const std::filesystem::path &path, LoadStats *stats) {
  PronunciationLexicon lex;
  LoadStats local;
  detail::for_each_tsv_row(path, [&](std::size_t line_no, const std::vector<std::string_view> &fields) {
    if (fields.size() != 2 || text::trim(fields[0]).empty() || text::trim(fields[1]).empty()) {
      spdlog::warn("ipa {}:{}: malformed row rejected", path.string(), line_no);
      ++local.warnings;
      return;
    }
    auto key = text::to_lower(text::trim(fields[0]));
    if (lex.entries_.count(key)) {
      ++local.warnings;
      return;
    }
    try {
      lex.add(key, text::trim(fields[1]));
    } catch (const Error &e) {
      spdlog::warn("ipa {}:{}: {}", path.string(), line_no, e.what());
      ++local.warnings;
    }
  });
  local.rows = lex.size();
  if (lex.entries_.empty()) throw Error(ErrorCode::EmptyLexicon, "pronunciation lexicon '" + path.string() + "' is empty");
  spdlog::info("ipa: loaded {} entries ({} warnings)", local.rows, local.warnings);
  if (stats) *stats = local;
  return lex;
}

void PronunciationLexicon::add(std::string_view word, std::string_view ipa) {
  Entry entry{std::string(ipa), prosody::parse_ipa(ipa)};
  entries_.insert_or_assign(text::to_lower(word), std::move(entry));
}

const PronunciationLexicon::Entry *PronunciationLexicon::find(std::string_view word) const {
  auto it = entries_.find(text::to_lower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

// ---- polarity --------------------------------------------------------------

PolarityLexicon::PolarityLexicon(std::unordered_map<std::string, double> entries) {
  for (auto &[word, score] : entries) entries_.emplace(text::to_lower(word), score);
}

PolarityLexicon PolarityLexicon::load(const std::filesystem::path &path, LoadStats *stats) {
  PolarityLexicon lex;
  lex.entries_ = load_scored_words(path, -1.0, 1.0, "polarity", stats);
  return lex;
}

std::optional<double> PolarityLexicon::find(std::string_view word) const {
  auto it = entries_.find(text::to_lower(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool PolarityLexicon::is_negative(std::string_view word) const {
  auto s = find(word);
  return s && *s < 0.0;
}

// ---- character knowledge base ----------------------------------------------

CharacterKB CharacterKB::load(const std::filesystem::path &path, LoadStats *stats) {
  CharacterKB kb;
  LoadStats local;
  detail::for_each_tsv_row(path, [&](std::size_t line_no, const std::vector<std::string_view> &fields) {
    std::vector<std::string> props;
    if (fields.size() == 2) {
      for (auto p : text::split(fields[1], ',')) {
        auto t = text::trim(p);
        if (!t.empty()) props.emplace_back(t);
      }
    }
    if (props.empty() || normalize_entity(fields[0]).empty()) {
      spdlog::warn("kb {}:{}: malformed row rejected", path.string(), line_no);
      ++local.warnings;
      return;
    }
    if (kb.properties_of(fields[0])) {
      spdlog::warn("kb {}:{}: duplicate entity ignored", path.string(), line_no);
      ++local.warnings;
      return;
    }
    kb.add(fields[0], props);
  });
  local.rows = kb.size();
  if (kb.entries_.empty()) throw Error(ErrorCode::EmptyLexicon, "character KB '" + path.string() + "' is empty");
  if (stats) *stats = local;
  return kb;
}

void CharacterKB::add(std::string_view entity, const std::vector<std::string> &properties) {
  std::vector<std::string> unique;
  std::unordered_set<std::string> seen;
  for (const auto &p : properties) {
    auto key = text::to_lower(text::trim(p));
    if (!key.empty() && seen.insert(key).second) unique.push_back(std::move(key));
  }
  if (unique.empty()) throw Error(ErrorCode::MalformedRow, "entity '" + std::string(entity) + "' has no properties");
  entries_.insert_or_assign(normalize_entity(entity), std::move(unique));
}

const std::vector<std::string> *CharacterKB::properties_of(std::string_view entity) const {
  auto it = entries_.find(normalize_entity(entity));
  return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace headliner
