#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "headliner/prosody.hpp"

namespace headliner {

inline constexpr double kConcreteThreshold = 3.0;

struct LoadStats {
  std::size_t rows = 0;      // entries kept
  std::size_t warnings = 0;  // rows rejected or skipped
};

/// Word -> concreteness in [1, 5]. Keys are lowercased.
class ConcretenessLexicon {
 public:
  ConcretenessLexicon() = default;
  explicit ConcretenessLexicon(std::unordered_map<std::string, double> entries);

  /// TSV `word<TAB>score`. Unparsable or out-of-range rows are rejected and
  /// counted; throws EmptyLexicon when nothing survives.
  static ConcretenessLexicon load(const std::filesystem::path &path, LoadStats *stats = nullptr);

  std::optional<double> find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  const std::unordered_map<std::string, double> &entries() const { return entries_; }

 private:
  std::unordered_map<std::string, double> entries_;
};

/// Score for the word form, else for its lemma, else nothing.
std::optional<double> concreteness_of(const ConcretenessLexicon &lex, std::string_view word, std::string_view lemma);

/// concreteness_of(...) >= threshold; unknown words are not concrete.
bool is_concrete(const ConcretenessLexicon &lex, std::string_view word, std::string_view lemma,
                 double threshold = kConcreteThreshold);

/// Word -> IPA transcription, kept alongside its parsed phoneme sequence.
class PronunciationLexicon {
 public:
  struct Entry {
    std::string ipa;
    prosody::PhonemeSeq phonemes;
  };

  PronunciationLexicon() = default;

  /// TSV `word<TAB>ipa`. Rows whose IPA has no vowel are rejected.
  static PronunciationLexicon load(const std::filesystem::path &path, LoadStats *stats = nullptr);

  /// Adds or replaces; throws NoVowel for unusable transcriptions.
  void add(std::string_view word, std::string_view ipa);

  const Entry *find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, Entry> entries_;
};

/// Word -> polarity in [-1, 1]. A word is negative iff its score is < 0.
class PolarityLexicon {
 public:
  PolarityLexicon() = default;
  explicit PolarityLexicon(std::unordered_map<std::string, double> entries);

  static PolarityLexicon load(const std::filesystem::path &path, LoadStats *stats = nullptr);

  std::optional<double> find(std::string_view word) const;
  bool is_negative(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, double> entries_;
};

/// Entity name -> stereotypical properties, in file order, deduplicated.
class CharacterKB {
 public:
  CharacterKB() = default;

  /// TSV `entity<TAB>prop1,prop2,...`; rows with no properties are rejected.
  static CharacterKB load(const std::filesystem::path &path, LoadStats *stats = nullptr);

  void add(std::string_view entity, const std::vector<std::string> &properties);

  /// Case-insensitive exact-name lookup.
  const std::vector<std::string> *properties_of(std::string_view entity) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

}  // namespace headliner
