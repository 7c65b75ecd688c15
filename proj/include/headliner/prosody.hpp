#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace headliner::prosody {

struct Phoneme {
  std::string symbol;  // may span several code points (diphthongs, affricates, length mark)
  bool vowel = false;

  friend bool operator==(const Phoneme &, const Phoneme &) = default;
};

// Invariant: at least one vowel; stress_index, when set, indexes a vowel.
struct PhonemeSeq {
  std::vector<Phoneme> phonemes;
  std::optional<std::size_t> stress_index;
  std::size_t skipped_symbols = 0;

  std::vector<std::string> vowels() const;
  std::vector<std::string> consonants() const;
  std::size_t rhyme_anchor() const;
};

/// Segments an IPA transcription using a fixed phoneme table (longest match,
/// so "tʃ" and "aɪ" come out as single phonemes; "ː" sticks to the preceding
/// phoneme). The primary stress mark "ˈ" attaches to the next vowel.
/// Unknown symbols are skipped and counted; throws NoVowel if no vowel remains.
PhonemeSeq parse_ipa(std::string_view ipa);

/// Space-separated phonemes with "ˈ" before the stressed vowel.
/// parse_ipa(to_ipa(s)) reproduces s.phonemes and s.stress_index.
std::string to_ipa(const PhonemeSeq &seq);

/// Same suffix from the rhyme anchor (last stressed vowel, else last vowel)
/// onward, different material before it.
bool full_rhyme(const PhonemeSeq &a, const PhonemeSeq &b);

/// |LCS(vowels a, vowels b)| / max(#vowels); 0 when both are empty.
double assonance(const PhonemeSeq &a, const PhonemeSeq &b);

/// Same ratio over consonants.
double consonance(const PhonemeSeq &a, const PhonemeSeq &b);

/// Both start with the same consonant.
bool alliteration(const PhonemeSeq &a, const PhonemeSeq &b);

struct ProsodyWeights {
  double rhyme = 1.0;
  double assonance = 0.75;
  double consonance = 0.75;
  double alliteration = 0.5;
};

/// max(rhyme, alliteration, assonance, consonance) under the weights;
/// identical phoneme sequences score 0.
double prosody_score(const PhonemeSeq &a, const PhonemeSeq &b, const ProsodyWeights &weights = {});

std::size_t lcs_length(const std::vector<std::string> &a, const std::vector<std::string> &b);

}  // namespace headliner::prosody
