#include "headliner/prosody.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include <spdlog/spdlog.h>

#include "headliner/error.hpp"

namespace headliner::prosody {

namespace {

// Single-code-point vowels (IPA chart plus eSpeak's reduced vowels).
const std::unordered_set<std::string> &vowel_symbols() {
  static const std::unordered_set<std::string> set = {
      "i", "y", "ɨ", "ʉ", "ɯ", "u", "ɪ", "ʏ", "ʊ", "e", "ø", "ɘ", "ɵ", "ɤ", "o", "ə",
      "ɛ", "œ", "ɜ", "ɞ", "ʌ", "ɔ", "æ", "ɐ", "a", "ɶ", "ɑ", "ɒ", "ɚ", "ɝ", "ᵻ", "ᵿ"};
  return set;
}

const std::unordered_set<std::string> &consonant_symbols() {
  static const std::unordered_set<std::string> set = {
      "p", "b", "t", "d", "ʈ", "ɖ", "c", "ɟ", "k", "ɡ", "g", "q", "ɢ", "ʔ", "m", "ɱ",
      "n", "ɳ", "ɲ", "ŋ", "ɴ", "ʙ", "r", "ʀ", "ⱱ", "ɾ", "ɽ", "ɸ", "β", "f", "v", "θ",
      "ð", "s", "z", "ʃ", "ʒ", "ʂ", "ʐ", "ç", "ʝ", "x", "ɣ", "χ", "ʁ", "ħ", "ʕ", "h",
      "ɦ", "ɬ", "ɮ", "ʋ", "ɹ", "ɻ", "j", "ɰ", "l", "ɭ", "ʎ", "ʟ", "w", "ʍ", "ɫ"};
  return set;
}

struct Cluster {
  std::array<std::string_view, 2> parts;
  bool vowel;
};

// Two-code-point phonemes that must not be split.
constexpr std::array<Cluster, 13> kClusters = {{
    {{"t", "ʃ"}, false},
    {{"d", "ʒ"}, false},
    {{"t", "s"}, false},
    {{"d", "z"}, false},
    {{"a", "ɪ"}, true},
    {{"a", "ʊ"}, true},
    {{"e", "ɪ"}, true},
    {{"ɔ", "ɪ"}, true},
    {{"ə", "ʊ"}, true},
    {{"o", "ʊ"}, true},
    {{"e", "ə"}, true},
    {{"ɪ", "ə"}, true},
    {{"ʊ", "ə"}, true},
}};

constexpr std::string_view kPrimaryStress = "ˈ";
constexpr std::string_view kSecondaryStress = "ˌ";
constexpr std::string_view kLong = "ː";
constexpr std::string_view kHalfLong = "ˑ";
constexpr std::string_view kTieBelow = "͜";
constexpr std::string_view kTieAbove = "͡";

bool silently_skipped(std::string_view cp) {
  return cp == " " || cp == "." || cp == "-" || cp == "_" || cp == "\t" || cp == kSecondaryStress ||
         cp == "̩" /* syllabic */ || cp == "̯" /* non-syllabic */;
}

std::vector<std::string_view> code_points(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    auto lead = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    if (lead >= 0xF0) len = 4;
    else if (lead >= 0xE0) len = 3;
    else if (lead >= 0xC0) len = 2;
    len = std::min(len, s.size() - i);
    out.push_back(s.substr(i, len));
    i += len;
  }
  return out;
}

}  // namespace

std::vector<std::string> PhonemeSeq::vowels() const {
  std::vector<std::string> out;
  for (const auto &p : phonemes)
    if (p.vowel) out.push_back(p.symbol);
  return out;
}

std::vector<std::string> PhonemeSeq::consonants() const {
  std::vector<std::string> out;
  for (const auto &p : phonemes)
    if (!p.vowel) out.push_back(p.symbol);
  return out;
}

std::size_t PhonemeSeq::rhyme_anchor() const {
  if (stress_index) return *stress_index;
  for (std::size_t i = phonemes.size(); i-- > 0;)
    if (phonemes[i].vowel) return i;
  return 0;
}

PhonemeSeq parse_ipa(std::string_view ipa) {
  PhonemeSeq seq;
  const auto cps = code_points(ipa);
  bool stress_pending = false;
  bool tie_pending = false;

  for (std::size_t i = 0; i < cps.size(); ++i) {
    const auto cp = cps[i];
    if (cp == kPrimaryStress) {
      stress_pending = true;
      continue;
    }
    if (cp == kLong || cp == kHalfLong) {
      if (!seq.phonemes.empty()) seq.phonemes.back().symbol += cp;
      continue;
    }
    if (cp == kTieAbove || cp == kTieBelow) {
      tie_pending = !seq.phonemes.empty();
      continue;
    }
    if (silently_skipped(cp)) continue;

    Phoneme ph;
    if (i + 1 < cps.size()) {
      for (const auto &cluster : kClusters) {
        if (cluster.parts[0] == cp && cluster.parts[1] == cps[i + 1]) {
          ph.symbol = std::string(cp) + std::string(cps[i + 1]);
          ph.vowel = cluster.vowel;
          ++i;
          break;
        }
      }
    }
    if (ph.symbol.empty()) {
      std::string sym(cp);
      if (vowel_symbols().count(sym)) {
        ph = {sym, true};
      } else if (consonant_symbols().count(sym)) {
        ph = {sym, false};
      } else {
        spdlog::warn("parse_ipa: unknown symbol '{}' in '{}' skipped", sym, ipa);
        ++seq.skipped_symbols;
        continue;
      }
    }

    if (tie_pending) {
      seq.phonemes.back().symbol += ph.symbol;
      seq.phonemes.back().vowel = seq.phonemes.back().vowel || ph.vowel;
      tie_pending = false;
      continue;
    }
    if (ph.vowel && stress_pending) {
      seq.stress_index = seq.phonemes.size();
      stress_pending = false;
    }
    seq.phonemes.push_back(std::move(ph));
  }

  if (std::none_of(seq.phonemes.begin(), seq.phonemes.end(), [](const Phoneme &p) { return p.vowel; }))
    throw Error(ErrorCode::NoVowel, "no vowel phoneme in '" + std::string(ipa) + "'");
  return seq;
}

std::string to_ipa(const PhonemeSeq &seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.phonemes.size(); ++i) {
    if (i > 0) out += ' ';
    if (seq.stress_index == i) out += kPrimaryStress;
    out += seq.phonemes[i].symbol;
  }
  return out;
}

std::size_t lcs_length(const std::vector<std::string> &a, const std::vector<std::string> &b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

namespace {
double lcs_ratio(const std::vector<std::string> &a, const std::vector<std::string> &b) {
  const auto denom = std::max(a.size(), b.size());
  if (denom == 0) return 0.0;
  return static_cast<double>(lcs_length(a, b)) / static_cast<double>(denom);
}
}  // namespace

bool full_rhyme(const PhonemeSeq &a, const PhonemeSeq &b) {
  const auto ia = a.rhyme_anchor();
  const auto ib = b.rhyme_anchor();
  const auto &pa = a.phonemes;
  const auto &pb = b.phonemes;
  const bool same_suffix = std::equal(pa.begin() + static_cast<std::ptrdiff_t>(ia), pa.end(),
                                      pb.begin() + static_cast<std::ptrdiff_t>(ib), pb.end());
  if (!same_suffix) return false;
  const bool same_onset = std::equal(pa.begin(), pa.begin() + static_cast<std::ptrdiff_t>(ia), pb.begin(),
                                     pb.begin() + static_cast<std::ptrdiff_t>(ib));
  return !same_onset;
}

double assonance(const PhonemeSeq &a, const PhonemeSeq &b) { return lcs_ratio(a.vowels(), b.vowels()); }

double consonance(const PhonemeSeq &a, const PhonemeSeq &b) { return lcs_ratio(a.consonants(), b.consonants()); }

bool alliteration(const PhonemeSeq &a, const PhonemeSeq &b) {
  if (a.phonemes.empty() || b.phonemes.empty()) return false;
  const auto &fa = a.phonemes.front();
  return !fa.vowel && fa == b.phonemes.front();
}

double prosody_score(const PhonemeSeq &a, const PhonemeSeq &b, const ProsodyWeights &weights) {
  if (a.phonemes == b.phonemes) return 0.0;
  double score = 0.0;
  if (full_rhyme(a, b)) score = std::max(score, weights.rhyme);
  if (alliteration(a, b)) score = std::max(score, weights.alliteration);
  score = std::max(score, weights.assonance * assonance(a, b));
  score = std::max(score, weights.consonance * consonance(a, b));
  return score;
}

}  // namespace headliner::prosody
