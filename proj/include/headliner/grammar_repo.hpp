#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "headliner/conllu.hpp"

namespace headliner {

inline constexpr std::uint64_t kDefaultMinFreq = 50;

/// One (head, relation, dependent) lemma/tag triple and its corpus frequency,
/// e.g. (read/VBZ, dobj, book/NN) x 187.
struct GrammarRelation {
  std::string head_lemma;
  std::string head_tag;
  std::string deprel;
  std::string dep_lemma;
  std::string dep_tag;
  std::uint64_t freq = 0;

  friend bool operator==(const GrammarRelation &, const GrammarRelation &) = default;
};

enum class TagMatch {
  Coarse,  // first two characters of the XPOS tag (NN matches NNS)
  Exact,
};

bool tags_match(std::string_view a, std::string_view b, TagMatch mode);

/// A relation incident to the word being replaced, seen from that word.
struct IncidentRelation {
  std::string deprel;
  std::string lemma;  // the other end of the arc
  std::string tag;
};

struct SlotSpec {
  std::string tag;                                 // tag of the replaced token
  std::optional<IncidentRelation> head_side;       // arc to its head, absent for roots
  std::vector<IncidentRelation> dependent_side;    // arcs to its dependents, in token order
};

struct BuildStats {
  std::size_t sentences = 0;
  std::size_t malformed = 0;
  std::size_t arcs = 0;
};

/// Repository of grammatical relations with frequency-filtered slot queries.
class GrammarRepo {
 public:
  GrammarRepo() = default;
  explicit GrammarRepo(std::vector<GrammarRelation> rows);

  /// One row per distinct (head lemma, head tag, deprel, dep lemma, dep tag)
  /// over every non-root arc; lemmas lowercased.
  static GrammarRepo build(std::istream &conllu, BuildStats *stats = nullptr);
  static GrammarRepo build_from_file(const std::filesystem::path &conllu, BuildStats *stats = nullptr);

  /// Accepts either the TSV or the binary form (detected by magic bytes).
  static GrammarRepo load(const std::filesystem::path &path);

  void save_tsv(std::ostream &out) const;
  void save_binary(std::ostream &out) const;

  /// Fillers of the slot's anchoring relation with freq > min_freq.
  ///
  /// The head-side arc anchors the query when there is one; for a root the
  /// dependent-side arc is used, preferring dobj, then nsubj, then the first.
  /// Throws NoRelations when the slot has no arcs at all. Sorted, unique.
  std::vector<std::string> slot_candidates(const SlotSpec &slot) const;

  /// The arc that slot_candidates would anchor on, with its side.
  std::optional<std::pair<bool, IncidentRelation>> anchor(const SlotSpec &slot) const;

  /// True iff some row links `filler` (with the slot's tag) to the slot's
  /// anchor with freq > min_freq. Scans the row table directly.
  bool fits(const SlotSpec &slot, std::string_view filler) const;

  const std::vector<GrammarRelation> &rows() const { return rows_; }

  void set_min_freq(std::uint64_t f) { min_freq_ = f; }
  std::uint64_t min_freq() const { return min_freq_; }
  void set_tag_match(TagMatch m) { tag_match_ = m; }
  TagMatch tag_match() const { return tag_match_; }

 private:
  void index_rows();

  std::vector<GrammarRelation> rows_;  // canonical (sorted) order
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> by_head_;  // (head lemma, deprel)
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> by_dep_;   // (dep lemma, deprel)
  std::uint64_t min_freq_ = kDefaultMinFreq;
  TagMatch tag_match_ = TagMatch::Coarse;
};

}  // namespace headliner
