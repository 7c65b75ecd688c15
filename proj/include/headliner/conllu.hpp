#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace headliner::conllu {

struct Token {
  int id = 0;  // 1-based
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos;
  std::string feats;
  int head = 0;  // 0 = root
  std::string deprel;
  std::string deps;
  std::string misc;

  /// Value of `key=` in the MISC column, if present.
  std::optional<std::string> misc_value(std::string_view key) const;
};

struct Sentence {
  std::string id;    // from `# sent_id = ...`, empty if absent
  std::string text;  // from `# text = ...`
  std::vector<Token> tokens;
};

struct ReadStats {
  std::size_t sentences = 0;
  std::size_t malformed = 0;
};

/// Streams sentences to `sink`. Multiword-token ranges and empty nodes are
/// ignored. A sentence with a bad row (column count, ids out of sequence,
/// non-numeric or out-of-range head) is skipped and counted as malformed.
ReadStats read(std::istream &in, const std::function<void(Sentence &&)> &sink);
ReadStats read_file(const std::filesystem::path &path, const std::function<void(Sentence &&)> &sink);

void write(std::ostream &out, const Sentence &sentence);

}  // namespace headliner::conllu
