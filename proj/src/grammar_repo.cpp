#include "headliner/grammar_repo.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <tuple>

#include <spdlog/spdlog.h>

#include "binary_io.hpp"
#include "headliner/error.hpp"
#include "headliner/text.hpp"
#include "tsv.hpp"

namespace headliner {

namespace {

constexpr std::string_view kMagic = "HLGR";
constexpr std::uint8_t kVersion = 1;

auto row_key(const GrammarRelation &r) {
  return std::tie(r.head_lemma, r.head_tag, r.deprel, r.dep_lemma, r.dep_tag);
}

}  // namespace

bool tags_match(std::string_view a, std::string_view b, TagMatch mode) {
  if (mode == TagMatch::Exact) return a == b;
  return a.substr(0, 2) == b.substr(0, 2);
}

GrammarRepo::GrammarRepo(std::vector<GrammarRelation> rows) {
  for (auto &r : rows) {
    r.head_lemma = text::to_lower(r.head_lemma);
    r.dep_lemma = text::to_lower(r.dep_lemma);
  }
  // Merge duplicates so every distinct tuple appears once.
  std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) { return row_key(a) < row_key(b); });
  for (auto &r : rows) {
    if (r.freq == 0) continue;
    if (!rows_.empty() && row_key(rows_.back()) == row_key(r)) {
      rows_.back().freq += r.freq;
    } else {
      rows_.push_back(std::move(r));
    }
  }
  index_rows();
}

void GrammarRepo::index_rows() {
  by_head_.clear();
  by_dep_.clear();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    by_head_[{rows_[i].head_lemma, rows_[i].deprel}].push_back(i);
    by_dep_[{rows_[i].dep_lemma, rows_[i].deprel}].push_back(i);
  }
}

GrammarRepo GrammarRepo::build(std::istream &in, BuildStats *stats) {
  std::map<std::tuple<std::string, std::string, std::string, std::string, std::string>, std::uint64_t> counts;
  BuildStats local;
  auto read = conllu::read(in, [&](conllu::Sentence &&s) {
    for (const auto &tok : s.tokens) {
      if (tok.head == 0) continue;
      const auto &head = s.tokens[static_cast<std::size_t>(tok.head - 1)];
      ++counts[{text::to_lower(head.lemma), head.xpos, tok.deprel, text::to_lower(tok.lemma), tok.xpos}];
      ++local.arcs;
    }
  });
  local.sentences = read.sentences;
  local.malformed = read.malformed;

  GrammarRepo repo;
  repo.rows_.reserve(counts.size());
  for (auto &[key, freq] : counts) {
    auto &[hl, ht, rel, dl, dt] = key;
    repo.rows_.push_back({hl, ht, rel, dl, dt, freq});
  }
  repo.index_rows();
  spdlog::info("grammar: {} sentences ({} malformed), {} arcs, {} relations", local.sentences, local.malformed,
               local.arcs, repo.rows_.size());
  if (stats) *stats = local;
  return repo;
}

GrammarRepo GrammarRepo::build_from_file(const std::filesystem::path &conllu, BuildStats *stats) {
  auto in = detail::open_input(conllu);
  return build(in, stats);
}

GrammarRepo GrammarRepo::load(const std::filesystem::path &path) {
  {
    auto probe = detail::open_input(path, std::ios::binary);
    if (detail::has_magic(probe, kMagic)) {
      using detail::read_le;
      auto version = detail::read_magic(probe, kMagic);
      if (version != kVersion) throw Error(ErrorCode::BadFormat, "unsupported grammar repo version");
      auto n = read_le<std::uint64_t>(probe);
      std::vector<GrammarRelation> rows;
      rows.reserve(n);
      for (std::uint64_t i = 0; i < n; ++i) {
        GrammarRelation r;
        r.head_lemma = detail::read_string(probe);
        r.head_tag = detail::read_string(probe);
        r.deprel = detail::read_string(probe);
        r.dep_lemma = detail::read_string(probe);
        r.dep_tag = detail::read_string(probe);
        r.freq = read_le<std::uint64_t>(probe);
        rows.push_back(std::move(r));
      }
      return GrammarRepo(std::move(rows));
    }
  }
  std::vector<GrammarRelation> rows;
  std::size_t warnings = 0;
  detail::for_each_tsv_row(path, [&](std::size_t line_no, const std::vector<std::string_view> &f) {
    std::optional<long long> freq;
    if (f.size() == 6) freq = text::parse_int(f[5]);
    if (!freq || *freq < 1 || std::any_of(f.begin(), f.begin() + 5, [](auto s) { return text::trim(s).empty(); })) {
      spdlog::warn("grammar {}:{}: malformed row rejected", path.string(), line_no);
      ++warnings;
      return;
    }
    rows.push_back({std::string(f[0]), std::string(f[1]), std::string(f[2]), std::string(f[3]), std::string(f[4]),
                    static_cast<std::uint64_t>(*freq)});
  });
  spdlog::info("grammar: loaded {} rows ({} warnings)", rows.size(), warnings);
  return GrammarRepo(std::move(rows));
}

void GrammarRepo::save_tsv(std::ostream &out) const {
  for (const auto &r : rows_)
    out << r.head_lemma << '\t' << r.head_tag << '\t' << r.deprel << '\t' << r.dep_lemma << '\t' << r.dep_tag << '\t'
        << r.freq << '\n';
}

// Layout: "HLGR" u8 version, 3 pad bytes, u64 row count, then per row five
// length-prefixed strings and a u64 frequency, in canonical row order.
void GrammarRepo::save_binary(std::ostream &out) const {
  detail::write_magic(out, kMagic, kVersion);
  detail::write_le<std::uint64_t>(out, rows_.size());
  for (const auto &r : rows_) {
    detail::write_string(out, r.head_lemma);
    detail::write_string(out, r.head_tag);
    detail::write_string(out, r.deprel);
    detail::write_string(out, r.dep_lemma);
    detail::write_string(out, r.dep_tag);
    detail::write_le<std::uint64_t>(out, r.freq);
  }
}

std::optional<std::pair<bool, IncidentRelation>> GrammarRepo::anchor(const SlotSpec &slot) const {
  if (slot.head_side) return std::pair{true, *slot.head_side};
  if (slot.dependent_side.empty()) return std::nullopt;
  for (std::string_view preferred : {"dobj", "nsubj"}) {
    for (const auto &d : slot.dependent_side)
      if (d.deprel == preferred) return std::pair{false, d};
  }
  return std::pair{false, slot.dependent_side.front()};
}

std::vector<std::string> GrammarRepo::slot_candidates(const SlotSpec &slot) const {
  auto a = anchor(slot);
  if (!a) throw Error(ErrorCode::NoRelations, "replacement slot has no incident relations");
  const auto &[head_side, rel] = *a;
  const auto &index = head_side ? by_head_ : by_dep_;
  std::set<std::string> out;
  auto it = index.find({text::to_lower(rel.lemma), rel.deprel});
  if (it == index.end()) return {};
  for (auto i : it->second) {
    const auto &r = rows_[i];
    if (r.freq <= min_freq_) continue;
    if (head_side) {
      if (tags_match(r.head_tag, rel.tag, tag_match_) && tags_match(r.dep_tag, slot.tag, tag_match_))
        out.insert(r.dep_lemma);
    } else {
      if (tags_match(r.dep_tag, rel.tag, tag_match_) && tags_match(r.head_tag, slot.tag, tag_match_))
        out.insert(r.head_lemma);
    }
  }
  return {out.begin(), out.end()};
}

bool GrammarRepo::fits(const SlotSpec &slot, std::string_view filler) const {
  auto a = anchor(slot);
  if (!a) return false;
  const auto &[head_side, rel] = *a;
  const auto lemma = text::to_lower(rel.lemma);
  const auto word = text::to_lower(filler);
  return std::any_of(rows_.begin(), rows_.end(), [&](const GrammarRelation &r) {
    if (r.freq <= min_freq_ || r.deprel != rel.deprel) return false;
    if (head_side)
      return r.head_lemma == lemma && r.dep_lemma == word && tags_match(r.head_tag, rel.tag, tag_match_) &&
             tags_match(r.dep_tag, slot.tag, tag_match_);
    return r.dep_lemma == lemma && r.head_lemma == word && tags_match(r.dep_tag, rel.tag, tag_match_) &&
           tags_match(r.head_tag, slot.tag, tag_match_);
  });
}

}  // namespace headliner
