#include "headliner/relatedness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "binary_io.hpp"
#include "headliner/error.hpp"
#include "headliner/text.hpp"
#include "tsv.hpp"

namespace headliner {

namespace {
constexpr std::string_view kMagic = "HLRM";
constexpr std::uint8_t kVersion = 1;
}  // namespace

RelatednessModel RelatednessModel::build(const std::vector<Sentence> &sentences, const RelatednessOptions &options) {
  if (options.window < 1) throw Error(ErrorCode::Usage, "window must be >= 1");
  if (options.min_count < 1) throw Error(ErrorCode::Usage, "min_count must be >= 1");

  // Token frequencies over the lowercased corpus.
  std::map<std::string, std::uint64_t> freq;
  std::size_t n_tokens = 0;
  for (const auto &s : sentences) {
    for (const auto &tok : s) {
      ++freq[text::to_lower(tok)];
      ++n_tokens;
    }
  }
  if (n_tokens == 0) throw Error(ErrorCode::EmptyCorpus, "corpus has no tokens");

  RelatednessModel model;
  model.options_ = options;
  for (const auto &[word, f] : freq) {
    if (f >= static_cast<std::uint64_t>(options.min_count)) {
      model.vocab_.push_back(word);
      model.freq_.push_back(f);
    }
  }
  if (model.vocab_.empty())
    throw Error(ErrorCode::EmptyCorpus, fmt::format("no word occurs at least {} times", options.min_count));
  model.rebuild_index();

  constexpr std::uint32_t kPruned = ~std::uint32_t{0};
  std::unordered_map<std::uint64_t, std::uint64_t> pairs;
  std::vector<std::uint32_t> ids;
  const auto window = static_cast<std::size_t>(options.window);
  for (const auto &s : sentences) {
    ids.clear();
    for (const auto &tok : s) {
      auto idx = model.index_of(text::to_lower(tok));
      ids.push_back(idx ? *idx : kPruned);
    }
    for (std::size_t p = 0; p < ids.size(); ++p) {
      if (ids[p] == kPruned) continue;
      for (std::size_t q = p + 1; q < ids.size() && q - p <= window; ++q) {
        if (ids[q] == kPruned) continue;
        auto lo = std::min(ids[p], ids[q]);
        auto hi = std::max(ids[p], ids[q]);
        ++pairs[(std::uint64_t{lo} << 32) | hi];
      }
    }
  }

  // Expand the upper triangle into symmetric CSR rows.
  const auto n = model.vocab_.size();
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> rows(n);
  for (const auto &[key, c] : pairs) {
    auto i = static_cast<std::uint32_t>(key >> 32);
    auto j = static_cast<std::uint32_t>(key & 0xFFFFFFFFu);
    rows[i].emplace_back(j, c);
    if (i != j) rows[j].emplace_back(i, c);
  }
  model.totals_.assign(n, 0);
  model.row_ptr_.assign(1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(rows[i].begin(), rows[i].end());
    for (const auto &[j, c] : rows[i]) {
      model.cols_.push_back(j);
      model.counts_.push_back(c);
      model.totals_[i] += c;
    }
    model.row_ptr_.push_back(model.cols_.size());
    model.grand_total_ += model.totals_[i];
  }
  spdlog::info("relatedness: {} tokens, {} words, {} non-zero cells", n_tokens, n, model.cols_.size());
  return model;
}

RelatednessModel RelatednessModel::build(std::istream &corpus, const RelatednessOptions &options) {
  std::vector<Sentence> sentences;
  std::string line;
  while (std::getline(corpus, line)) {
    auto toks = text::split_ws(line);
    if (toks.empty()) continue;
    sentences.emplace_back(toks.begin(), toks.end());
  }
  return build(sentences, options);
}

RelatednessModel RelatednessModel::build_from_file(const std::filesystem::path &corpus, const RelatednessOptions &options) {
  auto in = detail::open_input(corpus);
  return build(in, options);
}

void RelatednessModel::rebuild_index() {
  index_.clear();
  index_.reserve(vocab_.size());
  for (std::uint32_t i = 0; i < vocab_.size(); ++i) index_.emplace(vocab_[i], i);
}

std::optional<std::uint32_t> RelatednessModel::index_of(std::string_view w) const {
  auto it = index_.find(std::string(w));
  if (it == index_.end()) it = index_.find(text::to_lower(w));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t RelatednessModel::count_at(std::uint32_t i, std::uint32_t j) const {
  auto first = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
  auto last = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
  auto it = std::lower_bound(first, last, j);
  if (it == last || *it != j) return 0;
  return counts_[static_cast<std::size_t>(it - cols_.begin())];
}

double RelatednessModel::ppmi_at(std::uint32_t i, std::uint32_t j, std::uint64_t c) const {
  if (c == 0) return 0.0;
  const double num = static_cast<double>(c) * static_cast<double>(grand_total_);
  const double den = static_cast<double>(totals_[i]) * static_cast<double>(totals_[j]);
  return std::max(0.0, std::log(num / den));
}

double RelatednessModel::relatedness(std::string_view w1, std::string_view w2) const {
  auto i = index_of(w1);
  auto j = index_of(w2);
  if (!i || !j) return 0.0;
  return ppmi_at(*i, *j, count_at(*i, *j));
}

std::vector<std::pair<std::string, double>> RelatednessModel::top_related(std::string_view w, std::size_t k) const {
  std::vector<std::pair<std::string, double>> out;
  auto i = index_of(w);
  if (!i || k == 0) return out;
  for (auto p = row_ptr_[*i]; p < row_ptr_[*i + 1]; ++p) {
    auto j = cols_[p];
    if (j == *i) continue;
    double s = ppmi_at(*i, j, counts_[p]);
    if (s > 0.0) out.emplace_back(vocab_[j], s);
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (out.size() > k) out.resize(k);
  return out;
}

std::uint64_t RelatednessModel::count(std::string_view w1, std::string_view w2) const {
  auto i = index_of(w1);
  auto j = index_of(w2);
  if (!i || !j) return 0;
  return count_at(*i, *j);
}

std::uint64_t RelatednessModel::total(std::string_view w) const {
  auto i = index_of(w);
  return i ? totals_[*i] : 0;
}

std::uint64_t RelatednessModel::frequency(std::string_view w) const {
  auto i = index_of(w);
  return i ? freq_[*i] : 0;
}

// Layout (little-endian):
//   "HLRM" u8 version, 3 pad bytes
//   u32 window, u32 min_count, u64 vocab_size, u64 nnz, u64 grand_total
//   vocab_size x { u32 len, bytes, u64 frequency, u64 total }
//   (vocab_size + 1) x u64 row_ptr
//   nnz x u32 column, nnz x u64 count
void RelatednessModel::save(std::ostream &out) const {
  using detail::write_le;
  detail::write_magic(out, kMagic, kVersion);
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(options_.window));
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(options_.min_count));
  write_le<std::uint64_t>(out, vocab_.size());
  write_le<std::uint64_t>(out, cols_.size());
  write_le<std::uint64_t>(out, grand_total_);
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    detail::write_string(out, vocab_[i]);
    write_le<std::uint64_t>(out, freq_[i]);
    write_le<std::uint64_t>(out, totals_[i]);
  }
  for (auto p : row_ptr_) write_le<std::uint64_t>(out, p);
  for (auto c : cols_) write_le<std::uint32_t>(out, c);
  for (auto c : counts_) write_le<std::uint64_t>(out, c);
}

void RelatednessModel::save(const std::filesystem::path &path) const {
  auto out = detail::open_output(path, std::ios::binary);
  save(out);
  if (!out) throw Error(ErrorCode::Io, "failed writing '" + path.string() + "'");
}

RelatednessModel RelatednessModel::load(const std::filesystem::path &path) {
  using detail::read_le;
  auto in = detail::open_input(path, std::ios::binary);
  auto version = detail::read_magic(in, kMagic);
  if (version != kVersion) throw Error(ErrorCode::BadFormat, fmt::format("unsupported model version {}", version));
  RelatednessModel m;
  m.options_.window = static_cast<int>(read_le<std::uint32_t>(in));
  m.options_.min_count = static_cast<int>(read_le<std::uint32_t>(in));
  auto n = read_le<std::uint64_t>(in);
  auto nnz = read_le<std::uint64_t>(in);
  m.grand_total_ = read_le<std::uint64_t>(in);
  m.vocab_.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    m.vocab_.push_back(detail::read_string(in));
    m.freq_.push_back(read_le<std::uint64_t>(in));
    m.totals_.push_back(read_le<std::uint64_t>(in));
  }
  m.row_ptr_.clear();
  for (std::uint64_t i = 0; i <= n; ++i) m.row_ptr_.push_back(read_le<std::uint64_t>(in));
  if (m.row_ptr_.back() != nnz) throw Error(ErrorCode::BadFormat, "row pointer / nnz mismatch");
  m.cols_.reserve(nnz);
  m.counts_.reserve(nnz);
  for (std::uint64_t i = 0; i < nnz; ++i) {
    auto c = read_le<std::uint32_t>(in);
    if (c >= n) throw Error(ErrorCode::BadFormat, "column index out of range");
    m.cols_.push_back(c);
  }
  for (std::uint64_t i = 0; i < nnz; ++i) m.counts_.push_back(read_le<std::uint64_t>(in));
  m.rebuild_index();
  return m;
}

void RelatednessModel::export_tsv(std::ostream &out) const {
  for (std::uint32_t i = 0; i < vocab_.size(); ++i) {
    for (auto p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      auto j = cols_[p];
      if (j < i) continue;
      double s = ppmi_at(i, j, counts_[p]);
      if (s > 0.0) out << fmt::format("{}\t{}\t{:.17g}\n", vocab_[i], vocab_[j], s);
    }
  }
}

}  // namespace headliner
