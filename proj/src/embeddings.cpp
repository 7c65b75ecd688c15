#include "headliner/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <spdlog/spdlog.h>

#include "headliner/error.hpp"
#include "headliner/text.hpp"
#include "tsv.hpp"

namespace headliner {

EmbeddingStore EmbeddingStore::load(const std::filesystem::path &path,
                                    const std::unordered_set<std::string> *vocab_filter, LoadStats *stats) {
  auto in = detail::open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::BadHeader, "'" + path.string() + "' is empty");
  text::chomp(line);
  auto header = text::split_ws(line);
  std::optional<long long> count, dim;
  if (header.size() == 2) {
    count = text::parse_int(header[0]);
    dim = text::parse_int(header[1]);
  }
  if (!count || !dim || *count < 0 || *dim <= 0)
    throw Error(ErrorCode::BadHeader, "'" + path.string() + "': expected '<count> <dim>', got '" + line + "'");

  EmbeddingStore store(static_cast<std::size_t>(*dim));
  LoadStats local;
  std::vector<float> values(store.dim_);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    text::chomp(line);
    auto fields = text::split_ws(line);
    if (fields.empty()) continue;
    std::string word(fields[0]);
    if (vocab_filter && !vocab_filter->count(word)) continue;
    if (fields.size() != store.dim_ + 1) {
      spdlog::warn("embeddings {}:{}: {} values for dimension {}, row rejected", path.string(), line_no,
                   fields.size() - 1, store.dim_);
      ++local.warnings;
      continue;
    }
    bool ok = true;
    for (std::size_t i = 0; i < store.dim_ && ok; ++i) {
      auto tok = std::string(fields[i + 1]);
      char *end = nullptr;
      values[i] = std::strtof(tok.c_str(), &end);
      ok = end == tok.c_str() + tok.size() && std::isfinite(values[i]);
    }
    if (!ok || store.index_.count(word) || !store.add(word, values)) {
      spdlog::warn("embeddings {}:{}: row for '{}' rejected", path.string(), line_no, word);
      ++local.warnings;
    }
  }
  local.rows = store.size();
  spdlog::info("embeddings: loaded {} vectors of dimension {} ({} warnings)", local.rows, store.dim_, local.warnings);
  if (stats) *stats = local;
  return store;
}

bool EmbeddingStore::add(std::string_view word, std::span<const float> values) {
  if (values.size() != dim_ || dim_ == 0) return false;
  double sq = 0.0;
  for (float v : values) sq += static_cast<double>(v) * v;
  if (sq == 0.0) return false;
  std::string key(word);
  auto it = index_.find(key);
  if (it != index_.end()) {
    std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(it->second * dim_));
    norms_[it->second] = std::sqrt(sq);
    return true;
  }
  index_.emplace(key, words_.size());
  words_.push_back(std::move(key));
  data_.insert(data_.end(), values.begin(), values.end());
  norms_.push_back(std::sqrt(sq));
  return true;
}

std::optional<std::size_t> EmbeddingStore::lookup(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it != index_.end()) return it->second;
  it = index_.find(text::to_lower(word));
  if (it != index_.end()) return it->second;
  return std::nullopt;
}

std::optional<double> cosine(const EmbeddingStore &store, std::string_view w1, std::string_view w2) {
  auto a = store.lookup(w1);
  auto b = store.lookup(w2);
  if (!a || !b) return std::nullopt;
  if (*b < *a) std::swap(a, b);
  auto va = store.vector(*a);
  auto vb = store.vector(*b);
  double dot = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) dot += static_cast<double>(va[i]) * vb[i];
  double c = dot / (store.norm(*a) * store.norm(*b));
  return std::clamp(c, -1.0, 1.0);
}

std::optional<double> surprise(const EmbeddingStore &store, std::string_view original, std::string_view candidate) {
  auto c = cosine(store, original, candidate);
  if (!c) return std::nullopt;
  return (1.0 - *c) / 2.0;
}

}  // namespace headliner
