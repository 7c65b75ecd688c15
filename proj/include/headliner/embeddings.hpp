#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "headliner/resources.hpp"

namespace headliner {

/// Dense word vectors, stored row-major as float with precomputed norms.
/// Every row has `dimension()` components and a non-zero norm.
class EmbeddingStore {
 public:
  explicit EmbeddingStore(std::size_t dimension = 0) : dim_(dimension) {}

  /// Text vector format: header `<count> <dim>`, then `word v1 ... vdim`.
  /// A bad header is fatal (BadHeader); rows of the wrong width or with a
  /// zero vector are rejected and counted. With a filter, only listed words
  /// are kept.
  static EmbeddingStore load(const std::filesystem::path &path,
                             const std::unordered_set<std::string> *vocab_filter = nullptr,
                             LoadStats *stats = nullptr);

  /// Returns false (and stores nothing) for a wrong-width or all-zero vector.
  bool add(std::string_view word, std::span<const float> values);

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return index_.size(); }
  bool contains(std::string_view word) const { return lookup(word).has_value(); }

  /// Exact form first, then its lowercase.
  std::optional<std::size_t> lookup(std::string_view word) const;

  std::span<const float> vector(std::size_t row) const { return {data_.data() + row * dim_, dim_}; }
  double norm(std::size_t row) const { return norms_[row]; }
  const std::string &word(std::size_t row) const { return words_[row]; }

 private:
  std::size_t dim_;
  std::vector<std::string> words_;
  std::vector<float> data_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// dot / (|a||b|), clamped to [-1, 1]; nothing if either word is OOV.
/// Arguments are put in a canonical order first so the result is exactly
/// symmetric.
std::optional<double> cosine(const EmbeddingStore &store, std::string_view w1, std::string_view w2);

/// (1 - cosine) / 2: 0 for identical direction, 1 for opposite.
std::optional<double> surprise(const EmbeddingStore &store, std::string_view original, std::string_view candidate);

}  // namespace headliner
