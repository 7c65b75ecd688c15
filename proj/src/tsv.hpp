#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "headliner/error.hpp"
#include "headliner/text.hpp"

namespace headliner::detail {

inline std::ifstream open_input(const std::filesystem::path &path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  return in;
}

inline std::ofstream open_output(const std::filesystem::path &path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
  return out;
}

// Calls fn(line_number, fields) for every non-blank line, 1-based numbering.
template <typename Fn>
void for_each_tsv_row(const std::filesystem::path &path, Fn &&fn) {
  auto in = open_input(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    text::chomp(line);
    if (text::trim(line).empty()) continue;
    fn(line_no, text::split(line, '\t'));
  }
}

}  // namespace headliner::detail
