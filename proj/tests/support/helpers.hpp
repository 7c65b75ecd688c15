#pragma once

#include <filesystem>
#include <fstream>
#include <string>

inline const std::filesystem::path kDataDir = HEADLINER_TEST_DATA;

inline void write_file(const std::filesystem::path &p, const std::string &content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}
