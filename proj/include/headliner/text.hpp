#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace headliner::text {

// ASCII-only case folding; non-ASCII bytes pass through unchanged.
std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char sep);

// Splits on runs of ASCII whitespace, dropping empty pieces.
std::vector<std::string_view> split_ws(std::string_view s);

std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);

// Strips a trailing '\r' so files written on Windows load the same way.
void chomp(std::string &line);

// Stable 64-bit FNV-1a; used to derive per-record seeds.
std::uint64_t fnv1a64(std::string_view s);

}  // namespace headliner::text
