#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include "headliner/error.hpp"

namespace headliner::detail {

// Fixed little-endian encoding regardless of host byte order.
template <typename T>
void write_le(std::ostream &out, T value) {
  static_assert(std::is_unsigned_v<T>);
  std::array<char, sizeof(T)> buf{};
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  out.write(buf.data(), buf.size());
}

template <typename T>
T read_le(std::istream &in) {
  static_assert(std::is_unsigned_v<T>);
  std::array<unsigned char, sizeof(T)> buf{};
  in.read(reinterpret_cast<char *>(buf.data()), buf.size());
  if (!in) throw Error(ErrorCode::BadFormat, "unexpected end of binary file");
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(static_cast<T>(buf[i]) << (8 * i));
  return value;
}

inline void write_string(std::ostream &out, std::string_view s) {
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::string read_string(std::istream &in) {
  auto n = read_le<std::uint32_t>(in);
  if (n > (1u << 20)) throw Error(ErrorCode::BadFormat, "string length out of range");
  std::string s(n, '\0');
  in.read(s.data(), n);
  if (!in) throw Error(ErrorCode::BadFormat, "unexpected end of binary file");
  return s;
}

// 4-byte magic, 1 version byte, 3 zero bytes.
inline void write_magic(std::ostream &out, std::string_view magic, std::uint8_t version) {
  out.write(magic.data(), 4);
  write_le<std::uint8_t>(out, version);
  out.write("\0\0\0", 3);
}

inline std::uint8_t read_magic(std::istream &in, std::string_view magic) {
  std::array<char, 4> got{};
  in.read(got.data(), 4);
  if (!in || std::string_view(got.data(), 4) != magic)
    throw Error(ErrorCode::BadFormat, "bad magic, expected '" + std::string(magic) + "'");
  auto version = read_le<std::uint8_t>(in);
  std::array<char, 3> pad{};
  in.read(pad.data(), 3);
  return version;
}

inline bool has_magic(std::istream &in, std::string_view magic) {
  std::array<char, 4> got{};
  in.read(got.data(), 4);
  bool ok = in.gcount() == 4 && std::string_view(got.data(), 4) == magic;
  in.clear();
  in.seekg(0);
  return ok;
}

}  // namespace headliner::detail
