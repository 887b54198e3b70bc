#pragma once

// Minimal UTF-8 helpers for the latin alphabets handled by the pipeline.
// Invalid byte sequences are treated as single-byte codepoints rather than
// rejected.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace argmine::utf8 {

inline char32_t decode_at(std::string_view text, std::size_t& pos) {
  const auto byte = [&](std::size_t i) -> std::uint8_t {
    return static_cast<std::uint8_t>(text[i]);
  };
  const std::uint8_t b0 = byte(pos);
  std::size_t len = 1;
  char32_t cp = b0;
  if ((b0 & 0x80u) == 0x00u) {
    len = 1;
    cp = b0;
  } else if ((b0 & 0xE0u) == 0xC0u) {
    len = 2;
    cp = b0 & 0x1Fu;
  } else if ((b0 & 0xF0u) == 0xE0u) {
    len = 3;
    cp = b0 & 0x0Fu;
  } else if ((b0 & 0xF8u) == 0xF0u) {
    len = 4;
    cp = b0 & 0x07u;
  }
  if (pos + len > text.size()) len = 1;
  for (std::size_t i = 1; i < len; ++i) {
    if ((byte(pos + i) & 0xC0u) != 0x80u) {  // truncated sequence
      pos += 1;
      return b0;
    }
    cp = (cp << 6) | (byte(pos + i) & 0x3Fu);
  }
  pos += len;
  return len == 1 ? b0 : cp;
}

inline std::vector<char32_t> decode(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) out.push_back(decode_at(text, pos));
  return out;
}

inline void encode(char32_t cp, std::string& out) {
  if (cp < 0x80u) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800u) {
    out.push_back(static_cast<char>(0xC0u | (cp >> 6)));
    out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
  } else if (cp < 0x10000u) {
    out.push_back(static_cast<char>(0xE0u | (cp >> 12)));
    out.push_back(static_cast<char>(0x80u | ((cp >> 6) & 0x3Fu)));
    out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
  } else {
    out.push_back(static_cast<char>(0xF0u | (cp >> 18)));
    out.push_back(static_cast<char>(0x80u | ((cp >> 12) & 0x3Fu)));
    out.push_back(static_cast<char>(0x80u | ((cp >> 6) & 0x3Fu)));
    out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
  }
}

inline bool is_upper(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return true;
  // Latin-1 capital letters (excludes the multiplication sign).
  return cp >= 0xC0u && cp <= 0xDEu && cp != 0xD7u;
}

inline bool is_word(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
      (cp >= U'0' && cp <= U'9'))
    return true;
  // Latin-1 supplement and Latin extended letters.
  return cp >= 0xC0u && cp <= 0x24Fu && cp != 0xD7u && cp != 0xF7u;
}

inline char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20u;
  if (cp >= 0xC0u && cp <= 0xDEu && cp != 0xD7u) return cp + 0x20u;
  return cp;
}

inline std::string lowercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) encode(to_lower(decode_at(text, pos)), out);
  return out;
}

}  // namespace argmine::utf8
