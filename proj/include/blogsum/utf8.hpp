#pragma once

// Minimal UTF-8 handling: validation, decoding, and the character classes and
// case/compatibility folding the text pipeline needs. Covers Latin, Greek and
// Cyrillic letters plus the typographic punctuation common in blog text; it is
// not a replacement for a full Unicode database.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace blogsum::utf8 {

struct Decoded {
  char32_t cp = 0;
  std::size_t length = 0;  // bytes consumed
};

/// Decodes the code point starting at `pos`. Returns nullopt on any malformed,
/// overlong, surrogate or out-of-range sequence.
inline std::optional<Decoded> decode(std::string_view s, std::size_t pos) noexcept {
  if (pos >= s.size()) return std::nullopt;
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return Decoded{b0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return std::nullopt;
  }
  if (pos + len > s.size()) return std::nullopt;
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return std::nullopt;
  return Decoded{cp, len};
}

/// Byte offset of the first invalid sequence, or nullopt when `s` is valid.
inline std::optional<std::size_t> find_invalid(std::string_view s) noexcept {
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto d = decode(s, pos);
    if (!d) return pos;
    pos += d->length;
  }
  return std::nullopt;
}

inline bool is_valid(std::string_view s) noexcept { return !find_invalid(s).has_value(); }

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

/// Calls `fn(cp, byte_offset, byte_length)` for each code point of `s`.
/// Invalid bytes are reported as U+FFFD of length 1 so iteration never stalls.
template <typename Fn>
void for_each(std::string_view s, Fn&& fn) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto d = decode(s, pos);
    const char32_t cp = d ? d->cp : char32_t{0xFFFD};
    const std::size_t len = d ? d->length : 1;
    fn(cp, pos, len);
    pos += len;
  }
}

inline bool is_space(char32_t cp) noexcept {
  return cp == U' ' || (cp >= U'\t' && cp <= U'\r') || cp == 0xA0 || cp == 0x1680 ||
         (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 || cp == 0x2029 || cp == 0x202F ||
         cp == 0x205F || cp == 0x3000 || cp == 0xFEFF;
}

inline bool is_ascii_alnum(char32_t cp) noexcept {
  return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') || (cp >= U'0' && cp <= U'9');
}

inline bool is_digit(char32_t cp) noexcept {
  return (cp >= U'0' && cp <= U'9') || (cp >= 0xFF10 && cp <= 0xFF19);
}

/// Letters and digits: ASCII alphanumerics plus code points outside the
/// punctuation/symbol blocks that occur in running text.
inline bool is_word_char(char32_t cp) noexcept {
  if (cp < 0x80) return is_ascii_alnum(cp);
  if (cp < 0xC0) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;  // punctuation, symbols, arrows
  if (cp >= 0x3000 && cp <= 0x303F) return false;
  if (cp >= 0xFE30 && cp <= 0xFE4F) return false;
  if (cp >= 0xFF00 && cp <= 0xFF0F) return false;
  if (cp >= 0xFF1A && cp <= 0xFF20) return false;
  if (cp >= 0xFF3B && cp <= 0xFF40) return false;
  if (cp >= 0xFF5B && cp <= 0xFF65) return false;
  if (cp == 0xFEFF || cp == 0xFFFD) return false;
  if (cp >= 0xE000 && cp <= 0xF8FF) return false;  // private use
  if (cp >= 0x1F000) return false;                 // emoji and pictographs
  if (cp >= 0x0300 && cp <= 0x036F) return true;   // combining marks stay inside words
  return true;
}

inline bool is_apostrophe(char32_t cp) noexcept {
  return cp == U'\'' || cp == 0x2019 || cp == 0x02BC;
}

inline bool is_hyphen(char32_t cp) noexcept { return cp == U'-' || cp == 0x2010 || cp == 0x2011; }

/// Single-code-point lowercase mapping for the scripts listed above.
inline char32_t to_lower(char32_t cp) noexcept {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp < 0xC0) return cp;
  if (cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp == 0x130) return U'i';
  if (cp >= 0x100 && cp <= 0x137) return cp | 1;
  if (cp >= 0x139 && cp <= 0x148) return (cp & 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return cp | 1;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E) return (cp & 1) ? cp + 1 : cp;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  if (cp >= 0xFF21 && cp <= 0xFF3A) return cp + 0x20;
  return cp;
}

inline bool is_upper(char32_t cp) noexcept { return is_word_char(cp) && to_lower(cp) != cp; }

/// Compatibility folding followed by lowercasing: ligatures are expanded,
/// full-width forms map to ASCII, typographic quotes and hyphens map to their
/// ASCII counterparts. The result is a fixed point of `fold`.
inline void fold_into(std::string& out, char32_t cp) {
  switch (cp) {
    case 0xFB00: out += "ff"; return;
    case 0xFB01: out += "fi"; return;
    case 0xFB02: out += "fl"; return;
    case 0xFB03: out += "ffi"; return;
    case 0xFB04: out += "ffl"; return;
    case 0xFB05:
    case 0xFB06: out += "st"; return;
    case 0x2018:
    case 0x2019:
    case 0x201B:
    case 0x2032:
    case 0x02BC: out += '\''; return;
    case 0x201C:
    case 0x201D:
    case 0x201F:
    case 0x2033: out += '"'; return;
    case 0x2010:
    case 0x2011: out += '-'; return;
    case 0x2026: out += "..."; return;
    case 0x00A0:
    case 0x202F: out += ' '; return;
    case 0x00B5: append(out, 0x3BC); return;
    default: break;
  }
  if (cp >= 0xFF01 && cp <= 0xFF5E) cp -= 0xFEE0;
  append(out, to_lower(cp));
}

inline std::string fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for_each(s, [&](char32_t cp, std::size_t, std::size_t) { fold_into(out, cp); });
  return out;
}

inline std::string_view trim(std::string_view s) noexcept {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end) {
    const auto d = decode(s, begin);
    if (!d || !is_space(d->cp)) break;
    begin += d->length;
  }
  while (end > begin) {
    std::size_t start = end - 1;
    while (start > begin && (static_cast<unsigned char>(s[start]) & 0xC0) == 0x80) --start;
    const auto d = decode(s, start);
    if (!d || !is_space(d->cp)) break;
    end = start;
  }
  return s.substr(begin, end - begin);
}

inline bool is_blank(std::string_view s) noexcept { return trim(s).empty(); }

/// Replaces every whitespace run with a single ASCII space and trims the ends.
inline std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for_each(s, [&](char32_t cp, std::size_t pos, std::size_t len) {
    if (is_space(cp)) {
      pending = !out.empty();
      return;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.append(s.substr(pos, len));
  });
  return out;
}

}  // namespace blogsum::utf8
