#include "biotok/text.hpp"

namespace biotok {

std::size_t cp_len(unsigned char b) {
  if (b < 0x80) return 1;
  if ((b & 0xE0) == 0xC0) return 2;
  if ((b & 0xF0) == 0xE0) return 3;
  if ((b & 0xF8) == 0xF0) return 4;
  return 1;
}

char32_t decode_cp(std::string_view s, std::size_t& pos) {
  unsigned char b0 = static_cast<unsigned char>(s[pos]);
  std::size_t len = cp_len(b0);
  if (len == 1) {
    ++pos;
    return b0 < 0x80 ? b0 : 0xFFFD;
  }
  if (pos + len > s.size()) {  // truncated sequence
    ++pos;
    return 0xFFFD;
  }
  static constexpr char32_t kFirst[5] = {0, 0, 0xC0, 0xE0, 0xF0};
  char32_t cp = b0 - kFirst[len];
  for (std::size_t i = 1; i < len; ++i) {
    unsigned char b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) {  // broken continuation: emit one replacement per byte
      ++pos;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  pos += len;
  return cp;
}

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r':
    case 0x0B: case 0x0C:        // vertical tab, form feed
    case 0x85:                   // next line
    case 0xA0:                   // no-break space
    case 0x1680:                 // ogham space mark
    case 0x2028: case 0x2029:    // line / paragraph separator
    case 0x202F:                 // narrow no-break space
    case 0x205F:                 // medium mathematical space
    case 0x3000:                 // ideographic space
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;  // en quad .. hair space
  }
}

bool is_blank(std::string_view s) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  while (pos < s.size())
    if (!is_space_cp(decode_cp(s, pos))) return false;
  return true;
}

char char_class(char32_t cp) {
  if (is_space_cp(cp)) return 'S';
  if (cp >= U'0' && cp <= U'9') return 'D';
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return 'L';
  if (cp < 0x80) return 'P';  // remaining ASCII: punctuation and symbols
  return 'U';
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
  return out;
}

std::string ascii_upper(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'a' && c <= 'z') c -= 'a' - 'A';
  return out;
}

}  // namespace biotok
