#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace biotok {

// Decodes the UTF-8 code point starting at byte `pos` and advances `pos` past it.
// Invalid or truncated sequences decode as one replacement char per byte, so every
// byte position inside a well-formed sequence is reachable only via its start byte.
char32_t decode_cp(std::string_view s, std::size_t& pos);

// Number of bytes in the UTF-8 sequence whose start byte is `b` (1 for invalid).
std::size_t cp_len(unsigned char b);

// True for Unicode whitespace code points (the set both tokenizer families split
// on): ASCII space/tab/newline family, NEL, NBSP, ogham space, the U+2000 block,
// line/paragraph separators, narrow NBSP, math space, ideographic space.
bool is_space_cp(char32_t cp);

// True if every code point in `s` is whitespace. Empty strings are not blank.
bool is_blank(std::string_view s);

// Coarse code-point class used by the char tagger features and the normalizer:
// 'L' letter, 'D' digit, 'S' whitespace, 'P' ASCII punctuation/symbol, 'U' other.
char char_class(char32_t cp);

// Lower/upper-cases ASCII letters in place; other bytes pass through.
std::string ascii_lower(std::string_view s);
std::string ascii_upper(std::string_view s);

}  // namespace biotok
