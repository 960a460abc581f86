#include "biotok/token.hpp"

#include <stdexcept>
#include <string>

#include "biotok/text.hpp"

namespace biotok {

std::vector<std::string> TokenizedSentence::texts() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.text);
  return out;
}

namespace {

[[noreturn]] void fail(const TokenizedSentence& ts, const std::string& what) {
  throw std::logic_error("tokenization invariant violated (" + ts.sentence_id + "/" +
                         ts.profile + "): " + what);
}

}  // namespace

void validate_tokenization(const std::string& text, const TokenizedSentence& ts,
                           bool require_full_coverage) {
  // Code-point start positions; spans may not cut a multi-byte sequence.
  std::vector<bool> is_start(text.size() + 1, false);
  std::vector<bool> is_ws(text.size(), false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    is_start[start] = true;
    bool ws = is_space_cp(decode_cp(text, pos));
    for (std::size_t b = start; b < pos; ++b) is_ws[b] = ws;
  }
  is_start[text.size()] = true;

  std::size_t prev_end = 0;
  bool first = true;
  for (const Token& t : ts.tokens) {
    if (t.end <= t.start || t.end > text.size())
      fail(ts, "bad span [" + std::to_string(t.start) + "," + std::to_string(t.end) + ")");
    if (!is_start[t.start] || !is_start[t.end])
      fail(ts, "span cuts a code point at " + std::to_string(t.start));
    if (!first && t.start < prev_end)
      fail(ts, "spans overlap or are unsorted at " + std::to_string(t.start));
    if (t.text != text.substr(t.start, t.end - t.start))
      fail(ts, "text is not the verbatim substring: \"" + t.text + "\"");
    for (std::size_t b = t.start; b < t.end; ++b)
      if (is_ws[b]) fail(ts, "token covers whitespace at byte " + std::to_string(b));
    prev_end = t.end;
    first = false;
  }

  if (require_full_coverage) {
    std::vector<bool> covered(text.size(), false);
    for (const Token& t : ts.tokens)
      for (std::size_t b = t.start; b < t.end; ++b) covered[b] = true;
    for (std::size_t b = 0; b < text.size(); ++b)
      if (!is_ws[b] && !covered[b])
        fail(ts, "non-whitespace byte " + std::to_string(b) + " not covered");
  }
}

}  // namespace biotok
