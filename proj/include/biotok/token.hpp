#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace biotok {

// One token plus its byte span [start, end) in the source sentence. The text is
// always the verbatim substring; tokenizers never rewrite characters.
struct Token {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

// Output of any tokenizer: the producing strategy's name plus the token list in
// source order.
struct TokenizedSentence {
  std::string sentence_id;
  std::string profile;
  std::vector<Token> tokens;

  std::vector<std::string> texts() const;
};

// Checks the span invariants of `ts` against the sentence it was produced from:
// every token text equals its substring, spans are sorted and non-overlapping, no
// span starts or ends inside a multi-byte UTF-8 sequence, and no token covers a
// whitespace code point. With `require_full_coverage` every non-whitespace byte
// must additionally be covered exactly once (split-only tokenization). Throws
// std::logic_error naming the first violated invariant.
void validate_tokenization(const std::string& text, const TokenizedSentence& ts,
                           bool require_full_coverage = true);

}  // namespace biotok
