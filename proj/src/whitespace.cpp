#include "biotok/whitespace.hpp"

#include "biotok/text.hpp"

namespace biotok {

TokenizedSentence tokenize_whitespace(const std::string& text) {
  TokenizedSentence ts;
  ts.profile = "whitespace";
  std::size_t pos = 0;
  std::size_t run_start = 0;
  bool in_token = false;
  while (pos < text.size()) {
    std::size_t start = pos;
    bool ws = is_space_cp(decode_cp(text, pos));
    if (ws && in_token) {
      ts.tokens.push_back({text.substr(run_start, start - run_start), run_start, start});
      in_token = false;
    } else if (!ws && !in_token) {
      run_start = start;
      in_token = true;
    }
  }
  if (in_token)
    ts.tokens.push_back({text.substr(run_start), run_start, text.size()});
  return ts;
}

}  // namespace biotok
