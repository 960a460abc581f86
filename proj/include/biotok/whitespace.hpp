#pragma once

#include <string>

#include "biotok/token.hpp"

namespace biotok {

// Splits on runs of Unicode whitespace (see is_space_cp); every maximal
// non-whitespace run becomes one token. Profile name: "whitespace".
TokenizedSentence tokenize_whitespace(const std::string& text);

}  // namespace biotok
