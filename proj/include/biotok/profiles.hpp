#pragma once

#include <string>
#include <vector>

#include "biotok/rules.hpp"

namespace biotok {

// Names of the built-in rule profiles: "ptb" (newswire conventions: splits
// trailing punctuation, brackets and colons, protects comma-grouped numbers),
// "web" (adds URL and parenthesized-compound protection, digit-digit hyphen
// ranges, measurement-unit suffixes), "biomed" (hyphen/slash splitting tuned
// for biomedical entities), and "r_basic" (ptb minus number protection, plus
// comma infix).
const std::vector<std::string>& builtin_profile_names();

// Returns a compiled copy of a built-in profile. Throws std::invalid_argument
// for unknown names.
RuleSet builtin_profile(const std::string& name);

// All live strategy names accepted by tokenize_any: "whitespace" plus the
// built-in rule profiles.
const std::vector<std::string>& live_strategy_names();

// Dispatches to tokenize_whitespace or the named built-in rule profile.
TokenizedSentence tokenize_any(const std::string& text, const std::string& strategy);

}  // namespace biotok
