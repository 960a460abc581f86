#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "biotok/token.hpp"

namespace biotok {

// A rule-based tokenizer profile. Text is first split on whitespace; each chunk
// then goes through, in order:
//
//   1. special cases — exact chunk match mapped to a fixed pre-split token list
//      (final: no further rules apply to the pieces);
//   2. protected patterns — regexes that must match the whole chunk; a match
//      keeps the chunk as a single token;
//   3. affix stripping — repeatedly strip the first matching prefix pattern,
//      then the first matching suffix pattern, re-checking steps 1-2 against the
//      shrunken core after every strip;
//   4. infixes — left-to-right scan of the remaining core; each match emits the
//      matched span as a standalone token and splits the core around it.
//
// Pattern conventions (ECMAScript syntax): prefixes must anchor with a leading
// "^", suffixes with a trailing "$". If a pattern has a capture group, group 1
// is the span stripped/emitted and the rest of the match is context (used to
// emulate lookaround, e.g. "[0-9](-)[0-9]" splits a hyphen only between
// digits). Within a stage the first-listed matching pattern wins.
struct RuleSet {
  std::string name;
  std::vector<std::string> prefixes;
  std::vector<std::string> suffixes;
  std::vector<std::string> infixes;
  std::map<std::string, std::vector<std::string>> special_cases;
  std::vector<std::string> protected_patterns;

  // Compiles all patterns and checks structural invariants: special-case keys
  // contain no whitespace and are non-empty, each special-case token list is
  // non-empty and concatenates back to its key, every regex compiles. Throws
  // std::invalid_argument naming the offending entry. Must be called before
  // tokenize_rules / trace_chunk; load_ruleset and builtin_profile return
  // compiled sets.
  void compile();
  bool compiled() const;

  struct Compiled;
  std::shared_ptr<const Compiled> impl;  // set by compile()
};

// Reads a profile from a JSON file with keys {"name", "prefixes", "suffixes",
// "infixes", "special_cases", "protected"} and compiles it. Missing list keys
// default to empty. Throws std::runtime_error on file/JSON errors and
// std::invalid_argument on validation errors.
RuleSet load_ruleset(const std::string& path);

// Writes the profile back to JSON (keys as above, stable order). The file
// round-trips through load_ruleset.
void save_ruleset(const RuleSet& rs, const std::string& path);

// Tokenizes `text` with a compiled rule set. The result is a split-only
// tokenization (validate_tokenization passes with full coverage).
TokenizedSentence tokenize_rules(const std::string& text, const RuleSet& rs);

// One applied rule while processing a single chunk.
struct RuleStep {
  std::string kind;     // "special" | "protected" | "prefix" | "suffix" | "infix"
  std::string pattern;  // matched key or regex
  std::vector<std::string> pieces;  // token texts after this step, chunk-local
};

// Trace of a single whitespace-free chunk through the pipeline.
struct RuleTrace {
  std::string chunk;
  std::vector<RuleStep> steps;
  std::vector<std::string> pieces;  // final token texts
};

// Explains how one chunk is tokenized. Throws std::invalid_argument if `chunk`
// is empty or contains whitespace.
RuleTrace trace_chunk(const std::string& chunk, const RuleSet& rs);

}  // namespace biotok
