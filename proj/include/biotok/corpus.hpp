#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "biotok/token.hpp"

namespace biotok {

// One input sentence from a JSON Lines corpus file.
struct Sentence {
  std::string id;
  std::string text;
};

// One golden row: the expected token texts for (sentence, strategy). Fixtures
// carry only texts, not spans; spans are reconstructed by align_fixture.
struct GoldenFixture {
  std::string sentence_id;
  std::string profile;
  std::vector<std::string> tokens;
};

// The eight strategy columns of the bundled fixtures, in canonical order. The
// first four and the last have live implementations; stanza, stanza_craft and
// udpipe exist only as golden data for the comparative metrics.
const std::vector<std::string>& fixture_profiles();

// True for members of fixture_profiles().
bool is_known_profile(const std::string& name);

// Parses a JSON Lines file of {"id": ..., "text": ...} objects, in file order.
// Throws std::runtime_error with the 1-based line number for malformed JSON,
// missing/empty fields, wrong field types, or duplicate ids. Blank lines are
// skipped.
std::vector<Sentence> load_corpus(const std::string& path);

// Parses a JSON Lines file of {"sentence_id", "profile", "tokens"} objects.
// Same strictness as load_corpus; additionally rejects unknown profile names,
// empty token strings, and duplicate (sentence_id, profile) pairs.
std::vector<GoldenFixture> load_fixtures(const std::string& path);

// Reconstructs byte spans for a fixture row by greedy left-to-right matching of
// each token at the next non-whitespace position of `text`. Throws
// std::runtime_error if any token cannot be placed (the row is not a split-only
// tokenization of the sentence). The result passes validate_tokenization with
// full coverage.
TokenizedSentence align_fixture(const std::string& text, const GoldenFixture& fx);

}  // namespace biotok
