#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "biotok/corpus.hpp"
#include "biotok/token.hpp"

namespace biotok {

// Per-code-point tags for tokenization as sequence labelling: B begins a
// multi-char token, I continues one, E ends one, O is outside any token.
// Single-char tokens are tagged B.
enum class CharTag : std::uint8_t { B = 0, I = 1, E = 2, O = 3 };

char tag_letter(CharTag t);                 // 'B' 'I' 'E' 'O'
CharTag tag_from_letter(char c);            // throws std::invalid_argument

// Converts a split-only tokenization into one tag per code point of `text`.
// Throws std::logic_error if `ts` fails validate_tokenization.
std::vector<CharTag> derive_tags(const std::string& text, const TokenizedSentence& ts);

// Converts a tag sequence (one per code point) back into tokens. Inverse of
// derive_tags on well-formed sequences; arbitrary sequences are repaired
// greedily: I/E with no open token opens one, a token left open at whitespace
// or end of text closes after its last non-O char, O inside a token continues
// it. Decoding never emits a token that covers whitespace; beyond that only
// ordering and non-overlap are guaranteed, so validate with
// require_full_coverage=false. Throws std::invalid_argument if the length
// differs from the code-point count of `text`.
TokenizedSentence decode_tags(const std::string& text, const std::vector<CharTag>& tags);

// Averaged-perceptron character tagger. Features are char identities and
// coarse char classes in a ±window, plus class bigrams. Weights are kept as
// exact integer sums during training and divided once at the end, so training
// is bit-reproducible for a fixed (data, window, epochs, seed).
struct TaggerModel {
  int window = 3;
  std::vector<std::string> feature_names;        // index -> feature string
  std::vector<double> weights;                   // flat [feature][tag], 4 per feature
  std::uint64_t seed = 0;
  int epochs = 0;

  // Lookup into feature_names; populated by train_tagger/load_model, rebuilt
  // with reindex() after manual edits.
  std::unordered_map<std::string, std::size_t> feature_index;
  void reindex();

  // Unconstrained per-char scores/argmax over all four tags.
  CharTag predict(const std::u32string& chars, std::size_t i) const;
  // Constrained argmax used for tokenization: whitespace chars are forced to O,
  // non-whitespace chars choose among {B, I, E}. This makes split-only output a
  // structural property of the decoder, not a learned one.
  std::vector<CharTag> tag_constrained(const std::string& text) const;
};

struct TrainOptions {
  int window = 3;
  int epochs = 10;
  std::uint64_t seed = 7;
  std::string silver_profile = "biomed";  // rule profile that provides labels
};

// Trains on silver tags produced by opts.silver_profile over `sentences`.
// Sentence order is reshuffled each epoch with a seeded generator (own
// Fisher-Yates, so results do not depend on the standard library's shuffle).
TaggerModel train_tagger(const std::vector<Sentence>& sentences, const TrainOptions& opts);

// Tokenizes by tagging: tag_constrained + decode_tags. Output spans cover only
// non-whitespace and never split a code point, but coverage of every
// non-whitespace byte is not guaranteed (the model may tag O).
TokenizedSentence tokenize_tagged(const std::string& text, const TaggerModel& model);

struct TaggerEval {
  double tag_accuracy = 0.0;  // per-char, against silver tags
  double token_f1 = 0.0;      // exact-span match F1 against silver tokens
  std::size_t chars = 0;
  std::size_t gold_tokens = 0;
  std::size_t predicted_tokens = 0;
  std::size_t matched_tokens = 0;
};

// Scores the model against the silver labelling of `sentences` by `silver_profile`.
TaggerEval evaluate_tagger(const TaggerModel& model, const std::vector<Sentence>& sentences,
                           const std::string& silver_profile);

// JSON round-trip. save_model writes {"window", "feature_vocab", "weights",
// "metadata": {"seed", "epochs"}}; load_model(save_model(m)) reproduces the
// model bit-for-bit (weights serialize via shortest round-trip formatting).
void save_model(const TaggerModel& m, const std::string& path);
TaggerModel load_model(const std::string& path);

}  // namespace biotok
