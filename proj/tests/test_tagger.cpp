#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "biotok/corpus.hpp"
#include "biotok/profiles.hpp"
#include "biotok/tagger.hpp"
#include "biotok/text.hpp"
#include "biotok/token.hpp"
#include "biotok/whitespace.hpp"
#include "helpers.hpp"

using namespace biotok;
using testutil::corpus;
using testutil::fixtures;
using testutil::read_file;
using testutil::write_temp;

namespace {

std::string letters(const std::vector<CharTag>& tags) {
  std::string s;
  for (CharTag t : tags) s += tag_letter(t);
  return s;
}

std::vector<CharTag> tags_of(const std::string& s) {
  std::vector<CharTag> v;
  for (char c : s) v.push_back(tag_from_letter(c));
  return v;
}

// A random split-only tokenization: every maximal non-whitespace run is cut at
// random code-point boundaries.
TokenizedSentence random_split(const std::string& text, std::mt19937_64& rng) {
  TokenizedSentence ts{"r", "random", {}};
  auto ws_ts = tokenize_whitespace(text);
  for (const Token& run : ws_ts.tokens) {
    std::size_t b = run.start;
    std::size_t pos = b;
    while (pos < run.end) {
      std::size_t p = pos;
      decode_cp(text, p);
      bool cut = p >= run.end || (rng() % 3 == 0);
      if (cut) {
        ts.tokens.push_back({text.substr(b, p - b), b, p});
        b = p;
      }
      pos = p;
    }
  }
  return ts;
}

}  // namespace

TEST_CASE("tag letters round-trip") {
  for (char c : std::string("BIEO")) CHECK(tag_letter(tag_from_letter(c)) == c);
  CHECK_THROWS_AS(tag_from_letter('X'), std::invalid_argument);
}

TEST_CASE("derive_tags marks begin, inside, end, outside") {
  auto ws = [](const std::string& t) { return tokenize_whitespace(t); };
  CHECK(letters(derive_tags("ab cd", ws("ab cd"))) == "BEOBE");
  CHECK(letters(derive_tags("a", ws("a"))) == "B");
  CHECK(letters(derive_tags("abc", ws("abc"))) == "BIE");
  CHECK(letters(derive_tags(" x ", ws(" x "))) == "OBO");
  // Multi-byte chars count as one position each.
  CHECK(letters(derive_tags("\xC3\xA9 x", ws("\xC3\xA9 x"))) == "BOB");
}

TEST_CASE("derive_tags follows sub-chunk token boundaries") {
  TokenizedSentence ts = tokenize_any("x-ray.", "biomed");  // x - ray .
  CHECK(letters(derive_tags("x-ray.", ts)) == "BBBIEB");
}

TEST_CASE("derive_tags rejects invalid tokenizations") {
  TokenizedSentence bad{"s", "p", {{"zz", 0, 2}}};
  CHECK_THROWS_AS(derive_tags("ab", bad), std::logic_error);
}

TEST_CASE("decode_tags inverts derive_tags") {
  for (const std::string text : {"ab cd", "a", " x ", "x-ray.", "caf\xC3\xA9 25kg!"}) {
    for (const char* profile : {"whitespace", "ptb", "web", "biomed", "r_basic"}) {
      auto ts = tokenize_any(text, profile);
      auto back = decode_tags(text, derive_tags(text, ts));
      CHECK(back.tokens == ts.tokens);
    }
  }
}

TEST_CASE("decode_tags repairs malformed sequences") {
  auto decode = [](const std::string& text, const std::string& tags) {
    return decode_tags(text, tags_of(tags)).texts();
  };
  // I/E with no open token opens one.
  CHECK(decode("abc", "IIE") == std::vector<std::string>{"abc"});
  CHECK(decode("ab", "EE") == std::vector<std::string>{"a", "b"});
  // All outside: no tokens.
  CHECK(decode("abc", "OOO").empty());
  // B closes the previous token after its last non-O char.
  CHECK(decode("abc", "BOB") == std::vector<std::string>{"a", "c"});
  // Trailing O chars are trimmed at the forced close...
  CHECK(decode("abc", "BIO") == std::vector<std::string>{"ab"});
  // ...but an O between solid chars stays inside the token.
  CHECK(decode("a-b", "BOE") == std::vector<std::string>{"a-b"});
  // Whitespace always closes, whatever the tag claims.
  CHECK(decode("ab cd", "BIIIE") == std::vector<std::string>{"ab", "cd"});
  CHECK(decode("ab cd", "BIBIE") == std::vector<std::string>{"ab", "cd"});
}

TEST_CASE("decode_tags checks the tag count") {
  CHECK_THROWS_AS(decode_tags("abc", tags_of("BE")), std::invalid_argument);
  // Length is in code points, not bytes: 2-byte char, 1 tag.
  CHECK_NOTHROW(decode_tags("\xC3\xA9", tags_of("B")));
  CHECK_THROWS_AS(decode_tags("\xC3\xA9", tags_of("BE")), std::invalid_argument);
}

TEST_CASE("derive/decode round-trips every shipped fixture row") {
  std::map<std::string, std::string> text_by_id;
  for (const auto& s : corpus()) text_by_id[s.id] = s.text;
  for (const auto& f : fixtures()) {
    const std::string& text = text_by_id[f.sentence_id];
    TokenizedSentence ts = align_fixture(text, f);
    TokenizedSentence back = decode_tags(text, derive_tags(text, ts));
    INFO(f.sentence_id << "/" << f.profile);
    CHECK(back.tokens == ts.tokens);
  }
}

TEST_CASE("derive/decode round-trips random tokenizations") {
  std::mt19937_64 rng(42);
  const std::string alphabet = "abcXYZ012.,-()/% \t";
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t len = rng() % 48;
    std::string text;
    for (std::size_t i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
    TokenizedSentence ts = random_split(text, rng);
    TokenizedSentence back = decode_tags(text, derive_tags(text, ts));
    INFO("text: \"" << text << "\"");
    CHECK(back.tokens == ts.tokens);
  }
}

TEST_CASE("training is deterministic for a fixed seed") {
  std::vector<Sentence> tiny(corpus().begin(), corpus().begin() + 6);
  TrainOptions opts;
  opts.epochs = 4;
  TaggerModel a = train_tagger(tiny, opts);
  TaggerModel b = train_tagger(tiny, opts);
  CHECK(a.feature_names == b.feature_names);
  REQUIRE(a.weights.size() == b.weights.size());
  CHECK(a.weights == b.weights);  // bitwise, not approximate
}

TEST_CASE("feature vocabulary does not depend on the seed") {
  std::vector<Sentence> tiny(corpus().begin(), corpus().begin() + 4);
  TrainOptions a, b;
  a.seed = 1;
  b.seed = 99;
  a.epochs = b.epochs = 2;
  CHECK(train_tagger(tiny, a).feature_names == train_tagger(tiny, b).feature_names);
}

TEST_CASE("training rejects degenerate options") {
  std::vector<Sentence> tiny(corpus().begin(), corpus().begin() + 2);
  CHECK_THROWS_AS(train_tagger({}, TrainOptions{}), std::invalid_argument);
  TrainOptions zero_epochs;
  zero_epochs.epochs = 0;
  CHECK_THROWS_AS(train_tagger(tiny, zero_epochs), std::invalid_argument);
  TrainOptions zero_window;
  zero_window.window = 0;
  CHECK_THROWS_AS(train_tagger(tiny, zero_window), std::invalid_argument);
  TrainOptions bad_profile;
  bad_profile.silver_profile = "nope";
  CHECK_THROWS_AS(train_tagger(tiny, bad_profile), std::invalid_argument);
}

TEST_CASE("trained tagger fits its silver labels") {
  TaggerModel m = train_tagger(corpus(), TrainOptions{});
  TaggerEval ev = evaluate_tagger(m, corpus(), "biomed");
  CHECK(ev.tag_accuracy >= 0.99);
  CHECK(ev.token_f1 >= 0.99);
  CHECK(ev.chars > 0);
  CHECK(ev.gold_tokens > 0);
  CHECK(ev.matched_tokens <= ev.predicted_tokens);
}

TEST_CASE("constrained tagging forces whitespace to O and non-whitespace to BIE") {
  TaggerModel m = train_tagger(corpus(), TrainOptions{});
  std::string text = "IL-2 levels rose 2.6kb away.";
  auto tags = m.tag_constrained(text);
  std::size_t pos = 0, i = 0;
  while (pos < text.size()) {
    bool ws = is_space_cp(decode_cp(text, pos));
    if (ws)
      CHECK(tags[i] == CharTag::O);
    else
      CHECK(tags[i] != CharTag::O);
    ++i;
  }
  CHECK(i == tags.size());

  // The induced tokenization is valid and covers every non-whitespace byte:
  // constrained tags never mark a real character as outside.
  TokenizedSentence ts = tokenize_tagged(text, m);
  CHECK_NOTHROW(validate_tokenization(text, ts, /*require_full_coverage=*/true));
}

TEST_CASE("models round-trip through JSON bit-for-bit") {
  std::vector<Sentence> tiny(corpus().begin(), corpus().begin() + 6);
  TrainOptions opts;
  opts.epochs = 4;
  TaggerModel m = train_tagger(tiny, opts);
  auto path = write_temp("model", "");
  save_model(m, path);
  TaggerModel loaded = load_model(path);
  CHECK(loaded.window == m.window);
  CHECK(loaded.seed == m.seed);
  CHECK(loaded.epochs == m.epochs);
  CHECK(loaded.feature_names == m.feature_names);
  CHECK(loaded.weights == m.weights);  // exact doubles via round-trip formatting
  // Saved again, the file is byte-identical.
  auto path2 = write_temp("model", "");
  save_model(loaded, path2);
  CHECK(read_file(path) == read_file(path2));
  // And the loaded model tags exactly like the original.
  for (const auto& s : tiny) CHECK(loaded.tag_constrained(s.text) == m.tag_constrained(s.text));
}

TEST_CASE("model loader rejects unreadable files") {
  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), std::runtime_error);
  CHECK_THROWS_AS(load_model(write_temp("model", "not json")), std::runtime_error);
}
