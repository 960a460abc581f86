#include "biotok/corpus.hpp"

#include <fstream>
#include <set>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "biotok/text.hpp"

namespace biotok {

using nlohmann::json;

const std::vector<std::string>& fixture_profiles() {
  static const std::vector<std::string> names = {
      "whitespace", "ptb", "web", "biomed", "stanza", "stanza_craft", "r_basic", "udpipe"};
  return names;
}

bool is_known_profile(const std::string& name) {
  for (const auto& p : fixture_profiles())
    if (p == name) return true;
  return false;
}

namespace {

[[noreturn]] void die(const std::string& path, std::size_t line, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

std::string need_string(const json& j, const char* key, const std::string& path,
                        std::size_t line) {
  auto it = j.find(key);
  if (it == j.end()) die(path, line, std::string("missing field \"") + key + "\"");
  if (!it->is_string()) die(path, line, std::string("field \"") + key + "\" must be a string");
  return it->get<std::string>();
}

// Applies `fn(parsed object, line number)` to every non-blank line.
template <typename Fn>
void for_each_record(const std::string& path, Fn fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || is_blank(line)) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) die(path, lineno, "malformed JSON");
    if (!j.is_object()) die(path, lineno, "expected a JSON object");
    fn(j, lineno);
  }
}

}  // namespace

std::vector<Sentence> load_corpus(const std::string& path) {
  std::vector<Sentence> out;
  std::set<std::string> seen;
  for_each_record(path, [&](const json& j, std::size_t lineno) {
    Sentence s;
    s.id = need_string(j, "id", path, lineno);
    s.text = need_string(j, "text", path, lineno);
    if (s.id.empty()) die(path, lineno, "empty id");
    if (s.text.empty()) die(path, lineno, "empty text");
    if (!seen.insert(s.id).second) die(path, lineno, "duplicate id \"" + s.id + "\"");
    out.push_back(std::move(s));
  });
  return out;
}

std::vector<GoldenFixture> load_fixtures(const std::string& path) {
  std::vector<GoldenFixture> out;
  std::set<std::pair<std::string, std::string>> seen;
  for_each_record(path, [&](const json& j, std::size_t lineno) {
    GoldenFixture f;
    f.sentence_id = need_string(j, "sentence_id", path, lineno);
    f.profile = need_string(j, "profile", path, lineno);
    if (f.sentence_id.empty()) die(path, lineno, "empty sentence_id");
    if (!is_known_profile(f.profile))
      die(path, lineno, "unknown profile \"" + f.profile + "\"");
    auto it = j.find("tokens");
    if (it == j.end()) die(path, lineno, "missing field \"tokens\"");
    if (!it->is_array()) die(path, lineno, "field \"tokens\" must be an array");
    for (const auto& t : *it) {
      if (!t.is_string() || t.get<std::string>().empty())
        die(path, lineno, "tokens must be non-empty strings");
      f.tokens.push_back(t.get<std::string>());
    }
    if (!seen.insert({f.sentence_id, f.profile}).second)
      die(path, lineno, "duplicate row " + f.sentence_id + "/" + f.profile);
    out.push_back(std::move(f));
  });
  return out;
}

TokenizedSentence align_fixture(const std::string& text, const GoldenFixture& fx) {
  TokenizedSentence ts;
  ts.sentence_id = fx.sentence_id;
  ts.profile = fx.profile;
  std::size_t pos = 0;
  for (const std::string& tok : fx.tokens) {
    // Skip whitespace to the next anchor point.
    while (pos < text.size()) {
      std::size_t p = pos;
      if (!is_space_cp(decode_cp(text, p))) break;
      pos = p;
    }
    if (text.compare(pos, tok.size(), tok) != 0)
      throw std::runtime_error("fixture row " + fx.sentence_id + "/" + fx.profile +
                               ": token \"" + tok + "\" does not match sentence at byte " +
                               std::to_string(pos));
    ts.tokens.push_back(Token{tok, pos, pos + tok.size()});
    pos += tok.size();
  }
  validate_tokenization(text, ts, /*require_full_coverage=*/true);
  return ts;
}

}  // namespace biotok
