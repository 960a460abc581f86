#include "biotok/normalize.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

#include "biotok/text.hpp"

namespace biotok {

bool is_punct_only(const std::string& token) {
  if (token.empty()) return false;
  std::size_t pos = 0;
  while (pos < token.size()) {
    char cls = char_class(decode_cp(token, pos));
    if (cls == 'L' || cls == 'D') return false;
  }
  return true;
}

bool is_numeric_only(const std::string& token) {
  // digits, optionally joined by single internal '.' or ','
  if (token.empty()) return false;
  bool prev_digit = false;
  bool any_digit = false;
  for (char c : token) {
    if (c >= '0' && c <= '9') {
      prev_digit = true;
      any_digit = true;
    } else if (c == '.' || c == ',') {
      if (!prev_digit) return false;  // separator must follow a digit
      prev_digit = false;
    } else {
      return false;
    }
  }
  return any_digit && prev_digit;  // may not end on a separator
}

namespace {

std::size_t cp_count(const std::string& s) {
  std::size_t n = 0, pos = 0;
  while (pos < s.size()) {
    decode_cp(s, pos);
    ++n;
  }
  return n;
}

bool keep_token(std::string& tok, const NormalizeOptions& opts) {
  if (opts.case_mode == CaseMode::Lower) tok = ascii_lower(tok);
  if (opts.case_mode == CaseMode::Upper) tok = ascii_upper(tok);
  if (opts.drop_punct_only && is_punct_only(tok)) return false;
  if (opts.drop_numeric_only && is_numeric_only(tok)) return false;
  if (opts.min_length > 0 && cp_count(tok) < opts.min_length) return false;
  if (opts.stopwords.count(tok)) return false;
  return true;
}

}  // namespace

std::vector<std::string> normalize(const std::vector<std::string>& tokens,
                                   const NormalizeOptions& opts) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (std::string tok : tokens)
    if (keep_token(tok, opts)) out.push_back(std::move(tok));
  return out;
}

std::vector<std::vector<std::string>> normalize_corpus(
    const std::vector<std::vector<std::string>>& docs, const NormalizeOptions& opts) {
  std::vector<std::vector<std::string>> out;
  out.reserve(docs.size());
  for (const auto& doc : docs) out.push_back(normalize(doc, opts));
  if (opts.min_corpus_freq > 1) {
    std::map<std::string, std::size_t> freq;
    for (const auto& doc : out)
      for (const auto& tok : doc) ++freq[tok];
    for (auto& doc : out) {
      std::vector<std::string> kept;
      kept.reserve(doc.size());
      for (auto& tok : doc)
        if (freq[tok] >= opts.min_corpus_freq) kept.push_back(std::move(tok));
      doc = std::move(kept);
    }
  }
  return out;
}

std::set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos || line[b] == '#') continue;
    std::size_t e = line.find_last_not_of(" \t\r\n");
    words.insert(line.substr(b, e - b + 1));
  }
  return words;
}

}  // namespace biotok
