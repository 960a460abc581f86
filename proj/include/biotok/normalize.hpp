#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace biotok {

enum class CaseMode { None, Lower, Upper };

// Post-tokenization cleanup options. Steps apply in the fixed order:
// case fold -> drop punctuation-only -> drop numeric-only -> drop shorter than
// min_length -> drop stopwords. min_corpus_freq applies only in
// normalize_corpus, after the per-token steps, using raw occurrence counts
// across the whole corpus.
struct NormalizeOptions {
  CaseMode case_mode = CaseMode::None;
  bool drop_punct_only = false;    // tokens with no letters and no digits
  bool drop_numeric_only = false;  // digits with internal ',' or '.' separators
  std::size_t min_length = 0;      // in code points; shorter tokens are dropped
  std::set<std::string> stopwords; // matched after case folding
  std::size_t min_corpus_freq = 0; // 0/1 = keep everything
};

// True if `token` has no letter and no digit code points.
bool is_punct_only(const std::string& token);

// True for digit runs optionally joined by single internal ',' or '.'
// ("26,003", "0.05", "2"); not "2.6kb", not "18.".
bool is_numeric_only(const std::string& token);

// Applies the per-token pipeline to one token list; order is preserved.
std::vector<std::string> normalize(const std::vector<std::string>& tokens,
                                   const NormalizeOptions& opts);

// Per-token pipeline on every document, then the corpus-frequency filter:
// tokens whose post-pipeline form occurs fewer than min_corpus_freq times
// across all documents are dropped everywhere.
std::vector<std::vector<std::string>> normalize_corpus(
    const std::vector<std::vector<std::string>>& docs, const NormalizeOptions& opts);

// Loads one stopword per line (blank lines, '#' comment lines, and
// leading/trailing ASCII whitespace ignored). Throws std::runtime_error if
// unreadable.
std::set<std::string> load_stopwords(const std::string& path);

}  // namespace biotok
