#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace biotok {

// Term index in first-occurrence order over the corpus.
struct Vocabulary {
  std::vector<std::string> terms;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t size() const { return terms.size(); }
  // Index of `term`, or terms.size() if absent.
  std::size_t id(const std::string& term) const;
};

Vocabulary build_vocab(const std::vector<std::vector<std::string>>& docs);

// Sparse document-term counts. Invariant: the sum of row d equals docs[d].size()
// when built with the vocabulary of the same corpus.
struct DocTermMatrix {
  std::size_t n_docs = 0;
  Vocabulary vocab;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts;  // (doc, term) -> n

  std::uint64_t at(std::size_t doc, std::size_t term) const;
  std::uint64_t row_sum(std::size_t doc) const;
};

// Builds counts against `vocab`; tokens absent from the vocabulary are skipped.
DocTermMatrix build_dtm(const std::vector<std::vector<std::string>>& docs,
                        const Vocabulary& vocab);

// Symmetric term-term co-occurrence within a sliding window of `window` tokens
// (positions j with 0 < |i-j| <= window, each unordered pair counted once per
// occurrence pair). Pairs of a term with itself are excluded entirely, so the
// diagonal is structurally zero. Stored upper-triangular: key (min_id, max_id).
struct TermCooccurrenceMatrix {
  Vocabulary vocab;
  std::size_t window = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts;

  std::uint64_t at(std::size_t a, std::size_t b) const;  // symmetric lookup
};

TermCooccurrenceMatrix build_tcm(const std::vector<std::vector<std::string>>& docs,
                                 const Vocabulary& vocab, std::size_t window);

// Text export, one "row<TAB>col<TAB>count" line per nonzero, rows then cols
// ascending; TCM emits only the stored upper triangle. A vocabulary sidecar
// (same path + ".vocab", one term per line, index order) accompanies both.
void write_coo(const DocTermMatrix& dtm, const std::string& path);
void write_coo(const TermCooccurrenceMatrix& tcm, const std::string& path);

}  // namespace biotok
