#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace biotok {

// Unique types / total tokens, the per-cell statistic of the count table.
struct CountPair {
  std::size_t unique = 0;
  std::size_t total = 0;

  bool operator==(const CountPair&) const = default;
};

CountPair token_counts(const std::vector<std::string>& tokens);

// Counts pooled over many token lists: unique = vocabulary size of the union,
// total = sum of lengths.
CountPair corpus_counts(const std::vector<std::vector<std::string>>& rows);

// |a ∩ b| / |a ∪ b|; 1.0 when both sets are empty.
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

std::set<std::string> vocabulary(const std::vector<std::vector<std::string>>& rows);

// Number of equivalence classes under exact token-sequence equality.
std::size_t distinct_outputs(const std::vector<std::vector<std::string>>& outputs);

// Labelled symmetric matrix with unit diagonal.
struct SimilarityMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;

  double at(const std::string& a, const std::string& b) const;  // throws on unknown label
};

// Pairwise Jaccard over corpus-level vocabularies: one row/column per entry of
// `rows_by_label`, iterated in the given order.
SimilarityMatrix jaccard_matrix(
    const std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>& rows_by_label);

// Variant averaging per-sentence vocabulary Jaccard instead of pooling: entry
// (a,b) is the mean over sentences of jaccard(vocab of a's row, vocab of b's
// row). All labels must supply the same number of rows.
SimilarityMatrix jaccard_matrix_mean_per_sentence(
    const std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>& rows_by_label);

}  // namespace biotok
