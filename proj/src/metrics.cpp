#include "biotok/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace biotok {

CountPair token_counts(const std::vector<std::string>& tokens) {
  std::set<std::string> types(tokens.begin(), tokens.end());
  return {types.size(), tokens.size()};
}

CountPair corpus_counts(const std::vector<std::vector<std::string>>& rows) {
  std::set<std::string> types;
  std::size_t total = 0;
  for (const auto& row : rows) {
    types.insert(row.begin(), row.end());
    total += row.size();
  }
  return {types.size(), total};
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t inter = 0;
  for (const auto& x : a) inter += b.count(x);
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

std::set<std::string> vocabulary(const std::vector<std::vector<std::string>>& rows) {
  std::set<std::string> v;
  for (const auto& row : rows) v.insert(row.begin(), row.end());
  return v;
}

std::size_t distinct_outputs(const std::vector<std::vector<std::string>>& outputs) {
  std::set<std::vector<std::string>> classes(outputs.begin(), outputs.end());
  return classes.size();
}

double SimilarityMatrix::at(const std::string& a, const std::string& b) const {
  auto idx = [&](const std::string& name) {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw std::invalid_argument("unknown label \"" + name + "\"");
    return static_cast<std::size_t>(it - labels.begin());
  };
  return values[idx(a)][idx(b)];
}

namespace {

template <typename PairwiseFn>
SimilarityMatrix build_matrix(const std::vector<std::string>& labels, PairwiseFn fn) {
  SimilarityMatrix m;
  m.labels = labels;
  m.values.assign(labels.size(), std::vector<double>(labels.size(), 1.0));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      m.values[i][j] = m.values[j][i] = fn(i, j);
  return m;
}

}  // namespace

SimilarityMatrix jaccard_matrix(
    const std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>& rows_by_label) {
  std::vector<std::string> labels;
  std::vector<std::set<std::string>> vocabs;
  for (const auto& [label, rows] : rows_by_label) {
    labels.push_back(label);
    vocabs.push_back(vocabulary(rows));
  }
  return build_matrix(labels, [&](std::size_t i, std::size_t j) {
    return jaccard(vocabs[i], vocabs[j]);
  });
}

SimilarityMatrix jaccard_matrix_mean_per_sentence(
    const std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>& rows_by_label) {
  std::size_t n_rows = rows_by_label.empty() ? 0 : rows_by_label.front().second.size();
  for (const auto& [label, rows] : rows_by_label)
    if (rows.size() != n_rows)
      throw std::invalid_argument("label \"" + label + "\" has a different row count");
  std::vector<std::string> labels;
  std::vector<std::vector<std::set<std::string>>> vocabs;  // [label][sentence]
  for (const auto& [label, rows] : rows_by_label) {
    labels.push_back(label);
    std::vector<std::set<std::string>> per_row;
    for (const auto& row : rows) per_row.emplace_back(row.begin(), row.end());
    vocabs.push_back(std::move(per_row));
  }
  return build_matrix(labels, [&](std::size_t i, std::size_t j) {
    if (n_rows == 0) return 1.0;
    double sum = 0.0;
    for (std::size_t r = 0; r < n_rows; ++r) sum += jaccard(vocabs[i][r], vocabs[j][r]);
    return sum / static_cast<double>(n_rows);
  });
}

}  // namespace biotok
