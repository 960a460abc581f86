#include "biotok/vectorize.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace biotok {

std::size_t Vocabulary::id(const std::string& term) const {
  auto it = index.find(term);
  return it == index.end() ? terms.size() : it->second;
}

Vocabulary build_vocab(const std::vector<std::vector<std::string>>& docs) {
  Vocabulary v;
  for (const auto& doc : docs)
    for (const auto& tok : doc)
      if (v.index.emplace(tok, v.terms.size()).second) v.terms.push_back(tok);
  return v;
}

std::uint64_t DocTermMatrix::at(std::size_t doc, std::size_t term) const {
  auto it = counts.find({doc, term});
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t DocTermMatrix::row_sum(std::size_t doc) const {
  std::uint64_t sum = 0;
  for (auto it = counts.lower_bound({doc, 0}); it != counts.end() && it->first.first == doc;
       ++it)
    sum += it->second;
  return sum;
}

DocTermMatrix build_dtm(const std::vector<std::vector<std::string>>& docs,
                        const Vocabulary& vocab) {
  DocTermMatrix m;
  m.n_docs = docs.size();
  m.vocab = vocab;
  for (std::size_t d = 0; d < docs.size(); ++d)
    for (const auto& tok : docs[d]) {
      std::size_t t = vocab.id(tok);
      if (t < vocab.size()) ++m.counts[{d, t}];
    }
  return m;
}

std::uint64_t TermCooccurrenceMatrix::at(std::size_t a, std::size_t b) const {
  if (a == b) return 0;  // same-term pairs are excluded by construction
  auto it = counts.find({std::min(a, b), std::max(a, b)});
  return it == counts.end() ? 0 : it->second;
}

TermCooccurrenceMatrix build_tcm(const std::vector<std::vector<std::string>>& docs,
                                 const Vocabulary& vocab, std::size_t window) {
  if (window == 0) throw std::invalid_argument("co-occurrence window must be >= 1");
  TermCooccurrenceMatrix m;
  m.vocab = vocab;
  m.window = window;
  for (const auto& doc : docs) {
    std::vector<std::size_t> ids;
    ids.reserve(doc.size());
    for (const auto& tok : doc) ids.push_back(vocab.id(tok));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] >= vocab.size()) continue;
      std::size_t lo = i + 1;
      std::size_t hi = std::min(ids.size(), i + 1 + window);
      for (std::size_t j = lo; j < hi; ++j) {
        if (ids[j] >= vocab.size() || ids[j] == ids[i]) continue;
        ++m.counts[{std::min(ids[i], ids[j]), std::max(ids[i], ids[j])}];
      }
    }
  }
  return m;
}

namespace {

void write_vocab_sidecar(const Vocabulary& vocab, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& term : vocab.terms) out << term << "\n";
}

template <typename Counts>
void write_triples(const Counts& counts, const Vocabulary& vocab, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& [key, n] : counts)
    out << key.first << "\t" << key.second << "\t" << n << "\n";
  out.close();
  write_vocab_sidecar(vocab, path + ".vocab");
}

}  // namespace

void write_coo(const DocTermMatrix& dtm, const std::string& path) {
  write_triples(dtm.counts, dtm.vocab, path);
}

void write_coo(const TermCooccurrenceMatrix& tcm, const std::string& path) {
  write_triples(tcm.counts, tcm.vocab, path);
}

}  // namespace biotok
