#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "biotok/corpus.hpp"
#include "biotok/metrics.hpp"
#include "biotok/normalize.hpp"
#include "biotok/profiles.hpp"
#include "biotok/rules.hpp"
#include "biotok/tagger.hpp"
#include "biotok/token.hpp"
#include "biotok/vectorize.hpp"
#include "biotok/whitespace.hpp"

namespace py = pybind11;
using namespace biotok;

namespace {

std::string tags_to_letters(const std::vector<CharTag>& tags) {
  std::string s;
  s.reserve(tags.size());
  for (CharTag t : tags) s += tag_letter(t);
  return s;
}

std::vector<CharTag> letters_to_tags(const std::string& s) {
  std::vector<CharTag> tags;
  tags.reserve(s.size());
  for (char c : s) tags.push_back(tag_from_letter(c));
  return tags;
}

std::vector<Sentence> texts_to_sentences(const std::vector<std::string>& texts) {
  std::vector<Sentence> out;
  out.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i)
    out.push_back(Sentence{"s" + std::to_string(i + 1), texts[i]});
  return out;
}

CaseMode case_mode_from(const std::string& name) {
  if (name == "none") return CaseMode::None;
  if (name == "lower") return CaseMode::Lower;
  if (name == "upper") return CaseMode::Upper;
  throw std::invalid_argument("case must be 'none', 'lower' or 'upper', got '" + name + "'");
}

NormalizeOptions make_norm_opts(const std::string& case_mode, bool drop_punct,
                                bool drop_numeric, std::size_t min_length,
                                const std::set<std::string>& stopwords,
                                std::size_t min_corpus_freq) {
  NormalizeOptions opts;
  opts.case_mode = case_mode_from(case_mode);
  opts.drop_punct_only = drop_punct;
  opts.drop_numeric_only = drop_numeric;
  opts.min_length = min_length;
  opts.stopwords = stopwords;
  opts.min_corpus_freq = min_corpus_freq;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_biotok, m) {
  m.doc() = "Rule-based and learned tokenization for biomedical text.";

  py::class_<Token>(m, "Token")
      .def_readonly("text", &Token::text)
      .def_readonly("start", &Token::start)
      .def_readonly("end", &Token::end)
      .def("__repr__", [](const Token& t) {
        return "Token(" + t.text + ", " + std::to_string(t.start) + ", " +
               std::to_string(t.end) + ")";
      });

  py::class_<TokenizedSentence>(m, "TokenizedSentence")
      .def_readonly("sentence_id", &TokenizedSentence::sentence_id)
      .def_readonly("profile", &TokenizedSentence::profile)
      .def_readonly("tokens", &TokenizedSentence::tokens)
      .def("texts", &TokenizedSentence::texts);

  m.def("strategies", [] { return live_strategy_names(); },
        "Names accepted by tokenize(): 'whitespace' plus the rule profiles.");
  m.def("profiles", [] { return builtin_profile_names(); },
        "Names of the built-in rule profiles.");

  m.def(
      "tokenize",
      [](const std::string& text, const std::string& strategy) {
        return tokenize_any(text, strategy).texts();
      },
      py::arg("text"), py::arg("strategy") = "whitespace",
      "Token texts for one sentence under the named strategy.");
  m.def(
      "tokenize_spans",
      [](const std::string& text, const std::string& strategy) {
        return tokenize_any(text, strategy);
      },
      py::arg("text"), py::arg("strategy") = "whitespace",
      "Like tokenize() but returns tokens with byte spans.");

  py::class_<RuleStep>(m, "RuleStep")
      .def_readonly("kind", &RuleStep::kind)
      .def_readonly("pattern", &RuleStep::pattern)
      .def_readonly("pieces", &RuleStep::pieces);

  py::class_<RuleTrace>(m, "RuleTrace")
      .def_readonly("chunk", &RuleTrace::chunk)
      .def_readonly("steps", &RuleTrace::steps)
      .def_readonly("pieces", &RuleTrace::pieces);

  py::class_<RuleSet>(m, "RuleSet")
      .def(py::init<>())
      .def_readwrite("name", &RuleSet::name)
      .def_readwrite("prefixes", &RuleSet::prefixes)
      .def_readwrite("suffixes", &RuleSet::suffixes)
      .def_readwrite("infixes", &RuleSet::infixes)
      .def_readwrite("special_cases", &RuleSet::special_cases)
      .def_readwrite("protected_patterns", &RuleSet::protected_patterns)
      .def("compile", &RuleSet::compile)
      .def("compiled", &RuleSet::compiled)
      .def_static("builtin", &builtin_profile, py::arg("name"))
      .def_static("load", &load_ruleset, py::arg("path"))
      .def("save", [](const RuleSet& rs, const std::string& path) { save_ruleset(rs, path); },
           py::arg("path"))
      .def(
          "tokenize",
          [](const RuleSet& rs, const std::string& text) {
            return tokenize_rules(text, rs).texts();
          },
          py::arg("text"))
      .def(
          "tokenize_spans",
          [](const RuleSet& rs, const std::string& text) { return tokenize_rules(text, rs); },
          py::arg("text"))
      .def(
          "trace",
          [](const RuleSet& rs, const std::string& chunk) { return trace_chunk(chunk, rs); },
          py::arg("chunk"), "Step-by-step rule applications for one whitespace-free chunk.");

  m.def(
      "validate_tokenization",
      [](const std::string& text, const TokenizedSentence& ts, bool require_full_coverage) {
        validate_tokenization(text, ts, require_full_coverage);
      },
      py::arg("text"), py::arg("tokens"), py::arg("require_full_coverage") = true);

  m.def(
      "derive_tags",
      [](const std::string& text, const std::vector<std::string>& tokens) {
        GoldenFixture fx{"", "aligned", tokens};
        return tags_to_letters(derive_tags(text, align_fixture(text, fx)));
      },
      py::arg("text"), py::arg("tokens"),
      "One of 'BIEO' per code point for a split-only token-text list.");
  m.def(
      "decode_tags",
      [](const std::string& text, const std::string& tags) {
        return decode_tags(text, letters_to_tags(tags));
      },
      py::arg("text"), py::arg("tags"),
      "Tokens for a 'BIEO' string (one letter per code point).");

  py::class_<TaggerEval>(m, "TaggerEval")
      .def_readonly("tag_accuracy", &TaggerEval::tag_accuracy)
      .def_readonly("token_f1", &TaggerEval::token_f1)
      .def_readonly("chars", &TaggerEval::chars)
      .def_readonly("gold_tokens", &TaggerEval::gold_tokens)
      .def_readonly("predicted_tokens", &TaggerEval::predicted_tokens)
      .def_readonly("matched_tokens", &TaggerEval::matched_tokens);

  py::class_<TaggerModel>(m, "Tagger")
      .def_readonly("window", &TaggerModel::window)
      .def_readonly("seed", &TaggerModel::seed)
      .def_readonly("epochs", &TaggerModel::epochs)
      .def_property_readonly(
          "n_features", [](const TaggerModel& t) { return t.feature_names.size(); })
      .def_static(
          "train",
          [](const std::vector<std::string>& texts, int window, int epochs,
             std::uint64_t seed, const std::string& profile) {
            TrainOptions opts;
            opts.window = window;
            opts.epochs = epochs;
            opts.seed = seed;
            opts.silver_profile = profile;
            return train_tagger(texts_to_sentences(texts), opts);
          },
          py::arg("texts"), py::arg("window") = 3, py::arg("epochs") = 10,
          py::arg("seed") = 7, py::arg("profile") = "biomed",
          "Trains on silver tags produced by the named rule profile.")
      .def_static("load", &load_model, py::arg("path"))
      .def("save", [](const TaggerModel& t, const std::string& path) { save_model(t, path); },
           py::arg("path"))
      .def(
          "tag",
          [](const TaggerModel& t, const std::string& text) {
            return tags_to_letters(t.tag_constrained(text));
          },
          py::arg("text"), "One of 'BIEO' per code point; whitespace is always O.")
      .def(
          "tokenize",
          [](const TaggerModel& t, const std::string& text) {
            return tokenize_tagged(text, t).texts();
          },
          py::arg("text"))
      .def(
          "tokenize_spans",
          [](const TaggerModel& t, const std::string& text) { return tokenize_tagged(text, t); },
          py::arg("text"))
      .def(
          "evaluate",
          [](const TaggerModel& t, const std::vector<std::string>& texts,
             const std::string& profile) {
            return evaluate_tagger(t, texts_to_sentences(texts), profile);
          },
          py::arg("texts"), py::arg("profile") = "biomed",
          "Scores against the silver labelling of the given profile.");

  m.def(
      "normalize",
      [](const std::vector<std::string>& tokens, const std::string& case_mode, bool drop_punct,
         bool drop_numeric, std::size_t min_length, const std::set<std::string>& stopwords) {
        return normalize(tokens, make_norm_opts(case_mode, drop_punct, drop_numeric, min_length,
                                                stopwords, 0));
      },
      py::arg("tokens"), py::arg("case") = "none", py::arg("drop_punct") = false,
      py::arg("drop_numeric") = false, py::arg("min_length") = 0,
      py::arg("stopwords") = std::set<std::string>{});
  m.def(
      "normalize_corpus",
      [](const std::vector<std::vector<std::string>>& docs, const std::string& case_mode,
         bool drop_punct, bool drop_numeric, std::size_t min_length,
         const std::set<std::string>& stopwords, std::size_t min_corpus_freq) {
        return normalize_corpus(docs, make_norm_opts(case_mode, drop_punct, drop_numeric,
                                                     min_length, stopwords, min_corpus_freq));
      },
      py::arg("docs"), py::arg("case") = "none", py::arg("drop_punct") = false,
      py::arg("drop_numeric") = false, py::arg("min_length") = 0,
      py::arg("stopwords") = std::set<std::string>{}, py::arg("min_corpus_freq") = 0);

  m.def(
      "token_counts",
      [](const std::vector<std::string>& tokens) {
        CountPair c = token_counts(tokens);
        return std::make_pair(c.unique, c.total);
      },
      py::arg("tokens"), "(unique types, total tokens).");
  m.def(
      "corpus_counts",
      [](const std::vector<std::vector<std::string>>& rows) {
        CountPair c = corpus_counts(rows);
        return std::make_pair(c.unique, c.total);
      },
      py::arg("rows"));
  m.def("jaccard", &jaccard, py::arg("a"), py::arg("b"));
  m.def("vocabulary", &vocabulary, py::arg("rows"));
  m.def("distinct_outputs", &distinct_outputs, py::arg("outputs"),
        "Number of distinct token sequences.");
  m.def(
      "jaccard_matrix",
      [](const std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>& rows,
         bool per_sentence) {
        SimilarityMatrix sm = per_sentence ? jaccard_matrix_mean_per_sentence(rows)
                                           : jaccard_matrix(rows);
        return std::make_pair(sm.labels, sm.values);
      },
      py::arg("rows_by_label"), py::arg("per_sentence") = false,
      "(labels, values) for pairwise vocabulary Jaccard.");

  m.def(
      "build_vocab",
      [](const std::vector<std::vector<std::string>>& docs) { return build_vocab(docs).terms; },
      py::arg("docs"), "Terms in first-occurrence order.");
  m.def(
      "doc_term_matrix",
      [](const std::vector<std::vector<std::string>>& docs) {
        Vocabulary v = build_vocab(docs);
        DocTermMatrix dtm = build_dtm(docs, v);
        std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>> cells;
        cells.reserve(dtm.counts.size());
        for (const auto& [key, n] : dtm.counts) cells.emplace_back(key.first, key.second, n);
        return std::make_pair(v.terms, cells);
      },
      py::arg("docs"), "(terms, [(doc, term_id, count), ...]) sparse counts.");
  m.def(
      "cooccurrence_matrix",
      [](const std::vector<std::vector<std::string>>& docs, std::size_t window) {
        Vocabulary v = build_vocab(docs);
        TermCooccurrenceMatrix tcm = build_tcm(docs, v, window);
        std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>> cells;
        cells.reserve(tcm.counts.size());
        for (const auto& [key, n] : tcm.counts) cells.emplace_back(key.first, key.second, n);
        return std::make_pair(v.terms, cells);
      },
      py::arg("docs"), py::arg("window") = 2,
      "(terms, [(term_a, term_b, count), ...]) upper-triangular co-occurrences.");

  m.def(
      "load_corpus",
      [](const std::string& path) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const Sentence& s : load_corpus(path)) out.emplace_back(s.id, s.text);
        return out;
      },
      py::arg("path"), "[(id, text), ...] from a JSON Lines corpus file.");
  m.def(
      "load_fixtures",
      [](const std::string& path) {
        std::vector<std::tuple<std::string, std::string, std::vector<std::string>>> out;
        for (const GoldenFixture& f : load_fixtures(path))
          out.emplace_back(f.sentence_id, f.profile, f.tokens);
        return out;
      },
      py::arg("path"), "[(sentence_id, profile, tokens), ...] from a JSON Lines fixture file.");
}
