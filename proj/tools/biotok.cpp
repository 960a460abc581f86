// biotok: multi-strategy tokenizer toolkit for biomedical text.
//
// Subcommands: tokenize, compare, evaluate, train, vectorize.
// Exit codes: 0 success / all rows match; 1 fixture mismatch; 2 usage or IO error.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "biotok/corpus.hpp"
#include "biotok/harness.hpp"
#include "biotok/metrics.hpp"
#include "biotok/normalize.hpp"
#include "biotok/profiles.hpp"
#include "biotok/rules.hpp"
#include "biotok/tagger.hpp"
#include "biotok/vectorize.hpp"
#include "biotok/whitespace.hpp"

using namespace biotok;
using ojson = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

using Strategy = std::function<TokenizedSentence(const std::string&)>;

// A strategy name is a live built-in ("whitespace", "ptb", ...), a rule-set
// JSON file, or a trained tagger model JSON file (recognized by its keys).
Strategy resolve_strategy(const std::string& name) {
  for (const auto& live : live_strategy_names())
    if (name == live)
      return [name](const std::string& text) { return tokenize_any(text, name); };
  std::ifstream probe(name, std::ios::binary);
  if (!probe) throw std::runtime_error("unknown profile \"" + name + "\" (not a built-in, and not a readable file)");
  nlohmann::json j = nlohmann::json::parse(probe, nullptr, false);
  if (j.is_object() && j.contains("weights")) {
    auto model = std::make_shared<TaggerModel>(load_model(name));
    return [model](const std::string& text) { return tokenize_tagged(text, *model); };
  }
  auto rs = std::make_shared<RuleSet>(load_ruleset(name));
  return [rs](const std::string& text) { return tokenize_rules(text, *rs); };
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

int cmd_tokenize(const std::string& text_arg, const std::string& in_path,
                 const std::string& profile, const std::string& format) {
  std::string text = text_arg;
  if (!in_path.empty()) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + in_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  TokenizedSentence ts = resolve_strategy(profile)(text);
  if (format == "json") {
    ojson j;
    j["profile"] = ts.profile;
    ojson toks = ojson::array();
    for (const auto& t : ts.tokens)
      toks.push_back({{"text", t.text}, {"start", t.start}, {"end", t.end}});
    j["tokens"] = toks;
    std::cout << j.dump(1) << "\n";
  } else {
    for (const auto& t : ts.tokens) std::cout << t.text << "\n";
  }
  return 0;
}

int cmd_compare(const std::string& corpus_path, const std::vector<std::string>& profile_names,
                const std::string& format, const std::string& out_path) {
  auto corpus = load_corpus(corpus_path);
  std::vector<std::pair<std::string, Strategy>> strategies;
  for (const auto& name : profile_names) strategies.push_back({name, resolve_strategy(name)});

  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> rows_by_label;
  for (const auto& [name, fn] : strategies) rows_by_label.push_back({name, {}});
  std::vector<std::pair<std::string, std::size_t>> per_sentence;  // id -> distinct outputs
  for (const auto& sent : corpus) {
    std::vector<std::vector<std::string>> outputs;
    for (std::size_t i = 0; i < strategies.size(); ++i) {
      auto texts = strategies[i].second(sent.text).texts();
      rows_by_label[i].second.push_back(texts);
      outputs.push_back(std::move(texts));
    }
    per_sentence.push_back({sent.id, distinct_outputs(outputs)});
  }
  SimilarityMatrix mat = jaccard_matrix(rows_by_label);

  std::string body;
  if (format == "json") {
    ojson j;
    ojson sentences = ojson::array();
    for (const auto& [id, n] : per_sentence)
      sentences.push_back({{"id", id}, {"unique_outputs", n}});
    j["sentences"] = sentences;
    ojson counts;
    for (const auto& [name, rows] : rows_by_label) {
      CountPair c = corpus_counts(rows);
      counts[name] = {c.unique, c.total};
    }
    j["corpus_counts"] = counts;
    j["jaccard"] = {{"labels", mat.labels}, {"values", mat.values}};
    body = j.dump(1) + "\n";
  } else {  // tsv (also the default text shape)
    body = "sentence";
    for (const auto& [name, fn] : strategies) body += "\t" + name;
    body += "\tunique_outputs\n";
    for (std::size_t si = 0; si < corpus.size(); ++si) {
      body += corpus[si].id;
      for (const auto& [name, rows] : rows_by_label) {
        CountPair c = token_counts(rows[si]);
        body += "\t" + std::to_string(c.unique) + "/" + std::to_string(c.total);
      }
      body += "\t" + std::to_string(per_sentence[si].second) + "\n";
    }
    body += "corpus";
    for (const auto& [name, rows] : rows_by_label) {
      CountPair c = corpus_counts(rows);
      body += "\t" + std::to_string(c.unique) + "/" + std::to_string(c.total);
    }
    body += "\t\n# jaccard\n";
    for (const auto& l : mat.labels) body += "\t" + l;
    body += "\n";
    for (std::size_t i = 0; i < mat.labels.size(); ++i) {
      body += mat.labels[i];
      for (double v : mat.values[i]) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "\t%.3f", v);
        body += buf;
      }
      body += "\n";
    }
  }
  if (!out_path.empty())
    write_file(out_path, body);
  else
    std::cout << body;
  return 0;
}

int cmd_evaluate(const std::string& corpus_path, const std::string& fixtures_path,
                 const std::string& targets_path, const std::string& deviations_path,
                 std::vector<std::string> profile_names, const std::string& format,
                 const std::string& out_path) {
  auto corpus = load_corpus(corpus_path);
  auto fixtures = load_fixtures(fixtures_path);
  std::optional<Targets> targets;
  if (!targets_path.empty()) targets = load_targets(targets_path);
  DeviationList deviations;
  if (!deviations_path.empty()) deviations = load_deviations(deviations_path);
  if (profile_names.empty()) profile_names = live_strategy_names();

  EvalReport report = run_evaluation(corpus, fixtures, profile_names, targets, deviations);

  if (!out_path.empty()) {
    write_file(out_path + ".json", report_json(report));
    write_file(out_path + ".tsv", report_tsv(report));
  }
  if (format == "json")
    std::cout << report_json(report);
  else if (format == "tsv")
    std::cout << report_tsv(report);
  else
    std::cout << report_text(report);
  return report.all_rows_match() ? 0 : 1;
}

int cmd_train(const std::string& corpus_path, const std::string& silver_profile, int window,
              int epochs, std::uint64_t seed, const std::string& out_path) {
  auto corpus = load_corpus(corpus_path);
  if (corpus.empty()) throw std::runtime_error("corpus is empty: " + corpus_path);
  TrainOptions opts;
  opts.window = window;
  opts.epochs = epochs;
  opts.seed = seed;
  opts.silver_profile = silver_profile;
  TaggerModel model = train_tagger(corpus, opts);
  save_model(model, out_path);
  TaggerEval ev = evaluate_tagger(model, corpus, silver_profile);
  char buf[128];
  std::snprintf(buf, sizeof buf, "features=%zu tag_accuracy=%.4f token_f1=%.4f\n",
                model.feature_names.size(), ev.tag_accuracy, ev.token_f1);
  std::cout << buf;
  return 0;
}

int cmd_vectorize(const std::string& corpus_path, const std::string& profile,
                  const std::string& mode, std::size_t window, const std::string& out_path) {
  auto corpus = load_corpus(corpus_path);
  Strategy strategy = resolve_strategy(profile);
  std::vector<std::vector<std::string>> docs;
  for (const auto& sent : corpus) docs.push_back(strategy(sent.text).texts());
  Vocabulary vocab = build_vocab(docs);
  if (mode == "dtm") {
    write_coo(build_dtm(docs, vocab), out_path);
  } else {
    write_coo(build_tcm(docs, vocab, window), out_path);
  }
  std::cout << "vocabulary=" << vocab.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-strategy tokenizer toolkit for biomedical text"};
  app.set_version_flag("--version", std::string("biotok ") + kVersion);
  app.require_subcommand(1);

  // tokenize
  auto* tok = app.add_subcommand("tokenize", "tokenize text or a file with one strategy");
  std::string tok_text, tok_in, tok_profile = "whitespace", tok_format = "lines";
  tok->add_option("text", tok_text, "text to tokenize");
  tok->add_option("--in", tok_in, "read text from this file instead");
  tok->add_option("--profile", tok_profile, "strategy name, rule-set file, or model file");
  tok->add_option("--format", tok_format)->check(CLI::IsMember({"lines", "json"}));

  // compare
  auto* cmp = app.add_subcommand("compare", "run several strategies over a corpus and compare");
  std::string cmp_corpus, cmp_profiles, cmp_format = "tsv", cmp_out;
  cmp->add_option("--corpus", cmp_corpus)->required();
  cmp->add_option("--profiles", cmp_profiles, "comma-separated strategy list")->required();
  cmp->add_option("--format", cmp_format)->check(CLI::IsMember({"tsv", "json"}));
  cmp->add_option("--out", cmp_out, "write the table here instead of stdout");

  // evaluate
  auto* ev = app.add_subcommand("evaluate", "diff strategies against golden fixtures");
  std::string ev_corpus, ev_fixtures, ev_targets, ev_deviations, ev_profiles,
      ev_format = "text", ev_out;
  ev->add_option("--corpus", ev_corpus)->required();
  ev->add_option("--fixtures", ev_fixtures)->required();
  ev->add_option("--targets", ev_targets, "reference count/similarity tables");
  ev->add_option("--known-deviations", ev_deviations, "rows excused from the gate (JSONL)");
  ev->add_option("--profiles", ev_profiles, "comma-separated list (default: all live)");
  ev->add_option("--format", ev_format)->check(CLI::IsMember({"text", "json", "tsv"}));
  ev->add_option("--out", ev_out, "write <out>.json and <out>.tsv reports");

  // train
  auto* tr = app.add_subcommand("train", "train the character tagger on silver labels");
  std::string tr_corpus, tr_profile = "biomed", tr_out;
  int tr_window = 3, tr_epochs = 10;
  std::uint64_t tr_seed = 7;
  tr->add_option("--corpus", tr_corpus)->required();
  tr->add_option("--profile", tr_profile, "rule profile that provides silver labels");
  tr->add_option("--window", tr_window)->check(CLI::PositiveNumber);
  tr->add_option("--epochs", tr_epochs)->check(CLI::PositiveNumber);
  tr->add_option("--seed", tr_seed);
  tr->add_option("--out", tr_out, "model file to write")->required();

  // vectorize
  auto* vec = app.add_subcommand("vectorize", "export document-term or co-occurrence counts");
  std::string vec_corpus, vec_profile = "whitespace", vec_mode = "dtm", vec_out;
  std::size_t vec_window = 2;
  vec->add_option("--corpus", vec_corpus)->required();
  vec->add_option("--profile", vec_profile);
  vec->add_option("--mode", vec_mode)->check(CLI::IsMember({"dtm", "tcm"}));
  vec->add_option("--window", vec_window, "co-occurrence window (tcm)");
  vec->add_option("--out", vec_out, "matrix file to write (vocab sidecar: <out>.vocab)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help/--version exit 0; any parse error is usage
  }

  try {
    if (tok->parsed()) return cmd_tokenize(tok_text, tok_in, tok_profile, tok_format);
    if (cmp->parsed()) {
      auto profiles = split_list(cmp_profiles);
      if (profiles.size() < 2) {
        std::cerr << "compare needs at least two profiles\n";
        return 2;
      }
      return cmd_compare(cmp_corpus, profiles, cmp_format, cmp_out);
    }
    if (ev->parsed())
      return cmd_evaluate(ev_corpus, ev_fixtures, ev_targets, ev_deviations,
                          split_list(ev_profiles), ev_format, ev_out);
    if (tr->parsed()) return cmd_train(tr_corpus, tr_profile, tr_window, tr_epochs, tr_seed, tr_out);
    if (vec->parsed()) {
      if (vec_mode == "tcm" && vec_window < 1) {
        std::cerr << "tcm requires --window >= 1\n";
        return 2;
      }
      return cmd_vectorize(vec_corpus, vec_profile, vec_mode, vec_window, vec_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
