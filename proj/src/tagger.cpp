#include "biotok/tagger.hpp"

#include <array>
#include <fstream>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "biotok/profiles.hpp"
#include "biotok/text.hpp"

namespace biotok {

char tag_letter(CharTag t) { return "BIEO"[static_cast<int>(t)]; }

CharTag tag_from_letter(char c) {
  switch (c) {
    case 'B': return CharTag::B;
    case 'I': return CharTag::I;
    case 'E': return CharTag::E;
    case 'O': return CharTag::O;
  }
  throw std::invalid_argument(std::string("unknown tag letter '") + c + "'");
}

namespace {

// Sentence as code points with the byte offset of each (plus the end offset).
struct Decoded {
  std::u32string chars;
  std::vector<std::size_t> offsets;  // chars.size() + 1 entries
};

Decoded decode_all(const std::string& text) {
  Decoded d;
  std::size_t pos = 0;
  while (pos < text.size()) {
    d.offsets.push_back(pos);
    d.chars.push_back(decode_cp(text, pos));
  }
  d.offsets.push_back(text.size());
  return d;
}

std::string cp_to_utf8(const std::string& text, const Decoded& d, std::size_t i) {
  return text.substr(d.offsets[i], d.offsets[i + 1] - d.offsets[i]);
}

}  // namespace

std::vector<CharTag> derive_tags(const std::string& text, const TokenizedSentence& ts) {
  validate_tokenization(text, ts, /*require_full_coverage=*/false);
  Decoded d = decode_all(text);
  std::vector<CharTag> tags(d.chars.size(), CharTag::O);
  std::size_t ci = 0;
  for (const Token& t : ts.tokens) {
    while (d.offsets[ci] < t.start) ++ci;
    std::size_t first = ci;
    while (d.offsets[ci + 1] < t.end) ++ci;  // ci = last cp of the token
    for (std::size_t k = first; k <= ci; ++k) {
      if (k == first)
        tags[k] = CharTag::B;
      else if (k == ci)
        tags[k] = CharTag::E;
      else
        tags[k] = CharTag::I;
    }
    ++ci;
  }
  return tags;
}

TokenizedSentence decode_tags(const std::string& text, const std::vector<CharTag>& tags) {
  Decoded d = decode_all(text);
  if (tags.size() != d.chars.size())
    throw std::invalid_argument("tag sequence length " + std::to_string(tags.size()) +
                                " does not match code point count " +
                                std::to_string(d.chars.size()));
  TokenizedSentence ts;
  ts.profile = "tagged";
  // open < 0: no token in progress. last_solid: index of the last non-O char of
  // the open token; trailing O chars are trimmed when whitespace or the end of
  // text forces a close, but O between solid chars is kept inside the token.
  std::ptrdiff_t open = -1, last_solid = -1;
  auto emit = [&](std::size_t first, std::size_t last) {
    std::size_t b = d.offsets[first], e = d.offsets[last + 1];
    ts.tokens.push_back({text.substr(b, e - b), b, e});
  };
  for (std::size_t i = 0; i < d.chars.size(); ++i) {
    bool ws = is_space_cp(d.chars[i]);
    if (ws) {
      if (open >= 0) emit(open, last_solid);
      open = -1;
      continue;
    }
    switch (tags[i]) {
      case CharTag::B:
        if (open >= 0) emit(open, last_solid);
        open = static_cast<std::ptrdiff_t>(i);
        last_solid = open;
        break;
      case CharTag::I:
        if (open < 0) open = static_cast<std::ptrdiff_t>(i);
        last_solid = static_cast<std::ptrdiff_t>(i);
        break;
      case CharTag::E:
        if (open < 0) open = static_cast<std::ptrdiff_t>(i);
        emit(open, i);
        open = -1;
        break;
      case CharTag::O:
        break;  // outside, or a gap inside an open token
    }
  }
  if (open >= 0) emit(open, last_solid);
  validate_tokenization(text, ts, /*require_full_coverage=*/false);
  return ts;
}

namespace {

constexpr std::size_t kTags = 4;

// Feature strings for position i. Generation order is fixed; the vocabulary is
// filled in this order over the corpus before any shuffling, so feature ids do
// not depend on the seed. Besides the windowed identity/class features, each
// char carries local identity n-grams and coarse chunk geometry (distance to
// the enclosing non-whitespace run's edges, URL-scheme flag): token boundaries
// like suffix punctuation or protected URLs depend on the chunk, not only on
// a +-window neighborhood.
void features_at(const std::string& text, const Decoded& d, int window, std::size_t i,
                 std::vector<std::string>& out) {
  out.clear();
  out.push_back("bias");
  std::ptrdiff_t n = static_cast<std::ptrdiff_t>(d.chars.size());
  auto cls = [&](std::ptrdiff_t p) -> char {
    if (p < 0) return '^';
    if (p >= n) return '$';
    return char_class(d.chars[static_cast<std::size_t>(p)]);
  };
  auto ident = [&](std::ptrdiff_t p) -> std::string {
    if (p < 0) return "^";
    if (p >= n) return "$";
    return cp_to_utf8(text, d, static_cast<std::size_t>(p));
  };
  std::ptrdiff_t pi = static_cast<std::ptrdiff_t>(i);
  for (int dd = -window; dd <= window; ++dd) {
    out.push_back("i" + std::to_string(dd) + ":" + ident(pi + dd));
    out.push_back("k" + std::to_string(dd) + ":" + cls(pi + dd));
  }
  for (int dd = -window; dd < window; ++dd) {
    out.push_back("b" + std::to_string(dd) + ":" + std::string{cls(pi + dd), cls(pi + dd + 1)});
  }
  out.push_back("jL:" + ident(pi - 1) + ident(pi));
  out.push_back("jR:" + ident(pi) + ident(pi + 1));
  out.push_back("t:" + ident(pi - 1) + ident(pi) + ident(pi + 1));

  std::ptrdiff_t cs = pi, ce = pi;  // enclosing chunk [cs, ce]
  while (cs > 0 && cls(cs - 1) != 'S' && cls(cs - 1) != '^') --cs;
  while (ce + 1 < n && cls(ce + 1) != 'S') ++ce;
  auto bucket = [](std::ptrdiff_t v) {
    return v >= 3 ? std::string("3+") : std::to_string(v);
  };
  out.push_back("cs:" + bucket(pi - cs));
  out.push_back("ce:" + bucket(ce - pi));
  for (std::ptrdiff_t p = cs; p + 2 <= ce; ++p) {
    if (d.chars[static_cast<std::size_t>(p)] == U':' &&
        d.chars[static_cast<std::size_t>(p + 1)] == U'/' &&
        d.chars[static_cast<std::size_t>(p + 2)] == U'/') {
      out.push_back("curl");
      break;
    }
  }
}

std::array<double, kTags> score_tags(const TaggerModel& m,
                                     const std::vector<std::string>& feats) {
  std::array<double, kTags> s{};
  for (const auto& f : feats) {
    auto it = m.feature_index.find(f);
    if (it == m.feature_index.end()) continue;
    const double* w = &m.weights[it->second * kTags];
    for (std::size_t t = 0; t < kTags; ++t) s[t] += w[t];
  }
  return s;
}

// Deterministic Fisher-Yates (does not depend on the standard library's
// std::shuffle implementation).
void shuffle_indices(std::vector<std::size_t>& idx, std::mt19937_64& rng) {
  for (std::size_t i = idx.size(); i > 1; --i)
    std::swap(idx[i - 1], idx[rng() % i]);
}

}  // namespace

void TaggerModel::reindex() {
  feature_index.clear();
  feature_index.reserve(feature_names.size());
  for (std::size_t i = 0; i < feature_names.size(); ++i) feature_index[feature_names[i]] = i;
}

CharTag TaggerModel::predict(const std::u32string& chars, std::size_t i) const {
  // Rebuild the text view for identity features of the neighborhood only.
  std::string text;
  Decoded d;
  d.chars = chars;
  std::size_t pos = 0;
  for (char32_t cp : chars) {
    d.offsets.push_back(pos);
    // encode cp
    char buf[4];
    std::size_t len;
    if (cp < 0x80) {
      buf[0] = static_cast<char>(cp);
      len = 1;
    } else if (cp < 0x800) {
      buf[0] = static_cast<char>(0xC0 | (cp >> 6));
      buf[1] = static_cast<char>(0x80 | (cp & 0x3F));
      len = 2;
    } else if (cp < 0x10000) {
      buf[0] = static_cast<char>(0xE0 | (cp >> 12));
      buf[1] = static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      buf[2] = static_cast<char>(0x80 | (cp & 0x3F));
      len = 3;
    } else {
      buf[0] = static_cast<char>(0xF0 | (cp >> 18));
      buf[1] = static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      buf[2] = static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      buf[3] = static_cast<char>(0x80 | (cp & 0x3F));
      len = 4;
    }
    text.append(buf, len);
    pos += len;
  }
  d.offsets.push_back(pos);
  std::vector<std::string> feats;
  features_at(text, d, window, i, feats);
  auto s = score_tags(*this, feats);
  std::size_t best = 0;
  for (std::size_t t = 1; t < kTags; ++t)
    if (s[t] > s[best]) best = t;
  return static_cast<CharTag>(best);
}

std::vector<CharTag> TaggerModel::tag_constrained(const std::string& text) const {
  Decoded d = decode_all(text);
  std::vector<CharTag> tags(d.chars.size(), CharTag::O);
  std::vector<std::string> feats;
  for (std::size_t i = 0; i < d.chars.size(); ++i) {
    if (is_space_cp(d.chars[i])) continue;  // whitespace is structurally O
    features_at(text, d, window, i, feats);
    auto s = score_tags(*this, feats);
    std::size_t best = 0;  // argmax over {B, I, E} only
    for (std::size_t t = 1; t < kTags - 1; ++t)
      if (s[t] > s[best]) best = t;
    tags[i] = static_cast<CharTag>(best);
  }
  return tags;
}

TaggerModel train_tagger(const std::vector<Sentence>& sentences, const TrainOptions& opts) {
  if (sentences.empty()) throw std::invalid_argument("cannot train on an empty corpus");
  if (opts.epochs <= 0) throw std::invalid_argument("epochs must be >= 1");
  if (opts.window < 1) throw std::invalid_argument("window must be >= 1");

  struct Example {
    std::string text;
    Decoded d;
    std::vector<CharTag> gold;
  };
  std::vector<Example> examples;
  for (const auto& s : sentences) {
    Example ex;
    ex.text = s.text;
    ex.d = decode_all(s.text);
    ex.gold = derive_tags(s.text, tokenize_any(s.text, opts.silver_profile));
    examples.push_back(std::move(ex));
  }

  TaggerModel m;
  m.window = opts.window;
  m.seed = opts.seed;
  m.epochs = opts.epochs;

  // Feature vocabulary in corpus order, before shuffling: ids are seed-independent.
  std::vector<std::vector<std::vector<std::size_t>>> feat_ids(examples.size());
  {
    std::vector<std::string> feats;
    for (std::size_t e = 0; e < examples.size(); ++e) {
      const Example& ex = examples[e];
      feat_ids[e].resize(ex.d.chars.size());
      for (std::size_t i = 0; i < ex.d.chars.size(); ++i) {
        if (is_space_cp(ex.d.chars[i])) continue;
        features_at(ex.text, ex.d, m.window, i, feats);
        for (const auto& f : feats) {
          auto [it, inserted] = m.feature_index.emplace(f, m.feature_names.size());
          if (inserted) m.feature_names.push_back(f);
          feat_ids[e][i].push_back(it->second);
        }
      }
    }
  }

  // Averaged perceptron with exact integer accumulators: w holds the current
  // weights, u the step-weighted update sums; the average (w*T - u)/T is taken
  // once at the end, so training is bit-reproducible.
  std::vector<std::int64_t> w(m.feature_names.size() * kTags, 0);
  std::vector<std::int64_t> u(m.feature_names.size() * kTags, 0);
  std::int64_t t_step = 1;

  std::mt19937_64 rng(opts.seed);
  std::vector<std::size_t> order(examples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (int epoch = 0; epoch < opts.epochs; ++epoch) {
    shuffle_indices(order, rng);
    for (std::size_t oi : order) {
      const Example& ex = examples[oi];
      for (std::size_t i = 0; i < ex.d.chars.size(); ++i) {
        if (is_space_cp(ex.d.chars[i])) continue;  // forced O, never an update
        const auto& ids = feat_ids[oi][i];
        std::array<std::int64_t, kTags> s{};
        for (std::size_t f : ids)
          for (std::size_t t = 0; t < kTags; ++t) s[t] += w[f * kTags + t];
        std::size_t pred = 0;  // constrained argmax, as at decode time
        for (std::size_t t = 1; t < kTags - 1; ++t)
          if (s[t] > s[pred]) pred = t;
        auto gold = static_cast<std::size_t>(ex.gold[i]);
        if (pred != gold) {
          for (std::size_t f : ids) {
            w[f * kTags + gold] += 1;
            w[f * kTags + pred] -= 1;
            u[f * kTags + gold] += t_step;
            u[f * kTags + pred] -= t_step;
          }
        }
        ++t_step;
      }
    }
  }

  m.weights.resize(w.size());
  const double T = static_cast<double>(t_step);
  for (std::size_t i = 0; i < w.size(); ++i)
    m.weights[i] = (static_cast<double>(w[i]) * T - static_cast<double>(u[i])) / T;
  return m;
}

TokenizedSentence tokenize_tagged(const std::string& text, const TaggerModel& model) {
  TokenizedSentence ts = decode_tags(text, model.tag_constrained(text));
  ts.profile = "tagged";
  return ts;
}

TaggerEval evaluate_tagger(const TaggerModel& model, const std::vector<Sentence>& sentences,
                           const std::string& silver_profile) {
  TaggerEval ev;
  std::size_t correct = 0;
  for (const auto& s : sentences) {
    TokenizedSentence gold_ts = tokenize_any(s.text, silver_profile);
    std::vector<CharTag> gold = derive_tags(s.text, gold_ts);
    std::vector<CharTag> pred = model.tag_constrained(s.text);
    for (std::size_t i = 0; i < gold.size(); ++i)
      if (gold[i] == pred[i]) ++correct;
    ev.chars += gold.size();

    TokenizedSentence pred_ts = decode_tags(s.text, pred);
    std::set<std::pair<std::size_t, std::size_t>> gold_spans, pred_spans;
    for (const auto& t : gold_ts.tokens) gold_spans.insert({t.start, t.end});
    for (const auto& t : pred_ts.tokens) pred_spans.insert({t.start, t.end});
    ev.gold_tokens += gold_spans.size();
    ev.predicted_tokens += pred_spans.size();
    for (const auto& sp : pred_spans) ev.matched_tokens += gold_spans.count(sp);
  }
  ev.tag_accuracy = ev.chars ? static_cast<double>(correct) / static_cast<double>(ev.chars) : 1.0;
  std::size_t denom = ev.gold_tokens + ev.predicted_tokens;
  ev.token_f1 = denom ? 2.0 * static_cast<double>(ev.matched_tokens) / static_cast<double>(denom)
                      : 1.0;
  return ev;
}

void save_model(const TaggerModel& m, const std::string& path) {
  nlohmann::ordered_json j;
  j["window"] = m.window;
  j["feature_vocab"] = m.feature_names;
  j["weights"] = m.weights;
  j["metadata"] = {{"seed", m.seed}, {"epochs", m.epochs}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

TaggerModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw std::runtime_error(path + ": not a JSON object");
  TaggerModel m;
  m.window = j.at("window").get<int>();
  m.feature_names = j.at("feature_vocab").get<std::vector<std::string>>();
  m.weights = j.at("weights").get<std::vector<double>>();
  if (m.weights.size() != m.feature_names.size() * kTags)
    throw std::runtime_error(path + ": weights length does not match feature vocabulary");
  if (auto it = j.find("metadata"); it != j.end()) {
    m.seed = it->value("seed", std::uint64_t{0});
    m.epochs = it->value("epochs", 0);
  }
  m.reindex();
  return m;
}

}  // namespace biotok
