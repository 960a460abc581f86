#include "biotok/rules.hpp"

#include <fstream>
#include <regex>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "biotok/text.hpp"

namespace biotok {

struct RuleSet::Compiled {
  std::vector<std::regex> prefixes, suffixes, infixes, protected_patterns;
};

namespace {

std::regex compile_one(const std::string& pattern, const std::string& where) {
  try {
    return std::regex(pattern, std::regex::ECMAScript);
  } catch (const std::regex_error& e) {
    throw std::invalid_argument(where + " pattern \"" + pattern + "\" does not compile: " +
                                e.what());
  }
}

bool contains_ws(const std::string& s) {
  std::size_t pos = 0;
  while (pos < s.size())
    if (is_space_cp(decode_cp(s, pos))) return true;
  return false;
}

}  // namespace

void RuleSet::compile() {
  for (const auto& [key, pieces] : special_cases) {
    if (key.empty()) throw std::invalid_argument("special case with empty key");
    if (contains_ws(key))
      throw std::invalid_argument("special case key \"" + key + "\" contains whitespace");
    if (pieces.empty())
      throw std::invalid_argument("special case \"" + key + "\" has no tokens");
    std::string joined;
    for (const auto& p : pieces) joined += p;
    if (joined != key)
      throw std::invalid_argument("special case \"" + key +
                                  "\" tokens do not concatenate to the key");
  }
  for (const auto& p : prefixes)
    if (p.empty() || p.front() != '^')
      throw std::invalid_argument("prefix pattern \"" + p + "\" must start with ^");
  for (const auto& p : suffixes)
    if (p.empty() || p.back() != '$')
      throw std::invalid_argument("suffix pattern \"" + p + "\" must end with $");

  auto c = std::make_shared<Compiled>();
  for (const auto& p : prefixes) c->prefixes.push_back(compile_one(p, "prefix"));
  for (const auto& p : suffixes) c->suffixes.push_back(compile_one(p, "suffix"));
  for (const auto& p : infixes) c->infixes.push_back(compile_one(p, "infix"));
  for (const auto& p : protected_patterns)
    c->protected_patterns.push_back(compile_one(p, "protected"));
  impl = std::move(c);
}

bool RuleSet::compiled() const { return impl != nullptr; }

namespace {

using SIter = std::string::const_iterator;

// Span (relative to the searched range) stripped by a match: capture group 1
// when present, else the whole match.
struct StripSpan {
  std::size_t begin = 0, len = 0;
};

bool search_strip(const std::regex& re, SIter first, SIter last, StripSpan& out) {
  std::smatch m;
  if (!std::regex_search(first, last, m, re)) return false;
  int g = m.size() > 1 && m[1].matched ? 1 : 0;
  out.begin = static_cast<std::size_t>(m.position(g));
  out.len = static_cast<std::size_t>(m.length(g));
  return true;
}

// Leftmost infix split span with nonzero width; zero-width matches are skipped.
bool search_infix(const std::regex& re, const std::string& text, std::size_t from,
                  std::size_t end, StripSpan& out) {
  while (from < end) {
    std::smatch m;
    if (!std::regex_search(text.cbegin() + from, text.cbegin() + end, m, re)) return false;
    int g = m.size() > 1 && m[1].matched ? 1 : 0;
    std::size_t gbeg = from + static_cast<std::size_t>(m.position(g));
    std::size_t glen = static_cast<std::size_t>(m.length(g));
    if (glen > 0) {
      out.begin = gbeg;
      out.len = glen;
      return true;
    }
    from = gbeg + 1;
  }
  return false;
}

struct ChunkRun {
  const std::string& text;
  const RuleSet& rs;
  std::vector<Token>* out;
  RuleTrace* trace;

  std::vector<Token> prefix_toks, suffix_toks_rev, core_toks;
  std::size_t s, e;

  void record(const std::string& kind, const std::string& pattern) {
    if (!trace) return;
    RuleStep step{kind, pattern, {}};
    for (const auto& t : prefix_toks) step.pieces.push_back(t.text);
    if (!core_toks.empty())
      for (const auto& t : core_toks) step.pieces.push_back(t.text);
    else if (s < e)
      step.pieces.push_back(text.substr(s, e - s));
    for (auto it = suffix_toks_rev.rbegin(); it != suffix_toks_rev.rend(); ++it)
      step.pieces.push_back(it->text);
    trace->steps.push_back(std::move(step));
  }

  Token tok(std::size_t b, std::size_t n) const { return {text.substr(b, n), b, b + n}; }

  // Returns true if the core was resolved as a special case or protected chunk.
  bool core_is_final() {
    std::string core = text.substr(s, e - s);
    if (auto it = rs.special_cases.find(core); it != rs.special_cases.end()) {
      std::size_t b = s;
      for (const auto& piece : it->second) {
        core_toks.push_back(tok(b, piece.size()));
        b += piece.size();
      }
      record("special", core);
      return true;
    }
    for (std::size_t i = 0; i < rs.impl->protected_patterns.size(); ++i) {
      if (std::regex_match(core, rs.impl->protected_patterns[i])) {
        core_toks.push_back(tok(s, e - s));
        record("protected", rs.protected_patterns[i]);
        return true;
      }
    }
    return false;
  }

  void run(std::size_t cs, std::size_t ce) {
    s = cs;
    e = ce;
    bool finalized = false;
    while (s < e) {
      if (core_is_final()) {
        finalized = true;
        break;
      }
      bool stripped = false;
      for (std::size_t i = 0; i < rs.impl->prefixes.size() && !stripped; ++i) {
        StripSpan sp;
        if (search_strip(rs.impl->prefixes[i], text.cbegin() + s, text.cbegin() + e, sp) &&
            sp.begin == 0 && sp.len > 0) {
          prefix_toks.push_back(tok(s, sp.len));
          s += sp.len;
          record("prefix", rs.prefixes[i]);
          stripped = true;
        }
      }
      if (stripped) continue;
      for (std::size_t i = 0; i < rs.impl->suffixes.size() && !stripped; ++i) {
        StripSpan sp;
        if (search_strip(rs.impl->suffixes[i], text.cbegin() + s, text.cbegin() + e, sp) &&
            sp.begin + sp.len == e - s && sp.len > 0) {
          suffix_toks_rev.push_back(tok(e - sp.len, sp.len));
          e -= sp.len;
          record("suffix", rs.suffixes[i]);
          stripped = true;
        }
      }
      if (!stripped) break;
    }

    if (!finalized && s < e) {
      // Infix stage: leftmost match across patterns wins, list order breaks ties;
      // the scan resumes at the end of the split span, so match context may
      // overlap the next match (lookaround emulation via capture groups).
      std::size_t pos = s;
      while (pos < e) {
        bool have = false;
        StripSpan best;
        std::size_t best_pat = 0;
        for (std::size_t i = 0; i < rs.impl->infixes.size(); ++i) {
          StripSpan sp;
          if (search_infix(rs.impl->infixes[i], text, pos, e, sp) &&
              (!have || sp.begin < best.begin)) {
            best = sp;
            best_pat = i;
            have = true;
          }
        }
        if (!have) break;
        if (best.begin > pos) core_toks.push_back(tok(pos, best.begin - pos));
        core_toks.push_back(tok(best.begin, best.len));
        pos = best.begin + best.len;
        record("infix", rs.infixes[best_pat]);
      }
      if (pos < e) core_toks.push_back(tok(pos, e - pos));
    }

    for (auto& t : prefix_toks) out->push_back(std::move(t));
    for (auto& t : core_toks) out->push_back(std::move(t));
    for (auto it = suffix_toks_rev.rbegin(); it != suffix_toks_rev.rend(); ++it)
      out->push_back(std::move(*it));
  }
};

void require_compiled(const RuleSet& rs) {
  if (!rs.compiled())
    throw std::logic_error("rule set \"" + rs.name + "\" used before compile()");
}

}  // namespace

TokenizedSentence tokenize_rules(const std::string& text, const RuleSet& rs) {
  require_compiled(rs);
  TokenizedSentence ts;
  ts.profile = rs.name;
  std::size_t pos = 0;
  std::size_t run_start = 0;
  bool in_chunk = false;
  auto flush = [&](std::size_t end) {
    if (!in_chunk) return;
    ChunkRun run{text, rs, &ts.tokens, nullptr};
    run.run(run_start, end);
    in_chunk = false;
  };
  while (pos < text.size()) {
    std::size_t start = pos;
    bool ws = is_space_cp(decode_cp(text, pos));
    if (ws) {
      flush(start);
    } else if (!in_chunk) {
      run_start = start;
      in_chunk = true;
    }
  }
  flush(text.size());
  validate_tokenization(text, ts, /*require_full_coverage=*/true);
  return ts;
}

RuleTrace trace_chunk(const std::string& chunk, const RuleSet& rs) {
  require_compiled(rs);
  if (chunk.empty()) throw std::invalid_argument("trace_chunk: empty chunk");
  if (contains_ws(chunk))
    throw std::invalid_argument("trace_chunk: chunk contains whitespace");
  RuleTrace trace;
  trace.chunk = chunk;
  std::vector<Token> toks;
  ChunkRun run{chunk, rs, &toks, &trace};
  run.run(0, chunk.size());
  for (const auto& t : toks) trace.pieces.push_back(t.text);
  return trace;
}

using ojson = nlohmann::ordered_json;

RuleSet load_ruleset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  ojson j = ojson::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw std::runtime_error(path + ": not a JSON object");
  RuleSet rs;
  rs.name = j.value("name", std::string());
  if (rs.name.empty()) throw std::runtime_error(path + ": missing \"name\"");
  auto get_list = [&](const char* key) {
    std::vector<std::string> v;
    if (auto it = j.find(key); it != j.end()) {
      if (!it->is_array()) throw std::runtime_error(path + ": \"" + key + "\" must be an array");
      for (const auto& s : *it) v.push_back(s.get<std::string>());
    }
    return v;
  };
  rs.prefixes = get_list("prefixes");
  rs.suffixes = get_list("suffixes");
  rs.infixes = get_list("infixes");
  rs.protected_patterns = get_list("protected");
  if (auto it = j.find("special_cases"); it != j.end()) {
    if (!it->is_object())
      throw std::runtime_error(path + ": \"special_cases\" must be an object");
    for (const auto& [key, val] : it->items())
      rs.special_cases[key] = val.get<std::vector<std::string>>();
  }
  rs.compile();
  return rs;
}

void save_ruleset(const RuleSet& rs, const std::string& path) {
  ojson j;
  j["name"] = rs.name;
  j["prefixes"] = rs.prefixes;
  j["suffixes"] = rs.suffixes;
  j["infixes"] = rs.infixes;
  ojson sc = ojson::object();
  for (const auto& [key, pieces] : rs.special_cases) sc[key] = pieces;
  j["special_cases"] = sc;
  j["protected"] = rs.protected_patterns;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace biotok
