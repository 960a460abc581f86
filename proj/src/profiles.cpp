#include "biotok/profiles.hpp"

#include <map>
#include <stdexcept>

#include "biotok/whitespace.hpp"

namespace biotok {

namespace {

// Shared pieces. The "&" prefix covers entity fragments like "&lt"; the number
// pattern protects comma-grouped integers ("26,003") from comma splitting.
const char* kBracketPrefix = R"(^[(\[&])";
const char* kNumberGroups = R"(^[0-9]{1,3}(,[0-9]{3})+$)";
const char* kUrl = R"(^[A-Za-z][A-Za-z0-9+.-]*://[^\s]+$)";
// A parenthesized modifier glued to a hyphenated word, e.g. "Ca(2+)-regulated",
// "(IL-1)-responsive": kept whole rather than split at the brackets.
const char* kParenCompound = R"(^[^\s()]*\([^\s()]+\)-[A-Za-z][^\s]*$)";
const char* kPossessive = R"('[sS]$)";
// Measurement units glued to a number ("2.6kb" -> "2.6 kb"); group 1 is the
// stripped span, the leading digit is context.
const char* kUnitSuffix = R"([0-9](kb|mb|gb|km|kg|mg|ml)$)";

std::map<std::string, std::vector<std::string>> abbreviations(bool with_hour,
                                                              bool with_enum) {
  std::map<std::string, std::vector<std::string>> sc = {
      {"Dr.", {"Dr."}}, {"S.", {"S."}}, {"i.e.", {"i.e."}}};
  if (with_hour) sc["h."] = {"h."};
  if (with_enum) sc["1."] = {"1."};
  return sc;
}

RuleSet make_ptb() {
  RuleSet rs;
  rs.name = "ptb";
  rs.special_cases = abbreviations(/*with_hour=*/false, /*with_enum=*/true);
  rs.protected_patterns = {kNumberGroups};
  rs.prefixes = {kBracketPrefix};
  rs.suffixes = {kPossessive, R"([.,:;%?!)\]]$)"};
  rs.infixes = {R"([()\[\]])", R"(:)"};
  return rs;
}

RuleSet make_web() {
  RuleSet rs;
  rs.name = "web";
  rs.special_cases = abbreviations(/*with_hour=*/true, /*with_enum=*/false);
  rs.protected_patterns = {kUrl, kNumberGroups, kParenCompound};
  rs.prefixes = {kBracketPrefix};
  rs.suffixes = {kPossessive, R"([.,:;%?!)\]+]$)", kUnitSuffix};
  rs.infixes = {R"([()\[\]])", R"([0-9](-)[0-9])"};
  return rs;
}

RuleSet make_biomed() {
  RuleSet rs;
  rs.name = "biomed";
  rs.special_cases = abbreviations(/*with_hour=*/true, /*with_enum=*/false);
  rs.protected_patterns = {kUrl, kNumberGroups};
  rs.prefixes = {kBracketPrefix};
  rs.suffixes = {kPossessive, R"([.,:;%?!)\]+]$)", kUnitSuffix};
  // Hyphens split between letters and after digits ("x-ray", "2-year",
  // "IL-1-induced" at its second hyphen) but not before a bare digit
  // ("IL-10" stays whole); slashes split only between letters ("U/ml",
  // not "1/2").
  rs.infixes = {R"([A-Za-z](-)[A-Za-z])", R"([0-9](-)[A-Za-z0-9])",
                R"([A-Za-z](/)[A-Za-z])"};
  return rs;
}

RuleSet make_r_basic() {
  RuleSet rs;
  rs.name = "r_basic";
  rs.special_cases = abbreviations(/*with_hour=*/false, /*with_enum=*/true);
  rs.prefixes = {kBracketPrefix};
  rs.suffixes = {kPossessive, R"([.,:;%?!)\]]$)"};
  rs.infixes = {R"([()\[\]])", R"(:)", R"(,)"};
  return rs;
}

const std::map<std::string, RuleSet>& builtins() {
  static const std::map<std::string, RuleSet> m = [] {
    std::map<std::string, RuleSet> b;
    for (RuleSet rs : {make_ptb(), make_web(), make_biomed(), make_r_basic()}) {
      rs.compile();
      b.emplace(rs.name, std::move(rs));
    }
    return b;
  }();
  return m;
}

}  // namespace

const std::vector<std::string>& builtin_profile_names() {
  static const std::vector<std::string> names = {"ptb", "web", "biomed", "r_basic"};
  return names;
}

RuleSet builtin_profile(const std::string& name) {
  const auto& b = builtins();
  auto it = b.find(name);
  if (it == b.end()) throw std::invalid_argument("unknown built-in profile \"" + name + "\"");
  return it->second;
}

const std::vector<std::string>& live_strategy_names() {
  static const std::vector<std::string> names = {"whitespace", "ptb", "web", "biomed",
                                                 "r_basic"};
  return names;
}

TokenizedSentence tokenize_any(const std::string& text, const std::string& strategy) {
  if (strategy == "whitespace") return tokenize_whitespace(text);
  return tokenize_rules(text, builtin_profile(strategy));
}

}  // namespace biotok
