#include "biotok/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "biotok/profiles.hpp"

namespace biotok {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

Targets load_targets(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw std::runtime_error(path + ": not a JSON object");
  Targets t;
  t.profile_order = j.at("profile_order").get<std::vector<std::string>>();
  if (auto it = j.find("columns"); it != j.end())
    for (const auto& [k, v] : it->items()) t.column_labels[k] = v.get<std::string>();
  const json& t2 = j.at("table2");
  for (const auto& [ex, cell] : t2.at("examples").items()) {
    t.unique_outputs[ex] = cell.at("unique_outputs").get<std::size_t>();
    for (const auto& [prof, uv] : cell.at("counts").items())
      t.example_counts[ex][prof] = {uv.at(0).get<std::size_t>(), uv.at(1).get<std::size_t>()};
  }
  for (const auto& [prof, uv] : t2.at("corpus").items())
    t.corpus_counts[prof] = {uv.at(0).get<std::size_t>(), uv.at(1).get<std::size_t>()};
  const json& t3 = j.at("table3");
  t.table3.labels = t3.at("labels").get<std::vector<std::string>>();
  t.table3.values = t3.at("values").get<std::vector<std::vector<double>>>();
  return t;
}

DeviationList load_deviations(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  DeviationList out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed JSON");
    out.push_back({{j.at("sentence_id").get<std::string>(), j.at("profile").get<std::string>()},
                   j.value("reason", std::string())});
  }
  return out;
}

bool EvalReport::all_rows_match() const {
  std::size_t excused = deviations_allowed.size();
  return rows_matched + excused >= rows_total;
}

namespace {

std::string fmt_counts(const CountPair& c) {
  return std::to_string(c.unique) + "/" + std::to_string(c.total);
}

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

EvalReport run_evaluation(const std::vector<Sentence>& corpus,
                          const std::vector<GoldenFixture>& fixtures,
                          const std::vector<std::string>& live_profiles,
                          const std::optional<Targets>& targets,
                          const DeviationList& deviations) {
  EvalReport r;
  r.profiles = live_profiles;

  std::map<std::pair<std::string, std::string>, const GoldenFixture*> fx;
  for (const auto& f : fixtures) fx[{f.sentence_id, f.profile}] = &f;

  // Live diff: corpus order x requested profile order.
  for (const auto& sent : corpus) {
    for (const auto& prof : live_profiles) {
      RowResult row;
      row.sentence_id = sent.id;
      row.profile = prof;
      row.actual = tokenize_any(sent.text, prof).texts();
      row.actual_counts = token_counts(row.actual);
      auto it = fx.find({sent.id, prof});
      if (it == fx.end()) {
        ++r.gaps;
      } else {
        row.has_fixture = true;
        row.expected = it->second->tokens;
        row.match = row.expected == row.actual;
        ++r.rows_total;
        if (row.match) {
          ++r.rows_matched;
        } else {
          for (const auto& [key, reason] : deviations)
            if (key.first == sent.id && key.second == prof) {
              r.deviations_allowed.push_back(key);
              break;
            }
        }
      }
      r.rows.push_back(std::move(row));
    }
  }

  // Summary tables from the golden columns themselves.
  for (const auto& p : fixture_profiles()) {
    bool present = false;
    for (const auto& f : fixtures)
      if (f.profile == p) {
        present = true;
        break;
      }
    if (present) r.fixture_profiles.push_back(p);
  }
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> by_profile;
  for (const auto& p : r.fixture_profiles) by_profile.push_back({p, {}});
  for (const auto& sent : corpus) {
    std::vector<std::vector<std::string>> outputs;
    for (std::size_t pi = 0; pi < r.fixture_profiles.size(); ++pi) {
      auto it = fx.find({sent.id, r.fixture_profiles[pi]});
      if (it == fx.end()) continue;
      const auto& toks = it->second->tokens;
      r.example_counts[sent.id][r.fixture_profiles[pi]] = token_counts(toks);
      by_profile[pi].second.push_back(toks);
      outputs.push_back(toks);
    }
    if (!outputs.empty()) r.unique_outputs[sent.id] = distinct_outputs(outputs);
  }
  for (const auto& [p, rows] : by_profile) r.corpus_counts[p] = corpus_counts(rows);
  r.table3 = jaccard_matrix(by_profile);

  if (targets) {
    const Targets& t = *targets;
    auto check_counts = [&](const std::string& cell, const CountPair& expected,
                            const CountPair* computed) {
      ++r.table2_cells;
      if (computed && *computed == expected) {
        ++r.table2_cells_exact;
      } else {
        r.deltas.push_back({"table2", cell, fmt_counts(expected),
                            computed ? fmt_counts(*computed) : "missing"});
      }
    };
    for (const auto& [ex, profs] : t.example_counts) {
      for (const auto& [prof, expected] : profs) {
        const CountPair* computed = nullptr;
        if (auto ei = r.example_counts.find(ex); ei != r.example_counts.end())
          if (auto pi = ei->second.find(prof); pi != ei->second.end()) computed = &pi->second;
        check_counts(ex + "/" + prof, expected, computed);
      }
    }
    for (const auto& [ex, expected] : t.unique_outputs) {
      ++r.table2_cells;
      auto it = r.unique_outputs.find(ex);
      if (it != r.unique_outputs.end() && it->second == expected) {
        ++r.table2_cells_exact;
      } else {
        r.deltas.push_back({"table2", ex + "/unique_outputs", std::to_string(expected),
                            it == r.unique_outputs.end() ? "missing"
                                                         : std::to_string(it->second)});
      }
    }
    for (const auto& [prof, expected] : t.corpus_counts) {
      const CountPair* computed = nullptr;
      if (auto it = r.corpus_counts.find(prof); it != r.corpus_counts.end())
        computed = &it->second;
      check_counts("corpus/" + prof, expected, computed);
    }
    // Matrix cells compare within ±0.01 (the targets carry 3 decimals).
    for (std::size_t i = 0; i < t.table3.labels.size(); ++i) {
      for (std::size_t j = 0; j < t.table3.labels.size(); ++j) {
        ++r.table3_cells;
        double expected = t.table3.values[i][j];
        double computed = 0.0;
        bool found = true;
        try {
          computed = r.table3.at(t.table3.labels[i], t.table3.labels[j]);
        } catch (const std::invalid_argument&) {
          found = false;
        }
        double delta = found ? std::fabs(computed - expected) : 1.0;
        r.table3_max_abs_delta = std::max(r.table3_max_abs_delta, delta);
        if (found && delta <= 0.01 + 1e-9) {
          ++r.table3_cells_close;
        } else {
          r.deltas.push_back({"table3", t.table3.labels[i] + "~" + t.table3.labels[j],
                              fmt3(expected), found ? fmt3(computed) : "missing"});
        }
      }
    }
  }
  return r;
}

std::string report_json(const EvalReport& r) {
  ojson j;
  j["profiles"] = r.profiles;
  ojson summary;
  summary["rows_total"] = r.rows_total;
  summary["rows_matched"] = r.rows_matched;
  summary["gaps"] = r.gaps;
  summary["deviations_allowed"] = r.deviations_allowed.size();
  summary["all_match"] = r.all_rows_match();
  summary["table2_cells"] = r.table2_cells;
  summary["table2_cells_exact"] = r.table2_cells_exact;
  summary["table3_cells"] = r.table3_cells;
  summary["table3_cells_close"] = r.table3_cells_close;
  summary["table3_max_abs_delta"] = r.table3_max_abs_delta;
  j["summary"] = summary;

  ojson rows = ojson::array();
  for (const auto& row : r.rows) {
    ojson o;
    o["sentence_id"] = row.sentence_id;
    o["profile"] = row.profile;
    o["status"] = !row.has_fixture ? "gap" : row.match ? "match" : "mismatch";
    o["actual"] = row.actual;
    if (row.has_fixture && !row.match) o["expected"] = row.expected;
    o["unique"] = row.actual_counts.unique;
    o["total"] = row.actual_counts.total;
    rows.push_back(std::move(o));
  }
  j["rows"] = rows;

  ojson t2;
  ojson examples;
  for (const auto& [ex, profs] : r.example_counts) {
    ojson cell;
    cell["unique_outputs"] = r.unique_outputs.at(ex);
    ojson counts;
    for (const auto& p : r.fixture_profiles)
      if (auto it = profs.find(p); it != profs.end())
        counts[p] = {it->second.unique, it->second.total};
    cell["counts"] = counts;
    examples[ex] = cell;
  }
  t2["examples"] = examples;
  ojson corpus;
  for (const auto& p : r.fixture_profiles)
    if (auto it = r.corpus_counts.find(p); it != r.corpus_counts.end())
      corpus[p] = {it->second.unique, it->second.total};
  t2["corpus"] = corpus;
  j["table2"] = t2;

  ojson t3;
  t3["labels"] = r.table3.labels;
  t3["values"] = r.table3.values;
  j["table3"] = t3;

  ojson deltas = ojson::array();
  for (const auto& d : r.deltas)
    deltas.push_back({{"table", d.table},
                      {"cell", d.cell},
                      {"expected", d.expected},
                      {"computed", d.computed}});
  j["deltas"] = deltas;
  return j.dump(1) + "\n";
}

std::string report_tsv(const EvalReport& r) {
  std::string out;
  out += "# table2\nexample";
  for (const auto& p : r.fixture_profiles) out += "\t" + p;
  out += "\tunique_outputs\n";
  for (const auto& [ex, profs] : r.example_counts) {
    out += ex;
    for (const auto& p : r.fixture_profiles) {
      auto it = profs.find(p);
      out += "\t" + (it == profs.end() ? std::string("-") : fmt_counts(it->second));
    }
    out += "\t" + std::to_string(r.unique_outputs.at(ex)) + "\n";
  }
  out += "corpus";
  for (const auto& p : r.fixture_profiles) {
    auto it = r.corpus_counts.find(p);
    out += "\t" + (it == r.corpus_counts.end() ? std::string("-") : fmt_counts(it->second));
  }
  out += "\t\n";
  out += "# table3\n";
  for (const auto& l : r.table3.labels) out += "\t" + l;
  out += "\n";
  for (std::size_t i = 0; i < r.table3.labels.size(); ++i) {
    out += r.table3.labels[i];
    for (double v : r.table3.values[i]) out += "\t" + fmt3(v);
    out += "\n";
  }
  return out;
}

std::string report_text(const EvalReport& r) {
  std::string out;
  out += "fixture gate: " + std::to_string(r.rows_matched) + "/" +
         std::to_string(r.rows_total) + " rows match";
  if (!r.deviations_allowed.empty())
    out += " (" + std::to_string(r.deviations_allowed.size()) + " excused)";
  if (r.gaps) out += ", " + std::to_string(r.gaps) + " gaps";
  out += "\n";
  for (const auto& row : r.rows) {
    if (!row.has_fixture || row.match) continue;
    out += "mismatch " + row.sentence_id + "/" + row.profile + "\n";
    out += "  expected:";
    for (const auto& t : row.expected) out += " " + t;
    out += "\n  actual:  ";
    for (const auto& t : row.actual) out += " " + t;
    out += "\n";
  }
  if (r.table2_cells) {
    out += "table2: " + std::to_string(r.table2_cells_exact) + "/" +
           std::to_string(r.table2_cells) + " cells exact\n";
    out += "table3: " + std::to_string(r.table3_cells_close) + "/" +
           std::to_string(r.table3_cells) + " cells within 0.01 (max delta " +
           fmt3(r.table3_max_abs_delta) + ")\n";
    for (const auto& d : r.deltas)
      out += "delta " + d.table + " " + d.cell + ": target " + d.expected + ", computed " +
             d.computed + "\n";
  }
  return out;
}

}  // namespace biotok
