#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "biotok/corpus.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(BIOTOK_DATA_DIR) + "/" + name;
}

inline const std::vector<biotok::Sentence>& corpus() {
  static const auto c = biotok::load_corpus(data_path("corpus.jsonl"));
  return c;
}

inline const std::vector<biotok::GoldenFixture>& fixtures() {
  static const auto f = biotok::load_fixtures(data_path("fixtures.jsonl"));
  return f;
}

inline std::string sentence_text(const std::string& id) {
  for (const auto& s : corpus())
    if (s.id == id) return s.text;
  throw std::runtime_error("no such sentence: " + id);
}

inline std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "biotok_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

// Writes `body` to a fresh file under the test temp dir and returns its path.
inline std::string write_temp(const std::string& stem, const std::string& body) {
  static int counter = 0;
  auto path = temp_dir() / (stem + "_" + std::to_string(++counter));
  std::ofstream out(path, std::ios::binary);
  out << body;
  out.close();
  return path.string();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testutil
