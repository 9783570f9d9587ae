#pragma once
// Shared helpers for the test suite.

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "palfac/word.hpp"

namespace testsupport {

using palfac::Letter;
using palfac::Word;

inline Word wd(const std::string& digits, Letter alphabet_size) {
  std::vector<Letter> v;
  v.reserve(digits.size());
  for (char c : digits) v.push_back(static_cast<Letter>(c - '0'));
  return Word(std::move(v), alphabet_size);
}

inline Word random_word(std::mt19937& rng, std::size_t len, Letter alphabet_size) {
  std::uniform_int_distribution<Letter> d(0, alphabet_size - 1);
  std::vector<Letter> v(len);
  for (auto& a : v) a = d(rng);
  return Word(std::move(v), alphabet_size);
}

struct GoldenRow {
  std::string kind;
  Letter m;
  int n;
  Word word;
};

inline std::vector<GoldenRow> load_golden_words(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path);
  std::vector<GoldenRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    GoldenRow row;
    unsigned m = 0;
    std::string text;
    ls >> row.kind >> m >> row.n >> text;
    row.m = static_cast<Letter>(m);
    row.word = text == "-" ? Word::empty_over(row.m) : wd(text, row.m);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string golden_path(const std::string& name) {
  return std::string(PALFAC_GOLDEN_DIR) + "/" + name;
}

}  // namespace testsupport
