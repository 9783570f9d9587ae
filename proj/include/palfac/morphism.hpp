#pragma once
/**
 * @file morphism.hpp
 * @brief Monoid morphisms on words, fixed-point generation, and the text format.
 *
 * A Morphism maps each letter of its domain alphabet to an image word; applying
 * it to a word concatenates the images. When sigma(a) starts with a and has
 * length >= 2 (sigma prolongable on a), iterating sigma on a converges to an
 * infinite fixed point whose prefixes fixed_point_prefix() generates online in
 * linear time.
 *
 * Text format, one line per letter, line order defining the alphabet:
 *
 *     0 -> 01
 *     1 -> 0
 *
 * Images use the same rendering as words (digits, or comma-separated integers).
 */

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "palfac/budget.hpp"
#include "palfac/errors.hpp"
#include "palfac/word.hpp"

namespace palfac {

class Morphism {
 public:
  /// Domain alphabet size = images.size(); images may use a wider codomain.
  explicit Morphism(std::vector<Word> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("morphism needs at least one letter");
    codomain_ = 1;
    for (const Word& im : images_) codomain_ = std::max(codomain_, im.alphabet_size());
  }

  Letter domain_size() const { return static_cast<Letter>(images_.size()); }
  Letter codomain_size() const { return codomain_; }

  const Word& image(Letter a) const {
    if (a >= images_.size()) throw std::out_of_range("letter outside morphism domain");
    return images_[a];
  }

  bool is_erasing() const {
    for (const Word& im : images_) {
      if (im.empty()) return true;
    }
    return false;
  }

  Word apply(const Word& w) const {
    std::size_t total = 0;
    for (Letter a : w) total += image(a).size();
    Word out = Word::empty_over(codomain_);
    out.reserve(total);
    for (Letter a : w) out += image(a);
    return out;
  }

  /// sigma(a) = a x with x nonempty.
  bool is_prolongable(Letter a) const {
    const Word& im = image(a);
    return im.size() >= 2 && im[0] == a;
  }

  /**
   * First n letters of the fixed point sigma^omega(a). Throws NotProlongable
   * when sigma is not prolongable on a, BudgetExceeded past the construction
   * budget, and GenerationFailed if erasing images make the orbit finite.
   */
  Word fixed_point_prefix(Letter a, std::size_t n) const {
    if (a >= images_.size() || !is_prolongable(a)) {
      throw NotProlongable("morphism is not prolongable on letter " + std::to_string(a));
    }
    if (n * sizeof(Letter) > construction_budget_bytes()) {
      throw BudgetExceeded("fixed point prefix of " + std::to_string(n) +
                           " letters exceeds the construction budget");
    }
    Word out = image(a);
    std::size_t i = 1;
    while (out.size() < n) {
      if (i >= out.size()) {
        throw GenerationFailed("fixed point is finite; cannot produce " + std::to_string(n) +
                               " letters");
      }
      out += image(out[i]);
      ++i;
    }
    return out.size() == n ? out : out.prefix(n);
  }

 private:
  std::vector<Word> images_;
  Letter codomain_ = 1;
};

inline Word apply_morphism(const Morphism& s, const Word& w) { return s.apply(w); }

inline Morphism parse_morphism(std::string_view text) {
  std::vector<Word> images;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("morphism line missing '->'");
    std::string lhs = line.substr(0, arrow);
    std::size_t lb = lhs.find_first_not_of(" \t");
    std::size_t le = lhs.find_last_not_of(" \t");
    if (lb == std::string::npos) throw std::invalid_argument("morphism line missing letter");
    lhs = lhs.substr(lb, le - lb + 1);
    Letter letter = 0;
    for (char c : lhs) {
      if (c < '0' || c > '9') throw std::invalid_argument("morphism letter must be an integer");
      letter = letter * 10 + static_cast<Letter>(c - '0');
    }
    if (letter != line_no) {
      throw std::invalid_argument("morphism lines must define letters 0,1,... in order");
    }
    images.push_back(parse_word(std::string_view(line).substr(arrow + 2)));
    ++line_no;
  }
  if (images.empty()) throw std::invalid_argument("empty morphism description");
  // Re-validate images against the now-known codomain so rendering is stable.
  Letter codomain = static_cast<Letter>(images.size());
  for (const Word& im : images) {
    for (Letter a : im) codomain = std::max(codomain, a + 1);
  }
  std::vector<Word> fixed;
  fixed.reserve(images.size());
  for (Word& im : images) fixed.emplace_back(std::vector<Letter>(im.begin(), im.end()), codomain);
  return Morphism(std::move(fixed));
}

inline std::string format_morphism(const Morphism& s) {
  std::string out;
  for (Letter a = 0; a < s.domain_size(); ++a) {
    out += std::to_string(a);
    out += " -> ";
    out += render(s.image(a));
    out.push_back('\n');
  }
  return out;
}

}  // namespace palfac
