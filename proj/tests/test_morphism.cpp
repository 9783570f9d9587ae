#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "palfac/codes.hpp"
#include "palfac/morphism.hpp"
#include "palfac/singular.hpp"
#include "support.hpp"

using namespace palfac;
using testsupport::random_word;
using testsupport::wd;

namespace {

Morphism fib_morphism() { return phi_m(2); }

}  // namespace

TEST_CASE("apply golden values") {
  Morphism phi = fib_morphism();
  CHECK(render(phi.apply(wd("010", 2))) == "01001");
  CHECK(phi.apply(Word::empty_over(2)).empty());
}

TEST_CASE("apply is a homomorphism") {
  Morphism phi = phi_m(3);
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    Word u = random_word(rng, static_cast<std::size_t>(i % 17), 3);
    Word v = random_word(rng, static_cast<std::size_t>((i * 7) % 19), 3);
    CHECK(phi.apply(u + v) == phi.apply(u) + phi.apply(v));
  }
}

TEST_CASE("prolongability") {
  Morphism phi = fib_morphism();
  CHECK(phi.is_prolongable(0));
  CHECK_FALSE(phi.is_prolongable(1));  // image "0" does not start with 1
  Morphism tau(std::vector<Word>{Word({0, 1}, 2), Word({1, 0}, 2)});
  CHECK(tau.is_prolongable(0));
  CHECK(tau.is_prolongable(1));
}

TEST_CASE("fixed point prefix golden values") {
  CHECK(render(fib_morphism().fixed_point_prefix(0, 8)) == "01001010");
  Morphism tau(std::vector<Word>{Word({0, 1}, 2), Word({1, 0}, 2)});
  CHECK(render(tau.fixed_point_prefix(0, 16)) == "0110100110010110");
}

TEST_CASE("thue-morse letters match the bit-parity oracle") {
  Morphism tau(std::vector<Word>{Word({0, 1}, 2), Word({1, 0}, 2)});
  Word t = tau.fixed_point_prefix(0, 1 << 12);
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(t[i] == static_cast<Letter>(__builtin_popcountll(i) & 1));
  }
}

TEST_CASE("fixed point prefix is an actual fixed point") {
  for (Letter m = 2; m <= 5; ++m) {
    Morphism phi = phi_m(m);
    Word w = phi.fixed_point_prefix(0, 2000);
    Word im = phi.apply(w);
    CHECK(im.prefix(w.size()) == w);
  }
}

TEST_CASE("fixed point errors") {
  CHECK_THROWS_AS(fib_morphism().fixed_point_prefix(1, 5), NotProlongable);
  Morphism bad(std::vector<Word>{Word({1, 0}, 2), Word({0}, 2)});
  CHECK_THROWS_AS(bad.fixed_point_prefix(0, 5), NotProlongable);
  // erasing image makes the orbit finite: 0 -> 01, 1 -> empty
  Morphism erasing(std::vector<Word>{Word({0, 1}, 2), Word::empty_over(2)});
  CHECK_THROWS_AS(erasing.fixed_point_prefix(0, 5), GenerationFailed);
}

TEST_CASE("morphism text format round-trips") {
  Morphism phi = phi_m(3);
  std::string text = format_morphism(phi);
  CHECK(text == "0 -> 01\n1 -> 02\n2 -> 0\n");
  Morphism back = parse_morphism(text);
  CHECK(back.domain_size() == 3);
  for (Letter a = 0; a < 3; ++a) CHECK(back.image(a) == phi.image(a));

  CHECK_THROWS_AS(parse_morphism("0 - 01\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_morphism("1 -> 0\n"), std::invalid_argument);   // must start at 0
  CHECK_THROWS_AS(parse_morphism(""), std::invalid_argument);
}

TEST_CASE("injective morphisms lift codes") {
  // Candidate morphisms; injectivity is certified by enumerating all distinct
  // word pairs up to length 4 and checking their images differ.
  std::vector<Morphism> sigmas;
  sigmas.push_back(phi_m(2));
  sigmas.push_back(Morphism(std::vector<Word>{Word({0, 1}, 2), Word({1, 0}, 2)}));
  sigmas.push_back(Morphism(std::vector<Word>{Word({0, 0, 1}, 2), Word({1, 1}, 2)}));

  auto all_words_upto = [](Letter alpha, std::size_t max_len) {
    std::vector<Word> out{Word::empty_over(alpha)};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (Letter a = 0; a < alpha; ++a) {
          Word w = out[i];
          w.push_back(a);
          out.push_back(std::move(w));
        }
      }
      begin = end;
    }
    return out;
  };

  for (const Morphism& sigma : sigmas) {
    auto words = all_words_upto(sigma.domain_size(), 4);
    std::set<std::vector<Letter>> images;
    for (const Word& w : words) {
      CHECK(images.insert(sigma.apply(w).letters()).second);
    }
  }

  std::mt19937 rng(23);
  int lifted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Word> xs;
    std::uniform_int_distribution<int> nd(1, 4), ld(1, 3);
    int k = nd(rng);
    for (int i = 0; i < k; ++i) xs.push_back(random_word(rng, static_cast<std::size_t>(ld(rng)), 2));
    bool code = false;
    try {
      code = is_code(xs);
    } catch (const EmptyWordInSet&) {
      continue;
    }
    if (!code) continue;
    for (const Morphism& sigma : sigmas) {
      std::vector<Word> ys;
      for (const Word& x : xs) ys.push_back(sigma.apply(x));
      CHECK(is_code(ys));
      ++lifted;
    }
  }
  CHECK(lifted > 100);
}
