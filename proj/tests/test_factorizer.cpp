#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "palfac/factorization_io.hpp"
#include "palfac/factorizer.hpp"
#include "palfac/families.hpp"
#include "palfac/word.hpp"
#include "support.hpp"

using namespace palfac;
using testsupport::random_word;
using testsupport::wd;

namespace {

std::vector<std::string> factor_texts(const Factorization& f, const Word& w) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < f.factors.size(); ++i) out.push_back(factor_text(f, i, w));
  return out;
}

/** First `take` factor texts from both engines, which must agree. */
std::vector<std::string> leading_factors(const Word& w, FactorizationMode mode, std::size_t take) {
  const Factorization a = factorize_naive(w, mode);
  const Factorization b = factorize_indexed(w, mode);
  REQUIRE(a == b);
  std::vector<std::string> texts = factor_texts(a, w);
  if (texts.size() > take) texts.resize(take);
  return texts;
}

void check_well_formed(const Factorization& f, const Word& w) {
  std::size_t cursor = 0;
  for (const Factor& x : f.factors) {
    REQUIRE(x.start == cursor);
    REQUIRE(x.len >= 1);
    cursor += x.len;
  }
  REQUIRE(cursor == f.factored_end());
  if (f.stalled_at) {
    REQUIRE(f.residue_start == f.stalled_at);
    REQUIRE(*f.stalled_at < w.size());
  }
  if (f.residue_start) REQUIRE(*f.residue_start < w.size());
  REQUIRE(f.source_length == w.size());
}

/** Per-factor soundness straight from the mode definitions. */
void check_mode_soundness(const Factorization& f, const Word& w) {
  const std::size_t n = w.size();
  for (const Factor& x : f.factors) {
    const bool has_earlier = earliest_occurrence_before(w, x.start, x.len).has_value();
    switch (f.mode) {
      case FactorizationMode::Z:
        REQUIRE(!has_earlier);
        // every proper prefix was rejected for occurring earlier
        for (std::size_t l = 1; l < x.len; ++l) {
          REQUIRE(earliest_occurrence_before(w, x.start, l).has_value());
        }
        break;
      case FactorizationMode::C:
        if (x.len > 1) REQUIRE(has_earlier);
        // the one-letter extension is out of the window or breaks the rule
        if (x.start + x.len < n) {
          REQUIRE(!earliest_occurrence_before(w, x.start, x.len + 1).has_value());
        }
        break;
      case FactorizationMode::PZ:
        REQUIRE(is_palindrome(w, x.start, x.len));
        REQUIRE(!has_earlier);
        for (std::size_t l = 1; l < x.len; ++l) {
          if (is_palindrome(w, x.start, l)) {
            REQUIRE(earliest_occurrence_before(w, x.start, l).has_value());
          }
        }
        break;
      case FactorizationMode::PC:
        REQUIRE(is_palindrome(w, x.start, x.len));
        if (x.len > 1) REQUIRE(has_earlier);
        for (std::size_t l = x.len + 1; x.start + l <= n; ++l) {
          if (is_palindrome(w, x.start, l)) {
            REQUIRE(!earliest_occurrence_before(w, x.start, l).has_value());
          }
        }
        break;
    }
  }
}

void check_finality_rules(const Factorization& f) {
  const std::size_t n = f.source_length;
  for (const Factor& x : f.factors) {
    switch (f.mode) {
      case FactorizationMode::Z:
      case FactorizationMode::PZ:
        REQUIRE(x.finality == Finality::Certified);
        break;
      case FactorizationMode::C:
        REQUIRE(x.finality ==
                (x.start + x.len < n ? Finality::Certified : Finality::WindowLocal));
        break;
      case FactorizationMode::PC:
        REQUIRE(x.finality == Finality::WindowLocal);
        break;
    }
  }
}

}  // namespace

TEST_CASE("fibonacci factorizations start as published") {
  const Word fib = FamilyHandle::fibonacci().prefix(2000);
  CHECK(leading_factors(fib, FactorizationMode::Z, 6) ==
        std::vector<std::string>{"0", "1", "00", "101", "00100", "10100101"});
  CHECK(leading_factors(fib, FactorizationMode::C, 6) ==
        std::vector<std::string>{"0", "1", "0", "010", "10010", "01010010"});
  CHECK(leading_factors(fib, FactorizationMode::PZ, 6) ==
        std::vector<std::string>{"0", "1", "00", "101", "00100", "10100101"});
  CHECK(leading_factors(fib, FactorizationMode::PC, 6) ==
        std::vector<std::string>{"0", "1", "0", "010", "1001", "0010100"});
}

TEST_CASE("tribonacci palindromic factorizations start as published") {
  const Word w3 = FamilyHandle::mbonacci(3).prefix(4000);
  CHECK(leading_factors(w3, FactorizationMode::PZ, 5) ==
        std::vector<std::string>{"0", "1", "020", "1001", "020101020"});
  // p-block split then the symmetric middles
  CHECK(leading_factors(w3, FactorizationMode::PC, 7) ==
        std::vector<std::string>{"0", "1", "0", "2", "010", "0102010", "102010010201"});
}

TEST_CASE("small stall and overlap cases behave exactly") {
  {
    const Word w = wd("0000", 2);
    const Factorization z = factorize_naive(w, FactorizationMode::Z);
    CHECK(factor_texts(z, w) == std::vector<std::string>{"0"});
    CHECK(z.stalled_at == std::size_t{1});
    CHECK(residue_text(z, w) == "000");
    const Factorization c = factorize_naive(w, FactorizationMode::C);
    CHECK(factor_texts(c, w) == std::vector<std::string>{"0", "000"});
    CHECK(!c.has_residue());
    const Factorization pc = factorize_naive(w, FactorizationMode::PC);
    CHECK(factor_texts(pc, w) == std::vector<std::string>{"0", "000"});
  }
  {
    const Word w = wd("012", 3);
    const Factorization pz = factorize_naive(w, FactorizationMode::PZ);
    CHECK(factor_texts(pz, w) == std::vector<std::string>{"0", "1", "2"});
    CHECK(!pz.has_residue());
  }
  {
    const Word w = wd("010", 2);
    const Factorization pz = factorize_naive(w, FactorizationMode::PZ);
    CHECK(factor_texts(pz, w) == std::vector<std::string>{"0", "1"});
    CHECK(pz.stalled_at == std::size_t{2});
    CHECK(residue_text(pz, w) == "0");
  }
  {
    const Word w = wd("0011", 2);
    const Factorization pz = factorize_naive(w, FactorizationMode::PZ);
    CHECK(factor_texts(pz, w) == std::vector<std::string>{"0"});
    CHECK(pz.stalled_at == std::size_t{1});
    CHECK(residue_text(pz, w) == "011");
  }
  {
    // single letter: one factor, never a residue
    const Word w = wd("0", 2);
    for (FactorizationMode mode : kAllModes) {
      const Factorization f = factorize_indexed(w, mode);
      CHECK(factor_texts(f, w) == std::vector<std::string>{"0"});
      CHECK(!f.has_residue());
    }
  }
}

TEST_CASE("thue-morse novelty modes diverge at the third factor") {
  const Word tm = FamilyHandle::thue_morse().prefix(256);
  const Factorization z = factorize_indexed(tm, FactorizationMode::Z);
  const Factorization pz = factorize_indexed(tm, FactorizationMode::PZ);
  REQUIRE(z.factors.size() >= 3);
  REQUIRE(pz.factors.size() >= 3);
  CHECK(factor_text(z, 0, tm) == "0");
  CHECK(factor_text(pz, 0, tm) == "0");
  CHECK(factor_text(z, 1, tm) == "1");
  CHECK(factor_text(pz, 1, tm) == "1");
  CHECK(factor_text(z, 2, tm) == "10");
  CHECK(factor_text(pz, 2, tm) == "101");
}

TEST_CASE("self-referential longest factors accept overlapping occurrences") {
  const Word fib = FamilyHandle::fibonacci().prefix(2000);
  const Factorization c = factorize_indexed(fib, FactorizationMode::C);
  REQUIRE(c.factors.size() >= 4);
  const Factor& fourth = c.factors[3];
  CHECK(fourth.start == 3);
  CHECK(factor_text(c, 3, fib) == "010");
  CHECK(earliest_occurrence_before(fib, fourth.start, fourth.len) == std::size_t{0});
}

TEST_CASE("indexed engine is bit-identical to the naive engine") {
  // exhaustive over short binary words
  for (std::size_t len = 1; len <= 10; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::vector<Letter> v(len);
      for (std::size_t i = 0; i < len; ++i) v[i] = (bits >> i) & 1;
      const Word w(std::move(v), 2);
      const OccurrenceIndex idx(w);
      for (FactorizationMode mode : kAllModes) {
        REQUIRE(factorize_naive(w, mode) == factorize_indexed(idx, mode));
      }
    }
  }
  // random ternary and structured words
  std::mt19937 rng(424242);
  std::vector<Word> pool;
  for (int t = 0; t < 120; ++t) pool.push_back(random_word(rng, 1 + t % 60, 3));
  for (int t = 0; t < 40; ++t) pool.push_back(random_word(rng, 30, 2));
  pool.push_back(FamilyHandle::fibonacci().prefix(800));
  pool.push_back(FamilyHandle::mbonacci(3).prefix(800));
  pool.push_back(FamilyHandle::mbonacci(5).prefix(600));
  pool.push_back(FamilyHandle::thue_morse().prefix(512));
  pool.push_back(FamilyHandle::blocks().prefix(210));
  pool.push_back(wd(std::string(80, '0'), 2));
  for (const Word& w : pool) {
    const OccurrenceIndex idx(w);
    for (FactorizationMode mode : kAllModes) {
      REQUIRE(factorize_naive(w, mode) == factorize_indexed(idx, mode));
    }
  }
}

TEST_CASE("factorizations tile the window and obey the mode rules") {
  std::mt19937 rng(513513);
  std::vector<Word> pool;
  for (int t = 0; t < 25; ++t) pool.push_back(random_word(rng, 5 + 7 * t % 90, 2));
  for (int t = 0; t < 10; ++t) pool.push_back(random_word(rng, 60, 4));
  pool.push_back(FamilyHandle::fibonacci().prefix(300));
  pool.push_back(FamilyHandle::mbonacci(4).prefix(300));
  pool.push_back(wd("00000", 2));
  pool.push_back(wd("01", 2));
  for (const Word& w : pool) {
    for (FactorizationMode mode : kAllModes) {
      const Factorization f = factorize_indexed(w, mode);
      check_well_formed(f, w);
      check_mode_soundness(f, w);
      check_finality_rules(f);
      // C and PC always produce a full tiling
      if (mode == FactorizationMode::C || mode == FactorizationMode::PC) {
        CHECK(!f.has_residue());
      }
      // factors plus residue reconstruct the input
      std::string rebuilt;
      for (std::size_t i = 0; i < f.factors.size(); ++i) rebuilt += factor_text(f, i, w);
      rebuilt += residue_text(f, w);
      CHECK(rebuilt == render(w));
    }
  }
}

TEST_CASE("certified factors are never retracted by longer windows") {
  const std::vector<FamilyHandle> families = {
      FamilyHandle::fibonacci(), FamilyHandle::mbonacci(3), FamilyHandle::thue_morse(),
      FamilyHandle::blocks()};
  for (const FamilyHandle& family : families) {
    const Word big = family.prefix(1 << 13);
    for (FactorizationMode mode : kAllModes) {
      Factorization prev = factorize_indexed(big.prefix(1 << 8), mode);
      for (std::size_t n = 1 << 9; n <= big.size(); n *= 2) {
        const Factorization next = factorize_indexed(big.prefix(n), mode);
        for (std::size_t i = 0; i < prev.factors.size(); ++i) {
          if (prev.factors[i].finality != Finality::Certified) continue;
          REQUIRE(i < next.factors.size());
          REQUIRE(next.factors[i].start == prev.factors[i].start);
          REQUIRE(next.factors[i].len == prev.factors[i].len);
        }
        prev = next;
      }
    }
  }
}

TEST_CASE("window agreement certifies exactly the stable run") {
  {
    const Factorization f =
        certify_by_agreement(FamilyHandle::fibonacci(), FactorizationMode::PC, 500);
    const Word w = FamilyHandle::fibonacci().prefix(500);
    REQUIRE(f.factors.size() >= 6);
    const std::vector<std::string> texts = factor_texts(f, w);
    CHECK(std::vector<std::string>(texts.begin(), texts.begin() + 6) ==
          std::vector<std::string>{"0", "1", "0", "010", "1001", "0010100"});
    for (const Factor& x : f.factors) CHECK(x.finality == Finality::Certified);
    check_well_formed(f, w);
  }
  {
    // mirrors the plain factorization of the same window up to the agreed run
    const Factorization cert =
        certify_by_agreement(FamilyHandle::mbonacci(3), FactorizationMode::PZ, 400);
    const Factorization plain =
        factorize_indexed(FamilyHandle::mbonacci(3).prefix(400), FactorizationMode::PZ);
    REQUIRE(cert.factors.size() <= plain.factors.size());
    for (std::size_t i = 0; i < cert.factors.size(); ++i) {
      CHECK(cert.factors[i].start == plain.factors[i].start);
      CHECK(cert.factors[i].len == plain.factors[i].len);
    }
  }
  {
    const Factorization f =
        certify_by_agreement(FamilyHandle::thue_morse(), FactorizationMode::PZ, 64);
    const Word w = FamilyHandle::thue_morse().prefix(64);
    REQUIRE(f.factors.size() >= 3);
    const std::vector<std::string> texts = factor_texts(f, w);
    CHECK(texts[0] == "0");
    CHECK(texts[1] == "1");
    CHECK(texts[2] == "101");
  }
  CHECK_THROWS_AS(certify_by_agreement(FamilyHandle::fibonacci(), FactorizationMode::Z, 0),
                  EmptyInput);
}

TEST_CASE("factorizing nothing is refused") {
  const Word empty(std::vector<Letter>{}, 2);
  CHECK_THROWS_AS(factorize_naive(empty, FactorizationMode::Z), EmptyInput);
  CHECK_THROWS_AS(factorize_indexed(empty, FactorizationMode::PC), EmptyInput);
}

TEST_CASE("factorization renderings are stable") {
  const Word w = wd("00100", 2);
  const Factorization pz = factorize_naive(w, FactorizationMode::PZ);
  const nlohmann::ordered_json j = factorization_to_json(pz, w);
  CHECK(j.dump() ==
        R"({"mode":"pz","source_length":5,"factors":[{"start":0,"len":1,"text":"0","certified":true},)"
        R"({"start":1,"len":3,"text":"010","certified":true}],"residue":"0","stalled_at":4})");
  CHECK(factorization_to_plain(pz, w) == "0 | 010\nresidue: 0\nstalled_at: 4\n");
  const Factorization c = factorize_naive(w, FactorizationMode::C);
  CHECK(factorization_to_plain(c, w) == "0 | 0 | 1 | 00\n");
  CHECK(factorization_to_csv(c, w) ==
        "index,start,len,text,certified\n"
        "1,0,1,0,true\n"
        "2,1,1,0,true\n"
        "3,2,1,1,true\n"
        "4,3,2,00,false\n");
  // comma-rendered large alphabets get quoted in CSV
  const Word big = parse_word("3,11,3,11", 12);
  const Factorization bigc = factorize_naive(big, FactorizationMode::C);
  CHECK(factorization_to_csv(bigc, big) ==
        "index,start,len,text,certified\n"
        "1,0,1,3,true\n"
        "2,1,1,11,true\n"
        "3,2,2,\"3,11\",false\n");
}
