#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "ihopf/words.hpp"

using namespace ihopf;

namespace {

// Independent Pascal triangle for the composition-count oracle.
long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<long long>> pascal(n + 1);
  for (int i = 0; i <= n; ++i) {
    pascal[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) pascal[i][j] = pascal[i - 1][j - 1] + pascal[i - 1][j];
  }
  return pascal[n][k];
}

std::vector<ColorWord> all_words(int n, int max_len) {
  std::vector<ColorWord> out{ColorWord{}};
  std::vector<std::vector<Color>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Color>> next;
    for (const auto& w : frontier)
      for (Color c = 1; c <= n; ++c) {
        auto grown = w;
        grown.push_back(c);
        out.emplace_back(grown);
        next.push_back(std::move(grown));
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("word literals parse both syntaxes") {
  CHECK(ColorWord::parse("1223") == ColorWord{1, 2, 2, 3});
  CHECK(ColorWord::parse("1,12,3") == ColorWord{1, 12, 3});
  CHECK(ColorWord::parse("") == ColorWord{});
  CHECK(ColorWord{1, 12, 3}.str() == "1,12,3");
  CHECK(ColorWord{1, 2}.str() == "12");
  CHECK_THROWS_AS(ColorWord::parse("1a2"), std::invalid_argument);
  CHECK_THROWS_AS(ColorWord::parse("102"), std::invalid_argument);
}

TEST_CASE("reflect_word") {
  CHECK(reflect_word(ColorWord::parse("1234")) == ColorWord::parse("4321"));
  CHECK(reflect_word(ColorWord{}) == ColorWord{});
  CHECK(reflect_word(ColorWord::parse("121")) == ColorWord::parse("121"));
}

TEST_CASE("reflect_word is an involution on all short words") {
  for (const auto& w : all_words(3, 8)) CHECK(reflect_word(reflect_word(w)) == w);
}

TEST_CASE("grading") {
  CHECK(grading(ColorWord::parse("12")) == 1);
  CHECK(grading(ColorWord::parse("1")) == 0);
  CHECK(grading(ColorWord::parse("1234")) == 3);
  CHECK_THROWS_AS(grading(ColorWord{}), std::invalid_argument);
}

TEST_CASE("grading is additive over concatenation minus merge") {
  ColorWord u = ColorWord::parse("122");
  ColorWord v = ColorWord::parse("31");
  CHECK(grading(u.concat(v)) == grading(u) + grading(v) + 1);
}

TEST_CASE("partition literal round trip and block access") {
  auto p = IntervalPartition::parse("(31)2(233)1(2)2(1223)3");
  CHECK(p.base_word() == ColorWord::parse("3123321223"));
  CHECK(p.block_sizes() == std::vector<int>{2, 3, 1, 4});
  CHECK(p.block_colors() == ColorWord::parse("2123"));
  CHECK(p.str() == "(31)2(233)1(2)2(1223)3");
  CHECK(p.satisfies_delta_rule());  // the singleton (2) has color 2
}

TEST_CASE("restrict_block slices the covered subword") {
  ColorWord u = ColorWord::parse("3123321223");
  IntervalPartition p(u, {2, 3, 1, 4}, ColorWord::parse("2123"));
  CHECK(restrict_block(u, p, 1) == ColorWord::parse("233"));

  ColorWord v = ColorWord::parse("12");
  IntervalPartition single(v, {2}, ColorWord::parse("1"));
  CHECK(restrict_block(v, single, 0) == ColorWord::parse("12"));

  ColorWord w = ColorWord::parse("1111");
  IntervalPartition two(w, {1, 3}, ColorWord::parse("11"));
  CHECK(restrict_block(w, two, 1) == ColorWord::parse("111"));
  CHECK_THROWS_AS(two.block(2), std::out_of_range);
  CHECK_THROWS_AS(restrict_block(v, two, 0), std::invalid_argument);
}

TEST_CASE("partition invariants are enforced") {
  ColorWord u = ColorWord::parse("111");
  CHECK_THROWS_AS(IntervalPartition(u, {1, 1}, ColorWord::parse("11")),
                  std::invalid_argument);
  CHECK_THROWS_AS(IntervalPartition(u, {0, 3}, ColorWord::parse("11")),
                  std::invalid_argument);
  CHECK_THROWS_AS(IntervalPartition(u, {1, 2}, ColorWord::parse("1")),
                  std::invalid_argument);
}

TEST_CASE("enumerate_interval_partitions: pruned examples") {
  auto ps = enumerate_interval_partitions(ColorWord::parse("111"), 2, 1, true);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].block_sizes() == std::vector<int>{1, 2});
  CHECK(ps[1].block_sizes() == std::vector<int>{2, 1});
  for (const auto& p : ps) CHECK(p.block_colors() == ColorWord::parse("11"));

  auto qs = enumerate_interval_partitions(ColorWord::parse("12"), 2, 2, true);
  REQUIRE(qs.size() == 1);
  CHECK(qs[0].block_sizes() == std::vector<int>{1, 1});
  CHECK(qs[0].block_colors() == ColorWord::parse("12"));
}

TEST_CASE("enumerate_interval_partitions: unpruned count") {
  auto ps = enumerate_interval_partitions(ColorWord::parse("1234"), 2, 4, false);
  CHECK(ps.size() == 48);  // C(3,1) compositions x 4^2 color words
}

TEST_CASE("composition shapes match the binomial count") {
  for (int p = 1; p <= 8; ++p) {
    ColorWord u(std::vector<Color>(p, 1));
    for (int q = 1; q <= p; ++q) {
      auto ps = enumerate_interval_partitions(u, q, 1, true);
      std::set<std::vector<int>> shapes;
      for (const auto& part : ps) shapes.insert(part.block_sizes());
      CHECK(static_cast<long long>(shapes.size()) == binomial(p - 1, q - 1));
    }
  }
}

TEST_CASE("pruned output = unpruned output filtered by the delta rule") {
  ColorWord u = ColorWord::parse("1212");
  for (int q = 1; q <= 4; ++q) {
    auto pruned = enumerate_interval_partitions(u, q, 2, true);
    auto unpruned = enumerate_interval_partitions(u, q, 2, false);
    std::vector<IntervalPartition> filtered;
    for (const auto& p : unpruned)
      if (p.satisfies_delta_rule()) filtered.push_back(p);
    CHECK(pruned == filtered);
  }
}

TEST_CASE("enumeration order is lexicographic in sizes then colors") {
  auto ps = enumerate_interval_partitions(ColorWord::parse("112"), 2, 2, false);
  for (std::size_t j = 0; j + 1 < ps.size(); ++j) {
    auto key = [](const IntervalPartition& p) {
      return std::make_pair(p.block_sizes(), p.block_colors());
    };
    CHECK(key(ps[j]) < key(ps[j + 1]));
  }
}

TEST_CASE("q out of range is an error") {
  CHECK_THROWS_AS(enumerate_interval_partitions(ColorWord::parse("11"), 3, 1, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_interval_partitions(ColorWord::parse("11"), 0, 1, true),
                  std::invalid_argument);
}
