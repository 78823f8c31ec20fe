#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "carddeal/dealer.hpp"
#include "carddeal/pattern_lang.hpp"

using namespace carddeal;

namespace {

std::vector<Pattern> fixtures() {
  std::vector<Pattern> out;
  for (const char* e : {"UD", "DU", "UUD", "UDU", "DUU", "UDD", "DUD", "DDU",
                        "UUUD", "AP", "SUD", "DSU"})
    out.push_back(parse(e));
  return out;
}

bool is_permutation_1_to_n(const std::vector<int>& v) {
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

}  // namespace

TEST_CASE("simulate_deal golden rows") {
  auto ud8 = simulate_deal(parse("UD"), 8);
  CHECK(ud8.deal_order == std::vector<int>{2, 4, 6, 8, 3, 7, 5, 1});
  CHECK(ud8.moves == 16);
  CHECK(ud8.freed == 1);

  auto du5 = simulate_deal(parse("DU"), 5);
  CHECK(du5.deal_order == std::vector<int>{1, 3, 5, 4, 2});
  CHECK(du5.moves == 9);
  CHECK(du5.freed == 2);
  CHECK(du5.first_card_order == 1);

  auto empty = simulate_deal(parse("UD"), 0);
  CHECK(empty.deal_order.empty());
  CHECK(empty.moves == 0);
}

TEST_CASE("dealing_row golden rows") {
  CHECK(dealing_row(parse("UD"), 10) ==
        std::vector<int>{8, 1, 6, 2, 10, 3, 7, 4, 9, 5});
  CHECK(dealing_row(parse("DU"), 10) ==
        std::vector<int>{1, 6, 2, 10, 3, 7, 4, 9, 5, 8});
  CHECK(dealing_row(parse("D"), 6) == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("prepare_deck matches dealing_row") {
  CHECK(prepare_deck(parse("UD"), 4) == std::vector<int>{4, 1, 3, 2});
  CHECK(prepare_deck(parse("UD"), 1) == std::vector<int>{1});
  CHECK(prepare_deck(parse("SCARD"), 13) ==
        std::vector<int>{3, 8, 7, 1, 12, 6, 4, 2, 11, 13, 10, 9, 5});

  for (const Pattern& p : fixtures())
    for (int n = 1; n <= 512; ++n)
      REQUIRE(prepare_deck(p, n) == dealing_row(p, n));
}

TEST_CASE("rows and deal orders are inverse permutations") {
  for (const Pattern& p : fixtures()) {
    for (int n = 1; n <= 512; ++n) {
      auto order = simulate_deal(p, n).deal_order;
      auto row = dealing_row(p, n);
      REQUIRE(is_permutation_1_to_n(order));
      REQUIRE(is_permutation_1_to_n(row));
      for (int rank = 1; rank <= n; ++rank)
        REQUIRE(row[static_cast<std::size_t>(
                    order[static_cast<std::size_t>(rank - 1)] - 1)] == rank);
    }
  }
}

TEST_CASE("moves equal d_index") {
  for (const Pattern& p : fixtures())
    for (int n = 1; n <= 512; ++n)
      REQUIRE(simulate_deal(p, n).moves == p.d_index(n));
}

TEST_CASE("dealing a prepared deck emits labels in order") {
  for (const Pattern& p : fixtures()) {
    for (int n : {1, 4, 7, 13, 52}) {
      auto dealt = deal_sequence(p, prepare_deck(p, n));
      std::vector<int> want(static_cast<std::size_t>(n));
      std::iota(want.begin(), want.end(), 1);
      REQUIRE(dealt == want);
    }
  }
}

TEST_CASE("deal_one_round") {
  auto [d_ud7, r_ud7] = deal_one_round(parse("UD"), 7);
  CHECK(d_ud7 == std::vector<int>{2, 4, 6});
  CHECK(r_ud7 == std::vector<int>{1, 3, 5, 7});

  // The top of the remainder is the first card that went under.
  auto [d_du4, r_du4] = deal_one_round(parse("DU"), 4);
  CHECK(d_du4 == std::vector<int>{1, 3});
  CHECK(r_du4 == std::vector<int>{2, 4});

  auto [d_d3, r_d3] = deal_one_round(parse("D"), 3);
  CHECK(d_d3 == std::vector<int>{1, 2, 3});
  CHECK(r_d3.empty());

  // remaining cards are exactly the under-indices, in u_1, u_2, ... order
  for (const Pattern& p : fixtures()) {
    for (int n = 1; n <= 64; ++n) {
      auto [dealt, remaining] = deal_one_round(p, n);
      auto st = p.prefix_counts(n);
      REQUIRE(static_cast<std::int64_t>(dealt.size()) == st.downs);
      REQUIRE(static_cast<std::int64_t>(remaining.size()) == st.unders);
      for (std::size_t k = 0; k < remaining.size(); ++k)
        REQUIRE(remaining[k] ==
                p.u_index(static_cast<std::int64_t>(k) + 1));
      for (std::size_t k = 0; k < dealt.size(); ++k)
        REQUIRE(dealt[k] == p.d_index(static_cast<std::int64_t>(k) + 1));
    }
  }
}

TEST_CASE("spell card deal is capped at 13") {
  CHECK_NOTHROW(simulate_deal(parse("SCARD"), 13));
  CHECK_THROWS_AS(simulate_deal(parse("SCARD"), 14), PatternError);
}
