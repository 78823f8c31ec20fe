#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "carddeal/pattern_lang.hpp"
#include "carddeal/recursion.hpp"
#include "carddeal/tricks.hpp"

using namespace carddeal;

namespace {

std::vector<Pattern> fixtures() {
  std::vector<Pattern> out;
  for (const char* e : {"UD", "DU", "UUD", "UDU", "DUU", "UDD", "DUD", "DDU",
                        "UUUD", "AP", "SUD", "DSU"})
    out.push_back(parse(e));
  return out;
}

std::optional<std::int64_t> brute_crt(const std::vector<Congruence>& cs) {
  std::int64_t l = 1;
  for (const auto& c : cs) l = std::lcm(l, c.modulus);
  for (std::int64_t x = 0; x < l; ++x) {
    bool ok = true;
    for (const auto& c : cs)
      if (x % c.modulus != c.residue % c.modulus) ok = false;
    if (ok) return x;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("crt examples") {
  std::vector<Congruence> a = {{1, 3}, {2, 4}};
  auto sa = crt_solve(a);
  REQUIRE(sa);
  CHECK(sa->residue == 10);
  CHECK(sa->modulus == 12);

  std::vector<Congruence> b = {{0, 2}, {1, 4}};
  CHECK_FALSE(crt_solve(b));

  std::vector<Congruence> c = {{0, 1}};
  auto sc = crt_solve(c);
  REQUIRE(sc);
  CHECK(sc->residue == 0);
  CHECK(sc->modulus == 1);
}

TEST_CASE("crt agrees with brute force") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 400; ++iter) {
    std::vector<Congruence> cs;
    std::int64_t l = 1;
    int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 30);
      if (l * m / std::gcd(l, m) > 1'000'000) break;
      l = std::lcm(l, m);
      cs.push_back({static_cast<std::int64_t>(rng() % 60), m});
    }
    auto fast = crt_solve(cs);
    auto slow = brute_crt(cs);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(fast->residue == *slow);
      std::int64_t want_l = 1;
      for (const auto& c : cs) want_l = std::lcm(want_l, c.modulus);
      CHECK(fast->modulus == want_l);
    }
  }
}

TEST_CASE("know freed") {
  CHECK(know_freed(parse("UD"), 10, 3).passed());
  CHECK(know_freed(parse("SUD"), 26, 1).passed());
  CHECK(know_freed(parse("UUD"), 13, 13).passed());
  for (const Pattern& p : fixtures())
    for (int n = 1; n <= 16; ++n)
      for (int i = 1; i <= n; ++i) REQUIRE(know_freed(p, n, i).passed());
}

TEST_CASE("spelling bee") {
  CHECK(spelling_bee(parse("SUD"), 26).passed());
  CHECK(spelling_bee(parse("UD"), 16).passed());
  CHECK_FALSE(spelling_bee(parse("UD"), 6).passed());
}

TEST_CASE("double dealing") {
  std::vector<Insertion> script = {{3, 4}, {1, 7}, {5, 2}};
  CHECK(double_dealing(parse("UUD"), 13, script).passed());
  CHECK(double_dealing(parse("UD"), 15, script).passed());
  CHECK_FALSE(double_dealing(parse("UD"), 8, {}).passed());

  // scripts that would disturb the bottom card are rejected
  std::vector<Insertion> bad = {{12, 1}};
  CHECK_THROWS_AS(double_dealing(parse("UUD"), 13, bad),
                  std::invalid_argument);
}

TEST_CASE("ace quartet") {
  CHECK(ace_quartet(52).passed());
  CHECK(ace_quartet(5).passed());
  CHECK(ace_quartet(17).passed());
  CHECK_THROWS_AS(ace_quartet(4), std::invalid_argument);
  // variant without the reduction step: target hidden fifth, ten cards
  CHECK(freed_position_reveal(parse("UD"), 10, 5).passed());
}

TEST_CASE("love ritual solve") {
  auto ell = love_ritual_solve(parse("UD"), 4, 3);
  REQUIRE(ell);
  CHECK(*ell == 7);

  auto cls = love_ritual_class(parse("UD"), 4, 3);
  REQUIRE(cls);
  CHECK(cls->residue == 7);
  CHECK(cls->modulus == 420);

  // any pattern is feasible for k <= 2
  for (const Pattern& p : fixtures())
    for (int n = 2; n <= 12; ++n)
      for (int k = 0; k <= 2; ++k) REQUIRE(love_ritual_solve(p, n, k));
}

TEST_CASE("love ritual solve matches gcd compatibility") {
  for (const Pattern& p : fixtures()) {
    for (int n = 2; n <= 30; ++n) {
      for (int k = 0; k <= 6 && k < 2 * n - 1; ++k) {
        bool compatible = true;
        for (int i = 0; i <= k; ++i)
          for (int j = 0; j <= k; ++j) {
            std::int64_t mi = 2 * n - 1 - i, mj = 2 * n - 1 - j;
            std::int64_t g = std::gcd(mi, mj);
            if ((freed(p, static_cast<int>(mi)) -
                 freed(p, static_cast<int>(mj))) %
                    g !=
                0)
              compatible = false;
          }
        REQUIRE(love_ritual_solve(p, n, k).has_value() == compatible);
      }
    }
  }
}

TEST_CASE("love ritual verify") {
  CHECK(love_ritual_verify(parse("UD"), 4, 3, 7).passed());
  CHECK_FALSE(love_ritual_verify(parse("UD"), 4, 3, 6).passed());
  auto ell0 = love_ritual_solve(parse("UD"), 4, 0);
  REQUIRE(ell0);
  CHECK(love_ritual_verify(parse("UD"), 4, 0, *ell0).passed());

  // the U^xD family admits ell = x(2N-1) whenever F(2N-1) = 2N-1
  CHECK(love_ritual_verify(parse("UUD"), 7, 4, 2 * 13).passed());
  auto cls = love_ritual_class(parse("UUD"), 7, 4);
  REQUIRE(cls);
  CHECK((2 * 13 - cls->residue) % cls->modulus == 0);
}

TEST_CASE("power of b") {
  std::vector<int> cuts = {3, 7};
  CHECK(power_of_b(parse("UD"), 2, 4, cuts).passed());
  CHECK(power_of_b(parse("UD"), 2, 1, {}).passed());
  CHECK(power_of_b(parse("UUD"), 3, 2, cuts).passed());
  CHECK(power_of_b(parse("UUD"), 3, 2, {}).passed());

  std::mt19937_64 rng(1234);
  for (int a = 1; a <= 6; ++a) {
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<int> script = {static_cast<int>(rng() % (1u << a)),
                                 static_cast<int>(rng() % (1u << a))};
      REQUIRE(power_of_b(parse("UD"), 2, a, script).passed());
    }
  }

  // a pattern that misses the key entry is reported, not failed
  auto rep = power_of_b(parse("DU"), 2, 3, {});
  CHECK(rep.verdict == TrickReport::Verdict::Infeasible);
}

TEST_CASE("stripes") {
  CHECK(stripes(26, {}, {}).passed());
  CHECK(stripes(1, {}, {}).passed());
  for (int n : {4, 8}) {
    for (int c1 = 0; c1 < 2 * n; ++c1)
      for (int c2 = 0; c2 < 2 * n; ++c2) {
        std::vector<int> before = {c1}, after = {c2};
        REQUIRE(stripes(n, before, after).passed());
      }
  }
}

TEST_CASE("permutation order") {
  CHECK(permutation_order(parse("SUD"), 6) == 2);
  CHECK(simulate_deal(parse("SUD"), 6).deal_order ==
        std::vector<int>{4, 2, 5, 1, 3, 6});
  for (int n = 1; n <= 10; ++n)
    CHECK(permutation_order(parse("D"), n) == 1);
  // compose-until-identity oracle for the UD row of 8
  {
    auto row = simulate_deal(parse("UD"), 8).deal_order;
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 1);
    int k = 0;
    while (true) {
      std::vector<int> next(8);
      for (int i = 0; i < 8; ++i)
        next[static_cast<std::size_t>(i)] =
            row[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] -
                                         1)];
      perm = next;
      ++k;
      bool ident = true;
      for (int i = 0; i < 8; ++i)
        if (perm[static_cast<std::size_t>(i)] != i + 1) ident = false;
      if (ident) break;
    }
    CHECK(permutation_order(parse("UD"), 8) == k);
  }
}

TEST_CASE("kth time's the charm") {
  auto rep = kth_time_verify(parse("SUD"), 6);
  CHECK(rep.passed());
  REQUIRE(!rep.solved.empty());
  CHECK(rep.solved.front().second == 2);

  CHECK(kth_time_verify(parse("D"), 5).passed());
  CHECK(kth_time_verify(parse("UD"), 6).passed());

  // each deal-and-flip applies the Josephus row to the deck order
  for (const Pattern& p : fixtures()) {
    for (int n = 2; n <= 14; ++n) {
      auto row = simulate_deal(p, n).deal_order;
      std::vector<int> deck(static_cast<std::size_t>(n));
      std::iota(deck.begin(), deck.end(), 1);
      auto after = deal_sequence(p, deck);
      for (int i = 0; i < n; ++i)
        REQUIRE(after[static_cast<std::size_t>(i)] ==
                deck[static_cast<std::size_t>(
                    row[static_cast<std::size_t>(i)] - 1)]);
    }
  }

  // UD rows for 4 <= n <= 64 start 2, 4: never an order-2 permutation
  for (int n = 4; n <= 64; ++n)
    CHECK(permutation_order(parse("UD"), n) != 2);
}
