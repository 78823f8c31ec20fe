#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "carddeal/pattern_lang.hpp"

using namespace carddeal;

TEST_CASE("parse barewords") {
  CHECK(parse("UD") == Pattern::periodic("UD"));
  CHECK(parse("ud") == Pattern::periodic("UD"));
  CHECK(parse("U2D") == Pattern::periodic("UUD"));
  CHECK(same_letters(parse("U2D"), parse("UUD"), 1000));
  CHECK(parse("D") == Pattern::constant_down());
  CHECK(parse("UUUD") == Pattern::periodic("UUUD"));
}

TEST_CASE("parse named bases") {
  CHECK(parse("AP") == Pattern::arithmetic_skip());
  CHECK(parse("SUD") == Pattern::spell_number());
  CHECK(parse("SCARD") == Pattern::spell_card());
  CHECK(parse("D SUD") == Pattern::spell_number().prepend(Letter::Down));
  CHECK(parse("DSU") == parse("D SUD"));
  CHECK(parse("sud>>5") == Pattern::spell_number().drop(5));
}

TEST_CASE("parse prefixes and groups") {
  Pattern p = parse("UU(UD)*");
  CHECK(p.prefix().size() == 2);
  CHECK(p.base_word() == Pattern::periodic("UD").base_word());
  CHECK(same_letters(p, Pattern::periodic("UD").prepend(Letter::Under)
                            .prepend(Letter::Under),
                     1000));

  // unstarred groups are prefix atoms; the trailing letters are the word
  Pattern q = parse("(UD)2D");
  CHECK(q.prefix().size() == 4);
  CHECK(q.base_kind() == BaseKind::ConstantDown);

  CHECK(parse("U3 (D)*") == parse("UUU(D)*"));
  CHECK(same_letters(parse("D SUD"), parse("DSU"), 2000));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("UUU"), ParseError);     // nothing ever dealt
  CHECK_THROWS_AS(parse("XYZ"), ParseError);     // unknown name
  CHECK_THROWS_AS(parse("(UD"), ParseError);     // unterminated group
  CHECK_THROWS_AS(parse("()*"), ParseError);     // empty group
  CHECK_THROWS_AS(parse("SUD UD"), ParseError);  // base not last
  CHECK_THROWS_AS(parse("(UD)2"), ParseError);   // no base

  try {
    parse("UU XYZ");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("format canonical forms") {
  CHECK(format(Pattern::periodic("UD")) == "UD");
  CHECK(format(Pattern::spell_number().prepend(Letter::Down)) == "D SUD");
  CHECK(format(Pattern::periodic("UUUD")) == "UUUD");
  CHECK(format(Pattern::constant_down()) == "D");
  CHECK(format(Pattern::periodic("UD").prepend(Letter::Under)) == "U(UD)*");
  CHECK(format(Pattern::arithmetic_skip().drop(2)) == "AP>>2");
  CHECK(format(Pattern::constant_down().prepend(Letter::Under)) == "U(D)*");
}

namespace {

std::string random_expression(std::mt19937_64& rng) {
  auto pick = [&](std::int64_t n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  };
  std::string expr;
  int prefix_atoms = pick(3);
  bool named = pick(2) == 0;
  for (int i = 0; i < prefix_atoms; ++i) {
    switch (pick(3)) {
      case 0:
        expr += pick(2) ? 'U' : 'D';
        break;
      case 1:
        expr += pick(2) ? 'U' : 'D';
        expr += std::to_string(1 + pick(3));
        break;
      default: {
        expr += '(';
        int len = 1 + pick(3);
        for (int j = 0; j < len; ++j) expr += pick(2) ? 'U' : 'D';
        expr += ')';
        if (pick(2)) expr += std::to_string(1 + pick(2));
      }
    }
    expr += ' ';
  }
  if (named) {
    static const char* names[] = {"AP", "SUD", "DSU", "SCARD"};
    expr += names[pick(4)];
  } else if (prefix_atoms == 0 && pick(2)) {
    // bareword
    int len = 1 + pick(5);
    std::string word;
    bool has_d = false;
    for (int j = 0; j < len; ++j) {
      char c = pick(2) ? 'U' : 'D';
      has_d |= c == 'D';
      word += c;
    }
    if (!has_d) word += 'D';
    expr += word;
  } else {
    expr += '(';
    int len = 1 + pick(4);
    std::string word;
    bool has_d = false;
    for (int j = 0; j < len; ++j) {
      char c = pick(2) ? 'U' : 'D';
      has_d |= c == 'D';
      word += c;
    }
    if (!has_d) word += 'D';
    expr += word;
    expr += ")*";
  }
  return expr;
}

}  // namespace

TEST_CASE("round trip over random expressions") {
  std::mt19937_64 rng(20260810);
  for (int iter = 0; iter < 1000; ++iter) {
    std::string expr = random_expression(rng);
    CAPTURE(expr);
    Pattern p = parse(expr);
    Pattern q = parse(format(p));
    REQUIRE(same_letters(p, q, 1000));
  }
}

TEST_CASE("round trip through drop") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 200; ++iter) {
    Pattern p = parse(random_expression(rng));
    Pattern d = p.drop(static_cast<std::int64_t>(rng() % 20));
    Pattern q = parse(format(d));
    REQUIRE(same_letters(d, q, 500));
  }
}
