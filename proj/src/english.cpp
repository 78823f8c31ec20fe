#include "carddeal/english.hpp"

#include <array>
#include <stdexcept>

namespace carddeal {

namespace {

constexpr std::array<const char*, 20> kOnes = {
    "",        "one",     "two",     "three",    "four",
    "five",    "six",     "seven",   "eight",    "nine",
    "ten",     "eleven",  "twelve",  "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};

constexpr std::array<const char*, 10> kTens = {
    "",      "",      "twenty",  "thirty", "forty",
    "fifty", "sixty", "seventy", "eighty", "ninety"};

void append_below_thousand(int n, std::string& out) {
  if (n >= 100) {
    out += kOnes[static_cast<std::size_t>(n / 100)];
    out += "hundred";
    n %= 100;
  }
  if (n >= 20) {
    out += kTens[static_cast<std::size_t>(n / 10)];
    n %= 10;
  }
  out += kOnes[static_cast<std::size_t>(n)];
}

constexpr std::array<const char*, 14> kRanks = {
    "",     "ace",  "two",   "three", "four", "five", "six",
    "seven", "eight", "nine", "ten",  "jack", "queen", "king"};

}  // namespace

std::string english_number_name(int n) {
  if (n < 1 || n > 999'999)
    throw std::invalid_argument("english_number_name: n out of range");
  std::string out;
  if (n >= 1000) {
    append_below_thousand(n / 1000, out);
    out += "thousand";
    n %= 1000;
  }
  append_below_thousand(n, out);
  return out;
}

int english_number_letters(int n) {
  return static_cast<int>(english_number_name(n).size());
}

std::string card_rank_name(int rank) {
  if (rank < 1 || rank > 13)
    throw std::invalid_argument("card_rank_name: rank out of range");
  return kRanks[static_cast<std::size_t>(rank)];
}

int card_rank_letters(int rank) {
  return static_cast<int>(card_rank_name(rank).size());
}

}  // namespace carddeal
