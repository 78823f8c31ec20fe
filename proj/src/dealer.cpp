#include "carddeal/dealer.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace carddeal {

std::vector<int> deal_sequence(const Pattern& p, const std::vector<int>& deck) {
  std::deque<int> q(deck.begin(), deck.end());
  std::vector<int> dealt;
  dealt.reserve(deck.size());
  std::int64_t i = 0;
  while (!q.empty()) {
    ++i;
    if (i > p.horizon())
      throw PatternError("dealing exceeded the scan horizon");
    if (p.letter_at(i) == Letter::Down) {
      dealt.push_back(q.front());
      q.pop_front();
    } else {
      q.push_back(q.front());
      q.pop_front();
    }
  }
  return dealt;
}

DealOutcome simulate_deal(const Pattern& p, int n) {
  if (n < 0) throw std::invalid_argument("simulate_deal: n must be >= 0");
  DealOutcome out;
  if (n == 0) return out;
  std::vector<int> deck(static_cast<std::size_t>(n));
  std::iota(deck.begin(), deck.end(), 1);

  std::deque<int> q(deck.begin(), deck.end());
  std::int64_t i = 0;
  while (!q.empty()) {
    ++i;
    if (i > p.horizon())
      throw PatternError("dealing exceeded the scan horizon");
    if (p.letter_at(i) == Letter::Down) {
      out.deal_order.push_back(q.front());
      q.pop_front();
    } else {
      q.push_back(q.front());
      q.pop_front();
    }
  }
  out.moves = i;
  out.freed = out.deal_order.back();
  auto it = std::find(out.deal_order.begin(), out.deal_order.end(), 1);
  out.first_card_order =
      static_cast<int>(it - out.deal_order.begin()) + 1;
  return out;
}

std::vector<int> dealing_row(const Pattern& p, int n) {
  if (n < 1) throw std::invalid_argument("dealing_row: n must be >= 1");
  auto order = simulate_deal(p, n).deal_order;
  std::vector<int> row(static_cast<std::size_t>(n));
  for (int rank = 1; rank <= n; ++rank)
    row[static_cast<std::size_t>(order[static_cast<std::size_t>(rank - 1)] -
                                 1)] = rank;
  return row;
}

std::vector<int> prepare_deck(const Pattern& p, int n) {
  if (n < 1) throw std::invalid_argument("prepare_deck: n must be >= 1");
  std::int64_t len = p.d_index(n);
  std::deque<int> deck;
  int next = n;
  for (std::int64_t i = len; i >= 1; --i) {
    if (p.letter_at(i) == Letter::Down) {
      deck.push_front(next--);
    } else {
      deck.push_front(deck.back());
      deck.pop_back();
    }
  }
  return {deck.begin(), deck.end()};
}

std::pair<std::vector<int>, std::vector<int>> deal_one_round(const Pattern& p,
                                                             int n) {
  if (n < 1) throw std::invalid_argument("deal_one_round: n must be >= 1");
  std::deque<int> q;
  for (int c = 1; c <= n; ++c) q.push_back(c);
  std::vector<int> dealt;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (p.letter_at(i) == Letter::Down) {
      dealt.push_back(q.front());
      q.pop_front();
    } else {
      q.push_back(q.front());
      q.pop_front();
    }
  }
  return {std::move(dealt), std::vector<int>(q.begin(), q.end())};
}

Triangle simulated_triangle(const Pattern& p, int n, Triangle::Flavor flavor) {
  Triangle t;
  t.flavor = flavor;
  t.rows.reserve(static_cast<std::size_t>(n));
  for (int row = 1; row <= n; ++row) {
    t.rows.push_back(flavor == Triangle::Flavor::Dealing
                         ? dealing_row(p, row)
                         : simulate_deal(p, row).deal_order);
  }
  return t;
}

}  // namespace carddeal
