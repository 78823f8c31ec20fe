#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "carddeal/pattern.hpp"

namespace carddeal {

// Everything a full deal of N cards produces: the labels in the order they
// were dealt (row N of the Josephus triangle), the total number of letters
// consumed, the last label dealt (the freed person), and the rank at which
// label 1 was dealt.
struct DealOutcome {
  std::vector<int> deal_order;
  std::int64_t moves = 0;
  int freed = 0;             // 0 for the empty deck
  int first_card_order = 0;  // 0 for the empty deck
};

// Rows 1..N of a dealing or Josephus triangle; row N is a permutation of
// 1..N, and for a fixed pattern the two flavors are rowwise inverse.
struct Triangle {
  enum class Flavor { Dealing, Josephus };
  Flavor flavor = Flavor::Dealing;
  std::vector<std::vector<int>> rows;

  const std::vector<int>& row(int n) const {
    return rows.at(static_cast<std::size_t>(n - 1));
  }
  int entry(int n, int k) const {
    return row(n).at(static_cast<std::size_t>(k - 1));
  }
  int size() const { return static_cast<int>(rows.size()); }
};

// Deals an arbitrary arrangement to exhaustion; returns labels in deal
// order. The deck is a queue: Under cycles the front label to the back,
// Down removes and records it.
std::vector<int> deal_sequence(const Pattern& p, const std::vector<int>& deck);

// Deals labels 1..n. n = 0 yields the empty outcome.
DealOutcome simulate_deal(const Pattern& p, int n);

// Row n of the dealing triangle: result[pos-1] is the rank at which the
// card at position pos is dealt (the inverse of simulate_deal's order).
std::vector<int> dealing_row(const Pattern& p, int n);

// Builds the prepared deck by the backward procedure: walk the first
// d_n letters from last to first; on Down put the highest unplaced label
// on top, on Under move the bottom card to the top. Equals dealing_row.
std::vector<int> prepare_deck(const Pattern& p, int n);

// Applies exactly the first n letters to labels 1..n; returns the dealt
// labels and the remaining deck in queue order (first skipped card first).
std::pair<std::vector<int>, std::vector<int>> deal_one_round(const Pattern& p,
                                                             int n);

// Triangles assembled from simulated rows 1..n.
Triangle simulated_triangle(const Pattern& p, int n, Triangle::Flavor flavor);

}  // namespace carddeal
