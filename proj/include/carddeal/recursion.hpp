#pragma once

#include <cstdint>
#include <vector>

#include "carddeal/dealer.hpp"
#include "carddeal/pattern.hpp"

namespace carddeal {

// Implementations of the dealing recursions and closed forms, independent
// of the brute-force simulator so the two can be cross-checked.

// Total moves to deal n cards: d_n in general, with a closed-form fast
// path for periodic patterns (full periods plus the last partial one).
std::int64_t moves(const Pattern& p, std::int64_t n);

// Row n of the dealing triangle via the one-round recursion: ranks land on
// down positions directly, and the skipped positions take the next round's
// row (computed for the pattern with the first n letters removed) shifted
// by this round's deal count.
std::vector<int> triangle_T_row(const Pattern& p, int n);

// Row n of the Josephus triangle via the one-round recursion: the k-th
// deal is d_k while the first round lasts, afterwards the entry is the
// under-index selected by the next round's row.
std::vector<int> triangle_J_row(const Pattern& p, int n);

Triangle triangle_T(const Pattern& p, int n);
Triangle triangle_J(const Pattern& p, int n);

// Verifies the prepend identities for dealing triangles: row entries of
// D-prepended and U-prepended patterns against the original, up to row n.
bool triangle_T_prepend_check(const Pattern& p, int n);

// Same for Josephus triangles.
bool josephus_prepend_check(const Pattern& p, int n);

// Verifies the UD/DU building recursions, the column reductions, the
// halving recursions, the previous-row recursions, and the cross
// expressions between the two Josephus triangles, up to row n.
bool ud_pair_recursions_check(int n);

// Position of the last card dealt (the freed person), via the one-round
// recursion: n when the first n letters are all downs, otherwise the
// under-index of the next round's freed position.
int freed(const Pattern& p, int n);

// Rank at which the card at position 1 is dealt: 1 when the pattern leads
// with a down, otherwise the next round's rank plus this round's deals.
int elim_first(const Pattern& p, int n);

// Dealing-triangle entry (n, k) for a periodic pattern, computed only via
// the period recursions plus simulated base rows below the period length.
std::int64_t periodic_triangle_entry(const Pattern& p, int n, int k);

// Josephus-triangle entry (n, k) for a periodic pattern, same regime.
std::int64_t periodic_josephus_entry(const Pattern& p, int n, int k);

// Stabilized value of column k of the Josephus triangle, which is d_k.
std::int64_t infinity_row(const Pattern& p, std::int64_t k);

// Freed position for the deal-every-x pattern (U^{x-1}D) by the
// single-elimination recursion, O(n).
int skipx_freed(int x, int n);

// Verifies the deal-every-x identities against simulated triangles up to
// row n: the triangle building rule, the Josephus cases, the first-person
// elimination identities, and the row-insertion description.
bool skipx_checks(int x, int n);

// First column of the UD dealing triangle in closed form; the 2-adic
// formula and the binary-string description are both evaluated and must
// agree.
std::int64_t ud_first_col_closed(std::int64_t n);

// Any entry of the UD dealing triangle in closed form.
std::int64_t ud_triangle_closed(std::int64_t n, std::int64_t k);

// Freed position for UD in closed form.
std::int64_t ud_freed_closed(std::int64_t n);

// Verifies the repeated-value anti-diagonals of the UD triangle under the
// stated parity conditions up to row n, and that the identity fails at
// (9,7) -> (10,5) without them.
bool ud_antidiagonal_check(int n);

// For every deck size u_1 <= N <= n_max and every down position i within
// the period: freed(N) is never congruent to i mod the period.
bool periodic_freed_modularity_check(const Pattern& p, int n_max);

// First-person elimination identities for periodic patterns starting with
// an under: the kp + d_i - 1 rule and the period-multiple reduction.
bool periodic_elim_first_checks(const Pattern& p, int n_max);

}  // namespace carddeal
