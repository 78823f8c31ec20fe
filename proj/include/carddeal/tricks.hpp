#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "carddeal/pattern.hpp"

namespace carddeal {

struct Congruence {
  std::int64_t residue = 0;
  std::int64_t modulus = 1;  // >= 1
};

struct CrtSolution {
  std::int64_t residue = 0;  // 0 <= residue < modulus
  std::int64_t modulus = 1;  // lcm of the input moduli
};

// Solves a system of congruences with possibly non-coprime moduli.
// Returns the unique class modulo the lcm, or nullopt when some pair of
// congruences disagrees modulo the gcd of its moduli.
std::optional<CrtSolution> crt_solve(std::span<const Congruence> cs);

struct TrickReport {
  enum class Verdict { Pass, Fail, Infeasible };

  std::string trick;
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::Fail;
  std::vector<std::pair<std::string, std::int64_t>> solved;
  std::vector<std::string> trace;

  bool passed() const { return verdict == Verdict::Pass; }
};

const char* to_string(TrickReport::Verdict v);

// One audience insertion for double-dealing: take the top `take` cards and
// put them back with `depth` cards above them; the block must land
// strictly between the top and the bottom card.
struct Insertion {
  int take = 1;
  int depth = 1;
};

// Cut to the freed position, let the audience cut by their index, deal;
// the last card dealt is the one the audience remembered.
TrickReport know_freed(const Pattern& p, int n, int audience_index);

// Chosen card on top, deal; works when the freed position is 1.
TrickReport spelling_bee(const Pattern& p, int n);

// Chosen card at the bottom, deal twice with mid-deck insertions between;
// works when the freed position is N.
TrickReport double_dealing(const Pattern& p, int n,
                           std::span<const Insertion> script);

// Four aces on top, chosen card fifth; deal five face down (reversing
// them), discard the rest, then deal U^3D. Works for any starting size.
TrickReport ace_quartet(int deck_size);

// Variant without the five-card reduction: the target sits at the freed
// position of (p, n) and the plain deal reveals it.
TrickReport freed_position_reveal(const Pattern& p, int n, int target_pos);

// Least positive shift l with l = -F^P(2n-1-i) mod (2n-1-i) for every
// discard count i in 0..k, or nullopt when the system is infeasible.
std::optional<std::int64_t> love_ritual_solve(const Pattern& p, int n, int k);

// The full residue class behind love_ritual_solve.
std::optional<CrtSolution> love_ritual_class(const Pattern& p, int n, int k);

// Runs the ritual for every discard count in 0..k, every cut offset, and a
// fixed set of insertion arrangements; passes when the leftover card
// matches the safe card in every branch.
TrickReport love_ritual_verify(const Pattern& p, int n, int k,
                               std::int64_t ell);

// Deal-and-stack, flip the top card, cut, then repeatedly split into
// `base` piles keeping the flipped card's pile; the survivor next to the
// flipped card is the audience's card. Requires deck size base^exponent
// and J^P(b^a, b^{a-1}) = b^a (reported infeasible otherwise).
TrickReport power_of_b(const Pattern& p, int base, int exponent,
                       std::span<const int> cut_script);

// Alternating-color deck survives cuts, an under-down deal, half-deck
// shuffles, and a perfect riffle.
TrickReport stripes(int half, std::span<const int> cuts_before,
                    std::span<const int> cuts_after);

// Multiplicative order of the permutation in row n of the Josephus
// triangle.
int permutation_order(const Pattern& p, int n);

// Deal face up and flip, k-1 times, then one final deal that comes out
// sorted, where k is the permutation order of the Josephus row.
TrickReport kth_time_verify(const Pattern& p, int n);

}  // namespace carddeal
