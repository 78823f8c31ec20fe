#pragma once

#include <string>

namespace carddeal {

// English name of n for 1 <= n <= 999999, lowercase, with hyphens and
// spaces omitted ("twentyone", "onehundredfive").
std::string english_number_name(int n);

// Letter count of the English name of n (alphabetic characters only).
int english_number_letters(int n);

// Card rank names: 1 -> "ace", 2 -> "two", ..., 11 -> "jack",
// 12 -> "queen", 13 -> "king".
std::string card_rank_name(int rank);
int card_rank_letters(int rank);

}  // namespace carddeal
