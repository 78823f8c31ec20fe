#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "carddeal/pattern.hpp"

namespace carddeal {

enum class Family {
  Moves,         // total moves for deck sizes 1, 2, ...
  TriangleFlat,  // dealing triangle read by rows
  JosephusFlat,  // Josephus triangle read by rows
  Freed,         // last position dealt, per deck size
  ElimFirst,     // rank at which position 1 is dealt, per deck size
  FirstFreed,    // deck sizes whose last deal is position 1
  LastFreed,     // deck sizes whose last deal is position N
};

struct SequenceSpec {
  Pattern pattern;
  Family family = Family::Freed;
  std::int64_t count = 1;               // number of terms requested
  std::int64_t search_limit = 10'000;   // deck-size bound for the searches
};

struct SequenceResult {
  std::vector<std::int64_t> terms;
  std::int64_t offset = 1;
  // False when a FirstFreed/LastFreed search ran out of deck sizes before
  // producing `count` terms; never an exception.
  bool complete = true;
};

SequenceResult generate(const SequenceSpec& spec);

// Closed forms for the special deck-size sequences. Recognized names:
// "S-UDD", "L-UD", "L-DU", "L-DDU", "L-DUD", "L-UDD", and "L-UUD-step"
// (whose argument is the current odd term, not an index). Values grow
// exponentially, hence the big integer.
boost::multiprecision::cpp_int special_size_closed_form(std::string_view name,
                                                        std::int64_t m);

// Verifies the prefix-stripping membership rule for first-freed deck
// sizes, last-freed = first-freed of the U-prepended pattern, and the
// shift law for D-prepended patterns, for terms within limit 3 * m_max.
bool prepend_relations_check(const Pattern& p, int m_max);

// OEIS b-file text: one "index value" line per term, ASCII, newline
// terminated.
std::string bfile_export(const SequenceResult& result);

// Parses b-file text back (indices must be consecutive).
SequenceResult bfile_read(std::string_view text);

}  // namespace carddeal
