#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "carddeal/pattern.hpp"

namespace carddeal {

// Syntax or semantic error in a pattern expression; position is the
// 0-based character offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Pattern expression grammar (whitespace between atoms is insignificant,
// keywords are case-insensitive):
//
//   expr    := prefix* base
//   prefix  := letter | letter count | "(" letter+ ")" count?
//   base    := "(" letter+ ")" "*" | bareword | name (">>" count)?
//   letter  := "U" | "D"
//   name    := "AP" | "SUD" | "DSU" | "SCARD"
//
// A bareword is a trailing run of letter atoms (counts allowed) and
// denotes the periodic pattern with that word as its period, matching the
// shorthand "UD" for UDUDUD...; "U2D" is the same pattern as "UUD". With
// an explicit base — a starred group or a name — every preceding atom
// contributes prefix letters: "D SUD" is SUD prepended with D (also
// spelled "DSU"). An all-D bareword of length 1 is the constant-down
// pattern. "NAME>>n" denotes a named base with its first n letters
// removed; it is emitted by format() for patterns that drop() produced
// and have no other spelling.
Pattern parse(std::string_view text);

// Canonical rendering; parse(format(p)) equals p letter-for-letter.
// Periodic words and prefixes are spelled as plain letters ("UUUD", never
// "U3D"); a prefix is followed by "(word)*" or by a space and a name.
std::string format(const Pattern& p);

}  // namespace carddeal
