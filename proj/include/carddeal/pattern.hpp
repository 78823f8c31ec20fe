#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace carddeal {

// A single dealing move: Under cycles the top card to the bottom of the
// deck, Down deals the top card onto the table.
enum class Letter : std::uint8_t { Under, Down };

char to_char(Letter l);
Letter letter_from_char(char c);

// Letter tallies for the first m letters of a pattern; downs + unders == m.
struct PrefixStats {
  std::int64_t m = 0;
  std::int64_t downs = 0;
  std::int64_t unders = 0;
};

// Raised when a positional query cannot be answered: the answer would lie
// beyond the scan horizon, the pattern runs out of unders, or a card-name
// pattern is queried past its 13 deals.
class PatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BaseKind : std::uint8_t {
  Periodic,        // repeats a fixed word forever
  ArithmeticSkip,  // UD UUD UUUD ... (one more under before each deal)
  SpellNumber,     // spell ONE, deal, spell TWO, deal, ...
  SpellCard,       // spell ACE..KING, deal after each; exactly 13 deals
  ConstantDown,    // D forever
};

// An infinite under/down sequence: a base generator, a finite prefix in
// front of it (possibly empty), and a count of leading base letters that
// were removed. Values are immutable; all queries are pure and 1-based,
// so they are safe to share across threads.
class Pattern {
 public:
  static constexpr std::int64_t kDefaultHorizon = 10'000'000;

  // The word must be nonempty and contain at least one Down.
  static Pattern periodic(std::vector<Letter> word);
  static Pattern periodic(std::string_view word);  // e.g. "UUD"
  static Pattern arithmetic_skip();
  static Pattern spell_number();
  static Pattern spell_card();
  static Pattern constant_down();

  BaseKind base_kind() const { return kind_; }
  const std::vector<Letter>& base_word() const { return word_; }
  const std::vector<Letter>& prefix() const { return prefix_; }
  std::int64_t base_drop() const { return base_drop_; }
  std::int64_t horizon() const { return horizon_; }
  Pattern with_horizon(std::int64_t cap) const;

  // The i-th letter of the composite sequence, i >= 1.
  Letter letter_at(std::int64_t i) const;

  // Index of the k-th Down, k >= 1. Monotone increasing in k.
  std::int64_t d_index(std::int64_t k) const;

  // Index of the k-th Under, k >= 1.
  std::int64_t u_index(std::int64_t k) const;

  // Letter tallies over the first m letters, m >= 0.
  PrefixStats prefix_counts(std::int64_t m) const;

  // New pattern with l in front: result.letter_at(1) == l and
  // result.letter_at(i + 1) == letter_at(i).
  Pattern prepend(Letter l) const;

  // New pattern with the first n letters removed, n >= 0. Dropping into a
  // periodic base rotates the word, so pure periodic patterns stay pure.
  Pattern drop(std::int64_t n) const;

  // Structural equality: same base kind, word, prefix, and drop count.
  bool operator==(const Pattern& other) const;

 private:
  Pattern() = default;

  Letter base_letter(std::int64_t j) const;
  std::int64_t base_d(std::int64_t k) const;
  std::int64_t base_u(std::int64_t k) const;
  std::int64_t base_downs_upto(std::int64_t m) const;
  void rebuild_word_tables();

  BaseKind kind_ = BaseKind::ConstantDown;
  std::vector<Letter> word_;   // Periodic only
  std::vector<Letter> prefix_;
  std::int64_t base_drop_ = 0;
  std::int64_t horizon_ = kDefaultHorizon;

  // Lookup tables derived from word_ (Periodic only).
  std::vector<std::int64_t> down_pos_;  // 1-based positions of D in word_
  std::vector<std::int64_t> up_pos_;
  std::vector<std::int64_t> down_cum_;  // down_cum_[i]: downs in word_[0..i)
};

// True when a and b agree letter-for-letter on indices 1..upto. Patterns
// that stop answering (card-name spelling) must stop at the same index.
bool same_letters(const Pattern& a, const Pattern& b, std::int64_t upto);

}  // namespace carddeal
