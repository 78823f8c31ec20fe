#include "carddeal/pattern.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <optional>

#include "carddeal/english.hpp"

namespace carddeal {

namespace {

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Arithmetic-skip base stream: block k is k unders followed by one down,
// so the k-th down sits at index k(k+3)/2 and the block boundaries have
// closed forms.
namespace ap {

std::int64_t d(std::int64_t k) {
  if (k > 100'000'000) throw PatternError("arithmetic-skip index too large");
  return k * (k + 3) / 2;
}

std::int64_t downs_upto(std::int64_t m) {
  if (m <= 1) return 0;
  std::int64_t k = (isqrt(8 * m + 9) - 3) / 2;
  while (d(k + 1) <= m) ++k;
  while (k > 0 && d(k) > m) --k;
  return k;
}

// Unders through the end of block i: d(i) - i = i(i+1)/2.
std::int64_t u(std::int64_t k) {
  std::int64_t i = (isqrt(8 * k + 1) - 1) / 2;
  while (i * (i + 1) / 2 < k) ++i;
  while (i > 1 && (i - 1) * i / 2 >= k) --i;
  return (i > 1 ? d(i - 1) : 0) + (k - (i - 1) * i / 2);
}

}  // namespace ap

// Spelled-number base stream. The block boundaries (indices of the k-th
// down) are shared by every SpellNumber pattern and grow on demand.
class SpellNumberTable {
 public:
  static SpellNumberTable& instance() {
    static SpellNumberTable t;
    return t;
  }

  std::int64_t d(std::int64_t k) {
    std::scoped_lock lock(mu_);
    grow_count(k);
    return ends_[static_cast<std::size_t>(k)];
  }

  std::int64_t downs_upto(std::int64_t m) {
    std::scoped_lock lock(mu_);
    grow_value(m);
    auto it = std::upper_bound(ends_.begin() + 1, ends_.end(), m);
    return it - (ends_.begin() + 1);
  }

  // Index of the k-th under: block i holds letters (d(i-1), d(i)) and
  // contributes d(i) - i unders in total.
  std::int64_t u(std::int64_t k) {
    std::scoped_lock lock(mu_);
    std::int64_t i = 1;
    while (true) {
      grow_count(i);
      std::int64_t have = ends_[static_cast<std::size_t>(i)] - i;
      if (have >= k) break;
      // jump ahead: each block has >= 3 unders
      i += std::max<std::int64_t>(1, (k - have) / 25);
    }
    while (i > 1 && ends_[static_cast<std::size_t>(i - 1)] - (i - 1) >= k) --i;
    std::int64_t before = ends_[static_cast<std::size_t>(i - 1)] - (i - 1);
    return ends_[static_cast<std::size_t>(i - 1)] + (k - before);
  }

  bool is_down(std::int64_t j) {
    std::scoped_lock lock(mu_);
    grow_value(j);
    return std::binary_search(ends_.begin() + 1, ends_.end(), j);
  }

 private:
  void grow_count(std::int64_t k) {
    while (static_cast<std::int64_t>(ends_.size()) <= k) push_block();
  }
  void grow_value(std::int64_t m) {
    while (ends_.back() <= m) push_block();
  }
  void push_block() {
    auto n = static_cast<int>(ends_.size());  // next number to spell
    if (n > 999'999) throw PatternError("spelled number too large");
    ends_.push_back(ends_.back() + english_number_letters(n) + 1);
  }

  std::mutex mu_;
  std::vector<std::int64_t> ends_{0};
};

// Card-name base stream, exactly 13 blocks.
const std::array<std::int64_t, 14>& card_ends() {
  static const std::array<std::int64_t, 14> ends = [] {
    std::array<std::int64_t, 14> e{};
    e[0] = 0;
    for (int r = 1; r <= 13; ++r)
      e[static_cast<std::size_t>(r)] =
          e[static_cast<std::size_t>(r - 1)] + card_rank_letters(r) + 1;
    return e;
  }();
  return ends;
}

constexpr std::int64_t kCardBlocks = 13;

[[noreturn]] void card_range_error() {
  throw PatternError("card-name pattern is defined for 13 deals only");
}

}  // namespace

char to_char(Letter l) { return l == Letter::Down ? 'D' : 'U'; }

Letter letter_from_char(char c) {
  switch (c) {
    case 'U':
    case 'u':
      return Letter::Under;
    case 'D':
    case 'd':
      return Letter::Down;
    default:
      throw std::invalid_argument(std::string("not a letter: ") + c);
  }
}

Pattern Pattern::periodic(std::vector<Letter> word) {
  if (word.empty())
    throw std::invalid_argument("periodic word must be nonempty");
  if (std::find(word.begin(), word.end(), Letter::Down) == word.end())
    throw std::invalid_argument("periodic word must contain a Down");
  Pattern p;
  p.kind_ = BaseKind::Periodic;
  p.word_ = std::move(word);
  p.rebuild_word_tables();
  return p;
}

Pattern Pattern::periodic(std::string_view word) {
  std::vector<Letter> w;
  w.reserve(word.size());
  for (char c : word) w.push_back(letter_from_char(c));
  return periodic(std::move(w));
}

Pattern Pattern::arithmetic_skip() {
  Pattern p;
  p.kind_ = BaseKind::ArithmeticSkip;
  return p;
}

Pattern Pattern::spell_number() {
  Pattern p;
  p.kind_ = BaseKind::SpellNumber;
  return p;
}

Pattern Pattern::spell_card() {
  Pattern p;
  p.kind_ = BaseKind::SpellCard;
  return p;
}

Pattern Pattern::constant_down() {
  Pattern p;
  p.kind_ = BaseKind::ConstantDown;
  return p;
}

Pattern Pattern::with_horizon(std::int64_t cap) const {
  if (cap < 1) throw std::invalid_argument("horizon must be positive");
  Pattern p = *this;
  p.horizon_ = cap;
  return p;
}

void Pattern::rebuild_word_tables() {
  down_pos_.clear();
  up_pos_.clear();
  down_cum_.assign(1, 0);
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] == Letter::Down)
      down_pos_.push_back(static_cast<std::int64_t>(i) + 1);
    else
      up_pos_.push_back(static_cast<std::int64_t>(i) + 1);
    down_cum_.push_back(down_cum_.back() +
                        (word_[i] == Letter::Down ? 1 : 0));
  }
}

Letter Pattern::base_letter(std::int64_t j) const {
  switch (kind_) {
    case BaseKind::Periodic:
      return word_[static_cast<std::size_t>((j - 1) %
                                            static_cast<std::int64_t>(
                                                word_.size()))];
    case BaseKind::ConstantDown:
      return Letter::Down;
    case BaseKind::ArithmeticSkip: {
      std::int64_t k = ap::downs_upto(j);
      return (k >= 1 && ap::d(k) == j) ? Letter::Down : Letter::Under;
    }
    case BaseKind::SpellNumber:
      return SpellNumberTable::instance().is_down(j) ? Letter::Down
                                                     : Letter::Under;
    case BaseKind::SpellCard:
      if (j > card_ends().back()) card_range_error();
      return std::binary_search(card_ends().begin() + 1, card_ends().end(), j)
                 ? Letter::Down
                 : Letter::Under;
  }
  throw std::logic_error("unreachable");
}

std::int64_t Pattern::base_d(std::int64_t k) const {
  switch (kind_) {
    case BaseKind::Periodic: {
      auto p = static_cast<std::int64_t>(word_.size());
      auto dcnt = static_cast<std::int64_t>(down_pos_.size());
      std::int64_t q = (k - 1) / dcnt, r = (k - 1) % dcnt;
      return q * p + down_pos_[static_cast<std::size_t>(r)];
    }
    case BaseKind::ConstantDown:
      return k;
    case BaseKind::ArithmeticSkip:
      return ap::d(k);
    case BaseKind::SpellNumber:
      return SpellNumberTable::instance().d(k);
    case BaseKind::SpellCard:
      if (k > kCardBlocks) card_range_error();
      return card_ends()[static_cast<std::size_t>(k)];
  }
  throw std::logic_error("unreachable");
}

std::int64_t Pattern::base_u(std::int64_t k) const {
  switch (kind_) {
    case BaseKind::Periodic: {
      if (up_pos_.empty())
        throw PatternError("pattern has no unders in its base");
      auto p = static_cast<std::int64_t>(word_.size());
      auto ucnt = static_cast<std::int64_t>(up_pos_.size());
      std::int64_t q = (k - 1) / ucnt, r = (k - 1) % ucnt;
      return q * p + up_pos_[static_cast<std::size_t>(r)];
    }
    case BaseKind::ConstantDown:
      throw PatternError("pattern has no unders in its base");
    case BaseKind::ArithmeticSkip:
      return ap::u(k);
    case BaseKind::SpellNumber:
      return SpellNumberTable::instance().u(k);
    case BaseKind::SpellCard: {
      const auto& ends = card_ends();
      std::int64_t total_u = ends.back() - kCardBlocks;
      if (k > total_u) card_range_error();
      std::int64_t i = 1;
      while (ends[static_cast<std::size_t>(i)] - i < k) ++i;
      std::int64_t before = ends[static_cast<std::size_t>(i - 1)] - (i - 1);
      return ends[static_cast<std::size_t>(i - 1)] + (k - before);
    }
  }
  throw std::logic_error("unreachable");
}

std::int64_t Pattern::base_downs_upto(std::int64_t m) const {
  if (m <= 0) return 0;
  switch (kind_) {
    case BaseKind::Periodic: {
      auto p = static_cast<std::int64_t>(word_.size());
      auto dcnt = static_cast<std::int64_t>(down_pos_.size());
      return (m / p) * dcnt + down_cum_[static_cast<std::size_t>(m % p)];
    }
    case BaseKind::ConstantDown:
      return m;
    case BaseKind::ArithmeticSkip:
      return ap::downs_upto(m);
    case BaseKind::SpellNumber:
      return SpellNumberTable::instance().downs_upto(m);
    case BaseKind::SpellCard: {
      if (m > card_ends().back()) card_range_error();
      auto it = std::upper_bound(card_ends().begin() + 1, card_ends().end(), m);
      return it - (card_ends().begin() + 1);
    }
  }
  throw std::logic_error("unreachable");
}

Letter Pattern::letter_at(std::int64_t i) const {
  if (i < 1) throw std::invalid_argument("letter_at: index must be >= 1");
  auto plen = static_cast<std::int64_t>(prefix_.size());
  if (i <= plen) return prefix_[static_cast<std::size_t>(i - 1)];
  return base_letter(i - plen + base_drop_);
}

std::int64_t Pattern::d_index(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("d_index: count must be >= 1");
  std::int64_t seen = 0;
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i] == Letter::Down && ++seen == k)
      return static_cast<std::int64_t>(i) + 1;
  }
  std::int64_t skipped = base_downs_upto(base_drop_);
  std::int64_t idx = base_d(skipped + (k - seen));
  std::int64_t res = static_cast<std::int64_t>(prefix_.size()) +
                     (idx - base_drop_);
  if (res > horizon_)
    throw PatternError("d_index: answer lies beyond the scan horizon");
  return res;
}

std::int64_t Pattern::u_index(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("u_index: count must be >= 1");
  std::int64_t seen = 0;
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i] == Letter::Under && ++seen == k)
      return static_cast<std::int64_t>(i) + 1;
  }
  std::int64_t skipped = base_drop_ - base_downs_upto(base_drop_);
  std::int64_t idx = base_u(skipped + (k - seen));
  std::int64_t res = static_cast<std::int64_t>(prefix_.size()) +
                     (idx - base_drop_);
  if (res > horizon_)
    throw PatternError("u_index: answer lies beyond the scan horizon");
  return res;
}

PrefixStats Pattern::prefix_counts(std::int64_t m) const {
  if (m < 0) throw std::invalid_argument("prefix_counts: m must be >= 0");
  PrefixStats st;
  st.m = m;
  auto plen = static_cast<std::int64_t>(prefix_.size());
  std::int64_t in_prefix = std::min(m, plen);
  for (std::int64_t i = 0; i < in_prefix; ++i)
    if (prefix_[static_cast<std::size_t>(i)] == Letter::Down) ++st.downs;
  if (m > plen)
    st.downs += base_downs_upto(base_drop_ + (m - plen)) -
                base_downs_upto(base_drop_);
  st.unders = m - st.downs;
  return st;
}

Pattern Pattern::prepend(Letter l) const {
  Pattern p = *this;
  p.prefix_.insert(p.prefix_.begin(), l);
  return p;
}

Pattern Pattern::drop(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("drop: count must be >= 0");
  Pattern p = *this;
  auto plen = static_cast<std::int64_t>(p.prefix_.size());
  std::int64_t from_prefix = std::min(n, plen);
  p.prefix_.erase(p.prefix_.begin(), p.prefix_.begin() + from_prefix);
  std::int64_t rest = n - from_prefix;
  if (rest > 0) {
    switch (kind_) {
      case BaseKind::Periodic: {
        auto per = static_cast<std::int64_t>(p.word_.size());
        auto rot = static_cast<std::size_t>(rest % per);
        std::rotate(p.word_.begin(),
                    p.word_.begin() + static_cast<std::ptrdiff_t>(rot),
                    p.word_.end());
        p.rebuild_word_tables();
        break;
      }
      case BaseKind::ConstantDown:
        break;
      default:
        p.base_drop_ += rest;
    }
  }
  return p;
}

bool Pattern::operator==(const Pattern& other) const {
  return kind_ == other.kind_ && word_ == other.word_ &&
         prefix_ == other.prefix_ && base_drop_ == other.base_drop_;
}

bool same_letters(const Pattern& a, const Pattern& b, std::int64_t upto) {
  auto probe = [](const Pattern& p, std::int64_t i) -> std::optional<Letter> {
    try {
      return p.letter_at(i);
    } catch (const PatternError&) {
      return std::nullopt;
    }
  };
  for (std::int64_t i = 1; i <= upto; ++i) {
    auto la = probe(a, i), lb = probe(b, i);
    if (la != lb) return false;
    if (!la) return true;  // both ended at the same index
  }
  return true;
}

}  // namespace carddeal
