#include "carddeal/tricks.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "carddeal/dealer.hpp"
#include "carddeal/pattern_lang.hpp"
#include "carddeal/recursion.hpp"

namespace carddeal {

namespace {

constexpr std::uint64_t kTrickSeed = 0x5eedcafe;

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// x with (a * x) % m == gcd(a, m), for m >= 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair(r, old_r - q * r);
    std::tie(old_s, s) = std::pair(s, old_s - q * s);
  }
  return mod_floor(old_s, m);
}

void rotate_deck(std::vector<int>& deck, std::int64_t offset) {
  if (deck.empty()) return;
  auto sz = static_cast<std::int64_t>(deck.size());
  auto r = static_cast<std::size_t>(mod_floor(offset, sz));
  std::rotate(deck.begin(), deck.begin() + static_cast<std::ptrdiff_t>(r),
              deck.end());
}

std::vector<int> iota_deck(int n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  std::iota(d.begin(), d.end(), 1);
  return d;
}

void add_param(TrickReport& r, std::string key, std::string value) {
  r.params.emplace_back(std::move(key), std::move(value));
}

void add_param(TrickReport& r, std::string key, std::int64_t value) {
  r.params.emplace_back(std::move(key), std::to_string(value));
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

const char* to_string(TrickReport::Verdict v) {
  switch (v) {
    case TrickReport::Verdict::Pass:
      return "pass";
    case TrickReport::Verdict::Fail:
      return "fail";
    case TrickReport::Verdict::Infeasible:
      return "infeasible";
  }
  return "?";
}

std::optional<CrtSolution> crt_solve(std::span<const Congruence> cs) {
  std::int64_t r = 0, m = 1;
  for (const Congruence& c : cs) {
    if (c.modulus < 1)
      throw std::invalid_argument("crt_solve: modulus must be >= 1");
    std::int64_t cr = mod_floor(c.residue, c.modulus);
    std::int64_t g = std::gcd(m, c.modulus);
    if (mod_floor(cr - r, g) != 0) return std::nullopt;
    std::int64_t mg = m / g, cg = c.modulus / g;
    // r' = r + m * t with t = (cr - r)/g * inv(m/g) mod (c.modulus/g)
    auto diff = static_cast<__int128>(cr - r) / g;
    std::int64_t t = static_cast<std::int64_t>(
        mod_floor(static_cast<std::int64_t>(diff % cg), cg));
    t = static_cast<std::int64_t>(
        (static_cast<__int128>(t) * mod_inverse(mg, cg)) % cg);
    std::int64_t lcm = mg * c.modulus;
    r = static_cast<std::int64_t>(
        mod_floor(static_cast<std::int64_t>(
                      (static_cast<__int128>(m) * t + r) % lcm),
                  lcm));
    m = lcm;
  }
  return CrtSolution{r, m};
}

TrickReport know_freed(const Pattern& p, int n, int audience_index) {
  if (audience_index < 1 || audience_index > n)
    throw std::invalid_argument("know_freed: index out of range");
  TrickReport rep;
  rep.trick = "know-freed";
  add_param(rep, "pattern", format(p));
  add_param(rep, "deck", n);
  add_param(rep, "index", audience_index);

  int f = freed(p, n);
  std::vector<int> deck = iota_deck(n);  // labels are positions after shuffle
  rotate_deck(deck, n - f);
  rep.trace.push_back("performer cuts " + std::to_string(n - f) +
                      " cards to the bottom");
  rotate_deck(deck, audience_index);
  rep.trace.push_back("audience cuts " + std::to_string(audience_index) +
                      " cards to the bottom");
  auto dealt = deal_sequence(p, deck);
  rep.trace.push_back("last card dealt: position " +
                      std::to_string(dealt.back()));
  rep.verdict = dealt.back() == audience_index ? TrickReport::Verdict::Pass
                                               : TrickReport::Verdict::Fail;
  return rep;
}

TrickReport spelling_bee(const Pattern& p, int n) {
  TrickReport rep;
  rep.trick = "spelling-bee";
  add_param(rep, "pattern", format(p));
  add_param(rep, "deck", n);

  int f = freed(p, n);
  rep.trace.push_back("freed position is " + std::to_string(f));
  auto dealt = deal_sequence(p, iota_deck(n));  // chosen card is label 1, on top
  rep.trace.push_back("last card dealt: position " +
                      std::to_string(dealt.back()));
  rep.verdict = (f == 1 && dealt.back() == 1) ? TrickReport::Verdict::Pass
                                              : TrickReport::Verdict::Fail;
  return rep;
}

TrickReport double_dealing(const Pattern& p, int n,
                           std::span<const Insertion> script) {
  TrickReport rep;
  rep.trick = "double-dealing";
  add_param(rep, "pattern", format(p));
  add_param(rep, "deck", n);

  const int chosen = n;  // placed at the bottom of 1..n-1
  std::vector<int> deck = iota_deck(n);
  rep.trace.push_back("chosen card placed at the bottom");

  auto dealt = deal_sequence(p, deck);
  deck.assign(dealt.rbegin(), dealt.rend());  // dealt pile becomes the deck
  rep.trace.push_back("first deal done; new top is " +
                      std::to_string(deck.front()));
  rotate_deck(deck, 1);
  rep.trace.push_back("top card cycled to the bottom");

  for (const Insertion& ins : script) {
    auto sz = static_cast<int>(deck.size());
    if (ins.take < 1 || ins.depth < 1 || ins.take + ins.depth > sz - 1)
      throw std::invalid_argument(
          "double_dealing: insertion would touch the top or bottom card");
    std::vector<int> block(deck.begin(), deck.begin() + ins.take);
    deck.erase(deck.begin(), deck.begin() + ins.take);
    deck.insert(deck.begin() + ins.depth, block.begin(), block.end());
    rep.trace.push_back("audience buries the top " +
                        std::to_string(ins.take) + " cards at depth " +
                        std::to_string(ins.depth));
  }

  dealt = deal_sequence(p, deck);
  rep.trace.push_back("second deal; last card is " +
                      std::to_string(dealt.back()));
  rep.verdict = dealt.back() == chosen ? TrickReport::Verdict::Pass
                                       : TrickReport::Verdict::Fail;
  return rep;
}

TrickReport ace_quartet(int deck_size) {
  if (deck_size < 5)
    throw std::invalid_argument("ace_quartet: deck must hold 5 cards");
  TrickReport rep;
  rep.trick = "ace-quartet";
  add_param(rep, "deck", deck_size);

  // Labels: 1..4 aces, 5 the chosen card, the rest filler.
  std::vector<int> deck = iota_deck(deck_size);
  std::vector<int> five(deck.begin(), deck.begin() + 5);
  std::reverse(five.begin(), five.end());  // dealt face down one by one
  rep.trace.push_back("top five dealt face down, rest discarded");

  auto dealt = deal_sequence(Pattern::periodic("UUUD"), five);
  bool aces_first = std::all_of(dealt.begin(), dealt.end() - 1,
                                [](int c) { return c <= 4; });
  rep.trace.push_back("final card: " + std::to_string(dealt.back()));
  rep.verdict = (aces_first && dealt.back() == 5)
                    ? TrickReport::Verdict::Pass
                    : TrickReport::Verdict::Fail;
  return rep;
}

TrickReport freed_position_reveal(const Pattern& p, int n, int target_pos) {
  if (target_pos < 1 || target_pos > n)
    throw std::invalid_argument("freed_position_reveal: bad position");
  TrickReport rep;
  rep.trick = "freed-position-reveal";
  add_param(rep, "pattern", format(p));
  add_param(rep, "deck", n);
  add_param(rep, "target", target_pos);
  auto dealt = deal_sequence(p, iota_deck(n));
  rep.trace.push_back("last card dealt: position " +
                      std::to_string(dealt.back()));
  rep.verdict = dealt.back() == target_pos ? TrickReport::Verdict::Pass
                                           : TrickReport::Verdict::Fail;
  return rep;
}

std::optional<CrtSolution> love_ritual_class(const Pattern& p, int n, int k) {
  if (n < 2) throw std::invalid_argument("love_ritual: n must be >= 2");
  if (k < 0 || k >= 2 * n - 1)
    throw std::invalid_argument("love_ritual: k out of range");
  std::vector<Congruence> cs;
  for (int i = 0; i <= k; ++i) {
    std::int64_t m = 2 * n - 1 - i;
    cs.push_back({mod_floor(-freed(p, static_cast<int>(m)), m), m});
  }
  return crt_solve(cs);
}

std::optional<std::int64_t> love_ritual_solve(const Pattern& p, int n, int k) {
  auto cls = love_ritual_class(p, n, k);
  if (!cls) return std::nullopt;
  return cls->residue > 0 ? cls->residue : cls->modulus;
}

TrickReport love_ritual_verify(const Pattern& p, int n, int k,
                               std::int64_t ell) {
  if (ell < 0) throw std::invalid_argument("love_ritual_verify: ell >= 0");
  TrickReport rep;
  rep.trick = "love-ritual";
  add_param(rep, "pattern", format(p));
  add_param(rep, "half-deck", n);
  add_param(rep, "max-discards", k);
  add_param(rep, "seed", static_cast<std::int64_t>(kTrickSeed));
  rep.solved.emplace_back("ell", ell);

  // Halves: card i and card i + n are the two halves of one original.
  auto match_of = [n](int card) { return card > n ? card - n : card + n; };

  std::mt19937_64 rng(kTrickSeed);
  bool all_pass = true;
  std::int64_t branches = 0;

  for (int x = 0; x <= k && all_pass; ++x) {
    for (int cut = 0; cut < 2 * n && all_pass; ++cut) {
      for (int arrange = 0; arrange < 3 && all_pass; ++arrange) {
        for (int fiddle = 0; fiddle < 2 && all_pass; ++fiddle) {
          std::vector<int> deck = iota_deck(2 * n);
          rotate_deck(deck, cut);

          // Bury the top n-1 cards strictly inside the rest.
          std::vector<int> block(deck.begin(), deck.begin() + (n - 1));
          deck.erase(deck.begin(), deck.begin() + (n - 1));
          if (arrange == 1) {
            std::reverse(block.begin(), block.end());
          } else if (arrange == 2) {
            std::shuffle(block.begin(), block.end(), rng);
          }
          auto rest = static_cast<int>(deck.size());
          int depth = 1 + static_cast<int>(rng() % static_cast<unsigned>(
                                                       rest - 1));
          deck.insert(deck.begin() + depth, block.begin(), block.end());

          int safe = deck.front();
          deck.erase(deck.begin());

          if (fiddle == 1 && deck.size() >= 3) {
            // allowed extra: move the top card into the middle
            int top = deck.front();
            deck.erase(deck.begin());
            deck.insert(deck.begin() +
                            static_cast<std::ptrdiff_t>(deck.size() / 2),
                        top);
          }

          deck.erase(deck.begin(), deck.begin() + x);  // discard x cards
          rotate_deck(deck, ell);                      // deal ell to the bottom

          auto dealt = deal_sequence(p, deck);
          ++branches;
          if (match_of(dealt.back()) != safe) {
            all_pass = false;
            rep.trace.push_back(
                "mismatch at discards=" + std::to_string(x) +
                " cut=" + std::to_string(cut) +
                ": leftover " + std::to_string(dealt.back()) +
                " does not match safe card " + std::to_string(safe));
          }
        }
      }
    }
  }
  rep.trace.push_back(std::to_string(branches) + " branches simulated");
  rep.verdict =
      all_pass ? TrickReport::Verdict::Pass : TrickReport::Verdict::Fail;
  return rep;
}

TrickReport power_of_b(const Pattern& p, int base, int exponent,
                       std::span<const int> cut_script) {
  if (base < 2) throw std::invalid_argument("power_of_b: base must be >= 2");
  if (exponent < 1)
    throw std::invalid_argument("power_of_b: exponent must be >= 1");
  std::int64_t size = 1;
  for (int i = 0; i < exponent; ++i) {
    size *= base;
    if (size > (1 << 20))
      throw std::invalid_argument("power_of_b: deck too large");
  }
  auto n = static_cast<int>(size);

  TrickReport rep;
  rep.trick = "power-of-b";
  add_param(rep, "pattern", format(p));
  add_param(rep, "base", base);
  add_param(rep, "exponent", exponent);
  add_param(rep, "deck", n);

  const int target = n;  // the shown bottom card
  auto out = simulate_deal(p, n);
  std::int64_t key = 1;
  for (int i = 1; i < exponent; ++i) key *= base;
  if (out.deal_order[static_cast<std::size_t>(key - 1)] != n) {
    rep.verdict = TrickReport::Verdict::Infeasible;
    rep.trace.push_back("pattern does not deal the bottom card at rank " +
                        std::to_string(key));
    return rep;
  }

  std::vector<int> deck(out.deal_order.rbegin(), out.deal_order.rend());
  int flipped = deck.front();
  rep.trace.push_back("flipped card: " + std::to_string(flipped));
  for (int cut : cut_script) rotate_deck(deck, cut);

  while (static_cast<int>(deck.size()) > base) {
    // Piles are fanned on the table, so each keeps dealing order.
    std::vector<std::vector<int>> piles(static_cast<std::size_t>(base));
    for (std::size_t i = 0; i < deck.size(); ++i)
      piles[i % static_cast<std::size_t>(base)].push_back(deck[i]);
    std::size_t keep = 0;
    for (std::size_t j = 0; j < piles.size(); ++j) {
      if (std::find(piles[j].begin(), piles[j].end(), flipped) !=
          piles[j].end())
        keep = j;
    }
    deck = std::move(piles[keep]);
    rep.trace.push_back("kept the pile of " +
                        std::to_string(deck.size()) + " cards");
  }

  int identified;
  if (base == 2) {
    identified = deck[0] == flipped ? deck[1] : deck[0];
    rep.trace.push_back("the card not faced up is " +
                        std::to_string(identified));
  } else {
    auto pos = static_cast<std::size_t>(
        std::find(deck.begin(), deck.end(), flipped) - deck.begin());
    identified = pos == 0 ? deck.back() : deck[pos - 1];
    rep.trace.push_back(pos == 0
                            ? "flipped card on top; revealing the bottom card"
                            : "revealing the card right on top of the "
                              "flipped card");
  }
  rep.verdict = identified == target ? TrickReport::Verdict::Pass
                                     : TrickReport::Verdict::Fail;
  return rep;
}

TrickReport stripes(int half, std::span<const int> cuts_before,
                    std::span<const int> cuts_after) {
  if (half < 1) throw std::invalid_argument("stripes: half must be >= 1");
  TrickReport rep;
  rep.trick = "stripes";
  add_param(rep, "half-deck", half);
  add_param(rep, "seed", static_cast<std::int64_t>(kTrickSeed));

  auto color = [](int card) { return card % 2; };
  std::mt19937_64 rng(kTrickSeed);
  bool all_pass = true;

  for (int shuffle_mode = 0; shuffle_mode < 3 && all_pass; ++shuffle_mode) {
    std::vector<int> deck = iota_deck(2 * half);
    for (int c : cuts_before) rotate_deck(deck, c);

    auto dealt = deal_sequence(Pattern::periodic("UD"), deck);
    deck.assign(dealt.rbegin(), dealt.rend());  // face-down dealt pile

    std::vector<int> top(deck.begin(), deck.begin() + half);
    std::vector<int> bottom(deck.begin() + half, deck.end());
    if (shuffle_mode == 1) {
      std::reverse(top.begin(), top.end());
      std::reverse(bottom.begin(), bottom.end());
    } else if (shuffle_mode == 2) {
      std::shuffle(top.begin(), top.end(), rng);
      std::shuffle(bottom.begin(), bottom.end(), rng);
    }

    // Perfect riffle, out-shuffle: the top half's first card stays on top.
    deck.clear();
    for (int i = 0; i < half; ++i) {
      deck.push_back(top[static_cast<std::size_t>(i)]);
      deck.push_back(bottom[static_cast<std::size_t>(i)]);
    }
    for (int c : cuts_after) rotate_deck(deck, c);

    for (std::size_t i = 0; i + 1 < deck.size(); ++i)
      if (color(deck[i]) == color(deck[i + 1])) {
        all_pass = false;
        rep.trace.push_back("colors clash at position " +
                            std::to_string(i + 1));
        break;
      }
  }
  rep.verdict =
      all_pass ? TrickReport::Verdict::Pass : TrickReport::Verdict::Fail;
  return rep;
}

int permutation_order(const Pattern& p, int n) {
  if (n < 1) throw std::invalid_argument("permutation_order: n >= 1");
  auto row = simulate_deal(p, n).deal_order;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::int64_t order = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::int64_t len = 0;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      j = row[static_cast<std::size_t>(j)] - 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

TrickReport kth_time_verify(const Pattern& p, int n) {
  TrickReport rep;
  rep.trick = "kth-time";
  add_param(rep, "pattern", format(p));
  add_param(rep, "deck", n);

  int k = permutation_order(p, n);
  rep.solved.emplace_back("order", k);

  auto sorted = iota_deck(n);
  std::vector<int> deck = sorted;
  for (int round = 1; round < k; ++round) {
    // Deal face up onto a pile, then flip the pile: the deck ends up in
    // dealt order.
    deck = deal_sequence(p, deck);
    rep.trace.push_back("practice deal " + std::to_string(round) + ": " +
                        join_ints(deck));
    if (deck == sorted) {
      rep.verdict = TrickReport::Verdict::Fail;
      rep.trace.push_back("deck sorted too early");
      return rep;
    }
  }
  auto final_deal = deal_sequence(p, deck);
  rep.trace.push_back("final deal: " + join_ints(final_deal));
  rep.verdict = final_deal == sorted ? TrickReport::Verdict::Pass
                                     : TrickReport::Verdict::Fail;
  return rep;
}

}  // namespace carddeal
