#include "carddeal/recursion.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace carddeal {

namespace {

struct Round {
  Pattern pat;          // pattern in effect for this round
  int deck;             // cards on hand before the round
  std::int64_t downs;   // deals within the round
  std::int64_t unders;  // survivors of the round
};

// Chain of dealing rounds from (p, n) down to the round that deals
// everything. Each link consumes `deck` letters of its pattern.
std::vector<Round> round_chain(const Pattern& p, int n) {
  std::vector<Round> chain;
  Pattern cur = p;
  std::int64_t consumed = 0;
  int deck = n;
  while (deck > 0) {
    auto st = cur.prefix_counts(deck);
    chain.push_back({cur, deck, st.downs, st.unders});
    consumed += deck;
    if (consumed > p.horizon())
      throw PatternError("dealing rounds exceeded the scan horizon");
    Pattern next = cur.drop(deck);
    deck = static_cast<int>(st.unders);
    cur = std::move(next);
  }
  return chain;
}

void require_deck(int n, const char* who) {
  if (n < 1)
    throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

// Word view of a pattern that is purely periodic (no prefix, no residual
// drop); constant-down counts as the one-letter word D.
std::vector<Letter> periodic_word_of(const Pattern& p, const char* who) {
  if (!p.prefix().empty() || p.base_drop() != 0)
    throw std::invalid_argument(std::string(who) +
                                ": pattern must be purely periodic");
  if (p.base_kind() == BaseKind::Periodic) return p.base_word();
  if (p.base_kind() == BaseKind::ConstantDown) return {Letter::Down};
  throw std::invalid_argument(std::string(who) +
                              ": pattern must be purely periodic");
}

std::int64_t two_adic_valuation(std::int64_t n) {
  return std::countr_zero(static_cast<std::uint64_t>(n));
}

}  // namespace

std::int64_t moves(const Pattern& p, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("moves: n must be >= 0");
  if (n == 0) return 0;
  if (p.base_kind() == BaseKind::Periodic && p.prefix().empty()) {
    // Full periods deal a fixed number of cards; the deal ends inside the
    // last started period at the position of its ((n-1) mod dD + 1)-th D.
    auto per = static_cast<std::int64_t>(p.base_word().size());
    std::int64_t dD = p.prefix_counts(per).downs;
    std::int64_t q = (n - 1) / dD, r = (n - 1) % dD;
    std::int64_t res = per * q + p.d_index(r + 1);
    if (res > p.horizon())
      throw PatternError("moves: answer lies beyond the scan horizon");
    return res;
  }
  return p.d_index(n);
}

std::vector<int> triangle_T_row(const Pattern& p, int n) {
  require_deck(n, "triangle_T_row");
  auto chain = round_chain(p, n);
  std::vector<int> inner;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    std::vector<int> row(static_cast<std::size_t>(it->deck));
    for (std::int64_t k = 1; k <= it->downs; ++k)
      row[static_cast<std::size_t>(it->pat.d_index(k) - 1)] =
          static_cast<int>(k);
    for (std::int64_t k = 1; k <= it->unders; ++k)
      row[static_cast<std::size_t>(it->pat.u_index(k) - 1)] =
          inner[static_cast<std::size_t>(k - 1)] +
          static_cast<int>(it->downs);
    inner = std::move(row);
  }
  return inner;
}

std::vector<int> triangle_J_row(const Pattern& p, int n) {
  require_deck(n, "triangle_J_row");
  auto chain = round_chain(p, n);
  std::vector<int> inner;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    std::vector<int> row(static_cast<std::size_t>(it->deck));
    for (std::int64_t k = 1; k <= it->downs; ++k)
      row[static_cast<std::size_t>(k - 1)] =
          static_cast<int>(it->pat.d_index(k));
    for (std::int64_t k = it->downs + 1; k <= it->deck; ++k)
      row[static_cast<std::size_t>(k - 1)] = static_cast<int>(
          it->pat.u_index(inner[static_cast<std::size_t>(k - it->downs - 1)]));
    inner = std::move(row);
  }
  return inner;
}

Triangle triangle_T(const Pattern& p, int n) {
  require_deck(n, "triangle_T");
  Triangle t;
  t.flavor = Triangle::Flavor::Dealing;
  for (int row = 1; row <= n; ++row) t.rows.push_back(triangle_T_row(p, row));
  return t;
}

Triangle triangle_J(const Pattern& p, int n) {
  require_deck(n, "triangle_J");
  Triangle t;
  t.flavor = Triangle::Flavor::Josephus;
  for (int row = 1; row <= n; ++row) t.rows.push_back(triangle_J_row(p, row));
  return t;
}

bool triangle_T_prepend_check(const Pattern& p, int n) {
  if (n < 2) throw std::invalid_argument("triangle_T_prepend_check: n >= 2");
  Triangle base = triangle_T(p, n);
  Triangle dp = triangle_T(p.prepend(Letter::Down), n);
  Triangle up = triangle_T(p.prepend(Letter::Under), n);
  for (int N = 1; N <= n; ++N) {
    for (int k = 1; k <= N; ++k) {
      int want_d = k == 1 ? 1 : base.entry(N - 1, k - 1) + 1;
      if (dp.entry(N, k) != want_d) return false;
      int want_u = k == 1 ? base.entry(N, N) : base.entry(N, k - 1);
      if (up.entry(N, k) != want_u) return false;
    }
  }
  return true;
}

bool josephus_prepend_check(const Pattern& p, int n) {
  if (n < 2) throw std::invalid_argument("josephus_prepend_check: n >= 2");
  Triangle base = triangle_J(p, n);
  Triangle dp = triangle_J(p.prepend(Letter::Down), n);
  Triangle up = triangle_J(p.prepend(Letter::Under), n);
  for (int N = 1; N <= n; ++N) {
    for (int k = 1; k <= N; ++k) {
      int want_d = k == 1 ? 1 : base.entry(N - 1, k - 1) + 1;
      if (dp.entry(N, k) != want_d) return false;
      int b = base.entry(N, k);
      int want_u = b == N ? 1 : b + 1;
      if (up.entry(N, k) != want_u) return false;
    }
  }
  return true;
}

bool ud_pair_recursions_check(int n) {
  if (n < 2) throw std::invalid_argument("ud_pair_recursions_check: n >= 2");
  Triangle T = triangle_T(Pattern::periodic("UD"), n);
  Triangle Tp = triangle_T(Pattern::periodic("DU"), n);
  Triangle J = triangle_J(Pattern::periodic("UD"), n);
  Triangle Jp = triangle_J(Pattern::periodic("DU"), n);

  // Building recursions for T and T'.
  if (T.entry(1, 1) != 1 || Tp.entry(1, 1) != 1) return false;
  for (int N = 2; N <= n; ++N) {
    if (T.entry(N, 1) != T.entry(N - 1, N - 1) + 1) return false;
    if (T.entry(N, 2) != 1) return false;
    if (Tp.entry(N, 1) != 1) return false;
    if (Tp.entry(N, 2) != Tp.entry(N - 1, N - 1) + 1) return false;
    for (int k = 3; k <= N; ++k) {
      if (T.entry(N, k) != T.entry(N - 1, k - 2) + 1) return false;
      if (Tp.entry(N, k) != Tp.entry(N - 1, k - 2) + 1) return false;
    }
  }

  // Column reductions. The even-column rule for T' needs the row shifted
  // along the slanted diagonal; the published form without the shift fails
  // already at N = 5, k = 2.
  for (int N = 1; N <= n; ++N) {
    for (int k = 1; 2 * k <= N; ++k) {
      if (T.entry(N, 2 * k) != k) return false;
      if (Tp.entry(N, 2 * k) != Tp.entry(N - k + 1, 2) + k - 1) return false;
    }
    for (int k = 1; 2 * k + 1 <= N; ++k) {
      if (T.entry(N, 2 * k + 1) != T.entry(N - k, 1) + k) return false;
      if (Tp.entry(N, 2 * k + 1) != k + 1) return false;
    }
  }

  // Halving recursions for J and J'.
  for (int N = 1; N <= n; ++N)
    for (int k = 1; k <= N; ++k) {
      if (2 * k <= N && J.entry(N, k) != 2 * k) return false;
      if (2 * k <= N + 1 && Jp.entry(N, k) != 2 * k - 1) return false;
    }
  for (int M = 1; 2 * M <= n; ++M)
    for (int k = M + 1; k <= 2 * M; ++k) {
      if (J.entry(2 * M, k) != 2 * J.entry(M, k - M) - 1) return false;
      if (Jp.entry(2 * M, k) != 2 * Jp.entry(M, k - M)) return false;
    }
  for (int M = 1; 2 * M + 1 <= n; ++M) {
    if (J.entry(2 * M + 1, M + 1) != 1) return false;
    if (Jp.entry(2 * M + 1, M + 1) != 2 * M + 1) return false;
    for (int k = M + 2; k <= 2 * M + 1; ++k) {
      if (J.entry(2 * M + 1, k) != 2 * J.entry(M, k - M - 1) + 1)
        return false;
      if (Jp.entry(2 * M + 1, k) != 2 * (Jp.entry(M, k - M - 1) % M) + 2)
        return false;
    }
  }

  // Previous-row recursions.
  for (int N = 2; N <= n; ++N) {
    if (J.entry(N, 1) != (1 % N) + 1) return false;
    if (Jp.entry(N, 1) != 1) return false;
    for (int k = 2; k <= N; ++k) {
      if (J.entry(N, k) != (J.entry(N - 1, k - 1) + 1) % N + 1) return false;
      if (Jp.entry(N, k) != Jp.entry(N - 1, k - 1) % (N - 1) + 2)
        return false;
    }
  }

  // Cross expressions between J and J'.
  for (int M = 1; 2 * M <= n; ++M)
    for (int k = 1; k <= M; ++k) {
      if (J.entry(2 * M, M + k) != 2 * J.entry(M, k) - 1) return false;
      if (Jp.entry(2 * M, M + k) != 2 * Jp.entry(M, k)) return false;
    }
  for (int M = 1; 2 * M + 1 <= n; ++M) {
    for (int k = 1; k <= M + 1; ++k)
      if (J.entry(2 * M + 1, M + k) != 2 * Jp.entry(M + 1, k) - 1)
        return false;
    for (int k = 1; k <= M; ++k)
      if (Jp.entry(2 * M + 1, M + 1 + k) != 2 * J.entry(M, k)) return false;
  }
  return true;
}

int freed(const Pattern& p, int n) {
  require_deck(n, "freed");
  auto chain = round_chain(p, n);
  int f = chain.back().deck;  // final round deals every remaining card
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it)
    f = static_cast<int>(it->pat.u_index(f));
  return f;
}

int elim_first(const Pattern& p, int n) {
  require_deck(n, "elim_first");
  auto chain = round_chain(p, n);
  int e = 0;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    e = it->pat.letter_at(1) == Letter::Down
            ? 1
            : e + static_cast<int>(it->downs);
  }
  return e;
}

std::int64_t periodic_triangle_entry(const Pattern& p, int n, int k) {
  auto word = periodic_word_of(p, "periodic_triangle_entry");
  auto per = static_cast<std::int64_t>(word.size());
  if (n < per)
    throw std::invalid_argument("periodic_triangle_entry: n below period");
  if (k < 1 || k > n)
    throw std::invalid_argument("periodic_triangle_entry: bad column");
  std::int64_t dD = p.prefix_counts(per).downs;

  std::int64_t add = 0;
  std::int64_t N = n, K = k;
  while (true) {
    if (N < per)
      return dealing_row(p, static_cast<int>(N))[static_cast<std::size_t>(
                 K - 1)] +
             add;
    if (K > per) {
      add += dD;
      N -= dD;
      K -= per;
      continue;
    }
    if (word[static_cast<std::size_t>(K - 1)] == Letter::Down)
      return p.prefix_counts(K).downs + add;
    add += dD;
    std::int64_t col = N - per + p.prefix_counts(K).unders;
    N -= dD;
    K = col;
  }
}

std::int64_t periodic_josephus_entry(const Pattern& p, int n, int k) {
  auto word = periodic_word_of(p, "periodic_josephus_entry");
  auto per = static_cast<std::int64_t>(word.size());
  if (n < per)
    throw std::invalid_argument("periodic_josephus_entry: n below period");
  if (k < 1 || k > n)
    throw std::invalid_argument("periodic_josephus_entry: bad rank");
  std::int64_t dD = p.prefix_counts(per).downs;

  // Collect the (N, k) descent; unwind applying the shift or the
  // under-index wraparound.
  std::vector<std::int64_t> decks;
  std::int64_t N = n, K = k;
  while (N >= per && K > dD) {
    decks.push_back(N);
    N -= dD;
    K -= dD;
  }
  std::int64_t val;
  if (N < per) {
    val = simulate_deal(p, static_cast<int>(N))
              .deal_order[static_cast<std::size_t>(K - 1)];
  } else {
    val = p.d_index(K);  // K <= dD: dealt within the first period
  }
  for (auto it = decks.rbegin(); it != decks.rend(); ++it) {
    if (val <= *it - per)
      val += per;
    else
      val = p.u_index(per - *it + val);
  }
  return val;
}

std::int64_t infinity_row(const Pattern& p, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("infinity_row: k must be >= 1");
  return p.d_index(k);
}

int skipx_freed(int x, int n) {
  if (x < 1) throw std::invalid_argument("skipx_freed: x must be >= 1");
  require_deck(n, "skipx_freed");
  std::int64_t f = 1;
  for (int m = 2; m <= n; ++m) f = (f + x - 1) % m + 1;
  return static_cast<int>(f);
}

bool skipx_checks(int x, int n) {
  if (x < 2) throw std::invalid_argument("skipx_checks: x must be >= 2");
  if (n < x) throw std::invalid_argument("skipx_checks: n must be >= x");
  std::vector<Letter> word(static_cast<std::size_t>(x - 1), Letter::Under);
  word.push_back(Letter::Down);
  Pattern p = Pattern::periodic(word);

  Triangle T = simulated_triangle(p, n, Triangle::Flavor::Dealing);
  Triangle J = simulated_triangle(p, n, Triangle::Flavor::Josephus);

  // Triangle building: within a row, entries repeat from x columns back in
  // the previous row, and column x holds the first deal.
  for (int N = 2; N <= n; ++N)
    for (int k = x; k <= N; ++k) {
      int want = k == x ? 1 : T.entry(N - 1, k - x) + 1;
      if (T.entry(N, k) != want) return false;
    }

  // Josephus cases. The published first case reads "2k for k <= x/2",
  // which already fails against the paper's own period-3 table; the
  // first-round form xk for xk <= N is what the one-round theorem yields.
  for (int N = std::max(2, x); N <= n; ++N)
    for (int k = 1; k <= N; ++k) {
      if (static_cast<std::int64_t>(x) * k <= N) {
        if (J.entry(N, k) != x * k) return false;
      } else if (k >= 2) {
        int inner = J.entry(N - 1, k - 1);
        int want;
        if (inner <= N - x) {
          want = inner + x;
        } else {
          std::int64_t num = static_cast<std::int64_t>(x) * (x - N + inner);
          want = static_cast<int>((num + x - 2) / (x - 1)) - 1;  // ceil - 1
        }
        if (J.entry(N, k) != want) return false;
      }
    }

  // First-person elimination: E(xj - 1) = j, and the period-multiple
  // reduction E(Nx) = E(N(x-1)) + N.
  for (int j = 1; static_cast<std::int64_t>(x) * j - 1 <= n; ++j)
    if (elim_first(p, x * j - 1) != j) return false;
  for (int N = 1; static_cast<std::int64_t>(x) * N <= n; ++N)
    if (elim_first(p, x * N) != elim_first(p, (x - 1) * N) + N) return false;

  // Row insertion: row xk comes from row (x-1)k by adding k to every term
  // and inserting 1..k at every x-th position.
  for (int k = 1; static_cast<std::int64_t>(x) * k <= n; ++k) {
    const auto& old_row = T.row((x - 1) * k);
    const auto& new_row = T.row(x * k);
    std::size_t oi = 0;
    int ins = 1;
    for (int pos = 1; pos <= x * k; ++pos) {
      int want = (pos % x == 0) ? ins++ : old_row[oi++] + k;
      if (new_row[static_cast<std::size_t>(pos - 1)] != want) return false;
    }
  }
  return true;
}

std::int64_t ud_first_col_closed(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("ud_first_col_closed: n >= 1");
  std::int64_t nu = two_adic_valuation(n);
  std::int64_t formula = n - n / (std::int64_t{1} << (nu + 1));

  // Binary description: drop the trailing zeros and the lowest set bit,
  // subtract what remains from n.
  std::int64_t stripped = n >> (nu + 1);
  std::int64_t described = n - stripped;

  if (formula != described)
    throw std::logic_error("ud_first_col_closed: routes disagree");
  return formula;
}

std::int64_t ud_triangle_closed(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("ud_triangle_closed: bad entry");
  if (k % 2 == 0) return k / 2;
  std::int64_t j = (k - 1) / 2;
  std::int64_t m = n - j;
  std::int64_t nu = two_adic_valuation(m);
  return n - m / (std::int64_t{1} << (nu + 1));
}

std::int64_t ud_freed_closed(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("ud_freed_closed: n >= 1");
  std::int64_t top = std::int64_t{1} << (63 - std::countl_zero(
                                                  static_cast<std::uint64_t>(
                                                      n)));
  return 2 * (n - top) + 1;
}

bool ud_antidiagonal_check(int n) {
  if (n < 3) throw std::invalid_argument("ud_antidiagonal_check: n >= 3");
  for (std::int64_t N = 3; N + 1 <= n; ++N) {
    for (std::int64_t k = 3; k <= N; k += 2) {
      bool covered = (N % 2 == 1 && k % 4 == 1) || (N % 2 == 0 && k % 4 == 3);
      if (!covered) continue;
      if (ud_triangle_closed(N, k) != ud_triangle_closed(N + 1, k - 2))
        return false;
    }
  }
  // The parity conditions are necessary: (9,7) -> (10,5) breaks.
  return ud_triangle_closed(9, 7) == 8 && ud_triangle_closed(10, 5) == 10;
}

bool periodic_freed_modularity_check(const Pattern& p, int n_max) {
  auto word = periodic_word_of(p, "periodic_freed_modularity_check");
  auto per = static_cast<std::int64_t>(word.size());
  std::int64_t first_u = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] == Letter::Under) {
      first_u = static_cast<std::int64_t>(i) + 1;
      break;
    }
  if (first_u == 0) return true;  // all-down word: nothing to check
  for (int N = static_cast<int>(first_u); N <= n_max; ++N) {
    std::int64_t f = freed(p, N) % per;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] != Letter::Down) continue;
      std::int64_t di = (static_cast<std::int64_t>(i) + 1) % per;
      if (f == di) return false;
    }
  }
  return true;
}

bool periodic_elim_first_checks(const Pattern& p, int n_max) {
  auto word = periodic_word_of(p, "periodic_elim_first_checks");
  if (word.front() != Letter::Under)
    throw std::invalid_argument(
        "periodic_elim_first_checks: pattern must start with U");
  auto per = static_cast<std::int64_t>(word.size());
  std::int64_t dD = p.prefix_counts(per).downs;
  std::int64_t uU = per - dD;

  // N = kp + d_i - 1 pins the first person's elimination order.
  for (int N = 1; N <= n_max; ++N) {
    for (std::int64_t i = 1; i <= dD; ++i) {
      std::int64_t di = p.d_index(i);
      if (N + 1 >= di && (N + 1 - di) % per == 0) {
        std::int64_t kq = (N + 1 - di) / per;
        if (elim_first(p, N) != kq * dD + i) return false;
      }
    }
  }
  // Deck sizes that are period multiples reduce to the survivors.
  for (int N = 1; static_cast<std::int64_t>(N) * per <= n_max; ++N) {
    if (elim_first(p, static_cast<int>(N * per)) !=
        elim_first(p, static_cast<int>(N * uU)) + N * dD)
      return false;
  }
  return true;
}

}  // namespace carddeal
