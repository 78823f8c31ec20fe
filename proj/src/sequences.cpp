#include "carddeal/sequences.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "carddeal/recursion.hpp"

namespace carddeal {

using boost::multiprecision::cpp_int;

namespace {

// All qualifying deck sizes up to `limit`, in increasing order.
std::vector<std::int64_t> search_freed_positions(const Pattern& p,
                                                 std::int64_t limit,
                                                 bool want_first) {
  std::vector<std::int64_t> found;
  for (std::int64_t n = 1; n <= limit; ++n) {
    int f = freed(p, static_cast<int>(n));
    if (want_first ? f == 1 : f == n) found.push_back(n);
  }
  return found;
}

cpp_int pow_int(std::int64_t base, std::int64_t exp) {
  cpp_int r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

SequenceResult generate(const SequenceSpec& spec) {
  if (spec.count < 1)
    throw std::invalid_argument("generate: count must be >= 1");
  SequenceResult out;
  const Pattern& p = spec.pattern;
  switch (spec.family) {
    case Family::Moves:
      for (std::int64_t n = 1; n <= spec.count; ++n)
        out.terms.push_back(moves(p, n));
      break;
    case Family::Freed:
      for (std::int64_t n = 1; n <= spec.count; ++n)
        out.terms.push_back(freed(p, static_cast<int>(n)));
      break;
    case Family::ElimFirst:
      for (std::int64_t n = 1; n <= spec.count; ++n)
        out.terms.push_back(elim_first(p, static_cast<int>(n)));
      break;
    case Family::TriangleFlat:
    case Family::JosephusFlat: {
      bool dealing = spec.family == Family::TriangleFlat;
      for (int n = 1; static_cast<std::int64_t>(out.terms.size()) < spec.count;
           ++n) {
        auto row = dealing ? triangle_T_row(p, n) : triangle_J_row(p, n);
        for (int v : row) {
          if (static_cast<std::int64_t>(out.terms.size()) >= spec.count) break;
          out.terms.push_back(v);
        }
      }
      break;
    }
    case Family::FirstFreed:
    case Family::LastFreed: {
      bool want_first = spec.family == Family::FirstFreed;
      for (std::int64_t n = 1;
           n <= spec.search_limit &&
           static_cast<std::int64_t>(out.terms.size()) < spec.count;
           ++n) {
        int f = freed(p, static_cast<int>(n));
        if (want_first ? f == 1 : f == n) out.terms.push_back(n);
      }
      out.complete =
          static_cast<std::int64_t>(out.terms.size()) == spec.count;
      break;
    }
  }
  return out;
}

cpp_int special_size_closed_form(std::string_view name, std::int64_t m) {
  if (m < 1)
    throw std::invalid_argument("special_size_closed_form: m must be >= 1");
  if (name == "S-UDD" || name == "L-DDU") {
    // 1, 2, 3, 6, 9, 18, 27, ...
    if (m % 2 == 1) return pow_int(3, (m - 1) / 2);
    return 2 * pow_int(3, m / 2 - 1);
  }
  if (name == "L-UD") return pow_int(2, m) - 1;
  if (name == "L-DU") return pow_int(2, m - 1);
  if (name == "L-DUD") {
    if (m % 2 == 1) return 2 * pow_int(3, (m - 1) / 2) - 1;
    return pow_int(3, m / 2) - 1;
  }
  if (name == "L-UDD") {
    // The shift law from L-DUD puts the odd terms at 3^{t+1} - 2.
    if (m % 2 == 1) return pow_int(3, (m - 1) / 2 + 1) - 2;
    return 2 * pow_int(3, m / 2) - 2;
  }
  if (name == "L-UUD-step") {
    if (m % 2 == 0)
      throw std::invalid_argument(
          "L-UUD-step: no rule for an even current term");
    return cpp_int((3 * m + 1) / 2);
  }
  throw std::invalid_argument("special_size_closed_form: unknown name " +
                              std::string(name));
}

bool prepend_relations_check(const Pattern& p, int m_max) {
  if (m_max < 1)
    throw std::invalid_argument("prepend_relations_check: m_max >= 1");
  std::int64_t limit = 3 * static_cast<std::int64_t>(m_max);

  // Membership: N > 1 is first-freed iff the pattern leads with an under
  // and the survivor count is first-freed for the after-round pattern.
  for (int n = 2; n <= m_max; ++n) {
    bool lhs = freed(p, n) == 1;
    auto st = p.prefix_counts(n);
    bool rhs = p.letter_at(1) == Letter::Under && st.unders >= 1 &&
               freed(p.drop(n), static_cast<int>(st.unders)) == 1;
    if (lhs != rhs) return false;
  }

  // L^P = S^{UP} termwise.
  auto lp = search_freed_positions(p, limit, false);
  auto sup = search_freed_positions(p.prepend(Letter::Under), limit, true);
  if (lp != sup) return false;

  // L^{DP}(m + 1) = L^P(m) + 1, with L^{DP}(1) = 1.
  auto ldp = search_freed_positions(p.prepend(Letter::Down), limit, false);
  if (ldp.empty() || ldp.front() != 1) return false;
  for (std::size_t i = 0; i + 1 < ldp.size() && i < lp.size(); ++i)
    if (ldp[i + 1] != lp[i] + 1) return false;
  return true;
}

std::string bfile_export(const SequenceResult& result) {
  if (result.terms.empty())
    throw std::invalid_argument("bfile_export: no terms");
  std::string out;
  std::int64_t idx = result.offset;
  for (std::int64_t term : result.terms) {
    out += std::to_string(idx++);
    out += ' ';
    out += std::to_string(term);
    out += '\n';
  }
  return out;
}

SequenceResult bfile_read(std::string_view text) {
  SequenceResult out;
  std::size_t pos = 0;
  bool first = true;
  std::int64_t expect = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    std::int64_t idx = 0, val = 0;
    const char* b = line.data();
    const char* e = line.data() + line.size();
    auto r1 = std::from_chars(b, e, idx);
    if (r1.ec != std::errc{} || r1.ptr == e || *r1.ptr != ' ')
      throw std::invalid_argument("bfile_read: malformed line");
    auto r2 = std::from_chars(r1.ptr + 1, e, val);
    if (r2.ec != std::errc{} || r2.ptr != e)
      throw std::invalid_argument("bfile_read: malformed line");
    if (first) {
      out.offset = idx;
      expect = idx;
      first = false;
    }
    if (idx != expect++)
      throw std::invalid_argument("bfile_read: indices must be consecutive");
    out.terms.push_back(val);
  }
  if (first) throw std::invalid_argument("bfile_read: empty input");
  return out;
}

}  // namespace carddeal
