#include "carddeal/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "carddeal/dealer.hpp"
#include "carddeal/pattern_lang.hpp"
#include "carddeal/recursion.hpp"
#include "carddeal/sequences.hpp"
#include "carddeal/tricks.hpp"

namespace carddeal {

namespace {

using nlohmann::json;

Pattern parse_or_usage(const std::string& expr) {
  try {
    return parse(expr);
  } catch (const ParseError& e) {
    throw CLI::ValidationError(
        "--pattern", std::string(e.what()) + " at position " +
                         std::to_string(e.position()));
  }
}

std::string row_to_line(const std::vector<int>& row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(row[i]);
  }
  return s;
}

Family family_from_name(const std::string& name) {
  if (name == "moves") return Family::Moves;
  if (name == "T") return Family::TriangleFlat;
  if (name == "J") return Family::JosephusFlat;
  if (name == "freed") return Family::Freed;
  if (name == "elim-first") return Family::ElimFirst;
  if (name == "first-freed") return Family::FirstFreed;
  if (name == "last-freed") return Family::LastFreed;
  throw CLI::ValidationError("--family", "unknown family " + name);
}

void print_sequence(std::ostream& out, const SequenceResult& res,
                    const std::string& fmt, const std::string& family,
                    const std::string& pattern_expr) {
  if (fmt == "bfile") {
    out << bfile_export(res);
  } else if (fmt == "json") {
    json j;
    j["family"] = family;
    j["pattern"] = pattern_expr;
    j["offset"] = res.offset;
    j["terms"] = res.terms;
    if (!res.complete) j["complete"] = false;
    out << j.dump() << '\n';
  } else {
    std::string s;
    for (std::size_t i = 0; i < res.terms.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(res.terms[i]);
    }
    out << s << '\n';
  }
}

void print_trick(std::ostream& out, const TrickReport& rep,
                 const std::string& fmt) {
  if (fmt == "json") {
    json j;
    j["trick"] = rep.trick;
    json params = json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    j["params"] = params;
    j["verdict"] = to_string(rep.verdict);
    json solved = json::object();
    for (const auto& [k, v] : rep.solved) solved[k] = v;
    j["solved"] = solved;
    j["trace"] = rep.trace;
    out << j.dump() << '\n';
    return;
  }
  out << "trick: " << rep.trick << '\n';
  for (const auto& [k, v] : rep.params) out << "  " << k << ": " << v << '\n';
  for (const auto& [k, v] : rep.solved) {
    if (k == "ell")
      out << "  ℓ = " << v << '\n';
    else
      out << "  " << k << " = " << v << '\n';
  }
  for (const auto& line : rep.trace) out << "  " << line << '\n';
  out << "verdict: " << to_string(rep.verdict) << '\n';
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(std::stoi(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

int run_triangle(const std::string& expr, const std::string& flavor, int rows,
                 const std::string& fmt, std::ostream& out) {
  Pattern p = parse_or_usage(expr);
  Triangle t = flavor == "J" ? triangle_J(p, rows) : triangle_T(p, rows);
  if (fmt == "json") {
    json j;
    j["family"] = flavor == "J" ? "J" : "T";
    j["pattern"] = format(p);
    j["offset"] = 1;
    j["rows"] = t.rows;
    out << j.dump() << '\n';
  } else if (fmt == "bfile") {
    SequenceResult res;
    for (const auto& row : t.rows)
      for (int v : row) res.terms.push_back(v);
    out << bfile_export(res);
  } else {
    for (const auto& row : t.rows) out << row_to_line(row) << '\n';
  }
  return 0;
}

int run_check(const std::string& suite, const std::string& expr, int n, int x,
              std::ostream& out) {
  auto report = [&](bool ok, const std::string& what, int checks) {
    out << "check " << suite << ": " << (ok ? "PASS" : "FAIL") << " (" << what
        << ", " << checks << " rows)\n";
    return ok ? 0 : 1;
  };
  if (suite == "prepend") {
    Pattern p = parse_or_usage(expr);
    bool ok = triangle_T_prepend_check(p, n) && josephus_prepend_check(p, n);
    return report(ok, "prepend identities for " + format(p), n);
  }
  if (suite == "ud-pair") {
    return report(ud_pair_recursions_check(n), "UD/DU recursions", n);
  }
  if (suite == "skipx") {
    return report(skipx_checks(x, n), "deal-every-" + std::to_string(x), n);
  }
  if (suite == "modularity") {
    Pattern p = parse_or_usage(expr);
    return report(periodic_freed_modularity_check(p, n),
                  "freed modularity for " + format(p), n);
  }
  if (suite == "elim-first") {
    Pattern p = parse_or_usage(expr);
    return report(periodic_elim_first_checks(p, n),
                  "first-person identities for " + format(p), n);
  }
  if (suite == "antidiagonal") {
    return report(ud_antidiagonal_check(n), "UD anti-diagonals", n);
  }
  if (suite == "oracle") {
    Pattern p = parse_or_usage(expr);
    bool ok = true;
    for (int N = 1; N <= n && ok; ++N) {
      ok = triangle_T_row(p, N) == dealing_row(p, N) &&
           triangle_J_row(p, N) == simulate_deal(p, N).deal_order &&
           freed(p, N) == simulate_deal(p, N).freed &&
           elim_first(p, N) == simulate_deal(p, N).first_card_order &&
           moves(p, N) == simulate_deal(p, N).moves;
    }
    return report(ok, "recursions vs simulation for " + format(p), n);
  }
  throw CLI::ValidationError("check", "unknown suite " + suite);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"dealing patterns, their triangles and sequences, and the "
               "card tricks built on them"};
  app.name("carddeal");
  app.require_subcommand(1);

  // triangle
  auto* tri = app.add_subcommand("triangle", "print rows of T or J");
  std::string tri_pattern, tri_flavor = "T", tri_format = "plain";
  int tri_rows = 10;
  tri->add_option("--pattern", tri_pattern, "pattern expression")->required();
  tri->add_option("--flavor", tri_flavor, "T (dealing) or J (Josephus)")
      ->check(CLI::IsMember({"T", "J"}));
  tri->add_option("--rows", tri_rows, "number of rows")
      ->check(CLI::PositiveNumber);
  tri->add_option("--format", tri_format, "plain, bfile, or json")
      ->check(CLI::IsMember({"plain", "bfile", "json"}));

  // sequence
  auto* seq = app.add_subcommand("sequence", "print terms of a family");
  std::string seq_pattern, seq_family = "freed", seq_format = "plain";
  std::int64_t seq_count = 10, seq_limit = 10'000, seq_offset = 1;
  seq->add_option("--pattern", seq_pattern, "pattern expression")->required();
  seq->add_option("--family", seq_family,
                  "moves, T, J, freed, elim-first, first-freed, last-freed");
  seq->add_option("--count", seq_count, "number of terms")
      ->check(CLI::PositiveNumber);
  seq->add_option("--limit", seq_limit, "search bound for *-freed families")
      ->check(CLI::PositiveNumber);
  seq->add_option("--format", seq_format, "plain, bfile, or json")
      ->check(CLI::IsMember({"plain", "bfile", "json"}));
  seq->add_option("--offset", seq_offset, "index of the first term");

  // trick
  auto* trick = app.add_subcommand("trick", "verify a card trick");
  std::string trick_name, trick_pattern = "UD", trick_format = "plain";
  std::string trick_cuts, trick_cuts_after, trick_inserts;
  int trick_deck = 0, trick_index = 0, trick_half = 0, trick_discards = 0;
  int trick_base = 2, trick_exp = 1, trick_target = 0;
  std::int64_t trick_shift = -1;
  trick->add_option("name", trick_name,
                    "know-freed, spelling-bee, double-dealing, ace-quartet, "
                    "love-ritual, power-of-b, stripes, kth-time")
      ->required();
  trick->add_option("--pattern", trick_pattern, "pattern expression");
  trick->add_option("--deck", trick_deck, "deck size");
  trick->add_option("--index", trick_index, "audience index (know-freed)");
  trick->add_option("--half-deck", trick_half,
                    "half deck size (love-ritual, stripes)");
  trick->add_option("--max-discards", trick_discards,
                    "discard bound (love-ritual)");
  trick->add_option("--shift", trick_shift,
                    "deal-to-bottom count; solved when omitted");
  trick->add_option("--base", trick_base, "pile count (power-of-b)");
  trick->add_option("--exponent", trick_exp, "deck is base^exponent");
  trick->add_option("--target", trick_target,
                    "target position (ace-quartet variant)");
  trick->add_option("--cuts", trick_cuts, "comma-separated cut offsets");
  trick->add_option("--cuts-after", trick_cuts_after,
                    "cut offsets after the riffle (stripes)");
  trick->add_option("--inserts", trick_inserts,
                    "comma-separated take:depth pairs (double-dealing)");
  trick->add_option("--format", trick_format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));

  // check
  auto* chk = app.add_subcommand("check", "run a named invariant suite");
  std::string chk_suite, chk_pattern = "UD";
  int chk_n = 32, chk_x = 3;
  chk->add_option("suite", chk_suite,
                  "prepend, ud-pair, skipx, modularity, elim-first, "
                  "antidiagonal, oracle")
      ->required();
  chk->add_option("--pattern", chk_pattern, "pattern expression");
  chk->add_option("--n", chk_n, "row bound")->check(CLI::PositiveNumber);
  chk->add_option("--x", chk_x, "skip parameter")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (tri->parsed())
      return run_triangle(tri_pattern, tri_flavor, tri_rows, tri_format, out);

    if (seq->parsed()) {
      Pattern p = parse_or_usage(seq_pattern);
      SequenceSpec spec{p, family_from_name(seq_family), seq_count, seq_limit};
      SequenceResult res = generate(spec);
      res.offset = seq_offset;
      print_sequence(out, res, seq_format, seq_family, format(p));
      return res.complete ? 0 : 1;
    }

    if (trick->parsed()) {
      Pattern p = parse_or_usage(trick_pattern);
      auto cuts = parse_int_list(trick_cuts);
      TrickReport rep;
      if (trick_name == "know-freed") {
        if (trick_deck < 1)
          throw CLI::ValidationError("--deck", "deck size required");
        if (trick_index >= 1) {
          rep = know_freed(p, trick_deck, trick_index);
        } else {
          // no index given: require the trick to work for every index
          rep = know_freed(p, trick_deck, 1);
          for (int i = 2; i <= trick_deck && rep.passed(); ++i)
            rep = know_freed(p, trick_deck, i);
        }
      } else if (trick_name == "spelling-bee") {
        rep = spelling_bee(p, trick_deck);
      } else if (trick_name == "double-dealing") {
        std::vector<Insertion> script;
        if (!trick_inserts.empty()) {
          std::size_t pos = 0;
          while (pos < trick_inserts.size()) {
            std::size_t comma = trick_inserts.find(',', pos);
            if (comma == std::string::npos) comma = trick_inserts.size();
            std::string pair = trick_inserts.substr(pos, comma - pos);
            auto colon = pair.find(':');
            if (colon == std::string::npos)
              throw CLI::ValidationError("--inserts", "expected take:depth");
            script.push_back({std::stoi(pair.substr(0, colon)),
                              std::stoi(pair.substr(colon + 1))});
            pos = comma + 1;
          }
        }
        rep = double_dealing(p, trick_deck, script);
      } else if (trick_name == "ace-quartet") {
        rep = trick_target >= 1
                  ? freed_position_reveal(p, trick_deck, trick_target)
                  : ace_quartet(trick_deck);
      } else if (trick_name == "love-ritual") {
        auto ell = trick_shift >= 0
                       ? std::optional<std::int64_t>(trick_shift)
                       : love_ritual_solve(p, trick_half, trick_discards);
        if (!ell) {
          rep.trick = "love-ritual";
          rep.verdict = TrickReport::Verdict::Infeasible;
          rep.trace.push_back("no shift satisfies all discard counts");
        } else {
          rep = love_ritual_verify(p, trick_half, trick_discards, *ell);
        }
      } else if (trick_name == "power-of-b") {
        rep = power_of_b(p, trick_base, trick_exp, cuts);
      } else if (trick_name == "stripes") {
        rep = stripes(trick_half, cuts, parse_int_list(trick_cuts_after));
      } else if (trick_name == "kth-time") {
        rep = kth_time_verify(p, trick_deck);
      } else {
        throw CLI::ValidationError("trick", "unknown trick " + trick_name);
      }
      print_trick(out, rep, trick_format);
      return rep.passed() ? 0 : 1;
    }

    if (chk->parsed())
      return run_check(chk_suite, chk_pattern, chk_n, chk_x, out);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PatternError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace carddeal
