#include "carddeal/pattern_lang.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

namespace carddeal {

namespace {

bool is_letter_word(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return c == 'U' || c == 'u' || c == 'D' || c == 'd';
  });
}

std::string upper(std::string_view s) {
  std::string r(s);
  std::transform(r.begin(), r.end(), r.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return r;
}

struct Atom {
  enum class Kind { Letters, Group, CyclicGroup, Name } kind;
  std::vector<Letter> letters;  // expanded (Letters/Group/CyclicGroup)
  std::string name;             // Name only
  std::int64_t name_drop = 0;   // Name only, the ">>n" suffix
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Atom> atoms() {
    std::vector<Atom> out;
    skip_ws();
    if (at_end()) throw ParseError("empty pattern expression", 0);
    while (!at_end()) {
      out.push_back(next_atom());
      skip_ws();
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  std::int64_t read_count() {
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) throw ParseError("repetition count too large", start);
      ++pos_;
    }
    if (v < 1) throw ParseError("repetition count must be >= 1", start);
    return v;
  }

  Atom next_atom() {
    std::size_t start = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      std::vector<Letter> letters;
      skip_ws();
      while (!at_end() && peek() != ')') {
        if (!is_letter_word(text_.substr(pos_, 1)))
          throw ParseError("expected letter inside group", pos_);
        letters.push_back(letter_from_char(peek()));
        ++pos_;
        skip_ws();
      }
      if (at_end()) throw ParseError("unterminated group", start);
      ++pos_;  // ')'
      if (letters.empty()) throw ParseError("empty group", start);
      if (!at_end() && peek() == '*') {
        ++pos_;
        return {Atom::Kind::CyclicGroup, std::move(letters), "", 0, start};
      }
      std::int64_t count = 1;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
        count = read_count();
      std::vector<Letter> expanded;
      for (std::int64_t i = 0; i < count; ++i)
        expanded.insert(expanded.end(), letters.begin(), letters.end());
      return {Atom::Kind::Group, std::move(expanded), "", 0, start};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t run_start = pos_;
      while (!at_end() &&
             std::isalpha(static_cast<unsigned char>(peek())))
        ++pos_;
      std::string_view run = text_.substr(run_start, pos_ - run_start);
      if (is_letter_word(run)) {
        std::vector<Letter> letters;
        for (char lc : run) letters.push_back(letter_from_char(lc));
        if (!at_end() &&
            std::isdigit(static_cast<unsigned char>(peek()))) {
          // the count applies to the last letter of the run: "U3" or "UD2"
          std::int64_t count = read_count();
          Letter last = letters.back();
          for (std::int64_t i = 1; i < count; ++i) letters.push_back(last);
        }
        return {Atom::Kind::Letters, std::move(letters), "", 0, run_start};
      }
      std::string name = upper(run);
      if (name != "AP" && name != "SUD" && name != "DSU" && name != "SCARD")
        throw ParseError("unknown pattern name: " + std::string(run),
                         run_start);
      std::int64_t name_drop = 0;
      if (pos_ + 1 < text_.size() && text_[pos_] == '>' &&
          text_[pos_ + 1] == '>') {
        pos_ += 2;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected count after '>>'", pos_);
        name_drop = read_count();
      }
      return {Atom::Kind::Name, {}, std::move(name), name_drop, run_start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Pattern make_periodic(std::vector<Letter> word, std::size_t pos) {
  bool has_down =
      std::find(word.begin(), word.end(), Letter::Down) != word.end();
  if (!has_down)
    throw ParseError("cyclic word must contain at least one D", pos);
  if (word.size() == 1) return Pattern::constant_down();
  return Pattern::periodic(std::move(word));
}

Pattern named_base(const Atom& atom) {
  Pattern p = [&] {
    if (atom.name == "AP") return Pattern::arithmetic_skip();
    if (atom.name == "SUD") return Pattern::spell_number();
    if (atom.name == "DSU")
      return Pattern::spell_number().prepend(Letter::Down);
    return Pattern::spell_card();
  }();
  if (atom.name_drop > 0) {
    if (atom.name == "DSU")
      throw ParseError("'>>' is not supported on DSU; use D SUD>>n",
                       atom.pos);
    p = p.drop(atom.name_drop);
  }
  return p;
}

Pattern prepend_letters(Pattern p, const std::vector<Letter>& letters) {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    p = p.prepend(*it);
  return p;
}

}  // namespace

Pattern parse(std::string_view text) {
  auto atoms = Lexer(text).atoms();

  // An explicit base (starred group or name) must be the final atom.
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
    if (atoms[i].kind == Atom::Kind::CyclicGroup ||
        atoms[i].kind == Atom::Kind::Name)
      throw ParseError("base designator must be the last atom",
                       atoms[i].pos);
  }

  const Atom& last = atoms.back();
  if (last.kind == Atom::Kind::CyclicGroup || last.kind == Atom::Kind::Name) {
    Pattern base = last.kind == Atom::Kind::Name
                       ? named_base(last)
                       : make_periodic(last.letters, last.pos);
    std::vector<Letter> prefix;
    for (std::size_t i = 0; i + 1 < atoms.size(); ++i)
      prefix.insert(prefix.end(), atoms[i].letters.begin(),
                    atoms[i].letters.end());
    return prepend_letters(std::move(base), prefix);
  }

  // No explicit base: the trailing run of letter atoms is the periodic
  // word; unstarred groups before it contribute prefix letters.
  std::size_t word_begin = atoms.size();
  while (word_begin > 0 &&
         atoms[word_begin - 1].kind == Atom::Kind::Letters)
    --word_begin;
  if (word_begin == atoms.size())
    throw ParseError("expression needs a base: a trailing word, (word)*, "
                     "or a named pattern",
                     last.pos);
  std::vector<Letter> word;
  for (std::size_t i = word_begin; i < atoms.size(); ++i)
    word.insert(word.end(), atoms[i].letters.begin(),
                atoms[i].letters.end());
  Pattern base = make_periodic(std::move(word), atoms[word_begin].pos);
  std::vector<Letter> prefix;
  for (std::size_t i = 0; i < word_begin; ++i)
    prefix.insert(prefix.end(), atoms[i].letters.begin(),
                  atoms[i].letters.end());
  return prepend_letters(std::move(base), prefix);
}

std::string format(const Pattern& p) {
  std::string out;
  for (Letter l : p.prefix()) out += to_char(l);

  switch (p.base_kind()) {
    case BaseKind::Periodic: {
      if (p.prefix().empty()) {
        for (Letter l : p.base_word()) out += to_char(l);
      } else {
        out += '(';
        for (Letter l : p.base_word()) out += to_char(l);
        out += ")*";
      }
      return out;
    }
    case BaseKind::ConstantDown: {
      if (p.prefix().empty()) return "D";
      return out + "(D)*";
    }
    case BaseKind::ArithmeticSkip:
    case BaseKind::SpellNumber:
    case BaseKind::SpellCard: {
      std::string name = p.base_kind() == BaseKind::ArithmeticSkip ? "AP"
                         : p.base_kind() == BaseKind::SpellNumber  ? "SUD"
                                                                   : "SCARD";
      if (!out.empty()) out += ' ';
      out += name;
      if (p.base_drop() > 0) out += ">>" + std::to_string(p.base_drop());
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace carddeal
