#include "dgc/words.hpp"

#include <cctype>

namespace dgc {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l, bool b_involution) {
  if (b_involution && l == kBinv) l = kB;
  if (!out.empty()) {
    Letter top = out.back();
    if (top == inverse_letter(l) || (b_involution && top == kB && l == kB)) {
      out.pop_back();
      return;
    }
  }
  out.push_back(l);
}

std::vector<Letter> reduce_letters(std::span<const Letter> in, bool b_involution) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (Letter l : in) push_reduced(out, l, b_involution);
  return out;
}

Word word_from_reduced(std::vector<Letter> letters) {
  // Private-ish constructor stand-in: letters are already reduced, so
  // from_letters will not change them.
  return Word::from_letters(letters);
}

}  // namespace

Word Word::from_letters(std::span<const Letter> letters) {
  Word w;
  w.letters_ = reduce_letters(letters, /*b_involution=*/false);
  return w;
}

Word Word::from_letters(std::initializer_list<Letter> letters) {
  return from_letters(std::span<const Letter>(letters.begin(), letters.size()));
}

Word Word::inverse() const {
  std::vector<Letter> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    rev.push_back(inverse_letter(*it));
  return word_from_reduced(std::move(rev));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word::from_letters(cat);
}

Word Word::pow(int k) const {
  Word base = k < 0 ? inverse() : *this;
  int reps = k < 0 ? -k : k;
  Word acc;
  for (int i = 0; i < reps; ++i) acc = acc * base;
  return acc;
}

std::string Word::str() const {
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    std::size_t run = j - i;
    out += letter_char(letters_[i]);
    if (run > 1) {
      out += '^';
      out += std::to_string(run);
    }
    i = j;
  }
  return out;
}

Presentation Presentation::free_group() { return Presentation{Mode::F, {}}; }

Presentation Presentation::involution_b() {
  return Presentation{Mode::G, {Word::from_letters({kB, kB})}};
}

Presentation Presentation::custom(std::vector<Word> relators) {
  for (const Word& r : relators)
    if (r.empty()) throw std::invalid_argument("empty relator");
  return Presentation{Mode::Custom, std::move(relators)};
}

bool Presentation::b_is_involution() const { return mode == Mode::G; }

std::string Presentation::mode_name() const {
  switch (mode) {
    case Mode::F: return "F";
    case Mode::G: return "G";
    case Mode::Custom: return "custom";
  }
  return "?";
}

Word reduce(const Word& w, const Presentation& p) {
  if (!p.b_is_involution()) return w;  // already freely reduced
  return word_from_reduced(reduce_letters(w.letters(), true));
}

Word commutator(const Word& x, const Word& y, const Presentation& p) {
  return reduce(x.inverse() * y.inverse() * x * y, p);
}

Word commutator(std::span<const Word> ws, const Presentation& p) {
  if (ws.size() < 2)
    throw std::invalid_argument("commutator needs at least two words");
  Word acc = reduce(ws[0], p);
  for (std::size_t i = 1; i < ws.size(); ++i)
    acc = commutator(acc, reduce(ws[i], p), p);
  return acc;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return text[pos];
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos), pos);
  }

  int parse_exponent() {
    // caller consumed '^'
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected exponent digits");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++pos;
    }
    return static_cast<int>(neg ? -v : v);
  }

  Word parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      std::vector<Word> parts;
      parts.push_back(parse_sequence(/*stop_at=*/")"));
      while (!done() && peek() == ',') {
        ++pos;
        parts.push_back(parse_sequence(")"));
      }
      if (done() || peek() != ')') fail("expected ')'");
      ++pos;
      if (parts.size() == 1) return parts[0];
      return commutator(parts, Presentation::free_group());
    }
    switch (c) {
      case 'a': ++pos; return Word::from_letters({kA});
      case 'A': ++pos; return Word::from_letters({kAinv});
      case 'b': ++pos; return Word::from_letters({kB});
      case 'B': ++pos; return Word::from_letters({kBinv});
      default: fail(std::string("unknown token '") + c + "'");
    }
  }

  Word parse_sequence(std::string_view stop_chars) {
    Word acc;
    while (!done()) {
      char c = peek();
      if (stop_chars.find(c) != std::string_view::npos || c == ',') break;
      Word atom = parse_atom();
      if (!done() && peek() == '^') {
        ++pos;
        atom = atom.pow(parse_exponent());
      }
      acc = acc * atom;
    }
    return acc;
  }
};

}  // namespace

Word parse_word(std::string_view text) {
  Parser parser{text};
  Word w = parser.parse_sequence("");
  if (!parser.done()) parser.fail("trailing input");
  return w;
}

}  // namespace dgc
