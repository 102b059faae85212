#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dgc {

// Letters of the two-generator alphabet. The inverse of a letter is
// obtained by flipping the low bit.
using Letter = std::uint8_t;
inline constexpr Letter kA = 0;     // a
inline constexpr Letter kAinv = 1;  // a^-1
inline constexpr Letter kB = 2;     // b
inline constexpr Letter kBinv = 3;  // b^-1
inline constexpr int kNumLetters = 4;

constexpr Letter inverse_letter(Letter l) { return static_cast<Letter>(l ^ 1); }

constexpr char letter_char(Letter l) {
  constexpr char chars[kNumLetters] = {'a', 'A', 'b', 'B'};
  return chars[l];
}

/// A freely reduced word over {a, a^-1, b, b^-1}.
class Word {
 public:
  Word() = default;

  /// Builds a word from raw letters, applying free cancellation.
  static Word from_letters(std::span<const Letter> letters);
  static Word from_letters(std::initializer_list<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inverse() const;

  /// Concatenation followed by free cancellation.
  Word operator*(const Word& rhs) const;
  Word pow(int k) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  /// Compact text form: runs collapse to exponents ("aaa" -> "a^3"),
  /// inverses print uppercase. The empty word prints as "".
  std::string str() const;

 private:
  std::vector<Letter> letters_;  // always freely reduced
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
};

/// A two-generator presentation. Mode G carries the single relator b^2;
/// custom presentations carry arbitrary relator sets that are applied by
/// coset enumeration only, never by word rewriting.
struct Presentation {
  enum class Mode { F, G, Custom };

  Mode mode = Mode::F;
  std::vector<Word> relators;

  static Presentation free_group();                    // <a,b>
  static Presentation involution_b();                  // <a,b | b^2>
  static Presentation custom(std::vector<Word> relators);

  bool b_is_involution() const;
  std::string mode_name() const;
};

/// Free reduction, plus b^2 = e rewriting in mode G. Custom relators are
/// deliberately not applied here.
Word reduce(const Word& w, const Presentation& p);

/// Left-normed iterated commutator (w1,...,wp) = ((w1,...,w{p-1}),wp),
/// with (x,y) = x^-1 y^-1 x y. Requires at least two words.
Word commutator(std::span<const Word> ws, const Presentation& p);
Word commutator(const Word& x, const Word& y, const Presentation& p);

/// Parses word text: lowercase letter = generator, uppercase = inverse,
/// optional ^k exponents (k possibly negative), parenthesised groups with
/// exponents, and (u,v,...) for iterated commutators. Whitespace ignored.
/// Throws ParseError with the offending position.
Word parse_word(std::string_view text);

}  // namespace dgc
