#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dgc/words.hpp"

namespace dgc {

/// A permutation of {0,...,degree-1}. Text form is 1-based cycle notation.
/// Products compose left to right: (f*g)(x) = g(f(x)), matching a right
/// action on points.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity

  static Perm from_images(std::vector<int> images);
  /// Parses "(1,2,3)(4,5,6)"; points are 1-based. `degree` may exceed the
  /// largest point mentioned; identity parses from "()" or "".
  static Perm parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int p) const { return images_[p]; }
  const std::vector<int>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(long k) const;
  bool is_identity() const;

  int num_cycles() const;                 // fixed points count as 1-cycles
  std::vector<int> cycle_type() const;    // lengths, sorted descending
  long order() const;

  std::string str() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// Image of a word under a -> g0, b -> g1 (right action, letters applied
/// left to right). Throws on degree mismatch.
Perm evaluate(const Word& w, const Perm& g0, const Perm& g1);

}  // namespace dgc
