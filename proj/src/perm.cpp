#include "dgc/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dgc {

Perm::Perm(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
      throw std::invalid_argument("images do not form a permutation");
    seen[v] = 1;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::parse(std::string_view text, int degree) {
  Perm p(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point in cycle notation");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) throw std::invalid_argument("point out of range");
      cycle.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
    }
    if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k], to = cycle[(k + 1) % cycle.size()];
      if (p.images_[from] != from) throw std::invalid_argument("repeated point in cycles");
      p.images_[from] = to;
    }
    skip_ws();
  }
  // validate (repeated points across cycles could break bijectivity)
  return from_images(std::move(p.images_));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch");
  Perm out;
  out.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) out.images_[images_[i]] = i;
  return out;
}

Perm Perm::pow(long k) const {
  Perm base = k < 0 ? inverse() : *this;
  long reps = k < 0 ? -k : k;
  Perm acc(degree());
  while (reps > 0) {
    if (reps & 1) acc = acc * base;
    base = base * base;
    reps >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Perm::num_cycles() const {
  std::vector<char> seen(images_.size(), 0);
  int count = 0;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (int j = i; !seen[j]; j = images_[j]) seen[j] = 1;
  }
  return count;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> lengths;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) { seen[j] = 1; ++len; }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

long Perm::order() const {
  long ord = 1;
  for (int len : cycle_type()) ord = std::lcm(ord, static_cast<long>(len));
  return ord;
}

std::string Perm::str() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) { seen[i] = 1; continue; }
    out += '(';
    bool first = true;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm evaluate(const Word& w, const Perm& g0, const Perm& g1) {
  if (g0.degree() != g1.degree()) throw std::invalid_argument("degree mismatch");
  const Perm images[kNumLetters] = {g0, g0.inverse(), g1, g1.inverse()};
  Perm acc(g0.degree());
  for (Letter l : w.letters()) acc = acc * images[l];
  return acc;
}

}  // namespace dgc
