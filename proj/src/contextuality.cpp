#include "dgc/contextuality.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dgc {

std::string mode_name(CommutationMode mode) {
  return mode == CommutationMode::Iterated ? "iterated" : "pairwise";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) { num = -num; den = -den; }
  long g = std::gcd(num < 0 ? -num : num, den);
  if (g) { num /= g; den /= g; }
  return Rational{num, den == 0 ? 1 : den};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string Rational::decimal() const {
  // exact decimal expansion when den = 2^a 5^b
  long d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return str();
  int digits = std::max(twos, fives);
  if (digits == 0) return str();
  long long scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  long long scaled = static_cast<long long>(num) * scale / den;
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string whole = std::to_string(scaled / scale);
  std::string frac = std::to_string(scaled % scale);
  frac.insert(frac.begin(), digits - static_cast<int>(frac.size()), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (neg ? "-" : "") + whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

namespace {

Perm iterated_commutator(const std::vector<Perm>& perms, const std::vector<int>& order) {
  Perm acc = perms[order[0]];
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Perm& w = perms[order[i]];
    acc = acc.inverse() * w.inverse() * acc * w;
  }
  return acc;
}

}  // namespace

LineVerdict line_commuting(const std::vector<Word>& words, const Dessin& d,
                           CommutationMode mode) {
  if (words.size() < 2) throw std::invalid_argument("line needs at least two points");
  if (words.size() > 8) throw std::invalid_argument("line too long for ordering sweep");
  std::vector<Perm> perms;
  perms.reserve(words.size());
  for (const Word& w : words) perms.push_back(evaluate(w, d.g0(), d.g1()));

  LineVerdict verdict;
  if (mode == CommutationMode::Pairwise) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      for (std::size_t j = i + 1; j < perms.size(); ++j)
        if (perms[i] * perms[j] != perms[j] * perms[i]) {
          verdict.witness = {static_cast<int>(i), static_cast<int>(j)};
          return verdict;
        }
    verdict.commuting = true;
    return verdict;
  }

  // identity image anywhere collapses every left-normed commutator
  for (const Perm& p : perms)
    if (p.is_identity()) {
      verdict.commuting = true;
      return verdict;
    }
  std::vector<int> order(perms.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    if (!iterated_commutator(perms, order).is_identity()) {
      verdict.witness = order;
      return verdict;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  verdict.commuting = true;
  return verdict;
}

ContextualityReport score(const IncidenceStructure& g, const std::vector<Word>& labels,
                          const Dessin& d, CommutationMode mode) {
  if (static_cast<int>(labels.size()) != g.points)
    throw std::invalid_argument("labels must cover all points");
  ContextualityReport report;
  report.mode = mode;
  report.labels = labels;
  report.l = g.line_count();
  for (int li = 0; li < g.line_count(); ++li) {
    std::vector<Word> line_words;
    for (int p : g.lines[li]) line_words.push_back(labels[p]);
    if (line_commuting(line_words, d, mode).commuting)
      ++report.u;
    else
      report.defective.push_back(li);
  }
  report.c = make_rational(report.l - report.u, report.l);
  if (report.u > 0) report.l_over_u = make_rational(report.l, report.u);
  return report;
}

BestLabeling best_labeling(const IncidenceStructure& g,
                           const std::vector<LabelingCandidate>& candidates,
                           CommutationMode mode) {
  if (candidates.empty()) throw std::invalid_argument("no candidates");
  std::optional<BestLabeling> best;
  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const LabelingCandidate& cand = candidates[ci];
    // the candidate must stabilise a copy of g
    std::optional<IncidenceStructure> matching;
    for (const StabilizerGeometry& sg : extract_geometries(cand.dessin)) {
      if (sg.structure.points != g.points ||
          sg.structure.lines.size() != g.lines.size())
        continue;
      if (isomorphic(sg.structure, g).isomorphic) {
        matching = sg.structure;
        break;
      }
    }
    if (!matching) continue;
    for (std::size_t li = 0; li < cand.labelings.size(); ++li) {
      ContextualityReport report = score(*matching, cand.labelings[li], cand.dessin, mode);
      if (!best || report.u > best->report.u)
        best = BestLabeling{std::move(report), ci, li};
    }
  }
  if (!best) throw std::invalid_argument("no candidate stabilises the geometry");
  return *best;
}

}  // namespace dgc
