#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgc/dessin.hpp"
#include "dgc/extract.hpp"
#include "dgc/geometry.hpp"
#include "dgc/words.hpp"

namespace dgc {

enum class CommutationMode { Iterated, Pairwise };

std::string mode_name(CommutationMode mode);

struct LineVerdict {
  bool commuting = false;
  std::vector<int> witness;  // a violating ordering (indices), when defective
};

/// Does the line satisfy the commutation law in the permutation image of
/// the dessin? Iterated mode demands the left-normed iterated commutator
/// of the images vanish for every ordering; pairwise mode demands all
/// pairs commute. At least two words required.
LineVerdict line_commuting(const std::vector<Word>& words, const Dessin& d,
                           CommutationMode mode);

struct Rational {
  long num = 0;
  long den = 1;
  std::string str() const;      // "26/35", integers without slash
  std::string decimal() const;  // exact when terminating, else str()
};

Rational make_rational(long num, long den);

struct ContextualityReport {
  int l = 0;
  int u = 0;
  std::vector<int> defective;  // line indices into the structure's line list
  Rational c;                  // (l-u)/l
  std::optional<Rational> l_over_u;
  CommutationMode mode = CommutationMode::Iterated;
  std::vector<Word> labels;
};

/// Scores every line of g using the words labelling its points.
ContextualityReport score(const IncidenceStructure& g, const std::vector<Word>& labels,
                          const Dessin& d, CommutationMode mode);

struct LabelingCandidate {
  Dessin dessin;
  std::vector<std::vector<Word>> labelings;
};

struct BestLabeling {
  ContextualityReport report;
  std::size_t candidate = 0;
  std::size_t labeling = 0;
};

/// Scores every candidate whose extracted geometries contain one
/// isomorphic to g, maximising the number of commuting lines; ties break
/// by candidate then labeling order. Throws when no candidate matches.
BestLabeling best_labeling(const IncidenceStructure& g,
                           const std::vector<LabelingCandidate>& candidates,
                           CommutationMode mode);

}  // namespace dgc
