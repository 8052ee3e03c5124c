#pragma once

// Bar-transition matrices, the canonical basis attached to a PBW basis,
// matching between reduced words, epsilon_j and the Kashiwara operators.

#include <map>
#include <memory>
#include <vector>

#include "qcanon/pbw.hpp"

namespace qcanon {

/// bar(L(c)) = sum_{c'} a[c'][c] L(c'); labels in increasing lexicographic order.
struct BarMatrix {
  Weight weight;
  std::vector<PBWIndex> labels;
  std::vector<std::vector<LaurentPoly>> a;  // a[row c'][col c]

  /// a[c][c] = 1 and a[c'][c] = 0 unless c' > c.
  bool unitriangular() const;
  /// bar(a) * a = identity.
  bool involutive() const;
};

/// Throws InvariantBreach when the matrix is not unitriangular.
BarMatrix bar_matrix(PBWBasis& h, const Weight& g);

struct CanonicalElt {
  PBWIndex label;
  QuotElt value;
  std::map<PBWIndex, LaurentPoly> pbw_coeffs;
};

/// The canonical basis b(c, h) of one PBW basis, one weight at a time.
class CanonicalBasis {
 public:
  explicit CanonicalBasis(PBWBasis& pbw) : pbw_(&pbw) {}

  PBWBasis& pbw() { return *pbw_; }
  const ReducedWord& word() const { return pbw_->word(); }

  struct Slice {
    Weight weight;
    std::vector<PBWIndex> labels;
    BarMatrix bar;
    /// b(c) = sum_{c'} p[c'][c] L(c'), p[c][c] = 1, p[c'][c] in qZ[q] otherwise.
    std::vector<std::vector<LaurentPoly>> p;
    std::vector<QuotElt> values;
    std::map<PBWIndex, int> position;
  };
  /// Runs the triangular solve; throws InvariantBreach if it has no solution.
  const Slice& slice(const Weight& g);

  CanonicalElt element(const PBWIndex& c);
  std::vector<CanonicalElt> elements(const Weight& g);

  /// Coordinates of x in the canonical basis of its weight.
  std::map<PBWIndex, LaurentPoly> expand(const QuotElt& x);

 private:
  PBWBasis* pbw_;
  std::map<Weight, std::unique_ptr<Slice>> slices_;
};

/// Re-checks bar invariance, the unitriangular qZ[q] expansion and the
/// signed-basis test for every element of the slice.
bool verify_slice(CanonicalBasis& b, const Weight& g);

/// x is bar invariant and (x, x) lies in 1 + q A_0.
bool signed_basis_test(const QuotElt& x);

struct LabelMatch {
  PBWIndex from;
  PBWIndex to;
  int sign;  // +1 or -1
};
/// b(from, a) = sign * b(to, b) for every label of weight g; exact matches are
/// preferred over negated ones. Throws InvariantBreach if some element has no partner.
std::vector<LabelMatch> label_transition(CanonicalBasis& a, CanonicalBasis& b, const Weight& g);

/// Largest n with x in f_j^(n) U^-: the least first exponent in the
/// expansion of x in a PBW basis whose word starts with j. Throws for x = 0.
int epsilon_j(PBWBasis& j_initial, const QuotElt& x);

/// F_j(b(c, h)) computed by relabelling into a j-initial word, raising the
/// first exponent and relabelling back.
CanonicalElt kashiwara_F(CanonicalBasis& basis, CanonicalBasis& j_initial, const PBWIndex& c);

}  // namespace qcanon
