#pragma once

// Folding: the sigma-fixed part of U^- over F_p[q, q^-1], its quotient V_q
// by the orbit-sum ideal J, and the comparison map Phi from the folded
// algebra. Everything is done in PBW coordinates of a lifted word, on which
// sigma acts by permuting exponent vectors.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qcanon/canonical.hpp"

namespace qcanon {

/// Element of V_q: coordinates (mod p) on the classes pi(L(c)) of the
/// sigma-fixed labels c of the lifted word.
struct VqElt {
  Weight weight;  // unfolded, sigma-fixed
  std::map<PBWIndex, LaurentPoly> coords;

  friend bool operator==(const VqElt& a, const VqElt& b) { return a.weight == b.weight && a.coords == b.coords; }
};

class Folding {
 public:
  /// `folded_word` is a reduced word of the folded datum; the unfolded side
  /// uses its lift.
  Folding(FoldedDatum f, Word folded_word, int max_height = 12);

  const FoldedDatum& datum() const { return f_; }
  int prime() const { return f_.prime(); }
  const Word& lifted_word() const { return lifted_; }
  PBWBasis& unfolded_pbw() { return *up_; }
  PBWBasis& folded_pbw() { return *fp_; }
  CanonicalBasis& unfolded_canonical() { return *ucb_; }
  CanonicalBasis& folded_canonical() { return *fcb_; }

  /// prod_{i in orbit j} f_i^(a) in the unfolded algebra.
  QuotElt tilde_f(int j, int a) const;

  bool label_fixed(const PBWIndex& c) const;
  /// Rank over F_p(q) of the orbit sums of a spanning set of the weight
  /// slice (unfolded divided-power monomials), i.e. of J at weight g.
  int ideal_J_rank(const Weight& g);
  /// Number of sigma-orbits of length > 1 among the labels of weight g.
  int nonfixed_orbits(const Weight& g);

  /// Throws DomainError if x is not sigma-fixed.
  VqElt project_pi(const QuotElt& x);
  /// Phi on folded PBW coordinates: L(c) goes to pi(L(lift c)).
  VqElt phi_of_ul(const Weight& folded_weight, const std::map<PBWIndex, LaurentPoly>& folded_coords);
  VqElt phi_of_ul(const QuotElt& folded_x);

  struct Report {
    Weight folded_weight;
    int folded_labels = 0;
    int vq_dim = 0;
    int j_rank = 0;
    int nonfixed = 0;
    bool sigma_permutes = true;  // sigma(L(c)) = L(sigma c)
    bool graded_bijective = true;
    bool formula_271 = true;     // checked on every divided-power monomial
    bool multiplicative = true;  // Phi(xy) = Phi(x) Phi(y) on pairs of PBW monomials
    bool canonical = true;       // Phi(b(c)) = pi(b(lift c))
    std::vector<std::string> witnesses;
    bool ok() const {
      return sigma_permutes && graded_bijective && formula_271 && multiplicative && canonical;
    }
  };
  Report verify_fold_weight(const Weight& folded_weight);

 private:
  FoldedDatum f_;
  Word folded_word_, lifted_;
  std::unique_ptr<Algebra> ualg_, falg_;
  std::unique_ptr<PBWBasis> up_, fp_;
  std::unique_ptr<CanonicalBasis> ucb_, fcb_;

  VqElt from_unfolded_coords(const Weight& g, const std::map<PBWIndex, LaurentPoly>& coords);
};

/// Ordered sequences (letter, exponent) with no two neighbours on the same
/// letter and total weight g; the divided-power monomials of weight g.
std::vector<std::vector<std::pair<int, int>>> divided_power_sequences(const Weight& g);

/// Rank over F_p(q) of a matrix with entries in F_p[q, q^-1].
int rank_mod_p(std::vector<std::vector<LaurentPoly>> rows, int p);

}  // namespace qcanon
