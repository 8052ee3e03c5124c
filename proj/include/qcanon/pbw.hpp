#pragma once

// Braid operators on U_q^-, root vectors and PBW bases.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qcanon/freealg.hpp"

namespace qcanon {

using PBWIndex = std::vector<int>;

/// One of Lusztig's braid automorphisms, described by how it acts on the
/// generators: F_j (j != i) goes to
///   sum_{r+s=-a_ij} (-1)^r v_i^{eps*r} F_i^(r) F_j F_i^(s)   (r_left)
///   sum_{r+s=-a_ij} (-1)^r v_i^{eps*r} F_i^(s) F_j F_i^(r)   (otherwise)
/// and F_i goes to -K~_{mu*i} E_i (k_left) or -E_i K~_{mu*i}. Here v = q^-1.
struct BraidVariant {
  bool r_left;
  int eps;
  bool k_left;
  int mu;
  std::string name;

  static BraidVariant T2_plus();   // T''_{i,1}
  static BraidVariant T2_minus();  // T''_{i,-1}
  static BraidVariant T1_plus();   // T'_{i,1}
  static BraidVariant T1_minus();  // T'_{i,-1}
  static const BraidVariant& standard();
  /// All 16 sign/side combinations, named ones first.
  static std::vector<BraidVariant> all();
};

/// T_i(x), evaluated through the action on the Verma module M(0) = U^-.
/// Only meaningful when T_i(x) lies in U^- (true along reduced words).
QuotElt braid_apply(int i, const QuotElt& x, const BraidVariant& v = BraidVariant::standard());

/// How the root vectors of a PBW basis are produced.
enum class RootMode {
  /// f_{beta_k}^(n) = T_{i_1} ... T_{i_{k-1}} (f_{i_k}^(n)).
  Braid,
  /// Star images of the braid root vectors of the reversed word, so that
  /// L(c, h) = L(rev c, rev h)^*.
  StarReversed,
};

class PBWBasis {
 public:
  PBWBasis(const Algebra& alg, const ReducedWord& h, RootMode mode = RootMode::Braid,
           BraidVariant v = BraidVariant::standard());

  const Algebra& algebra() const { return *alg_; }
  const ReducedWord& word() const { return h_; }
  RootMode mode() const { return mode_; }
  int length() const { return h_.length(); }

  const QuotElt& root_vector(int k, int n);
  QuotElt monomial(const PBWIndex& c);
  Weight weight_of(const PBWIndex& c) const;

  /// All labels of weight g in increasing lexicographic order.
  std::vector<PBWIndex> labels(const Weight& g) const;

  struct Slice {
    Weight weight;
    std::vector<PBWIndex> labels;
    std::vector<QuotElt> elems;
    /// dot(image(L), rep_num(L)); (L, L) = norm / (rep_den * c_gamma).
    std::vector<LaurentPoly> norms;
    std::map<PBWIndex, int> position;
  };
  const Slice& slice(const Weight& g);

  /// Coordinates of x in the slice of its weight, aligned with labels.
  /// Uses orthogonality and checks the reconstruction exactly; throws
  /// DomainError when the coefficients are not in A or do not reproduce x.
  std::vector<LaurentPoly> coords(const QuotElt& x);
  std::map<PBWIndex, LaurentPoly> expand(const QuotElt& x);
  /// Element with the given coordinates in the slice of weight g.
  QuotElt combine(const Weight& g, const std::vector<LaurentPoly>& coords);

 private:
  const Algebra* alg_;
  ReducedWord h_;
  RootMode mode_;
  BraidVariant variant_;
  std::unique_ptr<PBWBasis> reversed_;
  std::map<std::pair<int, int>, QuotElt> roots_;
  std::map<Weight, std::unique_ptr<Slice>> slices_;
};

/// Square matrix indexed by labels: column c holds the coordinates of
/// L(c, from) in the basis `to`.
struct Transition {
  Weight weight;
  std::vector<PBWIndex> from_labels, to_labels;
  std::vector<std::vector<LaurentPoly>> m;  // m[row = to label][col = from label]
};
Transition transition_between_words(PBWBasis& from, PBWBasis& to, const Weight& g);

/// Entries in Z[q] and the q = 0 specialization a permutation matrix.
bool in_Zq(const Transition& t);
bool is_permutation_mod_q(const Transition& t);
/// a * b == identity (b maps back).
bool is_inverse_pair(const Transition& a, const Transition& b);

}  // namespace qcanon
