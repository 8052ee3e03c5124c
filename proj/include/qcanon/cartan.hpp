#pragma once

// Cartan data of finite type, reduced words of the longest Weyl element,
// admissible diagram automorphisms and the folded datum.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcanon {

/// Vector of coefficients over the simple roots.
using Weight = std::vector<int>;
/// Sequence of node indices (0-based positions in CartanDatum::labels).
using Word = std::vector<int>;

class CartanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CartanDatum {
  std::string name;
  std::vector<std::string> labels;
  /// Symmetric matrix of (alpha_i, alpha_j).
  std::vector<std::vector<int>> pairing;

  int rank() const { return static_cast<int>(labels.size()); }
  /// (alpha_i, alpha_i) / 2, so that q_i = q^d(i).
  int d(int i) const { return pairing[i][i] / 2; }
  /// a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
  int a(int i, int j) const { return 2 * pairing[i][j] / pairing[i][i]; }
  int pair(const Weight& x, const Weight& y) const;
  int pair_simple(int i, const Weight& y) const;
  /// <alpha_i^vee, y> = 2 (alpha_i, y) / (alpha_i, alpha_i).
  int coroot(int i, const Weight& y) const { return 2 * pair_simple(i, y) / pairing[i][i]; }
  bool is_symmetric() const;
  int index_of(std::string_view label) const;
  Weight simple_root(int i) const;
  Weight zero_weight() const { return Weight(labels.size(), 0); }

  friend bool operator==(const CartanDatum&, const CartanDatum&) = default;
};

/// Validates the integrality/sign conditions and positive definiteness.
CartanDatum make_datum(std::string name, std::vector<std::string> labels,
                       std::vector<std::vector<int>> pairing);

/// One of A1, A1xA1, A2, A3, B2, D4, G2.
CartanDatum build_cartan(std::string_view type_tag);

Weight reflect(const CartanDatum& d, int i, const Weight& x);
int height(const Weight& x);
bool is_nonnegative(const Weight& x);
std::vector<Weight> positive_roots(const CartanDatum& d);
/// Order of the Weyl group, by orbit of a regular dominant vector.
long weyl_group_order(const CartanDatum& d);
/// All gamma in Q_+ with height(gamma) <= h, ordered by height then lexicographically.
std::vector<Weight> weights_up_to_height(const CartanDatum& d, int h);
Weight add(const Weight& x, const Weight& y);
Weight scale(int k, const Weight& x);

/// A validated reduced expression of w_0 together with its root sequence.
class ReducedWord {
 public:
  ReducedWord() = default;
  /// Throws CartanError if `letters` is not a reduced word for w_0.
  ReducedWord(const CartanDatum& d, Word letters);

  const Word& letters() const { return letters_; }
  /// beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}).
  const std::vector<Weight>& roots() const { return roots_; }
  int length() const { return static_cast<int>(letters_.size()); }
  std::string to_string(const CartanDatum& d) const;

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) { return a.letters_ == b.letters_; }
  friend bool operator<(const ReducedWord& a, const ReducedWord& b) { return a.letters_ < b.letters_; }

 private:
  Word letters_;
  std::vector<Weight> roots_;
};

/// Throws CartanError for non-reduced words (repeated or non-positive roots,
/// or a length different from |Delta^+|).
std::vector<Weight> roots_from_word(const CartanDatum& d, const Word& h);
Word parse_word(const CartanDatum& d, std::string_view csv);
std::string format_word(const CartanDatum& d, const Word& h);

/// Order m_ij of s_i s_j.
int braid_order(const CartanDatum& d, int i, int j);

/// Replace the alternating block of length m_ij starting at `pos`.
struct BraidMove {
  int pos;
  int len;
};
/// Returns false when no braid move applies at `pos`.
bool apply_braid_move(const CartanDatum& d, Word& h, int pos);
std::vector<Word> enumerate_reduced_words(const CartanDatum& d);
/// Some reduced word of w_0 (greedy by smallest admissible letter),
/// starting with `first` when that is given.
Word seed_reduced_word(const CartanDatum& d, int first = -1);
/// Shortest sequence of braid moves (by position) turning h into target.
std::vector<BraidMove> braid_path(const CartanDatum& d, const Word& h, const Word& target);

/// Permutation sigma of I with its orbits.
struct DiagramAutomorphism {
  std::vector<int> perm;

  int order() const;
  int apply(int i) const { return perm[i]; }
  /// Orbits listed as (i, sigma(i), sigma^2(i), ...) from the smallest member,
  /// orbits ordered by smallest member.
  std::vector<std::vector<int>> orbits() const;
  static DiagramAutomorphism identity(int rank);
};

/// Builds a folding from explicit node label pairs.
DiagramAutomorphism make_automorphism(const CartanDatum& d,
                                      const std::vector<std::pair<std::string, std::string>>& images);

/// Throws CartanError when sigma does not preserve the pairing or has an
/// orbit with non-orthogonal members.
void check_admissible(const CartanDatum& d, const DiagramAutomorphism& sigma);

/// The datum on the orbit set J together with the orbits themselves.
struct FoldedDatum {
  CartanDatum unfolded;
  DiagramAutomorphism sigma;
  CartanDatum folded;
  /// orbit j -> members in sigma-cycle order.
  std::vector<std::vector<int>> orbits;

  int prime() const { return sigma.order(); }
  /// Image of a folded weight in the sigma-fixed part of the unfolded lattice.
  Weight lift_weight(const Weight& folded_weight) const;
};

FoldedDatum fold_datum(const CartanDatum& d, const DiagramAutomorphism& sigma);

/// How orbit members are ordered inside each lifted block.
enum class BlockOrder {
  /// k-th occurrence of an orbit starts k steps along its sigma-cycle.
  Rotating,
  /// Always in sigma-cycle order from the smallest member.
  Fixed,
};

Word lift_word(const FoldedDatum& f, const Word& folded_word, BlockOrder order = BlockOrder::Rotating);

/// Sizes of the orbit blocks of a lifted word.
std::vector<int> block_sizes(const FoldedDatum& f, const Word& folded_word);

std::vector<int> index_lift(const FoldedDatum& f, const Word& folded_word, const std::vector<int>& c);
/// Inverse of index_lift; throws CartanError on non block-constant input.
std::vector<int> index_fold(const FoldedDatum& f, const Word& folded_word, const std::vector<int>& c);

/// sigma acting on exponent vectors of a lifted word: the entry at the
/// position of letter i moves to the position of sigma(i) in the same block.
std::vector<int> sigma_on_index(const FoldedDatum& f, const Word& lifted, const std::vector<int>& c);

}  // namespace qcanon
