#pragma once

// Free algebra on the f_i, the quotient U_q^- and the bilinear form.
//
// An element of U_q^- of weight gamma is stored through its pairing image:
// for every word u of weight gamma the value (x, f_u) / c_gamma, where
// f_u = f_{u_1} ... f_{u_n} and c_gamma = prod_i (1 - q_i^2)^{-gamma_i}.
// The form is nondegenerate on U_q^-, so this image determines x and
// equality is structural. Each element also carries one preimage in the
// free algebra (a word vector with a common denominator), which is what
// the form and the braid operators need.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "qcanon/cartan.hpp"
#include "qcanon/scalar.hpp"

namespace qcanon {

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Homogeneous element of the free algebra with coefficients in A.
struct FreeElt {
  Weight weight;
  std::map<Word, LaurentPoly> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const LaurentPoly& c);
};

/// Words of one weight together with the table of word pairings.
struct WeightSpace {
  Weight weight;
  int height = 0;
  std::vector<Word> words;  // lexicographic
  std::map<Word, int> index;
  std::vector<int> reversed;  // index of the reversed word
  /// gram[w][u] = (f_w, f_u) / c_gamma; filled on demand by Algebra::gram.
  mutable std::vector<std::vector<LaurentPoly>> gram;
  int dim() const { return static_cast<int>(words.size()); }
};

/// Per-datum context: weight spaces, shuffle tables and the height bound.
class Algebra {
 public:
  /// Largest number of words allowed in one weight space.
  static constexpr std::uint64_t kWordBudget = 500000;

  /// Throws ResourceLimit when some weight up to max_height exceeds kWordBudget.
  explicit Algebra(CartanDatum d, int max_height = 12);

  const CartanDatum& datum() const { return d_; }
  int max_height() const { return max_height_; }

  /// Throws ResourceLimit beyond the height bound.
  const WeightSpace& space(const Weight& g) const;
  /// Same space with its word pairing table built.
  const WeightSpace& gram(const Weight& g) const;

  struct ShuffleTerm {
    int u, left, right, exponent;  // contributes q^exponent * x[left] * y[right] to u
  };
  /// Memoized table of the terms below; meant for small weights.
  const std::vector<ShuffleTerm>& shuffle(const Weight& g1, const Weight& g2) const;
  /// Streams every term of the shuffle product of weights g1 and g2.
  void for_each_shuffle(const Weight& g1, const Weight& g2, const std::function<void(const ShuffleTerm&)>& fn) const;

  /// N(gamma) = ((gamma, gamma) - sum_i gamma_i (alpha_i, alpha_i)) / 2.
  int bar_shift(const Weight& g) const;

 private:
  CartanDatum d_;
  int max_height_;
  mutable std::recursive_mutex mu_;
  mutable std::map<Weight, std::unique_ptr<WeightSpace>> spaces_;
  mutable std::map<std::pair<Weight, Weight>, std::unique_ptr<std::vector<ShuffleTerm>>> shuffles_;

  void build_gram(WeightSpace& s) const;
};

class QuotElt {
 public:
  QuotElt() = default;

  static QuotElt zero(const Algebra& alg, const Weight& g);
  static QuotElt one(const Algebra& alg);
  static QuotElt generator(const Algebra& alg, int i);
  static QuotElt divided_power(const Algebra& alg, int i, int n);
  /// Class of num / den, where num is a word vector of one weight.
  static QuotElt from_free(const Algebra& alg, const FreeElt& num, const LaurentPoly& den = LaurentPoly(1));
  /// Same, with num given densely over space(g).words.
  static QuotElt from_rep(const Algebra& alg, const Weight& g, std::vector<LaurentPoly> num, LaurentPoly den);

  bool valid() const { return alg_ != nullptr; }
  const Algebra& algebra() const { return *alg_; }
  const Weight& weight() const { return weight_; }
  const WeightSpace& space() const { return alg_->space(weight_); }
  const std::vector<LaurentPoly>& image() const { return img_; }
  const std::vector<LaurentPoly>& rep_num() const { return num_; }
  const LaurentPoly& rep_den() const { return den_; }
  /// Preimage word vector (numerator only; divide by rep_den()).
  FreeElt representative() const;

  bool is_zero() const;
  QuotElt bar() const;
  QuotElt star() const;
  QuotElt sigma(const DiagramAutomorphism& s) const;

  QuotElt operator-() const;
  QuotElt& operator+=(const QuotElt& o);
  QuotElt& operator-=(const QuotElt& o);
  QuotElt& operator*=(const LaurentPoly& c);
  friend QuotElt operator+(QuotElt a, const QuotElt& b) { return a += b; }
  friend QuotElt operator-(QuotElt a, const QuotElt& b) { return a -= b; }
  friend QuotElt operator*(const LaurentPoly& c, QuotElt a) { return a *= c; }
  friend QuotElt operator*(const QuotElt& a, const QuotElt& b);
  /// Divides by c exactly; throws DomainError if the result is not integral.
  QuotElt exact_div(const LaurentPoly& c) const;

  friend bool operator==(const QuotElt& a, const QuotElt& b);
  friend bool operator!=(const QuotElt& a, const QuotElt& b) { return !(a == b); }

  /// Cancels common factors between the representative and its denominator.
  void tidy();

 private:
  const Algebra* alg_ = nullptr;
  Weight weight_;
  std::vector<LaurentPoly> img_;
  std::vector<LaurentPoly> num_;
  LaurentPoly den_;
};

/// Sum over the entries of a[k] * b[k].
LaurentPoly dot(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b);

/// Pairing image of a word vector: sum_w num[w] * gram[w].
std::vector<LaurentPoly> image_of(const WeightSpace& s, const std::vector<LaurentPoly>& num);

/// (x, y); zero when the weights differ.
RatFunc bilinear_form(const QuotElt& x, const QuotElt& y);

/// The q-Serre relator for (i, j) multiplied by [1 - a_ij]_i! so that its
/// coefficients lie in A: sum_k (-1)^k [m choose k]_i f_i^k f_j f_i^(m-k).
FreeElt serre_relator(const CartanDatum& d, int i, int j);

/// Number of c with sum c_k beta_k = gamma (Kostant partition count).
long weight_dim(const CartanDatum& d, const Weight& g);

/// Ranks of one weight space, obtained by specializing q at a random point
/// modulo a large prime. Since the Serre ideal lies in the radical of the
/// form, ideal_rank + gram_rank == words certifies both ranks exactly.
struct SerreReport {
  Weight weight;
  int words = 0;
  int ideal_rank = 0;
  int gram_rank = 0;
  long kostant = 0;
  bool relators_vanish = true;
  bool certified() const { return ideal_rank + gram_rank == words; }
  bool ok() const { return relators_vanish && certified() && gram_rank == kostant; }
};
SerreReport serre_consistency(const Algebra& alg, const Weight& g, std::uint64_t seed = 1);

}  // namespace qcanon
