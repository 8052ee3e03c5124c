#pragma once

// Exact coefficient arithmetic: Laurent polynomials in q over Z or F_p,
// rational functions over Q, and quantum integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcanon {

using Integer = boost::multiprecision::cpp_int;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A structural property that the theory guarantees failed to hold.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Element of Z[q, q^-1], or of F_p[q, q^-1] when characteristic() == p.
///
/// Stored densely between the lowest and highest nonzero degree; both end
/// coefficients are nonzero, and the zero polynomial has no storage.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant, int characteristic = 0);  // NOLINT: implicit on purpose

  static LaurentPoly monomial(Integer coeff, int degree, int characteristic = 0);
  static LaurentPoly q(int degree = 1) { return monomial(1, degree); }
  /// Builds sum coeffs[k] q^(low + k).
  static LaurentPoly from_coeffs(int low, std::vector<Integer> coeffs, int characteristic = 0);

  bool is_zero() const { return c_.empty(); }
  int characteristic() const { return p_; }
  // Both require a nonzero polynomial.
  int low_degree() const;
  int high_degree() const;
  const Integer& low_coeff() const;
  Integer coeff(int degree) const;
  /// (degree, coefficient) pairs in increasing degree, zeros skipped.
  std::vector<std::pair<int, Integer>> terms() const;
  std::size_t term_count() const;

  LaurentPoly bar() const;                 // q -> q^-1
  LaurentPoly shifted(int k) const;        // multiply by q^k
  LaurentPoly substitute_power(int d) const;  // q -> q^d, d >= 1
  LaurentPoly reduce_mod(int p) const;     // pi_p : Z[q^+-] -> F_p[q^+-]
  LaurentPoly lift() const;                // forget characteristic (symmetric residues not used)

  /// Exact quotient if `divisor` divides *this in the Laurent ring, else empty.
  bool divides_into(const LaurentPoly& divisor, LaurentPoly& quotient) const;
  LaurentPoly exact_div(const LaurentPoly& divisor) const;  // throws DomainError if inexact
  LaurentPoly exact_div(const Integer& divisor) const;

  /// Value at q = t in Z/P (P prime below 2^62, t invertible).
  std::uint64_t eval_mod(std::uint64_t t, std::uint64_t P) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  /// *this += a * b without a temporary.
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  /// `3*q^-2 + 1 + q^5`; terms in increasing degree.
  std::string to_string() const;

 private:
  int low_ = 0;
  std::vector<Integer> c_;
  int p_ = 0;

  void normalize();
  static int merged_char(int a, int b);
};

/// Element of Q(q), kept as num/den with gcd(num, den) = 1 in Z[q],
/// den a polynomial with nonzero constant term, and that constant positive.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const LaurentPoly& num);  // NOLINT
  RatFunc(long c) : RatFunc(LaurentPoly(c)) {}  // NOLINT
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when den is 1, i.e. the value lies in Z[q, q^-1].
  bool is_laurent() const;
  LaurentPoly to_laurent() const;  // throws DomainError if not Laurent

  RatFunc bar() const;
  RatFunc inverse() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  LaurentPoly num_, den_;
  void normalize();
};

/// gcd in Z[q] of two Laurent polynomials, normalized to low degree 0 and a
/// positive lowest coefficient. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// [n] with q replaced by q^d.
LaurentPoly quantum_integer(int n, int d = 1);
/// [m]! with q replaced by q^d.
LaurentPoly quantum_factorial(int m, int d = 1);
/// [m choose k] with q replaced by q^d; throws DomainError when k > m.
LaurentPoly quantum_binomial(int m, int k, int d = 1);

inline LaurentPoly bar_scalar(const LaurentPoly& f) { return f.bar(); }

/// f in q^k (1 + q Z[q]): lowest degree k with coefficient 1.
bool in_shifted_unit(const LaurentPoly& f, int k);
/// r in 1 + q A_0 where A_0 = Q[[q]] intersect Q(q).
bool in_one_plus_qA0(const RatFunc& r);

}  // namespace qcanon
