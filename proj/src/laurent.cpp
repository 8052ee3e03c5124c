#include "qcanon/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace qcanon {

namespace {

Integer mod_nonneg(const Integer& x, int p) {
  Integer r = x % p;
  if (r < 0) r += p;
  return r;
}

Integer inverse_mod(const Integer& a, int p) {
  // p is 2 or 3 in practice; brute force is fine and avoids edge cases.
  for (int x = 1; x < p; ++x)
    if (mod_nonneg(a * x, p) == 1) return x;
  throw DomainError("coefficient not invertible mod p");
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant, int characteristic) : p_(characteristic) {
  if (constant != 0) c_.push_back(Integer(constant));
  normalize();
}

LaurentPoly LaurentPoly::monomial(Integer coeff, int degree, int characteristic) {
  LaurentPoly r;
  r.p_ = characteristic;
  r.low_ = degree;
  r.c_.push_back(std::move(coeff));
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<Integer> coeffs, int characteristic) {
  LaurentPoly r;
  r.p_ = characteristic;
  r.low_ = low;
  r.c_ = std::move(coeffs);
  r.normalize();
  return r;
}

void LaurentPoly::normalize() {
  if (p_ != 0)
    for (auto& x : c_) x = mod_nonneg(x, p_);
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<Integer>(c_.begin() + first, c_.begin() + last);
    low_ += static_cast<int>(first);
  }
}

int LaurentPoly::merged_char(int a, int b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw DomainError("mixing Laurent polynomials of different characteristic");
}

int LaurentPoly::low_degree() const {
  if (is_zero()) throw DomainError("low_degree of zero polynomial");
  return low_;
}

int LaurentPoly::high_degree() const {
  if (is_zero()) throw DomainError("high_degree of zero polynomial");
  return low_ + static_cast<int>(c_.size()) - 1;
}

const Integer& LaurentPoly::low_coeff() const {
  if (is_zero()) throw DomainError("low_coeff of zero polynomial");
  return c_.front();
}

Integer LaurentPoly::coeff(int degree) const {
  if (is_zero() || degree < low_ || degree > high_degree()) return 0;
  return c_[degree - low_];
}

std::vector<std::pair<int, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), c_[k]);
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Integer& x) { return x != 0; }));
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return *this;
  LaurentPoly r;
  r.p_ = p_;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.low_ = -high_degree();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int d) const {
  if (d < 1) throw DomainError("substitute_power needs d >= 1");
  if (is_zero() || d == 1) return *this;
  LaurentPoly r;
  r.p_ = p_;
  r.low_ = low_ * d;
  r.c_.assign((c_.size() - 1) * d + 1, Integer(0));
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k * d] = c_[k];
  return r;
}

LaurentPoly LaurentPoly::reduce_mod(int p) const {
  if (p_ != 0 && p_ != p) throw DomainError("reduce_mod to a different characteristic");
  LaurentPoly r = *this;
  r.p_ = p;
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::lift() const {
  LaurentPoly r = *this;
  r.p_ = 0;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  p_ = merged_char(p_, o.p_);
  if (o.is_zero()) return *this;
  if (is_zero()) {
    low_ = o.low_;
    c_ = o.c_;
    normalize();
    return *this;
  }
  int lo = std::min(low_, o.low_);
  int hi = std::max(high_degree(), o.high_degree());
  if (lo < low_ || hi > high_degree()) {
    std::vector<Integer> n(hi - lo + 1, Integer(0));
    for (std::size_t k = 0; k < c_.size(); ++k) n[low_ - lo + k] = std::move(c_[k]);
    c_ = std::move(n);
    low_ = lo;
  }
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[o.low_ - low_ + k] += o.c_[k];
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.p_ = LaurentPoly::merged_char(a.p_, b.p_);
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    p_ = merged_char(p_, merged_char(a.p_, b.p_));
    return;
  }
  *this += a * b;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.low_ != b.low_) return a.low_ < b.low_;
  return a.c_ < b.c_;
}

bool LaurentPoly::divides_into(const LaurentPoly& divisor, LaurentPoly& quotient) const {
  if (divisor.is_zero()) throw DomainError("division by zero Laurent polynomial");
  int p = merged_char(p_, divisor.p_);
  quotient = LaurentPoly(0, p);
  if (is_zero()) return true;
  // Long division from the top, on the polynomial parts.
  std::vector<Integer> rem = c_;
  if (p) for (auto& x : rem) x = mod_nonneg(x, p);
  const auto& d = divisor.c_;
  if (rem.size() < d.size()) return false;
  std::size_t qlen = rem.size() - d.size() + 1;
  std::vector<Integer> quot(qlen, Integer(0));
  Integer lead_inv = p ? inverse_mod(d.back(), p) : Integer(0);
  for (std::size_t k = qlen; k-- > 0;) {
    Integer& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    Integer factor;
    if (p) {
      factor = mod_nonneg(top * lead_inv, p);
    } else {
      if (top % d.back() != 0) return false;
      factor = top / d.back();
    }
    quot[k] = factor;
    for (std::size_t j = 0; j < d.size(); ++j) {
      rem[k + j] -= factor * d[j];
      if (p) rem[k + j] = mod_nonneg(rem[k + j], p);
    }
  }
  for (const auto& x : rem)
    if (x != 0) return false;
  quotient = from_coeffs(low_ - divisor.low_, std::move(quot), p);
  return true;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
  LaurentPoly q;
  if (!divides_into(divisor, q))
    throw DomainError("inexact division: (" + to_string() + ") / (" + divisor.to_string() + ")");
  return q;
}

LaurentPoly LaurentPoly::exact_div(const Integer& divisor) const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) {
    if (x % divisor != 0) throw DomainError("inexact integer division");
    x /= divisor;
  }
  return r;
}

std::uint64_t LaurentPoly::eval_mod(std::uint64_t t, std::uint64_t P) const {
  if (is_zero()) return 0;
  std::uint64_t acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) {
    Integer r = c_[k] % P;
    if (r < 0) r += P;
    acc = (mulmod(acc, t, P) + static_cast<std::uint64_t>(r)) % P;
  }
  std::uint64_t tinv = powmod(t, P - 2, P);
  std::uint64_t scale = low_ >= 0 ? powmod(t, low_, P) : powmod(tinv, -static_cast<long>(low_), P);
  return mulmod(acc, scale, P);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [deg, c] : terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (deg == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << 'q';
    if (deg != 1) out << '^' << deg;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

using Dense = std::vector<Integer>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer content(const Dense& a) {
  Integer g = 0;
  for (const auto& x : a) g = boost::multiprecision::gcd(g, x);
  return g;
}

Dense primitive(const Dense& a) {
  Integer g = content(a);
  Dense r = a;
  if (g != 0 && g != 1)
    for (auto& x : r) x /= g;
  return r;
}

// Pseudo-remainder of a by b (deg a >= deg b).
Dense prem(Dense a, const Dense& b) {
  const Integer& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    Integer la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

Dense dense_of(const LaurentPoly& f) {
  Dense d;
  if (f.is_zero()) return d;
  for (int k = f.low_degree(); k <= f.high_degree(); ++k) d.push_back(f.coeff(k));
  return d;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  Dense x = dense_of(a), y = dense_of(b);
  Integer cg = boost::multiprecision::gcd(content(x), content(y));
  x = primitive(x);
  y = primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = primitive(prem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  for (auto& c : x) c *= cg;
  LaurentPoly g = LaurentPoly::from_coeffs(0, std::move(x));
  if (g.low_coeff() < 0) g = -g;
  return g;
}

LaurentPoly quantum_integer(int n, int d) {
  if (d < 1) throw DomainError("quantum_integer needs d >= 1");
  if (n == 0) return LaurentPoly();
  int m = n < 0 ? -n : n;
  std::vector<Integer> c(2 * (m - 1) * d + 1, Integer(0));
  for (int k = 0; k < m; ++k) c[2 * k * d] = 1;
  LaurentPoly r = LaurentPoly::from_coeffs(-(m - 1) * d, std::move(c));
  return n < 0 ? -r : r;
}

LaurentPoly quantum_factorial(int m, int d) {
  if (m < 0) throw DomainError("quantum_factorial of negative integer");
  LaurentPoly r(1);
  for (int k = 2; k <= m; ++k) r *= quantum_integer(k, d);
  return r;
}

LaurentPoly quantum_binomial(int m, int k, int d) {
  if (k < 0 || m < 0 || k > m) throw DomainError("quantum_binomial needs 0 <= k <= m");
  // Pascal rule [m,k] = q^{-k}[m-1,k] + q^{m-k}[m-1,k-1] keeps everything integral.
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (int n = 1; n <= m; ++n) {
    std::vector<LaurentPoly> next(n + 1);
    for (int j = 0; j <= n; ++j) {
      LaurentPoly v;
      if (j < n) v += row[j].shifted(-j * d);
      if (j > 0) v += row[j - 1].shifted((n - j) * d);
      next[j] = std::move(v);
    }
    row = std::move(next);
  }
  return row[k];
}

bool in_shifted_unit(const LaurentPoly& f, int k) {
  return !f.is_zero() && f.low_degree() == k && f.low_coeff() == 1;
}

}  // namespace qcanon
