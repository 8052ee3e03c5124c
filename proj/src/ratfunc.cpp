#include "qcanon/scalar.hpp"

namespace qcanon {

RatFunc::RatFunc(const LaurentPoly& num) : num_(num), den_(1) {
  if (num.characteristic() != 0) throw DomainError("RatFunc lives over Q");
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("RatFunc with zero denominator");
  if (num.characteristic() != 0 || den.characteristic() != 0) throw DomainError("RatFunc lives over Q");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!(den_.term_count() == 1 && den_.low_coeff() == 1)) {
    LaurentPoly g = poly_gcd(num_, den_);
    if (!(g.term_count() == 1 && g.low_coeff() == 1)) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  int shift = -den_.low_degree();
  num_ = num_.shifted(shift);
  den_ = den_.shifted(shift);
  if (den_.low_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool RatFunc::is_laurent() const { return den_ == LaurentPoly(1); }

LaurentPoly RatFunc::to_laurent() const {
  if (!is_laurent()) throw DomainError("not a Laurent polynomial: " + to_string());
  return num_;
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool in_one_plus_qA0(const RatFunc& r) {
  // den has low degree 0 with a nonzero constant term, so r has no pole at 0
  // iff num has no negative powers; then r(0) = num_0 / den_0.
  if (r.is_zero()) return false;
  if (r.num().low_degree() < 0) return false;
  return r.num().coeff(0) == r.den().coeff(0);
}

}  // namespace qcanon
