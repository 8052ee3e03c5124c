#include "qcanon/canonical.hpp"

#include <algorithm>

namespace qcanon {

namespace {

bool in_qZq(const LaurentPoly& p) { return p.is_zero() || p.low_degree() >= 1; }

// Positive-degree part r_+ of an anti-invariant r = r_+ - bar(r_+).
LaurentPoly positive_part(const LaurentPoly& r) {
  if (r.is_zero()) return r;
  if (r.bar() != -r) throw InvariantBreach("correction term is not bar anti-invariant");
  LaurentPoly out;
  for (const auto& [deg, c] : r.terms())
    if (deg > 0) out += LaurentPoly::monomial(c, deg);
  return out;
}

}  // namespace

bool BarMatrix::unitriangular() const {
  const std::size_t n = labels.size();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c && a[r][c] != LaurentPoly(1)) return false;
      if (r < c && !a[r][c].is_zero()) return false;
    }
  return true;
}

bool BarMatrix::involutive() const {
  const std::size_t n = labels.size();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      LaurentPoly s;
      for (std::size_t k = 0; k < n; ++k) s.add_product(a[r][k].bar(), a[k][c]);
      if (s != LaurentPoly(r == c ? 1 : 0)) return false;
    }
  return true;
}

BarMatrix bar_matrix(PBWBasis& h, const Weight& g) {
  const auto& s = h.slice(g);
  BarMatrix m;
  m.weight = g;
  m.labels = s.labels;
  const std::size_t n = s.labels.size();
  m.a.assign(n, std::vector<LaurentPoly>(n));
  for (std::size_t c = 0; c < n; ++c) {
    auto col = h.coords(s.elems[c].bar());
    for (std::size_t r = 0; r < n; ++r) m.a[r][c] = std::move(col[r]);
  }
  if (!m.unitriangular()) throw InvariantBreach("bar matrix is not unitriangular");
  return m;
}

const CanonicalBasis::Slice& CanonicalBasis::slice(const Weight& g) {
  if (auto it = slices_.find(g); it != slices_.end()) return *it->second;
  auto s = std::make_unique<Slice>();
  s->weight = g;
  s->bar = bar_matrix(*pbw_, g);
  s->labels = s->bar.labels;
  const int n = static_cast<int>(s->labels.size());
  auto& p = s->p;
  p.assign(n, std::vector<LaurentPoly>(n));
  // Descending induction: b(c') is known for every c' > c.
  for (int k = n - 1; k >= 0; --k) {
    p[k][k] = LaurentPoly(1);
    // bar(L(c)) - L(c) in PBW coordinates, then in the b(c') with c' > c.
    std::vector<LaurentPoly> y(n);
    for (int r = k + 1; r < n; ++r) {
      LaurentPoly v = s->bar.a[r][k];
      for (int m = k + 1; m < r; ++m) v -= y[m] * p[r][m];
      y[r] = std::move(v);
    }
    for (int m = k + 1; m < n; ++m) {
      LaurentPoly corr = positive_part(y[m]);
      if (corr.is_zero()) continue;
      for (int r = m; r < n; ++r) p[r][k].add_product(corr, p[r][m]);
    }
  }
  for (int k = 0; k < n; ++k) {
    std::vector<LaurentPoly> col(n);
    for (int r = 0; r < n; ++r) col[r] = p[r][k];
    s->values.push_back(pbw_->combine(g, col));
    s->position.emplace(s->labels[k], k);
  }
  return *slices_.emplace(g, std::move(s)).first->second;
}

CanonicalElt CanonicalBasis::element(const PBWIndex& c) {
  const Slice& s = slice(pbw_->weight_of(c));
  auto it = s.position.find(c);
  if (it == s.position.end()) throw DomainError("label of the wrong length");
  const int k = it->second;
  CanonicalElt e{c, s.values[k], {}};
  for (std::size_t r = 0; r < s.labels.size(); ++r)
    if (!s.p[r][k].is_zero()) e.pbw_coeffs.emplace(s.labels[r], s.p[r][k]);
  return e;
}

std::vector<CanonicalElt> CanonicalBasis::elements(const Weight& g) {
  std::vector<CanonicalElt> out;
  for (const auto& c : slice(g).labels) out.push_back(element(c));
  return out;
}

std::map<PBWIndex, LaurentPoly> CanonicalBasis::expand(const QuotElt& x) {
  const Slice& s = slice(x.weight());
  auto v = pbw_->coords(x);
  const int n = static_cast<int>(v.size());
  // p is unitriangular with entries below the diagonal, so solve upward.
  std::vector<LaurentPoly> y(n);
  for (int r = 0; r < n; ++r) {
    LaurentPoly t = v[r];
    for (int m = 0; m < r; ++m) t -= y[m] * s.p[r][m];
    y[r] = std::move(t);
  }
  std::map<PBWIndex, LaurentPoly> out;
  for (int k = 0; k < n; ++k)
    if (!y[k].is_zero()) out.emplace(s.labels[k], y[k]);
  return out;
}

bool signed_basis_test(const QuotElt& x) {
  if (x.bar() != x) return false;
  return in_one_plus_qA0(bilinear_form(x, x));
}

bool verify_slice(CanonicalBasis& b, const Weight& g) {
  const auto& s = b.slice(g);
  const std::size_t n = s.labels.size();
  if (!s.bar.involutive()) return false;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k ? s.p[r][k] != LaurentPoly(1) : !in_qZq(s.p[r][k])) return false;
      if (r < k && !s.p[r][k].is_zero()) return false;
    }
    // Coordinates are recomputed from the value rather than trusted.
    auto coords = b.pbw().coords(s.values[k]);
    for (std::size_t r = 0; r < n; ++r)
      if (coords[r] != s.p[r][k]) return false;
    if (!signed_basis_test(s.values[k])) return false;
  }
  return true;
}

std::vector<LabelMatch> label_transition(CanonicalBasis& a, CanonicalBasis& b, const Weight& g) {
  const auto& sa = a.slice(g);
  const auto& sb = b.slice(g);
  if (sa.labels.size() != sb.labels.size()) throw InvariantBreach("canonical slices of different sizes");
  std::vector<LabelMatch> out;
  std::vector<bool> used(sb.labels.size(), false);
  for (std::size_t k = 0; k < sa.labels.size(); ++k) {
    int found = -1, sign = 0;
    for (std::size_t m = 0; m < sb.labels.size() && found < 0; ++m)
      if (!used[m] && sa.values[k] == sb.values[m]) found = static_cast<int>(m), sign = 1;
    if (found < 0) {
      QuotElt neg = -sa.values[k];
      for (std::size_t m = 0; m < sb.labels.size() && found < 0; ++m)
        if (!used[m] && neg == sb.values[m]) found = static_cast<int>(m), sign = -1;
    }
    if (found < 0) throw InvariantBreach("canonical basis element without a partner");
    used[found] = true;
    out.push_back({sa.labels[k], sb.labels[found], sign});
  }
  return out;
}

int epsilon_j(PBWBasis& j_initial, const QuotElt& x) {
  if (x.is_zero()) throw DomainError("epsilon of zero");
  int best = -1;
  for (const auto& [c, coeff] : j_initial.expand(x))
    if (best < 0 || c[0] < best) best = c[0];
  return best;
}

CanonicalElt kashiwara_F(CanonicalBasis& basis, CanonicalBasis& j_initial, const PBWIndex& c) {
  const Weight g = basis.pbw().weight_of(c);
  PBWIndex there;
  for (const auto& m : label_transition(basis, j_initial, g))
    if (m.from == c) there = m.to;
  there[0] += 1;
  CanonicalElt raised = j_initial.element(there);
  const Weight g2 = raised.value.weight();
  for (const auto& m : label_transition(j_initial, basis, g2))
    if (m.from == there) {
      CanonicalElt out = basis.element(m.to);
      if (m.sign < 0) throw InvariantBreach("Kashiwara operator leaves the basis");
      return out;
    }
  throw InvariantBreach("raised element not found");
}

}  // namespace qcanon
