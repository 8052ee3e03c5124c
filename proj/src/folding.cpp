#include "qcanon/folding.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qcanon {

namespace {

std::string label_string(const PBWIndex& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + ")";
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> divided_power_sequences(const Weight& g) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  Weight rest = g;
  std::function<void(int)> rec = [&](int last) {
    if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; })) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < static_cast<int>(rest.size()); ++i) {
      if (i == last) continue;
      for (int a = 1; a <= rest[i]; ++a) {
        rest[i] -= a;
        cur.emplace_back(i, a);
        rec(i);
        cur.pop_back();
        rest[i] += a;
      }
    }
  };
  rec(-1);
  return out;
}

// Fraction-free elimination; every division below is exact.
int rank_mod_p(std::vector<std::vector<LaurentPoly>> m, int p) {
  for (auto& row : m)
    for (auto& e : row) e = e.reduce_mod(p);
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  LaurentPoly prev(1, p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]).exact_div(prev);
      m[i][c] = LaurentPoly(0, p);
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

Folding::Folding(FoldedDatum f, Word folded_word, int max_height)
    : f_(std::move(f)), folded_word_(std::move(folded_word)) {
  lifted_ = lift_word(f_, folded_word_);
  ualg_ = std::make_unique<Algebra>(f_.unfolded, max_height);
  falg_ = std::make_unique<Algebra>(f_.folded, max_height);
  up_ = std::make_unique<PBWBasis>(*ualg_, ReducedWord(f_.unfolded, lifted_));
  fp_ = std::make_unique<PBWBasis>(*falg_, ReducedWord(f_.folded, folded_word_));
  ucb_ = std::make_unique<CanonicalBasis>(*up_);
  fcb_ = std::make_unique<CanonicalBasis>(*fp_);
}

QuotElt Folding::tilde_f(int j, int a) const {
  QuotElt x = QuotElt::one(*ualg_);
  for (int i : f_.orbits.at(j)) x = x * QuotElt::divided_power(*ualg_, i, a);
  return x;
}

bool Folding::label_fixed(const PBWIndex& c) const { return sigma_on_index(f_, lifted_, c) == c; }

int Folding::nonfixed_orbits(const Weight& g) {
  int moved = 0;
  for (const auto& c : up_->labels(g)) moved += !label_fixed(c);
  return moved / prime();
}

int Folding::ideal_J_rank(const Weight& g) {
  const int p = prime();
  // One column per orbit of moved labels, keyed by its smallest member.
  std::map<PBWIndex, int> column;
  const auto& labels = up_->slice(g).labels;
  for (const auto& c : labels) {
    if (label_fixed(c)) continue;
    PBWIndex least = c, cur = c;
    for (int k = 1; k < p; ++k) {
      cur = sigma_on_index(f_, lifted_, cur);
      least = std::min(least, cur);
    }
    column.emplace(least, 0);
  }
  int n = 0;
  for (auto& [c, k] : column) k = n++;
  if (n == 0) return 0;
  std::vector<std::vector<LaurentPoly>> rows;
  for (const auto& seq : divided_power_sequences(g)) {
    QuotElt x = QuotElt::one(*ualg_);
    for (auto [i, a] : seq) x = x * QuotElt::divided_power(*ualg_, i, a);
    auto coords = up_->coords(x);
    // sum_{k<p} sigma^k(x): fixed coordinates pick up a factor p, a moved
    // orbit gets the sum of its coordinates in every slot.
    std::vector<LaurentPoly> row(n, LaurentPoly(0, p));
    for (std::size_t m = 0; m < labels.size(); ++m) {
      if (label_fixed(labels[m]) || coords[m].is_zero()) continue;
      PBWIndex least = labels[m], cur = labels[m];
      for (int k = 1; k < p; ++k) {
        cur = sigma_on_index(f_, lifted_, cur);
        least = std::min(least, cur);
      }
      row[column.at(least)] += coords[m].reduce_mod(p);
    }
    rows.push_back(std::move(row));
    if (static_cast<int>(rows.size()) >= n && rank_mod_p(rows, p) == n) return n;
  }
  return rank_mod_p(rows, p);
}

VqElt Folding::from_unfolded_coords(const Weight& g, const std::map<PBWIndex, LaurentPoly>& coords) {
  VqElt v;
  v.weight = g;
  for (const auto& [c, x] : coords) {
    if (!label_fixed(c)) continue;
    LaurentPoly r = x.reduce_mod(prime());
    if (!r.is_zero()) v.coords.emplace(c, std::move(r));
  }
  return v;
}

VqElt Folding::project_pi(const QuotElt& x) {
  if (x.sigma(f_.sigma) != x) throw DomainError("projection of an element that is not sigma-fixed");
  return from_unfolded_coords(x.weight(), up_->expand(x));
}

VqElt Folding::phi_of_ul(const Weight& folded_weight, const std::map<PBWIndex, LaurentPoly>& folded_coords) {
  VqElt v;
  v.weight = f_.lift_weight(folded_weight);
  for (const auto& [c, x] : folded_coords) {
    LaurentPoly r = x.reduce_mod(prime());
    if (!r.is_zero()) v.coords.emplace(index_lift(f_, folded_word_, c), std::move(r));
  }
  return v;
}

VqElt Folding::phi_of_ul(const QuotElt& folded_x) { return phi_of_ul(folded_x.weight(), fp_->expand(folded_x)); }

Folding::Report Folding::verify_fold_weight(const Weight& fg) {
  Report rep;
  rep.folded_weight = fg;
  const Weight g = f_.lift_weight(fg);
  const auto& fs = fp_->slice(fg);
  const auto& us = up_->slice(g);
  rep.folded_labels = static_cast<int>(fs.labels.size());

  std::set<PBWIndex> fixed;
  for (std::size_t k = 0; k < us.labels.size(); ++k) {
    const auto& c = us.labels[k];
    if (label_fixed(c)) fixed.insert(c);
    const auto& moved = us.elems[us.position.at(sigma_on_index(f_, lifted_, c))];
    if (us.elems[k].sigma(f_.sigma) != moved) {
      rep.sigma_permutes = false;
      rep.witnesses.push_back("sigma does not permute L" + label_string(c));
    }
  }
  rep.vq_dim = static_cast<int>(fixed.size());
  std::set<PBWIndex> lifted;
  for (const auto& c : fs.labels) lifted.insert(index_lift(f_, folded_word_, c));
  rep.nonfixed = nonfixed_orbits(g);
  rep.j_rank = ideal_J_rank(g);
  rep.graded_bijective = lifted == fixed && rep.vq_dim == rep.folded_labels && rep.j_rank == rep.nonfixed;
  if (!rep.graded_bijective) rep.witnesses.push_back("dimension mismatch");

  for (const auto& seq : divided_power_sequences(fg)) {
    QuotElt folded = QuotElt::one(*falg_);
    QuotElt unfolded = QuotElt::one(*ualg_);
    for (auto [j, a] : seq) {
      folded = folded * QuotElt::divided_power(*falg_, j, a);
      unfolded = unfolded * tilde_f(j, a);
    }
    if (phi_of_ul(folded) != project_pi(unfolded)) {
      rep.formula_271 = false;
      std::string w;
      for (auto [j, a] : seq) w += "f" + std::to_string(j + 1) + "^(" + std::to_string(a) + ")";
      rep.witnesses.push_back("Phi differs from pi on " + w);
    }
  }

  for (const auto& g1 : weights_up_to_height(f_.folded, height(fg))) {
    Weight g2 = fg;
    for (std::size_t i = 0; i < g2.size(); ++i) g2[i] -= g1[i];
    if (!is_nonnegative(g2) || height(g1) == 0 || height(g2) == 0) continue;
    for (const auto& c1 : fp_->labels(g1))
      for (const auto& c2 : fp_->labels(g2)) {
        QuotElt lhs = fp_->monomial(c1) * fp_->monomial(c2);
        QuotElt rhs = up_->monomial(index_lift(f_, folded_word_, c1)) *
                      up_->monomial(index_lift(f_, folded_word_, c2));
        if (phi_of_ul(lhs) != project_pi(rhs)) {
          rep.multiplicative = false;
          rep.witnesses.push_back("Phi not multiplicative on L" + label_string(c1) + " L" + label_string(c2));
        }
      }
  }

  for (const auto& c : fs.labels) {
    CanonicalElt fb = fcb_->element(c);
    CanonicalElt ub = ucb_->element(index_lift(f_, folded_word_, c));
    if (phi_of_ul(fg, fb.pbw_coeffs) != from_unfolded_coords(g, ub.pbw_coeffs)) {
      rep.canonical = false;
      rep.witnesses.push_back("Phi(b" + label_string(c) + ") differs from pi(b)");
    }
  }
  return rep;
}

}  // namespace qcanon
