#include "qcanon/pbw.hpp"

#include <functional>

namespace qcanon {

BraidVariant BraidVariant::T2_plus() { return {true, 1, true, -1, "T''_{i,1}"}; }
BraidVariant BraidVariant::T2_minus() { return {true, -1, true, 1, "T''_{i,-1}"}; }
BraidVariant BraidVariant::T1_plus() { return {false, -1, false, -1, "T'_{i,1}"}; }
BraidVariant BraidVariant::T1_minus() { return {false, 1, false, 1, "T'_{i,-1}"}; }

const BraidVariant& BraidVariant::standard() {
  static const BraidVariant v = T2_minus();
  return v;
}

std::vector<BraidVariant> BraidVariant::all() {
  std::vector<BraidVariant> out{T2_plus(), T2_minus(), T1_plus(), T1_minus()};
  for (int bits = 0; bits < 16; ++bits) {
    BraidVariant v{(bits & 1) != 0, (bits & 2) ? 1 : -1, (bits & 4) != 0, (bits & 8) ? 1 : -1, ""};
    bool named = false;
    for (const auto& o : out)
      named |= o.r_left == v.r_left && o.eps == v.eps && o.k_left == v.k_left && o.mu == v.mu;
    if (named) continue;
    v.name = std::string("custom(") + (v.r_left ? "r-left" : "s-left") + ",eps=" + std::to_string(v.eps) +
             "," + (v.k_left ? "KE" : "EK") + ",mu=" + std::to_string(v.mu) + ")";
    out.push_back(v);
  }
  return out;
}

namespace {

using Vec = std::map<Word, LaurentPoly>;

void accumulate(Vec& v, const Word& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = v.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

Weight weight_of_word(const CartanDatum& d, const Word& w) {
  Weight g = d.zero_weight();
  for (int l : w) ++g[l];
  return g;
}

// E_i on M(0): E_i F_w v0 = sum over m with w_m = i of
//   F_{w<m} [<i, -wt(w>m)>]_i F_{w>m} v0.
Vec raise(const CartanDatum& d, int i, const Vec& v) {
  Vec out;
  for (const auto& [w, c] : v) {
    Weight after = d.zero_weight();
    for (std::size_t m = w.size(); m-- > 0;) {
      if (w[m] == i) {
        int k = d.coroot(i, after);
        Word rest = w;
        rest.erase(rest.begin() + m);
        accumulate(out, rest, -(c * quantum_integer(k, d.d(i))));
      }
      ++after[w[m]];
    }
  }
  return out;
}

// K~_{mu i} acts on the weight -nu vector by v^{-mu (alpha_i, nu)} = q^{mu (alpha_i, nu)}.
Vec toral(const CartanDatum& d, int i, int mu, const Vec& v) {
  Vec out;
  for (const auto& [w, c] : v) out.emplace(w, c.shifted(mu * d.pair_simple(i, weight_of_word(d, w))));
  return out;
}

}  // namespace

QuotElt braid_apply(int i, const QuotElt& x, const BraidVariant& var) {
  const Algebra& alg = x.algebra();
  const CartanDatum& d = alg.datum();
  const int di = d.d(i);
  Weight target = reflect(d, i, x.weight());
  if (!is_nonnegative(target)) throw DomainError("T_i leaves U^- on this weight");

  // Images of the generators F_l, l != i, scaled by [m]_i!.
  std::vector<std::vector<std::pair<Word, LaurentPoly>>> gen(d.rank());
  LaurentPoly den = x.rep_den();
  for (int l = 0; l < d.rank(); ++l) {
    if (l == i) continue;
    int m = -d.a(i, l);
    for (int r = 0; r <= m; ++r) {
      int s = m - r;
      LaurentPoly c = quantum_binomial(m, r, di).shifted(-var.eps * r * di);
      if (r % 2) c = -c;
      Word w(var.r_left ? r : s, i);
      w.push_back(l);
      w.insert(w.end(), var.r_left ? s : r, i);
      gen[l].emplace_back(w, c);
    }
    LaurentPoly f = quantum_factorial(m, di);
    for (int k = 0; k < x.weight()[l]; ++k) den *= f;
  }

  std::map<Word, Vec> memo;
  std::function<const Vec&(const Word&)> act = [&](const Word& w) -> const Vec& {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    Vec out;
    if (w.empty()) {
      out.emplace(Word{}, LaurentPoly(1));
    } else {
      Word tail(w.begin() + 1, w.end());
      const Vec& v = act(tail);
      int l = w[0];
      if (l != i) {
        for (const auto& [gw, gc] : gen[l])
          for (const auto& [vw, vc] : v) {
            Word full = gw;
            full.insert(full.end(), vw.begin(), vw.end());
            accumulate(out, full, gc * vc);
          }
      } else {
        Vec t = var.k_left ? toral(d, i, var.mu, raise(d, i, v)) : raise(d, i, toral(d, i, var.mu, v));
        for (auto& [tw, tc] : t) accumulate(out, tw, -tc);
      }
    }
    return memo.emplace(w, std::move(out)).first->second;
  };

  const WeightSpace& src = x.space();
  const WeightSpace& dst = alg.space(target);
  std::vector<LaurentPoly> num(dst.dim());
  for (int w = 0; w < src.dim(); ++w) {
    if (x.rep_num()[w].is_zero()) continue;
    for (const auto& [vw, vc] : act(src.words[w])) num[dst.index.at(vw)].add_product(x.rep_num()[w], vc);
  }
  QuotElt r = QuotElt::from_rep(alg, target, std::move(num), den);
  r.tidy();
  return r;
}

PBWBasis::PBWBasis(const Algebra& alg, const ReducedWord& h, RootMode mode, BraidVariant v)
    : alg_(&alg), h_(h), mode_(mode), variant_(std::move(v)) {
  if (mode_ == RootMode::StarReversed) {
    Word rev(h.letters().rbegin(), h.letters().rend());
    reversed_ = std::make_unique<PBWBasis>(alg, ReducedWord(alg.datum(), rev), RootMode::Braid, variant_);
  }
}

const QuotElt& PBWBasis::root_vector(int k, int n) {
  auto key = std::make_pair(k, n);
  if (auto it = roots_.find(key); it != roots_.end()) return it->second;
  QuotElt x;
  if (mode_ == RootMode::StarReversed) {
    x = reversed_->root_vector(length() - 1 - k, n).star();
  } else if (n <= 1) {
    x = QuotElt::divided_power(*alg_, h_.letters()[k], n);
    for (int m = k; m-- > 0;) x = braid_apply(h_.letters()[m], x, variant_);
    if (x.weight() != scale(n, h_.roots()[k])) throw DomainError("root vector has the wrong weight");
  } else {
    // The braid operators are algebra maps, so f_beta^(n) = f_beta^n / [n]_i!.
    x = root_vector(k, 1);
    for (int m = 1; m < n; ++m) x = x * root_vector(k, 1);
    x = x.exact_div(quantum_factorial(n, alg_->datum().d(h_.letters()[k])));
  }
  return roots_.emplace(key, std::move(x)).first->second;
}

QuotElt PBWBasis::monomial(const PBWIndex& c) {
  QuotElt x = QuotElt::one(*alg_);
  for (int k = 0; k < length(); ++k)
    if (c[k]) x = x * root_vector(k, c[k]);
  return x;
}

Weight PBWBasis::weight_of(const PBWIndex& c) const {
  Weight g = alg_->datum().zero_weight();
  for (int k = 0; k < length(); ++k) g = add(g, scale(c[k], h_.roots()[k]));
  return g;
}

std::vector<PBWIndex> PBWBasis::labels(const Weight& g) const {
  std::vector<PBWIndex> out;
  PBWIndex c(length(), 0);
  std::function<void(int, Weight)> rec = [&](int k, Weight rest) {
    if (k == length()) {
      if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; })) out.push_back(c);
      return;
    }
    for (int n = 0; is_nonnegative(rest); ++n) {
      c[k] = n;
      rec(k + 1, rest);
      for (std::size_t a = 0; a < rest.size(); ++a) rest[a] -= h_.roots()[k][a];
    }
    c[k] = 0;
  };
  rec(0, g);
  return out;
}

const PBWBasis::Slice& PBWBasis::slice(const Weight& g) {
  if (auto it = slices_.find(g); it != slices_.end()) return *it->second;
  auto s = std::make_unique<Slice>();
  s->weight = g;
  s->labels = labels(g);
  for (std::size_t k = 0; k < s->labels.size(); ++k) {
    s->elems.push_back(monomial(s->labels[k]));
    s->norms.push_back(dot(s->elems.back().image(), s->elems.back().rep_num()));
    if (s->norms.back().is_zero()) throw DomainError("PBW monomial with zero norm");
    s->position.emplace(s->labels[k], static_cast<int>(k));
  }
  return *slices_.emplace(g, std::move(s)).first->second;
}

std::vector<LaurentPoly> PBWBasis::coords(const QuotElt& x) {
  const Slice& s = slice(x.weight());
  std::vector<LaurentPoly> out(s.labels.size());
  std::vector<LaurentPoly> check(x.image().size());
  for (std::size_t k = 0; k < s.labels.size(); ++k) {
    LaurentPoly num = dot(x.image(), s.elems[k].rep_num());
    if (num.is_zero()) continue;
    out[k] = num.exact_div(s.norms[k]);
    for (std::size_t u = 0; u < check.size(); ++u) check[u].add_product(out[k], s.elems[k].image()[u]);
  }
  if (check != x.image()) throw DomainError("PBW expansion does not reproduce the element");
  return out;
}

std::map<PBWIndex, LaurentPoly> PBWBasis::expand(const QuotElt& x) {
  auto c = coords(x);
  const Slice& s = slice(x.weight());
  std::map<PBWIndex, LaurentPoly> out;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) out.emplace(s.labels[k], c[k]);
  return out;
}

QuotElt PBWBasis::combine(const Weight& g, const std::vector<LaurentPoly>& coords) {
  const Slice& s = slice(g);
  QuotElt x = QuotElt::zero(*alg_, g);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) x += coords[k] * s.elems[k];
  return x;
}

Transition transition_between_words(PBWBasis& from, PBWBasis& to, const Weight& g) {
  Transition t;
  t.weight = g;
  const auto& sf = from.slice(g);
  const auto& st = to.slice(g);
  t.from_labels = sf.labels;
  t.to_labels = st.labels;
  const std::size_t n = sf.labels.size();
  if (st.labels.size() != n) throw DomainError("PBW slices of different sizes");
  t.m.assign(n, std::vector<LaurentPoly>(n));
  for (std::size_t c = 0; c < n; ++c) {
    auto col = to.coords(sf.elems[c]);
    for (std::size_t r = 0; r < n; ++r) t.m[r][c] = col[r];
  }
  return t;
}

bool in_Zq(const Transition& t) {
  for (const auto& row : t.m)
    for (const auto& e : row)
      if (!e.is_zero() && e.low_degree() < 0) return false;
  return true;
}

bool is_permutation_mod_q(const Transition& t) {
  if (!in_Zq(t)) return false;
  const std::size_t n = t.m.size();
  std::vector<int> col_hits(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    int hits = 0;
    for (std::size_t c = 0; c < n; ++c) {
      Integer v = t.m[r][c].is_zero() ? Integer(0) : t.m[r][c].coeff(0);
      if (v == 0) continue;
      if (v != 1) return false;
      ++hits;
      ++col_hits[c];
    }
    if (hits != 1) return false;
  }
  for (int h : col_hits)
    if (h != 1) return false;
  return true;
}

bool is_inverse_pair(const Transition& a, const Transition& b) {
  const std::size_t n = a.m.size();
  if (b.m.size() != n || a.to_labels != b.from_labels || a.from_labels != b.to_labels) return false;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      LaurentPoly s;
      for (std::size_t k = 0; k < n; ++k) s.add_product(b.m[r][k], a.m[k][c]);
      if (s != LaurentPoly(r == c ? 1 : 0)) return false;
    }
  return true;
}

}  // namespace qcanon
