#include "qcanon/freealg.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace qcanon {

void FreeElt::add(const Word& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

namespace {

// Number of words with the given letter multiplicities.
std::uint64_t multinomial(const Weight& counts) {
  std::uint64_t r = 1;
  int n = 0;
  for (int c : counts)
    for (int k = 1; k <= c; ++k) r = r * static_cast<std::uint64_t>(++n) / static_cast<std::uint64_t>(k);
  return r;
}

}  // namespace

Algebra::Algebra(CartanDatum d, int max_height) : d_(std::move(d)), max_height_(max_height) {
  // Refuse up front rather than exhaust memory halfway through a run.
  for (const auto& g : weights_up_to_height(d_, max_height_))
    if (multinomial(g) > kWordBudget)
      throw ResourceLimit("a weight of height " + std::to_string(height(g)) + " has " +
                          std::to_string(multinomial(g)) + " words, above the budget of " +
                          std::to_string(kWordBudget));
}

int Algebra::bar_shift(const Weight& g) const {
  int s = d_.pair(g, g);
  for (int i = 0; i < d_.rank(); ++i) s -= g[i] * d_.pairing[i][i];
  return s / 2;
}

const WeightSpace& Algebra::space(const Weight& g) const {
  std::lock_guard lock(mu_);
  auto it = spaces_.find(g);
  if (it != spaces_.end()) return *it->second;
  if (static_cast<int>(g.size()) != d_.rank() || !is_nonnegative(g)) throw DomainError("weight outside Q_+");
  if (height(g) > max_height_)
    throw ResourceLimit("weight of height " + std::to_string(height(g)) + " exceeds the bound " +
                        std::to_string(max_height_));
  auto s = std::make_unique<WeightSpace>();
  s->weight = g;
  s->height = height(g);
  Weight left = g;
  Word cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == s->height) {
      s->words.push_back(cur);
      return;
    }
    for (int i = 0; i < d_.rank(); ++i) {
      if (left[i] == 0) continue;
      --left[i];
      cur.push_back(i);
      rec();
      cur.pop_back();
      ++left[i];
    }
  };
  rec();
  for (int k = 0; k < s->dim(); ++k) s->index.emplace(s->words[k], k);
  for (const auto& w : s->words) s->reversed.push_back(s->index.at(Word(w.rbegin(), w.rend())));
  auto& ref = *s;
  spaces_.emplace(g, std::move(s));
  return ref;
}

const WeightSpace& Algebra::gram(const Weight& g) const {
  std::lock_guard lock(mu_);
  const WeightSpace& s = space(g);
  if (s.gram.empty()) build_gram(const_cast<WeightSpace&>(s));
  return s;
}

// gram[w][u] = sum over positions m of w carrying u_1 of
//   q^{-(weight of w before m, alpha_{u_1})} gram'[w without m][u without u_1].
void Algebra::build_gram(WeightSpace& s) const {
  const int n = s.dim();
  s.gram.assign(n, std::vector<LaurentPoly>(n));
  if (s.height == 0) {
    s.gram[0][0] = LaurentPoly(1);
    return;
  }
  for (int i = 0; i < d_.rank(); ++i) {
    if (s.weight[i] == 0) continue;
    Weight sub = s.weight;
    --sub[i];
    const WeightSpace& t = gram(sub);
    for (int w = 0; w < n; ++w) {
      const Word& word = s.words[w];
      Weight before = d_.zero_weight();
      for (std::size_t m = 0; m < word.size(); ++m) {
        if (word[m] == i) {
          Word rest = word;
          rest.erase(rest.begin() + m);
          int rw = t.index.at(rest);
          LaurentPoly factor = LaurentPoly::q(-d_.pair_simple(i, before));
          for (int u = 0; u < n; ++u) {
            if (s.words[u][0] != i) continue;
            Word tail(s.words[u].begin() + 1, s.words[u].end());
            s.gram[w][u].add_product(factor, t.gram[rw][t.index.at(tail)]);
          }
        }
        ++before[word[m]];
      }
    }
  }
}

namespace {

// Words of one weight are listed lexicographically, so the index of a word
// grows by the number of completions with a smaller letter at each step.
std::uint64_t rank_step(Weight& rest, int l) {
  std::uint64_t r = 0;
  for (int k = 0; k < l; ++k) {
    if (rest[k] == 0) continue;
    --rest[k];
    r += multinomial(rest);
    ++rest[k];
  }
  --rest[l];
  return r;
}

}  // namespace

void Algebra::for_each_shuffle(const Weight& g1, const Weight& g2,
                               const std::function<void(const ShuffleTerm&)>& fn) const {
  const WeightSpace& s = space(add(g1, g2));
  const int n = s.height;
  for (int u = 0; u < s.dim(); ++u) {
    const Word& word = s.words[u];
    Weight need = g1, need2 = g2;
    Weight right_so_far = d_.zero_weight();
    // A pair (letter of the right factor, later letter of the left factor)
    // contributes q^{-(alpha, alpha')}.
    std::function<void(int, int, std::uint64_t, std::uint64_t)> rec = [&](int pos, int e, std::uint64_t ra,
                                                                           std::uint64_t rb) {
      if (pos == n) {
        fn({u, static_cast<int>(ra), static_cast<int>(rb), e});
        return;
      }
      int l = word[pos];
      if (need[l] > 0) {
        Weight before = need;
        std::uint64_t step = rank_step(need, l);
        rec(pos + 1, e - d_.pair_simple(l, right_so_far), ra + step, rb);
        need = before;
      }
      if (need2[l] > 0) {
        Weight before = need2;
        std::uint64_t step = rank_step(need2, l);
        ++right_so_far[l];
        rec(pos + 1, e, ra, rb + step);
        --right_so_far[l];
        need2 = before;
      }
    };
    rec(0, 0, 0, 0);
  }
}

const std::vector<Algebra::ShuffleTerm>& Algebra::shuffle(const Weight& g1, const Weight& g2) const {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(g1, g2);
  auto it = shuffles_.find(key);
  if (it != shuffles_.end()) return *it->second;
  auto terms = std::make_unique<std::vector<ShuffleTerm>>();
  for_each_shuffle(g1, g2, [&](const ShuffleTerm& t) { terms->push_back(t); });
  auto& ref = *terms;
  shuffles_.emplace(key, std::move(terms));
  return ref;
}

LaurentPoly dot(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b) {
  LaurentPoly s;
  for (std::size_t k = 0; k < a.size(); ++k) s.add_product(a[k], b[k]);
  return s;
}

std::vector<LaurentPoly> image_of(const WeightSpace& s, const std::vector<LaurentPoly>& num) {
  std::vector<LaurentPoly> img(s.dim());
  for (int w = 0; w < s.dim(); ++w) {
    if (num[w].is_zero()) continue;
    for (int u = 0; u < s.dim(); ++u) img[u].add_product(num[w], s.gram[w][u]);
  }
  return img;
}

namespace {

// Image of f_i y from the image of y:
//   out_u = sum over p with u_p = i of q^{-(alpha_i, weight of u before p)} y_{u without p}.
std::vector<LaurentPoly> left_letter(const Algebra& alg, int i, const Weight& g, const std::vector<LaurentPoly>& y) {
  const CartanDatum& d = alg.datum();
  Weight full = g;
  ++full[i];
  const WeightSpace& s = alg.space(full);
  const WeightSpace& t = alg.space(g);
  std::vector<LaurentPoly> out(s.dim());
  for (int u = 0; u < s.dim(); ++u) {
    const Word& w = s.words[u];
    Weight before = d.zero_weight();
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] == i) {
        Word rest = w;
        rest.erase(rest.begin() + p);
        const LaurentPoly& v = y[t.index.at(rest)];
        if (!v.is_zero()) out[u] += v.shifted(-d.pair_simple(i, before));
      }
      ++before[w[p]];
    }
  }
  return out;
}

// Image of sum_w num[w] f_w, peeling first letters off a group of words
// that share a prefix.
std::vector<LaurentPoly> word_image(const Algebra& alg, const Weight& g,
                                    const std::vector<std::pair<Word, LaurentPoly>>& terms, std::size_t depth) {
  if (height(g) == 0) {
    LaurentPoly c;
    for (const auto& [w, v] : terms) c += v;
    return {c};
  }
  std::vector<LaurentPoly> out(alg.space(g).dim());
  for (int i = 0; i < alg.datum().rank(); ++i) {
    std::vector<std::pair<Word, LaurentPoly>> group;
    for (const auto& t : terms)
      if (t.first[depth] == i) group.push_back(t);
    if (group.empty()) continue;
    Weight sub = g;
    --sub[i];
    auto part = left_letter(alg, i, sub, word_image(alg, sub, group, depth + 1));
    for (std::size_t u = 0; u < out.size(); ++u) out[u] += part[u];
  }
  return out;
}

}  // namespace

QuotElt QuotElt::zero(const Algebra& alg, const Weight& g) {
  QuotElt x;
  x.alg_ = &alg;
  x.weight_ = g;
  int n = alg.space(g).dim();
  x.img_.assign(n, LaurentPoly());
  x.num_.assign(n, LaurentPoly());
  x.den_ = LaurentPoly(1);
  return x;
}

QuotElt QuotElt::one(const Algebra& alg) {
  QuotElt x = zero(alg, alg.datum().zero_weight());
  x.img_[0] = LaurentPoly(1);
  x.num_[0] = LaurentPoly(1);
  return x;
}

QuotElt QuotElt::generator(const Algebra& alg, int i) { return divided_power(alg, i, 1); }

// (f_i^n, f_i^n) / c = q_i^{-n(n-1)/2} [n]_i!, hence the image of f_i^(n) is
// the single entry q_i^{-n(n-1)/2}.
QuotElt QuotElt::divided_power(const Algebra& alg, int i, int n) {
  if (n < 0) throw DomainError("negative divided power");
  Weight g = alg.datum().zero_weight();
  g[i] = n;
  QuotElt x = zero(alg, g);
  int di = alg.datum().d(i);
  x.img_[0] = LaurentPoly::q(-di * n * (n - 1) / 2);
  x.num_[0] = LaurentPoly(1);
  x.den_ = quantum_factorial(n, di);
  return x;
}

QuotElt QuotElt::from_free(const Algebra& alg, const FreeElt& f, const LaurentPoly& den) {
  const WeightSpace& s = alg.space(f.weight);
  std::vector<LaurentPoly> num(s.dim());
  for (const auto& [w, c] : f.terms) {
    auto it = s.index.find(w);
    if (it == s.index.end()) throw DomainError("word of the wrong weight in FreeElt");
    num[it->second] = c;
  }
  return from_rep(alg, f.weight, std::move(num), den);
}

QuotElt QuotElt::from_rep(const Algebra& alg, const Weight& g, std::vector<LaurentPoly> num, LaurentPoly den) {
  QuotElt x;
  x.alg_ = &alg;
  x.weight_ = g;
  const WeightSpace& s = alg.space(g);
  std::vector<std::pair<Word, LaurentPoly>> terms;
  for (int w = 0; w < s.dim(); ++w)
    if (!num[w].is_zero()) terms.emplace_back(s.words[w], num[w]);
  x.img_ = word_image(alg, g, terms, 0);
  for (auto& e : x.img_) e = e.exact_div(den);
  x.num_ = std::move(num);
  x.den_ = std::move(den);
  return x;
}

FreeElt QuotElt::representative() const {
  FreeElt f;
  f.weight = weight_;
  const WeightSpace& s = space();
  for (int w = 0; w < s.dim(); ++w) f.add(s.words[w], num_[w]);
  return f;
}

bool QuotElt::is_zero() const {
  return std::all_of(img_.begin(), img_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

bool operator==(const QuotElt& a, const QuotElt& b) {
  if (a.weight_ != b.weight_) return a.is_zero() && b.is_zero();
  return a.img_ == b.img_;
}

// bar(x) has image u -> q^{-N} bar(x_{rev u}): reversing u swaps inverted
// and non-inverted pairs in every matching.
QuotElt QuotElt::bar() const {
  QuotElt r = *this;
  const WeightSpace& s = space();
  int shift = -alg_->bar_shift(weight_);
  for (int u = 0; u < s.dim(); ++u) r.img_[u] = img_[s.reversed[u]].bar().shifted(shift);
  for (auto& c : r.num_) c = c.bar();
  r.den_ = den_.bar();
  return r;
}

QuotElt QuotElt::star() const {
  QuotElt r = *this;
  const WeightSpace& s = space();
  for (int u = 0; u < s.dim(); ++u) {
    r.img_[u] = img_[s.reversed[u]];
    r.num_[u] = num_[s.reversed[u]];
  }
  return r;
}

QuotElt QuotElt::sigma(const DiagramAutomorphism& sg) const {
  const CartanDatum& d = alg_->datum();
  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j)
      if (d.pairing[i][j] != d.pairing[sg.apply(i)][sg.apply(j)])
        throw CartanError("sigma is not an automorphism of the datum");
  Weight g(d.rank());
  for (int i = 0; i < d.rank(); ++i) g[sg.apply(i)] = weight_[i];
  QuotElt r = zero(*alg_, g);
  const WeightSpace& s = space();
  const WeightSpace& t = r.space();
  for (int w = 0; w < s.dim(); ++w) {
    Word image = s.words[w];
    for (int& l : image) l = sg.apply(l);
    int k = t.index.at(image);
    r.img_[k] = img_[w];
    r.num_[k] = num_[w];
  }
  r.den_ = den_;
  return r;
}

QuotElt QuotElt::operator-() const {
  QuotElt r = *this;
  for (auto& c : r.img_) c = -c;
  for (auto& c : r.num_) c = -c;
  return r;
}

QuotElt& QuotElt::operator+=(const QuotElt& o) {
  if (!valid()) return *this = o;
  if (weight_ != o.weight_) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    throw DomainError("adding elements of different weights");
  }
  for (std::size_t k = 0; k < img_.size(); ++k) img_[k] += o.img_[k];
  if (den_ == o.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += o.num_[k];
  } else {
    LaurentPoly g = poly_gcd(den_, o.den_);
    LaurentPoly mine = o.den_.exact_div(g), theirs = den_.exact_div(g);
    for (std::size_t k = 0; k < num_.size(); ++k) {
      num_[k] *= mine;
      num_[k].add_product(o.num_[k], theirs);
    }
    den_ *= mine;
  }
  return *this;
}

QuotElt& QuotElt::operator-=(const QuotElt& o) { return *this += -o; }

QuotElt& QuotElt::operator*=(const LaurentPoly& c) {
  for (auto& e : img_) e *= c;
  for (auto& e : num_) e *= c;
  return *this;
}

QuotElt QuotElt::exact_div(const LaurentPoly& c) const {
  QuotElt r = *this;
  for (auto& e : r.img_) e = e.exact_div(c);
  r.den_ *= c;
  r.tidy();
  return r;
}

void QuotElt::tidy() {
  LaurentPoly g = den_;
  for (const auto& c : num_) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.term_count() == 1 && g.low_coeff() == 1) break;
  }
  if (!(g.term_count() == 1 && g.low_coeff() == 1)) {
    for (auto& c : num_) c = c.exact_div(g);
    den_ = den_.exact_div(g);
  }
  // Keep a denominator with positive lowest coefficient and low degree 0.
  int shift = -den_.low_degree();
  bool flip = den_.low_coeff() < 0;
  for (auto& c : num_) {
    c = c.shifted(shift);
    if (flip) c = -c;
  }
  den_ = den_.shifted(shift);
  if (flip) den_ = -den_;
}

QuotElt operator*(const QuotElt& x, const QuotElt& y) {
  const Algebra& alg = x.algebra();
  Weight g = add(x.weight_, y.weight_);
  QuotElt r = QuotElt::zero(alg, g);
  alg.for_each_shuffle(x.weight_, y.weight_, [&](const Algebra::ShuffleTerm& t) {
    const LaurentPoly& a = x.img_[t.left];
    const LaurentPoly& b = y.img_[t.right];
    if (a.is_zero() || b.is_zero()) return;
    r.img_[t.u].add_product(a.shifted(t.exponent), b);
  });
  const WeightSpace& sx = x.space();
  const WeightSpace& sy = y.space();
  const WeightSpace& s = r.space();
  for (int a = 0; a < sx.dim(); ++a) {
    if (x.num_[a].is_zero()) continue;
    for (int b = 0; b < sy.dim(); ++b) {
      if (y.num_[b].is_zero()) continue;
      Word w = sx.words[a];
      w.insert(w.end(), sy.words[b].begin(), sy.words[b].end());
      r.num_[s.index.at(w)].add_product(x.num_[a], y.num_[b]);
    }
  }
  r.den_ = x.den_ * y.den_;
  r.tidy();
  return r;
}

RatFunc bilinear_form(const QuotElt& x, const QuotElt& y) {
  if (x.weight() != y.weight()) return RatFunc(0);
  LaurentPoly num = dot(x.image(), y.rep_num());
  LaurentPoly den = y.rep_den();
  const CartanDatum& d = x.algebra().datum();
  for (int i = 0; i < d.rank(); ++i)
    for (int k = 0; k < x.weight()[i]; ++k) den *= LaurentPoly(1) - LaurentPoly::q(2 * d.d(i));
  return RatFunc(num, den);
}

FreeElt serre_relator(const CartanDatum& d, int i, int j) {
  if (i == j) throw DomainError("Serre relator needs i != j");
  int m = 1 - d.a(i, j);
  FreeElt f;
  f.weight = d.zero_weight();
  f.weight[i] = m;
  f.weight[j] = 1;
  for (int k = 0; k <= m; ++k) {
    Word w(k, i);
    w.push_back(j);
    w.insert(w.end(), m - k, i);
    LaurentPoly c = quantum_binomial(m, k, d.d(i));
    f.add(w, k % 2 ? -c : c);
  }
  return f;
}

long weight_dim(const CartanDatum& d, const Weight& g) {
  auto roots = positive_roots(d);
  std::map<std::pair<std::size_t, Weight>, long> memo;
  std::function<long(std::size_t, const Weight&)> count = [&](std::size_t k, const Weight& rest) -> long {
    if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; })) return 1;
    if (k == roots.size()) return 0;
    auto key = std::make_pair(k, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = 0;
    Weight r = rest;
    while (is_nonnegative(r)) {
      total += count(k + 1, r);
      for (std::size_t a = 0; a < r.size(); ++a) r[a] -= roots[k][a];
    }
    memo[key] = total;
    return total;
  };
  if (!is_nonnegative(g)) return 0;
  return count(0, g);
}

namespace {

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t inv(std::uint64_t a) {
  std::uint64_t r = 1, e = kPrime - 2;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

// Incremental row echelon form over Z/P.
class Echelon {
 public:
  explicit Echelon(int n) : pivot_row_(n, -1) {}
  int rank() const { return static_cast<int>(rows_.size()); }
  void insert(std::vector<std::uint64_t> v) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] == 0) continue;
      int r = pivot_row_[c];
      if (r < 0) {
        std::uint64_t s = inv(v[c]);
        for (auto& x : v) x = mul(x, s);
        pivot_row_[c] = rank();
        rows_.push_back(std::move(v));
        return;
      }
      std::uint64_t f = v[c];
      const auto& row = rows_[r];
      for (std::size_t k = c; k < v.size(); ++k)
        if (row[k]) v[k] = (v[k] + kPrime - mul(f, row[k])) % kPrime;
    }
  }

 private:
  std::vector<int> pivot_row_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace

SerreReport serre_consistency(const Algebra& alg, const Weight& g, std::uint64_t seed) {
  const CartanDatum& d = alg.datum();
  const WeightSpace& s = alg.gram(g);
  SerreReport rep;
  rep.weight = g;
  rep.words = s.dim();
  rep.kostant = weight_dim(d, g);
  std::mt19937_64 rng(seed);
  std::uint64_t t = 2 + rng() % (kPrime - 3);

  Echelon gram(s.dim());
  for (int w = 0; w < s.dim(); ++w) {
    std::vector<std::uint64_t> row(s.dim());
    for (int u = 0; u < s.dim(); ++u) row[u] = s.gram[w][u].eval_mod(t, kPrime);
    gram.insert(std::move(row));
  }
  rep.gram_rank = gram.rank();

  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j) {
      if (i == j) continue;
      FreeElt rel = serre_relator(d, i, j);
      Weight rest = g;
      for (int k = 0; k < d.rank(); ++k) rest[k] -= rel.weight[k];
      if (is_nonnegative(rest) && !QuotElt::from_free(alg, rel).is_zero()) rep.relators_vanish = false;
    }

  Echelon ideal(s.dim());
  const int target = s.dim() - rep.gram_rank;
  for (int i = 0; i < d.rank() && ideal.rank() < target; ++i)
    for (int j = 0; j < d.rank() && ideal.rank() < target; ++j) {
      if (i == j) continue;
      FreeElt rel = serre_relator(d, i, j);
      Weight rest = g;
      for (int k = 0; k < d.rank(); ++k) rest[k] -= rel.weight[k];
      if (!is_nonnegative(rest)) continue;
      std::vector<std::pair<Word, std::uint64_t>> rel_vals;
      for (const auto& [w, c] : rel.terms) rel_vals.emplace_back(w, c.eval_mod(t, kPrime));
      // Split the remaining weight into a left and a right part.
      std::vector<Weight> lefts;
      Weight cur = d.zero_weight();
      std::function<void(int)> split = [&](int k) {
        if (k == d.rank()) {
          lefts.push_back(cur);
          return;
        }
        for (int v = 0; v <= rest[k]; ++v) {
          cur[k] = v;
          split(k + 1);
        }
        cur[k] = 0;
      };
      split(0);
      for (const auto& left : lefts) {
        Weight right = rest;
        for (int k = 0; k < d.rank(); ++k) right[k] -= left[k];
        const WeightSpace& sl = alg.space(left);
        const WeightSpace& sr = alg.space(right);
        for (const auto& a : sl.words)
          for (const auto& b : sr.words) {
            if (ideal.rank() >= target) break;
            std::vector<std::uint64_t> row(s.dim(), 0);
            for (const auto& [w, val] : rel_vals) {
              Word full = a;
              full.insert(full.end(), w.begin(), w.end());
              full.insert(full.end(), b.begin(), b.end());
              auto& e = row[s.index.at(full)];
              e = (e + val) % kPrime;
            }
            ideal.insert(std::move(row));
          }
      }
    }
  rep.ideal_rank = ideal.rank();
  return rep;
}

}  // namespace qcanon
