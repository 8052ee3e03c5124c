#include "qcanon/cartan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qcanon {

namespace {

// Determinant by fraction-free elimination; entries stay small here.
long long determinant(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  long long prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool positive_definite(const std::vector<std::vector<int>>& p) {
  for (std::size_t k = 1; k <= p.size(); ++k) {
    std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = p[i][j];
    if (determinant(m) <= 0) return false;
  }
  return true;
}

}  // namespace

int CartanDatum::pair(const Weight& x, const Weight& y) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += x[i] * pairing[i][j] * y[j];
  return s;
}

int CartanDatum::pair_simple(int i, const Weight& y) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += pairing[i][j] * y[j];
  return s;
}

bool CartanDatum::is_symmetric() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) {
      if (i == j && pairing[i][j] != 2) return false;
      if (i != j && pairing[i][j] != 0 && pairing[i][j] != -1) return false;
    }
  return true;
}

int CartanDatum::index_of(std::string_view label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels[i] == label) return i;
  throw CartanError("unknown node label '" + std::string(label) + "' for type " + name);
}

Weight CartanDatum::simple_root(int i) const {
  Weight w(rank(), 0);
  w[i] = 1;
  return w;
}

CartanDatum make_datum(std::string name, std::vector<std::string> labels, std::vector<std::vector<int>> pairing) {
  const std::size_t n = labels.size();
  if (pairing.size() != n) throw CartanError("pairing matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (pairing[i].size() != n) throw CartanError("pairing matrix not square");
    if (pairing[i][i] <= 0 || pairing[i][i] % 2 != 0) throw CartanError("(alpha_i, alpha_i) must lie in 2Z_{>0}");
    for (std::size_t j = 0; j < n; ++j) {
      if (pairing[i][j] != pairing[j][i]) throw CartanError("pairing not symmetric");
      if (i != j && ((2 * pairing[i][j]) % pairing[i][i] != 0 || pairing[i][j] > 0))
        throw CartanError("a_ij must lie in Z_{<=0}");
    }
  }
  if (!positive_definite(pairing)) throw CartanError("datum is not of finite type");
  return CartanDatum{std::move(name), std::move(labels), std::move(pairing)};
}

CartanDatum build_cartan(std::string_view tag) {
  if (tag == "A1") return make_datum("A1", {"1"}, {{2}});
  if (tag == "A1xA1") return make_datum("A1xA1", {"1", "2"}, {{2, 0}, {0, 2}});
  if (tag == "A2") return make_datum("A2", {"1", "2"}, {{2, -1}, {-1, 2}});
  // Node 1' sits at the far end so that 1 <-> 1' is the diagram flip.
  if (tag == "A3") return make_datum("A3", {"1", "2", "1'"}, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  if (tag == "B2") return make_datum("B2", {"1", "2"}, {{4, -2}, {-2, 2}});
  // Central node 2; outer nodes 1, 3, 4.
  if (tag == "D4")
    return make_datum("D4", {"1", "2", "3", "4"},
                      {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
  if (tag == "G2") return make_datum("G2", {"1", "2"}, {{6, -3}, {-3, 2}});
  throw CartanError("unknown Cartan type '" + std::string(tag) + "'");
}

Weight reflect(const CartanDatum& d, int i, const Weight& x) {
  Weight y = x;
  y[i] -= d.coroot(i, x);
  return y;
}

int height(const Weight& x) { return std::accumulate(x.begin(), x.end(), 0); }

bool is_nonnegative(const Weight& x) {
  return std::all_of(x.begin(), x.end(), [](int v) { return v >= 0; });
}

Weight add(const Weight& x, const Weight& y) {
  Weight z = x;
  for (std::size_t k = 0; k < z.size(); ++k) z[k] += y[k];
  return z;
}

Weight scale(int k, const Weight& x) {
  Weight z = x;
  for (auto& v : z) v *= k;
  return z;
}

std::vector<Weight> positive_roots(const CartanDatum& d) {
  std::set<Weight> seen;
  std::deque<Weight> todo;
  for (int i = 0; i < d.rank(); ++i) {
    seen.insert(d.simple_root(i));
    todo.push_back(d.simple_root(i));
  }
  while (!todo.empty()) {
    Weight x = todo.front();
    todo.pop_front();
    for (int i = 0; i < d.rank(); ++i) {
      Weight y = reflect(d, i, x);
      if (!is_nonnegative(y) && !is_nonnegative(scale(-1, y))) throw CartanError("mixed-sign root");
      if (!is_nonnegative(y)) y = scale(-1, y);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) { return height(a) < height(b); });
  return out;
}

long weyl_group_order(const CartanDatum& d) {
  // Orbit of a regular element in fundamental-weight coordinates:
  // s_i acts by lambda -> lambda - lambda_i * (row i of the Cartan matrix).
  std::vector<int> rho(d.rank(), 1);
  std::set<std::vector<int>> seen{rho};
  std::deque<std::vector<int>> todo{rho};
  while (!todo.empty()) {
    auto x = todo.front();
    todo.pop_front();
    for (int i = 0; i < d.rank(); ++i) {
      auto y = x;
      for (int j = 0; j < d.rank(); ++j) y[j] -= x[i] * d.a(i, j);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return static_cast<long>(seen.size());
}

std::vector<Weight> weights_up_to_height(const CartanDatum& d, int h) {
  std::vector<Weight> out;
  Weight w(d.rank(), 0);
  // Enumerate all nonnegative vectors with sum <= h.
  std::vector<Weight> all;
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == d.rank()) {
      all.push_back(w);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      w[pos] = v;
      self(self, pos + 1, left - v);
    }
    w[pos] = 0;
  };
  rec(rec, 0, h);
  std::stable_sort(all.begin(), all.end(), [](const Weight& a, const Weight& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a < b;
  });
  return all;
}

std::vector<Weight> roots_from_word(const CartanDatum& d, const Word& h) {
  const auto n_pos = positive_roots(d).size();
  if (h.size() != n_pos)
    throw CartanError("word has length " + std::to_string(h.size()) + ", expected " + std::to_string(n_pos));
  std::vector<Weight> roots;
  std::set<Weight> seen;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] < 0 || h[k] >= d.rank()) throw CartanError("letter out of range");
    Weight beta = d.simple_root(h[k]);
    for (std::size_t m = k; m-- > 0;) beta = reflect(d, h[m], beta);
    if (!is_nonnegative(beta) || !seen.insert(beta).second) throw CartanError("word is not reduced");
    roots.push_back(beta);
  }
  return roots;
}

ReducedWord::ReducedWord(const CartanDatum& d, Word letters)
    : letters_(std::move(letters)), roots_(roots_from_word(d, letters_)) {}

std::string ReducedWord::to_string(const CartanDatum& d) const { return format_word(d, letters_); }

Word parse_word(const CartanDatum& d, std::string_view csv) {
  Word w;
  std::string s(csv);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw CartanError("empty letter in word '" + s + "'");
    w.push_back(d.index_of(item));
  }
  return w;
}

std::string format_word(const CartanDatum& d, const Word& h) {
  std::string out;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (k) out += ',';
    out += d.labels[h[k]];
  }
  return out;
}

int braid_order(const CartanDatum& d, int i, int j) {
  if (i == j) return 1;
  switch (d.a(i, j) * d.a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw CartanError("not of finite type");
}

bool apply_braid_move(const CartanDatum& d, Word& h, int pos) {
  if (pos + 1 >= static_cast<int>(h.size())) return false;
  int i = h[pos], j = h[pos + 1];
  if (i == j) return false;
  int m = braid_order(d, i, j);
  if (pos + m > static_cast<int>(h.size())) return false;
  for (int k = 0; k < m; ++k)
    if (h[pos + k] != (k % 2 == 0 ? i : j)) return false;
  for (int k = 0; k < m; ++k) h[pos + k] = (k % 2 == 0 ? j : i);
  return true;
}

Word seed_reduced_word(const CartanDatum& d, int first) {
  const auto n_pos = positive_roots(d).size();
  Word w;
  if (first >= 0) {
    if (first >= d.rank()) throw CartanError("letter out of range");
    w.push_back(first);
  }
  while (w.size() < n_pos) {
    bool extended = false;
    for (int i = 0; i < d.rank() && !extended; ++i) {
      Weight beta = d.simple_root(i);
      for (std::size_t m = w.size(); m-- > 0;) beta = reflect(d, w[m], beta);
      if (is_nonnegative(beta)) {
        w.push_back(i);
        extended = true;
      }
    }
    if (!extended) throw CartanError("could not extend reduced word");
  }
  return w;
}

std::vector<Word> enumerate_reduced_words(const CartanDatum& d) {
  Word seed = seed_reduced_word(d);
  std::set<Word> seen{seed};
  std::deque<Word> todo{seed};
  while (!todo.empty()) {
    Word w = todo.front();
    todo.pop_front();
    for (int pos = 0; pos + 1 < static_cast<int>(w.size()); ++pos) {
      Word v = w;
      if (apply_braid_move(d, v, pos) && seen.insert(v).second) todo.push_back(v);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<BraidMove> braid_path(const CartanDatum& d, const Word& h, const Word& target) {
  std::map<Word, std::pair<Word, BraidMove>> parent;
  std::deque<Word> todo{h};
  parent[h] = {h, {-1, 0}};
  while (!todo.empty()) {
    Word w = todo.front();
    todo.pop_front();
    if (w == target) break;
    for (int pos = 0; pos + 1 < static_cast<int>(w.size()); ++pos) {
      Word v = w;
      if (!apply_braid_move(d, v, pos) || parent.count(v)) continue;
      parent[v] = {w, {pos, braid_order(d, w[pos], w[pos + 1])}};
      todo.push_back(v);
    }
  }
  if (!parent.count(target)) throw CartanError("no braid-move path between words");
  std::vector<BraidMove> path;
  for (Word w = target; w != h; w = parent[w].first) path.push_back(parent[w].second);
  std::reverse(path.begin(), path.end());
  return path;
}

int DiagramAutomorphism::order() const {
  int n = 1;
  for (const auto& o : orbits()) n = std::lcm(n, static_cast<int>(o.size()));
  return n;
}

std::vector<std::vector<int>> DiagramAutomorphism::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (done[i]) continue;
    std::vector<int> orbit;
    for (int k = static_cast<int>(i); !done[k]; k = perm[k]) {
      done[k] = true;
      orbit.push_back(k);
    }
    out.push_back(orbit);
  }
  return out;
}

DiagramAutomorphism DiagramAutomorphism::identity(int rank) {
  DiagramAutomorphism s;
  s.perm.resize(rank);
  std::iota(s.perm.begin(), s.perm.end(), 0);
  return s;
}

DiagramAutomorphism make_automorphism(const CartanDatum& d,
                                      const std::vector<std::pair<std::string, std::string>>& images) {
  DiagramAutomorphism s = DiagramAutomorphism::identity(d.rank());
  for (const auto& [from, to] : images) s.perm[d.index_of(from)] = d.index_of(to);
  std::vector<int> sorted = s.perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < d.rank(); ++i)
    if (sorted[i] != i) throw CartanError("sigma is not a permutation");
  return s;
}

void check_admissible(const CartanDatum& d, const DiagramAutomorphism& sigma) {
  if (static_cast<int>(sigma.perm.size()) != d.rank()) throw CartanError("sigma has wrong size");
  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j)
      if (d.pairing[i][j] != d.pairing[sigma.apply(i)][sigma.apply(j)])
        throw CartanError("sigma does not preserve the pairing");
  for (const auto& orbit : sigma.orbits())
    for (int i : orbit)
      for (int j : orbit)
        if (i != j && d.pairing[i][j] != 0)
          throw CartanError("sigma is not admissible: (alpha_" + d.labels[i] + ", alpha_" + d.labels[j] +
                            ") != 0 inside one orbit");
}

FoldedDatum fold_datum(const CartanDatum& d, const DiagramAutomorphism& sigma) {
  if (!d.is_symmetric()) throw CartanError("folding needs a symmetric datum");
  check_admissible(d, sigma);
  auto orbits = sigma.orbits();
  const std::size_t r = orbits.size();
  std::vector<std::vector<int>> p(r, std::vector<int>(r, 0));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      if (a == b) {
        p[a][b] = d.pairing[orbits[a][0]][orbits[a][0]] * static_cast<int>(orbits[a].size());
      } else {
        for (int i : orbits[a])
          for (int j : orbits[b]) p[a][b] += d.pairing[i][j];
      }
    }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < r; ++a) labels.push_back(std::to_string(a + 1));
  std::string name = d.name + "/sigma";
  return FoldedDatum{d, sigma, make_datum(std::move(name), std::move(labels), std::move(p)), std::move(orbits)};
}

Weight FoldedDatum::lift_weight(const Weight& folded_weight) const {
  Weight w(unfolded.rank(), 0);
  for (std::size_t j = 0; j < orbits.size(); ++j)
    for (int i : orbits[j]) w[i] = folded_weight[j];
  return w;
}

Word lift_word(const FoldedDatum& f, const Word& folded_word, BlockOrder order) {
  std::vector<int> seen(f.orbits.size(), 0);
  Word out;
  for (int j : folded_word) {
    const auto& orbit = f.orbits.at(j);
    int start = order == BlockOrder::Rotating ? seen[j] % static_cast<int>(orbit.size()) : 0;
    for (std::size_t k = 0; k < orbit.size(); ++k) out.push_back(orbit[(start + k) % orbit.size()]);
    ++seen[j];
  }
  if (!folded_word.empty()) roots_from_word(f.unfolded, out);  // reducedness check
  return out;
}

std::vector<int> block_sizes(const FoldedDatum& f, const Word& folded_word) {
  std::vector<int> sizes;
  for (int j : folded_word) sizes.push_back(static_cast<int>(f.orbits.at(j).size()));
  return sizes;
}

std::vector<int> index_lift(const FoldedDatum& f, const Word& folded_word, const std::vector<int>& c) {
  auto sizes = block_sizes(f, folded_word);
  if (c.size() != sizes.size()) throw CartanError("index length does not match folded word");
  std::vector<int> out;
  for (std::size_t k = 0; k < c.size(); ++k) out.insert(out.end(), sizes[k], c[k]);
  return out;
}

std::vector<int> index_fold(const FoldedDatum& f, const Word& folded_word, const std::vector<int>& c) {
  auto sizes = block_sizes(f, folded_word);
  std::vector<int> out;
  std::size_t pos = 0;
  for (int s : sizes) {
    if (pos + s > c.size()) throw CartanError("index length does not match lifted word");
    for (int k = 1; k < s; ++k)
      if (c[pos + k] != c[pos]) throw CartanError("index is not sigma-fixed");
    out.push_back(c[pos]);
    pos += s;
  }
  if (pos != c.size()) throw CartanError("index length does not match lifted word");
  return out;
}

std::vector<int> sigma_on_index(const FoldedDatum& f, const Word& lifted, const std::vector<int>& c) {
  if (c.size() != lifted.size()) throw CartanError("index length does not match lifted word");
  std::vector<int> orbit_of(f.unfolded.rank());
  for (std::size_t j = 0; j < f.orbits.size(); ++j)
    for (int i : f.orbits[j]) orbit_of[i] = static_cast<int>(j);
  std::vector<int> out(c.size());
  std::size_t start = 0;
  while (start < lifted.size()) {
    int j = orbit_of[lifted[start]];
    std::size_t len = f.orbits[j].size();
    if (start + len > lifted.size()) throw CartanError("word is not a lifted word");
    std::map<int, std::size_t> pos_of;
    for (std::size_t k = start; k < start + len; ++k) {
      if (orbit_of[lifted[k]] != j) throw CartanError("word is not a lifted word");
      pos_of[lifted[k]] = k;
    }
    if (pos_of.size() != len) throw CartanError("word is not a lifted word");
    for (std::size_t k = start; k < start + len; ++k) out[pos_of.at(f.sigma.apply(lifted[k]))] = c[k];
    start += len;
  }
  return out;
}

}  // namespace qcanon
