#include "tb/word.hpp"
#include "tb/errors.hpp"

#include <sstream>

namespace tb {

Word word_inverse(const Word &w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(let_inv(*it));
  return r;
}

std::string word_str(const Word &w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    int p = let_point(w[i]) + 1;
    os << (let_is_neg(w[i]) ? -p : p);
  }
  return os.str();
}

Word word_parse(const std::string &s, int npoints) {
  Word w;
  if (s == "e" || s.empty()) return w;
  std::istringstream is(s);
  long v;
  while (is >> v) {
    if (v == 0 || v > npoints || v < -npoints)
      fail(Err::BadInput, "letter out of range in word '" + s + "'");
    w.push_back(v > 0 ? let_pos(int(v) - 1) : let_neg(int(-v) - 1));
  }
  if (!is.eof()) fail(Err::BadInput, "unparsable word '" + s + "'");
  return w;
}

Rewriter::Rewriter(std::shared_ptr<const TrianglePresentation> t) : t_(std::move(t)) {
  const ProjectivePlane &pl = *t_->plane;
  pencil_.resize(pl.n);
  for (int x = 0; x < pl.n; ++x)
    for (int z : pl.points_on[pl.lambda[x]]) pencil_[z].push_back(x);
}

std::pair<unsigned char, unsigned char> Rewriter::flip_np(int x, int y) const {
  const ProjectivePlane &pl = *t_->plane;
  int zp = pl.lambda_inv[pl.join(x, y)];
  int y2 = z_of(zp, x);
  int y1 = z_of(zp, y);
  return {let_pos(y2), let_neg(y1)};
}

std::pair<unsigned char, unsigned char> Rewriter::flip_pn(int u, int v) const {
  const ProjectivePlane &pl = *t_->plane;
  int z0 = pl.meet(pl.lambda[u], pl.lambda[v]);
  int x0 = z_of(u, z0);
  int x1 = z_of(v, z0);
  return {let_neg(x0), let_pos(x1)};
}

// Forward scan with one-step backup. Invariant: all pairs left of the cursor
// are irreducible, so reaching the end is a local fixpoint. Each shrink drops
// the length, each flip drops the neg-before-pos inversion count; both are
// bounded, so this terminates.
void Rewriter::reduce(Word &w, size_t start_hint) const {
  long long steps = 0;
  size_t i = start_hint;
  while (i + 1 < w.size()) {
    unsigned char a = w[i], b = w[i + 1];
    bool an = let_is_neg(a), bn = let_is_neg(b);
    int pa = let_point(a), pb = let_point(b);
    int z;
    if (b == let_inv(a)) {
      w.erase(i, 2);
    } else if (!an && !bn && (z = z_of(pa, pb)) >= 0) {
      w[i] = let_neg(z);
      w.erase(i + 1, 1);
    } else if (an && bn && (z = z_of(pb, pa)) >= 0) {
      w[i] = let_pos(z);
      w.erase(i + 1, 1);
    } else if (an && !bn) {
      auto [first, second] = flip_np(pa, pb);
      w[i] = first;
      w[i + 1] = second;
    } else {
      ++i;
      continue;
    }
    if (++steps > rewrite_budget)
      fail(Err::BudgetExceeded, "rewrite frontier exceeded " + std::to_string(rewrite_budget));
    i = i > 0 ? i - 1 : 0;
  }
}

Word Rewriter::normalize(const Word &w) const {
  Word r = w;
  reduce(r, 0);
  return r;
}

void Rewriter::append_inplace(Word &nf, unsigned char letter) const {
  nf.push_back(letter);
  reduce(nf, nf.size() >= 2 ? nf.size() - 2 : 0);
}

Word Rewriter::mul(const Word &a, const Word &b) const {
  Word r = a;
  r.append(b);
  reduce(r, 0);
  return r;
}

Word Rewriter::mul(const Word &a, unsigned char letter) const {
  Word r = a;
  append_inplace(r, letter);
  return r;
}

std::pair<int, int> word_coords(const Word &nf) {
  int m = 0, n = 0;
  for (unsigned char l : nf) (let_is_neg(l) ? n : m)++;
  return {m, n};
}

int word_type(const Word &nf) {
  auto [m, n] = word_coords(nf);
  return ((m - n) % 3 + 3) % 3;
}

} // namespace tb
