#ifndef TB_WORD_HPP
#define TB_WORD_HPP

#include "tb/presentation.hpp"

#include <memory>
#include <string>

namespace tb {

// A group word is a byte string of letters (p<<1) for a_p and (p<<1)|1 for
// a_p^{-1}. Words in normal form are wall-first: all positive letters, then
// all negative ones, with no adjacent reducible pair. Under the letter order
// "positives before negatives" this is the shortlex-least spelling.
using Word = std::basic_string<unsigned char>;

inline unsigned char let_pos(int p) { return static_cast<unsigned char>(p << 1); }
inline unsigned char let_neg(int p) { return static_cast<unsigned char>((p << 1) | 1); }
inline bool let_is_neg(unsigned char l) { return l & 1; }
inline int let_point(unsigned char l) { return l >> 1; }
inline unsigned char let_inv(unsigned char l) { return l ^ 1; }

Word word_inverse(const Word &w);
std::string word_str(const Word &w); // signed 1-based indices, e.g. "1 -3 2"
Word word_parse(const std::string &s, int npoints);

// Rewriting engine for one triangle presentation. The rules are the free
// reductions, the length-2 shrinks a_x a_y -> a_z^{-1} and
// a_x^{-1} a_y^{-1} -> a_z from the relators, and the diamond flips that
// exchange the two spellings of a length-2 geodesic across a chamber pair:
//   a_x^{-1} a_y  =  a_{y2} a_{y1}^{-1}   (flip_np)
//   a_u a_v^{-1}  =  a_{x0}^{-1} a_{x1}   (flip_pn)
// Rewriting runs to a local fixpoint; words come out wall-first. Whether this
// decides equality for every valid presentation is open, so ball construction
// cross-checks the results against the sphere-count formula.
class Rewriter {
public:
  explicit Rewriter(std::shared_ptr<const TrianglePresentation> t);

  const TrianglePresentation &presentation() const { return *t_; }
  const ProjectivePlane &plane() const { return *t_->plane; }
  int npoints() const { return t_->plane->n; }

  Word normalize(const Word &w) const;
  void append_inplace(Word &nf, unsigned char letter) const; // nf must be normal
  Word mul(const Word &a, const Word &b) const;              // normalize(a.b)
  Word mul(const Word &a, unsigned char letter) const;

  int z_of(int x, int y) const { return t_->z_of(x, y); }
  // a_x^{-1} a_y -> (pos, neg); requires x != y
  std::pair<unsigned char, unsigned char> flip_np(int x, int y) const;
  // a_u a_v^{-1} -> (neg, pos); requires u != v
  std::pair<unsigned char, unsigned char> flip_pn(int u, int v) const;

  // points whose lambda-line passes through z (the apex parameter set)
  const std::vector<int> &pencil(int z) const { return pencil_[z]; }

  long long rewrite_budget = 100'000'000; // steps per normalize call

private:
  void reduce(Word &w, size_t start_hint) const;
  std::shared_ptr<const TrianglePresentation> t_;
  std::vector<std::vector<int>> pencil_;
};

// Sector coordinates of the vertex named by a normal-form word: (#pos, #neg).
std::pair<int, int> word_coords(const Word &nf);
// Vertex type: (#pos - #neg) mod 3.
int word_type(const Word &nf);

} // namespace tb

#endif
