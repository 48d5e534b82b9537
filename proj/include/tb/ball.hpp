#ifndef TB_BALL_HPP
#define TB_BALL_HPP

#include "tb/word.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace tb {

struct WordHash {
  size_t operator()(const Word &w) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : w) { h ^= c; h *= 1099511628211ULL; }
    return static_cast<size_t>(h);
  }
};

// Chamber {g, g a_x^{-1}, g a_y} as vertex ids, keyed by the sorted triple.
struct Chamber {
  std::array<int, 3> vertices; // sorted ids
  int anchor;                  // id of the vertex in the g role
  int x, y;                    // generator pair at the anchor
  bool contains(int id) const {
    return vertices[0] == id || vertices[1] == id || vertices[2] == id;
  }
};

struct Link {
  int base;
  std::vector<int> neg_nbr; // neg_nbr[x] = id of v a_x^{-1} (line side)
  std::vector<int> pos_nbr; // pos_nbr[y] = id of v a_y     (point side)
};

// Radius-r ball of the Cayley graph, built by BFS with identification through
// the rewriter. Construction always runs the sphere oracle: the per-(m,n)
// class sizes must reproduce N_{m,n} for every d <= r, otherwise it throws
// OracleMismatch (the mandated guard against rewriting incompleteness).
class BuildingBall {
public:
  BuildingBall(std::shared_ptr<const TrianglePresentation> t, int radius, int threads = 1);

  const Rewriter &rewriter() const { return rw_; }
  const TrianglePresentation &presentation() const { return rw_.presentation(); }
  int radius() const { return radius_; }
  int q() const { return rw_.presentation().q(); }
  size_t size() const { return words_.size(); }

  const Word &word(int id) const { return words_[id]; }
  int dist(int id) const { return dist_[id]; }
  int type(int id) const { return word_type(words_[id]); }
  std::pair<int, int> coordinates(int id) const;

  std::optional<int> id_of(const Word &nf) const;
  int require_id(const Word &nf) const; // OutOfBall if absent
  std::optional<int> neighbor(int id, unsigned char letter) const;

  // ids at distance exactly d
  std::pair<int, int> sphere_range(int d) const;
  long long sphere_size(int d) const;

  // all (q+1)(q^2+q+1) chambers containing v; requires dist(v) <= radius-1
  std::vector<Chamber> chambers_at(int v) const;
  // chambers containing the directed edge u -> u a_z
  std::vector<Chamber> chambers_on_edge(int u, int z) const;
  Link link(int v) const; // BoundaryVertex if dist(v) > radius-1

  // graph distance via normal forms; OutOfBall if u^{-1}v leaves the ball
  int distance(int u, int v) const;

private:
  Rewriter rw_;
  int radius_;
  std::vector<Word> words_;
  std::vector<int> dist_;
  std::unordered_map<Word, int, WordHash> index_;
  std::vector<size_t> level_begin_; // size radius+2
  void check_sphere_oracle() const;
};

// Projective-plane axioms on the link graph plus girth 6; the exact
// isomorphism with the plane's incidence graph is the identity-on-labels map
// x -> lambda(x), y -> y, which chambers_at realizes by construction.
bool link_is_plane_incidence(const BuildingBall &b, const Link &lk);

} // namespace tb

#endif
