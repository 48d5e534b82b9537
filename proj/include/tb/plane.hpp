#ifndef TB_PLANE_HPP
#define TB_PLANE_HPP

#include "tb/gf.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace tb {

// Homogeneous coordinate triple over GF(q), normalized so the first nonzero
// coordinate is 1. Points and lines share the representation; a point lies on
// a line iff the dot product of their triples vanishes.
struct HomTriple {
  std::array<int, 3> c{0, 0, 0};
  bool operator==(const HomTriple &o) const { return c == o.c; }
  bool operator<(const HomTriple &o) const { return c < o.c; }
};

struct LambdaSpec {
  enum Kind { Standard, Cyclic, Explicit } kind = Standard;
  int shift = 0;                 // for Cyclic
  std::vector<int> perm;         // for Explicit: point index -> line index
  static LambdaSpec standard() { return {}; }
  static LambdaSpec cyclic(int k) { return {Cyclic, k, {}}; }
  static LambdaSpec explicit_perm(std::vector<int> p) { return {Explicit, 0, std::move(p)}; }
  std::string describe() const;
};

// PG(2,q) with a fixed point-line correspondence lambda. Indices are the
// ordinals of the lex-sorted normalized triples, so all derived data is
// deterministic for a given q.
struct ProjectivePlane {
  FiniteField field;
  int n = 0; // q^2+q+1
  std::vector<HomTriple> points;
  std::vector<HomTriple> lines;
  std::vector<char> incidence;          // n*n, incidence[p*n+l]
  std::vector<std::vector<int>> lines_through; // per point, sorted
  std::vector<std::vector<int>> points_on;     // per line, sorted
  std::vector<int> join_table; // n*n point,point -> line (diagonal -1)
  std::vector<int> meet_table; // n*n line,line -> point (diagonal -1)
  std::vector<int> lambda;     // point -> line
  std::vector<int> lambda_inv; // line -> point
  LambdaSpec lambda_spec;

  int q() const { return field.q; }
  bool incident(int p, int l) const { return incidence[p * n + l] != 0; }
  int join(int p1, int p2) const { return join_table[p1 * n + p2]; }
  int meet(int l1, int l2) const { return meet_table[l1 * n + l2]; }
  // y incident to lambda(x): the pair relation underlying triangle
  // presentation axiom (1).
  bool pair_incident(int x, int y) const { return incident(y, lambda[x]); }
};

ProjectivePlane make_plane(const FiniteField &field, const LambdaSpec &spec = LambdaSpec());

// Verifies the plane axioms and lambda bijectivity; used by tests and by
// make_plane itself.
bool plane_invariants_hold(const ProjectivePlane &pl);

// Number of flags (p2,l2) fitting the opposite-chamber incidence diagram for
// the flag (p1,l1): p2 not on l1 and p1 not on l2. Equals q^3.
long long opposite_chamber_count(const ProjectivePlane &pl, int p1, int l1);

// Cyclic (Singer) numbering of points and lines: point_orbit[i] is the index
// of sigma^i(p0) and line_orbit[i] of sigma^i(l0) for a collineation sigma of
// order q^2+q+1 acting regularly. Used to generate the cyclic lambda family.
struct SingerCycle {
  std::vector<int> point_orbit;
  std::vector<int> line_orbit;
  std::vector<int> point_pos; // inverse of point_orbit
};
SingerCycle find_singer_cycle(const FiniteField &field);

// Lambda family scanned by the presentation CLI: cyclic shifts first, then
// the standard correlation.
std::vector<LambdaSpec> lambda_family(int q);

} // namespace tb

#endif
