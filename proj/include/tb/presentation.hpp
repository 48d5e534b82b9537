#ifndef TB_PRESENTATION_HPP
#define TB_PRESENTATION_HPP

#include "tb/plane.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace tb {

using Triple = std::array<int, 3>;

// A set of triples over the points of a plane, candidate or verified triangle
// presentation. zcomp[x*n+y] = z for (x,y,z) in T, else -1 (axiom 3 keeps it
// single-valued; duplicate-z inputs are representable only through `triples`
// and flagged by validate()).
struct TrianglePresentation {
  std::shared_ptr<const ProjectivePlane> plane;
  std::vector<Triple> triples; // sorted lex
  std::vector<int> zcomp;

  int n() const { return plane->n; }
  int q() const { return plane->q(); }
  int z_of(int x, int y) const { return zcomp[x * plane->n + y]; }
  std::uint64_t content_hash() const;
};

TrianglePresentation make_presentation(std::shared_ptr<const ProjectivePlane> plane,
                                       std::vector<Triple> triples);

struct Violation {
  int axiom;           // 1, 2 or 3
  Triple witness;      // triple or (x,y,-1) pair
};

struct ValidationReport {
  bool passed = false;
  std::vector<Violation> violations;
};

ValidationReport validate(const TrianglePresentation &t);

// Backtracking search over one fixed lambda. Assigns a completion z to every
// incident pair (x,y) in lex order, propagating the cyclic closure
// (x,y)->z, (y,z)->x, (z,x)->y at each decision. Emits every completed set in
// canonical order until `limit` or exhaustion; returns false if the node
// budget ran out before the subtree was exhausted.
struct SearchStats {
  long long nodes = 0;
  bool exhausted = true;
  int emitted = 0;
};
SearchStats enumerate(std::shared_ptr<const ProjectivePlane> plane, int limit,
                      long long max_nodes,
                      const std::function<void(const TrianglePresentation &)> &emit);

// One length-3 relator per cyclic orbit of T, each the lex-least rotation.
std::vector<Triple> relations(const TrianglePresentation &t);

// Scans the lambda family for order q and returns the first presentation
// found, together with the spec of the lambda that produced it.
struct ScanResult {
  TrianglePresentation presentation;
  LambdaSpec lambda;
  long long nodes = 0;
};
std::optional<ScanResult> search_first(int q, long long max_nodes_per_lambda);

} // namespace tb

#endif
