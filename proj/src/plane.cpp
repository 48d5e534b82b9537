#include "tb/plane.hpp"
#include "tb/errors.hpp"

#include <algorithm>
#include <map>

namespace tb {

namespace {

using Mat3 = std::array<std::array<int, 3>, 3>;

HomTriple normalize_triple(const FiniteField &f, std::array<int, 3> c) {
  int lead = -1;
  for (int i = 0; i < 3 && lead < 0; ++i)
    if (c[i] != 0) lead = i;
  if (lead < 0) fail(Err::BadInput, "zero triple has no projective class");
  int s = f.inv(c[lead]);
  HomTriple t;
  for (int i = 0; i < 3; ++i) t.c[i] = f.mul(c[i], s);
  return t;
}

std::vector<HomTriple> all_classes(const FiniteField &f) {
  std::vector<HomTriple> out;
  const int q = f.q;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        out.push_back(normalize_triple(f, {a, b, c}));
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int dot(const FiniteField &f, const HomTriple &a, const HomTriple &b) {
  int s = 0;
  for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a.c[i], b.c[i]));
  return s;
}

Mat3 mat_mul(const FiniteField &f, const Mat3 &a, const Mat3 &b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[i][k], b[k][j]));
      r[i][j] = s;
    }
  return r;
}

std::array<int, 3> mat_apply(const FiniteField &f, const Mat3 &m, const std::array<int, 3> &v) {
  std::array<int, 3> r{};
  for (int i = 0; i < 3; ++i) {
    int s = 0;
    for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(m[i][k], v[k]));
    r[i] = s;
  }
  return r;
}

int mat_det(const FiniteField &f, const Mat3 &m) {
  auto mul = [&](int a, int b) { return f.mul(a, b); };
  int d = 0;
  d = f.add(d, mul(m[0][0], f.sub(mul(m[1][1], m[2][2]), mul(m[1][2], m[2][1]))));
  d = f.sub(d, mul(m[0][1], f.sub(mul(m[1][0], m[2][2]), mul(m[1][2], m[2][0]))));
  d = f.add(d, mul(m[0][2], f.sub(mul(m[1][0], m[2][1]), mul(m[1][1], m[2][0]))));
  return d;
}

// Adjugate-based inverse transpose; lines transform by this under the
// collineation v -> Mv so that incidence is preserved.
Mat3 mat_inv_transpose(const FiniteField &f, const Mat3 &m) {
  int det = mat_det(f, m);
  int dinv = f.inv(det);
  auto cof = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0]));
  };
  Mat3 adj{}; // adj[i][j] = cofactor C_ij (not transposed), giving inv^T directly
  adj[0][0] = cof(1, 2, 1, 2);
  adj[0][1] = f.neg(cof(1, 2, 0, 2));
  adj[0][2] = cof(1, 2, 0, 1);
  adj[1][0] = f.neg(cof(0, 2, 1, 2));
  adj[1][1] = cof(0, 2, 0, 2);
  adj[1][2] = f.neg(cof(0, 2, 0, 1));
  adj[2][0] = cof(0, 1, 1, 2);
  adj[2][1] = f.neg(cof(0, 1, 0, 2));
  adj[2][2] = cof(0, 1, 0, 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) adj[i][j] = f.mul(adj[i][j], dinv);
  return adj;
}

} // namespace

std::string LambdaSpec::describe() const {
  switch (kind) {
  case Standard: return "standard";
  case Cyclic: return "cyclic:" + std::to_string(shift);
  case Explicit: return "explicit";
  }
  return "?";
}

ProjectivePlane make_plane(const FiniteField &field, const LambdaSpec &spec) {
  ProjectivePlane pl;
  pl.field = field;
  const int q = field.q;
  pl.n = q * q + q + 1;
  pl.points = all_classes(field);
  pl.lines = pl.points; // same normalized triples, dual role
  if ((int)pl.points.size() != pl.n)
    fail(Err::BadInput, "projective class count mismatch");

  const int n = pl.n;
  pl.incidence.assign(n * n, 0);
  pl.lines_through.assign(n, {});
  pl.points_on.assign(n, {});
  for (int p = 0; p < n; ++p)
    for (int l = 0; l < n; ++l)
      if (dot(field, pl.points[p], pl.lines[l]) == 0) {
        pl.incidence[p * n + l] = 1;
        pl.lines_through[p].push_back(l);
        pl.points_on[l].push_back(p);
      }

  pl.join_table.assign(n * n, -1);
  pl.meet_table.assign(n * n, -1);
  for (int p1 = 0; p1 < n; ++p1)
    for (int p2 = 0; p2 < n; ++p2) {
      if (p1 == p2) continue;
      for (int l : pl.lines_through[p1])
        if (pl.incidence[p2 * n + l]) { pl.join_table[p1 * n + p2] = l; break; }
    }
  for (int l1 = 0; l1 < n; ++l1)
    for (int l2 = 0; l2 < n; ++l2) {
      if (l1 == l2) continue;
      for (int p : pl.points_on[l1])
        if (pl.incidence[p * n + l2]) { pl.meet_table[l1 * n + l2] = p; break; }
    }

  pl.lambda_spec = spec;
  pl.lambda.assign(n, -1);
  switch (spec.kind) {
  case LambdaSpec::Standard:
    // point (a:b:c) -> line with the same coefficient vector
    for (int p = 0; p < n; ++p) pl.lambda[p] = p;
    break;
  case LambdaSpec::Cyclic: {
    SingerCycle sc = find_singer_cycle(field);
    int shift = ((spec.shift % n) + n) % n;
    for (int i = 0; i < n; ++i) pl.lambda[sc.point_orbit[i]] = sc.line_orbit[(i + shift) % n];
    break;
  }
  case LambdaSpec::Explicit:
    if ((int)spec.perm.size() != n) fail(Err::InvalidLambda, "permutation length != q^2+q+1");
    pl.lambda = spec.perm;
    break;
  }

  pl.lambda_inv.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    int l = pl.lambda[p];
    if (l < 0 || l >= n || pl.lambda_inv[l] != -1)
      fail(Err::InvalidLambda, "lambda is not a bijection");
    pl.lambda_inv[l] = p;
  }

  if (!plane_invariants_hold(pl)) fail(Err::BadInput, "plane invariants failed");
  return pl;
}

bool plane_invariants_hold(const ProjectivePlane &pl) {
  const int n = pl.n, q = pl.q();
  if ((int)pl.points.size() != n || (int)pl.lines.size() != n) return false;
  for (int p = 0; p < n; ++p)
    if ((int)pl.lines_through[p].size() != q + 1) return false;
  for (int l = 0; l < n; ++l)
    if ((int)pl.points_on[l].size() != q + 1) return false;
  for (int p1 = 0; p1 < n; ++p1)
    for (int p2 = p1 + 1; p2 < n; ++p2) {
      int common = 0;
      for (int l : pl.lines_through[p1])
        if (pl.incident(p2, l)) ++common;
      if (common != 1) return false;
      if (pl.join(p1, p2) < 0 || pl.join(p2, p1) != pl.join(p1, p2)) return false;
    }
  for (int l1 = 0; l1 < n; ++l1)
    for (int l2 = l1 + 1; l2 < n; ++l2) {
      int common = 0;
      for (int p : pl.points_on[l1])
        if (pl.incident(p, l2)) ++common;
      if (common != 1) return false;
    }
  return true;
}

long long opposite_chamber_count(const ProjectivePlane &pl, int p1, int l1) {
  if (!pl.incident(p1, l1)) fail(Err::NotIncident, "flag (p1,l1) is not incident");
  long long count = 0;
  for (int p2 = 0; p2 < pl.n; ++p2) {
    if (pl.incident(p2, l1)) continue;
    for (int l2 : pl.lines_through[p2])
      if (!pl.incident(p1, l2)) ++count;
  }
  return count;
}

SingerCycle find_singer_cycle(const FiniteField &field) {
  const int q = field.q;
  const int n = q * q + q + 1;
  auto classes = all_classes(field);
  std::map<HomTriple, int> index;
  for (int i = 0; i < (int)classes.size(); ++i) index[classes[i]] = i;

  // Companion matrices of monic cubics x^3 + a2 x^2 + a1 x + a0, a0 != 0.
  for (int a0 = 1; a0 < q; ++a0)
    for (int a1 = 0; a1 < q; ++a1)
      for (int a2 = 0; a2 < q; ++a2) {
        Mat3 m{};
        m[0][2] = field.neg(a0);
        m[1][0] = 1;
        m[1][2] = field.neg(a1);
        m[2][1] = 1;
        m[2][2] = field.neg(a2);

        std::array<int, 3> v{1, 0, 0};
        std::vector<int> orbit;
        std::vector<char> seen(n, 0);
        bool regular = true;
        for (int i = 0; i < n; ++i) {
          HomTriple t = normalize_triple(field, v);
          int idx = index[t];
          if (seen[idx]) { regular = false; break; }
          seen[idx] = 1;
          orbit.push_back(idx);
          v = mat_apply(field, m, v);
        }
        if (!regular) continue;
        // closing the cycle: M^n fixes the start class
        if (normalize_triple(field, v).c != classes[orbit[0]].c) continue;

        SingerCycle sc;
        sc.point_orbit = orbit;
        Mat3 mt = mat_inv_transpose(field, m);
        std::array<int, 3> w = classes[0].c; // lex-least line as base
        sc.line_orbit.clear();
        for (int i = 0; i < n; ++i) {
          sc.line_orbit.push_back(index[normalize_triple(field, w)]);
          w = mat_apply(field, mt, w);
        }
        sc.point_pos.assign(n, -1);
        for (int i = 0; i < n; ++i) sc.point_pos[sc.point_orbit[i]] = i;
        return sc;
      }
  fail(Err::SearchFailed, "no Singer cycle found (companion search)");
}

std::vector<LambdaSpec> lambda_family(int q) {
  std::vector<LambdaSpec> fam;
  const int n = q * q + q + 1;
  for (int k = 0; k < n; ++k) fam.push_back(LambdaSpec::cyclic(k));
  fam.push_back(LambdaSpec::standard());
  return fam;
}

} // namespace tb
