#include "tb/presentation.hpp"
#include "tb/errors.hpp"

#include <algorithm>

namespace tb {

namespace {

std::uint64_t fnv1a64(const void *data, size_t len, std::uint64_t h = 1469598103934665603ULL) {
  const unsigned char *p = static_cast<const unsigned char *>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

} // namespace

std::uint64_t TrianglePresentation::content_hash() const {
  std::uint64_t h = fnv1a64(nullptr, 0);
  int q = plane->q();
  h = fnv1a64(&q, sizeof q, h);
  for (int l : plane->lambda) h = fnv1a64(&l, sizeof l, h);
  for (const Triple &t : triples) h = fnv1a64(t.data(), sizeof(int) * 3, h);
  return h;
}

TrianglePresentation make_presentation(std::shared_ptr<const ProjectivePlane> plane,
                                       std::vector<Triple> triples) {
  TrianglePresentation t;
  const int n = plane->n;
  for (const Triple &tr : triples)
    for (int v : tr)
      if (v < 0 || v >= n) fail(Err::BadInput, "triple references invalid point index");
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  t.plane = std::move(plane);
  t.triples = std::move(triples);
  t.zcomp.assign(n * n, -1);
  for (const Triple &tr : t.triples)
    if (t.zcomp[tr[0] * n + tr[1]] == -1) t.zcomp[tr[0] * n + tr[1]] = tr[2];
  return t;
}

ValidationReport validate(const TrianglePresentation &t) {
  ValidationReport rep;
  const ProjectivePlane &pl = *t.plane;
  const int n = pl.n;

  std::vector<std::vector<int>> zs(n * n);
  for (const Triple &tr : t.triples) zs[tr[0] * n + tr[1]].push_back(tr[2]);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto &cell = zs[x * n + y];
      bool inc = pl.pair_incident(x, y);
      if (inc && cell.empty()) rep.violations.push_back({1, {x, y, -1}});
      if (!inc && !cell.empty()) rep.violations.push_back({1, {x, y, cell.front()}});
      if (cell.size() > 1) rep.violations.push_back({3, {x, y, cell[1]}});
    }
  for (const Triple &tr : t.triples) {
    Triple rot{tr[1], tr[2], tr[0]};
    if (!std::binary_search(t.triples.begin(), t.triples.end(), rot))
      rep.violations.push_back({2, tr});
  }
  rep.passed = rep.violations.empty();
  return rep;
}

namespace {

struct Searcher {
  const ProjectivePlane &pl;
  int n;
  std::vector<std::pair<int, int>> pairs; // incident (x,y), lex order
  std::vector<int> pair_id;               // x*n+y -> index into pairs or -1
  std::vector<int> assign;                // pair index -> z or -1
  std::vector<int> trail;                 // assigned pair indices, for undo
  long long nodes = 0, max_nodes;
  int limit, emitted = 0;
  bool budget_hit = false;
  const std::function<void(const TrianglePresentation &)> &emit_fn;
  std::shared_ptr<const ProjectivePlane> plane_ref;

  Searcher(std::shared_ptr<const ProjectivePlane> plane, int limit_, long long max_nodes_,
           const std::function<void(const TrianglePresentation &)> &fn)
      : pl(*plane), n(plane->n), max_nodes(max_nodes_), limit(limit_), emit_fn(fn),
        plane_ref(std::move(plane)) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (pl.pair_incident(x, y)) pairs.emplace_back(x, y);
    pair_id.assign(n * n, -1);
    for (int i = 0; i < (int)pairs.size(); ++i)
      pair_id[pairs[i].first * n + pairs[i].second] = i;
    assign.assign(pairs.size(), -1);
  }

  // Sets (x,y)->z if consistent; records on the trail. Returns false on
  // conflict (non-incident pair or contradictory assignment).
  bool set(int x, int y, int z, size_t trail_mark) {
    (void)trail_mark;
    int id = pair_id[x * n + y];
    if (id < 0) return false;
    if (assign[id] == z) return true;
    if (assign[id] != -1) return false;
    assign[id] = z;
    trail.push_back(id);
    return true;
  }

  bool propagate(int x, int y, int z) {
    size_t mark = trail.size();
    if (set(x, y, z, mark) && set(y, z, x, mark) && set(z, x, y, mark)) return true;
    while (trail.size() > mark) { assign[trail.back()] = -1; trail.pop_back(); }
    return false;
  }

  bool done() const { return emitted >= limit; }

  void emit_current() {
    std::vector<Triple> triples;
    for (int i = 0; i < (int)pairs.size(); ++i)
      triples.push_back({pairs[i].first, pairs[i].second, assign[i]});
    emit_fn(make_presentation(plane_ref, std::move(triples)));
    ++emitted;
  }

  void dfs(int from) {
    if (done() || budget_hit) return;
    if (++nodes > max_nodes) { budget_hit = true; return; }
    int next = -1;
    for (int i = from; i < (int)pairs.size(); ++i)
      if (assign[i] == -1) { next = i; break; }
    if (next < 0) { emit_current(); return; }
    auto [x, y] = pairs[next];
    // z must make (y,z) and (z,x) incident pairs as well
    for (int z : pl.points_on[pl.lambda[y]]) {
      if (!pl.pair_incident(z, x)) continue;
      size_t mark = trail.size();
      if (propagate(x, y, z)) {
        dfs(next + 1);
        while (trail.size() > mark) { assign[trail.back()] = -1; trail.pop_back(); }
        if (done() || budget_hit) return;
      }
    }
  }
};

} // namespace

SearchStats enumerate(std::shared_ptr<const ProjectivePlane> plane, int limit,
                      long long max_nodes,
                      const std::function<void(const TrianglePresentation &)> &emit) {
  SearchStats st;
  if (limit <= 0) return st;
  Searcher s(std::move(plane), limit, max_nodes, emit);
  s.dfs(0);
  st.nodes = s.nodes;
  st.exhausted = !s.budget_hit;
  st.emitted = s.emitted;
  return st;
}

std::vector<Triple> relations(const TrianglePresentation &t) {
  ValidationReport rep = validate(t);
  if (!rep.passed) fail(Err::InvalidPresentation, "relations() requires a valid presentation");
  std::vector<Triple> reps;
  for (const Triple &tr : t.triples) {
    Triple best = tr;
    Triple r1{tr[1], tr[2], tr[0]}, r2{tr[2], tr[0], tr[1]};
    if (r1 < best) best = r1;
    if (r2 < best) best = r2;
    if (best == tr) reps.push_back(tr);
  }
  return reps;
}

std::optional<ScanResult> search_first(int q, long long max_nodes_per_lambda) {
  FiniteField f = make_field(q);
  for (const LambdaSpec &spec : lambda_family(q)) {
    auto plane = std::make_shared<const ProjectivePlane>(make_plane(f, spec));
    std::optional<TrianglePresentation> found;
    SearchStats st = enumerate(plane, 1, max_nodes_per_lambda,
                               [&](const TrianglePresentation &t) { found = t; });
    if (found) return ScanResult{std::move(*found), spec, st.nodes};
  }
  return std::nullopt;
}

} // namespace tb
