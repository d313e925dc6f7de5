#include "cubecomb/hyperplane.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <set>

namespace cubecomb {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return false;
  }
  return true;
}

}  // namespace

std::vector<int> Hyperplane::carrier_all() const {
  std::vector<int> out(carrier_plus);
  out.insert(out.end(), carrier_minus.begin(), carrier_minus.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string halfspace_label(const Hyperplane& w, bool plus_side) {
  return w.id + (plus_side ? "+" : "-");
}

std::vector<Hyperplane> hyperplanes(const CubeComplex& X) {
  const auto& edges = X.edges();
  const int m = static_cast<int>(edges.size());
  std::map<std::pair<int, int>, int> eidx;
  for (int e = 0; e < m; ++e) eidx[edges[e]] = e;
  auto edge_id = [&](int a, int b) {
    auto it = eidx.find(std::minmax(a, b));
    if (it == eidx.end()) fail(Errc::InternalCheckFailed, "missing edge");
    return it->second;
  };

  // Square closure of parallelism: opposite edges of every square.
  UnionFind uf(m);
  if (X.dimension() >= 2) {
    for (const auto& sq : X.cubes()[2]) {
      // Pair each edge of the square with the opposite (vertex-disjoint) one.
      std::vector<std::pair<int, int>> es;
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
          if (X.adjacent(sq[i], sq[j])) es.emplace_back(sq[i], sq[j]);
      if (es.size() != 4) fail(Errc::InternalCheckFailed, "bad square");
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) {
          const auto& [a, b] = es[i];
          const auto& [c, d] = es[j];
          if (a != c && a != d && b != c && b != d)
            uf.unite(edge_id(a, b), edge_id(c, d));
        }
    }
  }

  std::map<int, std::vector<int>> classes;
  for (int e = 0; e < m; ++e) classes[uf.find(e)].push_back(e);

  std::vector<Hyperplane> out;
  for (auto& [root, cls] : classes) {
    Hyperplane w;
    std::sort(cls.begin(), cls.end());
    for (int e : cls) w.dual_edges.push_back(edges[e]);
    const auto& [u, v] = w.dual_edges.front();
    w.id = X.name(u) + "|" + X.name(v);

    // Djokovic cross-check: halfspaces by distance comparison to (u, v).
    for (int z = 0; z < X.size(); ++z) {
      int du = X.dist(z, u), dv = X.dist(z, v);
      if (du == dv) fail(Errc::NotMedian, "tie against edge " + w.id);
      (du < dv ? w.plus : w.minus).push_back(z);
    }
    if (w.plus.empty() || w.minus.empty())
      fail(Errc::InternalCheckFailed, "empty halfspace for " + w.id);

    std::set<int> cp, cm;
    for (auto& [a, b] : w.dual_edges) {
      bool a_plus = std::binary_search(w.plus.begin(), w.plus.end(), a);
      bool b_plus = std::binary_search(w.plus.begin(), w.plus.end(), b);
      if (a_plus == b_plus)
        fail(Errc::InternalCheckFailed,
             "parallelism class disagrees with halfspaces at " + w.id);
      cp.insert(a_plus ? a : b);
      cm.insert(a_plus ? b : a);
    }
    w.carrier_plus.assign(cp.begin(), cp.end());
    w.carrier_minus.assign(cm.begin(), cm.end());

    // Every edge crossing the bipartition must be in the class.
    for (const auto& [a, b] : edges) {
      bool a_plus = std::binary_search(w.plus.begin(), w.plus.end(), a);
      bool b_plus = std::binary_search(w.plus.begin(), w.plus.end(), b);
      if (a_plus != b_plus &&
          !std::binary_search(cls.begin(), cls.end(), edge_id(a, b)))
        fail(Errc::InternalCheckFailed, "stray crossing edge at " + w.id);
    }
    if (!is_convex(X, w.plus) || !is_convex(X, w.minus))
      fail(Errc::InternalCheckFailed, "non-convex halfspace at " + w.id);

    out.push_back(std::move(w));
  }

  std::sort(out.begin(), out.end(),
            [](const Hyperplane& a, const Hyperplane& b) { return a.id < b.id; });
  return out;
}

int hyperplane_of_edge(const CubeComplex& X, const std::vector<Hyperplane>& ws,
                       int u, int v) {
  auto key = std::minmax(u, v);
  for (int i = 0; i < static_cast<int>(ws.size()); ++i)
    if (std::binary_search(ws[i].dual_edges.begin(), ws[i].dual_edges.end(),
                           std::pair<int, int>(key)))
      return i;
  fail(Errc::InternalCheckFailed,
       "edge " + X.name(u) + "-" + X.name(v) + " has no hyperplane");
}

bool is_transverse(const CubeComplex& X, const Hyperplane& a,
                   const Hyperplane& b) {
  (void)X;
  if (a.id == b.id) fail(Errc::SameHyperplane, a.id);
  return !disjoint(a.plus, b.plus) && !disjoint(a.plus, b.minus) &&
         !disjoint(a.minus, b.plus) && !disjoint(a.minus, b.minus);
}

std::vector<int> separator_set(const CubeComplex& X,
                               const std::vector<Hyperplane>& ws,
                               const std::vector<int>& A,
                               const std::vector<int>& B) {
  (void)X;
  std::vector<int> out;
  std::vector<int> sa(A), sb(B);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
    const auto& w = ws[i];
    if ((subset(sa, w.plus) && subset(sb, w.minus)) ||
        (subset(sa, w.minus) && subset(sb, w.plus)))
      out.push_back(i);
  }
  return out;
}

std::vector<std::array<int, 3>> facing_triples(
    const CubeComplex& X, const std::vector<Hyperplane>& ws) {
  const int k = static_cast<int>(ws.size());
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (is_transverse(X, ws[a], ws[b])) continue;
      for (int c = b + 1; c < k; ++c) {
        if (is_transverse(X, ws[a], ws[c]) || is_transverse(X, ws[b], ws[c]))
          continue;
        bool facing = false;
        for (int sa = 0; sa < 2 && !facing; ++sa)
          for (int sb = 0; sb < 2 && !facing; ++sb)
            for (int sc = 0; sc < 2 && !facing; ++sc) {
              const auto& ha = ws[a].halfspace(sa == 0);
              const auto& hb = ws[b].halfspace(sb == 0);
              const auto& hc = ws[c].halfspace(sc == 0);
              facing = disjoint(ha, hb) && disjoint(ha, hc) && disjoint(hb, hc);
            }
        if (facing) out.push_back({a, b, c});
      }
    }
  return out;
}

std::vector<int> longest_chain(const CubeComplex& X,
                               const std::vector<Hyperplane>& ws) {
  (void)X;
  const int k = static_cast<int>(ws.size());
  const int n2 = 2 * k;  // halfspace h = 2*w + (0 plus, 1 minus)
  auto hs = [&](int h) -> const std::vector<int>& {
    return ws[h / 2].halfspace(h % 2 == 0);
  };
  auto label = [&](int h) { return halfspace_label(ws[h / 2], h % 2 == 0); };

  std::vector<std::vector<int>> above(n2);  // strict containments h < h'
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b)
      if (a != b && hs(a).size() < hs(b).size() && subset(hs(a), hs(b)))
        above[a].push_back(b);

  // Longest chain starting at h, memoized.
  std::vector<int> len(n2, -1);
  auto chain_len = [&](auto&& self, int h) -> int {
    if (len[h] >= 0) return len[h];
    int best = 1;
    for (int b : above[h]) best = std::max(best, 1 + self(self, b));
    return len[h] = best;
  };
  int lmax = 0;
  for (int h = 0; h < n2; ++h) lmax = std::max(lmax, chain_len(chain_len, h));

  // Reconstruct the lexicographically smallest maximum chain by labels.
  std::vector<int> out;
  int remaining = lmax;
  std::vector<int> candidates;
  for (int h = 0; h < n2; ++h)
    if (len[h] == remaining) candidates.push_back(h);
  while (remaining > 0) {
    int pick = candidates.front();
    for (int h : candidates)
      if (label(h) < label(pick)) pick = h;
    out.push_back(pick / 2);
    --remaining;
    candidates.clear();
    for (int b : above[pick])
      if (len[b] == remaining) candidates.push_back(b);
  }
  return out;
}

int hyperplane_distance(const CubeComplex& X, const Hyperplane& a,
                        const Hyperplane& b) {
  // Crossing hyperplanes are at distance 0; otherwise the midcube copies
  // are one step inside each carrier, so the carrier gap counts plus one.
  if (&a == &b || a.id == b.id || is_transverse(X, a, b)) return 0;
  auto ca = a.carrier_all(), cb = b.carrier_all();
  int best = X.diameter();
  for (int u : ca)
    for (int v : cb) best = std::min(best, X.dist(u, v));
  return best + 1;
}

Pocset pocset_of(const CubeComplex& X, const std::vector<Hyperplane>& ws) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> involution, order;
  for (const auto& w : ws) {
    elements.push_back(halfspace_label(w, true));
    elements.push_back(halfspace_label(w, false));
    involution.emplace_back(elements[elements.size() - 2], elements.back());
  }
  const int k = static_cast<int>(ws.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      for (bool si : {true, false})
        for (bool sj : {true, false})
          if (subset(ws[i].halfspace(si), ws[j].halfspace(sj)))
            order.emplace_back(halfspace_label(ws[i], si),
                               halfspace_label(ws[j], sj));
    }
  Pocset P = Pocset::build(std::move(elements), involution, order);
  if (P.dimension() != std::max(X.dimension(), 0) && X.size() > 1)
    fail(Errc::InternalCheckFailed, "pocset dimension mismatch");
  return P;
}

namespace {

// Finite-scale hypothesis surrogates for the corner search report.
bool essential_surrogate(const std::vector<Hyperplane>& ws) {
  for (const auto& w : ws) {
    if (w.plus.size() == w.carrier_plus.size()) return false;
    if (w.minus.size() == w.carrier_minus.size()) return false;
  }
  return true;
}

bool irreducible_surrogate(const CubeComplex& X,
                           const std::vector<Hyperplane>& ws) {
  const int k = static_cast<int>(ws.size());
  if (k == 0) return true;
  std::vector<int> comp(k, -1);
  std::queue<int> q;
  comp[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b = 0; b < k; ++b)
      if (comp[b] < 0 && !is_transverse(X, ws[a], ws[b])) {
        comp[b] = 0;
        q.push(b);
      }
  }
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool hyperplane_essential_surrogate(const CubeComplex& X,
                                    const std::vector<Hyperplane>& ws) {
  // For each transverse pair (u, w): inside w, each side of the wall u n w
  // must contain a dual edge of w away from the crossing squares.
  for (const auto& w : ws)
    for (const auto& u : ws) {
      if (u.id == w.id || !is_transverse(X, u, w)) continue;
      for (bool side : {true, false}) {
        const auto& hu = u.halfspace(side);
        bool found_deep = false;
        for (const auto& [a, b] : w.dual_edges) {
          if (!std::binary_search(hu.begin(), hu.end(), a) ||
              !std::binary_search(hu.begin(), hu.end(), b))
            continue;
          // Deep if the edge endpoints are off the carrier of u.
          bool on_cut =
              std::binary_search(u.carrier_plus.begin(), u.carrier_plus.end(), a) ||
              std::binary_search(u.carrier_minus.begin(), u.carrier_minus.end(), a);
          if (!on_cut) {
            found_deep = true;
            break;
          }
        }
        if (!found_deep) return false;
      }
    }
  return true;
}

}  // namespace

CornerSearch corner_halfspace(const CubeComplex& X,
                              const std::vector<Hyperplane>& ws, int w1,
                              bool h1_plus, int w2, bool h2_plus) {
  if (w1 == w2) fail(Errc::SameHyperplane, ws[w1].id);
  if (!is_transverse(X, ws[w1], ws[w2]))
    fail(Errc::NotTransverse, ws[w1].id + " vs " + ws[w2].id);

  const auto& h1 = ws[w1].halfspace(h1_plus);
  const auto& h2 = ws[w2].halfspace(h2_plus);
  std::vector<int> inter;
  std::set_intersection(h1.begin(), h1.end(), h2.begin(), h2.end(),
                        std::back_inserter(inter));

  CornerSearch out;
  std::string best;
  for (const auto& w : ws)
    for (bool side : {true, false}) {
      if (&w == &ws[w1] || &w == &ws[w2]) continue;
      if (subset(w.halfspace(side), inter)) {
        auto lab = halfspace_label(w, side);
        if (best.empty() || lab < best) best = lab;
      }
    }
  if (!best.empty()) {
    out.halfspace = best;
    return out;
  }
  if (!essential_surrogate(ws)) out.failed_hypotheses.push_back("essential");
  if (!irreducible_surrogate(X, ws))
    out.failed_hypotheses.push_back("irreducible");
  if (!hyperplane_essential_surrogate(X, ws))
    out.failed_hypotheses.push_back("hyperplane-essential");
  return out;
}

AutomorphismReport check_automorphism(
    const CubeComplex& X, const std::vector<Hyperplane>& ws,
    const std::map<std::string, std::string>& perm) {
  const int n = X.size();
  AutomorphismReport rep;
  rep.permutation.assign(n, -1);
  std::vector<bool> hit(n, false);
  for (const auto& [a, b] : perm) {
    int u = X.index(a), v = X.index(b);
    rep.permutation[u] = v;
    if (hit[v]) fail(Errc::NotAutomorphism, "not injective at " + b);
    hit[v] = true;
  }
  for (int v = 0; v < n; ++v)
    if (rep.permutation[v] < 0)
      fail(Errc::NotAutomorphism, "vertex unmapped: " + X.name(v));
  for (const auto& [u, v] : X.edges())
    if (!X.adjacent(rep.permutation[u], rep.permutation[v]))
      fail(Errc::NotAutomorphism,
           "edge " + X.name(u) + "-" + X.name(v) + " not preserved");

  // Induced hyperplane permutation via canonical dual edges.
  const int k = static_cast<int>(ws.size());
  std::vector<int> wperm(k);
  for (int i = 0; i < k; ++i) {
    const auto& [a, b] = ws[i].dual_edges.front();
    wperm[i] = hyperplane_of_edge(X, ws, rep.permutation[a], rep.permutation[b]);
  }
  std::vector<bool> seen(k, false);
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[j]; j = wperm[j]) {
      seen[j] = true;
      orbit.push_back(j);
    }
    std::sort(orbit.begin(), orbit.end());
    rep.hyperplane_orbits.push_back(std::move(orbit));
  }

  auto inversions_of = [&](const std::vector<int>& p) {
    std::vector<int> inv;
    for (int i = 0; i < k; ++i) {
      const auto& [a, b] = ws[i].dual_edges.front();
      if (hyperplane_of_edge(X, ws, p[a], p[b]) != i) continue;
      // Same hyperplane; inversion iff the plus side maps into minus.
      int img = p[ws[i].plus.front()];
      if (std::binary_search(ws[i].minus.begin(), ws[i].minus.end(), img))
        inv.push_back(i);
    }
    return inv;
  };
  rep.inversions = inversions_of(rep.permutation);

  // Order of the permutation = lcm of vertex cycle lengths.
  std::vector<bool> vseen(n, false);
  long order = 1;
  for (int v = 0; v < n; ++v) {
    if (vseen[v]) continue;
    long len = 0;
    for (int u = v; !vseen[u]; u = rep.permutation[u]) {
      vseen[u] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  rep.order = static_cast<int>(order);

  std::vector<int> power(n);
  std::iota(power.begin(), power.end(), 0);
  rep.stable_without_inversions = true;
  for (int p = 1; p <= rep.order; ++p) {
    for (int v = 0; v < n; ++v) power[v] = rep.permutation[power[v]];
    // power now holds g^p applied after the initial identity shift.
    std::vector<int> gp(n);
    for (int v = 0; v < n; ++v) gp[v] = power[v];
    bool clean = inversions_of(gp).empty();
    rep.power_without_inversions.push_back(clean);
    if (!clean) rep.stable_without_inversions = false;
  }
  return rep;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
no_cross_transversality_partition(const CubeComplex& X,
                                  const std::vector<Hyperplane>& ws) {
  const int k = static_cast<int>(ws.size());
  if (k == 0) return std::nullopt;
  std::vector<int> comp(k, -1);
  std::queue<int> q;
  comp[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b = 0; b < k; ++b)
      if (comp[b] < 0 && !is_transverse(X, ws[a], ws[b])) {
        comp[b] = 0;
        q.push(b);
      }
  }
  std::vector<int> A, B;
  for (int i = 0; i < k; ++i) (comp[i] == 0 ? A : B).push_back(i);
  if (B.empty()) return std::nullopt;
  return std::make_pair(A, B);
}

}  // namespace cubecomb
