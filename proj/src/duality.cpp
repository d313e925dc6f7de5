#include "cubecomb/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cubecomb {

bool Ultrafilter::contains(int e) const {
  return std::binary_search(chosen.begin(), chosen.end(), e);
}

namespace {

std::vector<std::string> labels_of(const Pocset& P, const Ultrafilter& u) {
  std::vector<std::string> out;
  for (int e : u.chosen) out.push_back(P.label(e));
  std::sort(out.begin(), out.end());
  return out;
}

// Consistency of adding c to a partial choice: no a with a <= c* or c <= a*.
bool consistent_with(const Pocset& P, const std::vector<int>& chosen, int c) {
  if (P.leq(c, P.star(c))) return false;
  for (int a : chosen)
    if (P.leq(a, P.star(c)) || P.leq(c, P.star(a))) return false;
  return true;
}

}  // namespace

std::vector<Ultrafilter> all_ultrafilters(const Pocset& P,
                                          const EnumerateOptions& opts) {
  auto reps = P.pair_reps();
  std::vector<Ultrafilter> out;
  std::vector<int> chosen;
  long nodes = 0;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (++nodes > opts.node_cap)
      fail(Errc::TooLarge, "ultrafilter search exceeded node cap");
    if (i == reps.size()) {
      Ultrafilter u{chosen};
      std::sort(u.chosen.begin(), u.chosen.end());
      out.push_back(std::move(u));
      return;
    }
    for (int c : {reps[i], P.star(reps[i])})
      if (consistent_with(P, chosen, c)) {
        chosen.push_back(c);
        self(self, i + 1);
        chosen.pop_back();
      }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [&](const Ultrafilter& a, const Ultrafilter& b) {
              return labels_of(P, a) < labels_of(P, b);
            });
  return out;
}

std::vector<int> min_elements(const Pocset& P, const Ultrafilter& sigma) {
  std::vector<int> out;
  for (int a : sigma.chosen) {
    bool minimal = true;
    for (int b : sigma.chosen)
      if (b != a && P.leq(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

Ultrafilter ultrafilter_from_transverse_family(const Pocset& P,
                                               const std::vector<int>& tau) {
  for (size_t i = 0; i < tau.size(); ++i)
    for (size_t j = i + 1; j < tau.size(); ++j)
      if (!P.transverse(tau[i], tau[j]))
        fail(Errc::NotTransverse,
             P.label(tau[i]) + " vs " + P.label(tau[j]));
  std::set<int> in_tau;
  for (int t : tau) {
    in_tau.insert(t);
    in_tau.insert(P.star(t));
  }
  for (int e = 0; e < P.size(); ++e) {
    if (in_tau.count(e)) continue;
    bool extends = true;
    for (int t : tau)
      if (!P.transverse(e, t)) {
        extends = false;
        break;
      }
    if (extends) fail(Errc::NotMaximal, "extending element " + P.label(e));
  }

  // Force tau and everything above it; for each remaining pair take the
  // element that is not strictly below a tau element.
  std::set<int> forced;
  for (int t : tau)
    for (int e = 0; e < P.size(); ++e)
      if (P.leq(t, e)) forced.insert(e);
  Ultrafilter sigma;
  for (int r : P.pair_reps()) {
    int s = P.star(r);
    if (forced.count(r))
      sigma.chosen.push_back(r);
    else if (forced.count(s))
      sigma.chosen.push_back(s);
    else {
      auto strictly_below_tau = [&](int c) {
        for (int t : tau)
          if (c != t && P.leq(c, t)) return true;
        return false;
      };
      if (strictly_below_tau(r))
        sigma.chosen.push_back(s);
      else if (strictly_below_tau(s))
        sigma.chosen.push_back(r);
      else
        fail(Errc::InternalCheckFailed, "unresolvable pair " + P.label(r));
    }
  }
  std::sort(sigma.chosen.begin(), sigma.chosen.end());

  // Uniqueness check by enumeration.
  auto mins = min_elements(P, sigma);
  for (int t : tau)
    if (!std::binary_search(mins.begin(), mins.end(), t))
      fail(Errc::InternalCheckFailed, "tau not minimal in constructed sigma");
  int matches = 0;
  for (const auto& u : all_ultrafilters(P)) {
    auto m = min_elements(P, u);
    bool all_in = true;
    for (int t : tau)
      if (std::find(m.begin(), m.end(), t) == m.end()) {
        all_in = false;
        break;
      }
    if (all_in) ++matches;
  }
  if (matches != 1)
    fail(Errc::InternalCheckFailed,
         "ultrafilter not unique: " + std::to_string(matches));
  return sigma;
}

DualComplex dual_complex(const Pocset& P, const EnumerateOptions& opts) {
  DualComplex out;
  out.ultrafilters = all_ultrafilters(P, opts);
  const int n = static_cast<int>(out.ultrafilters.size());
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("u" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> diff;
      std::set_symmetric_difference(
          out.ultrafilters[i].chosen.begin(), out.ultrafilters[i].chosen.end(),
          out.ultrafilters[j].chosen.begin(), out.ultrafilters[j].chosen.end(),
          std::back_inserter(diff));
      if (diff.size() == 2) edges.emplace_back(names[i], names[j]);
    }
  out.complex = validate_complex(names, edges);
  return out;
}

WallspaceDual wallspace_dual(const Wallspace& W, const EnumerateOptions& opts) {
  std::vector<std::string> points(W.points);
  std::sort(points.begin(), points.end());
  if (points.empty()) fail(Errc::InconsistentWall, "no points");
  for (size_t i = 1; i < points.size(); ++i)
    if (points[i] == points[i - 1])
      fail(Errc::NotSimple, "duplicate point " + points[i]);

  auto side_set = [&](const std::vector<std::string>& side) {
    std::set<std::string> s;
    for (const auto& p : side) {
      if (!std::binary_search(points.begin(), points.end(), p))
        fail(Errc::InconsistentWall, "unknown point " + p);
      s.insert(p);
    }
    return s;
  };

  std::vector<std::pair<std::set<std::string>, std::set<std::string>>> walls;
  std::set<std::set<std::string>> seen_sides;
  for (const auto& [plus, minus] : W.walls) {
    auto sp = side_set(plus), sm = side_set(minus);
    if (sp.empty() || sm.empty()) fail(Errc::InconsistentWall, "empty side");
    if (sp.size() + sm.size() != points.size())
      fail(Errc::InconsistentWall, "sides do not partition the points");
    for (const auto& p : sp)
      if (sm.count(p)) fail(Errc::InconsistentWall, "overlapping sides at " + p);
    if (!seen_sides.insert(sp).second || !seen_sides.insert(sm).second)
      fail(Errc::DuplicateWall, "duplicate bipartition");
    walls.emplace_back(std::move(sp), std::move(sm));
  }

  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> involution, order;
  auto lab = [](size_t i, bool plus) {
    return "w" + std::to_string(i) + (plus ? "+" : "-");
  };
  for (size_t i = 0; i < walls.size(); ++i) {
    elements.push_back(lab(i, true));
    elements.push_back(lab(i, false));
    involution.emplace_back(lab(i, true), lab(i, false));
  }
  auto side_of = [&](size_t i, bool plus) -> const std::set<std::string>& {
    return plus ? walls[i].first : walls[i].second;
  };
  for (size_t i = 0; i < walls.size(); ++i)
    for (size_t j = 0; j < walls.size(); ++j) {
      if (i == j) continue;
      for (bool si : {true, false})
        for (bool sj : {true, false})
          if (std::includes(side_of(j, sj).begin(), side_of(j, sj).end(),
                            side_of(i, si).begin(), side_of(i, si).end()))
            order.emplace_back(lab(i, si), lab(j, sj));
    }

  WallspaceDual out{.dual = {}, .pocset = Pocset::build(std::move(elements),
                                                        involution, order),
                    .principal_vertex = {}};
  out.dual = dual_complex(out.pocset, opts);

  for (const auto& p : W.points) {
    Ultrafilter sigma;
    for (size_t i = 0; i < walls.size(); ++i)
      sigma.chosen.push_back(
          out.pocset.index(lab(i, walls[i].first.count(p) > 0)));
    std::sort(sigma.chosen.begin(), sigma.chosen.end());
    auto it = std::find(out.dual.ultrafilters.begin(),
                        out.dual.ultrafilters.end(), sigma);
    if (it == out.dual.ultrafilters.end())
      fail(Errc::InternalCheckFailed, "principal ultrafilter missing for " + p);
    out.principal_vertex.push_back(
        "u" + std::to_string(it - out.dual.ultrafilters.begin()));
  }
  return out;
}

Isomorphism roundtrip_check(const CubeComplex& X) {
  auto ws = hyperplanes(X);
  auto P = pocset_of(X, ws);
  auto D = dual_complex(P);
  if (D.complex.size() != X.size())
    fail(Errc::NoIsomorphism,
         "vertex counts differ: " + std::to_string(X.size()) + " vs " +
             std::to_string(D.complex.size()));

  Isomorphism iso;
  iso.to.assign(X.size(), -1);
  for (int v = 0; v < X.size(); ++v) {
    Ultrafilter sigma;
    for (const auto& w : ws) {
      bool plus = std::binary_search(w.plus.begin(), w.plus.end(), v);
      sigma.chosen.push_back(P.index(halfspace_label(w, plus)));
    }
    std::sort(sigma.chosen.begin(), sigma.chosen.end());
    auto it = std::find(D.ultrafilters.begin(), D.ultrafilters.end(), sigma);
    if (it == D.ultrafilters.end())
      fail(Errc::NoIsomorphism, "principal ultrafilter missing for " + X.name(v));
    iso.to[v] = D.complex.index(
        "u" + std::to_string(it - D.ultrafilters.begin()));
  }
  std::vector<bool> hit(X.size(), false);
  for (int t : iso.to) {
    if (hit[t]) fail(Errc::NoIsomorphism, "principal map not injective");
    hit[t] = true;
  }
  for (int u = 0; u < X.size(); ++u)
    for (int v = u + 1; v < X.size(); ++v)
      if (X.adjacent(u, v) != D.complex.adjacent(iso.to[u], iso.to[v]))
        fail(Errc::NoIsomorphism,
             "adjacency mismatch at " + X.name(u) + "," + X.name(v));
  return iso;
}

std::optional<Isomorphism> complexes_isomorphic(const CubeComplex& X,
                                                const CubeComplex& Y) {
  if (X.size() != Y.size() || X.edges().size() != Y.edges().size())
    return std::nullopt;
  const int n = X.size();

  auto signature = [](const CubeComplex& G, int v) {
    std::vector<int> sig;
    sig.push_back(static_cast<int>(G.neighbors(v).size()));
    std::vector<int> ds;
    for (int u = 0; u < G.size(); ++u) ds.push_back(G.dist(v, u));
    std::sort(ds.begin(), ds.end());
    sig.insert(sig.end(), ds.begin(), ds.end());
    return sig;
  };
  std::vector<std::vector<int>> sx(n), sy(n);
  for (int v = 0; v < n; ++v) {
    sx[v] = signature(X, v);
    sy[v] = signature(Y, v);
  }
  {
    auto a = sx, b = sy;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Map vertices in BFS order from vertex 0 for early adjacency pruning.
  std::vector<int> order;
  {
    std::vector<bool> seen(n, false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (size_t i = 0; i < queue.size(); ++i) {
      order.push_back(queue[i]);
      for (int w : X.neighbors(queue[i]))
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
  }

  std::vector<int> to(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == order.size()) return true;
    int v = order[i];
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || sx[v] != sy[cand]) continue;
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) {
        int u = order[j];
        if (X.adjacent(u, v) != Y.adjacent(to[u], cand)) ok = false;
        if (X.dist(u, v) != Y.dist(to[u], cand)) ok = false;
      }
      if (!ok) continue;
      to[v] = cand;
      used[cand] = true;
      if (self(self, i + 1)) return true;
      used[cand] = false;
      to[v] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return Isomorphism{to};
}

}  // namespace cubecomb
