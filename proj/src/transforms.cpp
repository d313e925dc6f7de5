#include "cubecomb/transforms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cubecomb {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains_all(const std::vector<int>& side, const std::vector<int>& vs) {
  for (int v : vs)
    if (!std::binary_search(side.begin(), side.end(), v)) return false;
  return true;
}

bool incident_to_dual_edge(const Hyperplane& w, int v) {
  for (const auto& [a, b] : w.dual_edges)
    if (a == v || b == v) return true;
  return false;
}

}  // namespace

SubdivisionResult subdivide(const CubeComplex& X) {
  // One vertex per cube; a cube's name is its vertex names joined with '+'.
  struct Cell {
    int dim;
    std::vector<int> verts;
    std::string name;
  };
  std::vector<Cell> cells;
  for (int k = 0; k <= X.dimension(); ++k)
    for (const auto& c : X.cubes()[k]) {
      std::string name = X.name(c[0]);
      for (size_t i = 1; i < c.size(); ++i) name += "+" + X.name(c[i]);
      cells.push_back({k, c, name});
    }
  {
    std::set<std::string> seen;
    for (const auto& c : cells)
      if (!seen.insert(c.name).second)
        fail(Errc::InternalCheckFailed, "subdivision name clash: " + c.name);
  }

  std::vector<std::string> names;
  for (const auto& c : cells) names.push_back(c.name);
  std::vector<std::pair<std::string, std::string>> edges;
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = 0; j < cells.size(); ++j)
      if (cells[j].dim == cells[i].dim + 1 &&
          subset(cells[i].verts, cells[j].verts))
        edges.emplace_back(cells[i].name, cells[j].name);

  SubdivisionResult out{.subdivided = validate_complex(names, edges),
                        .vertex_embedding = {},
                        .hyperplane_cover = {},
                        .cell_of = {}};

  out.cell_of.resize(cells.size());
  for (const auto& c : cells) out.cell_of[out.subdivided.index(c.name)] = c.verts;
  out.vertex_embedding.resize(X.size());
  for (int v = 0; v < X.size(); ++v)
    out.vertex_embedding[v] = out.subdivided.index(X.name(v));
  for (int u = 0; u < X.size(); ++u)
    for (int v = 0; v < X.size(); ++v)
      if (out.subdivided.dist(out.vertex_embedding[u],
                              out.vertex_embedding[v]) != 2 * X.dist(u, v))
        fail(Errc::InternalCheckFailed, "subdivision distance not doubled at " +
                                            X.name(u) + "," + X.name(v));

  auto ws = hyperplanes(X);
  auto ws2 = hyperplanes(out.subdivided);
  std::map<std::string, const Cell*> cell_of;
  for (const auto& c : cells) cell_of[c.name] = &c;
  for (const auto& w2 : ws2) {
    int orig = -1;
    for (const auto& [p, q] : w2.dual_edges) {
      const Cell* cp = cell_of.at(out.subdivided.name(p));
      const Cell* cq = cell_of.at(out.subdivided.name(q));
      if (cp->dim > cq->dim) std::swap(cp, cq);
      // cq = cp x (an original edge); recover that edge's hyperplane.
      int u = cp->verts[0], v = -1;
      for (int cand : cq->verts)
        if (!std::binary_search(cp->verts.begin(), cp->verts.end(), cand) &&
            X.adjacent(u, cand))
          v = cand;
      if (v == -1)
        fail(Errc::InternalCheckFailed, "face pair without edge direction");
      int h = hyperplane_of_edge(X, ws, u, v);
      if (orig == -1) orig = h;
      if (orig != h)
        fail(Errc::InternalCheckFailed,
             "subdivided hyperplane covers two originals: " + w2.id);
    }
    out.hyperplane_cover.push_back(orig);
  }
  std::vector<int> fiber(ws.size(), 0);
  for (int h : out.hyperplane_cover) ++fiber[h];
  for (size_t i = 0; i < ws.size(); ++i)
    if (fiber[i] != 2)
      fail(Errc::InternalCheckFailed,
           "hyperplane cover fiber of " + ws[i].id + " has size " +
               std::to_string(fiber[i]));
  return out;
}

QuotientResult restriction_quotient(const CubeComplex& X,
                                    const std::vector<int>& keep) {
  auto ws = hyperplanes(X);
  std::vector<int> kept(keep);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (int k : kept)
    if (k < 0 || k >= static_cast<int>(ws.size()))
      fail(Errc::NotSimple, "hyperplane index out of range: " + std::to_string(k));

  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> involution, order;
  for (int i : kept) {
    elements.push_back(halfspace_label(ws[i], true));
    elements.push_back(halfspace_label(ws[i], false));
    involution.emplace_back(elements[elements.size() - 2], elements.back());
  }
  for (int i : kept)
    for (int j : kept) {
      if (i == j) continue;
      for (bool si : {true, false})
        for (bool sj : {true, false})
          if (subset(ws[i].halfspace(si), ws[j].halfspace(sj)))
            order.emplace_back(halfspace_label(ws[i], si),
                               halfspace_label(ws[j], sj));
    }
  Pocset P = Pocset::build(std::move(elements), involution, order);
  DualComplex D = dual_complex(P);

  QuotientResult out{.quotient = D.complex, .vertex_map = {}};
  std::vector<bool> hit(D.ultrafilters.size(), false);
  for (int v = 0; v < X.size(); ++v) {
    Ultrafilter sigma;
    for (int i : kept) {
      bool plus = std::binary_search(ws[i].plus.begin(), ws[i].plus.end(), v);
      sigma.chosen.push_back(P.index(halfspace_label(ws[i], plus)));
    }
    std::sort(sigma.chosen.begin(), sigma.chosen.end());
    auto it = std::find(D.ultrafilters.begin(), D.ultrafilters.end(), sigma);
    if (it == D.ultrafilters.end())
      fail(Errc::InternalCheckFailed,
           "vertex " + X.name(v) + " realizes no kept-side ultrafilter");
    size_t k = it - D.ultrafilters.begin();
    hit[k] = true;
    out.vertex_map.push_back(D.complex.index("u" + std::to_string(k)));
  }
  for (size_t k = 0; k < hit.size(); ++k)
    if (!hit[k])
      fail(Errc::InternalCheckFailed,
           "quotient vertex u" + std::to_string(k) + " not realized");
  return out;
}

bool strongly_parallel(const CubeComplex& X, const std::vector<Hyperplane>& ws,
                       int w1, int w2) {
  if (w1 == w2) fail(Errc::SameHyperplane, ws[w1].id);
  const Hyperplane& a = ws[w1];
  const Hyperplane& b = ws[w2];
  if (is_transverse(X, a, b)) return false;
  if (!separator_set(X, ws, a.carrier_all(), b.carrier_all()).empty())
    return false;
  for (size_t k = 0; k < ws.size(); ++k) {
    if (static_cast<int>(k) == w1 || static_cast<int>(k) == w2) continue;
    if (is_transverse(X, ws[k], a) != is_transverse(X, ws[k], b)) return false;
  }
  // Slab between them: the side of each containing the other's carrier.
  auto side_toward = [&](const Hyperplane& w,
                         const Hyperplane& other) -> const std::vector<int>* {
    auto carrier = other.carrier_all();
    if (contains_all(w.plus, carrier)) return &w.plus;
    if (contains_all(w.minus, carrier)) return &w.minus;
    return nullptr;
  };
  const auto* h1 = side_toward(a, b);
  const auto* h2 = side_toward(b, a);
  if (!h1 || !h2) return false;
  for (int v : *h1) {
    if (!std::binary_search(h2->begin(), h2->end(), v)) continue;
    if (!incident_to_dual_edge(a, v) || !incident_to_dual_edge(b, v))
      return false;
  }
  return true;
}

ParaPartition para_classes(const CubeComplex& X,
                           const std::vector<Hyperplane>& ws) {
  const int W = static_cast<int>(ws.size());
  // Halfspace (i, plus) has id 2i, (i, minus) has id 2i+1.
  auto hid = [](int i, bool plus) { return 2 * i + (plus ? 0 : 1); };
  UnionFind uf(2 * W);
  UnionFind hyp_uf(std::max(W, 1));
  auto toward = [&](int i, int j) {
    // plus-ness of the side of ws[i] containing ws[j].
    auto carrier = ws[j].carrier_all();
    if (contains_all(ws[i].plus, carrier)) return true;
    if (contains_all(ws[i].minus, carrier)) return false;
    fail(Errc::InternalCheckFailed, "strongly parallel pair without a slab");
  };
  for (int i = 0; i < W; ++i)
    for (int j = i + 1; j < W; ++j)
      if (strongly_parallel(X, ws, i, j)) {
        bool si = toward(i, j), sj = toward(j, i);
        // The far side of each pairs with the near side of the other.
        uf.unite(hid(i, !si), hid(j, sj));
        uf.unite(hid(j, !sj), hid(i, si));
        hyp_uf.unite(i, j);
      }

  ParaPartition out;
  auto label_of = [&](int id) {
    return halfspace_label(ws[id / 2], id % 2 == 0);
  };
  std::map<std::string, std::vector<int>> by_root_label;
  {
    std::map<int, std::vector<int>> by_root;
    for (int id = 0; id < 2 * W; ++id) by_root[uf.find(id)].push_back(id);
    for (auto& [root, ids] : by_root) {
      std::vector<std::string> labs;
      for (int id : ids) labs.push_back(label_of(id));
      std::sort(labs.begin(), labs.end());
      by_root_label[labs.front()] = ids;
    }
  }
  std::vector<std::vector<int>> class_ids;  // halfspace ids per class
  for (auto& [lab, ids] : by_root_label) {
    std::vector<std::string> labs;
    for (int id : ids) labs.push_back(label_of(id));
    std::sort(labs.begin(), labs.end());
    out.halfspace_classes.push_back(std::move(labs));
    class_ids.push_back(ids);
  }
  const int C = static_cast<int>(class_ids.size());
  std::vector<int> class_of(2 * W, -1);
  for (int c = 0; c < C; ++c)
    for (int id : class_ids[c]) class_of[id] = c;

  // The involution must permute classes.
  out.class_star.assign(C, -1);
  for (int c = 0; c < C; ++c) {
    for (int id : class_ids[c]) {
      int sc = class_of[id ^ 1];
      if (out.class_star[c] == -1) out.class_star[c] = sc;
      if (out.class_star[c] != sc)
        fail(Errc::ParaStructureViolation,
             "involution splits the class of " + label_of(id));
    }
  }

  // Each class must be a chain under inclusion.
  for (int c = 0; c < C; ++c)
    for (size_t x = 0; x < class_ids[c].size(); ++x)
      for (size_t y = x + 1; y < class_ids[c].size(); ++y) {
        int a = class_ids[c][x], b = class_ids[c][y];
        const auto& ha = ws[a / 2].halfspace(a % 2 == 0);
        const auto& hb = ws[b / 2].halfspace(b % 2 == 0);
        if (!subset(ha, hb) && !subset(hb, ha))
          fail(Errc::NonChainClass, label_of(a) + " vs " + label_of(b));
      }

  // Hyperplane classes (transitive closure of the pairwise relation).
  {
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < W; ++i) by_root[hyp_uf.find(i)].push_back(i);
    for (auto& [root, members] : by_root)
      out.hyperplane_classes.push_back(members);
    std::sort(out.hyperplane_classes.begin(), out.hyperplane_classes.end());
  }
  // An outside hyperplane is transverse to all members or to none.
  for (const auto& cls : out.hyperplane_classes)
    for (int u = 0; u < W; ++u) {
      if (std::binary_search(cls.begin(), cls.end(), u)) continue;
      int t = 0;
      for (int m : cls)
        if (is_transverse(X, ws[u], ws[m])) ++t;
      if (t != 0 && t != static_cast<int>(cls.size()))
        fail(Errc::ParaStructureViolation,
             ws[u].id + " is transverse to part of the class of " +
                 ws[cls.front()].id);
    }

  // Quotient pocset on classes.
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> involution, order;
  for (int c = 0; c < C; ++c) elements.push_back(out.halfspace_classes[c][0]);
  for (int c = 0; c < C; ++c)
    if (c < out.class_star[c])
      involution.emplace_back(elements[c], elements[out.class_star[c]]);
  for (int c = 0; c < C; ++c)
    for (int d = 0; d < C; ++d) {
      if (c == d) continue;
      bool le = false;
      for (int a : class_ids[c]) {
        for (int b : class_ids[d])
          if (subset(ws[a / 2].halfspace(a % 2 == 0),
                     ws[b / 2].halfspace(b % 2 == 0))) {
            le = true;
            break;
          }
        if (le) break;
      }
      if (le) order.emplace_back(elements[c], elements[d]);
    }
  out.quotient = Pocset::build(std::move(elements), involution, order);
  return out;
}

CompressResult compress(const CubeComplex& X) {
  auto ws = hyperplanes(X);
  auto pp = para_classes(X, ws);
  auto D = dual_complex(pp.quotient);
  auto ws2 = hyperplanes(D.complex);
  for (size_t i = 0; i < ws2.size(); ++i)
    for (size_t j = i + 1; j < ws2.size(); ++j)
      if (strongly_parallel(D.complex, ws2, static_cast<int>(i),
                            static_cast<int>(j)))
        fail(Errc::InternalCheckFailed,
             "compression left a strongly parallel pair: " + ws2[i].id +
                 ", " + ws2[j].id);
  return {std::move(D.complex), std::move(pp)};
}

CubeComplex product_complex(const CubeComplex& A, const CubeComplex& B) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  auto pname = [&](int a, int b) { return A.name(a) + "," + B.name(b); };
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < B.size(); ++b) names.push_back(pname(a, b));
  for (int a = 0; a < A.size(); ++a)
    for (const auto& [u, v] : B.edges()) edges.emplace_back(pname(a, u), pname(a, v));
  for (int b = 0; b < B.size(); ++b)
    for (const auto& [u, v] : A.edges()) edges.emplace_back(pname(u, b), pname(v, b));
  return validate_complex(names, edges);
}

DeRhamDecomposition derham(const CubeComplex& X) {
  auto ws = hyperplanes(X);
  const int W = static_cast<int>(ws.size());
  UnionFind uf(std::max(W, 1));
  for (int i = 0; i < W; ++i)
    for (int j = i + 1; j < W; ++j)
      if (!is_transverse(X, ws[i], ws[j])) uf.unite(i, j);

  DeRhamDecomposition out{.classes = {},
                          .factors = {},
                          .product = validate_complex({"p"}, {}),
                          .witness = {}};
  {
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < W; ++i) by_root[uf.find(i)].push_back(i);
    for (auto& [root, members] : by_root) out.classes.push_back(members);
    std::sort(out.classes.begin(), out.classes.end());
  }
  for (const auto& cls : out.classes)
    out.factors.push_back(restriction_quotient(X, cls).quotient);

  if (!out.factors.empty()) {
    out.product = out.factors[0];
    for (size_t i = 1; i < out.factors.size(); ++i)
      out.product = product_complex(out.product, out.factors[i]);
  }
  auto iso = complexes_isomorphic(X, out.product);
  if (!iso)
    fail(Errc::ProductReconstructionFailed,
         "no isomorphism between the complex and its factor product");
  out.witness = *iso;
  return out;
}

TrimResult trim_shallow(const CubeComplex& X, int r) {
  TrimResult out{.trimmed = X, .removed = {}};
  for (;;) {
    auto ws = hyperplanes(out.trimmed);
    auto shallow = [&](const Hyperplane& w, bool plus) {
      for (int v : w.halfspace(plus)) {
        int d = out.trimmed.size();
        for (int c : w.carrier(plus)) d = std::min(d, out.trimmed.dist(v, c));
        if (d > r) return false;
      }
      return true;
    };
    std::vector<int> keep;
    bool changed = false;
    for (size_t i = 0; i < ws.size(); ++i) {
      if (shallow(ws[i], true) || shallow(ws[i], false)) {
        out.removed.push_back(ws[i].id);
        changed = true;
      } else {
        keep.push_back(static_cast<int>(i));
      }
    }
    if (!changed) return out;
    out.trimmed = restriction_quotient(out.trimmed, keep).quotient;
  }
}

}  // namespace cubecomb
