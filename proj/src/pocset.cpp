#include "cubecomb/pocset.hpp"

#include <algorithm>
#include <map>

namespace cubecomb {

Pocset Pocset::build(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& involution,
    const std::vector<std::pair<std::string, std::string>>& order) {
  Pocset P;
  P.labels_ = std::move(elements);
  std::sort(P.labels_.begin(), P.labels_.end());
  std::map<std::string, int> idx;
  for (int i = 0; i < P.size(); ++i) {
    if (idx.count(P.labels_[i]))
      fail(Errc::NotSimple, "duplicate pocset element: " + P.labels_[i]);
    idx[P.labels_[i]] = i;
  }
  const int n = P.size();

  auto find = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it == idx.end()) fail(Errc::NotSimple, "unknown pocset element: " + s);
    return it->second;
  };

  P.star_.assign(n, -1);
  for (const auto& [a, b] : involution) {
    int i = find(a), j = find(b);
    if (i == j) fail(Errc::NotSimple, "involution fixed point: " + a);
    if ((P.star_[i] != -1 && P.star_[i] != j) ||
        (P.star_[j] != -1 && P.star_[j] != i))
      fail(Errc::NotSimple, "inconsistent involution at " + a);
    P.star_[i] = j;
    P.star_[j] = i;
  }
  for (int i = 0; i < n; ++i)
    if (P.star_[i] == -1)
      fail(Errc::NotSimple, "unpaired element: " + P.labels_[i]);

  P.leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) P.leq_[i][i] = true;
  for (const auto& [a, b] : order) {
    int i = find(a), j = find(b);
    P.leq_[i][j] = true;
    P.leq_[P.star_[j]][P.star_[i]] = true;  // order-reversing involution
  }
  // Transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (P.leq_[i][k])
        for (int j = 0; j < n; ++j)
          if (P.leq_[k][j]) P.leq_[i][j] = true;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && P.leq_[i][j] && P.leq_[j][i])
        fail(Errc::NotSimple,
             "order not antisymmetric: " + P.labels_[i] + ", " + P.labels_[j]);
  // An element must be incomparable with its complement; a <= a* would make
  // one side of the pair unusable in any ultrafilter.
  for (int i = 0; i < n; ++i)
    if (P.leq_[i][P.star_[i]])
      fail(Errc::NotSimple,
           "element below its complement: " + P.labels_[i]);
  return P;
}

int Pocset::index(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    fail(Errc::NotSimple, "unknown pocset element: " + label);
  return static_cast<int>(it - labels_.begin());
}

bool Pocset::incomparable(int a, int b) const {
  return a != b && a != star_[b] && !leq_[a][b] && !leq_[b][a];
}

bool Pocset::transverse(int a, int b) const {
  return incomparable(a, b) && incomparable(a, star_[b]) &&
         incomparable(star_[a], b) && incomparable(star_[a], star_[b]);
}

std::vector<int> Pocset::pair_reps() const {
  std::vector<int> reps;
  for (int i = 0; i < size(); ++i)
    if (i < star_[i]) reps.push_back(i);
  return reps;
}

int Pocset::dimension() const {
  // Max clique in the transversality graph, by branch and bound over the
  // canonical representatives (a transverse family never contains a pair).
  auto reps = pair_reps();
  int best = 0;
  std::vector<int> cur;
  // Both orientations of a pair have the same transversality relation, so
  // restricting to representatives loses nothing.
  auto rec = [&](auto&& self, size_t from) -> void {
    best = std::max(best, static_cast<int>(cur.size()));
    for (size_t i = from; i < reps.size(); ++i) {
      bool ok = true;
      for (int c : cur)
        if (!transverse(c, reps[i])) {
          ok = false;
          break;
        }
      if (ok) {
        cur.push_back(reps[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace cubecomb
