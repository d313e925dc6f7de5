#pragma once

// Shared complex builders for the test suites.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "cubecomb/complex.hpp"
#include "cubecomb/pocset.hpp"

namespace corpus {

using Edges = std::vector<std::pair<std::string, std::string>>;

inline cubecomb::CubeComplex path(int n) {
  std::vector<std::string> vs;
  Edges es;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(vs[i], vs[i + 1]);
  return cubecomb::validate_complex(vs, es);
}

inline cubecomb::CubeComplex grid(int rows, int cols) {
  std::vector<std::string> vs;
  Edges es;
  auto nm = [](int r, int c) {
    return std::to_string(r) + std::to_string(c);
  };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      vs.push_back(nm(r, c));
      if (r + 1 < rows) es.emplace_back(nm(r, c), nm(r + 1, c));
      if (c + 1 < cols) es.emplace_back(nm(r, c), nm(r, c + 1));
    }
  return cubecomb::validate_complex(vs, es);
}

inline cubecomb::CubeComplex square() { return grid(2, 2); }

inline cubecomb::CubeComplex cube3() {
  std::vector<std::string> vs;
  Edges es;
  for (int m = 0; m < 8; ++m) {
    std::string name = {char('0' + (m & 1)), char('0' + ((m >> 1) & 1)),
                        char('0' + ((m >> 2) & 1))};
    vs.push_back(name);
  }
  for (int m = 0; m < 8; ++m)
    for (int b = 0; b < 3; ++b)
      if (!(m & (1 << b))) es.emplace_back(vs[m], vs[m | (1 << b)]);
  return cubecomb::validate_complex(vs, es);
}

/// Star with `legs` legs of length `len` around a centre vertex.
inline cubecomb::CubeComplex spider(int legs, int len) {
  std::vector<std::string> vs{"c"};
  Edges es;
  for (int l = 0; l < legs; ++l) {
    std::string prev = "c";
    for (int i = 1; i <= len; ++i) {
      std::string v = "l" + std::to_string(l) + "_" + std::to_string(i);
      vs.push_back(v);
      es.emplace_back(prev, v);
      prev = v;
    }
  }
  return cubecomb::validate_complex(vs, es);
}

inline cubecomb::CubeComplex tripod() { return spider(3, 1); }

inline cubecomb::CubeComplex square_with_pendant() {
  return cubecomb::validate_complex(
      {"00", "01", "10", "11", "p"},
      {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}, {"11", "p"}});
}

/// Random median graph by iterated peripheral (convex) expansion: duplicate
/// the convex hull of a random vertex pair and join by a matching.
inline cubecomb::CubeComplex random_median(unsigned seed, int steps) {
  std::mt19937 rng(seed);
  std::vector<std::string> vs{"r"};
  Edges es;
  cubecomb::CubeComplex X = cubecomb::validate_complex(vs, es);
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<int> pick(0, X.size() - 1);
    auto hull = cubecomb::convex_hull(X, {pick(rng), pick(rng)});
    std::set<int> in(hull.verts.begin(), hull.verts.end());
    auto copy_name = [&](int v) {
      return X.name(v) + "_" + std::to_string(s);
    };
    for (int v : hull.verts) {
      vs.push_back(copy_name(v));
      es.emplace_back(X.name(v), copy_name(v));
    }
    for (const auto& [u, v] : X.edges())
      if (in.count(u) && in.count(v)) es.emplace_back(copy_name(u), copy_name(v));
    X = cubecomb::validate_complex(vs, es);
  }
  return X;
}

/// The twelve-complex acceptance corpus.
inline std::vector<std::pair<std::string, cubecomb::CubeComplex>> standard() {
  std::vector<std::pair<std::string, cubecomb::CubeComplex>> out;
  for (int n = 2; n <= 6; ++n)
    out.emplace_back("P" + std::to_string(n), path(n));
  out.emplace_back("square", square());
  out.emplace_back("cube3", cube3());
  out.emplace_back("grid4", grid(4, 4));
  out.emplace_back("grid5", grid(5, 5));
  out.emplace_back("tripod", tripod());
  out.emplace_back("spider5", spider(5, 2));
  out.emplace_back("random1", random_median(11, 5));
  out.emplace_back("random2", random_median(23, 6));
  return out;
}

/// A random pocset with at most `pairs` involution pairs; rejects draws
/// whose transitive closure breaks antisymmetry.
inline cubecomb::Pocset random_pocset(unsigned seed, int pairs) {
  std::mt19937 rng(seed);
  for (int attempt = 0;; ++attempt) {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> involution, order;
    auto lab = [](int i, bool star) {
      return std::string(star ? "A" : "a") + std::to_string(i);
    };
    for (int i = 0; i < pairs; ++i) {
      elements.push_back(lab(i, false));
      elements.push_back(lab(i, true));
      involution.emplace_back(lab(i, false), lab(i, true));
    }
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> rel(0, 3);
    for (int i = 0; i < pairs; ++i)
      for (int j = i + 1; j < pairs; ++j) {
        if (coin(rng) == 0) continue;  // leave the pair unrelated (transverse)
        switch (rel(rng)) {
          case 0: order.emplace_back(lab(i, false), lab(j, false)); break;
          case 1: order.emplace_back(lab(j, false), lab(i, false)); break;
          case 2: order.emplace_back(lab(i, false), lab(j, true)); break;
          case 3: order.emplace_back(lab(j, true), lab(i, false)); break;
        }
      }
    try {
      return cubecomb::Pocset::build(elements, involution, order);
    } catch (const cubecomb::Error&) {
      if (attempt > 200) throw;
      rng.seed(seed + 1000 + attempt);
    }
  }
}

}  // namespace corpus
