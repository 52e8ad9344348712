#pragma once

#include "spingrass/lie_algebra.hpp"
#include "spingrass/partition.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace testing {

inline std::mt19937& rng() {
  static std::mt19937 g(20240611u);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random partition with at most rows parts, each at most max_part.
inline spingrass::Partition random_partition(int rows, int max_part) {
  std::vector<int> p(uniform(0, rows));
  for (auto& v : p) v = uniform(0, max_part);
  std::sort(p.rbegin(), p.rend());
  return spingrass::Partition(p);
}

/// Cells (row, column) of the Young diagram.
inline std::set<std::pair<int, int>> cells(const spingrass::Partition& p) {
  std::set<std::pair<int, int>> c;
  for (int i = 0; i < p.length(); ++i) {
    for (int j = 0; j < p[i]; ++j) c.insert({i, j});
  }
  return c;
}

/// Weight multiplicities of the gl(n) module lambda, counted as
/// semistandard tableaux by content.
inline spingrass::WeightMultiset gl_character_by_tableaux(const spingrass::Partition& lambda, int n) {
  spingrass::WeightMultiset out(spingrass::AlgebraId::gl(n));
  if (lambda.length() > n) return out;
  std::vector<std::pair<int, int>> cs;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) cs.emplace_back(i, j);
  }
  std::vector<std::vector<int>> t(lambda.length(), std::vector<int>(lambda.first(), 0));
  std::vector<int> content(n, 0);
  std::function<void(std::size_t)> fill = [&](std::size_t c) {
    if (c == cs.size()) {
      std::vector<int> k(n);
      for (int i = 0; i < n; ++i) k[i] = 2 * content[i];
      out.add(k, 1);
      return;
    }
    auto [i, j] = cs[c];
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v <= n; ++v) {
      t[i][j] = v;
      ++content[v - 1];
      fill(c + 1);
      --content[v - 1];
    }
  };
  fill(0);
  return out;
}

/// Pointwise product of two weight multisets over the same algebra.
inline spingrass::WeightMultiset convolve(const spingrass::WeightMultiset& a, const spingrass::WeightMultiset& b) {
  spingrass::WeightMultiset out(a.algebra());
  for (const auto& [ka, ma] : a.entries()) {
    for (const auto& [kb, mb] : b.entries()) {
      std::vector<int> k(ka.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      out.add(k, ma * mb);
    }
  }
  return out;
}

/// Applies a random element of the Weyl group of a to a doubled weight.
inline std::vector<int> random_weyl_image(const spingrass::AlgebraId& a, std::vector<int> k) {
  std::shuffle(k.begin(), k.end(), rng());
  if (a.family == spingrass::Family::GL) return k;
  int flips = 0;
  for (auto& v : k) {
    if (uniform(0, 1)) {
      v = -v;
      ++flips;
    }
  }
  if (a.family == spingrass::Family::SO_EVEN && flips % 2 == 1) k[0] = -k[0];
  return k;
}

/// Same, factor by factor, for a concatenated key of a product algebra.
inline std::vector<int> random_weyl_image(const spingrass::ProductAlgebra& p, const std::vector<int>& k) {
  std::vector<int> out;
  std::size_t pos = 0;
  for (const auto& a : p.factors) {
    auto part = random_weyl_image(a, std::vector<int>(k.begin() + pos, k.begin() + pos + a.rank));
    out.insert(out.end(), part.begin(), part.end());
    pos += a.rank;
  }
  return out;
}

}  // namespace testing
