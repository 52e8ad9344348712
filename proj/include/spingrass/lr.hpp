#pragma once

// Littlewood-Richardson coefficients by skew-tableau backtracking, the
// sigma(alpha) hook shapes, and the Koike-Terada tensor/branching sums for
// orthogonal universal characters.

#include "spingrass/arith.hpp"
#include "spingrass/lie_algebra.hpp"
#include "spingrass/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace spingrass {

using PartitionMultiset = std::map<Partition, long>;
using PairMultiset = std::map<std::pair<Partition, Partition>, long>;

namespace detail {

struct SkewFiller {
  std::vector<int> outer, inner, content;
  std::vector<std::vector<int>> cell;  // cell[r][c], 0 = empty
  std::vector<int> used;
  long count = 0;

  void run() {
    const int rows = static_cast<int>(outer.size());
    cell.assign(rows, {});
    for (int r = 0; r < rows; ++r) cell[r].assign(outer[r], 0);
    used.assign(content.size() + 1, 0);
    place(0, rows > 0 ? outer[0] - 1 : -1);
  }

  // Reading order: rows top to bottom, each row right to left.
  void place(int r, int c) {
    const int rows = static_cast<int>(outer.size());
    while (r < rows && c < inner[r]) {
      ++r;
      c = r < rows ? outer[r] - 1 : -1;
    }
    if (r == rows) {
      ++count;
      return;
    }
    int hi = static_cast<int>(content.size());
    hi = std::min(hi, r + 1);
    if (c + 1 < outer[r]) hi = std::min(hi, cell[r][c + 1]);  // row weakly increasing
    int lo = 1;
    if (r > 0 && c < outer[r - 1] && c >= inner[r - 1]) lo = cell[r - 1][c] + 1;  // column strict
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= content[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice word
      ++used[v];
      cell[r][c] = v;
      place(r, c - 1);
      cell[r][c] = 0;
      --used[v];
    }
  }
};

}  // namespace detail

/// LR_{mu,nu}^{lambda}: number of LR tableaux of shape lambda/mu and content nu.
inline long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda) {
  if (lambda.boxes() != mu.boxes() + nu.boxes() || !contains(lambda, mu)) return 0;
  if (nu.empty()) return 1;
  const int rows = lambda.length();
  detail::SkewFiller f;
  f.outer = lambda.padded(rows);
  f.inner = mu.padded(rows);
  f.content = nu.normalized().parts();
  f.run();
  return f.count;
}

/// All lambda with LR_{mu,nu}^{lambda} > 0, optionally limited to max_rows.
inline PartitionMultiset lr_product(const Partition& mu, const Partition& nu, int max_rows = -1) {
  PartitionMultiset out;
  const int size = mu.boxes() + nu.boxes();
  const int rows = mu.length() + nu.length();
  const int limit = max_rows < 0 ? rows : std::min(rows, max_rows);
  std::vector<int> cur(limit, 0);
  auto rec = [&](auto&& self, int i, int cap, int left) -> void {
    if (i == limit) {
      if (left != 0) return;
      Partition lambda(cur);
      if (long c = lr_coefficient(mu, nu, lambda)) out[lambda.normalized()] += c;
      return;
    }
    const int hi = std::min({cap, left, mu[i] + nu.first()});
    for (int v = hi; v >= mu[i]; --v) {
      cur[i] = v;
      self(self, i + 1, v, left - v);
    }
    cur[i] = 0;
  };
  rec(rec, 0, size, size);
  return out;
}

/// Partition with rows alpha_i + i and columns alpha_i + i - 1 (Frobenius
/// coordinates (alpha | alpha - 1)).  alpha must be strictly decreasing and
/// positive; the empty alpha gives the empty partition.
inline Partition sigma_alpha(const std::vector<int>& alpha) {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    require(alpha[i] > 0, "hook entries must be positive");
    require(i == 0 || alpha[i - 1] > alpha[i], "hook entries must be strictly decreasing");
  }
  const int s = static_cast<int>(alpha.size());
  std::vector<int> rows;
  for (int i = 0; i < s; ++i) rows.push_back(alpha[i] + i + 1);
  // rows below the diagonal come from the column lengths
  const int depth = s == 0 ? 0 : alpha[0];
  for (int r = s + 1; r <= depth; ++r) {
    int n = 0;
    for (int j = 0; j < s; ++j) n += alpha[j] + j >= r;
    rows.push_back(n);
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    require(rows[i] <= rows[i - 1], "hook does not describe a partition");
  }
  Partition p(rows);
  const Partition t = transpose(p);
  for (int i = 0; i < s; ++i) {
    ensure(t[i] == alpha[i] + i, "sigma_alpha column check failed");
  }
  return p.normalized();
}

/// Orthogonal tensor product of universal characters, first Koike-Terada
/// formula.  Requires |mu| + |nu| <= n (stable range of so(2n) / so(2n+1)).
inline PartitionMultiset tensor_so(const Partition& mu, const Partition& nu, int n) {
  require(n >= 1, "rank must be positive");
  require(mu.boxes() + nu.boxes() <= n,
          "tensor_so outside the stable range: |mu|+|nu| = " + std::to_string(mu.boxes() + nu.boxes()) +
              " > " + std::to_string(n));
  PartitionMultiset out;
  const int common = std::min(mu.boxes(), nu.boxes());
  for (int t = 0; t <= common; ++t) {
    for (const auto& tau : subpartitions_of_size(mu, t)) {
      if (!contains(nu, tau)) continue;
      for (const auto& mu1 : subpartitions_of_size(mu, mu.boxes() - t)) {
        const long a = lr_coefficient(tau, mu1, mu);
        if (!a) continue;
        for (const auto& nu1 : subpartitions_of_size(nu, nu.boxes() - t)) {
          const long b = lr_coefficient(tau, nu1, nu);
          if (!b) continue;
          for (const auto& [lambda, c] : lr_product(mu1, nu1)) out[lambda] += a * b * c;
        }
      }
    }
  }
  return out;
}

/// Partitions of 2m with every row even.
inline std::vector<Partition> even_row_partitions(int boxes) {
  std::vector<Partition> out;
  if (boxes % 2 != 0) return out;
  for (const auto& kappa : partitions_of(boxes / 2)) out.push_back(doubled_rows(kappa));
  return out;
}

/// Second Koike-Terada formula: the orthogonal universal character of
/// lambda restricted to the block-diagonal pair, as raw (mu, nu) labels with
/// multiplicities sum_{kappa, lambda'} LR_{2kappa,lambda'}^{lambda} LR_{mu,nu}^{lambda'}.
/// Labels may exceed k or l rows; orthogonal_modification turns them into
/// so(2k) / so(2l) weights.  lambda must have at most k + l rows.
inline PairMultiset branch_so_to_pair(const Partition& lambda, int k, int l) {
  require(k >= 1 && l >= 1, "branch_so_to_pair needs positive k and l");
  require(lambda.length() <= k + l, "branch_so_to_pair: " + lambda.to_string() + " has more than k+l = " +
                                        std::to_string(k + l) + " rows");
  PairMultiset out;
  for (int even = 0; even <= lambda.boxes(); even += 2) {
    for (const auto& twokappa : even_row_partitions(even)) {
      if (!contains(lambda, twokappa)) continue;
      for (const auto& lam1 : subpartitions_of_size(lambda, lambda.boxes() - even)) {
        const long a = lr_coefficient(twokappa, lam1, lambda);
        if (!a) continue;
        for (int m = 0; m <= lam1.boxes(); ++m) {
          for (const auto& mu : subpartitions_of_size(lam1, m)) {
            for (const auto& nu : subpartitions_of_size(lam1, lam1.boxes() - m)) {
              const long b = lr_coefficient(mu, nu, lam1);
              if (b) out[{mu, nu}] += a * b;
            }
          }
        }
      }
    }
  }
  return out;
}

/// Result of the O(2n) modification rule: sign, standard label (at most n
/// rows) and whether the associate (det-twisted) module was produced.
struct ModifiedLabel {
  int sign = 1;
  Partition label;
  bool associate = false;
};

/// King's modification rule for O(2n) universal characters: while the label
/// has p > n rows remove the boundary strip of length 2p - 2n starting at the
/// foot of the first column; each removal contributes (-1)^(columns - 1) and
/// toggles the associate flag.  nullopt when the character vanishes.
inline std::optional<ModifiedLabel> orthogonal_modification(const Partition& mu, int n) {
  require(n >= 1, "rank must be positive");
  ModifiedLabel r;
  std::vector<int> rows = mu.normalized().parts();
  while (static_cast<int>(rows.size()) > n) {
    const int p = static_cast<int>(rows.size());
    int h = 2 * p - 2 * n;
    if (h > std::accumulate(rows.begin(), rows.end(), 0)) return std::nullopt;
    // walk the rim from the foot of the first column: right while the row
    // continues, otherwise up
    std::vector<int> next = rows;
    int i = p - 1, j = 0, columns = 1;
    for (;;) {
      --next[i];
      if (--h == 0) break;
      if (j + 1 < rows[i]) {
        ++j;
        ++columns;
      } else if (--i < 0) {
        return std::nullopt;
      }
    }
    // the strip must end at the end of its top row
    if (j != rows[i] - 1) return std::nullopt;
    for (int t = 1; t < p; ++t) {
      if (next[t] > next[t - 1]) return std::nullopt;
    }
    while (!next.empty() && next.back() == 0) next.pop_back();
    if ((columns - 1) % 2 == 1) r.sign = -r.sign;
    r.associate = !r.associate;
    rows = std::move(next);
  }
  r.label = Partition(rows);
  return r;
}

/// so(2n) content of an O(2n) universal character: signed list of dominant
/// so(2n) weights (a label with exactly n rows gives both chiralities).
inline std::vector<std::pair<int, Weight>> orthogonal_to_so_even(const Partition& mu, int n) {
  std::vector<std::pair<int, Weight>> out;
  auto m = orthogonal_modification(mu, n);
  if (!m) return out;
  std::vector<int> w = m->label.padded(n);
  const AlgebraId a = AlgebraId::so_even(n);
  out.emplace_back(m->sign, Weight::from_integers(a, w));
  if (w[n - 1] != 0) {
    w[n - 1] = -w[n - 1];
    out.emplace_back(m->sign, Weight::from_integers(a, w));
  }
  return out;
}

/// Branching of the so(2k+2l) irreducible(s) labeled by lambda to
/// so(2k) + so(2l), as dominant weight pairs with multiplicities.  When
/// lambda has k + l rows both chiralities of lambda are included (the O(2k+2l)
/// module).  Throws if a net multiplicity comes out negative.
inline std::map<std::pair<Weight, Weight>, long> branch_so_to_pair_weights(const Partition& lambda, int k, int l) {
  std::map<std::pair<Weight, Weight>, long> out;
  for (const auto& [pair, mult] : branch_so_to_pair(lambda, k, l)) {
    for (const auto& [s1, w1] : orthogonal_to_so_even(pair.first, k)) {
      for (const auto& [s2, w2] : orthogonal_to_so_even(pair.second, l)) {
        out[{w1, w2}] += s1 * s2 * mult;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    ensure(it->second >= 0, "negative branching multiplicity for " + lambda.to_string());
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace spingrass
