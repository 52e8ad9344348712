#pragma once

// Dirac spectrum data on G_{2k,2l} = SO(2k+2l)/SO(2k)xSO(2l): Casimir
// values, the smallest eigenvalue by three routes, the minimal spinor
// weights and the combinatorial eigenvalue enumeration.

#include "spingrass/arith.hpp"
#include "spingrass/lie_algebra.hpp"
#include "spingrass/lr.hpp"
#include "spingrass/partition.hpp"
#include "spingrass/spinor_decomp.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace spingrass {

struct GrassmannEven {
  int k = 2, l = 2;

  GrassmannEven(int k_, int l_) : k(k_), l(l_) {
    require(l >= 2 && k >= l, "G_{2k,2l} needs k >= l >= 2, got k=" + std::to_string(k) + " l=" + std::to_string(l));
  }

  int n() const { return k + l; }
  AlgebraId algebra() const { return AlgebraId::so_even(k + l); }
  /// 4(k+l-1): Euclidean norms divided by this give the metric b.
  int metric_denominator() const { return 4 * (k + l - 1); }
  BigRational curvature_shift() const { return BigRational(k * l, 2); }

  friend bool operator==(const GrassmannEven&, const GrassmannEven&) = default;
};

/// One way lambda arises: mu (x) mu^c contains lambda', and 2kappa (x) lambda'
/// contains lambda.
struct SpectrumWitness {
  Partition mu, lambda_prime, two_kappa;
  friend bool operator==(const SpectrumWitness&, const SpectrumWitness&) = default;
  friend auto operator<=>(const SpectrumWitness&, const SpectrumWitness&) = default;
};

struct SpectrumEntry {
  Partition lambda;
  BigInt casimir_eucl = 0;
  BigRational casimir_b = 0;
  BigRational eigenvalue_sq = 0;
  std::vector<SpectrumWitness> witnesses;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// c_lambda = <lambda + 2 rho, lambda> = |lambda + rho|^2 - |rho|^2 with
/// rho = (n-1, ..., 1, 0); both forms are computed and compared.
inline SpectrumEntry casimir(const Partition& lambda, const GrassmannEven& space) {
  const int n = space.n();
  require(lambda.length() <= n,
          "casimir: " + lambda.to_string() + " is not dominant for so(" + std::to_string(2 * n) + ")");
  const auto v = lambda.padded(n);
  BigInt bilinear = 0, shifted = 0, rho = 0;
  for (int i = 0; i < n; ++i) {
    const long r = n - 1 - i;
    bilinear += BigInt(v[i]) * (v[i] + 2 * r);
    shifted += BigInt(v[i] + r) * (v[i] + r);
    rho += BigInt(r) * r;
  }
  ensure(bilinear == shifted - rho, "casimir forms disagree at " + lambda.to_string());
  SpectrumEntry e;
  e.lambda = lambda.normalized();
  e.casimir_eucl = bilinear;
  e.casimir_b = BigRational(bilinear) / space.metric_denominator();
  e.eigenvalue_sq = e.casimir_b + space.curvature_shift();
  return e;
}

/// Positive roots gamma of so(2k+2l) with <gamma, rho_k> < 0, where rho_k is
/// the Weyl vector of so(2k)+so(2l) placed in the first k and last l slots.
/// Checked against {e_i - e_{k+j} : i > k - l + j}.
inline std::vector<Weight> psi_set(const GrassmannEven& space) {
  const int k = space.k, l = space.l, n = space.n();
  std::vector<int> rho_k(n);
  for (int i = 0; i < k; ++i) rho_k[i] = 2 * (k - 1 - i);
  for (int j = 0; j < l; ++j) rho_k[k + j] = 2 * (l - 1 - j);
  std::set<std::vector<int>> scanned;
  for (const auto& g : detail::positive_roots_twice(space.algebra())) {
    if (detail::dot(g, rho_k) < 0) scanned.insert(g);
  }
  std::set<std::vector<int>> formula;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= l; ++j) {
      if (i <= k - l + j) continue;
      std::vector<int> g(n, 0);
      g[i - 1] = 2;
      g[k + j - 1] = -2;
      formula.insert(g);
    }
  }
  ensure(scanned == formula, "Psi scan disagrees with the index description");
  std::vector<Weight> out;
  for (const auto& g : formula) out.emplace_back(space.algebra(), g);
  return out;
}

/// |beta|^2 predicted from the so(2l) part mu of a spinor summand:
/// k l^2 + sum_j (mu_j - l + j - 1/2)^2 - l/4 - l(l^2-1)/3.
inline BigRational spinor_norm_from_small_part(const GrassmannEven& space, const std::vector<int>& mu) {
  const int k = space.k, l = space.l;
  require(static_cast<int>(mu.size()) == l, "small part must have l entries");
  BigRational s = BigRational(k * l * l);
  for (int j = 1; j <= l; ++j) {
    const BigRational t = BigRational(std::abs(mu[j - 1]) - l + j) - BigRational(1, 2);
    s += t * t;
  }
  return s - BigRational(l, 4) - BigRational(l * (l * l - 1), 3);
}

struct MinEigenvalueReport {
  std::optional<BigRational> from_decomposition;  // route 1
  BigRational from_psi;                           // route 2
  BigRational closed;                             // route 3
  std::optional<BigRational> min_norm;            // Euclidean, route 1 only
  bool decomposition_used = false;

  const BigRational& value() const { return closed; }
};

/// Largest 2kl for which route 1 runs the projection pipeline.
inline constexpr int kDecompositionLimit = 20;

inline MinEigenvalueReport min_eigenvalue_report(const GrassmannEven& space) {
  const int k = space.k, l = space.l;
  MinEigenvalueReport r;
  const BigRational den = space.metric_denominator();
  r.closed = BigRational(3 * k * l * l - (l * l - 1) * l, 6 * (k + l - 1)) + space.curvature_shift();
  long sum = 0;
  for (const auto& g : psi_set(space)) {
    int i = 0, j = 0;
    for (int t = 0; t < space.n(); ++t) {
      if (g.twice()[t] > 0) i = t + 1;
      if (g.twice()[t] < 0) j = t + 1 - k;
    }
    sum += k - i - l + j;
  }
  r.from_psi = BigRational(2 * k * l * l + 4 * sum) / den + space.curvature_shift();
  ensure(r.from_psi == r.closed, "Psi form " + to_string(r.from_psi) + " disagrees with closed form " +
                                     to_string(r.closed));
  if (2 * k * l <= kDecompositionLimit) {
    const auto d = decompose(k, l, GrassmannCase::EVEN);
    BigRational best = -1;
    for (const auto& s : d.summands) {
      BigRational nn = 0;
      for (const auto& w : s.factors) nn += w.norm2();
      ensure(nn == spinor_norm_from_small_part(space, s.factors[1].integers()),
             "norm identity fails at " + s.label());
      if (best < 0 || nn < best) best = nn;
    }
    r.min_norm = best;
    r.from_decomposition = 2 * best / den + space.curvature_shift();
    r.decomposition_used = true;
    ensure(*r.from_decomposition == r.closed, "decomposition route " + to_string(*r.from_decomposition) +
                                                  " disagrees with closed form " + to_string(r.closed));
  }
  return r;
}

inline BigRational min_eigenvalue_sq(const GrassmannEven& space) { return min_eigenvalue_report(space).value(); }

/// The 2^l pairs (l^{k-m_1}, (l-1)^{m_1-m_2}, ... | m) with
/// m_j in {l-j+1, l-j}, unsigned.
inline std::vector<std::pair<Partition, Partition>> minimal_weights(const GrassmannEven& space) {
  const int k = space.k, l = space.l;
  std::vector<std::pair<Partition, Partition>> out;
  for (int mask = 0; mask < (1 << l); ++mask) {
    std::vector<int> m(l);
    for (int j = 1; j <= l; ++j) m[j - 1] = l - j + ((mask >> (j - 1)) & 1);
    const Partition small(m);
    out.emplace_back(conjugate_lm(small, l, k), small);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Summands of minimal Euclidean norm in the computed decomposition, with
/// the chirality sign dropped.
inline std::vector<std::pair<Partition, Partition>> minimal_weights_from_decomposition(const Decomposition& d) {
  std::set<std::pair<Partition, Partition>> best;
  BigRational min = -1;
  for (const auto& s : d.summands) {
    BigRational nn = 0;
    for (const auto& w : s.factors) nn += w.norm2();
    auto unsigned_part = [](const Weight& w) {
      auto v = w.integers();
      v.back() = std::abs(v.back());
      return Partition(v);
    };
    std::pair<Partition, Partition> p{unsigned_part(s.factors[0]), unsigned_part(s.factors[1])};
    if (min < 0 || nn < min) {
      min = nn;
      best = {p};
    } else if (nn == min) {
      best.insert(p);
    }
  }
  std::vector<std::pair<Partition, Partition>> out(best.begin(), best.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Eigenvalues from the tensor products mu (x) mu^c (mu in the k x l box)
/// expanded by 2kappa with |kappa| <= max_kappa_boxes (negative: no limit),
/// all with at most k+l rows and c_lambda <= bound.  Sorted by c, then by
/// lambda descending.
inline std::vector<SpectrumEntry> enumerate_spectrum(const GrassmannEven& space, long bound,
                                                     int max_kappa_boxes = 1) {
  const int n = space.n();
  require(bound >= 0, "bound must be nonnegative");
  std::map<Partition, std::set<SpectrumWitness>> found;
  for (const auto& mu : partitions_in_rectangle(space.k, space.l)) {
    const Partition mc = conjugate_lm(mu, space.k, space.l).normalized();
    for (const auto& [lp, c1] : lr_product(mu, mc, n)) {
      // c_lambda >= |lambda| bounds the kappa sizes worth trying
      for (int kb = 0; lp.boxes() + 2 * kb <= bound; ++kb) {
        if (max_kappa_boxes >= 0 && kb > max_kappa_boxes) break;
        for (const auto& kappa : partitions_of(kb, n)) {
          const Partition tk = doubled_rows(kappa);
          for (const auto& [lambda, c2] : lr_product(tk, lp, n)) {
            if (casimir(lambda, space).casimir_eucl > bound) continue;
            found[lambda].insert({mu, lp, tk});
          }
        }
      }
    }
  }
  std::vector<SpectrumEntry> out;
  for (const auto& [lambda, w] : found) {
    auto e = casimir(lambda, space);
    e.witnesses.assign(w.begin(), w.end());
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.casimir_eucl != b.casimir_eucl) return a.casimir_eucl < b.casimir_eucl;
    return a.lambda > b.lambda;
  });
  return out;
}

/// Whether the so(2k+2l) module(s) lambda, restricted to so(2k)+so(2l),
/// share a summand with the spinor module.
inline bool contributes_to_spectrum(const Partition& lambda, const GrassmannEven& space) {
  const auto spin = conjectured_decomposition(space.k, space.l, GrassmannCase::EVEN);
  std::set<std::pair<Weight, Weight>> targets;
  for (const auto& s : spin.summands) targets.insert({s.factors[0], s.factors[1]});
  for (const auto& [pair, mult] : branch_so_to_pair_weights(lambda, space.k, space.l)) {
    if (targets.count(pair)) return true;
  }
  return false;
}

/// Unlimited enumeration filtered by contributes_to_spectrum.
inline std::vector<SpectrumEntry> exact_spectrum(const GrassmannEven& space, long bound) {
  auto all = enumerate_spectrum(space, bound, -1);
  std::erase_if(all, [&](const SpectrumEntry& e) { return !contributes_to_spectrum(e.lambda, space); });
  return all;
}

/// (l^{k-l+1}, (l-1)^2, ..., 1^2, 0), with c_lambda checked against
/// 3kl^2 + k^2 l - kl - 2l(l^2-1)/3.
inline SpectrumEntry smallest_contribution(const GrassmannEven& space) {
  const int k = space.k, l = space.l;
  std::vector<int> parts(k - l + 1, l);
  for (int v = l - 1; v >= 1; --v) parts.insert(parts.end(), 2, v);
  parts.push_back(0);
  auto e = casimir(Partition(parts), space);
  const BigInt closed = BigInt(3 * k * l * l + k * k * l - k * l) - BigInt(2 * l * (l * l - 1) / 3);
  ensure(e.casimir_eucl == closed, "c(lambda0) disagrees with the closed form");
  return e;
}

/// Every lambda (at most k+l rows) in the tensor products of the minimal
/// weight pairs, with its Casimir.
inline std::vector<SpectrumEntry> minimal_pair_products(const GrassmannEven& space) {
  std::map<Partition, std::set<SpectrumWitness>> found;
  for (const auto& [big, small] : minimal_weights(space)) {
    for (const auto& [lambda, c] : lr_product(big.normalized(), small.normalized(), space.n())) {
      found[lambda].insert({big.normalized(), small.normalized(), Partition()});
    }
  }
  std::vector<SpectrumEntry> out;
  for (const auto& [lambda, w] : found) {
    auto e = casimir(lambda, space);
    e.witnesses.assign(w.begin(), w.end());
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.casimir_eucl != b.casimir_eucl) return a.casimir_eucl > b.casimir_eucl;
    return a.lambda > b.lambda;
  });
  return out;
}

}  // namespace spingrass
