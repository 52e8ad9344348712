#pragma once

// Exact dimension formulas.  Every routine computes over the rationals and
// asserts integrality of the result; routines with two formulas assert that
// they agree.

#include "spingrass/arith.hpp"
#include "spingrass/lie_algebra.hpp"
#include "spingrass/lr.hpp"
#include "spingrass/partition.hpp"

#include <cstdlib>
#include <vector>

namespace spingrass {

/// gl(n) Weyl dimension of the partition-shaped weight lambda; zero when
/// lambda has more than n rows.
inline BigInt dim_gl_or_zero(const Partition& lambda, int n) {
  if (lambda.length() > n) return 0;
  const auto w = lambda.padded(n);
  BigRational d = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) d *= BigRational(w[i] - w[j] + j - i, j - i);
  }
  return to_integer(d, "dim_gl " + lambda.to_string());
}

inline BigInt dim_gl(const Partition& lambda, int n) {
  require(n >= 1, "gl rank must be positive");
  require(lambda.length() <= n,
          "dim_gl: " + lambda.to_string() + " has more than " + std::to_string(n) + " rows");
  return dim_gl_or_zero(lambda, n);
}

/// (p-q+1)/(2k+1) C(2k+1,k-q+1) C(2k+1,k-p): the gl(2k) dimension of
/// (2^{k-p} 1^{p-q} 0^q), extended by zero for p > k.
inline BigInt f_kpq(int k, int p, int q) {
  require(k >= 0 && q >= 0 && p >= q - 1, "f_kpq: need k >= 0, q >= 0 and p >= q - 1");
  BigRational v = BigRational(p - q + 1, 2 * k + 1) * BigRational(binomial(2 * k + 1, k - q + 1)) *
                  BigRational(binomial(2 * k + 1, k - p));
  return to_integer(v, "f_kpq");
}

namespace detail {

/// Bareiss fraction-free determinant.
inline BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline void require_so_even_weight(const Weight& w) {
  require(w.algebra().family == Family::SO_EVEN, "expected an so(2k) weight, got " + w.algebra().name());
  require(is_dominant(w), "weight " + w.to_string() + " is not dominant for " + w.algebra().name());
}

}  // namespace detail

/// prod_{i<j} ((l_i+k-i)^2 - (l_j+k-j)^2) / ((k-i)^2 - (k-j)^2), halves allowed.
inline BigInt dim_so_even_product(const Weight& w) {
  detail::require_so_even_weight(w);
  const int k = w.rank();
  BigRational d = 1;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const BigRational a = w.coord(i) + (k - 1 - i), b = w.coord(j) + (k - 1 - j);
      d *= (a * a - b * b) / BigRational((k - 1 - i) * (k - 1 - i) - (k - 1 - j) * (k - 1 - j));
    }
  }
  return to_integer(d, "so(2k) product formula at " + w.to_string());
}

/// d(l) = det[ C(2k+l_i-i+j-1, 2k-1) - C(2k+l_i-i-j-1, 2k-1) ] for integral
/// l with l_k >= 0 (C(n, m) = 0 for n < 0).  Equals the so(2k) dimension when
/// l_k = 0 and the O(2k) dimension (both chiralities) otherwise.
inline BigInt dim_so_even_determinant(const std::vector<int>& lambda) {
  const int k = static_cast<int>(lambda.size());
  require(k >= 1, "empty weight");
  std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
  for (int i = 1; i <= k; ++i) {
    require(lambda[i - 1] >= 0, "determinant form needs nonnegative entries");
    for (int j = 1; j <= k; ++j) {
      m[i - 1][j - 1] = binomial(2 * k + lambda[i - 1] - i + j - 1, 2 * k - 1) -
                        binomial(2 * k + lambda[i - 1] - i - j - 1, 2 * k - 1);
    }
  }
  return detail::determinant(std::move(m));
}

/// Dimension of one so(2k) irreducible; a negative last entry denotes the
/// other chirality and has the same dimension.  Integral weights are
/// cross-checked against the determinant form.
inline BigInt dim_so_even(const Weight& w) {
  const BigInt product = dim_so_even_product(w);
  if (w.is_integral()) {
    auto v = w.integers();
    const bool chiral = v.back() != 0;
    v.back() = std::abs(v.back());
    const BigInt det = dim_so_even_determinant(v);
    ensure(det == (chiral ? 2 * product : product),
           "so(2k) determinant " + det.str() + " disagrees with product " + product.str() + " at " + w.to_string());
  }
  return product;
}

/// sp(2k) Weyl dimension; for k = 2 also checked against
/// (p-q+1)(p+q+3)(p+2)(q+1)/6.
inline BigInt dim_sp(const Partition& lambda, int k) {
  require(k >= 1, "sp rank must be positive");
  require(lambda.length() <= k,
          "dim_sp: " + lambda.to_string() + " has more than " + std::to_string(k) + " rows");
  const BigInt d = weyl_dimension(Weight::from_integers(AlgebraId::sp(k), lambda.padded(k)));
  if (k == 2) {
    const long p = lambda[0], q = lambda[1];
    const BigInt closed = BigInt((p - q + 1) * (p + q + 3) * (p + 2) * (q + 1)) / 6;
    ensure(closed == d, "sp(4) closed form disagrees at " + lambda.to_string());
  }
  return d;
}

/// so(2k+1) dimension; half-integral weights l + e/2 go through
/// 2^k dim sp(2k)_l and are checked against the Weyl product.
inline BigInt dim_so_odd(const Weight& w) {
  require(w.algebra().family == Family::SO_ODD, "expected an so(2k+1) weight, got " + w.algebra().name());
  require(is_dominant(w), "weight " + w.to_string() + " is not dominant for " + w.algebra().name());
  const BigInt weyl = weyl_dimension(w);
  if (w.is_half_integral()) {
    std::vector<int> lam(w.rank());
    for (int i = 0; i < w.rank(); ++i) lam[i] = (w.twice()[i] - 1) / 2;
    const BigInt via_sp = pow2(w.rank()) * dim_sp(Partition(lam), w.rank());
    ensure(via_sp == weyl, "2^k dim sp disagrees with Weyl product at " + w.to_string());
  }
  return weyl;
}

/// Dimension of any classical irreducible via the family-specific route.
inline BigInt dimension(const Weight& w) {
  switch (w.algebra().family) {
    case Family::SO_EVEN: return dim_so_even(w);
    case Family::SO_ODD: return dim_so_odd(w);
    case Family::SP: return dim_sp(Partition(w.integers()), w.rank());
    case Family::GL: return weyl_dimension(w);
  }
  return 0;
}

/// Hooks alpha (strictly decreasing, positive) whose sigma(alpha) has at
/// most max_boxes boxes; includes the empty hook.
inline std::vector<std::vector<int>> hooks_up_to(int max_boxes) {
  std::vector<std::vector<int>> out{{}};
  std::vector<int> cur;
  auto rec = [&](auto&& self, int cap) -> void {
    for (int a = cap; a >= 1; --a) {
      cur.push_back(a);
      const Partition s = sigma_alpha(cur);
      if (s.boxes() <= max_boxes) {
        out.push_back(cur);
        self(self, a - 1);
      }
      cur.pop_back();
    }
  };
  rec(rec, max_boxes);
  return out;
}

/// Littlewood's alternating trace-subtraction sum over gl(2k) dimensions:
/// so(2k) uses LR_{sigma(alpha),mu}^{lambda}, sp(2k) the transposed shapes.
/// Restricted to lambda with parts at most 2; the so(2k) value for a
/// k-row lambda is halved to give one chirality.  Checked against the Weyl
/// dimension.
inline BigInt dim_via_littlewood(const Partition& lambda, int k, Family family) {
  require(family == Family::SO_EVEN || family == Family::SP,
          "dim_via_littlewood supports so(2k) and sp(2k) only");
  require(k >= 1, "rank must be positive");
  require(lambda.first() <= 2, "dim_via_littlewood needs parts at most 2, got " + lambda.to_string());
  require(lambda.length() <= k, lambda.to_string() + " has more than " + std::to_string(k) + " rows");
  const bool sp = family == Family::SP;
  const Partition target = sp ? transpose(lambda) : lambda.normalized();
  BigInt sum = 0;
  for (const auto& alpha : hooks_up_to(lambda.boxes())) {
    const Partition s = sigma_alpha(alpha);
    if (!contains(target, s)) continue;
    int weight = 0;
    for (int a : alpha) weight += a;
    for (const auto& mu : subpartitions_of_size(target, target.boxes() - s.boxes())) {
      const long c = lr_coefficient(s, mu, target);
      if (!c) continue;
      const BigInt term = c * dim_gl_or_zero(sp ? transpose(mu) : mu, 2 * k);
      sum += weight % 2 ? -term : term;
    }
  }
  if (!sp && lambda.length() == k) {
    ensure(sum % 2 == 0, "odd O(2k) dimension for a chiral weight");
    sum /= 2;
  }
  const BigInt direct = sp ? dim_sp(lambda, k)
                           : dim_so_even(Weight::from_integers(AlgebraId::so_even(k), lambda.padded(k)));
  ensure(sum == direct, "Littlewood sum " + sum.str() + " disagrees with Weyl dimension " + direct.str() +
                            " at " + lambda.to_string());
  return sum;
}

/// The explicit two-column so(2k) trace-subtraction display:
/// dim (2^{k-p} 1^{p-q} 0^q) = f(k,p,q) - f(k,p+1,q+1), halved when q = 0.
inline BigInt dim_so_even_two_column(int k, int p, int q) {
  require(0 <= q && q <= p && p <= k, "need 0 <= q <= p <= k");
  BigInt d = f_kpq(k, p, q) - f_kpq(k, p + 1, q + 1);
  if (q == 0) d /= 2;
  return d;
}

/// The explicit two-column sp(2k) display:
/// f(k,p,q) - f(k,p+3,q+3) + sum_b f(k,p+b,q+4-b) - sum_b f(k,p+b,q+2-b).
inline BigInt dim_sp_two_column(int k, int p, int q) {
  require(0 <= q && q <= p && p <= k, "need 0 <= q <= p <= k");
  BigInt d = f_kpq(k, p, q) - f_kpq(k, p + 3, q + 3);
  for (int b = std::max(3 - (p - q), 1); b <= 3; ++b) d += f_kpq(k, p + b, q + 4 - b);
  for (int b = std::max(2 - (p - q), 0); b <= 2; ++b) d -= f_kpq(k, p + b, q + 2 - b);
  return d;
}

/// (2^{k-p} 1^{p-q} 0^q) as a partition.
inline Partition two_column_shape(int k, int p, int q) {
  require(0 <= q && q <= p && p <= k, "need 0 <= q <= p <= k");
  std::vector<int> parts(k - p, 2);
  parts.insert(parts.end(), p - q, 1);
  parts.insert(parts.end(), q, 0);
  return Partition(parts);
}

}  // namespace spingrass
