#pragma once

// Central binomial moment sums B(n,k), their odd-row variant, the
// polynomials P_n with generating function Q, and the identities built on
// them.

#include "spingrass/arith.hpp"
#include "spingrass/dims.hpp"
#include "spingrass/report.hpp"

#include <string>
#include <vector>

namespace spingrass {

/// Dense polynomial in one variable with exact rational coefficients.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> c) : c_(std::move(c)) { trim(); }

  static RationalPolynomial constant(const BigRational& v) { return RationalPolynomial({v}); }
  static RationalPolynomial x() { return RationalPolynomial({0, 1}); }

  const std::vector<BigRational>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  BigRational operator()(const BigRational& at) const {
    BigRational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * at + *it;
    return v;
  }

  RationalPolynomial derivative(int times = 1) const {
    std::vector<BigRational> d = c_;
    for (int t = 0; t < times; ++t) {
      if (d.empty()) break;
      for (std::size_t i = 1; i < d.size(); ++i) d[i - 1] = d[i] * static_cast<long>(i);
      d.pop_back();
    }
    return RationalPolynomial(std::move(d));
  }

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RationalPolynomial(std::move(r));
  }

  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a + b * constant(-1);
  }

  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return RationalPolynomial(std::move(r));
  }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigRational> c_;
};

/// sum_{j=0}^{n} j^k C(2n, n-j), by direct summation.
inline BigInt bnk_direct(int n, int k) {
  require(n >= 0 && k >= 0, "bnk needs n, k >= 0");
  BigInt s = 0;
  for (int j = 0; j <= n; ++j) s += ipow(BigInt(j), static_cast<unsigned>(k)) * binomial(2 * n, n - j);
  return s;
}

/// Closed forms for k <= 5 (n >= 1 where a power 2^{2n-3} appears).
inline BigRational bnk_closed(int n, int k) {
  require(n >= 0 && k >= 0 && k <= 5, "closed forms exist for k <= 5");
  const BigRational c = BigRational(binomial(2 * n, n));
  const BigRational four_n = BigRational(pow2(2 * n));
  const BigRational N = n;
  switch (k) {
    case 0: return four_n / 2 + c / 2;
    case 1: return c * N / 2;
    case 2: return four_n / 4 * N;
    case 3: return c * N * N / 2;
    case 4: return four_n / 8 * N * (3 * N - 1);
    case 5: return c * N * N * (2 * N - 1) / 2;
  }
  return 0;
}

/// B(n,k); for k <= 5 asserted equal to the closed form.
inline BigInt bnk(int n, int k) {
  const BigInt direct = bnk_direct(n, k);
  if (k <= 5) {
    ensure(BigRational(direct) == bnk_closed(n, k),
           "B(" + std::to_string(n) + "," + std::to_string(k) + ") closed form mismatch");
  }
  return direct;
}

/// sum_{j=0}^{n} j^k C(2n-1, n-j); asserts 2n Bt(n,k) = n B(n,k) + B(n,k+1).
inline BigInt btilde(int n, int k) {
  require(n >= 1 && k >= 0, "btilde needs n >= 1, k >= 0");
  BigInt s = 0;
  for (int j = 0; j <= n; ++j) s += ipow(BigInt(j), static_cast<unsigned>(k)) * binomial(2 * n - 1, n - j);
  ensure(2 * n * s == n * bnk_direct(n, k) + bnk_direct(n, k + 1),
         "B~(" + std::to_string(n) + "," + std::to_string(k) + ") relation fails");
  return s;
}

/// P_n(x) = sum_{i=0}^{n} C(2n, n-i) x^i.
inline RationalPolynomial p_n(int n) {
  require(n >= 0, "P_n needs n >= 0");
  std::vector<BigRational> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = BigRational(binomial(2 * n, n - i));
  return RationalPolynomial(std::move(c));
}

/// x P_{n+1} - [(x+1)^2 P_n + (x-1) C(2n,n) - x C(2n,n)/(n+1)]; zero when
/// the recursion holds.
inline RationalPolynomial p_n_recursion_defect(int n) {
  using P = RationalPolynomial;
  const BigRational c = BigRational(binomial(2 * n, n));
  const P x = P::x(), one = P::constant(1);
  const P rhs = (x + one) * (x + one) * p_n(n) + (x - one) * P::constant(c) - x * P::constant(c / (n + 1));
  return x * p_n(n + 1) - rhs;
}

/// Signed Stirling numbers of the first kind s(k, j): falling factorial
/// x(x-1)...(x-k+1) = sum_j s(k,j) x^j.
inline std::vector<BigInt> stirling_first(int k) {
  std::vector<BigInt> s{1};
  for (int m = 0; m < k; ++m) {
    std::vector<BigInt> next(s.size() + 1, 0);
    for (std::size_t j = 0; j < s.size(); ++j) {
      next[j + 1] += s[j];
      next[j] -= m * s[j];
    }
    s = std::move(next);
  }
  return s;
}

/// P_n^{(k)}(1) rebuilt from B(n, .) through the falling-factorial ladder.
inline BigInt p_derivative_from_b(int n, int k) {
  const auto s = stirling_first(k);
  BigInt v = 0;
  for (int j = 0; j <= k; ++j) v += s[j] * bnk_direct(n, j);
  return v;
}

namespace detail {

/// d^n/dy^n (1-4y)^{-l} at y = 0 for l = twice_l / 2.
inline BigRational power_derivative_at_zero(int n, int twice_l) {
  if (twice_l % 2 == 0) {
    const int l = twice_l / 2;
    return BigRational(pow2(2 * n) * factorial(l + n - 1) / factorial(l - 1));
  }
  // l - 1/2, n + l - 1/2 and 2l - 1 are integers
  const int lm = (twice_l - 1) / 2;
  return BigRational(factorial(2 * n + twice_l - 1) * factorial(lm), factorial(n + lm) * factorial(twice_l - 1));
}

/// d^n/dy^n (y^m (1-4y)^{-l}) at 0.
inline BigRational term_derivative_at_zero(int n, int m, int twice_l) {
  if (m > n) return 0;
  return BigRational(binomial(n, m) * factorial(m)) * power_derivative_at_zero(n - m, twice_l);
}

struct QTerm {
  BigRational coefficient;
  int power_of_y;
  int twice_exponent;  // the term is c y^m (1-4y)^{-twice/2}
};

/// The x-derivatives of Q at (1, y), as sums of c y^m (1-4y)^{-l}.
inline std::vector<QTerm> q_x_derivative_terms(int k) {
  switch (k) {
    case 0: return {{BigRational(1, 2), 0, 1}, {BigRational(1, 2), 0, 2}};
    case 1: return {{1, 1, 3}};
    case 2: return {{-1, 1, 3}, {1, 1, 4}};
    case 3: return {{3, 1, 3}, {6, 2, 5}, {-3, 1, 4}};
    case 4: return {{-3, 1, 3}, {-9, 1, 5}, {9, 1, 4}, {3, 1, 6}};
    case 5: return {{120, 3, 7}, {-60, 1, 4}, {60, 1, 5}, {-120, 2, 6}};
  }
  throw precondition_error("Q derivatives are tabulated up to order 5");
}

}  // namespace detail

/// d^{k+n}Q / dx^k dy^n at (1,0), from the tabulated x-derivatives.
inline BigRational q_mixed_derivative(int n, int k) {
  require(n >= 0 && k >= 0 && k <= 5, "q_mixed_derivative needs n >= 0 and 0 <= k <= 5");
  BigRational v = 0;
  for (const auto& t : detail::q_x_derivative_terms(k)) {
    v += t.coefficient * detail::term_derivative_at_zero(n, t.power_of_y, t.twice_exponent);
  }
  return v;
}

/// The stated closed forms of d^{n+k}Q / dy^n dx^k at (1,0).
inline BigRational q_mixed_derivative_closed(int n, int k) {
  require(n >= 0 && k >= 0 && k <= 5, "closed forms exist for k <= 5");
  const BigRational f = BigRational(factorial(2 * n), factorial(n));  // (2n)!/n!
  const BigRational nf = BigRational(factorial(n));
  const BigRational N = n;
  auto p2 = [](int e) { return e >= 0 ? BigRational(pow2(e)) : BigRational(1, pow2(-e)); };
  switch (k) {
    case 0: return p2(2 * n - 1) * nf + f / 2;
    case 1: return f / 2 * N;
    case 2: return -f / 2 * N + p2(2 * n - 2) * nf * N;
    case 3: return f / 2 * N * (N + 2) - 3 * p2(2 * n - 2) * nf * N;
    case 4: return -3 * f * N * (N + 1) + 3 * p2(2 * n - 3) * nf * N * (N + 7);
    case 5: return f * N * (N * N + 17 * N + 12) - 15 * p2(2 * n - 2) * nf * N * (N + 3);
  }
  return 0;
}

/// Coefficient route to P_n^{(k)}(1): the mixed derivative of Q over n!.
struct QCoefficient {
  BigRational from_q;           // tabulated x-derivatives, differentiated in y
  BigRational from_closed;      // stated closed form over n!
  BigInt from_polynomial;       // P_n^{(k)}(1) directly
  BigInt from_b;                // B(n, .) ladder
  bool consistent() const {
    return from_q == BigRational(from_polynomial) && from_closed == from_q && from_b == from_polynomial;
  }
};

inline QCoefficient q_coefficient_routes(int n, int k) {
  require(n >= 0 && k >= 0 && k <= 5, "q_coefficient needs 0 <= k <= 5");
  QCoefficient r;
  const BigRational nf = BigRational(factorial(n));
  r.from_q = q_mixed_derivative(n, k) / nf;
  r.from_closed = q_mixed_derivative_closed(n, k) / nf;
  r.from_polynomial = to_integer(p_n(n).derivative(k)(1), "P_n derivative");
  r.from_b = p_derivative_from_b(n, k);
  return r;
}

/// d^{k+n}Q/dx^k dy^n (1,0) / n!, asserted equal to P_n^{(k)}(1) and to the
/// B-ladder.
inline BigRational q_coefficient(int n, int k) {
  const auto r = q_coefficient_routes(n, k);
  ensure(r.consistent(), "Q coefficient routes disagree at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                             ": Q " + to_string(r.from_q) + ", closed " + to_string(r.from_closed) +
                             ", P " + r.from_polynomial.str() + ", B " + r.from_b.str());
  return r.from_q;
}

/// The fourth-moment identity: double sum and B-form against 2^{4n-3} n(2n-1).
struct Lemma4Report {
  int n = 0;
  BigInt double_sum, b_form, rhs;
  bool pass() const { return double_sum == rhs && b_form == rhs; }
};

inline Lemma4Report check_lemma4(int n) {
  require(n >= 1, "check_lemma4 needs n >= 1");
  Lemma4Report r;
  r.n = n;
  BigInt dbl = 0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const BigInt d = BigInt(i * i - j * j);
      dbl += d * d * binomial(2 * n, n - i) * binomial(2 * n, n - j);
    }
  }
  const BigInt c = binomial(2 * n, n);
  BigInt fourth = 0;
  for (int j = 0; j <= n; ++j) fourth += ipow(BigInt(j), 4) * binomial(2 * n, n - j);
  r.double_sum = dbl - c * fourth;
  r.b_form = 2 * bnk_direct(n, 4) * bnk_direct(n, 0) - 2 * bnk_direct(n, 2) * bnk_direct(n, 2) - c * bnk_direct(n, 4);
  r.rhs = pow2(4 * n - 3) * n * (2 * n - 1);
  return r;
}

/// sum_{0<=q<=p<=k} dim sp(2k)_{(2^{k-p} 1^{p-q})} dim sp(4)_{(p,q)} = 2^{4k},
/// with the sp(2k) dimensions cross-checked against the two-column display.
inline IdentityReport check_odd_l2(int k) {
  require(k >= 1, "check_odd_l2 needs k >= 1");
  IdentityReport r;
  r.name = "odd-l2";
  r.parameters = "k=" + std::to_string(k);
  for (int p = 0; p <= k; ++p) {
    for (int q = 0; q <= p; ++q) {
      const BigInt big = dim_sp(two_column_shape(k, p, q), k);
      ensure(big == dim_sp_two_column(k, p, q), "two-column sp dimension mismatch");
      r.lhs += big * dim_sp(Partition{p, q}, 2);
    }
  }
  r.rhs = pow2(4 * k);
  r.pass = r.lhs == r.rhs;
  return r;
}

}  // namespace spingrass
