#include "spingrass/dirac.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace spingrass;

namespace {

using Pair = std::pair<Partition, Partition>;

// sum_i lambda_i (lambda_i + 2(n-1-i))
long casimir_oracle(const std::vector<int>& lambda, int n) {
  long c = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) c += static_cast<long>(lambda[i]) * (lambda[i] + 2 * (n - 1 - static_cast<long>(i)));
  return c;
}

std::vector<int> rep(int v, int times) { return std::vector<int>(std::max(times, 0), v); }

std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<std::pair<Partition, long>> rows_of(const std::vector<SpectrumEntry>& es) {
  std::vector<std::pair<Partition, long>> out;
  for (const auto& e : es) out.emplace_back(e.lambda, static_cast<long>(e.casimir_eucl));
  return out;
}

}  // namespace

TEST_CASE("space checks") {
  CHECK_THROWS_AS(GrassmannEven(2, 3), precondition_error);
  CHECK_THROWS_AS(GrassmannEven(3, 1), precondition_error);
  const GrassmannEven g(3, 2);
  CHECK(g.metric_denominator() == 16);
  CHECK(g.curvature_shift() == 3);
}

TEST_CASE("Casimir values") {
  const GrassmannEven g(2, 2);
  CHECK(casimir(Partition{2, 1, 1}, g).casimir_eucl == 24);
  CHECK(casimir(Partition{5, 1}, g).casimir_eucl == 60);
  CHECK(casimir(Partition(), g).casimir_eucl == 0);
  CHECK(casimir(Partition{2, 1, 1}, g).casimir_b == 2);
  CHECK(casimir(Partition{2, 1, 1}, g).eigenvalue_sq == 4);
  CHECK_THROWS_AS(casimir(Partition{1, 1, 1, 1, 1}, g), precondition_error);
  for (int t = 0; t < 300; ++t) {
    const int k = testing::uniform(2, 5), l = testing::uniform(2, k);
    const auto lam = testing::random_partition(k + l, 6);
    REQUIRE(casimir(lam, GrassmannEven(k, l)).casimir_eucl == casimir_oracle(lam.parts(), k + l));
  }
}

TEST_CASE("Psi set") {
  auto one = [](int n, int i, int j) {
    std::vector<int> v(n, 0);
    v[i - 1] = 2;
    v[j - 1] = -2;
    return v;
  };
  const auto p22 = psi_set(GrassmannEven(2, 2));
  REQUIRE(p22.size() == 1);
  CHECK(p22[0].twice() == one(4, 2, 3));
  const auto p32 = psi_set(GrassmannEven(3, 2));
  REQUIRE(p32.size() == 1);
  CHECK(p32[0].twice() == one(5, 3, 4));
  // |Psi| = l(l-1)/2
  for (int k = 2; k <= 6; ++k) {
    for (int l = 2; l <= k; ++l) CHECK(psi_set(GrassmannEven(k, l)).size() == static_cast<std::size_t>(l * (l - 1) / 2));
  }
}

TEST_CASE("smallest eigenvalue") {
  struct Row {
    int k, l;
    BigRational value;
    long min_norm;
  };
  for (const auto& [k, l, value, norm] : std::vector<Row>{{2, 2, 3, 6},
                                                           {3, 2, BigRational(17, 4), 10},
                                                           {4, 2, BigRational(27, 5), 14},
                                                           {3, 3, BigRational(32, 5), 19},
                                                           {5, 2, BigRational(13, 2), 18}}) {
    CAPTURE(k, l);
    const GrassmannEven g(k, l);
    const auto r = min_eigenvalue_report(g);
    CHECK(r.value() == value);
    REQUIRE(r.decomposition_used);
    CHECK(*r.min_norm == norm);
    CHECK(*r.from_decomposition == value);
    CHECK(r.from_psi == value);
    CHECK(2 * BigRational(norm) / g.metric_denominator() + BigRational(k * l, 2) == value);
  }
  const auto big = min_eigenvalue_report(GrassmannEven(4, 3));
  CHECK_FALSE(big.decomposition_used);
  CHECK_FALSE(big.min_norm.has_value());
  CHECK(big.value() == BigRational(25, 3));
  for (int k = 2; k <= 12; ++k) {
    for (int l = 2; l <= k; ++l) {
      const int n = k + l;
      // min over the 2^l minimal weights of |beta|^2, oracle-side
      BigRational best = -1;
      for (const auto& [big_part, small] : minimal_weights(GrassmannEven(k, l))) {
        BigRational nn = 0;
        for (int v : big_part.padded(k)) nn += v * v;
        for (int v : small.padded(l)) nn += v * v;
        if (best < 0 || nn < best) best = nn;
      }
      REQUIRE(2 * best / (4 * (n - 1)) + BigRational(k * l, 2) == min_eigenvalue_sq(GrassmannEven(k, l)));
    }
  }
}

TEST_CASE("minimal weights") {
  for (int k = 2; k <= 6; ++k) {
    auto expect = std::vector<Pair>{{Partition(cat({rep(2, k - 1), {1}})), Partition{1, 0}},
                                    {Partition(cat({rep(2, k - 1), {0}})), Partition{1, 1}},
                                    {Partition(cat({rep(2, k - 2), {1, 1}})), Partition{2, 0}},
                                    {Partition(cat({rep(2, k - 2), {1, 0}})), Partition{2, 1}}};
    auto got = minimal_weights(GrassmannEven(k, 2));
    auto norm = [](const std::vector<Pair>& v) {
      std::set<std::pair<std::vector<int>, std::vector<int>>> s;
      for (const auto& [a, b] : v) s.insert({a.normalized().parts(), b.normalized().parts()});
      return s;
    };
    CHECK(norm(got) == norm(expect));
  }
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {3, 3}}) {
    CAPTURE(k, l);
    const GrassmannEven g(k, l);
    const auto argmin = minimal_weights_from_decomposition(decompose(k, l, GrassmannCase::EVEN));
    CHECK(argmin.size() == static_cast<std::size_t>(1 << l));
    CHECK(argmin == minimal_weights(g));
  }
  for (const auto& [a, b] : minimal_weights(GrassmannEven(2, 2))) {
    long nn = 0;
    for (int v : a.padded(2)) nn += v * v;
    for (int v : b.padded(2)) nn += v * v;
    CHECK(nn == 6);
  }
}

TEST_CASE("spectrum of G(4,4)") {
  const GrassmannEven g(2, 2);
  const auto spectrum = enumerate_spectrum(g, 60);
  const std::vector<std::pair<Partition, long>> expect = {
      {{2, 1, 1}, 24},    {{2, 2}, 28},       {{3, 1}, 32},    {{2, 2, 1, 1}, 32}, {{3, 1, 1, 1}, 36}, {{2, 2, 2}, 36},
      {{3, 2, 1}, 42},    {{4, 1, 1}, 48},    {{3, 3}, 48},    {{4, 2}, 52},       {{5, 1}, 60}};
  auto sorted = [](std::vector<std::pair<Partition, long>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(rows_of(spectrum)) == sorted(expect));
  REQUIRE(!spectrum.empty());
  CHECK(spectrum.front().lambda == Partition{2, 1, 1});
  CHECK(spectrum[1].casimir_eucl > spectrum[0].casimir_eucl);
  CHECK(enumerate_spectrum(g, 23).empty());
  for (std::size_t i = 1; i < spectrum.size(); ++i) REQUIRE(spectrum[i - 1].casimir_eucl <= spectrum[i].casimir_eucl);
  for (const auto& e : spectrum) {
    REQUIRE(!e.witnesses.empty());
    REQUIRE(contributes_to_spectrum(e.lambda, g));
  }
}

TEST_CASE("deeper kappa expansions") {
  const GrassmannEven g(2, 2);
  const auto all = enumerate_spectrum(g, 60, -1);
  std::set<Partition> lambdas;
  for (const auto& e : all) lambdas.insert(e.lambda);
  for (const auto& extra : std::vector<Partition>{{2, 2, 2, 2}, {3, 2, 2, 1}, {3, 3, 1, 1}, {4, 2, 1, 1}, {3, 3, 2},
                                                  {4, 2, 2}, {3, 3, 2, 2}}) {
    CHECK(lambdas.count(extra));
  }
  CHECK(all.size() == 18);
  CHECK_FALSE(contributes_to_spectrum(Partition{2, 2, 2, 2}, g));
  CHECK(contributes_to_spectrum(Partition{3, 2, 2, 1}, g));
  const auto exact = exact_spectrum(g, 60);
  CHECK(exact.size() == 17);
  for (const auto& e : exact) CHECK(e.lambda != Partition{2, 2, 2, 2});
}

TEST_CASE("spectrum enumeration is stable in the bound") {
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
    const GrassmannEven g(k, l);
    const auto small = enumerate_spectrum(g, 48);
    const auto large = enumerate_spectrum(g, 70);
    std::vector<std::pair<Partition, long>> prefix;
    for (const auto& r : rows_of(large)) {
      if (r.second <= 48) prefix.push_back(r);
    }
    CHECK(rows_of(small) == prefix);
  }
}

TEST_CASE("witnesses are consistent with the branching rule") {
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
    const GrassmannEven g(k, l);
    for (const auto& e : enumerate_spectrum(g, 56)) {
      const auto branch = branch_so_to_pair(e.lambda, k, l);
      for (const auto& w : e.witnesses) {
        const Partition mc = conjugate_lm(w.mu, k, l).normalized();
        REQUIRE(branch.count({w.mu, mc}));
        REQUIRE(lr_coefficient(w.mu, mc, w.lambda_prime) > 0);
        REQUIRE(lr_coefficient(w.two_kappa, w.lambda_prime, e.lambda) > 0);
      }
    }
  }
}

TEST_CASE("smallest contribution") {
  for (int k = 2; k <= 8; ++k) {
    const auto e = smallest_contribution(GrassmannEven(k, 2));
    CHECK(e.lambda == Partition(cat({rep(2, k - 1), {1, 1}})));
    CHECK(e.casimir_eucl == 2 * k * k + 10 * k - 4);
  }
  CHECK(smallest_contribution(GrassmannEven(3, 3)).lambda == Partition{3, 2, 2, 1, 1});
  CHECK(smallest_contribution(GrassmannEven(3, 3)).casimir_eucl == 83);
  CHECK(smallest_contribution(GrassmannEven(4, 3)).casimir_eucl == 128);
  CHECK(smallest_contribution(GrassmannEven(2, 2)).lambda == enumerate_spectrum(GrassmannEven(2, 2), 60).front().lambda);
  for (int k = 3; k <= 7; ++k) {
    for (int l = 3; l <= k; ++l) {
      const auto e = smallest_contribution(GrassmannEven(k, l));
      std::vector<int> parts = rep(l, k - l + 1);
      for (int v = l - 1; v >= 1; --v) parts.insert(parts.end(), {v, v});
      REQUIRE(e.casimir_eucl == casimir_oracle(parts, k + l));
    }
  }
}

TEST_CASE("products of the minimal pairs for l = 2") {
  for (int k = 4; k <= 6; ++k) {
    CAPTURE(k);
    const int n = k + 2;
    const std::vector<std::pair<std::vector<int>, long>> table = {
        {cat({{4, 3}, rep(2, k - 4), {1}}), 2L * k * k + 16 * k},
        {cat({{4}, rep(2, k - 2)}), 2L * k * k + 14 * k + 4},
        {cat({{4}, rep(2, k - 3), {1, 1}}), 2L * k * k + 14 * k},
        {cat({{3, 3}, rep(2, k - 3)}), 2L * k * k + 14 * k},
        {cat({{3}, rep(2, k - 2), {1}}), 2L * k * k + 12 * k},
        {cat({{3}, rep(2, k - 3), {1, 1, 1}}), 2L * k * k + 12 * k - 6},
        {rep(2, k), 2L * k * k + 10 * k},
        {cat({rep(2, k - 1), {1, 1}}), 2L * k * k + 10 * k - 4},
    };
    const auto products = minimal_pair_products(GrassmannEven(k, 2));
    std::map<Partition, long> got;
    for (const auto& e : products) got[e.lambda] = static_cast<long>(e.casimir_eucl);
    for (const auto& [parts, c] : table) {
      REQUIRE(casimir_oracle(parts, n) == c);
      REQUIRE(got.count(Partition(parts)));
      CHECK(got[Partition(parts)] == c);
    }
    // one more row beyond the eight: (3^2, 2^{k-4}, 1^2)
    CHECK(got.size() == 9);
    const Partition extra(cat({{3, 3}, rep(2, k - 4), {1, 1}}));
    REQUIRE(got.count(extra));
    CHECK(got[extra] == 2L * k * k + 14 * k - 4);
  }
}

TEST_CASE("norm identity for spinor weights") {
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
    const GrassmannEven g(k, l);
    for (const auto& s : decompose(k, l, GrassmannCase::EVEN).summands) {
      BigRational nn = 0;
      for (const auto& w : s.factors) {
        for (int v : w.integers()) nn += v * v;
      }
      REQUIRE(nn == spinor_norm_from_small_part(g, s.factors[1].integers()));
    }
  }
}
