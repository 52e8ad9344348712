#pragma once

// Spinor weights of Grassmannians: the projection matrices onto the Cartan
// subalgebra of so(m) + so(n), exhaustive enumeration of the 2^N projected
// spin weights, peeling into irreducibles, and the conjectured closed forms.

#include "spingrass/arith.hpp"
#include "spingrass/dims.hpp"
#include "spingrass/lie_algebra.hpp"
#include "spingrass/partition.hpp"
#include "spingrass/report.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace spingrass {

enum class GrassmannCase { EVEN, ODD, MIXED, GENERIC };

inline std::string to_string(GrassmannCase c) {
  switch (c) {
    case GrassmannCase::EVEN: return "even";
    case GrassmannCase::ODD: return "odd";
    case GrassmannCase::MIXED: return "mixed";
    case GrassmannCase::GENERIC: return "generic";
  }
  return "?";
}

inline GrassmannCase parse_case(const std::string& s) {
  if (s == "even") return GrassmannCase::EVEN;
  if (s == "odd") return GrassmannCase::ODD;
  if (s == "mixed") return GrassmannCase::MIXED;
  throw precondition_error("case must be even, odd or mixed: '" + s + "'");
}

struct ProjectionMatrix {
  GrassmannCase kase = GrassmannCase::GENERIC;
  int k = 0, l = 0;
  std::vector<std::vector<int>> rows;

  int columns() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }

  /// Target algebra of the projected weights.
  ProductAlgebra target() const {
    switch (kase) {
      case GrassmannCase::EVEN: return {AlgebraId::so_even(k), AlgebraId::so_even(l)};
      case GrassmannCase::ODD: return {AlgebraId::so_odd(k), AlgebraId::so_odd(l)};
      case GrassmannCase::MIXED: return {AlgebraId::so_even(k), AlgebraId::so_odd(l)};
      case GrassmannCase::GENERIC: return {AlgebraId::gl(static_cast<int>(rows.size()))};
    }
    return {};
  }
};

/// Rows i <= k: +1 on the i-th e-block, -1 on the i-th f-block.  Rows k+j:
/// -1 at slot j of every block.  EVEN: 2k blocks of size l.  ODD: k e-blocks
/// of size l+1, then k+1 f-blocks of size l (the last row-free).  MIXED: the
/// ODD layout without the final f-block.
inline ProjectionMatrix projection_matrix(int k, int l, GrassmannCase kase) {
  require(k >= 1 && l >= 1, "projection_matrix needs k, l >= 1");
  ProjectionMatrix a;
  a.kase = kase;
  a.k = k;
  a.l = l;
  std::vector<int> e_sizes, f_sizes;
  switch (kase) {
    case GrassmannCase::EVEN:
      require(k >= l, "even case needs k >= l");
      e_sizes.assign(k, l);
      f_sizes.assign(k, l);
      break;
    case GrassmannCase::ODD:
      require(k >= l, "odd case needs k >= l");
      e_sizes.assign(k, l + 1);
      f_sizes.assign(k + 1, l);
      break;
    case GrassmannCase::MIXED:
      e_sizes.assign(k, l + 1);
      f_sizes.assign(k, l);
      break;
    case GrassmannCase::GENERIC:
      throw precondition_error("generic matrices are supplied by the caller");
  }
  std::vector<int> e_start, f_start;
  int n = 0;
  for (int s : e_sizes) {
    e_start.push_back(n);
    n += s;
  }
  for (int s : f_sizes) {
    f_start.push_back(n);
    n += s;
  }
  a.rows.assign(k + l, std::vector<int>(n, 0));
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < e_sizes[i]; ++c) a.rows[i][e_start[i] + c] = 1;
    for (int c = 0; c < f_sizes[i]; ++c) a.rows[i][f_start[i] + c] = -1;
  }
  for (int j = 0; j < l; ++j) {
    for (std::size_t b = 0; b < e_sizes.size(); ++b) a.rows[k + j][e_start[b] + j] = -1;
    for (std::size_t b = 0; b < f_sizes.size(); ++b) a.rows[k + j][f_start[b] + j] = -1;
  }
  return a;
}

/// Counts of the doubled images M s over s in {+-1/2}^N, split by the
/// parity of the number of negative entries.
struct ImageCounts {
  std::map<std::vector<int>, std::uint64_t> even, odd;
};

namespace detail {

struct Packing {
  std::vector<int> offset, shift;
  bool fits = true;
};

inline Packing packing_for(const std::vector<std::vector<int>>& m) {
  Packing p;
  int used = 0;
  for (const auto& row : m) {
    int range = 0;
    for (int v : row) range += std::abs(v);
    int bits = std::bit_width(static_cast<unsigned>(2 * range + 1));
    p.offset.push_back(range);
    p.shift.push_back(used);
    used += bits;
  }
  p.fits = used <= 64;
  return p;
}

}  // namespace detail

/// Exhaustive enumeration in Gray-code order; chunks over the leading sign
/// bits run on worker threads and are merged by addition, so the result is
/// independent of scheduling.
inline ImageCounts enumerate_images(const std::vector<std::vector<int>>& m, unsigned threads = 0) {
  const int r = static_cast<int>(m.size());
  const int n = r == 0 ? 0 : static_cast<int>(m.front().size());
  for (const auto& row : m) require(static_cast<int>(row.size()) == n, "ragged projection matrix");
  require(n <= 40, "too many sign columns for exhaustive enumeration: " + std::to_string(n));
  const auto pack = detail::packing_for(m);
  require(pack.fits, "projected weights do not fit the packed key");

  const int top = std::min(n, 8);
  const int low = n - top;
  const std::uint64_t chunks = std::uint64_t{1} << top;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));

  using Counts = std::unordered_map<std::uint64_t, std::uint64_t>;
  std::vector<Counts> even_parts(threads), odd_parts(threads);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&](unsigned id) {
    std::vector<int> img(r), sign(n);
    Counts& ev = even_parts[id];
    Counts& od = odd_parts[id];
    auto key = [&] {
      std::uint64_t k = 0;
      for (int i = 0; i < r; ++i) k |= static_cast<std::uint64_t>(img[i] + pack.offset[i]) << pack.shift[i];
      return k;
    };
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      int parity = 0;
      for (int j = 0; j < n; ++j) {
        const bool neg = j >= low && ((c >> (j - low)) & 1u);
        sign[j] = neg ? -1 : 1;
        parity ^= neg;
      }
      for (int i = 0; i < r; ++i) {
        long s = 0;
        for (int j = 0; j < n; ++j) s += m[i][j] * sign[j];
        img[i] = static_cast<int>(s);
      }
      (parity ? od : ev)[key()]++;
      const std::uint64_t steps = std::uint64_t{1} << low;
      for (std::uint64_t g = 1; g < steps; ++g) {
        const int j = std::countr_zero(g);
        const int d = -2 * sign[j];
        sign[j] = -sign[j];
        for (int i = 0; i < r; ++i) img[i] += d * m[i][j];
        parity ^= 1;
        (parity ? od : ev)[key()]++;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& t : pool) t.join();

  auto unpack = [&](std::uint64_t k) {
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) {
      const std::uint64_t width = (i + 1 < r ? pack.shift[i + 1] : 64) - pack.shift[i];
      const std::uint64_t mask = width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
      v[i] = static_cast<int>((k >> pack.shift[i]) & mask) - pack.offset[i];
    }
    return v;
  };
  ImageCounts out;
  for (unsigned t = 0; t < threads; ++t) {
    for (const auto& [k, c] : even_parts[t]) out.even[unpack(k)] += c;
    for (const auto& [k, c] : odd_parts[t]) out.odd[unpack(k)] += c;
  }
  return out;
}

/// Projected spin weights (S+, S-) over the matrix's target algebra; for an
/// odd-dimensional tangent space callers merge the two halves.
inline std::pair<WeightMultiset, WeightMultiset> project_spin_weights(const ProjectionMatrix& a) {
  const auto images = enumerate_images(a.rows);
  WeightMultiset plus(a.target()), minus(a.target());
  for (const auto& [k, c] : images.even) plus.add(k, BigInt(c));
  for (const auto& [k, c] : images.odd) minus.add(k, BigInt(c));
  return {std::move(plus), std::move(minus)};
}

/// All images M s, s in {+-1/2}^d, keyed by doubled coordinates in a gl(r)
/// lattice (no chirality split).
inline WeightMultiset project_generic(const std::vector<std::vector<int>>& m) {
  require(!m.empty(), "empty projection matrix");
  const auto images = enumerate_images(m);
  WeightMultiset out(AlgebraId::gl(static_cast<int>(m.size())));
  for (const auto& [k, c] : images.even) out.add(k, BigInt(c));
  for (const auto& [k, c] : images.odd) out.add(k, BigInt(c));
  return out;
}

/// Reinterprets lattice images as weights of target, multiplying every
/// coordinate by unit (e.g. 1/2 when the matrix is written in doubled units).
inline WeightMultiset rescale(const WeightMultiset& images, const ProductAlgebra& target, const BigRational& unit) {
  require(images.algebra().rank() == target.rank(), "rescale: rank mismatch");
  WeightMultiset out(target);
  for (const auto& [k, c] : images.entries()) {
    std::vector<int> t(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
      const BigRational v = BigRational(k[i]) * unit;
      require(denominator(v) == 1, "rescaled weight leaves the half-integer lattice");
      t[i] = static_cast<int>(numerator(v));
    }
    out.add(t, c);
  }
  return out;
}

enum class Chirality { PLUS, MINUS, NONE };

inline std::string to_string(Chirality c) {
  switch (c) {
    case Chirality::PLUS: return "+";
    case Chirality::MINUS: return "-";
    case Chirality::NONE: return "none";
  }
  return "?";
}

struct Summand {
  std::vector<Weight> factors;
  BigInt multiplicity = 1;
  Chirality chirality = Chirality::NONE;
  std::vector<BigInt> dims;

  BigInt dimension() const {
    BigInt d = multiplicity;
    for (const auto& v : dims) d *= v;
    return d;
  }

  /// "(2,2,0,0|1,-1)"-style label with plain integers or halves.
  std::string label() const {
    std::string s = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += '|';
      auto t = factors[i].to_string();
      s += t.substr(1, t.size() - 2);
    }
    return s + ")";
  }

  friend bool operator==(const Summand&, const Summand&) = default;
};

struct Decomposition {
  ProductAlgebra algebra;
  std::vector<Summand> summands;

  BigInt total_dim() const {
    BigInt t = 0;
    for (const auto& s : summands) t += s.dimension();
    return t;
  }

  BigInt total_dim(Chirality c) const {
    BigInt t = 0;
    for (const auto& s : summands) {
      if (s.chirality == c) t += s.dimension();
    }
    return t;
  }

  /// Canonical order: chirality, then factors.
  void sort() {
    std::sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) {
      if (a.chirality != b.chirality) return a.chirality < b.chirality;
      return a.factors > b.factors;
    });
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline Summand make_summand(std::vector<Weight> factors, Chirality c, BigInt mult = 1) {
  Summand s;
  s.factors = std::move(factors);
  s.chirality = c;
  s.multiplicity = std::move(mult);
  for (const auto& w : s.factors) s.dims.push_back(dimension(w));
  return s;
}

/// Splits a Weyl-invariant multiset into irreducibles by repeatedly removing
/// the character of its lexicographically greatest weight.
inline Decomposition peel(const WeightMultiset& ws, Chirality tag = Chirality::NONE) {
  const ProductAlgebra& alg = ws.algebra();
  auto rest = ws.entries();
  Decomposition out;
  out.algebra = alg;
  std::map<std::vector<int>, BigInt> found;
  while (!rest.empty()) {
    const auto top = rest.rbegin()->first;
    const BigInt mult = rest.rbegin()->second;
    const auto factors = alg.split(top);
    for (const auto& w : factors) {
      ensure(is_dominant(w), "peel: greatest remaining weight " + w.to_string() + " is not dominant for " +
                                 w.algebra().name() + "; input is not Weyl invariant");
    }
    const auto ch = product_character(factors);
    for (const auto& [k, m] : ch.entries()) {
      auto it = rest.find(k);
      const BigInt need = m * mult;
      if (it == rest.end() || it->second < need) {
        throw consistency_error("peel: removing " + alg.name() + " character of " + Summand{factors, 1, Chirality::NONE, {}}.label() +
                                " drives a multiplicity negative; input is not a character");
      }
      it->second -= need;
      if (it->second == 0) rest.erase(it);
    }
    found[top] += mult;
  }
  for (auto it = found.rbegin(); it != found.rend(); ++it) {
    out.summands.push_back(make_summand(alg.split(it->first), tag, it->second));
  }
  return out;
}

/// Peels projected spin weights; the tangent space is even-dimensional in
/// the EVEN and MIXED cases (S+ / S- kept apart), odd in the ODD case.
inline Decomposition decompose(int k, int l, GrassmannCase kase) {
  const auto a = projection_matrix(k, l, kase);
  auto [plus, minus] = project_spin_weights(a);
  Decomposition d;
  d.algebra = a.target();
  if (kase == GrassmannCase::ODD) {
    for (const auto& [key, c] : minus.entries()) plus.add(key, c);
    d = peel(plus, Chirality::NONE);
  } else {
    auto p = peel(plus, Chirality::PLUS);
    auto m = peel(minus, Chirality::MINUS);
    d.summands = std::move(p.summands);
    d.summands.insert(d.summands.end(), m.summands.begin(), m.summands.end());
  }
  d.sort();
  return d;
}

/// The closed-form decompositions: EVEN (lambda | lambda^c) with the sign
/// on whichever last entry is nonzero and S+ iff |lambda| is even; ODD
/// (lambda + e/2 | lambda^c + e/2); MIXED (lambda + e/2 with last sign +- |
/// lambda^c), where S+ carries the sign (-1)^|lambda|.
inline Decomposition conjectured_decomposition(int k, int l, GrassmannCase kase) {
  require(k >= 1 && l >= 1, "need k, l >= 1");
  if (kase != GrassmannCase::MIXED) require(k >= l, "need k >= l");
  Decomposition d;
  for (const auto& lam : partitions_in_rectangle(k, l)) {
    const auto v = lam.padded(k);
    const auto c = conjugate_lm(lam, k, l).padded(l);
    switch (kase) {
      case GrassmannCase::EVEN: {
        d.algebra = {AlgebraId::so_even(k), AlgebraId::so_even(l)};
        const Chirality ch = lam.boxes() % 2 == 0 ? Chirality::PLUS : Chirality::MINUS;
        for (int s : {1, -1}) {
          auto v1 = v;
          auto c1 = c;
          if (v1.back() != 0) {
            v1.back() *= s;
          } else {
            c1.back() *= s;
          }
          d.summands.push_back(make_summand({Weight::from_integers(AlgebraId::so_even(k), v1),
                                             Weight::from_integers(AlgebraId::so_even(l), c1)},
                                            ch));
        }
        break;
      }
      case GrassmannCase::ODD:
        d.algebra = {AlgebraId::so_odd(k), AlgebraId::so_odd(l)};
        d.summands.push_back(make_summand({Weight::half_shifted(AlgebraId::so_odd(k), v),
                                           Weight::half_shifted(AlgebraId::so_odd(l), c)},
                                          Chirality::NONE));
        break;
      case GrassmannCase::MIXED: {
        d.algebra = {AlgebraId::so_even(k), AlgebraId::so_odd(l)};
        for (int s : {1, -1}) {
          auto h = Weight::half_shifted(AlgebraId::so_even(k), v).twice();
          h.back() *= s;
          d.summands.push_back(make_summand(
              {Weight(AlgebraId::so_even(k), h), Weight::from_integers(AlgebraId::so_odd(l), c)},
              s == (lam.boxes() % 2 == 0 ? 1 : -1) ? Chirality::PLUS : Chirality::MINUS));
        }
        break;
      }
      case GrassmannCase::GENERIC:
        throw precondition_error("no conjecture for generic matrices");
    }
  }
  d.sort();
  return d;
}

/// Sign vector (entries +-1, i.e. doubled +-1/2) whose EVEN-case image is
/// (l^{k-lambda_1}, (l-1)^{lambda_1-lambda_2}, ..., 0^{lambda_l} | lambda).
/// lambda labels the so(2l) factor: at most l parts, each at most k.
inline std::vector<int> conjecture_preimage(const Partition& lambda, int k, int l) {
  require(k >= 1 && l >= 1, "need k, l >= 1");
  require(lambda.length() <= l && lambda.first() <= k,
          "conjecture_preimage: " + lambda.to_string() + " does not fit l = " + std::to_string(l) +
              " parts of size at most k = " + std::to_string(k));
  auto block = [l](int m) {
    std::vector<int> b(l, 1);
    for (int i = 0; i < m; ++i) b[i] = -1;
    return b;
  };
  std::vector<int> w;
  auto repeat = [&](int m, int times) {
    for (int t = 0; t < times; ++t) {
      auto b = block(m);
      w.insert(w.end(), b.begin(), b.end());
    }
  };
  repeat(0, k - lambda[0]);
  for (int i = 1; i < l; ++i) repeat(i, lambda[i - 1] - lambda[i]);
  repeat(l, k + lambda[l - 1]);
  return w;
}

/// Doubled image A s.
inline std::vector<int> apply(const ProjectionMatrix& a, const std::vector<int>& signs) {
  require(static_cast<int>(signs.size()) == a.columns(), "sign vector length does not match matrix");
  std::vector<int> out;
  for (const auto& row : a.rows) {
    long s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * signs[j];
    out.push_back(static_cast<int>(s));
  }
  return out;
}

/// EVEN: sum over lambda in (l^k) of dim so(2k)_lambda dim so(2l)_{lambda^c}
/// against 2^{2kl-1}.  ODD: the sp(2k) x sp(2l) analogue against 2^{2kl}.
inline IdentityReport verify_dimension_identity(int k, int l, GrassmannCase kase) {
  require(k >= l && l >= 1, "need k >= l >= 1");
  require(kase == GrassmannCase::EVEN || kase == GrassmannCase::ODD, "identity exists for even and odd cases");
  IdentityReport r;
  r.name = kase == GrassmannCase::EVEN ? "master" : "master2";
  r.parameters = "k=" + std::to_string(k) + " l=" + std::to_string(l);
  for (const auto& lam : partitions_in_rectangle(k, l)) {
    const auto c = conjugate_lm(lam, k, l);
    if (kase == GrassmannCase::EVEN) {
      r.lhs += dim_so_even(Weight::from_integers(AlgebraId::so_even(k), lam.padded(k))) *
               dim_so_even(Weight::from_integers(AlgebraId::so_even(l), c.padded(l)));
    } else {
      r.lhs += dim_sp(lam, k) * dim_sp(c, l);
    }
  }
  r.rhs = pow2(2 * k * l - (kase == GrassmannCase::EVEN ? 1 : 0));
  r.pass = r.lhs == r.rhs;
  return r;
}

/// m + n even or one of them equal to 1.
inline bool grassmannian_is_spin(int m, int n) { return (m + n) % 2 == 0 || m == 1 || n == 1; }

}  // namespace spingrass
