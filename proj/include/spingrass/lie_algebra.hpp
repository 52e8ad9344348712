#pragma once

// Classical root systems (gl, so even, so odd, sp), weights with exact
// half-integer coordinates, and Freudenthal weight multiplicities.

#include "spingrass/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace spingrass {

enum class Family { GL, SO_EVEN, SO_ODD, SP };

/// A classical simple (or reductive, for gl) algebra.  The rank parameter n
/// means gl(n), so(2n), so(2n+1) or sp(2n); all four have n Cartan
/// coordinates.
struct AlgebraId {
  Family family = Family::GL;
  int rank = 1;

  static AlgebraId gl(int n) { return {Family::GL, n}; }
  static AlgebraId so_even(int n) { return {Family::SO_EVEN, n}; }
  static AlgebraId so_odd(int n) { return {Family::SO_ODD, n}; }
  static AlgebraId sp(int n) { return {Family::SP, n}; }

  /// Dimension of the defining representation.
  int vector_dim() const {
    switch (family) {
      case Family::GL: return rank;
      case Family::SO_EVEN: return 2 * rank;
      case Family::SO_ODD: return 2 * rank + 1;
      case Family::SP: return 2 * rank;
    }
    return 0;
  }

  std::string name() const {
    const std::string d = std::to_string(vector_dim());
    switch (family) {
      case Family::GL: return "gl(" + d + ")";
      case Family::SO_EVEN:
      case Family::SO_ODD: return "so(" + d + ")";
      case Family::SP: return "sp(" + d + ")";
    }
    return "?";
  }

  /// Accepts "so(8)", "so(7)", "sp(4)", "gl(4)".
  static AlgebraId parse(const std::string& text) {
    auto open = text.find('(');
    auto close = text.find(')');
    require(open != std::string::npos && close != std::string::npos && close > open + 1,
            "algebra must look like so(8), sp(4) or gl(3): '" + text + "'");
    const std::string kind = text.substr(0, open);
    int d = 0;
    try {
      d = std::stoi(text.substr(open + 1, close - open - 1));
    } catch (const std::exception&) {
      throw precondition_error("bad algebra dimension in '" + text + "'");
    }
    require(d >= 1, "algebra dimension must be positive: '" + text + "'");
    if (kind == "gl") return gl(d);
    if (kind == "so") {
      require(d >= 2, "so(1) has no Cartan subalgebra");
      return d % 2 == 0 ? so_even(d / 2) : so_odd(d / 2);
    }
    if (kind == "sp") {
      require(d % 2 == 0, "sp(n) needs even n: '" + text + "'");
      return sp(d / 2);
    }
    throw precondition_error("unknown algebra family '" + kind + "'");
  }

  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
  friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;
};

/// Weight in the standard e_i basis, stored as twice its coordinates.
class Weight {
public:
  Weight() = default;

  Weight(AlgebraId algebra, std::vector<int> twice) : algebra_(algebra), twice_(std::move(twice)) {
    require(static_cast<int>(twice_.size()) == algebra_.rank,
            "weight length " + std::to_string(twice_.size()) + " does not match rank of " +
                algebra_.name());
    bool all_even = true, all_odd = true;
    for (int v : twice_) {
      (v % 2 == 0 ? all_odd : all_even) = false;
    }
    require(all_even || all_odd,
            "weight mixes integer and half-integer coordinates: " + to_string());
  }

  static Weight from_integers(AlgebraId algebra, const std::vector<int>& coords) {
    std::vector<int> t(coords.size());
    std::transform(coords.begin(), coords.end(), t.begin(), [](int v) { return 2 * v; });
    return Weight(algebra, std::move(t));
  }

  /// Integer parts shifted by +1/2 (the "lambda + e/2" weights).
  static Weight half_shifted(AlgebraId algebra, const std::vector<int>& coords) {
    std::vector<int> t(coords.size());
    std::transform(coords.begin(), coords.end(), t.begin(), [](int v) { return 2 * v + 1; });
    return Weight(algebra, std::move(t));
  }

  /// Parses "[3/2,1/2]" or "[2,1,0]".
  static Weight parse(AlgebraId algebra, const std::string& text) {
    std::string body;
    for (char c : text) {
      if (c == '[' || c == ']' || c == '(' || c == ')') continue;
      body += (c == ',') ? ' ' : c;
    }
    std::vector<int> twice;
    std::size_t pos = 0;
    while (pos < body.size()) {
      while (pos < body.size() && body[pos] == ' ') ++pos;
      if (pos >= body.size()) break;
      auto end = body.find(' ', pos);
      if (end == std::string::npos) end = body.size();
      BigRational q = parse_rational(body.substr(pos, end - pos));
      BigRational t = 2 * q;
      require(denominator(t) == 1, "weight coordinates must be integers or halves: '" + text + "'");
      twice.push_back(static_cast<int>(numerator(t)));
      pos = end;
    }
    return Weight(algebra, std::move(twice));
  }

  const AlgebraId& algebra() const { return algebra_; }
  const std::vector<int>& twice() const { return twice_; }
  int rank() const { return algebra_.rank; }

  BigRational coord(std::size_t i) const { return BigRational(twice_.at(i), 2); }

  bool is_integral() const {
    return std::all_of(twice_.begin(), twice_.end(), [](int v) { return v % 2 == 0; });
  }

  bool is_half_integral() const {
    return !twice_.empty() &&
           std::all_of(twice_.begin(), twice_.end(), [](int v) { return v % 2 != 0; });
  }

  /// Coordinates when integral.
  std::vector<int> integers() const {
    require(is_integral(), "weight " + to_string() + " is not integral");
    std::vector<int> r(twice_.size());
    std::transform(twice_.begin(), twice_.end(), r.begin(), [](int v) { return v / 2; });
    return r;
  }

  /// Squared Euclidean norm, exact.
  BigRational norm2() const {
    long s = 0;
    for (int v : twice_) s += static_cast<long>(v) * v;
    return BigRational(s, 4);
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < twice_.size(); ++i) {
      if (i) s += ',';
      s += twice_[i] % 2 == 0 ? std::to_string(twice_[i] / 2) : std::to_string(twice_[i]) + "/2";
    }
    return s + "]";
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

private:
  AlgebraId algebra_;
  std::vector<int> twice_;
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << w.algebra().name() << w.to_string();
}

/// Direct sum of classical algebras; a weight of the sum is the
/// concatenation of the factors' coordinates.
struct ProductAlgebra {
  std::vector<AlgebraId> factors;

  ProductAlgebra() = default;
  ProductAlgebra(std::initializer_list<AlgebraId> f) : factors(f) {}
  explicit ProductAlgebra(std::vector<AlgebraId> f) : factors(std::move(f)) {}

  int rank() const {
    int r = 0;
    for (const auto& a : factors) r += a.rank;
    return r;
  }

  int offset(std::size_t factor) const {
    int r = 0;
    for (std::size_t i = 0; i < factor; ++i) r += factors[i].rank;
    return r;
  }

  std::string name() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += "+";
      s += factors[i].name();
    }
    return s;
  }

  /// Splits a concatenated doubled-coordinate key into per-factor weights.
  std::vector<Weight> split(const std::vector<int>& key) const {
    std::vector<Weight> out;
    std::size_t pos = 0;
    for (const auto& a : factors) {
      out.emplace_back(a, std::vector<int>(key.begin() + pos, key.begin() + pos + a.rank));
      pos += a.rank;
    }
    return out;
  }

  friend bool operator==(const ProductAlgebra&, const ProductAlgebra&) = default;
};

/// Multiset of weights (keys are concatenated doubled coordinates) with
/// arbitrary-precision multiplicities.  Entries with multiplicity zero are
/// never stored.
class WeightMultiset {
public:
  using Key = std::vector<int>;
  using Map = std::map<Key, BigInt>;

  WeightMultiset() = default;
  explicit WeightMultiset(ProductAlgebra algebra) : algebra_(std::move(algebra)) {}
  explicit WeightMultiset(AlgebraId algebra) : algebra_({algebra}) {}

  const ProductAlgebra& algebra() const { return algebra_; }
  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t distinct() const { return entries_.size(); }

  void add(const Key& key, const BigInt& mult) {
    require(static_cast<int>(key.size()) == algebra_.rank(),
            "weight key length does not match " + algebra_.name());
    if (mult == 0) return;
    auto [it, inserted] = entries_.try_emplace(key, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) entries_.erase(it);
    }
  }

  void add(const Weight& w, const BigInt& mult = 1) { add(w.twice(), mult); }

  BigInt multiplicity(const Key& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  BigInt total() const {
    BigInt t = 0;
    for (const auto& [k, m] : entries_) t += m;
    return t;
  }

  friend bool operator==(const WeightMultiset& a, const WeightMultiset& b) {
    return a.algebra_ == b.algebra_ && a.entries_ == b.entries_;
  }

private:
  ProductAlgebra algebra_;
  Map entries_;
};

namespace detail {

inline long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

/// Positive roots as doubled coordinate vectors.
inline std::vector<std::vector<int>> positive_roots_twice(const AlgebraId& a) {
  const int n = a.rank;
  std::vector<std::vector<int>> roots;
  auto unit = [n](int i, int v) {
    std::vector<int> r(n, 0);
    r[i] = v;
    return r;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto minus = unit(i, 2);
      minus[j] = -2;
      roots.push_back(minus);
      if (a.family != Family::GL) {
        auto plus = unit(i, 2);
        plus[j] = 2;
        roots.push_back(plus);
      }
    }
  }
  if (a.family == Family::SO_ODD) {
    for (int i = 0; i < n; ++i) roots.push_back(unit(i, 2));
  } else if (a.family == Family::SP) {
    for (int i = 0; i < n; ++i) roots.push_back(unit(i, 4));
  }
  return roots;
}

inline std::vector<int> rho_twice(const AlgebraId& a) {
  std::vector<int> sum(a.rank, 0);
  for (const auto& r : positive_roots_twice(a)) {
    for (int i = 0; i < a.rank; ++i) sum[i] += r[i];
  }
  // sum holds 2 * (sum of roots); rho = half of the root sum
  for (int& v : sum) v /= 2;
  return sum;
}

/// Simple-root coefficients of a doubled difference vector, or nullopt when
/// the difference is not in the root lattice.
inline std::optional<std::vector<long>> simple_root_coefficients(const AlgebraId& a,
                                                                 const std::vector<int>& diff_twice) {
  const int n = a.rank;
  std::vector<long> partial(n);
  long s = 0;
  for (int i = 0; i < n; ++i) {
    s += diff_twice[i];
    if (s % 2 != 0) return std::nullopt;
    partial[i] = s / 2;
  }
  std::vector<long> c(n, 0);
  switch (a.family) {
    case Family::GL:
      if (partial[n - 1] != 0) return std::nullopt;
      for (int i = 0; i + 1 < n; ++i) c[i] = partial[i];
      break;
    case Family::SO_ODD:
      for (int i = 0; i < n; ++i) c[i] = partial[i];
      break;
    case Family::SP:
      if (partial[n - 1] % 2 != 0) return std::nullopt;
      for (int i = 0; i + 1 < n; ++i) c[i] = partial[i];
      c[n - 1] = partial[n - 1] / 2;
      break;
    case Family::SO_EVEN:
      if (n == 1) {
        if (partial[0] != 0) return std::nullopt;
        break;
      }
      if (partial[n - 1] % 2 != 0) return std::nullopt;
      for (int i = 0; i + 2 < n; ++i) c[i] = partial[i];
      c[n - 1] = partial[n - 1] / 2;
      c[n - 2] = partial[n - 2] - c[n - 1];
      break;
  }
  return c;
}

/// Representative of the Weyl orbit inside the dominant chamber.
inline std::vector<int> dominant_conjugate(const AlgebraId& a, std::vector<int> w) {
  if (a.family == Family::GL) {
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
  }
  int negatives = 0;
  bool has_zero = false;
  for (int& v : w) {
    if (v < 0) {
      ++negatives;
      v = -v;
    }
    has_zero = has_zero || v == 0;
  }
  std::sort(w.begin(), w.end(), std::greater<>());
  if (a.family == Family::SO_EVEN && !has_zero && negatives % 2 == 1) w.back() = -w.back();
  return w;
}

inline bool is_dominant_twice(const AlgebraId& a, const std::vector<int>& w) {
  const int n = a.rank;
  for (int i = 0; i + 1 < n; ++i) {
    const int next = (a.family == Family::SO_EVEN && i + 2 == n) ? std::abs(w[i + 1]) : w[i + 1];
    if (w[i] < next) return false;
  }
  if ((a.family == Family::SO_ODD || a.family == Family::SP) && w[n - 1] < 0) return false;
  return true;
}

/// The full Weyl orbit of a dominant weight.
inline std::vector<std::vector<int>> weyl_orbit(const AlgebraId& a, const std::vector<int>& dominant) {
  std::vector<std::vector<int>> out;
  if (a.family == Family::GL) {
    std::vector<int> p = dominant;
    std::sort(p.begin(), p.end());
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }
  std::vector<int> mags(dominant.size());
  std::transform(dominant.begin(), dominant.end(), mags.begin(), [](int v) { return std::abs(v); });
  std::sort(mags.begin(), mags.end());
  const bool has_zero = !mags.empty() && mags.front() == 0;
  const int want_parity = (a.family == Family::SO_EVEN && !dominant.empty() && dominant.back() < 0) ? 1 : 0;
  do {
    std::vector<int> nonzero;
    for (std::size_t i = 0; i < mags.size(); ++i) {
      if (mags[i] != 0) nonzero.push_back(static_cast<int>(i));
    }
    const unsigned combos = 1u << nonzero.size();
    for (unsigned s = 0; s < combos; ++s) {
      if (a.family == Family::SO_EVEN && !has_zero &&
          static_cast<int>(__builtin_popcount(s) % 2) != want_parity) {
        continue;
      }
      std::vector<int> w = mags;
      for (std::size_t b = 0; b < nonzero.size(); ++b) {
        if (s & (1u << b)) w[nonzero[b]] = -w[nonzero[b]];
      }
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(mags.begin(), mags.end()));
  return out;
}

inline void require_integral_for_family(const Weight& w) {
  const auto fam = w.algebra().family;
  if (fam == Family::GL || fam == Family::SP) {
    require(w.is_integral(), w.algebra().name() + " weights must be integral: " + w.to_string());
  }
}

}  // namespace detail

/// Positive roots, each with multiplicity one.
inline WeightMultiset positive_roots(const AlgebraId& a) {
  WeightMultiset out(a);
  for (const auto& r : detail::positive_roots_twice(a)) out.add(r, 1);
  return out;
}

/// Half the sum of the positive roots.
inline Weight weyl_vector(const AlgebraId& a) { return Weight(a, detail::rho_twice(a)); }

inline bool is_dominant(const Weight& w) { return detail::is_dominant_twice(w.algebra(), w.twice()); }

inline Weight dominant_conjugate(const Weight& w) {
  return Weight(w.algebra(), detail::dominant_conjugate(w.algebra(), w.twice()));
}

/// True when hw - w is a nonnegative integer combination of simple roots.
inline bool dominated_by(const Weight& w, const Weight& hw) {
  std::vector<int> d(w.rank());
  for (int i = 0; i < w.rank(); ++i) d[i] = hw.twice()[i] - w.twice()[i];
  auto c = detail::simple_root_coefficients(w.algebra(), d);
  return c && std::all_of(c->begin(), c->end(), [](long v) { return v >= 0; });
}

/// Weyl dimension formula, prod <hw + rho, a> / <rho, a> over positive roots.
inline BigInt weyl_dimension(const Weight& hw) {
  require(is_dominant(hw), "weyl_dimension needs a dominant weight, got " + hw.to_string());
  detail::require_integral_for_family(hw);
  const auto rho = detail::rho_twice(hw.algebra());
  std::vector<int> shifted(hw.rank());
  for (int i = 0; i < hw.rank(); ++i) shifted[i] = hw.twice()[i] + rho[i];
  BigRational d = 1;
  for (const auto& root : detail::positive_roots_twice(hw.algebra())) {
    d *= BigRational(detail::dot(shifted, root), detail::dot(rho, root));
  }
  return to_integer(d, "weyl_dimension " + hw.to_string());
}

/// Weight multiset of the irreducible module with highest weight hw,
/// via Freudenthal's recursion on the dominant weights followed by Weyl
/// group closure.
inline WeightMultiset character_multiset(const Weight& hw) {
  require(is_dominant(hw), "character_multiset needs a dominant weight, got " + hw.to_string());
  detail::require_integral_for_family(hw);
  const AlgebraId& a = hw.algebra();
  const int n = a.rank;
  const auto& top = hw.twice();

  // dominant weights below hw, bounded coordinatewise by |hw_1|
  int bound = 0;
  for (int v : top) bound = std::max(bound, std::abs(v));
  const int parity = ((top[0] % 2) + 2) % 2;
  std::vector<std::pair<long, std::vector<int>>> dominant;  // (level, weight)
  std::vector<int> cur(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (!detail::is_dominant_twice(a, cur)) return;
      std::vector<int> d(n);
      for (int j = 0; j < n; ++j) d[j] = top[j] - cur[j];
      auto c = detail::simple_root_coefficients(a, d);
      if (!c || std::any_of(c->begin(), c->end(), [](long v) { return v < 0; })) return;
      dominant.emplace_back(std::accumulate(c->begin(), c->end(), 0L), cur);
      return;
    }
    const int hi = (i == 0) ? bound : cur[i - 1];
    // gl weights may go negative; the orthogonal last slot carries a sign
    const bool may_be_negative = a.family == Family::GL || (a.family == Family::SO_EVEN && i == n - 1);
    const int lo = may_be_negative ? -bound : 0;
    for (int v = std::min(hi, bound); v >= lo; --v) {
      if (((v % 2) + 2) % 2 != parity) continue;
      cur[i] = v;
      self(self, i + 1);
    }
  };
  if (a.family == Family::SO_EVEN && n == 1) {
    dominant.emplace_back(0, top);
  } else {
    rec(rec, 0);
  }
  std::sort(dominant.begin(), dominant.end());

  const auto roots = detail::positive_roots_twice(a);
  const auto rho = detail::rho_twice(a);
  auto shifted_norm = [&](const std::vector<int>& w) {
    long s = 0;
    for (int i = 0; i < n; ++i) s += static_cast<long>(w[i] + rho[i]) * (w[i] + rho[i]);
    return s;
  };
  const long top_norm = shifted_norm(top);

  std::map<std::vector<int>, BigInt> mult;
  for (const auto& [level, mu] : dominant) {
    if (level == 0) {
      mult[mu] = 1;
      continue;
    }
    BigInt num = 0;
    for (const auto& root : roots) {
      std::vector<int> step = mu;
      for (int j = 1;; ++j) {
        for (int i = 0; i < n; ++i) step[i] += root[i];
        auto it = mult.find(detail::dominant_conjugate(a, step));
        if (it == mult.end()) break;
        num += it->second * detail::dot(step, root);
      }
    }
    const long den = top_norm - shifted_norm(mu);
    ensure(den > 0, "Freudenthal denominator vanished at " + Weight(a, mu).to_string());
    BigInt m = 2 * num;
    ensure(m % den == 0, "Freudenthal multiplicity not integral at " + Weight(a, mu).to_string());
    m /= den;
    if (m != 0) mult[mu] = m;
  }

  WeightMultiset out(a);
  for (const auto& [mu, m] : mult) {
    for (const auto& w : detail::weyl_orbit(a, mu)) out.add(w, m);
  }
  return out;
}

/// Outer product of the factors' characters, as a multiset over their sum.
inline WeightMultiset product_character(const std::vector<Weight>& highest) {
  std::vector<AlgebraId> ids;
  for (const auto& w : highest) ids.push_back(w.algebra());
  WeightMultiset acc{ProductAlgebra(std::vector<AlgebraId>{})};
  std::map<std::vector<int>, BigInt> cur{{{}, 1}};
  for (const auto& w : highest) {
    const auto ch = character_multiset(w);
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [k1, m1] : cur) {
      for (const auto& [k2, m2] : ch.entries()) {
        std::vector<int> key = k1;
        key.insert(key.end(), k2.begin(), k2.end());
        next[std::move(key)] += m1 * m2;
      }
    }
    cur = std::move(next);
  }
  WeightMultiset out{ProductAlgebra(std::move(ids))};
  for (const auto& [k, m] : cur) out.add(k, m);
  return out;
}

}  // namespace spingrass
