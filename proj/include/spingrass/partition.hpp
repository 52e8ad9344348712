#pragma once

// Young diagram arithmetic: transpose, rectangle complements, containment,
// and enumeration helpers used by the branching and dimension code.

#include "spingrass/arith.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace spingrass {

/// Weakly decreasing sequence of nonnegative integers.
///
/// The stored length is kept (complements come out with a fixed number of
/// rows) but equality and ordering only look at the nonzero parts.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw precondition_error("partition parts must be nonnegative: " + describe());
      if (i > 0 && parts_[i - 1] < parts_[i]) {
        throw precondition_error("partition parts must be weakly decreasing: " + describe());
      }
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Part i (zero-based); zero past the stored length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  const std::vector<int>& parts() const { return parts_; }

  /// Number of nonzero parts.
  int length() const {
    int n = 0;
    for (int p : parts_) n += p > 0;
    return n;
  }

  int first() const { return (*this)[0]; }

  int boxes() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  bool empty() const { return length() == 0; }

  Partition normalized() const {
    std::vector<int> p(parts_.begin(), parts_.begin() + length());
    Partition r;
    r.parts_ = std::move(p);
    return r;
  }

  /// Copy padded with zeros (or trimmed of trailing zeros) to n entries.
  std::vector<int> padded(std::size_t n) const {
    require(static_cast<std::size_t>(length()) <= n,
            "partition " + to_string() + " has more than " + std::to_string(n) + " rows");
    std::vector<int> r(n, 0);
    for (std::size_t i = 0; i < n && i < parts_.size(); ++i) r[i] = parts_[i];
    return r;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    const std::size_t n = std::max(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return false;
    }
    return true;
  }

  /// Lexicographic on the zero-padded parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    const std::size_t n = std::max(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = a[i] <=> b[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  /// "[5,3,2]"; the empty partition is "[]".
  std::string to_string() const {
    std::string s = "[";
    auto p = normalized().parts_;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(p[i]);
    }
    return s + "]";
  }

  static Partition parse(const std::string& text);

private:
  std::string describe() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

/// Parses bracketed or bare comma/whitespace separated integers.
inline Partition Partition::parse(const std::string& text) {
  std::string body;
  for (char c : text) {
    if (c == '[' || c == ']' || c == '(' || c == ')') continue;
    body += (c == ',') ? ' ' : c;
  }
  std::istringstream in(body);
  std::vector<int> parts;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw precondition_error("not an integer in partition: '" + token + "'");
    }
    require(used == token.size(), "not an integer in partition: '" + token + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

/// result[j] = #{i : lambda_i >= j+1}.
inline Partition transpose(const Partition& lambda) {
  std::vector<int> cols(lambda.first(), 0);
  for (int j = 0; j < lambda.first(); ++j) {
    int c = 0;
    for (int i = 0; i < lambda.length(); ++i) c += lambda[i] >= j + 1;
    cols[j] = c;
  }
  return Partition(std::move(cols));
}

/// Complement of lambda inside the rows x cols rectangle, rotated by 180
/// degrees and transposed.  Always returns exactly cols entries, each at
/// most rows.
inline Partition conjugate_lm(const Partition& lambda, int rows, int cols) {
  require(rows >= 1 && cols >= 1, "rectangle sides must be positive");
  require(lambda.length() <= rows, "partition " + lambda.to_string() + " has more than " +
                                       std::to_string(rows) + " nonzero parts");
  require(lambda.first() <= cols, "partition " + lambda.to_string() + " has a part larger than " +
                                      std::to_string(cols));
  std::vector<int> r(cols, 0);
  for (int j = 1; j <= cols; ++j) {
    int count = 0;
    for (int i = 0; i < rows; ++i) count += lambda[i] >= cols - j + 1;
    r[j - 1] = rows - count;
  }
  return Partition(std::move(r));
}

/// mu_i <= lambda_i for every i.
inline bool contains(const Partition& lambda, const Partition& mu) {
  for (int i = 0; i < mu.length(); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

/// Calls f on every partition with at most max_rows rows and parts at most
/// max_part (the partitions inside a rectangle), in lexicographic order of
/// the padded part vectors.
inline void for_each_in_rectangle(int max_rows, int max_part,
                                  const std::function<void(const Partition&)>& f) {
  std::vector<int> cur(max_rows, 0);
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == max_rows) {
      f(Partition(cur));
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      cur[i] = v;
      rec(i + 1, v);
    }
    cur[i] = 0;
  };
  if (max_rows == 0) {
    f(Partition{});
    return;
  }
  rec(0, max_part);
}

inline std::vector<Partition> partitions_in_rectangle(int max_rows, int max_part) {
  std::vector<Partition> out;
  for_each_in_rectangle(max_rows, max_part, [&](const Partition& p) { out.push_back(p.normalized()); });
  return out;
}

/// Every partition nu contained in outer with |nu| = size.
inline std::vector<Partition> subpartitions_of_size(const Partition& outer, int size) {
  std::vector<Partition> out;
  if (size < 0 || size > outer.boxes()) return out;
  const int rows = outer.length();
  std::vector<int> cur(rows, 0);
  std::function<void(int, int, int)> rec = [&](int i, int cap, int left) {
    if (i == rows) {
      if (left == 0) out.push_back(Partition(cur).normalized());
      return;
    }
    // remaining rows can hold at most cap * (rows - i) boxes
    const int hi = std::min({cap, outer[i], left});
    for (int v = hi; v >= 0; --v) {
      if (static_cast<long>(v) * (rows - i) < left) break;
      cur[i] = v;
      rec(i + 1, v, left - v);
    }
    cur[i] = 0;
  };
  if (rows == 0) {
    if (size == 0) out.push_back(Partition{});
    return out;
  }
  rec(0, outer[0], size);
  return out;
}

/// Every partition of n with at most max_rows rows (max_rows < 0: unbounded).
inline std::vector<Partition> partitions_of(int n, int max_rows = -1) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(Partition(cur));
      return;
    }
    if (max_rows >= 0 && static_cast<int>(cur.size()) == max_rows) return;
    for (int v = std::min(cap, left); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Partition with every row doubled (the "2 kappa" shapes).
inline Partition doubled_rows(const Partition& kappa) {
  std::vector<int> p = kappa.normalized().parts();
  for (int& v : p) v *= 2;
  return Partition(std::move(p));
}

}  // namespace spingrass
