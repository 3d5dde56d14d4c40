#pragma once

#include "braidcryst/error.hpp"
#include "braidcryst/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace braidcryst {

/// A bijection of {1..n}, stored by its 1-based images.
///
/// Composition convention (the only place it is fixed): the right factor is
/// applied first, (p * q)(i) = p(q(i)). With this convention the permutation
/// map sends a braid word to the product of its letters' transpositions in
/// word order, and conjugation by an element x acts on the lattice by
/// a_{j,r} -> a_{perm(x)(j),r}.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.images_[static_cast<std::size_t>(i)] = i + 1;
    return p;
  }

  static Permutation from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
        throw DomainError(Errc::InvalidArgument, "permutation images are not a bijection of {1.." +
                                                     std::to_string(n) + "}");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Product of the given disjoint cycles; each cycle (l1,...,lm) maps l_k -> l_{k+1}.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(n);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        int a = c[k];
        if (a < 1 || a > n || used[static_cast<std::size_t>(a - 1)])
          throw DomainError(Errc::InvalidArgument, "cycles are not disjoint within {1.." +
                                                       std::to_string(n) + "}");
        used[static_cast<std::size_t>(a - 1)] = true;
        p.images_[static_cast<std::size_t>(a - 1)] = c[(k + 1) % c.size()];
      }
    }
    return p;
  }

  /// The transposition tau_i = (i, i+1).
  static Permutation transposition(int n, int i) {
    if (i < 1 || i >= n)
      throw DomainError(Errc::IndexOutOfRange,
                        "transposition index " + std::to_string(i) + " outside 1.." +
                            std::to_string(n - 1));
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      p.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return p;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
      throw DomainError(Errc::Mismatch, "composing permutations of different degree");
    Permutation r;
    r.images_.resize(q.images_.size());
    for (std::size_t i = 0; i < q.images_.size(); ++i) r.images_[i] = p(q.images_[i]);
    return r;
  }

  Permutation pow(std::int64_t k) const {
    Permutation base = k < 0 ? inverse() : *this;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    Permutation acc = identity(degree());
    while (e != 0) {
      if (e & 1U) acc = acc * base;
      base = base * base;
      e >>= 1U;
    }
    return acc;
  }

  /// Non-trivial cycles, each listed from its least point, ordered by least point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 1; start <= degree(); ++start) {
      if (seen[static_cast<std::size_t>(start - 1)]) continue;
      std::vector<int> c;
      for (int a = start; !seen[static_cast<std::size_t>(a - 1)]; a = (*this)(a)) {
        seen[static_cast<std::size_t>(a - 1)] = true;
        c.push_back(a);
      }
      if (c.size() > 1) out.push_back(std::move(c));
    }
    return out;
  }

  /// Partition of n by cycle lengths (fixed points included), non-increasing.
  std::vector<int> cycle_type() const {
    std::vector<int> lengths;
    int moved = 0;
    for (const auto& c : cycles()) {
      lengths.push_back(static_cast<int>(c.size()));
      moved += static_cast<int>(c.size());
    }
    lengths.insert(lengths.end(), static_cast<std::size_t>(degree() - moved), 1);
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
  }

  std::int64_t order() const {
    std::int64_t k = 1;
    for (const auto& c : cycles()) k = lcm(k, static_cast<std::int64_t>(c.size()));
    return k;
  }

  /// Cycle notation, e.g. "(1,2,3)(4,5)"; the identity prints as "()".
  std::string to_cycle_string() const {
    std::string s;
    for (const auto& c : cycles()) {
      s += '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(c[k]);
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Lexicographically least xi (by image list) with xi * from * xi^{-1} == to,
/// or nullopt when the cycle types differ.
inline std::optional<Permutation> conjugating_permutation(const Permutation& from,
                                                          const Permutation& to) {
  const int n = from.degree();
  if (to.degree() != n) throw DomainError(Errc::Mismatch, "permutations of different degree");
  if (from.cycle_type() != to.cycle_type()) return std::nullopt;

  // xi(from(i)) = to(xi(i)), so choosing xi on the least unassigned point of a
  // cycle of `from` fixes xi on the whole cycle. Greedy smallest choice is
  // lexicographically minimal since any same-length target cycle completes.
  auto cycle_len = [](const Permutation& p, int a) {
    int len = 1;
    for (int b = p(a); b != a; b = p(b)) ++len;
    return len;
  };
  std::vector<int> xi(static_cast<std::size_t>(n), 0);
  std::vector<bool> target_used(static_cast<std::size_t>(n), false);
  for (int i = 1; i <= n; ++i) {
    if (xi[static_cast<std::size_t>(i - 1)] != 0) continue;
    const int len = cycle_len(from, i);
    int t = 1;
    while (target_used[static_cast<std::size_t>(t - 1)] || cycle_len(to, t) != len) ++t;
    int a = i;
    int b = t;
    for (int k = 0; k < len; ++k) {
      xi[static_cast<std::size_t>(a - 1)] = b;
      target_used[static_cast<std::size_t>(b - 1)] = true;
      a = from(a);
      b = to(b);
    }
  }
  return Permutation::from_images(std::move(xi));
}

}  // namespace braidcryst
