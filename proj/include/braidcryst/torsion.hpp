#pragma once

#include "braidcryst/error.hpp"
#include "braidcryst/group.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace braidcryst {

struct OrderResult {
  bool finite = false;
  std::int64_t k = 0;  // the order when finite

  static OrderResult finite_order(std::int64_t k) { return {true, k}; }
  static OrderResult infinite() { return {false, 0}; }

  friend bool operator==(const OrderResult&, const OrderResult&) = default;
};

/// Coefficients of z^k when perm(z) is a single m-cycle and m | k:
/// k*s_{i,r} off the cycle, (k/m) * (sum of s over the cycle) on it.
inline CoeffVector cycle_power_coeffs(const GroupDescriptor& G, const Element& z, std::int64_t k) {
  detail::require_orientable(G);
  detail::require_member(G, z);
  const auto cycles = z.perm.cycles();
  if (cycles.size() != 1)
    throw DomainError(Errc::NotSingleCycle,
                      "permutation " + z.perm.to_cycle_string() + " is not a single cycle");
  const auto& cyc = cycles.front();
  const auto m = static_cast<std::int64_t>(cyc.size());
  if (k % m != 0)
    throw DomainError(Errc::NotDivisible, "cycle length " + std::to_string(m) +
                                              " does not divide " + std::to_string(k));
  CoeffVector t = Int(k) * z.coeffs;
  for (int r = 1; r <= G.handles(); ++r) {
    Int sum = 0;
    for (int l : cyc) sum += z.coeffs.at(l, r);
    const Int v = Int(k / m) * sum;
    for (int l : cyc) t.at(l, r) = v;
  }
  return t;
}

/// Finite exactly when every cycle of perm(x) has zero coefficient sum in
/// every handle block and every fixed strand has zero coefficients; the order
/// is then that of perm(x).
inline OrderResult order(const GroupDescriptor& G, const Element& x) {
  detail::require_orientable(G);
  detail::require_member(G, x);
  std::vector<bool> moved(static_cast<std::size_t>(G.n), false);
  for (const auto& cyc : x.perm.cycles()) {
    for (int l : cyc) moved[static_cast<std::size_t>(l - 1)] = true;
    for (int r = 1; r <= G.handles(); ++r) {
      Int sum = 0;
      for (int l : cyc) sum += x.coeffs.at(l, r);
      if (sum != 0) return OrderResult::infinite();
    }
  }
  for (int i = 1; i <= G.n; ++i) {
    if (moved[static_cast<std::size_t>(i - 1)]) continue;
    for (int r = 1; r <= G.handles(); ++r)
      if (x.coeffs.at(i, r) != 0) return OrderResult::infinite();
  }
  return OrderResult::finite_order(x.perm.order());
}

/// Pure-lattice alpha with alpha * psi(perm(theta)) * alpha^{-1} = theta.
/// On a cycle (l_1,...,l_m) the entry at l_q is s_{l_1} + ... + s_{l_q};
/// fixed strands get 0.
inline Element conjugator_to_section(const GroupDescriptor& G, const Element& theta) {
  if (!order(G, theta).finite)
    throw DomainError(Errc::InfiniteOrder, "element has infinite order");
  CoeffVector p = zero_coeffs(G);
  for (const auto& cyc : theta.perm.cycles())
    for (int r = 1; r <= G.handles(); ++r) {
      Int partial = 0;
      for (int l : cyc) {
        partial += theta.coeffs.at(l, r);
        p.at(l, r) = partial;
      }
    }
  return lattice_element(G, std::move(p));
}

/// c with c * e1 * c^{-1} = e2 when perm(e1), perm(e2) share a cycle type.
/// c = alpha2 * psi(xi) * alpha1^{-1}, xi the lexicographically least
/// permutation conjugating perm(e1) to perm(e2).
inline std::optional<Element> conjugacy_test(const GroupDescriptor& G, const Element& e1,
                                             const Element& e2) {
  const Element alpha1 = conjugator_to_section(G, e1);
  const Element alpha2 = conjugator_to_section(G, e2);
  const auto xi = conjugating_permutation(e1.perm, e2.perm);
  if (!xi) return std::nullopt;
  return mul(G, mul(G, alpha2, section_psi(G, *xi)), inverse(G, alpha1));
}

/// Pure-lattice x with x * psi(tau_i) * x^{-1} = images[i-1] for all i, for
/// a copy of S_n given by images of the Coxeter generators.
inline Element symmetric_copy_conjugator(const GroupDescriptor& G,
                                         const std::vector<Element>& images) {
  detail::require_orientable(G);
  if (static_cast<int>(images.size()) != G.n - 1)
    throw DomainError(Errc::NotAnSnEmbedding, "expected " + std::to_string(G.n - 1) +
                                                  " generator images, got " +
                                                  std::to_string(images.size()));
  for (int i = 1; i <= G.n - 1; ++i) {
    const Element& a = images[static_cast<std::size_t>(i - 1)];
    detail::require_member(G, a);
    if (a.perm != Permutation::transposition(G.n, i))
      throw DomainError(Errc::NotAnSnEmbedding,
                        "image " + std::to_string(i) + " does not lie over tau_" + std::to_string(i));
    if (!is_identity(mul(G, a, a)))
      throw DomainError(Errc::NotAnSnEmbedding, "image " + std::to_string(i) + " is not an involution");
  }
  for (int i = 1; i <= G.n - 1; ++i)
    for (int j = i + 1; j <= G.n - 1; ++j) {
      const Element& a = images[static_cast<std::size_t>(i - 1)];
      const Element& b = images[static_cast<std::size_t>(j - 1)];
      const bool ok = j == i + 1 ? mul(G, mul(G, a, b), a) == mul(G, mul(G, b, a), b)
                                 : mul(G, a, b) == mul(G, b, a);
      if (!ok)
        throw DomainError(Errc::NotAnSnEmbedding, "Artin relation fails for images " +
                                                      std::to_string(i) + "," + std::to_string(j));
    }

  // Involution forces images[i] = (.., a_i, -a_i, ..) tau_i in each block;
  // x_1 = 0 and x_{i+1} = x_i - a_i telescopes.
  CoeffVector x = zero_coeffs(G);
  for (int r = 1; r <= G.handles(); ++r)
    for (int i = 1; i <= G.n - 1; ++i)
      x.at(i + 1, r) = x.at(i, r) - images[static_cast<std::size_t>(i - 1)].coeffs.at(i, r);
  Element xe = lattice_element(G, std::move(x));
  for (int i = 1; i <= G.n - 1; ++i)
    if (conjugate(G, generator_sigma(G, i), xe) != images[static_cast<std::size_t>(i - 1)])
      throw DomainError(Errc::NotAnSnEmbedding, "conjugator check failed at " + std::to_string(i));
  return xe;
}

/// Parameters (a1,a2,a3,a4) per handle block of an embedding of Z_5 x| Z_2
/// into Z^{10g} x| S_5 lying over <w1, w2>.
struct FrobeniusEmbedding {
  std::vector<std::array<Int, 4>> blocks;  // one per handle, 2g entries

  int genus() const { return static_cast<int>(blocks.size()) / 2; }

  /// Only block r carries parameters; the others are zero.
  static FrobeniusEmbedding single_block(int genus, int r, const std::array<Int, 4>& a) {
    FrobeniusEmbedding F;
    F.blocks.assign(static_cast<std::size_t>(2 * genus), {0, 0, 0, 0});
    F.blocks.at(static_cast<std::size_t>(r - 1)) = a;
    return F;
  }
};

inline Permutation frobenius_w1() { return Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}); }
inline Permutation frobenius_w2() { return Permutation::from_cycles(5, {{1, 4}, {2, 3}}); }

namespace detail {
inline GroupDescriptor frobenius_group(const FrobeniusEmbedding& F) {
  if (F.blocks.empty() || F.blocks.size() % 2 != 0)
    throw DomainError(Errc::InvalidArgument, "Frobenius embedding needs 2g parameter blocks");
  return GroupDescriptor::orientable(F.genus(), 5);
}
}  // namespace detail

/// v1 = (a1,a2,a3,a4,-a1-a2-a3-a4) w1 and v2 = (x,y,-y,-x,0) w2 per block,
/// with x = -a2-a3-a4 and y = -a3.
inline std::pair<Element, Element> frobenius_embed(const FrobeniusEmbedding& F) {
  const GroupDescriptor G = detail::frobenius_group(F);
  CoeffVector s1 = zero_coeffs(G);
  CoeffVector s2 = zero_coeffs(G);
  for (int r = 1; r <= G.handles(); ++r) {
    const auto& a = F.blocks[static_cast<std::size_t>(r - 1)];
    for (int i = 1; i <= 4; ++i) s1.at(i, r) = a[static_cast<std::size_t>(i - 1)];
    s1.at(5, r) = -(a[0] + a[1] + a[2] + a[3]);
    const Int x = -a[1] - a[2] - a[3];
    const Int y = -a[2];
    s2.at(1, r) = x;
    s2.at(2, r) = y;
    s2.at(3, r) = -y;
    s2.at(4, r) = -x;
  }
  return {Element{std::move(s1), frobenius_w1()}, Element{std::move(s2), frobenius_w2()}};
}

/// lambda_i = lambda_5 + a_1 + ... + a_i with lambda_5 = 0, per block.
inline Element frobenius_conjugator(const FrobeniusEmbedding& F) {
  const GroupDescriptor G = detail::frobenius_group(F);
  CoeffVector lambda = zero_coeffs(G);
  for (int r = 1; r <= G.handles(); ++r) {
    Int partial = 0;
    for (int i = 1; i <= 4; ++i) {
      partial += F.blocks[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(i - 1)];
      lambda.at(i, r) = partial;
    }
  }
  return lattice_element(G, std::move(lambda));
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::int64_t multiplicative_order(std::int64_t l, std::int64_t p) {
  const std::int64_t base = ((l % p) + p) % p;
  if (base == 0) return 0;
  std::int64_t k = 1;
  for (std::int64_t x = base; x != 1; x = x * base % p) ++k;
  return k;
}

struct FrobeniusTorsion {
  Permutation w1;  // i -> i+1 mod p
  Permutation w2;  // i -> l*i mod p
  Element v1;
  Element v2;
  Element v;  // v2 v1 v2^{-1} v1^{-l} v1^{l-1}
};

/// Over Z_p x| Z_{(p-1)/2} realised by w1 = (1,...,p) and w2 = (i -> l i mod p),
/// lifts v_i = lift_i * psi(w_i) produce a nontrivial element of order p.
inline FrobeniusTorsion frobenius_torsion_element(const GroupDescriptor& G, std::int64_t p,
                                                  std::int64_t l, const CoeffVector& lift1,
                                                  const CoeffVector& lift2) {
  detail::require_orientable(G);
  if (!is_prime(p) || p < 5)
    throw DomainError(Errc::BadPrime, std::to_string(p) + " is not a prime >= 5");
  if (G.n != p)
    throw DomainError(Errc::Mismatch, "strand count " + std::to_string(G.n) + " differs from p");
  if (multiplicative_order(l, p) != (p - 1) / 2)
    throw DomainError(Errc::BadMultiplier, std::to_string(l) + " does not have order " +
                                               std::to_string((p - 1) / 2) + " mod " +
                                               std::to_string(p));
  const int n = G.n;
  std::vector<int> img1(static_cast<std::size_t>(n));
  std::vector<int> img2(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    img1[static_cast<std::size_t>(i - 1)] = i % n + 1;
    const std::int64_t li = ((l % p + p) % p) * i % p;
    img2[static_cast<std::size_t>(i - 1)] = li == 0 ? n : static_cast<int>(li);
  }
  FrobeniusTorsion out{Permutation::from_images(std::move(img1)),
                       Permutation::from_images(std::move(img2)),
                       {},
                       {},
                       {}};
  out.v1 = Element{lift1, out.w1};
  out.v2 = Element{lift2, out.w2};
  detail::require_member(G, out.v1);
  detail::require_member(G, out.v2);
  const Element comm = mul(G, mul(G, mul(G, out.v2, out.v1), inverse(G, out.v2)),
                           power(G, out.v1, -l));
  out.v = mul(G, comm, power(G, out.v1, l - 1));
  return out;
}

}  // namespace braidcryst
