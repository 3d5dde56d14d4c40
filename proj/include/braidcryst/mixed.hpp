#pragma once

#include "braidcryst/braid_word.hpp"
#include "braidcryst/error.hpp"
#include "braidcryst/group.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace braidcryst {

/// Abelian invariants of P_n(M)/Gamma_2(P_n(M)).
struct AbelianInvariants {
  std::vector<int> torsion;  // prime-power orders
  int free_rank = 0;
  std::vector<std::string> torsion_generators;
};

inline AbelianInvariants kernel_structure(const GroupDescriptor& G) {
  AbelianInvariants inv;
  switch (G.surface) {
    case SurfaceKind::Sphere:
      if (G.n < 3)
        throw DomainError(Errc::Unsupported,
                          "kernel structure of the sphere quotient is only known for n >= 3");
      inv.torsion = {2};
      inv.free_rank = G.n * (G.n - 3) / 2;
      inv.torsion_generators = {"Delta^2_" + std::to_string(G.n) + " = " +
                                to_string(classical_words(G).full_twist_word())};
      break;
    case SurfaceKind::NonOrientable:
      inv.torsion.assign(static_cast<std::size_t>(G.n), 2);
      inv.free_rank = G.n * (G.genus - 1);
      for (int j = 1; j <= G.n; ++j) {
        BraidWord w;
        for (int r = 1; r <= G.genus; ++r) w.letters.push_back(Letter::a(j, r));
        inv.torsion_generators.push_back(to_string(w));
      }
      break;
    case SurfaceKind::Orientable:
      inv.free_rank = G.free_rank();
      break;
  }
  return inv;
}

/// Normal form of (Z_2^n + Z^{n(g-1)}) x| S_n for M = N_g. Per strand j the
/// torsion bit is the class of a_{j,1} ... a_{j,g}; the free coordinates are
/// the images of a_{j,1}, ..., a_{j,g-1}; a_{j,g} is (bit 1, free -e_1 - ... - e_{g-1}).
struct MixedElement {
  std::vector<std::uint8_t> torsion_bits;
  CoeffVector free_part;  // n x (g-1)
  Permutation perm;

  friend bool operator==(const MixedElement&, const MixedElement&) = default;
};

namespace detail {

inline void require_nonorientable(const GroupDescriptor& G) {
  if (G.surface != SurfaceKind::NonOrientable)
    throw DomainError(Errc::Unsupported, "mixed-torsion arithmetic needs a non-orientable surface, got " +
                                             G.name());
}

inline void require_mixed_member(const GroupDescriptor& G, const MixedElement& x) {
  if (x.perm.degree() != G.n || static_cast<int>(x.torsion_bits.size()) != G.n ||
      x.free_part.strands() != G.n || x.free_part.handles() != G.genus - 1)
    throw DomainError(Errc::Mismatch, "element does not belong to " + G.name());
  for (auto b : x.torsion_bits)
    if (b > 1) throw DomainError(Errc::InvalidArgument, "torsion bits must be 0 or 1");
}

inline std::vector<std::uint8_t> permute_bits(const Permutation& w, const std::vector<std::uint8_t>& b) {
  std::vector<std::uint8_t> out(b.size());
  for (int j = 1; j <= w.degree(); ++j)
    out[static_cast<std::size_t>(w(j) - 1)] = b[static_cast<std::size_t>(j - 1)];
  return out;
}

}  // namespace detail

inline MixedElement ns_identity(const GroupDescriptor& G) {
  detail::require_nonorientable(G);
  return {std::vector<std::uint8_t>(static_cast<std::size_t>(G.n), 0), CoeffVector(G.n, G.genus - 1),
          Permutation::identity(G.n)};
}

inline MixedElement ns_section(const GroupDescriptor& G, const Permutation& w) {
  MixedElement x = ns_identity(G);
  if (w.degree() != G.n) throw DomainError(Errc::Mismatch, "permutation degree differs from n");
  x.perm = w;
  return x;
}

inline MixedElement ns_generator_sigma(const GroupDescriptor& G, int i) {
  return ns_section(G, Permutation::transposition(G.n, i));
}

/// Image of a_{j,r}, 1 <= r <= g.
inline MixedElement ns_generator_a(const GroupDescriptor& G, int j, int r) {
  MixedElement x = ns_identity(G);
  if (j < 1 || j > G.n || r < 1 || r > G.genus)
    throw DomainError(Errc::IndexOutOfRange, "a[" + std::to_string(j) + "," + std::to_string(r) +
                                                 "] outside strands 1.." + std::to_string(G.n) +
                                                 ", handles 1.." + std::to_string(G.genus));
  if (r < G.genus) {
    x.free_part.at(j, r) = 1;
  } else {
    x.torsion_bits[static_cast<std::size_t>(j - 1)] = 1;
    for (int s = 1; s < G.genus; ++s) x.free_part.at(j, s) = -1;
  }
  return x;
}

/// The torsion element: class of a_{j,1} ... a_{j,g}.
inline MixedElement ns_torsion_generator(const GroupDescriptor& G, int j) {
  MixedElement x = ns_identity(G);
  if (j < 1 || j > G.n) throw DomainError(Errc::IndexOutOfRange, "strand " + std::to_string(j));
  x.torsion_bits[static_cast<std::size_t>(j - 1)] = 1;
  return x;
}

inline MixedElement ns_mul(const GroupDescriptor& G, const MixedElement& x, const MixedElement& y) {
  detail::require_nonorientable(G);
  detail::require_mixed_member(G, x);
  detail::require_mixed_member(G, y);
  MixedElement z;
  z.torsion_bits = detail::permute_bits(x.perm, y.torsion_bits);
  for (std::size_t k = 0; k < z.torsion_bits.size(); ++k) z.torsion_bits[k] ^= x.torsion_bits[k];
  z.free_part = x.free_part + action_phi(x.perm, y.free_part);
  z.perm = x.perm * y.perm;
  return z;
}

inline MixedElement ns_inverse(const GroupDescriptor& G, const MixedElement& x) {
  detail::require_nonorientable(G);
  detail::require_mixed_member(G, x);
  const Permutation pinv = x.perm.inverse();
  return {detail::permute_bits(pinv, x.torsion_bits), -action_phi(pinv, x.free_part), pinv};
}

inline MixedElement ns_power(const GroupDescriptor& G, const MixedElement& x, std::int64_t k) {
  MixedElement base = k < 0 ? ns_inverse(G, x) : x;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  MixedElement acc = ns_identity(G);
  while (e != 0) {
    if (e & 1U) acc = ns_mul(G, acc, base);
    e >>= 1U;
    if (e != 0) base = ns_mul(G, base, base);
  }
  return acc;
}

inline MixedElement ns_conjugate(const GroupDescriptor& G, const MixedElement& x, const MixedElement& by) {
  return ns_mul(G, ns_mul(G, by, x), ns_inverse(G, by));
}

inline bool ns_is_identity(const MixedElement& x) {
  for (auto b : x.torsion_bits)
    if (b) return false;
  return x.free_part.is_zero() && x.perm.is_identity();
}

/// Same left fold as the orientable rewriter, with handle indices 1..g.
inline MixedElement ns_normalize(const GroupDescriptor& G, const BraidWord& w) {
  MixedElement x = ns_identity(G);
  for (const auto& l : w.letters) {
    detail::check_letter_indices(G, l);
    if (l.kind == Letter::Kind::Sigma) {
      if (l.exponent % 2 != 0) x = ns_mul(G, x, ns_generator_sigma(G, l.i));
    } else {
      x = ns_mul(G, x, ns_power(G, ns_generator_a(G, l.i, l.r), l.exponent));
    }
  }
  return x;
}

inline MixedElement ns_normalize(const GroupDescriptor& G, std::string_view text) {
  return ns_normalize(G, parse(G, text));
}

/// Word with ns_normalize(ns_to_word(x)) == x: free letters a[j,r]^f for
/// r < g, then a[j,1] ... a[j,g] for each set torsion bit, then the sigma word.
inline BraidWord ns_to_word(const GroupDescriptor& G, const MixedElement& x) {
  detail::require_mixed_member(G, x);
  BraidWord w;
  for (int j = 1; j <= G.n; ++j) {
    for (int r = 1; r < G.genus; ++r)
      if (x.free_part.at(j, r) != 0)
        w.letters.push_back(Letter::a(j, r, detail::word_exponent(x.free_part.at(j, r))));
    if (x.torsion_bits[static_cast<std::size_t>(j - 1)] != 0)
      for (int r = 1; r <= G.genus; ++r) w.letters.push_back(Letter::a(j, r));
  }
  return w.append(permutation_word(x.perm));
}

/// Presentation relations with the per-strand relation a_{j,1}^2 ... a_{j,g}^2 = 1.
inline RelationReport ns_check_relations(const GroupDescriptor& G) {
  detail::require_nonorientable(G);
  RelationReport rep;
  auto norm = [&G](const BraidWord& w) { return ns_normalize(G, w); };
  detail::check_presentation(rep, G, norm);
  for (int j = 1; j <= G.n; ++j) {
    BraidWord w;
    for (int r = 1; r <= G.genus; ++r) w.letters.push_back(Letter::a(j, r, 2));
    detail::check_equal(rep, norm, "surface-relation", w, BraidWord{});
  }
  return rep;
}

/// A nontrivial finite normal subgroup T of the quotient, which rules out
/// the crystallographic property.
struct FiniteNormalSubgroup {
  std::vector<std::string> generator_names;
  std::vector<MixedElement> generators;  // non-orientable case only
  Int order = 0;
  bool normality_computed = false;
  bool normality_verified = false;
  std::string justification;
};

/// T is normal iff conjugating its generators by every group generator
/// stays inside T = {bits arbitrary, free part 0, identity permutation}.
inline bool ns_verify_normal(const GroupDescriptor& G, const std::vector<MixedElement>& gens) {
  std::vector<MixedElement> group_gens;
  for (int i = 1; i <= G.n - 1; ++i) group_gens.push_back(ns_generator_sigma(G, i));
  for (int j = 1; j <= G.n; ++j)
    for (int r = 1; r <= G.genus; ++r) group_gens.push_back(ns_generator_a(G, j, r));
  for (const auto& t : gens)
    for (const auto& h : group_gens)
      for (const auto& by : {h, ns_inverse(G, h)}) {
        const MixedElement c = ns_conjugate(G, t, by);
        if (!c.perm.is_identity() || !c.free_part.is_zero()) return false;
      }
  return true;
}

inline FiniteNormalSubgroup finite_normal_subgroup(const GroupDescriptor& G) {
  FiniteNormalSubgroup T;
  if (G.surface == SurfaceKind::Sphere) {
    const auto inv = kernel_structure(G);
    T.generator_names = inv.torsion_generators;
    T.order = 2;
    T.normality_computed = false;
    T.normality_verified = true;
    T.justification =
        "the kernel is Z_2 + Z^{n(n-3)/2} with the full-twist class generating Z_2; the torsion of "
        "the kernel is preserved by every automorphism, so T = <Delta^2> is a nontrivial finite "
        "normal subgroup and the group is not crystallographic";
    return T;
  }
  detail::require_nonorientable(G);
  for (int j = 1; j <= G.n; ++j) {
    T.generators.push_back(ns_torsion_generator(G, j));
    std::string name;
    for (int r = 1; r <= G.genus; ++r) name += (r > 1 ? " a[" : "a[") + std::to_string(j) + "," + std::to_string(r) + "]";
    T.generator_names.push_back(name);
  }
  T.order = Int(1) << G.n;
  T.normality_computed = true;
  T.normality_verified = ns_verify_normal(G, T.generators);
  T.justification = G.genus == 1
                        ? "T is the whole kernel Z_2^n, finite and normal; a group with a nontrivial "
                          "finite normal subgroup is not crystallographic"
                        : "T = torsion of the kernel Z_2^n + Z^{n(g-1)} is finite, normal (checked by "
                          "conjugation), and nontrivial, so the group is not crystallographic";
  return T;
}

}  // namespace braidcryst
