#pragma once

#include "braidcryst/braid_word.hpp"
#include "braidcryst/error.hpp"
#include "braidcryst/group.hpp"
#include "braidcryst/int_matrix.hpp"
#include "braidcryst/torsion.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace braidcryst {

/// The subgroup of B_n(M)/Gamma_2(P_n(M)) generated by a_{1,1} alpha_{n-1}
/// and the a_{i,r}^n, where alpha_{n-1} = sigma_1 ... sigma_{n-1}.
///
/// Its translation lattice L has the ordered basis
///   prod_i a_{i,1};  a_{2,1}^n, ..., a_{n,1}^n;  then for r = 2..2g:
///   a_{1,r}^n, ..., a_{n,r}^n,
/// and L is exactly the set of lattice vectors whose block-1 entries are
/// pairwise congruent mod n and whose other entries are divisible by n.
struct BieberbachDescriptor {
  int n = 2;
  int genus = 1;
  GroupDescriptor group;
  Element alpha;                    // psi of the permutation of sigma_1 ... sigma_{n-1}
  Element generator;                // a_{1,1} alpha_{n-1}
  std::vector<Element> X;           // generator, then a_{i,r}^n (i major, r minor)
  std::vector<CoeffVector> basis;   // Y', 2ng vectors in the order above

  int rank() const { return 2 * n * genus; }
  /// perm(alpha_{n-1}) = (1,2,...,n) under the right-first composition used here.
  const Permutation& holonomy_permutation() const { return alpha.perm; }
};

inline BieberbachDescriptor make_bieberbach(int n, int genus) {
  if (n < 2) throw DomainError(Errc::InvalidArgument, "Bieberbach subgroup needs n >= 2");
  BieberbachDescriptor B;
  B.n = n;
  B.genus = genus;
  B.group = GroupDescriptor::orientable(genus, n);
  const GroupDescriptor& G = B.group;
  B.alpha = normalize(G, classical_words(G).alpha_word());
  B.generator = mul(G, generator_a(G, 1, 1), B.alpha);
  B.X.push_back(B.generator);
  for (int i = 1; i <= n; ++i)
    for (int r = 1; r <= G.handles(); ++r) B.X.push_back(power(G, generator_a(G, i, r), n));

  CoeffVector sum1 = zero_coeffs(G);
  for (int i = 1; i <= n; ++i) sum1.at(i, 1) = 1;
  B.basis.push_back(sum1);
  for (int i = 2; i <= n; ++i) B.basis.push_back(Int(n) * CoeffVector::basis(n, G.handles(), i, 1));
  for (int r = 2; r <= G.handles(); ++r)
    for (int i = 1; i <= n; ++i) B.basis.push_back(Int(n) * CoeffVector::basis(n, G.handles(), i, r));
  return B;
}

/// Coordinates of v in the basis of L, or nullopt when v is not in L.
inline std::optional<std::vector<Int>> lattice_coords(const BieberbachDescriptor& B,
                                                      const CoeffVector& v) {
  const int n = B.n;
  std::vector<Int> coords;
  coords.reserve(static_cast<std::size_t>(B.rank()));
  const Int& first = v.at(1, 1);
  coords.push_back(first);
  for (int i = 2; i <= n; ++i) {
    const Int diff = v.at(i, 1) - first;
    if (diff % n != 0) return std::nullopt;
    coords.push_back(diff / n);
  }
  for (int r = 2; r <= B.group.handles(); ++r)
    for (int i = 1; i <= n; ++i) {
      if (v.at(i, r) % n != 0) return std::nullopt;
      coords.push_back(v.at(i, r) / n);
    }
  return coords;
}

inline CoeffVector from_lattice_coords(const BieberbachDescriptor& B, const std::vector<Int>& coords) {
  if (static_cast<int>(coords.size()) != B.rank())
    throw DomainError(Errc::Mismatch, "expected " + std::to_string(B.rank()) + " lattice coordinates");
  CoeffVector v = zero_coeffs(B.group);
  for (std::size_t k = 0; k < coords.size(); ++k) v += coords[k] * B.basis[k];
  return v;
}

struct GnMembership {
  bool in_group = false;
  int j = 0;  // residue of the power of the generator, 0..n-1
  std::vector<Int> lattice_coords;

  friend bool operator==(const GnMembership&, const GnMembership&) = default;
};

/// x = theta * generator^j with theta in L, decided exactly.
inline GnMembership membership(const BieberbachDescriptor& B, const Element& x) {
  detail::require_member(B.group, x);
  GnMembership out;
  const Permutation& c = B.holonomy_permutation();
  Permutation cj = Permutation::identity(B.n);
  int j = 0;
  while (j < B.n && cj != x.perm) {
    cj = cj * c;
    ++j;
  }
  if (j == B.n) return out;
  const Element gj = power(B.group, B.generator, j);
  auto coords = lattice_coords(B, x.coeffs - gj.coeffs);
  if (!coords) return out;
  out.in_group = true;
  out.j = j;
  out.lattice_coords = std::move(*coords);
  return out;
}

/// theta(coords) * generator^j
inline Element reconstruct(const BieberbachDescriptor& B, int j, const std::vector<Int>& coords) {
  const Element theta = lattice_element(B.group, from_lattice_coords(B, coords));
  return mul(B.group, theta, power(B.group, B.generator, j));
}

/// Matrix of conjugation by the generator on L, columns = images of the basis
/// vectors in basis coordinates. Block diagonal with one n x n block per handle.
inline IntMatrix holonomy_matrix(const BieberbachDescriptor& B) {
  const int m = B.rank();
  IntMatrix rho(m, m);
  for (int k = 0; k < m; ++k) {
    const CoeffVector img = action_phi(B.holonomy_permutation(), B.basis[static_cast<std::size_t>(k)]);
    const auto coords = lattice_coords(B, img);
    if (!coords) throw DomainError(Errc::NotARepresentation, "L is not stable under the holonomy");
    for (int i = 0; i < m; ++i) rho(i, k) = (*coords)[static_cast<std::size_t>(i)];
  }
  return rho;
}

/// rho(generator^j); negative j through the exact matrix inverse.
inline IntMatrix holonomy_matrix(const BieberbachDescriptor& B, std::int64_t j) {
  return holonomy_matrix(B).pow(j);
}

/// prod_i a_{i,1} and prod_i a_{i,r}^n for r = 2..2g.
inline std::vector<Element> centre(const BieberbachDescriptor& B) {
  std::vector<Element> out;
  for (int r = 1; r <= B.group.handles(); ++r) {
    CoeffVector v = zero_coeffs(B.group);
    for (int i = 1; i <= B.n; ++i) v.at(i, r) = r == 1 ? 1 : B.n;
    out.push_back(lattice_element(B.group, std::move(v)));
  }
  return out;
}

struct TorsionScanReport {
  std::uint64_t scanned = 0;
  std::vector<Element> torsion;           // nontrivial finite-order elements found
  std::uint64_t obstruction_failures = 0;  // elements where the a_{1,1} coefficient check failed

  bool torsion_free() const { return torsion.empty() && obstruction_failures == 0; }
};

/// Scans theta * generator^j over lattice coordinates in [-bound, bound] and
/// all residues j. Besides the order test, checks that the a_{1,1}
/// coefficient of omega^n is congruent to j mod n, and equals
/// n (lambda_1 + ... + lambda_n) + j when gcd(j, n) = 1; for 0 < j < n this
/// coefficient is nonzero, so omega^n != 1.
inline TorsionScanReport torsion_free_evidence(const BieberbachDescriptor& B, int bound) {
  TorsionScanReport rep;
  const int m = B.rank();
  const GroupDescriptor& G = B.group;
  std::vector<Element> gen_pow;
  for (int j = 0; j < B.n; ++j) gen_pow.push_back(power(G, B.generator, j));
  std::vector<Int> coords(static_cast<std::size_t>(m), Int(-bound));
  while (true) {
    const Element theta = lattice_element(G, from_lattice_coords(B, coords));
    Int block1_sum = 0;
    for (int i = 0; i < B.n; ++i) block1_sum += coords[static_cast<std::size_t>(i)];
    for (int j = 0; j < B.n; ++j) {
      const Element omega = mul(G, theta, gen_pow[static_cast<std::size_t>(j)]);
      if (is_identity(omega)) continue;
      ++rep.scanned;
      if (order(G, omega).finite) rep.torsion.push_back(omega);
      const Int coeff = power(G, omega, B.n).coeffs.at(1, 1);
      bool ok = floor_mod(coeff, B.n) == j;
      if (gcd(static_cast<std::int64_t>(j), static_cast<std::int64_t>(B.n)) == 1)
        ok = ok && coeff == Int(B.n) * block1_sum + j;
      if (!ok) ++rep.obstruction_failures;
    }
    int k = 0;
    while (k < m && coords[static_cast<std::size_t>(k)] == bound) {
      coords[static_cast<std::size_t>(k)] = -bound;
      ++k;
    }
    if (k == m) break;
    ++coords[static_cast<std::size_t>(k)];
  }
  return rep;
}

}  // namespace braidcryst
