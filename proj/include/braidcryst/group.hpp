#pragma once

#include "braidcryst/error.hpp"
#include "braidcryst/integer.hpp"
#include "braidcryst/permutation.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace braidcryst {

enum class SurfaceKind { Orientable, Sphere, NonOrientable };

/// Surface M and strand count n selecting the quotient B_n(M)/Gamma_2(P_n(M)).
struct GroupDescriptor {
  SurfaceKind surface = SurfaceKind::Orientable;
  int genus = 1;  // unused for the sphere
  int n = 1;

  static GroupDescriptor orientable(int genus, int n) {
    return make(SurfaceKind::Orientable, genus, n);
  }
  static GroupDescriptor torus(int n) { return orientable(1, n); }
  static GroupDescriptor sphere(int n) { return make(SurfaceKind::Sphere, 0, n); }
  static GroupDescriptor nonorientable(int genus, int n) {
    return make(SurfaceKind::NonOrientable, genus, n);
  }

  bool is_orientable() const { return surface == SurfaceKind::Orientable; }

  /// Number of generators a_{j,r} per strand: 2g (orientable), g (non-orientable).
  int handles() const {
    switch (surface) {
      case SurfaceKind::Orientable: return 2 * genus;
      case SurfaceKind::NonOrientable: return genus;
      case SurfaceKind::Sphere: return 0;
    }
    return 0;
  }

  /// Rank of the free part of P_n(M)/Gamma_2: 2ng, resp. n(g-1), resp. n(n-3)/2.
  int free_rank() const {
    switch (surface) {
      case SurfaceKind::Orientable: return 2 * n * genus;
      case SurfaceKind::NonOrientable: return n * (genus - 1);
      case SurfaceKind::Sphere: return n * (n - 3) / 2;
    }
    return 0;
  }

  std::string name() const {
    switch (surface) {
      case SurfaceKind::Orientable:
        return "orientable genus " + std::to_string(genus) + ", n=" + std::to_string(n);
      case SurfaceKind::NonOrientable:
        return "non-orientable genus " + std::to_string(genus) + ", n=" + std::to_string(n);
      case SurfaceKind::Sphere: return "sphere, n=" + std::to_string(n);
    }
    return {};
  }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

 private:
  static GroupDescriptor make(SurfaceKind kind, int genus, int n) {
    if (n < 1) throw DomainError(Errc::InvalidArgument, "strand count must be >= 1");
    if (kind != SurfaceKind::Sphere && genus < 1)
      throw DomainError(Errc::InvalidArgument, "genus must be >= 1");
    GroupDescriptor g;
    g.surface = kind;
    g.genus = genus;
    g.n = n;
    return g;
  }
};

/// Integer matrix indexed by (strand 1..n, handle 1..h): entry (i,r) is the
/// exponent of a_{i,r}. Additive group; zero is the identity coset.
class CoeffVector {
 public:
  CoeffVector() = default;
  CoeffVector(int strands, int handles)
      : strands_(strands), handles_(handles),
        entries_(static_cast<std::size_t>(strands) * static_cast<std::size_t>(handles)) {}

  static CoeffVector basis(int strands, int handles, int i, int r) {
    CoeffVector v(strands, handles);
    v.at(i, r) = 1;
    return v;
  }

  int strands() const { return strands_; }
  int handles() const { return handles_; }

  Int& at(int i, int r) { return entries_[index(i, r)]; }
  const Int& at(int i, int r) const { return entries_[index(i, r)]; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (e != 0) return false;
    return true;
  }

  /// Sum of the entries of handle block r (the augmentation of that Z^n summand).
  Int augmentation(int r) const {
    Int s = 0;
    for (int i = 1; i <= strands_; ++i) s += at(i, r);
    return s;
  }

  CoeffVector& operator+=(const CoeffVector& o) {
    check_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  CoeffVector& operator-=(const CoeffVector& o) {
    check_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  CoeffVector& operator*=(const Int& c) {
    for (auto& e : entries_) e *= c;
    return *this;
  }
  friend CoeffVector operator+(CoeffVector a, const CoeffVector& b) { return a += b; }
  friend CoeffVector operator-(CoeffVector a, const CoeffVector& b) { return a -= b; }
  friend CoeffVector operator*(const Int& c, CoeffVector a) { return a *= c; }
  friend CoeffVector operator-(CoeffVector a) {
    for (auto& e : a.entries_) e = -e;
    return a;
  }

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  std::size_t index(int i, int r) const {
    if (i < 1 || i > strands_ || r < 1 || r > handles_)
      throw DomainError(Errc::IndexOutOfRange, "coefficient index (" + std::to_string(i) + "," +
                                                   std::to_string(r) + ") out of range");
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(handles_) +
           static_cast<std::size_t>(r - 1);
  }
  void check_shape(const CoeffVector& o) const {
    if (o.strands_ != strands_ || o.handles_ != handles_)
      throw DomainError(Errc::Mismatch, "coefficient vectors of different shape");
  }

  int strands_ = 0;
  int handles_ = 0;
  std::vector<Int> entries_;
};

/// Normal form coeffs * psi(perm) of an element of Z^{2ng} x|_phi S_n.
struct Element {
  CoeffVector coeffs;
  Permutation perm;

  friend bool operator==(const Element&, const Element&) = default;
};

namespace detail {

inline void require_orientable(const GroupDescriptor& G) {
  if (!G.is_orientable())
    throw DomainError(Errc::NotOrientable,
                      "operation needs an orientable surface, got " + G.name());
}

inline void require_member(const GroupDescriptor& G, const Element& x) {
  if (x.perm.degree() != G.n || x.coeffs.strands() != G.n || x.coeffs.handles() != G.handles())
    throw DomainError(Errc::Mismatch, "element does not belong to " + G.name());
}

}  // namespace detail

/// phi(w): a_{j,r} -> a_{w(j),r}. Handle index untouched.
inline CoeffVector action_phi(const Permutation& w, const CoeffVector& v) {
  if (w.degree() != v.strands())
    throw DomainError(Errc::Mismatch, "permutation degree differs from strand count");
  CoeffVector out(v.strands(), v.handles());
  for (int j = 1; j <= v.strands(); ++j)
    for (int r = 1; r <= v.handles(); ++r) out.at(w(j), r) = v.at(j, r);
  return out;
}

inline CoeffVector action_phi(const GroupDescriptor& G, const Permutation& w,
                              const CoeffVector& v) {
  if (v.strands() != G.n || v.handles() != G.handles())
    throw DomainError(Errc::Mismatch, "coefficient vector does not belong to " + G.name());
  return action_phi(w, v);
}

inline CoeffVector zero_coeffs(const GroupDescriptor& G) { return CoeffVector(G.n, G.handles()); }

inline Element identity(const GroupDescriptor& G) {
  detail::require_orientable(G);
  return {zero_coeffs(G), Permutation::identity(G.n)};
}

inline Element section_psi(const GroupDescriptor& G, const Permutation& w) {
  detail::require_orientable(G);
  if (w.degree() != G.n) throw DomainError(Errc::Mismatch, "permutation degree differs from n");
  return {zero_coeffs(G), w};
}

inline Element lattice_element(const GroupDescriptor& G, CoeffVector v) {
  detail::require_orientable(G);
  if (v.strands() != G.n || v.handles() != G.handles())
    throw DomainError(Errc::Mismatch, "coefficient vector does not belong to " + G.name());
  return {std::move(v), Permutation::identity(G.n)};
}

/// The coset of a_{j,r}.
inline Element generator_a(const GroupDescriptor& G, int j, int r) {
  detail::require_orientable(G);
  if (j < 1 || j > G.n || r < 1 || r > G.handles())
    throw DomainError(Errc::IndexOutOfRange, "a[" + std::to_string(j) + "," + std::to_string(r) +
                                                 "] outside strands 1.." + std::to_string(G.n) +
                                                 ", handles 1.." + std::to_string(G.handles()));
  return lattice_element(G, CoeffVector::basis(G.n, G.handles(), j, r));
}

/// The coset of sigma_i, i.e. psi(tau_i).
inline Element generator_sigma(const GroupDescriptor& G, int i) {
  return section_psi(G, Permutation::transposition(G.n, i));
}

/// (u, p)(v, q) = (u + phi(p) v, p q).
inline Element mul(const GroupDescriptor& G, const Element& x, const Element& y) {
  detail::require_orientable(G);
  detail::require_member(G, x);
  detail::require_member(G, y);
  return {x.coeffs + action_phi(x.perm, y.coeffs), x.perm * y.perm};
}

/// (u, p)^{-1} = (-phi(p^{-1}) u, p^{-1}).
inline Element inverse(const GroupDescriptor& G, const Element& x) {
  detail::require_orientable(G);
  detail::require_member(G, x);
  Permutation pinv = x.perm.inverse();
  return {-action_phi(pinv, x.coeffs), std::move(pinv)};
}

/// by * x * by^{-1}
inline Element conjugate(const GroupDescriptor& G, const Element& x, const Element& by) {
  return mul(G, mul(G, by, x), inverse(G, by));
}

inline Element power(const GroupDescriptor& G, const Element& x, std::int64_t k) {
  detail::require_orientable(G);
  detail::require_member(G, x);
  Element base = k < 0 ? inverse(G, x) : x;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Element acc = identity(G);
  while (e != 0) {
    if (e & 1U) acc = mul(G, acc, base);
    e >>= 1U;
    if (e != 0) base = mul(G, base, base);
  }
  return acc;
}

inline bool is_identity(const Element& x) { return x.coeffs.is_zero() && x.perm.is_identity(); }

/// For each tau_i, a basis vector a_{j,r} that phi(tau_i) moves. Since the
/// tau_i generate S_n and phi(w) is the permutation of strands by w, a
/// generator list with every tau_i moving something proves phi faithful.
struct FaithfulnessWitness {
  struct Move {
    int transposition;  // i of tau_i
    int strand;         // j
    int handle;         // r
    int image_strand;   // strand of phi(tau_i)(a_{j,r})
  };
  std::vector<Move> moves;
  bool faithful = false;
};

inline FaithfulnessWitness faithfulness_witness(const GroupDescriptor& G) {
  detail::require_orientable(G);
  FaithfulnessWitness w;
  w.faithful = true;
  for (int i = 1; i < G.n; ++i) {
    const Permutation t = Permutation::transposition(G.n, i);
    bool found = false;
    for (int j = 1; j <= G.n && !found; ++j) {
      const CoeffVector e = CoeffVector::basis(G.n, G.handles(), j, 1);
      const CoeffVector img = action_phi(t, e);
      if (img != e) {
        int target = 0;
        for (int k = 1; k <= G.n; ++k)
          if (img.at(k, 1) != 0) target = k;
        w.moves.push_back({i, j, 1, target});
        found = true;
      }
    }
    w.faithful = w.faithful && found;
  }
  return w;
}

}  // namespace braidcryst
