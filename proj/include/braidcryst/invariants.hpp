#pragma once

#include "braidcryst/error.hpp"
#include "braidcryst/int_matrix.hpp"
#include "braidcryst/int_poly.hpp"
#include "braidcryst/integer.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace braidcryst {

/// det(xI - M) by the Faddeev-LeVerrier recurrence; every division is exact
/// over the integers.
inline IntPoly char_poly(const IntMatrix& M) {
  M.require_square();
  const int n = M.rows();
  std::vector<Int> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix Mk(n, n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    Mk = M * Mk + c[static_cast<std::size_t>(n - k + 1)] * IntMatrix::identity(n);
    const Int tr = (M * Mk).trace();
    c[static_cast<std::size_t>(n - k)] = -tr / k;
  }
  return IntPoly(std::move(c));
}

/// Integral representation of Z/order given by the image of a generator.
class CyclicRep {
 public:
  CyclicRep(IntMatrix generator, int order) : gen_(std::move(generator)), order_(order) {
    gen_.require_square();
    if (order_ < 1) throw DomainError(Errc::InvalidArgument, "group order must be positive");
    if (gen_.pow(order_) != IntMatrix::identity(gen_.rows()))
      throw DomainError(Errc::NotARepresentation,
                        "generator^" + std::to_string(order_) + " is not the identity");
  }

  const IntMatrix& generator() const { return gen_; }
  int order() const { return order_; }
  int dimension() const { return gen_.rows(); }

 private:
  IntMatrix gen_;
  int order_;
};

inline bool orientability(const CyclicRep& R) { return R.generator().det() == 1; }

/// beta_i = (1/N) sum_j [t^i] det(I + t rho^j). The coefficient of t^i is the
/// i-th elementary symmetric function of the eigenvalues, read off the
/// characteristic polynomial as (-1)^i [x^{m-i}].
inline std::vector<Int> betti_numbers(const CyclicRep& R) {
  const int m = R.dimension();
  const int N = R.order();
  std::vector<Int> sum(static_cast<std::size_t>(m) + 1);
  IntMatrix g = IntMatrix::identity(m);
  for (int j = 0; j < N; ++j) {
    const IntPoly p = char_poly(g);
    for (int i = 0; i <= m; ++i) {
      const Int e = p.coeff(m - i);
      sum[static_cast<std::size_t>(i)] += (i % 2 == 0) ? e : Int(-e);
    }
    g = g * R.generator();
  }
  for (auto& s : sum) {
    if (s % N != 0) throw DomainError(Errc::NotARepresentation, "character average is not integral");
    s /= N;
  }
  return sum;
}

/// beta_1 = m - rank(rho(1) - I): the rank of the invariant sublattice.
inline Int first_betti_by_rank(const CyclicRep& R) {
  const int m = R.dimension();
  return Int(m - (R.generator() - IntMatrix::identity(m)).rank());
}

inline std::map<int, int> cyclotomic_multiplicities(const CyclicRep& R) {
  return cyclotomic_multiplicities(char_poly(R.generator()));
}

/// Porteous's criterion in the form used here: every rationally irreducible
/// summand, i.e. every cyclotomic factor Phi_d of the characteristic
/// polynomial of the generator, occurs with multiplicity at least 2.
inline bool anosov_check(const CyclicRep& R) {
  for (const auto& [d, m] : cyclotomic_multiplicities(R))
    if (m < 2) return false;
  return true;
}

/// Ramanujan sum c_d(j): the sum of the j-th powers of the primitive d-th
/// roots of unity.
inline Int ramanujan_sum(std::int64_t d, std::int64_t j) {
  const std::int64_t g = gcd(d, j);
  const std::int64_t q = d / g;
  return Int(moebius(q) * (euler_phi(d) / euler_phi(q)));
}

/// Multiplicity of each complex character chi_k (generator -> zeta_N^k),
/// k = 0..N-1. Galois-conjugate characters share a multiplicity m_d, and
/// phi(d) m_d = (1/N) sum_j trace(rho^j) c_d(j), which stays in the integers.
inline std::vector<Int> complex_character_multiplicities(const CyclicRep& R) {
  const int N = R.order();
  std::vector<Int> traces;
  IntMatrix g = IntMatrix::identity(R.dimension());
  for (int j = 0; j < N; ++j) {
    traces.push_back(g.trace());
    g = g * R.generator();
  }
  std::map<int, Int> by_order;
  for (int d = 1; d <= N; ++d) {
    if (N % d != 0) continue;
    Int s = 0;
    for (int j = 0; j < N; ++j) s += traces[static_cast<std::size_t>(j)] * ramanujan_sum(d, j);
    const Int denom = Int(N) * euler_phi(d);
    if (s % denom != 0) throw DomainError(Errc::NotARepresentation, "character average is not integral");
    by_order[d] = s / denom;
  }
  std::vector<Int> mult(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k)
    mult[static_cast<std::size_t>(k)] = by_order[N / static_cast<int>(gcd(k, N))];
  return mult;
}

/// One real irreducible summand type of a cyclic group: the trivial and (N
/// even) sign characters are 1-dimensional and stay irreducible over C; each
/// pair {k, N-k} with k != N-k gives a 2-dimensional rotation summand that
/// splits over C.
struct RealIrreducible {
  int k = 0;  // representative index, 0 <= k <= N/2
  int dimension = 1;
  bool complex_irreducible = true;
  Int multiplicity = 0;
};

inline std::vector<RealIrreducible> real_irreducible_multiplicities(const CyclicRep& R) {
  const int N = R.order();
  const auto m = complex_character_multiplicities(R);
  std::vector<RealIrreducible> out;
  for (int k = 0; 2 * k <= N; ++k) {
    RealIrreducible r;
    r.k = k;
    const bool self_dual = (2 * k) % N == 0;
    r.dimension = self_dual ? 1 : 2;
    r.complex_irreducible = self_dual;
    r.multiplicity = m[static_cast<std::size_t>(k)];
    out.push_back(r);
  }
  return out;
}

/// Flat Kaehler criterion: even dimension, and every real irreducible summand
/// that is also complex irreducible (trivial and sign) has even multiplicity.
inline bool kahler_check(const CyclicRep& R) {
  if (R.dimension() % 2 != 0) return false;
  for (const auto& r : real_irreducible_multiplicities(R))
    if (r.complex_irreducible && r.multiplicity % 2 != 0) return false;
  return true;
}

struct InvariantReport {
  IntPoly char_poly;
  Int det;
  std::vector<Int> betti;
  Int first_betti_rank;
  bool anosov = false;
  bool kahler = false;
  bool orientable = false;
  std::map<int, int> cyclotomic;
};

inline InvariantReport invariant_report(const CyclicRep& R) {
  InvariantReport rep;
  rep.char_poly = char_poly(R.generator());
  rep.det = R.generator().det();
  rep.betti = betti_numbers(R);
  rep.first_betti_rank = first_betti_by_rank(R);
  rep.cyclotomic = cyclotomic_multiplicities(rep.char_poly);
  rep.anosov = true;
  for (const auto& [d, m] : rep.cyclotomic) rep.anosov = rep.anosov && m >= 2;
  rep.kahler = kahler_check(R);
  rep.orientable = rep.det == 1;
  return rep;
}

}  // namespace braidcryst
