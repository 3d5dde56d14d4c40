#pragma once

#include "braidcryst/braidcryst.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testsupport {

using namespace braidcryst;

inline Permutation random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

inline CoeffVector random_coeffs(std::mt19937_64& rng, int strands, int handles, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  CoeffVector v(strands, handles);
  for (int i = 1; i <= strands; ++i)
    for (int r = 1; r <= handles; ++r) v.at(i, r) = d(rng);
  return v;
}

inline Element random_element(std::mt19937_64& rng, const GroupDescriptor& G, int bound = 3) {
  return Element{random_coeffs(rng, G.n, G.handles(), bound), random_perm(rng, G.n)};
}

inline std::vector<Permutation> all_perms(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// Affine model: (v, p) acts on Z^m as u -> P u + v where P moves the entry at
/// (j, r) to (p(j), r). Products of these (m+1)x(m+1) matrices are an
/// independent check of the semidirect product law.
inline IntMatrix affine_matrix(const Element& x) {
  const int n = x.coeffs.strands(), h = x.coeffs.handles(), m = n * h;
  IntMatrix A(m + 1, m + 1);
  auto idx = [h](int j, int r) { return (j - 1) * h + (r - 1); };
  for (int j = 1; j <= n; ++j)
    for (int r = 1; r <= h; ++r) {
      A(idx(x.perm(j), r), idx(j, r)) = 1;
      A(idx(j, r), m) = x.coeffs.at(j, r);
    }
  A(m, m) = 1;
  return A;
}

/// Inverse of affine_matrix.
inline Element from_affine(const IntMatrix& A, int n, int h) {
  const int m = n * h;
  CoeffVector v(n, h);
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    for (int r = 1; r <= h; ++r) v.at(j, r) = A((j - 1) * h + (r - 1), m);
    for (int i = 1; i <= n; ++i)
      if (A((i - 1) * h, (j - 1) * h) == 1) img[static_cast<std::size_t>(j - 1)] = i;
  }
  return Element{v, Permutation::from_images(img)};
}

}  // namespace testsupport
