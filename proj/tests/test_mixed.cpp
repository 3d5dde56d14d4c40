#include "support.hpp"

#include <gtest/gtest.h>

using namespace braidcryst;
using namespace testsupport;

namespace {

// Smith normal form diagonal of a small integer matrix.
std::vector<Int> smith_diagonal(IntMatrix A) {
  const int R = A.rows(), C = A.cols();
  std::vector<Int> diag;
  for (int t = 0; t < std::min(R, C); ++t) {
    // move a nonzero entry of least absolute value to (t, t), then clear
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < R; ++i)
        for (int j = t; j < C; ++j)
          if (A(i, j) != 0 && (pi < 0 || abs(A(i, j)) < abs(A(pi, pj)))) pi = i, pj = j;
      if (pi < 0) return diag;
      for (int j = 0; j < C; ++j) std::swap(A(t, j), A(pi, j));
      for (int i = 0; i < R; ++i) std::swap(A(i, t), A(i, pj));
      bool clean = true;
      for (int i = t + 1; i < R; ++i) {
        const Int q = A(i, t) / A(t, t);
        for (int j = t; j < C; ++j) A(i, j) -= q * A(t, j);
        clean = clean && A(i, t) == 0;
      }
      for (int j = t + 1; j < C; ++j) {
        const Int q = A(t, j) / A(t, t);
        for (int i = t; i < R; ++i) A(i, j) -= q * A(i, t);
        clean = clean && A(t, j) == 0;
      }
      if (clean) break;
    }
    diag.push_back(abs(A(t, t)));
  }
  return diag;
}

// Kernel generators of P_n(N_g)/Gamma_2 as a quotient of Z^{ng}: per strand
// the relation 2(e_{j,1} + ... + e_{j,g}).
IntMatrix relation_matrix(int n, int g) {
  IntMatrix A(n, n * g);
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < g; ++r) A(j, j * g + r) = 2;
  return A;
}

// Free model: an element of Z^{ng} x| S_n read through the basis change.
MixedElement reduce(const GroupDescriptor& G, const Element& x) {
  MixedElement m = ns_section(G, x.perm);
  for (int j = 1; j <= G.n; ++j) {
    const Int last = x.coeffs.at(j, G.genus);
    m.torsion_bits[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(floor_mod(last, 2));
    for (int r = 1; r < G.genus; ++r) m.free_part.at(j, r) = x.coeffs.at(j, r) - last;
  }
  return m;
}

MixedElement random_mixed(std::mt19937_64& rng, const GroupDescriptor& G) {
  return reduce(G, Element{random_coeffs(rng, G.n, G.genus, 3), random_perm(rng, G.n)});
}

}  // namespace

TEST(Mixed, KernelStructureExamples) {
  auto k = kernel_structure(GroupDescriptor::sphere(3));
  EXPECT_EQ(k.torsion, std::vector<int>{2});
  EXPECT_EQ(k.free_rank, 0);
  k = kernel_structure(GroupDescriptor::sphere(4));
  EXPECT_EQ(k.torsion, std::vector<int>{2});
  EXPECT_EQ(k.free_rank, 2);
  k = kernel_structure(GroupDescriptor::nonorientable(1, 2));
  EXPECT_EQ(k.torsion, (std::vector<int>{2, 2}));
  EXPECT_EQ(k.free_rank, 0);
  try {
    kernel_structure(GroupDescriptor::sphere(2));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), Errc::Unsupported);
  }
}

TEST(Mixed, KernelStructureMatchesSmithNormalForm) {
  for (int g = 1; g <= 4; ++g)
    for (int n = 1; n <= 4; ++n) {
      const auto d = smith_diagonal(relation_matrix(n, g));
      std::vector<int> torsion;
      for (const auto& v : d)
        if (v > 1) torsion.push_back(static_cast<int>(v));
      const auto k = kernel_structure(GroupDescriptor::nonorientable(g, n));
      EXPECT_EQ(k.torsion, torsion);
      EXPECT_EQ(k.free_rank, n * g - static_cast<int>(d.size()));
    }
}

// The basis change Z^g -> Z_2 + Z^{g-1} is onto, and its kernel is exactly
// the multiples of 2(e_1 + ... + e_g).
TEST(Mixed, BasisChangeIsAnIsomorphismOnTheQuotient) {
  for (int g = 1; g <= 3; ++g) {
    const auto G = GroupDescriptor::nonorientable(g, 1);
    std::vector<int> c(static_cast<std::size_t>(g), -4);
    auto next = [&] {
      for (auto& v : c) {
        if (v < 4) return ++v, true;
        v = -4;
      }
      return false;
    };
    do {
      CoeffVector v(1, g);
      for (int r = 1; r <= g; ++r) v.at(1, r) = c[static_cast<std::size_t>(r - 1)];
      const bool in_kernel = ns_is_identity(reduce(G, Element{v, Permutation::identity(1)}));
      const bool multiple = std::all_of(c.begin(), c.end(), [&](int x) { return x == c[0]; }) && c[0] % 2 == 0;
      EXPECT_EQ(in_kernel, multiple);
    } while (next());
    for (int r = 1; r <= g; ++r)
      EXPECT_EQ(reduce(G, Element{CoeffVector::basis(1, g, 1, r), Permutation::identity(1)}), ns_generator_a(G, 1, r));
  }
}

TEST(Mixed, ArithmeticExamples) {
  const auto G = GroupDescriptor::nonorientable(2, 2);
  const auto s = ns_generator_sigma(G, 1);
  EXPECT_TRUE(ns_is_identity(ns_mul(G, s, s)));
  const auto t1 = ns_torsion_generator(G, 1);
  EXPECT_TRUE(ns_is_identity(ns_mul(G, t1, t1)));
  EXPECT_EQ(ns_mul(G, ns_mul(G, s, t1), s), ns_torsion_generator(G, 2));
  EXPECT_EQ(ns_normalize(G, "a[1,1] a[1,2]"), t1);
  EXPECT_TRUE(ns_is_identity(ns_normalize(G, "a[1,1]^2 a[1,2]^2")));
  EXPECT_THROW(ns_identity(GroupDescriptor::torus(2)), DomainError);
  EXPECT_THROW(ns_generator_a(G, 1, 3), DomainError);
}

TEST(Mixed, MultiplicationMatchesFreeModel) {
  std::mt19937_64 rng(40);
  for (int g = 1; g <= 3; ++g)
    for (int n = 1; n <= 5; ++n) {
      const auto G = GroupDescriptor::nonorientable(g, n);
      for (int t = 0; t < 20; ++t) {
        const Element x{random_coeffs(rng, n, g, 3), random_perm(rng, n)};
        const Element y{random_coeffs(rng, n, g, 3), random_perm(rng, n)};
        const Element xy = from_affine(affine_matrix(x) * affine_matrix(y), n, g);
        EXPECT_EQ(ns_mul(G, reduce(G, x), reduce(G, y)), reduce(G, xy));
        EXPECT_EQ(ns_inverse(G, reduce(G, x)), reduce(G, from_affine(affine_matrix(x).inverse(), n, g)));
      }
    }
}

TEST(Mixed, GroupAxiomsAndRelations) {
  std::mt19937_64 rng(41);
  for (int g = 1; g <= 3; ++g)
    for (int n = 1; n <= 5; ++n) {
      const auto G = GroupDescriptor::nonorientable(g, n);
      const auto rep = ns_check_relations(G);
      EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
      for (int t = 0; t < 20; ++t) {
        const auto x = random_mixed(rng, G), y = random_mixed(rng, G), z = random_mixed(rng, G);
        EXPECT_EQ(ns_mul(G, ns_mul(G, x, y), z), ns_mul(G, x, ns_mul(G, y, z)));
        EXPECT_EQ(ns_mul(G, ns_identity(G), x), x);
        EXPECT_EQ(ns_mul(G, x, ns_identity(G)), x);
        EXPECT_TRUE(ns_is_identity(ns_mul(G, x, ns_inverse(G, x))));
        EXPECT_EQ(ns_power(G, x, 3), ns_mul(G, x, ns_mul(G, x, x)));
        EXPECT_EQ(ns_power(G, x, -2), ns_inverse(G, ns_mul(G, x, x)));
      }
    }
}

TEST(Mixed, TorsionBitsArePermutationEquivariant) {
  std::mt19937_64 rng(42);
  for (int g = 1; g <= 3; ++g)
    for (int n = 2; n <= 5; ++n) {
      const auto G = GroupDescriptor::nonorientable(g, n);
      for (int t = 0; t < 10; ++t) {
        const auto w = random_perm(rng, n);
        const auto s = ns_section(G, w);
        const auto x = random_mixed(rng, G), y = random_mixed(rng, G);
        EXPECT_EQ(ns_conjugate(G, ns_mul(G, x, y), s), ns_mul(G, ns_conjugate(G, x, s), ns_conjugate(G, y, s)));
        for (int j = 1; j <= n; ++j)
          EXPECT_EQ(ns_conjugate(G, ns_torsion_generator(G, j), s), ns_torsion_generator(G, w(j)));
      }
    }
}

TEST(Mixed, TorsionSubgroupIsNormalUnderRandomConjugation) {
  std::mt19937_64 rng(43);
  for (int g = 1; g <= 3; ++g)
    for (int n = 1; n <= 4; ++n) {
      const auto G = GroupDescriptor::nonorientable(g, n);
      for (int t = 0; t < 20; ++t) {
        const auto by = random_mixed(rng, G);
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
        MixedElement tt = ns_identity(G);
        tt.torsion_bits = bits;
        const auto c = ns_conjugate(G, tt, by);
        EXPECT_TRUE(c.perm.is_identity());
        EXPECT_TRUE(c.free_part.is_zero());
      }
    }
}

TEST(Mixed, ToWordRoundTrips) {
  std::mt19937_64 rng(44);
  for (int g = 1; g <= 3; ++g)
    for (int n = 1; n <= 4; ++n) {
      const auto G = GroupDescriptor::nonorientable(g, n);
      for (int t = 0; t < 10; ++t) {
        const auto x = random_mixed(rng, G);
        EXPECT_EQ(ns_normalize(G, ns_to_word(G, x)), x);
      }
    }
}

TEST(Mixed, FiniteNormalSubgroups) {
  const auto s = finite_normal_subgroup(GroupDescriptor::sphere(4));
  EXPECT_EQ(s.order, 2);
  ASSERT_EQ(s.generator_names.size(), 1U);
  EXPECT_NE(s.generator_names[0].find("Delta^2_4"), std::string::npos);
  EXPECT_FALSE(s.normality_computed);

  const auto t = finite_normal_subgroup(GroupDescriptor::nonorientable(2, 2));
  EXPECT_EQ(t.order, 4);
  EXPECT_EQ(t.generator_names, (std::vector<std::string>{"a[1,1] a[1,2]", "a[2,1] a[2,2]"}));
  EXPECT_TRUE(t.normality_computed);
  EXPECT_TRUE(t.normality_verified);
  const auto G = GroupDescriptor::nonorientable(2, 2);
  for (std::size_t j = 0; j < 2; ++j)
    EXPECT_EQ(t.generators[j], ns_normalize(G, t.generator_names[j]));

  const auto u = finite_normal_subgroup(GroupDescriptor::nonorientable(1, 3));
  EXPECT_EQ(u.order, 8);
  EXPECT_TRUE(u.normality_verified);
}

TEST(Mixed, Verdicts) {
  EXPECT_FALSE(crystallographic_verdict(GroupDescriptor::sphere(5)).is_crystallographic);
  const auto v = crystallographic_verdict(GroupDescriptor::nonorientable(3, 4));
  EXPECT_FALSE(v.is_crystallographic);
  ASSERT_TRUE(v.finite_normal_subgroup);
  EXPECT_TRUE(v.finite_normal_subgroup->normality_verified);
  EXPECT_TRUE(crystallographic_verdict(GroupDescriptor::orientable(2, 3)).is_crystallographic);
  EXPECT_THROW(crystallographic_verdict(GroupDescriptor::sphere(2)), DomainError);
}
