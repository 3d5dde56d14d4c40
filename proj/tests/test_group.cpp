#include "support.hpp"

#include <gtest/gtest.h>

using namespace braidcryst;
using namespace testsupport;

namespace {

Element lat(const GroupDescriptor& G, std::initializer_list<std::tuple<int, int, int>> entries,
            const Permutation& p) {
  CoeffVector v = zero_coeffs(G);
  for (auto [j, r, c] : entries) v.at(j, r) = c;
  return Element{v, p};
}

}  // namespace

TEST(GroupCore, IdentityAndUnitLaws) {
  const auto G = GroupDescriptor::torus(2);
  const Element e = identity(G);
  EXPECT_TRUE(e.coeffs.is_zero());
  EXPECT_TRUE(e.perm.is_identity());
  const Element x = lat(G, {{1, 1, 1}}, Permutation::transposition(2, 1));
  EXPECT_EQ(mul(G, e, x), x);
  EXPECT_EQ(inverse(G, e), e);
}

TEST(GroupCore, SectionExamples) {
  const auto G = GroupDescriptor::torus(3);
  const auto t1 = Permutation::transposition(3, 1);
  EXPECT_EQ(section_psi(G, t1), (Element{zero_coeffs(G), t1}));
  EXPECT_TRUE(is_identity(power(G, section_psi(G, t1), 2)));
  const Element c = section_psi(G, Permutation::from_cycles(3, {{1, 2, 3}}));
  EXPECT_FALSE(is_identity(c));
  EXPECT_FALSE(is_identity(power(G, c, 2)));
  EXPECT_TRUE(is_identity(power(G, c, 3)));
}

TEST(GroupCore, ActionExamples) {
  const auto G = GroupDescriptor::torus(3);
  EXPECT_EQ(action_phi(G, Permutation::transposition(3, 1), CoeffVector::basis(3, 2, 1, 1)),
            CoeffVector::basis(3, 2, 2, 1));
  const CoeffVector v = CoeffVector::basis(3, 2, 1, 2) + Int(2) * CoeffVector::basis(3, 2, 3, 1);
  EXPECT_EQ(action_phi(G, Permutation::identity(3), v), v);
  const auto c = Permutation::from_cycles(3, {{1, 2, 3}});
  const CoeffVector expected = CoeffVector::basis(3, 2, 2, 2) + Int(2) * CoeffVector::basis(3, 2, 1, 1);
  EXPECT_EQ(action_phi(G, c, v), expected);
  // (1,2,3) = tau_1 tau_2, and phi is a homomorphism
  const auto t1 = Permutation::transposition(3, 1), t2 = Permutation::transposition(3, 2);
  ASSERT_EQ(t1 * t2, c);
  EXPECT_EQ(action_phi(G, t1, action_phi(G, t2, v)), expected);
}

TEST(GroupCore, MultiplicationExamples) {
  const auto G = GroupDescriptor::torus(2);
  const auto t = Permutation::transposition(2, 1);
  EXPECT_EQ(mul(G, section_psi(G, t), generator_a(G, 1, 1)), lat(G, {{2, 1, 1}}, t));
  const Element x = lat(G, {{1, 1, 1}}, t);
  EXPECT_TRUE(is_identity(mul(G, x, inverse(G, x))));
  EXPECT_EQ(mul(G, x, x), lat(G, {{1, 1, 1}, {2, 1, 1}}, Permutation::identity(2)));
  EXPECT_EQ(inverse(G, x), lat(G, {{2, 1, -1}}, t));
  EXPECT_EQ(power(G, x, 0), identity(G));
}

TEST(GroupCore, CyclePowerOfGenerator) {
  const auto G = GroupDescriptor::torus(3);
  const auto alpha = Permutation::transposition(3, 1) * Permutation::transposition(3, 2);
  const Element x = lat(G, {{1, 1, 1}}, alpha);
  EXPECT_EQ(power(G, x, 3), lat(G, {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}}, Permutation::identity(3)));
}

TEST(GroupCore, RejectsWrongShapesAndSurfaces) {
  const auto G = GroupDescriptor::torus(2);
  EXPECT_THROW(generator_a(G, 3, 1), DomainError);
  EXPECT_THROW(generator_a(G, 1, 3), DomainError);
  EXPECT_THROW(generator_sigma(G, 2), DomainError);
  EXPECT_THROW(identity(GroupDescriptor::sphere(3)), DomainError);
  EXPECT_THROW(GroupDescriptor::torus(0), DomainError);
  EXPECT_THROW(GroupDescriptor::orientable(0, 2), DomainError);
  const auto H = GroupDescriptor::torus(3);
  EXPECT_THROW(mul(G, identity(G), identity(H)), DomainError);
}

TEST(GroupCore, MultiplicationMatchesAffineMatrixModel) {
  std::mt19937_64 rng(1);
  for (int g = 1; g <= 3; ++g)
    for (int n = 1; n <= 5; ++n) {
      const auto G = GroupDescriptor::orientable(g, n);
      for (int t = 0; t < 20; ++t) {
        const Element x = random_element(rng, G), y = random_element(rng, G);
        EXPECT_EQ(affine_matrix(mul(G, x, y)), affine_matrix(x) * affine_matrix(y));
        EXPECT_EQ(from_affine(affine_matrix(x) * affine_matrix(y), n, G.handles()), mul(G, x, y));
        EXPECT_EQ(affine_matrix(inverse(G, x)), affine_matrix(x).inverse());
        std::uniform_int_distribution<int> kd(-7, 7);
        const int k = kd(rng);
        EXPECT_EQ(affine_matrix(power(G, x, k)), affine_matrix(x).pow(k));
      }
    }
}

TEST(GroupCore, GroupAxiomsRandomised) {
  std::mt19937_64 rng(2);
  for (int g = 1; g <= 3; ++g)
    for (int n = 1; n <= 5; ++n) {
      const auto G = GroupDescriptor::orientable(g, n);
      for (int t = 0; t < 30; ++t) {
        const Element x = random_element(rng, G), y = random_element(rng, G), z = random_element(rng, G);
        EXPECT_EQ(mul(G, mul(G, x, y), z), mul(G, x, mul(G, y, z)));
        EXPECT_EQ(mul(G, identity(G), x), x);
        EXPECT_EQ(mul(G, x, identity(G)), x);
        EXPECT_TRUE(is_identity(mul(G, inverse(G, x), x)));
        EXPECT_EQ(mul(G, x, y).perm, x.perm * y.perm);
        EXPECT_EQ(conjugate(G, x, y), mul(G, mul(G, y, x), inverse(G, y)));
      }
    }
}

TEST(GroupCore, ActionPreservesHandleAndPermutesStrands) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_perms(n)) {
      const auto G = GroupDescriptor::orientable(2, n);
      for (int j = 1; j <= n; ++j)
        for (int r = 1; r <= 4; ++r)
          EXPECT_EQ(action_phi(G, w, CoeffVector::basis(n, 4, j, r)), CoeffVector::basis(n, 4, w(j), r));
    }
}

TEST(GroupCore, ActionIsFaithful) {
  for (int n = 2; n <= 5; ++n) {
    const auto G = GroupDescriptor::torus(n);
    for (const auto& w : all_perms(n)) {
      if (w.is_identity()) continue;
      bool moves_something = false;
      for (int j = 1; j <= n && !moves_something; ++j)
        moves_something = action_phi(G, w, CoeffVector::basis(n, 2, j, 1)) != CoeffVector::basis(n, 2, j, 1);
      EXPECT_TRUE(moves_something) << w.to_cycle_string();
    }
    const auto wit = faithfulness_witness(G);
    EXPECT_TRUE(wit.faithful);
    EXPECT_EQ(static_cast<int>(wit.moves.size()), n - 1);
    for (const auto& m : wit.moves)
      EXPECT_EQ(action_phi(G, Permutation::transposition(n, m.transposition),
                           CoeffVector::basis(n, 2, m.strand, m.handle)),
                CoeffVector::basis(n, 2, m.image_strand, m.handle));
  }
}

TEST(GroupCore, ConjugationPermutesGenerators) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 5; ++n) {
    const auto G = GroupDescriptor::orientable(2, n);
    for (int t = 0; t < 10; ++t) {
      const Element x = random_element(rng, G);
      for (int i = 1; i <= n; ++i)
        for (int r = 1; r <= 4; ++r)
          EXPECT_EQ(conjugate(G, generator_a(G, i, r), x), generator_a(G, x.perm(i), r));
    }
  }
}

TEST(GroupCore, CrystallographicVerdicts) {
  const auto v = verify_crystallographic(GroupDescriptor::torus(2));
  EXPECT_TRUE(v.is_crystallographic);
  EXPECT_EQ(v.dimension, 4);
  EXPECT_EQ(v.holonomy_order, 2);
  EXPECT_FALSE(verify_crystallographic(GroupDescriptor::sphere(3)).is_crystallographic);
  EXPECT_FALSE(verify_crystallographic(GroupDescriptor::nonorientable(2, 2)).is_crystallographic);
}
