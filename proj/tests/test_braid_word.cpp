#include "support.hpp"

#include <gtest/gtest.h>

using namespace braidcryst;
using namespace testsupport;

namespace {

BraidWord random_word(std::mt19937_64& rng, const GroupDescriptor& G, int length) {
  BraidWord w;
  std::uniform_int_distribution<int> kind(0, 1), e(-3, 3);
  std::uniform_int_distribution<int> strand(1, G.n), handle(1, G.handles());
  for (int k = 0; k < length; ++k) {
    int ex = 0;
    while (ex == 0) ex = e(rng);
    if (G.n >= 2 && kind(rng) == 0) {
      std::uniform_int_distribution<int> s(1, G.n - 1);
      w.letters.push_back(Letter::sigma(s(rng), ex));
    } else {
      w.letters.push_back(Letter::a(strand(rng), handle(rng), ex));
    }
  }
  return w;
}

// Letter-by-letter product through the group law, independent of the fold.
Element product_of_letters(const GroupDescriptor& G, const BraidWord& w) {
  Element x = identity(G);
  for (const auto& l : w.letters) {
    const Element g = l.kind == Letter::Kind::Sigma ? generator_sigma(G, l.i) : generator_a(G, l.i, l.r);
    x = mul(G, x, power(G, g, l.exponent));
  }
  return x;
}

}  // namespace

TEST(BraidWord, ParseExamples) {
  const auto G = GroupDescriptor::torus(2);
  const auto w = parse(G, "s1^-1 a[2,1]^3");
  ASSERT_EQ(w.letters.size(), 2U);
  EXPECT_EQ(w.letters[0], Letter::sigma(1, -1));
  EXPECT_EQ(w.letters[1], Letter::a(2, 1, 3));
  EXPECT_TRUE(parse(G, "").letters.empty());
  EXPECT_TRUE(parse(G, "   ").letters.empty());
  EXPECT_EQ(parse(G, "s1*a[1,2]^+2 * s1"), parse(G, "s1 a[1,2]^2 s1"));
  try {
    parse(G, "a[3,1]");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
  }
}

TEST(BraidWord, ParseErrorsCarryPositions) {
  const auto G = GroupDescriptor::torus(3);
  auto pos = [&](const char* text) -> std::size_t {
    try {
      parse(G, text);
    } catch (const ParseError& e) {
      EXPECT_EQ(e.code(), Errc::ParseError);
      return e.position();
    }
    ADD_FAILURE() << "no parse error for " << text;
    return 0;
  };
  EXPECT_EQ(pos("x1"), 0U);
  EXPECT_EQ(pos("s1 s"), 4U);
  EXPECT_EQ(pos("a[1 1]"), 3U);
  EXPECT_EQ(pos("s1^0"), 3U);
  EXPECT_EQ(pos("s1s2"), 2U);
  EXPECT_EQ(pos("s1 *"), 4U);
}

TEST(BraidWord, ToStringRoundTrips) {
  std::mt19937_64 rng(4);
  const auto G = GroupDescriptor::orientable(2, 4);
  for (int t = 0; t < 50; ++t) {
    const auto w = random_word(rng, G, 12);
    EXPECT_EQ(parse(G, to_string(w)), w);
  }
}

TEST(BraidWord, NormalizeExamples) {
  const auto G = GroupDescriptor::torus(2);
  CoeffVector v = zero_coeffs(G);
  v.at(1, 1) = 1;
  v.at(2, 1) = 1;
  EXPECT_EQ(normalize(G, "a[1,1] s1 a[1,1]"), (Element{v, Permutation::transposition(2, 1)}));
  EXPECT_EQ(normalize(G, "s1 a[1,1] s1"), generator_a(G, 2, 1));
  for (int n = 2; n <= 5; ++n) {
    const auto H = GroupDescriptor::torus(n);
    EXPECT_TRUE(is_identity(normalize(H, classical_words(H).full_twist_word())));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        EXPECT_TRUE(is_identity(normalize(H, classical_words(H).T_word(i, j))));
        EXPECT_TRUE(is_identity(normalize(H, classical_words(H).A_word(i, j))));
      }
  }
}

TEST(BraidWord, ClassicalWordText) {
  const auto G = GroupDescriptor::torus(3);
  const auto cw = classical_words(G);
  EXPECT_EQ(to_string(cw.T_word(1, 2)), "s1^2");
  EXPECT_EQ(to_string(cw.T_word(1, 3)), "s1 s2^2 s1");
  EXPECT_EQ(to_string(cw.full_twist_word()), "s1 s2 s1 s2 s1 s2");
  EXPECT_EQ(to_string(cw.A_word(1, 3)), "s2 s1^2 s2^-1");
  EXPECT_EQ(to_string(classical_words(GroupDescriptor::orientable(2, 3)).Atilde_word(1, 2)),
            "a[1,1] a[1,3]^-1 a[1,4]^-1");
  EXPECT_THROW(cw.T_word(2, 2), DomainError);
  EXPECT_THROW(cw.A_word(1, 4), DomainError);
}

TEST(BraidWord, RelationsHoldForSmallGroups) {
  for (int g = 1; g <= 3; ++g)
    for (int n = 1; n <= 6; ++n) {
      const auto rep = check_relations(GroupDescriptor::orientable(g, n));
      EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
      EXPECT_GT(rep.instances, 0U);
    }
  const auto G = GroupDescriptor::torus(3);
  EXPECT_EQ(normalize(G, "s1 s2 s1"), normalize(G, "s2 s1 s2"));
  EXPECT_EQ(normalize(G, "s1 s2 s1"), section_psi(G, Permutation::from_cycles(3, {{1, 3}})));
  EXPECT_TRUE(is_identity(normalize(G, "a[1,1] a[2,2] a[1,1]^-1 a[2,2]^-1")));
}

TEST(BraidWord, NormalizeIsAHomomorphismFromWords) {
  std::mt19937_64 rng(5);
  for (int g = 1; g <= 3; ++g)
    for (int n = 1; n <= 5; ++n) {
      const auto G = GroupDescriptor::orientable(g, n);
      for (int t = 0; t < 20; ++t) {
        std::uniform_int_distribution<int> len(0, 40);
        const auto w1 = random_word(rng, G, len(rng)), w2 = random_word(rng, G, len(rng));
        EXPECT_EQ(normalize(G, w1 + w2), mul(G, normalize(G, w1), normalize(G, w2)));
        EXPECT_EQ(normalize(G, w1), product_of_letters(G, w1));
        EXPECT_TRUE(is_identity(normalize(G, w1 + inverse_word(w1))));
      }
    }
}

TEST(BraidWord, ToWordIsANormalFormWord) {
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 5; ++n) {
    const auto G = GroupDescriptor::orientable(2, n);
    for (int t = 0; t < 20; ++t) {
      const Element x = random_element(rng, G, 5);
      const BraidWord w = to_word(G, x);
      EXPECT_EQ(normalize(G, w), x);
      int sigmas = 0;
      for (const auto& l : w.letters) sigmas += l.kind == Letter::Kind::Sigma;
      int inversions = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) inversions += x.perm(i) > x.perm(j);
      EXPECT_EQ(sigmas, inversions);
    }
  }
}
