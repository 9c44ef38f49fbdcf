#include <optional>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "factorlen/length_set.hpp"

using namespace factorlen;

TEST(LengthSet, ConstructionSortsAndDedupes) {
  LengthSet const L{5, 3, 3, 4};
  EXPECT_EQ(std::vector<Length>(L.begin(), L.end()), (std::vector<Length>{3, 4, 5}));
  EXPECT_EQ(L.min(), 3);
  EXPECT_EQ(L.max(), 5);
  EXPECT_EQ(LengthSet(), LengthSet{0});
}

TEST(LengthSet, RejectsInvalidSets) {
  EXPECT_THROW(LengthSet(std::vector<Length>{}), std::invalid_argument);
  EXPECT_THROW((LengthSet{-1, 2}), std::invalid_argument);
  EXPECT_THROW((LengthSet{0, 2}), std::invalid_argument);
}

TEST(LengthSet, Progression) {
  EXPECT_EQ(LengthSet::progression(3, 2, 3), (LengthSet{3, 5, 7, 9}));
  EXPECT_EQ(LengthSet::progression(4, 0, 5), (LengthSet{4}));
}

TEST(Sumset, Examples) {
  EXPECT_EQ(sumset({0}, {5, 7}), (LengthSet{5, 7}));
  EXPECT_EQ(sumset({2, 3}, {2, 3}), (LengthSet{4, 5, 6}));
  EXPECT_EQ(sumset({3, 4}, {2}), (LengthSet{5, 6}));
}

TEST(Dilation, Examples) {
  EXPECT_EQ(dilation(1, {2, 5}), (LengthSet{2, 5}));
  EXPECT_EQ(dilation(2, {1, 2, 3}), (LengthSet{2, 4, 6}));
  EXPECT_EQ(dilation(3, {1, 2}), (LengthSet{3, 6}));
  EXPECT_EQ(dilation(2, {0}), (LengthSet{0}));
  EXPECT_THROW(dilation(0, {1}), std::invalid_argument);
}

TEST(Delta, Examples) {
  EXPECT_TRUE(delta({5}).empty());
  EXPECT_EQ(delta({2, 3}), (std::set<Length>{1}));
  EXPECT_EQ(delta({2, 4, 7}), (std::set<Length>{2, 3}));
}

TEST(Elasticity, Examples) {
  EXPECT_EQ(elasticity({0}), Rational(1));
  EXPECT_EQ(elasticity({2, 3}), Rational(3, 2));
  EXPECT_EQ(elasticity({6, 7, 8, 9, 10}), Rational(5, 3));
  EXPECT_EQ(to_string(Rational(3, 2)), "3/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
}

TEST(UnionOf, Examples) {
  std::vector<LengthSet> const f1{{1}, {2}, {2, 3}};
  EXPECT_EQ(union_of(f1, 2), (LengthSet{2, 3}));
  std::vector<LengthSet> const f2{{1}};
  EXPECT_FALSE(union_of(f2, 3).has_value());
  std::vector<LengthSet> const f3{{2, 3}, {3, 4}};
  EXPECT_EQ(union_of(f3, 3), (LengthSet{2, 3, 4}));
}

TEST(Aap, Examples) {
  EXPECT_EQ(aap_check({3, 4, 5, 6, 7}, 1), (AapWitness{1, 0}));
  EXPECT_EQ(aap_check({0}, 1), (AapWitness{1, 0}));
  EXPECT_EQ(aap_check({2, 3, 5}, 1), (AapWitness{1, 1}));
  EXPECT_FALSE(aap_check({2, 3}, 2).has_value());
}

// Brute-force minimal M: the elements of L inside [min+M, max-M] form a
// non-empty progression with difference d.
namespace {
  std::optional<Length> brute_aap(LengthSet const& L, Length d) {
    for (Length M = 0; M <= L.max() - L.min(); ++M) {
      std::vector<Length> window;
      for (Length x : L) {
        if (x >= L.min() + M && x <= L.max() - M) {
          window.push_back(x);
        }
      }
      bool ok = !window.empty();
      for (std::size_t i = 1; i < window.size(); ++i) {
        ok = ok && window[i] - window[i - 1] == d;
      }
      if (ok) {
        return M;
      }
    }
    return std::nullopt;
  }
}  // namespace

TEST(Aap, MinimalityAgainstBruteForce) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    Length const d = 1 + static_cast<Length>(rng() % 3);
    std::vector<Length> v{1};
    for (int i = 0; i < 6; ++i) {
      v.push_back(1 + d * static_cast<Length>(rng() % 10));
    }
    LengthSet const L(v);
    auto const w = aap_check(L, d);
    auto const b = brute_aap(L, d);
    ASSERT_EQ(w.has_value(), b.has_value()) << to_string(L) << " d=" << d;
    if (w) {
      EXPECT_EQ(w->bound, *b) << to_string(L) << " d=" << d;
      EXPECT_TRUE(aap_holds(L, d, w->bound));
      if (w->bound > 0) {
        EXPECT_FALSE(aap_holds(L, d, w->bound - 1));
      }
    }
  }
}

TEST(Sumset, AlgebraicLaws) {
  std::mt19937 rng(11);
  auto random_set = [&] {
    std::vector<Length> v;
    int const size = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < size; ++i) {
      v.push_back(1 + static_cast<Length>(rng() % 20));
    }
    return LengthSet(v);
  };
  for (int trial = 0; trial < 300; ++trial) {
    auto const A = random_set(), B = random_set(), C = random_set();
    EXPECT_EQ(sumset(A, B), sumset(B, A));
    EXPECT_EQ(sumset(sumset(A, B), C), sumset(A, sumset(B, C)));
    EXPECT_EQ(sumset(A, LengthSet{0}), A);
    EXPECT_EQ(dilation(2, sumset(A, B)), sumset(dilation(2, A), dilation(2, B)));
    EXPECT_GE(elasticity(A), Rational(1));
  }
}

TEST(Sumset, ProgressionsAndExtremes) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    Length const d = 1 + static_cast<Length>(rng() % 4);
    auto const   A = LengthSet::progression(1 + static_cast<Length>(rng() % 9), d,
                                            static_cast<Length>(rng() % 6));
    auto const   B = LengthSet::progression(1 + static_cast<Length>(rng() % 9), d,
                                            static_cast<Length>(rng() % 6));
    auto const   S = sumset(A, B);
    Length       bound = 0;
    for (auto const& D : {delta(A), delta(B)}) {
      if (!D.empty()) {
        bound = std::max(bound, *D.rbegin());
      }
    }
    auto const DS = delta(S);
    EXPECT_LE(DS.empty() ? 0 : *DS.rbegin(), bound);
    EXPECT_EQ(aap_check(S, d), (AapWitness{d, 0}));
    auto const AA = sumset(A, A);
    EXPECT_EQ(AA.max(), 2 * A.max());
    EXPECT_EQ(AA.min(), 2 * A.min());
    EXPECT_EQ(elasticity(AA), elasticity(A));
  }
}
