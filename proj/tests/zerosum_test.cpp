#include <algorithm>
#include <random>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "factorlen/zerosum.hpp"

using namespace factorlen;

namespace {
  std::set<std::string> formatted(std::vector<zs::Sequence> const& v,
                                  zs::FiniteAbelianGroup const&    G) {
    std::set<std::string> out;
    for (auto const& S : v) {
      out.insert(zs::format_sequence(S, G));
    }
    return out;
  }
}  // namespace

TEST(Group, ParseAndIndex) {
  auto const G = zs::parse_group("2x3");
  EXPECT_EQ(G.order(), 6u);
  for (std::size_t i = 0; i < G.order(); ++i) {
    EXPECT_EQ(G.index(G.element(i)), i);
  }
  EXPECT_EQ(zs::parse_group("trivial").order(), 1u);
  EXPECT_THROW(zs::parse_group("x"), std::invalid_argument);
  EXPECT_THROW(zs::parse_group("3x"), std::invalid_argument);
}

TEST(Sigma, Examples) {
  auto const G = zs::parse_group("3");
  EXPECT_EQ(zs::sigma(zs::Sequence(G), G), G.zero());
  EXPECT_EQ(zs::sigma(zs::parse_sequence(G, "1^3"), G), G.zero());
  EXPECT_EQ(zs::format_element(zs::sigma(zs::parse_sequence(G, "1^2"), G)), "2");
}

TEST(IsAtom, Examples) {
  auto const G = zs::parse_group("3");
  EXPECT_TRUE(zs::is_atom(zs::parse_sequence(G, "0"), G));
  EXPECT_TRUE(zs::is_atom(zs::parse_sequence(G, "1^3"), G));
  EXPECT_FALSE(zs::is_atom(zs::parse_sequence(G, "1^3,2^3"), G));
}

TEST(Atoms, Examples) {
  auto const C2 = zs::parse_group("2");
  EXPECT_EQ(formatted(zs::atoms_up_to(C2, C2.elements(), 2), C2),
            (std::set<std::string>{"0", "1^2"}));
  auto const C3 = zs::parse_group("3");
  EXPECT_EQ(formatted(zs::atoms_up_to(C3, C3.elements(), 3), C3),
            (std::set<std::string>{"0", "1,2", "1^3", "2^3"}));
  auto const V   = zs::parse_group("2x2");
  auto const G0  = zs::parse_element_list(V, "0:1,1:0,1:1");
  EXPECT_EQ(formatted(zs::atoms_up_to(V, G0, 3), V),
            (std::set<std::string>{"0:1^2", "1:0^2", "1:1^2", "0:1,1:0,1:1"}));
}

// Atoms of B(C_n) found by brute force over all count vectors.
TEST(Atoms, CyclicAgainstBruteForce) {
  for (Length n = 2; n <= 5; ++n) {
    auto const G = zs::parse_group(std::to_string(n));
    std::set<std::vector<Length>> expected;
    std::vector<Length>           c(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, std::size_t pos, Length left) -> void {
      if (pos == c.size()) {
        zs::Sequence const S(c);
        if (S.length() > 0 && zs::sigma(S, G) == G.zero()) {
          bool minimal = true;
          std::vector<Length> t(c.size(), 0);
          auto sub = [&](auto&& me, std::size_t i) -> void {
            if (!minimal) {
              return;
            }
            if (i == t.size()) {
              zs::Sequence const T(t);
              if (T.length() > 0 && T != S && zs::sigma(T, G) == G.zero()) {
                minimal = false;
              }
              return;
            }
            for (t[i] = 0; t[i] <= c[i]; ++t[i]) {
              me(me, i + 1);
            }
          };
          sub(sub, 0);
          if (minimal) {
            expected.insert(c);
          }
        }
        return;
      }
      for (c[pos] = 0; c[pos] <= left; ++c[pos]) {
        self(self, pos + 1, left - c[pos]);
      }
      c[pos] = 0;
    };
    rec(rec, 0, n);
    std::set<std::vector<Length>> got;
    for (auto const& A : zs::atoms_up_to(G, G.elements(), n)) {
      got.insert(A.counts());
    }
    EXPECT_EQ(got, expected) << "C_" << n;
  }
}

TEST(Factorizations, Examples) {
  auto const G = zs::parse_group("3");
  EXPECT_EQ(zs::factorizations_zs(zs::Sequence(G), G).factorizations.size(), 1u);
  auto const f = zs::factorizations_zs(zs::parse_sequence(G, "1^3,2^3"), G);
  EXPECT_EQ(f.factorizations.size(), 2u);
  EXPECT_EQ(zs::factorizations_zs(zs::parse_sequence(G, "1,2"), G).factorizations.size(), 1u);
  EXPECT_THROW(zs::factorizations_zs(zs::parse_sequence(G, "1"), G), std::invalid_argument);
}

TEST(Lengths, Examples) {
  auto const C3 = zs::parse_group("3");
  EXPECT_EQ(zs::length_set_zs(zs::parse_sequence(C3, "1^3,2^3"), C3), (LengthSet{2, 3}));
  EXPECT_EQ(zs::length_set_zs(zs::Sequence(C3), C3), (LengthSet{0}));
  auto const C2 = zs::parse_group("2");
  for (Length k = 1; k <= 6; ++k) {
    auto const S = zs::parse_sequence(C2, "1^" + std::to_string(2 * k));
    EXPECT_EQ(zs::length_set_zs(S, C2), (LengthSet{k}));
  }
}

TEST(CommutativeDistance, Examples) {
  // atoms: 0 = 1^3, 1 = 2^3, 2 = 1,2
  zs::Factorization const x{0, 1}, y{2, 2, 2}, z{0, 1, 2}, w{2, 2, 2, 2};
  EXPECT_EQ(zs::commutative_distance(x, x), 0);
  EXPECT_EQ(zs::commutative_distance(x, y), 3);
  EXPECT_EQ(zs::commutative_distance(z, w), 3);
}

TEST(Catenary, Examples) {
  auto const C3 = zs::parse_group("3");
  EXPECT_EQ(zs::catenary_zs(zs::parse_sequence(C3, "1^3"), C3), 0);
  EXPECT_EQ(zs::catenary_zs(zs::parse_sequence(C3, "1^3,2^3"), C3), 3);
  auto const C2 = zs::parse_group("2");
  for (auto const& S : zs::zero_sum_sequences(C2, C2.elements(), 12)) {
    EXPECT_EQ(zs::catenary_zs(S, C2), 0);
  }
}

TEST(Elasticity, Examples) {
  auto const C2 = zs::parse_group("2");
  auto const r2 = zs::accepted_elasticity(C2, C2.elements(), 8);
  EXPECT_EQ(r2.rho, Rational(1));
  EXPECT_TRUE(r2.attained);
  auto const C3 = zs::parse_group("3");
  auto const r3 = zs::accepted_elasticity(C3, C3.elements(), 9);
  EXPECT_EQ(r3.rho, Rational(3, 2));
  ASSERT_TRUE(r3.witness.has_value());
  EXPECT_EQ(zs::format_sequence(*r3.witness, C3), "1^3,2^3");
  auto const T  = zs::parse_group("trivial");
  auto const rt = zs::accepted_elasticity(T, T.elements(), 4);
  EXPECT_EQ(rt.rho, Rational(1));
  EXPECT_TRUE(rt.attained);
  ASSERT_TRUE(rt.witness.has_value());
  EXPECT_EQ(zs::format_sequence(*rt.witness, T), "0");
}

TEST(Structure, RoundTripAndSaturation) {
  std::mt19937 rng(5);
  for (std::string group_text : {"3", "4", "2x2"}) {
    auto const G    = zs::parse_group(group_text);
    auto const seqs = zs::zero_sum_sequences(G, G.elements(), 7);
    for (auto const& S : seqs) {
      auto const f = zs::factorizations_zs(S, G);
      for (auto const& z : f.factorizations) {
        zs::Sequence product(G);
        for (auto a : z) {
          product += f.atoms[a];
        }
        EXPECT_EQ(product, S);
      }
      // zero-sum sub-multisets have zero-sum complements
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Length> t;
        for (Length c : S.counts()) {
          t.push_back(c == 0 ? 0 : static_cast<Length>(rng() % static_cast<unsigned>(c + 1)));
        }
        zs::Sequence const T(t);
        if (zs::sigma(T, G) == G.zero()) {
          EXPECT_EQ(zs::sigma(S - T, G), G.zero());
        }
      }
    }
  }
}

TEST(Parse, SequenceSyntax) {
  auto const V = zs::parse_group("2x2");
  auto const S = zs::parse_sequence(V, "1:0^2,0:1");
  EXPECT_EQ(S.length(), 3);
  EXPECT_EQ(zs::format_sequence(S, V), "0:1,1:0^2");
  EXPECT_THROW(zs::parse_sequence(V, "2:0"), std::invalid_argument);
  EXPECT_THROW(zs::parse_sequence(V, "1"), std::invalid_argument);
  EXPECT_THROW(zs::parse_sequence(V, "1:0^x"), std::invalid_argument);
}
