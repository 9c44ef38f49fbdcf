// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "factorlen/verify.hpp"

#ifndef FACTORLEN_CORPUS_DIR
#define FACTORLEN_CORPUS_DIR ""
#endif

namespace {

  using namespace factorlen;
  using verify::Check;

  // Independent brute force for the zero-sum sequence 1^3 2^3 over C_3:
  // count vectors (c0, c1, c2), atoms by minimality, lengths by recursion.
  std::set<int> c3_lengths(std::array<int, 3> s,
                           std::vector<std::array<int, 3>> const& atoms) {
    if (s == std::array<int, 3>{0, 0, 0}) {
      return {0};
    }
    std::set<int> out;
    for (auto const& a : atoms) {
      if (a[0] <= s[0] && a[1] <= s[1] && a[2] <= s[2]) {
        for (int l : c3_lengths({s[0] - a[0], s[1] - a[1], s[2] - a[2]}, atoms)) {
          out.insert(l + 1);
        }
      }
    }
    return out;
  }

  Check c3_oracle() {
    Check c;
    c.name = "c3-oracle";
    auto zero_sum = [](std::array<int, 3> const& v) {
      return (v[1] + 2 * v[2]) % 3 == 0;
    };
    std::vector<std::array<int, 3>> atoms;
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        for (int d = 0; d <= 3; ++d) {
          std::array<int, 3> v{a, b, d};
          if (a + b + d == 0 || !zero_sum(v)) {
            continue;
          }
          bool minimal = true;
          for (int x = 0; x <= a && minimal; ++x) {
            for (int y = 0; y <= b && minimal; ++y) {
              for (int z = 0; z <= d && minimal; ++z) {
                std::array<int, 3> u{x, y, z};
                if (x + y + z > 0 && u != v && zero_sum(u)) {
                  minimal = false;
                }
              }
            }
          }
          if (minimal) {
            atoms.push_back(v);
          }
        }
      }
    }
    auto const L = c3_lengths({0, 3, 3}, atoms);
    Rational const expected(*L.rbegin(), *L.begin());
    auto const G = zs::parse_group("3");
    auto const r = zs::accepted_elasticity(G, G.elements(), 9);
    if (expected != Rational(3, 2) || r.rho != expected || !r.witness
        || zs::format_sequence(*r.witness, G) != "1^3,2^3") {
      c.fail("C_3 elasticity " + to_string(r.rho) + ", oracle "
             + to_string(expected));
    }
    return c;
  }

  Check merge(std::string name, std::vector<Check> const& parts) {
    Check c;
    c.name = std::move(name);
    for (auto const& p : parts) {
      c.seconds += p.seconds;
      if (!p.passed) {
        c.fail(p.name + ": " + p.counterexample);
      }
    }
    return c;
  }

}  // namespace

int main() {
  verify::Options opt;
  opt.corpus = corpus::Corpus(FACTORLEN_CORPUS_DIR);
  auto const r = verify::range;

  std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"1 oracle equivalence",
       [&] { return verify::oracle_equivalence(r(2, 5), 12, opt); }},
      {"2 q-scheme equality", [&] { return verify::q_scheme(10'000, 12); }},
      {"3 catenary degree n-1",
       [&] { return verify::catenary_degree(r(2, 5), 10, opt); }},
      {"4 half-factoriality at n=2",
       [&] { return verify::half_factorial(12, opt); }},
      {"5 system shape", [&] { return verify::system_shape(r(3, 4), 12, 6, 12); }},
      {"6 unions of sets of lengths",
       [&] { return verify::unions(r(3, 4), 2, 8, opt); }},
      {"7 non-accepted elasticity",
       [&] { return verify::non_accepted_elasticity(r(3, 5), 12, 200, opt); }},
      {"8 monoid structure of L(B_n)",
       [&] { return verify::monoid_structure(r(3, 4), 500, 20, 8, opt.seed); }},
      {"9 rho_k growth", [&] { return verify::rho_growth(3, 8, 3, 50); }},
      {"10 non-BF detection",
       [&] {
         return verify::non_bf({{"b0", "b"}, {"b1", "b"}, {"adyan", "aa"}},
                               fp::Caps{4, 4096}, 3, opt);
       }},
      {"11 zero-sum discriminator",
       [&] {
         return merge("zero-sum",
                      {verify::zero_sum_discriminator({"2", "3", "2x2", "4"}, r(3, 5)),
                       c3_oracle()});
       }},
      {"12 distance axioms",
       [&] {
         return merge("axioms", {verify::levenshtein_axioms(3, 8, opt),
                                 verify::commutative_axioms("3", 9)});
       }},
  };

  int failures = 0;
  for (auto const& [label, run] : criteria) {
    auto const t0 = std::chrono::steady_clock::now();
    Check      c;
    try {
      c = run();
    } catch (std::exception const& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    double const s
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %s (%.2fs)%s%s\n",
                c.passed ? "PASS" : "FAIL",
                label.c_str(),
                s,
                c.passed ? "" : ": ",
                c.counterexample.c_str());
    failures += c.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
