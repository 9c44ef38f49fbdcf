// factorlen - factorization invariants of finitely presented monoids
//
// Verification suites: every closed formula for B_n against the
// enumeration engine, plus the structural checks for B(G0). Each check
// returns a Check with pass/fail, metrics, and the first counterexample.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "bn.hpp"
#include "closure.hpp"
#include "corpus.hpp"
#include "distance.hpp"
#include "length_set.hpp"
#include "zerosum.hpp"

namespace factorlen::verify {

  using nlohmann::json;

  struct Check {
    std::string name;
    bool        passed = true;
    json        metrics = json::object();
    std::string counterexample;
    double      seconds = 0;

    // Records the first failure only.
    void fail(std::string what) {
      if (passed) {
        passed         = false;
        counterexample = std::move(what);
      }
    }
  };

  inline json to_json(Check const& c) {
    json out{{"name", c.name}, {"passed", c.passed}, {"metrics", c.metrics}};
    if (!c.passed) {
      out["counterexample"] = c.counterexample;
    }
    return out;
  }

  struct Options {
    long          n_max    = 5;
    long          size_max = 12;
    std::uint64_t seed     = 20170101;
    fp::Caps      caps;
    corpus::Corpus corpus;
  };

  namespace detail {
    template <typename F>
    Check timed(std::string name, F&& body) {
      Check      c;
      c.name     = std::move(name);
      auto const t0 = std::chrono::steady_clock::now();
      body(c);
      c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                                - t0)
                      .count();
      return c;
    }

    inline fp::Word bn_word(fp::Presentation const& p, Length k, Length m) {
      return p.parse_word(std::string(static_cast<std::size_t>(k), 'a')
                          + std::string(static_cast<std::size_t>(m), 'b'));
    }

    inline std::string element_str(bn::Element const& e) {
      return "a^" + std::to_string(e.k) + " b^" + std::to_string(e.m) + " in B_"
             + std::to_string(e.n);
    }

    inline void require_bn_alphabet(fp::Presentation const& p) {
      if (p.atoms() != std::vector<std::string>{"a", "b"}) {
        throw std::invalid_argument("B_n presentations must have atoms a b");
      }
    }
  }  // namespace detail

  // bn::length_set equals the enumerated set of lengths of a^k b^m for all
  // k + m <= size_max; every enumerated word normalizes to (k, m).
  inline Check oracle_equivalence(std::vector<long> const& ns,
                                  long                     size_max,
                                  Options const&           opt) {
    return detail::timed("oracle-equivalence", [&](Check& c) {
      std::size_t elements = 0, words = 0;
      for (long n : ns) {
        auto const p = opt.corpus.bn(n);
        detail::require_bn_alphabet(p);
        for (Length k = 0; k <= size_max; ++k) {
          for (Length m = 0; k + m <= size_max; ++m) {
            auto const e = bn::make_element(n, k, m);
            auto const z = fp::factorizations(detail::bn_word(p, k, m), p, opt.caps);
            ++elements;
            words += z.words.size();
            if (!z.complete) {
              c.fail("enumeration truncated for " + detail::element_str(e));
              continue;
            }
            auto const expected = bn::length_set(e);
            auto const observed = fp::lengths_of(z);
            if (expected != observed) {
              c.fail(detail::element_str(e) + ": closed form "
                     + to_string(expected) + ", enumeration "
                     + to_string(observed));
            }
            for (auto const& w : z.words) {
              auto const v = bn::normalize(p.format_word(w), n);
              if (v != e) {
                c.fail("word " + p.format_word(w) + " in the class of "
                       + detail::element_str(e) + " normalizes elsewhere");
              }
              if (!expected.contains(static_cast<Length>(w.length()))) {
                c.fail("|" + p.format_word(w) + "| not in L("
                       + detail::element_str(e) + ")");
              }
            }
          }
        }
      }
      c.metrics["elements"] = elements;
      c.metrics["words"]    = words;
    });
  }

  inline Check q_scheme(Length m_max, Length n_max) {
    return detail::timed("q-scheme", [&](Check& c) {
      std::size_t pairs = 0;
      for (Length n = 2; n <= n_max; ++n) {
        for (Length m = 0; m <= m_max; ++m) {
          ++pairs;
          if (bn::q_iter(m, n) != bn::q_closed(m, n)) {
            c.fail("q_iter(" + std::to_string(m) + "," + std::to_string(n)
                   + ") = " + std::to_string(bn::q_iter(m, n))
                   + " but q_closed = " + std::to_string(bn::q_closed(m, n)));
          }
        }
      }
      c.metrics["pairs"] = pairs;
    });
  }

  // Max catenary degree over classes of seeds of length <= seed_len is n-1
  // and never exceeds the relation bound; the class of ba realizes n-1.
  inline Check catenary_degree(std::vector<long> const& ns,
                               std::size_t              seed_len,
                               Options const&           opt) {
    return detail::timed("catenary-degree", [&](Check& c) {
      auto const dist = fp::levenshtein_distance();
      json       per_n = json::object();
      for (long n : ns) {
        auto const p     = opt.corpus.bn(n);
        Length const bound = fp::relation_bound(p, dist);
        Length       max_c = 0;
        Length       max_gap = 0;
        std::size_t  classes = 0;
        fp::for_each_class(p, 1, seed_len, opt.caps, [&](auto const& z) {
          ++classes;
          if (!z.complete) {
            c.fail("class of " + p.format_word(z.words[0]) + " in B_"
                   + std::to_string(n) + " truncated");
            return;
          }
          Length const value = fp::catenary_of(z, p, dist);
          max_c              = std::max(max_c, value);
          if (value > bound) {
            c.fail("c(" + p.format_word(z.words[0]) + ") = "
                   + std::to_string(value) + " exceeds relation bound "
                   + std::to_string(bound));
          }
          for (Length gap : delta(fp::lengths_of(z))) {
            max_gap = std::max(max_gap, gap);
            if (gap > value) {
              c.fail("sup Delta > c for " + p.format_word(z.words[0]));
            }
          }
        });
        if (max_c != bn::catenary_constant(n)) {
          c.fail("B_" + std::to_string(n) + ": max catenary degree "
                 + std::to_string(max_c) + ", expected "
                 + std::to_string(n - 1));
        }
        auto const ba = fp::catenary_of(p.parse_word("ba"), p, dist, opt.caps);
        if (!ba.complete || ba.value != n - 1) {
          c.fail("c(ba) in B_" + std::to_string(n) + " is "
                 + std::to_string(ba.value));
        }
        per_n[std::to_string(n)] = {{"max_catenary", max_c},
                                    {"relation_bound", bound},
                                    {"max_distance", max_gap},
                                    {"classes", classes}};
      }
      c.metrics["per_n"] = per_n;
    });
  }

  // Every set of lengths of B_2 is a singleton and its delta probe is empty.
  inline Check half_factorial(std::size_t seed_len, Options const& opt) {
    return detail::timed("half-factorial", [&](Check& c) {
      auto const  p       = opt.corpus.bn(2);
      std::size_t classes = 0;
      fp::for_each_class(p, 1, seed_len, opt.caps, [&](auto const& z) {
        ++classes;
        if (!z.complete) {
          c.fail("class of " + p.format_word(z.words[0]) + " truncated");
          return;
        }
        auto const L = fp::lengths_of(z);
        if (!L.is_singleton()) {
          c.fail("L(" + p.format_word(z.words[0]) + ") = " + to_string(L));
        }
      });
      auto const probe = fp::delta_probe(p, seed_len, opt.caps);
      if (!probe.distances.empty()) {
        c.fail("delta probe of B_2 is non-empty");
      }
      c.metrics["classes"] = classes;
      c.metrics["delta"]   = json::array();
    });
  }

  // Every closed-form set of lengths lies in the system, with Delta inside
  // {n-2}; every (x, q) with x > q yields a witness realizing it.
  inline Check system_shape(std::vector<long> const& ns,
                            Length                   size_max,
                            Length                   q_max,
                            Length                   x_max) {
    return detail::timed("system-shape", [&](Check& c) {
      std::size_t sets = 0, witnesses = 0;
      for (long n : ns) {
        for (Length k = 0; k <= size_max; ++k) {
          for (Length m = 0; k + m <= size_max; ++m) {
            auto const e = bn::make_element(n, k, m);
            auto const L = bn::length_set(e);
            ++sets;
            if (!bn::system_membership(L, n)) {
              c.fail(to_string(L) + " = L(" + detail::element_str(e)
                     + ") rejected by membership");
            }
            auto const gaps = delta(L);
            if (!gaps.empty()
                && (gaps.size() != 1 || *gaps.begin() != n - 2)) {
              c.fail("Delta(L(" + detail::element_str(e) + ")) not in {n-2}");
            }
            Length const q = bn::q_closed(m, n);
            if ((k + m > 0) && !(k + m - q * (n - 2) > q)) {
              c.fail("x > q fails for " + detail::element_str(e));
            }
          }
        }
        for (Length x = 1; x <= x_max; ++x) {
          for (Length q = 0; q <= q_max && q < x; ++q) {
            auto const L = (n == 2) ? LengthSet{x}
                                    : LengthSet::progression(x, n - 2, q);
            if (n == 2 && q > 0) {
              continue;
            }
            auto const w = bn::system_membership(L, n);
            ++witnesses;
            if (!w) {
              c.fail(to_string(L) + " not recognized in B_" + std::to_string(n));
            } else if (bn::length_set(*w) != L) {
              c.fail("witness " + detail::element_str(*w) + " for "
                     + to_string(L) + " has L = "
                     + to_string(bn::length_set(*w)));
            }
          }
        }
        // x <= q is never a member
        for (Length x = 1; x <= x_max && n > 2; ++x) {
          for (Length q = x; q <= x + 2; ++q) {
            if (bn::system_membership(LengthSet::progression(x, n - 2, q), n)) {
              c.fail("x <= q accepted for x=" + std::to_string(x)
                     + ", q=" + std::to_string(q));
            }
          }
        }
      }
      c.metrics["sets"]      = sets;
      c.metrics["witnesses"] = witnesses;
    });
  }

  // U_l(B_n) against the union of enumerated sets of lengths containing l,
  // over all a^k b^m with k + m <= (n-1) l + n.
  inline Check unions(std::vector<long> const& ns,
                      Length                   ell_min,
                      Length                   ell_max,
                      Options const&           opt) {
    return detail::timed("unions", [&](Check& c) {
      json per = json::array();
      for (long n : ns) {
        auto const p = opt.corpus.bn(n);
        // enumerate once up to the largest saturation bound
        Length const        bound = (n - 1) * ell_max + n;
        std::vector<LengthSet> family;
        for (Length k = 0; k <= bound; ++k) {
          for (Length m = 0; k + m <= bound; ++m) {
            auto const z
                = fp::factorizations(detail::bn_word(p, k, m), p, opt.caps);
            if (!z.complete) {
              c.fail("enumeration truncated for a^" + std::to_string(k) + " b^"
                     + std::to_string(m) + " in B_" + std::to_string(n));
              continue;
            }
            family.push_back(fp::lengths_of(z));
          }
        }
        for (Length ell = ell_min; ell <= ell_max; ++ell) {
          auto const U        = bn::union_of_lengths(ell, n);
          auto const observed = union_of(family, ell);
          if (!observed || *observed != U) {
            c.fail("U_" + std::to_string(ell) + "(B_" + std::to_string(n)
                   + "): formula " + to_string(U) + ", enumeration "
                   + (observed ? to_string(*observed) : "empty"));
          }
          auto const aap = aap_check(U, n - 2);
          if (!aap || aap->bound != 0) {
            c.fail("U_" + std::to_string(ell) + "(B_" + std::to_string(n)
                   + ") is not an AP with difference n-2");
          }
          if (U.max() != ell + (n - 2) * (ell - 1)
              || U.max() != bn::rho_k(ell, n)) {
            c.fail("max U_" + std::to_string(ell) + "(B_" + std::to_string(n)
                   + ") = " + std::to_string(U.max()));
          }
          per.push_back({{"n", n}, {"l", ell}, {"union", to_string(U)}});
        }
      }
      c.metrics["unions"] = per;
    });
  }

  // No set of lengths attains n-1, while sets of b^m with m <= m_max come
  // within 1/10 of it.
  inline Check non_accepted_elasticity(std::vector<long> const& ns,
                                       Length                   enum_size,
                                       Length                   m_max,
                                       Options const&           opt) {
    return detail::timed("non-accepted-elasticity", [&](Check& c) {
      json per = json::object();
      for (long n : ns) {
        Rational const sup = Rational(n - 1);
        auto const     es  = bn::elasticity_sup(n);
        if (es.value != sup || es.accepted) {
          c.fail("elasticity_sup(" + std::to_string(n) + ") reported wrongly");
        }
        auto const p = opt.corpus.bn(n);
        for (Length k = 0; k <= enum_size; ++k) {
          for (Length m = 0; k + m <= enum_size; ++m) {
            auto const r = fp::length_set_of(detail::bn_word(p, k, m), p, opt.caps);
            if (!r.complete || !(elasticity(r.lengths) < sup)) {
              c.fail("rho(L(a^" + std::to_string(k) + " b^" + std::to_string(m)
                     + ")) >= n-1 in B_" + std::to_string(n));
            }
          }
        }
        Rational best(1);
        for (Length k = 0; k <= m_max; ++k) {
          for (Length m = 0; m <= m_max; ++m) {
            auto const r = elasticity(bn::length_set(bn::make_element(n, k, m)));
            if (!(r < sup)) {
              c.fail("closed form attains n-1 at a^" + std::to_string(k)
                     + " b^" + std::to_string(m));
            }
            if (k == 0) {
              best = std::max(best, r);
            }
          }
        }
        if (best < sup - Rational(1, 10)) {
          c.fail("sup over m <= " + std::to_string(m_max) + " is only "
                 + to_string(best) + " in B_" + std::to_string(n));
        }
        per[std::to_string(n)] = {{"sup", to_string(sup)},
                                  {"best_observed", to_string(best)}};
      }
      c.metrics["per_n"] = per;
    });
  }

  // L(B_n) is closed under set addition and phi is an isomorphism onto H;
  // the atoms of H are the (k, k-1) and H is half-factorial.
  inline Check monoid_structure(std::vector<long> const& ns,
                                std::size_t              pairs,
                                Length                   atom_k_max,
                                std::size_t              max_atoms,
                                std::uint64_t            seed) {
    return detail::timed("monoid-structure", [&](Check& c) {
      std::mt19937_64 rng(seed);
      auto            sample = [&](long n) {
        if (rng() % 20 == 0) {
          return LengthSet{0};
        }
        Length const x = 1 + static_cast<Length>(rng() % 40);
        Length const q = static_cast<Length>(rng() % static_cast<std::uint64_t>(x));
        return LengthSet::progression(x, n - 2, q);
      };
      for (long n : ns) {
        std::map<bn::HElement, LengthSet> seen;
        for (std::size_t i = 0; i < pairs; ++i) {
          auto const L1 = sample(n);
          auto const L2 = sample(n);
          auto const S  = sumset(L1, L2);
          if (!bn::system_membership(S, n)) {
            c.fail(to_string(L1) + " + " + to_string(L2) + " left the system");
            continue;
          }
          auto const h1 = bn::phi(L1, n);
          auto const h2 = bn::phi(L2, n);
          if (bn::phi(S, n) != bn::h_add(h1, h2)) {
            c.fail("phi not additive on " + to_string(L1) + ", "
                   + to_string(L2));
          }
          for (auto const& [L, h] : {std::pair{L1, h1}, std::pair{L2, h2}}) {
            auto [it, inserted] = seen.emplace(h, L);
            if (!inserted && it->second != L) {
              c.fail("phi not injective");
            }
            if (bn::phi_inverse(h, n) != L) {
              c.fail("phi_inverse(phi(L)) != L for " + to_string(L));
            }
          }
        }
      }
      // atoms of H by brute force: (k, i) is an atom iff it is non-zero and
      // not a sum of two non-zero elements of H
      std::size_t atoms = 0;
      for (Length k = 1; k <= atom_k_max; ++k) {
        for (Length i = 0; i < k; ++i) {
          bool decomposable = false;
          for (Length k1 = 1; k1 < k && !decomposable; ++k1) {
            for (Length i1 = 0; i1 < k1 && !decomposable; ++i1) {
              Length const k2 = k - k1, i2 = i - i1;
              if (i2 >= 0 && k2 > i2) {
                decomposable = true;
              }
            }
          }
          bool const atom = !decomposable;
          atoms += atom;
          if (atom != (i == k - 1) || atom != bn::h_is_atom(bn::HElement(k, i))) {
            c.fail("h_is_atom wrong at (" + std::to_string(k) + ","
                   + std::to_string(i) + ")");
          }
        }
      }
      // half-factoriality: all sums of <= max_atoms atoms (k, k-1) with
      // k <= max_atoms + 1, grouped by value, have a single length
      std::map<std::pair<Length, Length>, std::set<std::size_t>> lengths;
      std::vector<Length>                                        chosen;
      Length const k_top = static_cast<Length>(max_atoms) + 1;
      auto recurse = [&](auto&& self, Length from, Length sk, Length si) -> void {
        if (!chosen.empty()) {
          lengths[{sk, si}].insert(chosen.size());
        }
        if (chosen.size() == max_atoms) {
          return;
        }
        for (Length k = from; k <= k_top; ++k) {
          chosen.push_back(k);
          self(self, k, sk + k, si + k - 1);
          chosen.pop_back();
        }
      };
      recurse(recurse, 1, 0, 0);
      for (auto const& [value, ls] : lengths) {
        if (ls.size() != 1
            || static_cast<Length>(*ls.begin()) != value.first - value.second) {
          c.fail("H is not half-factorial at (" + std::to_string(value.first)
                 + "," + std::to_string(value.second) + ")");
        }
      }
      c.metrics["h_atoms_found"]   = atoms;
      c.metrics["h_elements_checked"] = lengths.size();
    });
  }

  inline Check rho_growth(long n_min, long n_max, Length k_min, Length k_max) {
    return detail::timed("rho-k-growth", [&](Check& c) {
      for (long n = n_min; n <= n_max; ++n) {
        for (Length k = k_min; k <= k_max; ++k) {
          Length const diff = bn::rho_k(k, n) - bn::rho_k(k - 1, n);
          if (diff != n - 1) {
            c.fail("rho_" + std::to_string(k) + " - rho_" + std::to_string(k - 1)
                   + " = " + std::to_string(diff) + " in B_"
                   + std::to_string(n));
          }
        }
      }
      c.metrics["bound"] = "n-1";
    });
  }

  struct NonBfCase {
    std::string presentation;
    std::string seed;
  };

  // Enumeration never completes and the longest observed word grows
  // strictly as both caps double.
  inline Check non_bf(std::vector<NonBfCase> const& cases,
                      fp::Caps                      base,
                      int                           doublings,
                      Options const&                opt) {
    return detail::timed("non-bf-detection", [&](Check& c) {
      json per = json::array();
      for (auto const& nb : cases) {
        auto const  p    = opt.corpus.get(nb.presentation);
        auto const  w    = p.parse_word(nb.seed);
        fp::Caps    caps = base;
        json        maxes = json::array();
        std::size_t last  = 0;
        for (int i = 0; i <= doublings; ++i) {
          auto const z = fp::factorizations(w, p, caps);
          if (z.complete) {
            c.fail(nb.presentation + ": class of " + nb.seed
                   + " reported complete at max-len "
                   + std::to_string(caps.max_len));
          }
          if (i > 0 && z.max_length() <= last) {
            c.fail(nb.presentation + ": max length did not grow at max-len "
                   + std::to_string(caps.max_len));
          }
          last = z.max_length();
          maxes.push_back(last);
          caps.max_len *= 2;
          caps.max_iter *= 2;
        }
        per.push_back({{"presentation", nb.presentation},
                       {"seed", nb.seed},
                       {"max_lengths", maxes}});
      }
      c.metrics["cases"] = per;
    });
  }

  // B(G) attains its elasticity within the search radius; B_n does not.
  inline Check zero_sum_discriminator(std::vector<std::string> const& groups,
                                      std::vector<long> const&        ns) {
    return detail::timed("zero-sum-discriminator", [&](Check& c) {
      json per = json::object();
      for (auto const& group_text : groups) {
        auto const G = zs::parse_group(group_text);
        auto const r = zs::accepted_elasticity(
            G, G.elements(), 3 * static_cast<Length>(G.order()));
        if (!r.attained || !r.witness) {
          c.fail("no witness for C_" + group_text);
          continue;
        }
        if (elasticity(zs::length_set_zs(*r.witness, G)) != r.rho) {
          c.fail("witness for " + group_text + " does not attain " + to_string(r.rho));
        }
        per[group_text] = {{"rho", to_string(r.rho)},
                     {"witness", zs::format_sequence(*r.witness, G)},
                     {"sequences", r.sequences_checked}};
      }
      for (long n : ns) {
        if (bn::elasticity_sup(n).accepted) {
          c.fail("B_" + std::to_string(n) + " reported as accepted");
        }
      }
      c.metrics["groups"] = per;
    });
  }

  // Levenshtein on all classes of B_3 seeds up to seed_len.
  inline Check levenshtein_axioms(long n, std::size_t seed_len, Options const& opt) {
    return detail::timed("levenshtein-axioms", [&](Check& c) {
      auto const  p       = opt.corpus.bn(n);
      auto const  dist    = fp::levenshtein_distance();
      std::size_t classes = 0, pairs = 0;
      fp::for_each_class(p, 1, seed_len, opt.caps, [&](auto const& z) {
        ++classes;
        auto const r = fp::probe_word_distance(dist, z.words, p, 2);
        pairs += r.pairs_checked;
        if (!r.passed) {
          c.fail(r.axiom + ": " + r.counterexample);
        }
      });
      c.metrics["classes"] = classes;
      c.metrics["pairs"]   = pairs;
    });
  }

  // Commutative distance on all factorization classes of zero-sum
  // sequences over G of length <= max_len; contexts are the atoms.
  inline Check commutative_axioms(std::string const& group, Length max_len) {
    return detail::timed("commutative-distance-axioms", [&](Check& c) {
      auto const  G     = zs::parse_group(group);
      auto const  atoms = zs::atoms_up_to(G, G.elements(), max_len);
      std::size_t classes = 0;
      for (auto const& S : zs::zero_sum_sequences(G, G.elements(), max_len)) {
        auto f = zs::factorizations_zs(S, G);
        // re-index onto the global atom list so contexts compose
        std::vector<zs::Factorization> zs_global;
        for (auto const& z : f.factorizations) {
          zs::Factorization g;
          for (auto a : z) {
            g.push_back(static_cast<std::size_t>(
                std::find(atoms.begin(), atoms.end(), f.atoms[a]) - atoms.begin()));
          }
          std::sort(g.begin(), g.end());
          zs_global.push_back(std::move(g));
        }
        std::vector<zs::Factorization> contexts;
        for (std::size_t a = 0; a < atoms.size(); ++a) {
          contexts.push_back({a});
        }
        ++classes;
        auto const r = distance_axiom_probe<zs::Factorization>(
            zs::commutative_distance,
            std::span<zs::Factorization const>(zs_global),
            std::span<zs::Factorization const>(contexts),
            zs::FactorizationOps{});
        if (!r.passed) {
          c.fail(zs::format_sequence(S, G) + ": " + r.axiom + ": "
                 + r.counterexample);
        }
      }
      c.metrics["classes"] = classes;
    });
  }

  // Structural checks on B(G): round trip of factorizations, agreement of
  // the two length computations, directed-family containment, and
  // sup Delta <= catenary degree.
  inline Check zero_sum_structure(std::vector<std::string> const& groups,
                                  Length                          max_len) {
    return detail::timed("zero-sum-structure", [&](Check& c) {
      json per = json::object();
      for (auto const& group_text : groups) {
        auto const G     = zs::parse_group(group_text);
        auto const seqs  = zs::zero_sum_sequences(G, G.elements(), max_len);
        zs::LengthOracle oracle(G, zs::atoms_up_to(G, G.elements(), max_len));
        Length max_cat = 0, max_gap = 0;
        for (auto const& S : seqs) {
          auto const f = zs::factorizations_zs(S, G);
          for (auto const& z : f.factorizations) {
            zs::Sequence product(G);
            for (auto a : z) {
              product += f.atoms[a];
            }
            if (product != S) {
              c.fail("factorization of " + zs::format_sequence(S, G)
                     + " does not multiply back");
            }
          }
          auto const L = zs::length_set_zs(S, G);
          if (L != oracle(S)) {
            c.fail("length computations disagree on "
                   + zs::format_sequence(S, G));
          }
          Length const cat = zs::catenary_zs(S, G);
          max_cat          = std::max(max_cat, cat);
          for (Length gap : delta(L)) {
            max_gap = std::max(max_gap, gap);
          }
        }
        if (max_gap > max_cat) {
          c.fail(group_text + ": sup Delta exceeds the catenary degree");
        }
        // L(S1) + L(S2) inside L(S1 S2)
        for (std::size_t i = 0; i < seqs.size(); ++i) {
          for (std::size_t j = i; j < seqs.size(); ++j) {
            if (seqs[i].length() + seqs[j].length() > max_len) {
              continue;
            }
            auto const lhs = sumset(oracle(seqs[i]), oracle(seqs[j]));
            auto const rhs = oracle(seqs[i] + seqs[j]);
            for (Length x : lhs) {
              if (!rhs.contains(x)) {
                c.fail("L(S)+L(T) not inside L(ST) for "
                       + zs::format_sequence(seqs[i], G) + " and "
                       + zs::format_sequence(seqs[j], G));
              }
            }
          }
        }
        per[group_text] = {{"sequences", seqs.size()},
                     {"max_catenary", max_cat},
                     {"max_distance", max_gap}};
      }
      c.metrics["groups"] = per;
    });
  }

  // --- suites -------------------------------------------------------------

  struct Suite {
    std::string        name;
    std::vector<Check> checks;

    [[nodiscard]] bool passed() const {
      return std::all_of(
          checks.begin(), checks.end(), [](auto const& c) { return c.passed; });
    }
  };

  inline std::vector<long> range(long lo, long hi) {
    std::vector<long> out;
    for (long n = lo; n <= hi; ++n) {
      out.push_back(n);
    }
    return out;
  }

  inline std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{
        "bn-oracle", "catenary", "unions", "elasticity", "zerosum", "all"};
    return names;
  }

  inline Suite run_suite(std::string const& name, Options const& opt) {
    Suite s{name, {}};
    auto  want = [&](char const* n) { return name == "all" || name == n; };
    long const n_max    = opt.n_max;
    Length const size   = opt.size_max;
    if (want("bn-oracle")) {
      s.checks.push_back(oracle_equivalence(range(2, n_max), size, opt));
      s.checks.push_back(q_scheme(10'000, std::max<long>(12, n_max)));
      s.checks.push_back(half_factorial(static_cast<std::size_t>(size), opt));
      s.checks.push_back(system_shape(range(2, n_max), size, 6, 12));
      s.checks.push_back(
          monoid_structure(range(3, std::max<long>(3, n_max)), 500, 20, 8, opt.seed));
      s.checks.push_back(non_bf({{"b0", "b"}, {"b1", "b"}, {"adyan", "aa"}},
                                fp::Caps{4, 4096},
                                3,
                                opt));
    }
    if (want("catenary")) {
      s.checks.push_back(catenary_degree(
          range(2, n_max), static_cast<std::size_t>(std::min<Length>(size, 10)), opt));
      s.checks.push_back(levenshtein_axioms(3, 8, opt));
    }
    if (want("unions")) {
      s.checks.push_back(unions(range(3, std::max<long>(3, n_max)), 2, 8, opt));
      s.checks.push_back(rho_growth(3, std::max<long>(8, n_max), 3, 50));
    }
    if (want("elasticity")) {
      s.checks.push_back(non_accepted_elasticity(
          range(3, std::max<long>(3, n_max)), size, 200, opt));
    }
    if (want("zerosum")) {
      s.checks.push_back(zero_sum_discriminator({"2", "3", "2x2", "4"},
                                                range(3, std::max<long>(3, n_max))));
      s.checks.push_back(commutative_axioms("3", 9));
      s.checks.push_back(zero_sum_structure({"2", "3", "2x2", "4"}, 8));
    }
    return s;
  }

}  // namespace factorlen::verify
