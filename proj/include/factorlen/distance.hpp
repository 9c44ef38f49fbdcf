// factorlen - factorization invariants of finitely presented monoids
//
// Distances between factorizations and a checker for the distance axioms
//
//   (D1) d(z, z) = 0
//   (D2) d(z, z') = d(z', z)
//   (D3) d(z, z') <= d(z, z'') + d(z'', z')
//   (D4) d(xz, xz') = d(zy, z'y) = d(z, z')
//   (D5) ||z| - |z'|| <= d(z, z') <= max{|z|, |z'|, 1}

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "length_set.hpp"
#include "presentation.hpp"

namespace factorlen {

  // Unit-cost edit distance (substitution, deletion, insertion).
  template <typename Seq>
  Length levenshtein(Seq const& x, Seq const& y) {
    std::size_t const   n = x.size();
    std::size_t const   m = y.size();
    std::vector<Length> row(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
      row[j] = static_cast<Length>(j);
    }
    for (std::size_t i = 1; i <= n; ++i) {
      Length diag = row[0];
      row[0]      = static_cast<Length>(i);
      for (std::size_t j = 1; j <= m; ++j) {
        Length const up   = row[j];
        Length const cost = (x[i - 1] == y[j - 1]) ? 0 : 1;
        row[j]            = std::min({up + 1, row[j - 1] + 1, diag + cost});
        diag              = up;
      }
    }
    return row[m];
  }

  namespace fp {

    inline Length levenshtein(Word const& x, Word const& y) {
      return factorlen::levenshtein(x.letters(), y.letters());
    }

    // A distance on pairs of words. `letter_count_bound` asserts that
    //   d(z, z') >= max(sum_c (v_c(z) - v_c(z'))^+, sum_c (v_c(z') - v_c(z))^+)
    // where v_c counts occurrences of atom c; the catenary computation uses
    // it to skip pairs.
    struct WordDistance {
      std::string                                 name;
      std::function<Length(Word const&, Word const&)> eval;
      bool                                        letter_count_bound = false;
    };

    inline WordDistance levenshtein_distance() {
      return {"levenshtein",
              [](Word const& x, Word const& y) { return levenshtein(x, y); },
              true};
    }

    inline std::optional<WordDistance> distance_by_name(std::string_view name) {
      if (name == "levenshtein") {
        return levenshtein_distance();
      }
      return std::nullopt;
    }

  }  // namespace fp

  struct AxiomReport {
    bool        passed = true;
    std::string axiom;           // "D1" ... "D5", empty on a pass
    std::string counterexample;  // human-readable
    std::size_t pairs_checked   = 0;
    std::size_t triples_checked = 0;
  };

  // Exhaustive check of (D1)-(D5) on `samples`, which must be pairwise
  // congruent factorizations. (D4) is checked for every context in
  // `contexts`, on both sides. The first violated axiom (in the order D1 to
  // D5) is reported.
  //
  // Ops must provide
  //   Length length(Z const&)
  //   Z      left(Z const& x, Z const& z)    // xz
  //   Z      right(Z const& z, Z const& y)   // zy
  //   std::string format(Z const&)
  template <typename Z, typename Dist, typename Ops>
  AxiomReport distance_axiom_probe(Dist const&        dist,
                                   std::span<Z const> samples,
                                   std::span<Z const> contexts,
                                   Ops const&         ops) {
    AxiomReport       report;
    std::size_t const n = samples.size();
    auto              fail = [&](std::string axiom, std::string what) {
      report.passed         = false;
      report.axiom          = std::move(axiom);
      report.counterexample = std::move(what);
      return report;
    };
    auto fmt = [&](Z const& z) { return ops.format(z); };

    std::vector<Length> d(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = dist(samples[i], samples[j]);
      }
    }
    report.pairs_checked = n * n;

    for (std::size_t i = 0; i < n; ++i) {
      if (d[i * n + i] != 0) {
        return fail("D1",
                    "d(" + fmt(samples[i]) + ", " + fmt(samples[i])
                        + ") = " + std::to_string(d[i * n + i]));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (d[i * n + j] != d[j * n + i]) {
          return fail("D2",
                      "d(" + fmt(samples[i]) + ", " + fmt(samples[j])
                          + ") != d(" + fmt(samples[j]) + ", "
                          + fmt(samples[i]) + ")");
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (d[i * n + j] > d[i * n + k] + d[k * n + j]) {
            return fail("D3",
                        "d(" + fmt(samples[i]) + ", " + fmt(samples[j])
                            + ") > d(.., " + fmt(samples[k]) + ") + d("
                            + fmt(samples[k]) + ", ..)");
          }
        }
      }
    }
    report.triples_checked = n * n * n;
    for (auto const& x : contexts) {
      std::vector<Z> lx, rx;
      lx.reserve(n);
      rx.reserve(n);
      for (auto const& z : samples) {
        lx.push_back(ops.left(x, z));
        rx.push_back(ops.right(z, x));
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (dist(lx[i], lx[j]) != d[i * n + j]) {
            return fail("D4",
                        "left context " + fmt(x) + " changes d("
                            + fmt(samples[i]) + ", " + fmt(samples[j]) + ")");
          }
          if (dist(rx[i], rx[j]) != d[i * n + j]) {
            return fail("D4",
                        "right context " + fmt(x) + " changes d("
                            + fmt(samples[i]) + ", " + fmt(samples[j]) + ")");
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Length const li = ops.length(samples[i]);
        Length const lj = ops.length(samples[j]);
        Length const dv = d[i * n + j];
        Length const lo = li > lj ? li - lj : lj - li;
        Length const hi = std::max<Length>({li, lj, 1});
        if (dv < lo || dv > hi) {
          return fail("D5",
                      "d(" + fmt(samples[i]) + ", " + fmt(samples[j])
                          + ") = " + std::to_string(dv) + " not in ["
                          + std::to_string(lo) + ", " + std::to_string(hi)
                          + "]");
        }
      }
    }
    return report;
  }

  namespace fp {
    struct WordOps {
      Presentation const* presentation = nullptr;

      Length length(Word const& z) const {
        return static_cast<Length>(z.length());
      }
      Word left(Word const& x, Word const& z) const {
        return x + z;
      }
      Word right(Word const& z, Word const& y) const {
        return z + y;
      }
      std::string format(Word const& z) const {
        return presentation != nullptr ? presentation->format_word(z)
                                       : z.letters();
      }
    };

    // All words of length 1..max_len over the atoms.
    inline std::vector<Word> all_words(std::size_t atoms,
                                       std::size_t min_len,
                                       std::size_t max_len) {
      std::vector<Word> out;
      std::vector<Word> layer{Word{}};
      if (min_len == 0) {
        out.push_back(Word{});
      }
      for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        next.reserve(layer.size() * atoms);
        for (auto const& w : layer) {
          for (std::size_t c = 0; c < atoms; ++c) {
            next.push_back(
                Word(w.letters() + static_cast<char>(c)));
          }
        }
        layer = std::move(next);
        if (len >= min_len) {
          out.insert(out.end(), layer.begin(), layer.end());
        }
      }
      return out;
    }

    inline AxiomReport probe_word_distance(WordDistance const&  dist,
                                           std::span<Word const> samples,
                                           Presentation const&  p,
                                           std::size_t context_len = 2) {
      auto const contexts = all_words(p.number_of_atoms(), 1, context_len);
      return distance_axiom_probe<Word>(
          dist.eval, samples, std::span<Word const>(contexts), WordOps{&p});
    }
  }  // namespace fp

}  // namespace factorlen
