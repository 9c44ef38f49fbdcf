// factorlen - factorization invariants of finitely presented monoids
//
// Bounded congruence closure for finitely presented monoids. The
// factorizations of the element represented by a word w are the words
// reachable from w by replacing a factor u by v, or v by u, for a relation
// (u, v). The closure is explored breadth first by rewriting step count,
// each level in lexicographic order, so truncated results are reproducible.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "catenary.hpp"
#include "distance.hpp"
#include "length_set.hpp"
#include "presentation.hpp"

namespace factorlen::fp {

  struct Caps {
    std::size_t max_len  = 64;
    std::size_t max_iter = 1'000'000;  // insertions into the closure

    friend bool operator==(Caps const&, Caps const&) = default;
  };

  struct FactorizationSet {
    // Discovery order: by rewriting distance from the seed, then
    // lexicographically. words[0] is the seed.
    std::vector<Word> words;
    // parent[i] is the word words[i] was first derived from; parent[0] = 0.
    std::vector<std::size_t> parent;
    bool                     complete = true;
    // Distinct words longer than caps.max_len that were reached but not
    // expanded.
    std::size_t overflow = 0;
    bool        iteration_cap_hit = false;
    Caps        caps;

    [[nodiscard]] std::size_t max_length() const {
      std::size_t out = 0;
      for (auto const& w : words) {
        out = std::max(out, w.length());
      }
      return out;
    }
  };

  namespace detail {
    struct Rule {
      std::string const* from;
      std::string const* to;
    };

    inline std::vector<Rule> rules_of(Presentation const& p) {
      std::vector<Rule> out;
      for (auto const& r : p.relations()) {
        if (r.lhs == r.rhs) {
          continue;
        }
        out.push_back({&r.lhs.letters(), &r.rhs.letters()});
        out.push_back({&r.rhs.letters(), &r.lhs.letters()});
      }
      return out;
    }
  }  // namespace detail

  inline FactorizationSet factorizations(Word const&         seed,
                                         Presentation const& p,
                                         Caps                caps) {
    for (std::size_t i = 0; i < seed.length(); ++i) {
      if (seed[i] >= p.number_of_atoms()) {
        throw std::invalid_argument("factorizations: letter out of range");
      }
    }
    FactorizationSet result;
    result.caps = caps;
    auto const rules = detail::rules_of(p);

    std::unordered_map<std::string, std::size_t> index;
    std::unordered_set<std::string>              overflow;
    result.words.push_back(seed);
    result.parent.push_back(0);
    index.emplace(seed.letters(), 0);
    if (seed.length() > caps.max_len) {
      // The seed itself is beyond the cap; nothing is expanded.
      result.complete = false;
      result.overflow = 1;
      return result;
    }

    std::vector<std::size_t> frontier{0};
    std::size_t              insertions = 0;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t source : frontier) {
        // copy: result.words may reallocate below
        std::string const w = result.words[source].letters();
        for (auto const& rule : rules) {
          auto const& from = *rule.from;
          auto const& to   = *rule.to;
          if (from.size() > w.size()) {
            continue;
          }
          for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
            if (w.compare(pos, from.size(), from) != 0) {
              continue;
            }
            std::string v;
            v.reserve(w.size() - from.size() + to.size());
            v.append(w, 0, pos);
            v.append(to);
            v.append(w, pos + from.size());
            if (v.size() > caps.max_len) {
              overflow.insert(std::move(v));
              continue;
            }
            if (index.contains(v)) {
              continue;
            }
            if (insertions == caps.max_iter) {
              result.iteration_cap_hit = true;
              break;
            }
            ++insertions;
            index.emplace(v, result.words.size());
            next.push_back(result.words.size());
            result.words.emplace_back(std::move(v));
            result.parent.push_back(source);
          }
          if (result.iteration_cap_hit) {
            break;
          }
        }
        if (result.iteration_cap_hit) {
          break;
        }
      }
      if (result.iteration_cap_hit) {
        break;
      }
      // Sort the new level lexicographically, keeping parents attached.
      std::vector<std::size_t> order(next.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return result.words[next[x]] < result.words[next[y]];
      });
      if (!std::is_sorted(order.begin(), order.end())) {
        std::size_t const  base = next.empty() ? 0 : next.front();
        std::vector<Word>        words;
        std::vector<std::size_t> parents;
        words.reserve(order.size());
        parents.reserve(order.size());
        for (std::size_t o : order) {
          words.push_back(std::move(result.words[next[o]]));
          parents.push_back(result.parent[next[o]]);
        }
        for (std::size_t i = 0; i < order.size(); ++i) {
          result.words[base + i]  = std::move(words[i]);
          result.parent[base + i] = parents[i];
          index[result.words[base + i].letters()] = base + i;
        }
      }
      frontier = std::move(next);
    }
    result.overflow = overflow.size();
    result.complete = overflow.empty() && !result.iteration_cap_hit;
    return result;
  }

  struct LengthsResult {
    LengthSet lengths;
    bool      complete;
  };

  // The lengths of the words in the (possibly truncated) class. Throws if the
  // class contains the empty word together with non-empty words, which only
  // happens for presentations that are not reduced.
  inline LengthSet lengths_of(FactorizationSet const& z) {
    std::vector<Length> v;
    v.reserve(z.words.size());
    for (auto const& w : z.words) {
      v.push_back(static_cast<Length>(w.length()));
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.front() == 0 && v.size() > 1) {
      throw std::domain_error(
          "the empty word is congruent to a non-empty word; the presentation "
          "does not define a reduced monoid");
    }
    return LengthSet(std::move(v));
  }

  inline LengthsResult length_set_of(Word const&         w,
                                     Presentation const& p,
                                     Caps                caps) {
    auto z = factorizations(w, p, caps);
    return {lengths_of(z), z.complete};
  }

  struct CatenaryResult {
    Length value;
    bool   complete;
  };

  // Catenary degree of the class z with respect to dist.
  inline Length catenary_of(FactorizationSet const& z,
                            Presentation const&     p,
                            WordDistance const&     dist) {
    std::size_t const n = z.words.size();
    if (n <= 1) {
      return 0;
    }
    auto d = [&](std::size_t i, std::size_t j) {
      return dist.eval(z.words[i], z.words[j]);
    };
    if (!dist.letter_count_bound) {
      return minimax_threshold(n, d);
    }
    // Group by letter counts.
    std::size_t const                            atoms = p.number_of_atoms();
    std::vector<std::vector<Length>>             counts;
    std::map<std::vector<Length>, std::size_t>   group_index;
    std::vector<std::size_t>                     group_of(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Length> c(atoms, 0);
      for (std::size_t k = 0; k < z.words[i].length(); ++k) {
        ++c[z.words[i][k]];
      }
      auto [it, inserted] = group_index.emplace(c, counts.size());
      if (inserted) {
        counts.push_back(std::move(c));
      }
      group_of[i] = it->second;
    }
    auto group_bound = [&](std::size_t a, std::size_t b) {
      Length pos = 0, neg = 0;
      for (std::size_t c = 0; c < atoms; ++c) {
        Length const diff = counts[a][c] - counts[b][c];
        (diff > 0 ? pos : neg) += diff > 0 ? diff : -diff;
      }
      return std::max(pos, neg);
    };
    std::vector<WeightedEdge> tree;
    tree.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      tree.push_back({z.parent[i], i, d(z.parent[i], i)});
    }
    return minimax_threshold(n,
                             d,
                             std::span<std::size_t const>(group_of),
                             counts.size(),
                             group_bound,
                             std::span<WeightedEdge const>(tree));
  }

  inline CatenaryResult catenary_of(Word const&         w,
                                    Presentation const& p,
                                    WordDistance const& dist,
                                    Caps                caps) {
    auto z = factorizations(w, p, caps);
    return {catenary_of(z, p, dist), z.complete};
  }

  // max over relations (x, y) of dist(x, y); bounds every catenary degree.
  inline Length relation_bound(Presentation const& p, WordDistance const& dist) {
    Length out = 0;
    for (auto const& r : p.relations()) {
      out = std::max(out, dist.eval(r.lhs, r.rhs));
    }
    return out;
  }

  // Calls f(FactorizationSet const&) once per congruence class meeting the
  // words of length min_len..max_len, in order of the smallest such word.
  template <typename Callback>
  void for_each_class(Presentation const& p,
                      std::size_t         min_len,
                      std::size_t         max_len,
                      Caps                caps,
                      Callback&&          f) {
    std::unordered_set<std::string> seen;
    for (auto const& w : all_words(p.number_of_atoms(), min_len, max_len)) {
      if (seen.contains(w.letters())) {
        continue;
      }
      auto z = factorizations(w, p, caps);
      for (auto const& v : z.words) {
        seen.insert(v.letters());
      }
      f(z);
    }
  }

  struct DeltaProbe {
    std::set<Length> distances;
    std::size_t      classes_complete   = 0;
    std::size_t      classes_incomplete = 0;
  };

  // Union of the distance sets of all completely enumerated classes of
  // words of length <= max_word_len; a lower approximation of Delta(H).
  inline DeltaProbe delta_probe(Presentation const& p,
                                std::size_t         max_word_len,
                                Caps                caps) {
    DeltaProbe out;
    for_each_class(p, 1, max_word_len, caps, [&](FactorizationSet const& z) {
      if (!z.complete) {
        ++out.classes_incomplete;
        return;
      }
      ++out.classes_complete;
      for (Length gap : delta(lengths_of(z))) {
        out.distances.insert(gap);
      }
    });
    return out;
  }

}  // namespace factorlen::fp
