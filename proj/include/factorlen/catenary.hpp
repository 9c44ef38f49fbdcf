// factorlen - factorization invariants of finitely presented monoids
//
// Catenary degrees as bottleneck thresholds: for a finite set Z of
// factorizations with a distance d, the catenary degree is the least N such
// that the graph on Z with edges {z, z'} for d(z, z') <= N is connected,
// i.e. the largest edge weight of a minimum spanning tree.

#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "length_set.hpp"

namespace factorlen {

  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : parent_(n), components_(n) {
      std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::size_t find(std::size_t x) {
      while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x          = parent_[x];
      }
      return x;
    }

    bool unite(std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      parent_[std::max(x, y)] = std::min(x, y);
      --components_;
      return true;
    }

    [[nodiscard]] std::size_t components() const noexcept {
      return components_;
    }

   private:
    std::vector<std::size_t> parent_;
    std::size_t              components_;
  };

  // Exact bottleneck threshold by Prim's algorithm; `dist(i, j)` is called
  // O(count^2) times.
  template <typename Dist>
  Length minimax_threshold(std::size_t count, Dist&& dist) {
    if (count <= 1) {
      return 0;
    }
    constexpr Length    inf = std::numeric_limits<Length>::max();
    std::vector<Length> best(count, inf);
    std::vector<bool>   in_tree(count, false);
    Length              result  = 0;
    std::size_t         current = 0;
    in_tree[0]                  = true;
    for (std::size_t step = 1; step < count; ++step) {
      std::size_t next = count;
      for (std::size_t j = 0; j < count; ++j) {
        if (in_tree[j]) {
          continue;
        }
        best[j] = std::min(best[j], dist(current, j));
        if (next == count || best[j] < best[next]) {
          next = j;
        }
      }
      result        = std::max(result, best[next]);
      in_tree[next] = true;
      current       = next;
    }
    return result;
  }

  struct WeightedEdge {
    std::size_t u;
    std::size_t v;
    Length      weight;
  };

  // Exact bottleneck threshold for large sets, using
  //  * `known`, edges whose union spans all points (an upper bound), and
  //  * a partition of the points into groups with a lower bound
  //    `group_bound(a, b)` on the distance between any point of group a and
  //    any point of group b.
  // Thresholds are tested from the upper bound downwards; a threshold is
  // refuted without evaluating `dist` as soon as the groups whose bound
  // admits it fall into more than one component. Falls back to Prim if
  // `known` does not span.
  template <typename Dist, typename GroupBound>
  Length minimax_threshold(std::size_t                    count,
                           Dist&&                         dist,
                           std::span<std::size_t const>   group_of,
                           std::size_t                    groups,
                           GroupBound&&                   group_bound,
                           std::span<WeightedEdge const>  known) {
    if (count <= 1) {
      return 0;
    }
    std::vector<WeightedEdge> sorted(known.begin(), known.end());
    std::sort(sorted.begin(), sorted.end(), [](auto const& x, auto const& y) {
      return x.weight < y.weight;
    });
    Length upper = 0;
    {
      UnionFind uf(count);
      for (auto const& e : sorted) {
        if (uf.unite(e.u, e.v)) {
          upper = e.weight;
          if (uf.components() == 1) {
            break;
          }
        }
      }
      if (uf.components() != 1) {
        return minimax_threshold(count, dist);
      }
    }

    std::vector<std::vector<std::size_t>> members(groups);
    for (std::size_t i = 0; i < count; ++i) {
      members[group_of[i]].push_back(i);
    }
    std::vector<Length> bound(groups * groups);
    for (std::size_t a = 0; a < groups; ++a) {
      for (std::size_t b = a; b < groups; ++b) {
        bound[a * groups + b] = bound[b * groups + a] = group_bound(a, b);
      }
    }

    auto connected = [&](Length t) {
      UnionFind coarse(groups);
      for (std::size_t a = 0; a < groups; ++a) {
        for (std::size_t b = a + 1; b < groups; ++b) {
          if (bound[a * groups + b] <= t) {
            coarse.unite(a, b);
          }
        }
      }
      if (coarse.components() > 1) {
        return false;
      }
      UnionFind uf(count);
      for (auto const& e : sorted) {
        if (e.weight > t) {
          break;
        }
        uf.unite(e.u, e.v);
      }
      for (std::size_t a = 0; a < groups && uf.components() > 1; ++a) {
        for (std::size_t b = a; b < groups && uf.components() > 1; ++b) {
          if (bound[a * groups + b] > t) {
            continue;
          }
          for (std::size_t i : members[a]) {
            for (std::size_t j : members[b]) {
              if ((a == b && j <= i) || uf.find(i) == uf.find(j)) {
                continue;
              }
              if (dist(i, j) <= t) {
                uf.unite(i, j);
              }
            }
          }
        }
      }
      return uf.components() == 1;
    };

    for (Length t = upper - 1; t >= 0; --t) {
      if (!connected(t)) {
        return t + 1;
      }
    }
    return 0;
  }

}  // namespace factorlen
