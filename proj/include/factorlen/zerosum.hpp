// factorlen - factorization invariants of finitely presented monoids
//
// The monoid B(G0) of zero-sum sequences over a subset G0 of a finite
// abelian group G = C_{n_1} x ... x C_{n_r}. Its atoms are the minimal
// zero-sum sequences; it is commutative, so factorizations are multisets of
// atoms.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catenary.hpp"
#include "distance.hpp"
#include "length_set.hpp"

namespace factorlen::zs {

  // Residues modulo the cyclic orders, componentwise reduced.
  struct GroupElement {
    std::vector<Length> residues;

    friend bool operator==(GroupElement const&, GroupElement const&) = default;
    friend auto operator<=>(GroupElement const&, GroupElement const&) = default;
  };

  class FiniteAbelianGroup {
   public:
    FiniteAbelianGroup() = default;

    // The empty list of orders gives the trivial group.
    explicit FiniteAbelianGroup(std::vector<Length> cyclic_orders)
        : orders_(std::move(cyclic_orders)) {
      order_ = 1;
      for (Length n : orders_) {
        if (n < 2) {
          throw std::invalid_argument("cyclic orders must be >= 2, found "
                                      + std::to_string(n));
        }
        order_ *= n;
        if (order_ > 4096) {
          throw std::invalid_argument("group order exceeds 4096");
        }
      }
    }

    [[nodiscard]] std::vector<Length> const& cyclic_orders() const noexcept {
      return orders_;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return static_cast<std::size_t>(order_);
    }
    [[nodiscard]] std::size_t rank() const noexcept {
      return orders_.size();
    }

    // Mixed-radix index, first component most significant.
    [[nodiscard]] std::size_t index(GroupElement const& g) const {
      check(g);
      std::size_t out = 0;
      for (std::size_t i = 0; i < orders_.size(); ++i) {
        out = out * static_cast<std::size_t>(orders_[i])
              + static_cast<std::size_t>(g.residues[i]);
      }
      return out;
    }

    [[nodiscard]] GroupElement element(std::size_t index) const {
      GroupElement g{std::vector<Length>(orders_.size())};
      for (std::size_t i = orders_.size(); i-- > 0;) {
        g.residues[i] = static_cast<Length>(index % orders_[i]);
        index /= static_cast<std::size_t>(orders_[i]);
      }
      return g;
    }

    // Sum of two elements given by index.
    [[nodiscard]] std::size_t add(std::size_t x, std::size_t y) const {
      std::size_t out = 0, scale = 1;
      for (std::size_t i = orders_.size(); i-- > 0;) {
        auto const n = static_cast<std::size_t>(orders_[i]);
        out += ((x % n + y % n) % n) * scale;
        x /= n;
        y /= n;
        scale *= n;
      }
      return out;
    }

    [[nodiscard]] GroupElement add(GroupElement const& x,
                                   GroupElement const& y) const {
      check(x);
      check(y);
      GroupElement out{std::vector<Length>(orders_.size())};
      for (std::size_t i = 0; i < orders_.size(); ++i) {
        out.residues[i] = (x.residues[i] + y.residues[i]) % orders_[i];
      }
      return out;
    }

    [[nodiscard]] GroupElement zero() const {
      return GroupElement{std::vector<Length>(orders_.size(), 0)};
    }

    [[nodiscard]] bool contains(GroupElement const& g) const {
      if (g.residues.size() != orders_.size()) {
        return false;
      }
      for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (g.residues[i] < 0 || g.residues[i] >= orders_[i]) {
          return false;
        }
      }
      return true;
    }

    // All elements in index order.
    [[nodiscard]] std::vector<GroupElement> elements() const {
      std::vector<GroupElement> out;
      out.reserve(order());
      for (std::size_t i = 0; i < order(); ++i) {
        out.push_back(element(i));
      }
      return out;
    }

    friend bool operator==(FiniteAbelianGroup const& x,
                           FiniteAbelianGroup const& y) {
      return x.orders_ == y.orders_;
    }

   private:
    void check(GroupElement const& g) const {
      if (!contains(g)) {
        throw std::invalid_argument("group element does not belong to the group");
      }
    }

    std::vector<Length> orders_;
    Length              order_ = 1;
  };

  // A sequence over G: the multiplicity of each element, indexed by
  // FiniteAbelianGroup::index.
  class Sequence {
   public:
    Sequence() = default;
    explicit Sequence(FiniteAbelianGroup const& G) : counts_(G.order(), 0) {}
    explicit Sequence(std::vector<Length> counts) : counts_(std::move(counts)) {
      for (Length c : counts_) {
        if (c < 0) {
          throw std::invalid_argument("negative multiplicity");
        }
      }
    }

    static Sequence from_elements(FiniteAbelianGroup const&        G,
                                  std::vector<GroupElement> const& elements) {
      Sequence S(G);
      for (auto const& g : elements) {
        S.counts_[G.index(g)] += 1;
      }
      return S;
    }

    [[nodiscard]] Length length() const {
      Length out = 0;
      for (Length c : counts_) {
        out += c;
      }
      return out;
    }
    [[nodiscard]] bool empty() const {
      return length() == 0;
    }
    [[nodiscard]] std::vector<Length> const& counts() const noexcept {
      return counts_;
    }
    [[nodiscard]] Length multiplicity(std::size_t g) const {
      return counts_.at(g);
    }
    [[nodiscard]] std::size_t support_size() const noexcept {
      return counts_.size();
    }

    [[nodiscard]] bool divides(Sequence const& other) const {
      for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] > other.counts_.at(i)) {
          return false;
        }
      }
      return true;
    }

    Sequence& operator+=(Sequence const& other) {
      for (std::size_t i = 0; i < counts_.size(); ++i) {
        counts_[i] += other.counts_.at(i);
      }
      return *this;
    }
    Sequence& operator-=(Sequence const& other) {
      for (std::size_t i = 0; i < counts_.size(); ++i) {
        counts_[i] -= other.counts_.at(i);
        if (counts_[i] < 0) {
          throw std::invalid_argument("sequence subtraction underflow");
        }
      }
      return *this;
    }
    friend Sequence operator+(Sequence x, Sequence const& y) {
      return x += y;
    }
    friend Sequence operator-(Sequence x, Sequence const& y) {
      return x -= y;
    }

    friend bool operator==(Sequence const&, Sequence const&) = default;
    friend auto operator<=>(Sequence const&, Sequence const&) = default;

   private:
    std::vector<Length> counts_;
  };

  inline void check_sequence(Sequence const& S, FiniteAbelianGroup const& G) {
    if (S.support_size() != G.order()) {
      throw std::invalid_argument("sequence and group do not match");
    }
  }

  inline GroupElement sigma(Sequence const& S, FiniteAbelianGroup const& G) {
    check_sequence(S, G);
    GroupElement out = G.zero();
    auto const&  orders = G.cyclic_orders();
    for (std::size_t i = 0; i < G.order(); ++i) {
      auto const g = G.element(i);
      for (std::size_t r = 0; r < G.rank(); ++r) {
        Length const term = (S.multiplicity(i) % orders[r]) * g.residues[r];
        out.residues[r]   = (out.residues[r] + term) % orders[r];
      }
    }
    return out;
  }

  namespace detail {
    // Indices of the sums of the non-empty sub-multisets T of S with
    // |T| < |S|, as a membership table over G.
    inline std::vector<bool> proper_subsums(Sequence const&           S,
                                            FiniteAbelianGroup const& G) {
      Length const                   total = S.length();
      std::size_t const              order = G.order();
      // reach[s][g]: some sub-multiset of size s has sum g
      std::vector<std::vector<bool>> reach(
          static_cast<std::size_t>(total) + 1, std::vector<bool>(order, false));
      reach[0][0] = true;
      for (std::size_t g = 0; g < order; ++g) {
        for (Length c = 0; c < S.multiplicity(g); ++c) {
          for (std::size_t s = static_cast<std::size_t>(total); s-- > 0;) {
            for (std::size_t h = 0; h < order; ++h) {
              if (reach[s][h]) {
                reach[s + 1][G.add(h, g)] = true;
              }
            }
          }
        }
      }
      std::vector<bool> out(order, false);
      for (std::size_t s = 1; s < static_cast<std::size_t>(total); ++s) {
        for (std::size_t h = 0; h < order; ++h) {
          if (reach[s][h]) {
            out[h] = true;
          }
        }
      }
      return out;
    }
  }  // namespace detail

  // S is a minimal zero-sum sequence.
  inline bool is_atom(Sequence const& S, FiniteAbelianGroup const& G) {
    check_sequence(S, G);
    if (S.empty() || sigma(S, G) != G.zero()) {
      return false;
    }
    return !detail::proper_subsums(S, G)[0];
  }

  inline std::vector<std::size_t> indices_of(
      FiniteAbelianGroup const&        G,
      std::vector<GroupElement> const& G0) {
    std::set<std::size_t> out;
    for (auto const& g : G0) {
      out.insert(G.index(g));
    }
    return {out.begin(), out.end()};
  }

  // All minimal zero-sum sequences over G0 of length <= max_len, ordered by
  // length and then lexicographically by their sorted element indices.
  inline std::vector<Sequence> atoms_up_to(FiniteAbelianGroup const&        G,
                                           std::vector<GroupElement> const& G0,
                                           Length max_len) {
    if (max_len < 1) {
      throw std::invalid_argument("atoms_up_to: max_len must be positive");
    }
    auto const            support = indices_of(G, G0);
    std::vector<Sequence> out;
    std::vector<Length>   counts(G.order(), 0);
    // Depth-first over zero-sum free sequences in non-decreasing element
    // order; subsums[h] is set if some non-empty sub-multiset sums to h.
    auto recurse = [&](auto&&                   self,
                       std::vector<bool> const& subsums,
                       std::size_t              sum,
                       Length                   len,
                       std::size_t              from) -> void {
      for (std::size_t p = from; p < support.size(); ++p) {
        std::size_t const g = support[p];
        ++counts[g];
        std::vector<bool> next = subsums;
        next[g]                = true;
        for (std::size_t h = 0; h < G.order(); ++h) {
          if (subsums[h]) {
            next[G.add(h, g)] = true;
          }
        }
        if (G.add(sum, g) == 0) {
          Sequence S(counts);
          if (is_atom(S, G)) {
            out.push_back(std::move(S));
          }
        } else if (!next[0] && len + 1 < max_len) {
          self(self, next, G.add(sum, g), len + 1, p);
        }
        --counts[g];
      }
    };
    recurse(recurse, std::vector<bool>(G.order(), false), 0, 0, 0);
    std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.length() < y.length();
    });
    return out;
  }

  // A factorization: sorted indices into an atom list.
  using Factorization = std::vector<std::size_t>;

  struct Factorizations {
    std::vector<Sequence>      atoms;
    std::vector<Factorization> factorizations;
  };

  inline void require_zero_sum(Sequence const& S, FiniteAbelianGroup const& G) {
    check_sequence(S, G);
    if (sigma(S, G) != G.zero()) {
      throw std::invalid_argument("the sequence is not zero-sum");
    }
  }

  inline std::vector<GroupElement> support_of(Sequence const&           S,
                                              FiniteAbelianGroup const& G) {
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < G.order(); ++i) {
      if (S.multiplicity(i) > 0) {
        out.push_back(G.element(i));
      }
    }
    return out;
  }

  // All factorizations of S into atoms. Atoms are extracted in canonical
  // order and the recursion never extracts an atom earlier in that order
  // than the previous one, so each multiset appears once.
  inline Factorizations factorizations_zs(Sequence const&           S,
                                          FiniteAbelianGroup const& G) {
    require_zero_sum(S, G);
    Factorizations out;
    if (S.empty()) {
      out.factorizations.push_back({});
      return out;
    }
    out.atoms = atoms_up_to(G, support_of(S, G), S.length());
    std::vector<Sequence> const& atoms = out.atoms;
    Factorization                current;
    auto recurse = [&](auto&& self, Sequence const& rest, std::size_t from) -> void {
      if (rest.empty()) {
        out.factorizations.push_back(current);
        return;
      }
      for (std::size_t a = from; a < atoms.size(); ++a) {
        if (atoms[a].divides(rest)) {
          current.push_back(a);
          self(self, rest - atoms[a], a);
          current.pop_back();
        }
      }
    };
    recurse(recurse, S, 0);
    return out;
  }

  inline LengthSet length_set_zs(Sequence const& S, FiniteAbelianGroup const& G) {
    auto const          f = factorizations_zs(S, G);
    std::vector<Length> lengths;
    for (auto const& z : f.factorizations) {
      lengths.push_back(static_cast<Length>(z.size()));
    }
    return LengthSet(std::move(lengths));
  }

  // Remove the greatest common sub-multiset, then the larger residual size.
  inline Length commutative_distance(Factorization const& x,
                                     Factorization const& y) {
    std::size_t i = 0, j = 0, common = 0;
    while (i < x.size() && j < y.size()) {
      if (x[i] == y[j]) {
        ++common;
        ++i;
        ++j;
      } else if (x[i] < y[j]) {
        ++i;
      } else {
        ++j;
      }
    }
    return static_cast<Length>(std::max(x.size(), y.size()) - common);
  }

  inline Length catenary_zs(Sequence const& S, FiniteAbelianGroup const& G) {
    auto const f = factorizations_zs(S, G);
    return minimax_threshold(f.factorizations.size(),
                             [&](std::size_t i, std::size_t j) {
                               return commutative_distance(
                                   f.factorizations[i], f.factorizations[j]);
                             });
  }

  // Memoized set of lengths over sub-sequences: L(S) is the union of
  // 1 + L(S - A) over the atoms A containing the first element of S.
  class LengthOracle {
   public:
    LengthOracle(FiniteAbelianGroup G, std::vector<Sequence> atoms)
        : G_(std::move(G)), atoms_(std::move(atoms)) {}

    LengthSet operator()(Sequence const& S) {
      return LengthSet(lengths(S));
    }

   private:
    std::vector<Length> const& lengths(Sequence const& S) {
      if (auto it = memo_.find(S); it != memo_.end()) {
        return it->second;
      }
      std::vector<Length> out;
      if (S.empty()) {
        out.push_back(0);
      } else {
        std::size_t first = 0;
        while (S.multiplicity(first) == 0) {
          ++first;
        }
        std::set<Length> acc;
        for (auto const& A : atoms_) {
          if (A.multiplicity(first) > 0 && A.divides(S)) {
            for (Length l : lengths(S - A)) {
              acc.insert(l + 1);
            }
          }
        }
        if (acc.empty()) {
          throw std::logic_error("LengthOracle: atom list is incomplete");
        }
        out.assign(acc.begin(), acc.end());
      }
      return memo_.emplace(S, std::move(out)).first->second;
    }

    FiniteAbelianGroup                         G_;
    std::vector<Sequence>                      atoms_;
    std::map<Sequence, std::vector<Length>>    memo_;
  };

  // All zero-sum sequences over G0 of length 1..max_len, ordered by length
  // and then lexicographically by sorted element indices.
  inline std::vector<Sequence> zero_sum_sequences(
      FiniteAbelianGroup const&        G,
      std::vector<GroupElement> const& G0,
      Length                           max_len) {
    auto const            support = indices_of(G, G0);
    std::vector<Sequence> out;
    std::vector<Length>   counts(G.order(), 0);
    auto recurse = [&](auto&& self, std::size_t from, std::size_t sum,
                       Length len) -> void {
      if (len > 0 && sum == 0) {
        out.emplace_back(counts);
      }
      if (len == max_len) {
        return;
      }
      for (std::size_t p = from; p < support.size(); ++p) {
        ++counts[support[p]];
        self(self, p, G.add(sum, support[p]), len + 1);
        --counts[support[p]];
      }
    };
    recurse(recurse, 0, 0, 0);
    std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.length() < y.length();
    });
    return out;
  }

  struct AcceptedElasticity {
    Rational                rho;
    bool                    attained = false;
    std::optional<Sequence> witness;
    std::size_t             sequences_checked = 0;
  };

  // max elasticity(L(S)) over zero-sum S over G0 with |S| <= search_len; the
  // witness is the first maximizer in zero_sum_sequences order. Within the
  // search radius the maximum is always attained by a concrete sequence.
  inline AcceptedElasticity accepted_elasticity(
      FiniteAbelianGroup const&        G,
      std::vector<GroupElement> const& G0,
      Length                           search_len) {
    if (search_len < 1) {
      throw std::invalid_argument("accepted_elasticity: search_len must be positive");
    }
    AcceptedElasticity out;
    out.rho = Rational(1);
    LengthOracle oracle(G, atoms_up_to(G, G0, search_len));
    for (auto const& S : zero_sum_sequences(G, G0, search_len)) {
      ++out.sequences_checked;
      Rational const r = elasticity(oracle(S));
      if (!out.witness || r > out.rho) {
        out.rho     = r;
        out.witness = S;
      }
    }
    out.attained = out.witness.has_value();
    return out;
  }

  // Text syntax: an element is an integer (cyclic groups) or residues
  // joined by ':' ("1:0"); a sequence is a comma-separated list of elements,
  // each optionally followed by "^multiplicity".
  inline FiniteAbelianGroup parse_group(std::string_view text) {
    std::vector<Length> orders;
    if (text == "1" || text == "0" || text == "trivial") {
      return FiniteAbelianGroup(orders);
    }
    std::size_t start = 0;
    while (true) {
      auto const  x   = text.find('x', start);
      std::string tok(text.substr(start, x == std::string_view::npos
                                             ? std::string_view::npos
                                             : x - start));
      if (tok.empty()
          || tok.find_first_not_of("0123456789") != std::string::npos
          || tok.size() > 6) {
        throw std::invalid_argument("malformed group '" + std::string(text)
                                    + "'");
      }
      orders.push_back(std::stoll(tok));
      if (x == std::string_view::npos) {
        break;
      }
      start = x + 1;
    }
    return FiniteAbelianGroup(orders);
  }

  inline GroupElement parse_element(FiniteAbelianGroup const& G,
                                    std::string_view          text) {
    GroupElement g;
    std::size_t  start = 0;
    while (true) {
      auto const  c = text.find(':', start);
      std::string tok(text.substr(
          start, c == std::string_view::npos ? std::string_view::npos : c - start));
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos
          || tok.size() > 9) {
        throw std::invalid_argument("malformed group element '"
                                    + std::string(text) + "'");
      }
      g.residues.push_back(std::stoll(tok));
      if (c == std::string_view::npos) {
        break;
      }
      start = c + 1;
    }
    if (G.rank() == 0 && g.residues == std::vector<Length>{0}) {
      g.residues.clear();
    }
    if (!G.contains(g)) {
      throw std::invalid_argument("element '" + std::string(text)
                                  + "' is not a reduced element of the group");
    }
    return g;
  }

  inline std::string format_element(GroupElement const& g) {
    if (g.residues.empty()) {
      return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < g.residues.size(); ++i) {
      if (i > 0) {
        out += ':';
      }
      out += std::to_string(g.residues[i]);
    }
    return out;
  }

  namespace detail {
    inline std::vector<std::string_view> split_commas(std::string_view text) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      while (true) {
        auto const c = text.find(',', start);
        auto       tok
            = text.substr(start, c == std::string_view::npos ? c : c - start);
        while (!tok.empty() && tok.front() == ' ') {
          tok.remove_prefix(1);
        }
        while (!tok.empty() && tok.back() == ' ') {
          tok.remove_suffix(1);
        }
        out.push_back(tok);
        if (c == std::string_view::npos) {
          break;
        }
        start = c + 1;
      }
      return out;
    }
  }  // namespace detail

  inline std::vector<GroupElement> parse_element_list(FiniteAbelianGroup const& G,
                                                      std::string_view text) {
    std::vector<GroupElement> out;
    for (auto tok : detail::split_commas(text)) {
      out.push_back(parse_element(G, tok));
    }
    return out;
  }

  inline Sequence parse_sequence(FiniteAbelianGroup const& G,
                                 std::string_view          text) {
    Sequence S(G);
    if (text.empty()) {
      return S;
    }
    std::vector<Length> counts(G.order(), 0);
    for (auto tok : detail::split_commas(text)) {
      Length     mult  = 1;
      auto const caret = tok.find('^');
      if (caret != std::string_view::npos) {
        std::string m(tok.substr(caret + 1));
        if (m.empty() || m.find_first_not_of("0123456789") != std::string::npos
            || m.size() > 6) {
          throw std::invalid_argument("malformed multiplicity in '"
                                      + std::string(tok) + "'");
        }
        mult = std::stoll(m);
        tok  = tok.substr(0, caret);
      }
      counts[G.index(parse_element(G, tok))] += mult;
    }
    return Sequence(counts);
  }

  inline std::string format_sequence(Sequence const& S, FiniteAbelianGroup const& G) {
    std::string out;
    for (std::size_t i = 0; i < G.order(); ++i) {
      Length const c = S.multiplicity(i);
      if (c == 0) {
        continue;
      }
      if (!out.empty()) {
        out += ',';
      }
      out += format_element(G.element(i));
      if (c > 1) {
        out += '^' + std::to_string(c);
      }
    }
    return out;
  }

  // Factorizations as commutative words: the atoms of a fixed list, joined by
  // multiset union. Used with distance_axiom_probe.
  struct FactorizationOps {
    Factorization concat(Factorization const& x, Factorization const& y) const {
      Factorization out;
      out.reserve(x.size() + y.size());
      std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
      return out;
    }
    Length length(Factorization const& z) const {
      return static_cast<Length>(z.size());
    }
    Factorization left(Factorization const& x, Factorization const& z) const {
      return concat(x, z);
    }
    Factorization right(Factorization const& z, Factorization const& y) const {
      return concat(z, y);
    }
    std::string format(Factorization const& z) const {
      std::string out = "[";
      for (std::size_t i = 0; i < z.size(); ++i) {
        out += (i > 0 ? "," : "") + std::to_string(z[i]);
      }
      return out + "]";
    }
  };

}  // namespace factorlen::zs
