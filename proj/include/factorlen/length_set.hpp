// factorlen - factorization invariants of finitely presented monoids
//
// Finite sets of lengths and the invariants computed from them: sumsets,
// dilations, distance sets, elasticities, unions of families and
// almost-arithmetical-progression certificates.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace factorlen {

  using Length   = std::int64_t;
  using Rational = boost::rational<std::int64_t>;

  // A non-empty, strictly increasing, finite set of non-negative lengths.
  // The only set containing 0 is {0}, the length set of the identity.
  class LengthSet {
   public:
    LengthSet() : values_{0} {}

    LengthSet(std::initializer_list<Length> values)
        : LengthSet(std::vector<Length>(values)) {}

    explicit LengthSet(std::vector<Length> values) : values_(std::move(values)) {
      std::sort(values_.begin(), values_.end());
      values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
      if (values_.empty()) {
        throw std::invalid_argument("LengthSet: a set of lengths is non-empty");
      }
      if (values_.front() < 0) {
        throw std::invalid_argument("LengthSet: lengths are non-negative");
      }
      if (values_.front() == 0 && values_.size() > 1) {
        throw std::invalid_argument(
            "LengthSet: 0 only occurs in the singleton {0}");
      }
    }

    // x + step * [0, count]
    static LengthSet progression(Length first, Length step, Length count) {
      if (count < 0 || step < 0) {
        throw std::invalid_argument("LengthSet::progression: negative argument");
      }
      std::vector<Length> v;
      v.reserve(step == 0 ? 1 : static_cast<std::size_t>(count) + 1);
      for (Length i = 0; i <= count; ++i) {
        v.push_back(first + step * i);
        if (step == 0) {
          break;
        }
      }
      return LengthSet(std::move(v));
    }

    [[nodiscard]] Length min() const noexcept {
      return values_.front();
    }
    [[nodiscard]] Length max() const noexcept {
      return values_.back();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return values_.size();
    }
    [[nodiscard]] bool contains(Length x) const {
      return std::binary_search(values_.begin(), values_.end(), x);
    }
    [[nodiscard]] bool is_singleton() const noexcept {
      return values_.size() == 1;
    }
    [[nodiscard]] std::span<Length const> values() const noexcept {
      return values_;
    }
    [[nodiscard]] auto begin() const noexcept {
      return values_.begin();
    }
    [[nodiscard]] auto end() const noexcept {
      return values_.end();
    }

    friend bool operator==(LengthSet const&, LengthSet const&) = default;
    friend auto operator<=>(LengthSet const&, LengthSet const&) = default;

   private:
    std::vector<Length> values_;
  };

  inline std::string to_string(LengthSet const& L) {
    std::string out = "{";
    bool        first = true;
    for (Length x : L) {
      if (!first) {
        out += ',';
      }
      out += std::to_string(x);
      first = false;
    }
    return out + "}";
  }

  inline std::ostream& operator<<(std::ostream& os, LengthSet const& L) {
    return os << to_string(L);
  }

  inline std::string to_string(Rational const& r) {
    if (r.denominator() == 1) {
      return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  }

  // Certificate that a set is an almost arithmetical progression with
  // difference `difference` and (minimal) bound `bound`.
  struct AapWitness {
    Length difference;
    Length bound;

    friend bool operator==(AapWitness const&, AapWitness const&) = default;
  };

  inline LengthSet sumset(LengthSet const& lhs, LengthSet const& rhs) {
    std::vector<Length> out;
    out.reserve(lhs.size() * rhs.size());
    for (Length x : lhs) {
      for (Length y : rhs) {
        out.push_back(x + y);
      }
    }
    return LengthSet(std::move(out));
  }

  inline LengthSet dilation(Length d, LengthSet const& L) {
    if (d < 1) {
      throw std::invalid_argument("dilation: the factor must be positive");
    }
    std::vector<Length> out;
    out.reserve(L.size());
    for (Length x : L) {
      out.push_back(d * x);
    }
    return LengthSet(std::move(out));
  }

  // Gaps between consecutive elements.
  inline std::set<Length> delta(LengthSet const& L) {
    std::set<Length> out;
    auto             v = L.values();
    for (std::size_t i = 1; i < v.size(); ++i) {
      out.insert(v[i] - v[i - 1]);
    }
    return out;
  }

  // max L / min L over the positive part; 1 for {0}.
  inline Rational elasticity(LengthSet const& L) {
    if (L.min() == 0) {
      return Rational(1);
    }
    return Rational(L.max(), L.min());
  }

  // Union of all members of `family` containing k, or nullopt if there are
  // none.
  inline std::optional<LengthSet> union_of(std::span<LengthSet const> family,
                                           Length                     k) {
    std::vector<Length> out;
    for (auto const& L : family) {
      if (L.contains(k)) {
        out.insert(out.end(), L.begin(), L.end());
      }
    }
    if (out.empty()) {
      return std::nullopt;
    }
    return LengthSet(std::move(out));
  }

  namespace detail {
    // Does L meet the AAP condition with difference d and bound M?
    // Assumes L is contained in min L + dZ.
    inline bool aap_window_is_progression(LengthSet const& L,
                                          Length           d,
                                          Length           M) {
      Length const lo = L.min() + M;
      Length const hi = L.max() - M;
      auto const   first
          = std::lower_bound(L.begin(), L.end(), lo);
      auto const last = std::upper_bound(L.begin(), L.end(), hi);
      if (first >= last) {
        return false;
      }
      for (auto it = std::next(first); it != last; ++it) {
        if (*it - *std::prev(it) != d) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  // Re-verification of a claimed AAP certificate, without minimality.
  inline bool aap_holds(LengthSet const& L, Length d, Length M) {
    if (d < 1 || M < 0) {
      return false;
    }
    for (Length x : L) {
      if ((x - L.min()) % d != 0) {
        return false;
      }
    }
    return detail::aap_window_is_progression(L, d, M);
  }

  // The minimal bound M for which L is an AAP with difference d, if any
  // M <= max L - min L works.
  inline std::optional<AapWitness> aap_check(LengthSet const& L, Length d) {
    if (d < 1) {
      throw std::invalid_argument("aap_check: the difference must be positive");
    }
    for (Length x : L) {
      if ((x - L.min()) % d != 0) {
        return std::nullopt;
      }
    }
    for (Length M = 0; M <= L.max() - L.min(); ++M) {
      if (detail::aap_window_is_progression(L, d, M)) {
        return AapWitness{d, M};
      }
    }
    return std::nullopt;
  }

}  // namespace factorlen
