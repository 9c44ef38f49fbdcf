// factorlen - factorization invariants of finitely presented monoids
//
// Closed-form arithmetic of the monoids B_n = <a, b | ba = b^n>, n >= 2.
// Every element has the normal form a^k b^m, and
//
//   a^k b^m * a^r b^s = a^(k+r) b^s              if m = 0,
//                     = a^k b^(m + (n-1)r + s)    if m > 0.
//
// Sets of lengths, unions and elasticities below are closed formulas; the
// enumeration engine in closure.hpp is their independent check.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "length_set.hpp"

namespace factorlen::bn {

  // a^k b^m in B_n.
  struct Element {
    Length n = 2;
    Length k = 0;
    Length m = 0;

    friend bool operator==(Element const&, Element const&) = default;
  };

  inline void validate_modulus(Length n, Length min_n = 2) {
    if (n < min_n) {
      throw std::invalid_argument("B_n requires n >= " + std::to_string(min_n)
                                  + ", found " + std::to_string(n));
    }
  }

  inline Element make_element(Length n, Length k, Length m) {
    validate_modulus(n);
    if (k < 0 || m < 0) {
      throw std::invalid_argument("B_n exponents are non-negative");
    }
    return Element{n, k, m};
  }

  inline Element multiply(Element const& u, Element const& v) {
    if (u.n != v.n) {
      throw std::invalid_argument("multiply: elements of B_"
                                  + std::to_string(u.n) + " and B_"
                                  + std::to_string(v.n));
    }
    if (u.m == 0) {
      return Element{u.n, u.k + v.k, v.m};
    }
    return Element{u.n, u.k, u.m + (u.n - 1) * v.k + v.m};
  }

  // Left-to-right product of the atoms of a word over {a, b}.
  inline Element normalize(std::string_view word, Length n) {
    validate_modulus(n);
    Element const a{n, 1, 0};
    Element const b{n, 0, 1};
    Element       result{n, 0, 0};
    for (char c : word) {
      if (c == 'a') {
        result = multiply(result, a);
      } else if (c == 'b') {
        result = multiply(result, b);
      } else {
        throw std::invalid_argument(std::string("normalize: letter '") + c
                                    + "' is not an atom of B_n");
      }
    }
    return result;
  }

  // q_{m,n}: the three-case closed formula.
  inline Length q_closed(Length m, Length n) {
    validate_modulus(n);
    if (m < 0) {
      throw std::invalid_argument("q_closed: m must be non-negative");
    }
    if (m == 0) {
      return 0;
    }
    if (m % (n - 1) != 0) {
      return m / (n - 1);
    }
    return m / (n - 1) - 1;
  }

  // q_{m,n} by the division cascade
  //   m = n q_0 + r_0,  q_0 + r_0 = n q_1 + r_1,  ...
  // stopping at the first vanishing quotient, returning q_0 + q_1 + ...
  inline Length q_iter(Length m, Length n) {
    validate_modulus(n);
    if (m < 0) {
      throw std::invalid_argument("q_iter: m must be non-negative");
    }
    Length total    = 0;
    Length dividend = m;
    while (true) {
      Length const q = dividend / n;
      Length const r = dividend % n;
      if (q == 0) {
        return total;
      }
      total += q;
      dividend = q + r;
    }
  }

  // L(a^k b^m) = k + m - q(n-2) + (n-2)[0, q], with q = q_{m,n}.
  inline LengthSet length_set(Element const& e) {
    validate_modulus(e.n);
    if (e.k == 0 && e.m == 0) {
      return LengthSet{0};
    }
    Length const q = q_closed(e.m, e.n);
    return LengthSet::progression(e.k + e.m - q * (e.n - 2), e.n - 2, q);
  }

  // Decides L in L(B_n). On success returns the element a^k b^m with
  // k = x - q - 1 and m = q(n-1) + 1, where L = x + (n-2)[0, q].
  inline std::optional<Element> system_membership(LengthSet const& L,
                                                   Length           n) {
    validate_modulus(n);
    if (L.min() == 0) {
      return Element{n, 0, 0};
    }
    Length const x = L.min();
    Length       q = 0;
    if (!L.is_singleton()) {
      if (n == 2) {
        return std::nullopt;
      }
      for (Length gap : delta(L)) {
        if (gap != n - 2) {
          return std::nullopt;
        }
      }
      q = (L.max() - L.min()) / (n - 2);
    }
    if (x <= q) {
      return std::nullopt;
    }
    return Element{n, x - q - 1, q * (n - 1) + 1};
  }

  // U_l(B_n) for l >= 2, n >= 3.
  inline LengthSet union_of_lengths(Length ell, Length n) {
    validate_modulus(n, 3);
    if (ell < 2) {
      throw std::invalid_argument("union: requires l >= 2, found "
                                  + std::to_string(ell));
    }
    Length const q = q_closed(ell, n);
    return LengthSet::progression(ell - q * (n - 2), n - 2, q + ell - 1);
  }

  // rho_k(B_n) = max U_k(B_n).
  inline Length rho_k(Length k, Length n) {
    validate_modulus(n, 3);
    if (k < 1) {
      throw std::invalid_argument("rho_k: requires k >= 1");
    }
    if (k == 1) {
      return 1;
    }
    return k + (n - 2) * (k - 1);
  }

  struct ElasticitySup {
    Rational value;
    bool     accepted;
  };

  // rho(B_n) together with whether some set of lengths attains it.
  inline ElasticitySup elasticity_sup(Length n) {
    validate_modulus(n);
    if (n == 2) {
      return {Rational(1), true};
    }
    return {Rational(n - 1), false};
  }

  // Catenary degree of B_n in the Levenshtein distance.
  inline Length catenary_constant(Length n) {
    validate_modulus(n);
    return n - 1;
  }

  // Element (k, i) of H = {(k, i) in N_0^2 : k = i = 0 or k > i}.
  class HElement {
   public:
    HElement() = default;
    HElement(Length k, Length i) : k_(k), i_(i) {
      if (k < 0 || i < 0 || !((k == 0 && i == 0) || k > i)) {
        throw std::invalid_argument("HElement: (" + std::to_string(k) + ","
                                    + std::to_string(i) + ") is not in H");
      }
    }

    [[nodiscard]] Length k() const noexcept {
      return k_;
    }
    [[nodiscard]] Length i() const noexcept {
      return i_;
    }

    friend bool operator==(HElement const&, HElement const&) = default;
    friend auto operator<=>(HElement const&, HElement const&) = default;

   private:
    Length k_ = 0;
    Length i_ = 0;
  };

  inline HElement h_add(HElement const& u, HElement const& v) {
    return HElement(u.k() + v.k(), u.i() + v.i());
  }

  inline bool h_is_atom(HElement const& e) {
    return e.k() >= 1 && e.i() == e.k() - 1;
  }

  // x + (n-2)[0, q]  ->  (x, q)
  inline HElement phi(LengthSet const& L, Length n) {
    validate_modulus(n, 3);
    if (!system_membership(L, n)) {
      throw std::invalid_argument("phi: " + to_string(L)
                                  + " is not a set of lengths of B_"
                                  + std::to_string(n));
    }
    return HElement(L.min(), (L.max() - L.min()) / (n - 2));
  }

  inline LengthSet phi_inverse(HElement const& h, Length n) {
    validate_modulus(n, 3);
    if (h.k() == 0) {
      return LengthSet{0};
    }
    return LengthSet::progression(h.k(), n - 2, h.i());
  }

}  // namespace factorlen::bn
