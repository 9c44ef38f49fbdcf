// factorlen - factorization invariants of finitely presented monoids
//
// Finite monoid presentations <A | R> and words over the atom alphabet.
//
// Text format, one directive per line (blank lines and '#' comments are
// ignored):
//
//   atoms: a b
//   rel: ba = bbb
//
// A word is a whitespace-free concatenation of atom names. When some atom
// name has more than one character the names are separated by '.'
// (e.g. "x1.x2.x1"). The empty word is written as nothing or as "ε".

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace factorlen::fp {

  // A word over the atoms of a presentation. Letters are atom indices,
  // stored one per byte so that words hash and compare as strings.
  class Word {
   public:
    Word() = default;
    explicit Word(std::string letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<std::uint8_t> letters)
        : letters_(letters.begin(), letters.end()) {}

    [[nodiscard]] std::size_t length() const noexcept {
      return letters_.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return letters_.empty();
    }
    [[nodiscard]] std::uint8_t operator[](std::size_t i) const noexcept {
      return static_cast<std::uint8_t>(letters_[i]);
    }
    [[nodiscard]] std::string const& letters() const noexcept {
      return letters_;
    }

    friend Word operator+(Word const& x, Word const& y) {
      return Word(x.letters_ + y.letters_);
    }

    friend bool operator==(Word const&, Word const&) = default;
    // lexicographic by atom index
    friend std::strong_ordering operator<=>(Word const& x, Word const& y) {
      return std::lexicographical_compare_three_way(
          x.letters_.begin(),
          x.letters_.end(),
          y.letters_.begin(),
          y.letters_.end(),
          [](char p, char q) {
            return static_cast<std::uint8_t>(p) <=> static_cast<std::uint8_t>(q);
          });
    }

   private:
    std::string letters_;
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      return std::hash<std::string>{}(w.letters());
    }
  };

  class parse_error : public std::runtime_error {
   public:
    parse_error(std::string const& what, std::size_t line, std::size_t column)
        : std::runtime_error(format(what, line, column)),
          line_(line),
          column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return line_;
    }
    [[nodiscard]] std::size_t column() const noexcept {
      return column_;
    }

   private:
    static std::string format(std::string const& what,
                              std::size_t        line,
                              std::size_t        column) {
      return "line " + std::to_string(line) + ", column "
             + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
  };

  struct Relation {
    Word lhs;
    Word rhs;
  };

  class Presentation {
   public:
    Presentation() = default;

    explicit Presentation(std::vector<std::string> atoms)
        : atoms_(std::move(atoms)) {
      if (atoms_.size() > 255) {
        throw std::invalid_argument("Presentation: at most 255 atoms");
      }
      for (std::size_t i = 0; i < atoms_.size(); ++i) {
        auto const& name = atoms_[i];
        if (name.empty()) {
          throw std::invalid_argument("Presentation: empty atom name");
        }
        if (name.find_first_of(". \t=") != std::string::npos
            || name == "ε") {
          throw std::invalid_argument("Presentation: invalid atom name '"
                                      + name + "'");
        }
        if (!index_.emplace(name, i).second) {
          throw std::invalid_argument("Presentation: duplicate atom '" + name
                                      + "'");
        }
        if (name.size() > 1) {
          single_char_ = false;
        }
      }
    }

    [[nodiscard]] std::vector<std::string> const& atoms() const noexcept {
      return atoms_;
    }
    [[nodiscard]] std::vector<Relation> const& relations() const noexcept {
      return relations_;
    }
    [[nodiscard]] std::size_t number_of_atoms() const noexcept {
      return atoms_.size();
    }

    void add_relation(Word lhs, Word rhs) {
      for (auto const* w : {&lhs, &rhs}) {
        for (std::size_t i = 0; i < w->length(); ++i) {
          if ((*w)[i] >= atoms_.size()) {
            throw std::invalid_argument("add_relation: letter out of range");
          }
        }
      }
      relations_.push_back({std::move(lhs), std::move(rhs)});
    }

    // Parses a word in the text syntax; throws std::invalid_argument with a
    // message naming the offending token.
    [[nodiscard]] Word parse_word(std::string_view text) const {
      if (text.empty() || text == "ε") {
        return Word{};
      }
      std::string letters;
      auto        push = [&](std::string_view name) {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) {
          throw std::invalid_argument("unknown atom '" + std::string(name)
                                      + "'");
        }
        letters.push_back(static_cast<char>(it->second));
      };
      if (text.find('.') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
          auto const dot = text.find('.', start);
          push(text.substr(start, dot - start));
          if (dot == std::string_view::npos) {
            break;
          }
          start = dot + 1;
        }
      } else if (single_char_) {
        for (std::size_t i = 0; i < text.size(); ++i) {
          push(text.substr(i, 1));
        }
      } else {
        push(text);
      }
      return Word(std::move(letters));
    }

    [[nodiscard]] std::string format_word(Word const& w) const {
      std::string out;
      for (std::size_t i = 0; i < w.length(); ++i) {
        if (i > 0 && !single_char_) {
          out += '.';
        }
        out += atoms_.at(w[i]);
      }
      return out;
    }

   private:
    std::vector<std::string>                     atoms_;
    std::vector<Relation>                        relations_;
    std::unordered_map<std::string, std::size_t> index_;
    bool                                         single_char_ = true;
  };

  namespace detail {
    inline std::string_view trim(std::string_view s, std::size_t& offset) {
      std::size_t b = 0;
      while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) {
        ++b;
      }
      std::size_t e = s.size();
      while (e > b
             && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) {
        --e;
      }
      offset += b;
      return s.substr(b, e - b);
    }
  }  // namespace detail

  inline Presentation parse_presentation(std::string_view text) {
    Presentation result;
    bool         have_atoms = false;

    std::size_t line_no = 0;
    std::size_t start   = 0;
    std::vector<std::tuple<std::string_view, std::size_t, std::size_t>> rels;
    while (start <= text.size()) {
      ++line_no;
      auto const       nl   = text.find('\n', start);
      std::string_view line = text.substr(
          start, nl == std::string_view::npos ? std::string_view::npos
                                              : nl - start);
      start = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      std::size_t col = 1;
      line            = detail::trim(line, col);
      if (line.empty()) {
        continue;
      }
      auto const colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw parse_error("expected 'atoms:' or 'rel:'", line_no, col);
      }
      std::string_view const key = line.substr(0, colon);
      std::size_t            body_col = col + colon + 1;
      std::string_view       body
          = detail::trim(line.substr(colon + 1), body_col);
      if (key == "atoms") {
        if (have_atoms) {
          throw parse_error("duplicate 'atoms:' line", line_no, col);
        }
        std::vector<std::string> names;
        std::istringstream       iss{std::string(body)};
        std::string              name;
        while (iss >> name) {
          names.push_back(name);
        }
        try {
          result = Presentation(std::move(names));
        } catch (std::invalid_argument const& e) {
          throw parse_error(e.what(), line_no, body_col);
        }
        have_atoms = true;
      } else if (key == "rel") {
        rels.emplace_back(body, line_no, body_col);
      } else {
        throw parse_error("unknown directive '" + std::string(key) + "'",
                          line_no,
                          col);
      }
    }
    if (!have_atoms) {
      throw parse_error("missing 'atoms:' line", line_no, 1);
    }
    for (auto [body, ln, bc] : rels) {
      auto const eq = body.find('=');
      if (eq == std::string_view::npos) {
        throw parse_error("relation without '='", ln, bc);
      }
      if (body.find('=', eq + 1) != std::string_view::npos) {
        throw parse_error("relation with more than one '='",
                          ln,
                          bc + body.find('=', eq + 1));
      }
      std::size_t lc  = bc;
      std::size_t rc  = bc + eq + 1;
      auto        lhs = detail::trim(body.substr(0, eq), lc);
      auto        rhs = detail::trim(body.substr(eq + 1), rc);
      Word        l, r;
      try {
        l = result.parse_word(lhs);
      } catch (std::invalid_argument const& e) {
        throw parse_error(e.what(), ln, lc);
      }
      try {
        r = result.parse_word(rhs);
      } catch (std::invalid_argument const& e) {
        throw parse_error(e.what(), ln, rc);
      }
      result.add_relation(std::move(l), std::move(r));
    }
    return result;
  }

}  // namespace factorlen::fp
