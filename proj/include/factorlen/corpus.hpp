// factorlen - factorization invariants of finitely presented monoids
//
// The shipped presentation corpus. Files in a corpus directory take
// precedence; the built-in texts below are identical to the files in
// corpus/ and are used when no directory is available.

#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "presentation.hpp"

namespace factorlen::corpus {

  inline std::string bn_text(long n) {
    if (n < 0) {
      throw std::invalid_argument("B_n requires n >= 0");
    }
    return "atoms: a b\nrel: ba = " + std::string(static_cast<std::size_t>(n), 'b')
           + "\n";
  }

  // Built-in text for a corpus name ("b0" ... "bN", "adyan", "free1").
  inline std::optional<std::string> builtin_text(std::string const& name) {
    if (name == "adyan") {
      return "atoms: a b\nrel: aa = baab\n";
    }
    if (name == "free1") {
      return "atoms: x\n";
    }
    if (name.size() >= 2 && name[0] == 'b'
        && name.find_first_not_of("0123456789", 1) == std::string::npos
        && name.size() <= 4) {
      return bn_text(std::stol(name.substr(1)));
    }
    return std::nullopt;
  }

  inline std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline fp::Presentation load_file(std::filesystem::path const& path) {
    return fp::parse_presentation(read_file(path));
  }

  class Corpus {
   public:
    Corpus() = default;
    explicit Corpus(std::filesystem::path dir) : dir_(std::move(dir)) {}

    [[nodiscard]] fp::Presentation get(std::string const& name) const {
      if (!dir_.empty()) {
        auto const path = dir_ / (name + ".mon");
        if (std::filesystem::exists(path)) {
          return load_file(path);
        }
      }
      auto text = builtin_text(name);
      if (!text) {
        throw std::invalid_argument("unknown corpus presentation '" + name
                                    + "'");
      }
      return fp::parse_presentation(*text);
    }

    [[nodiscard]] fp::Presentation bn(long n) const {
      return get("b" + std::to_string(n));
    }

    [[nodiscard]] std::filesystem::path const& directory() const noexcept {
      return dir_;
    }

   private:
    std::filesystem::path dir_;
  };

}  // namespace factorlen::corpus
