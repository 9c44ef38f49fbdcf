// factorlen - factorization invariants of finitely presented monoids
//
// Command-line frontend. Every command prints one JSON result document
//
//   {"command": ..., "inputs": {...}, "result": {...}, "complete": ...,
//    "version": ...}
//
// with sorted keys. Exit codes: 0 computed (including negative answers and
// truncated enumerations), 1 verification failure, 2 usage or parse error.

#pragma once

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bn.hpp"
#include "closure.hpp"
#include "corpus.hpp"
#include "length_set.hpp"
#include "verify.hpp"
#include "zerosum.hpp"

#ifndef FACTORLEN_CORPUS_DIR
#define FACTORLEN_CORPUS_DIR ""
#endif

namespace factorlen::cli {

  using nlohmann::json;

  inline constexpr char const* version = "0.1.0";

  enum exit_code : int { ok = 0, verification_failed = 1, usage_error = 2 };

  class usage_failure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // "3,4,7" and inclusive ranges "3..7", mixed freely.
  inline LengthSet parse_set_literal(std::string const& text) {
    std::vector<Length> values;
    auto                number = [&](std::string const& tok) {
      if (tok.empty() || tok.size() > 15
          || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw usage_failure("malformed set literal '" + text + "'");
      }
      return static_cast<Length>(std::stoll(tok));
    };
    std::stringstream ss(text);
    std::string       tok;
    while (std::getline(ss, tok, ',')) {
      if (auto dots = tok.find(".."); dots != std::string::npos) {
        Length const lo = number(tok.substr(0, dots));
        Length const hi = number(tok.substr(dots + 2));
        if (hi < lo || hi - lo > 1'000'000) {
          throw usage_failure("bad range '" + tok + "'");
        }
        for (Length x = lo; x <= hi; ++x) {
          values.push_back(x);
        }
      } else {
        values.push_back(number(tok));
      }
    }
    try {
      return LengthSet(std::move(values));
    } catch (std::invalid_argument const& e) {
      throw usage_failure(e.what());
    }
  }

  inline json to_json(LengthSet const& L) {
    return json(std::vector<Length>(L.begin(), L.end()));
  }

  inline std::string pretty(json const& doc) {
    std::ostringstream os;
    os << "command  " << doc.value("command", "") << "\n";
    auto const& result = doc.at("result");
    std::size_t width  = 8;
    for (auto const& [key, _] : result.items()) {
      width = std::max(width, key.size());
    }
    for (auto const& [key, value] : result.items()) {
      os << std::left << std::setw(static_cast<int>(width) + 2) << key
         << (value.is_string() ? value.get<std::string>() : value.dump())
         << "\n";
    }
    if (doc.contains("complete")) {
      os << std::left << std::setw(static_cast<int>(width) + 2) << "complete"
         << (doc["complete"].get<bool>() ? "true" : "false") << "\n";
    }
    return os.str();
  }

  namespace detail {
    inline std::size_t env_or(char const* name, std::size_t fallback) {
      char const* v = std::getenv(name);
      if (v == nullptr || *v == '\0') {
        return fallback;
      }
      std::string s(v);
      if (s.find_first_not_of("0123456789") != std::string::npos
          || s.size() > 12) {
        throw usage_failure(std::string("malformed ") + name + "='" + s + "'");
      }
      return static_cast<std::size_t>(std::stoull(s));
    }

    inline std::vector<std::string> sorted_words(fp::FactorizationSet const& z,
                                                 fp::Presentation const& p) {
      std::vector<fp::Word> words = z.words;
      std::sort(words.begin(), words.end(), [](auto const& x, auto const& y) {
        return x.length() != y.length() ? x.length() < y.length() : x < y;
      });
      std::vector<std::string> out;
      for (auto const& w : words) {
        out.push_back(p.format_word(w));
      }
      return out;
    }
  }  // namespace detail

  struct Invocation {
    // shared
    bool pretty = false;
    // bn
    Length                     n = -1, k = -1, m = -1, l = -1;
    std::string                set;
    // fp
    std::string                presentation, word, distance = "levenshtein";
    std::size_t                max_len = 0, max_iter = 0, max_word_len = 8;
    // zs
    std::string                group, g0, seq;
    std::optional<Length>      zs_max_len;
    // verify
    std::string                suite;
    long                       n_max = 5, size_max = 12;
    std::uint64_t              seed  = 20170101;
    std::string                corpus_dir = FACTORLEN_CORPUS_DIR;
  };

  inline json run_bn(std::string const& sub, Invocation const& in) {
    if (in.n < 2) {
      throw usage_failure("--n must be >= 2");
    }
    json doc;
    doc["inputs"]["n"] = in.n;
    auto& result       = doc["result"];
    if (sub == "length-set") {
      if (in.k < 0 || in.m < 0) {
        throw usage_failure("length-set needs --k >= 0 and --m >= 0");
      }
      doc["inputs"]["k"] = in.k;
      doc["inputs"]["m"] = in.m;
      auto const L       = bn::length_set(bn::make_element(in.n, in.k, in.m));
      result["lengths"]  = to_json(L);
      result["q"]        = bn::q_closed(in.m, in.n);
    } else if (sub == "union") {
      if (in.l < 1) {
        throw usage_failure("union needs --l >= 1");
      }
      if (in.n < 3) {
        throw usage_failure("union needs --n >= 3");
      }
      doc["inputs"]["l"] = in.l;
      result["union"]
          = in.l == 1 ? to_json(LengthSet{1})
                      : to_json(bn::union_of_lengths(in.l, in.n));
    } else if (sub == "membership" || sub == "phi") {
      if (in.set.empty()) {
        throw usage_failure(sub + " needs --set");
      }
      auto const L         = parse_set_literal(in.set);
      doc["inputs"]["set"] = to_json(L);
      auto const w         = bn::system_membership(L, in.n);
      if (sub == "membership") {
        result["member"] = w.has_value();
        if (w) {
          result["witness"] = {{"k", w->k}, {"m", w->m}};
        }
      } else {
        if (in.n < 3) {
          throw usage_failure("phi needs --n >= 3");
        }
        if (!w) {
          throw usage_failure(to_string(L) + " is not a set of lengths of B_"
                              + std::to_string(in.n));
        }
        auto const h = bn::phi(L, in.n);
        result["h"]  = {{"k", h.k()}, {"i", h.i()}};
        result["atom"] = bn::h_is_atom(h);
      }
    } else if (sub == "rho-k") {
      if (in.k < 1) {
        throw usage_failure("rho-k needs --k >= 1");
      }
      if (in.n < 3) {
        throw usage_failure("rho-k needs --n >= 3");
      }
      doc["inputs"]["k"] = in.k;
      result["rho_k"]    = bn::rho_k(in.k, in.n);
    } else if (sub == "elasticity") {
      auto const e       = bn::elasticity_sup(in.n);
      result["rho"]      = to_string(e.value);
      result["accepted"] = e.accepted;
    } else if (sub == "catenary") {
      result["catenary_degree"] = bn::catenary_constant(in.n);
      result["distance"]        = "levenshtein";
    }
    return doc;
  }

  inline json run_fp(std::string const& sub, Invocation const& in) {
    if (in.presentation.empty()) {
      throw usage_failure("--presentation is required");
    }
    fp::Presentation p;
    try {
      p = corpus::load_file(in.presentation);
    } catch (fp::parse_error const& e) {
      throw usage_failure(in.presentation + ": " + e.what());
    } catch (std::runtime_error const& e) {
      throw usage_failure(e.what());
    }
    auto const dist = fp::distance_by_name(in.distance);
    if (!dist) {
      throw usage_failure("unknown distance '" + in.distance + "'");
    }
    fp::Caps const caps{in.max_len, in.max_iter};
    json           doc;
    doc["inputs"]["presentation"] = in.presentation;
    doc["inputs"]["max_len"]      = caps.max_len;
    doc["inputs"]["max_iter"]     = caps.max_iter;
    auto& result                  = doc["result"];

    if (sub == "relation-bound") {
      doc["inputs"]["distance"] = dist->name;
      result["relation_bound"]  = fp::relation_bound(p, *dist);
      return doc;
    }
    if (sub == "delta-probe") {
      doc["inputs"]["max_word_len"] = in.max_word_len;
      auto const probe = fp::delta_probe(p, in.max_word_len, caps);
      result["delta"]  = std::vector<Length>(probe.distances.begin(),
                                            probe.distances.end());
      result["classes_complete"]   = probe.classes_complete;
      result["classes_incomplete"] = probe.classes_incomplete;
      doc["complete"]              = probe.classes_incomplete == 0;
      return doc;
    }
    fp::Word w;
    try {
      w = p.parse_word(in.word);
    } catch (std::invalid_argument const& e) {
      throw usage_failure(std::string("--word: ") + e.what());
    }
    doc["inputs"]["word"] = p.format_word(w);
    auto const z          = fp::factorizations(w, p, caps);
    doc["complete"]       = z.complete;
    result["overflow"]    = z.overflow;
    if (sub == "factorize") {
      result["words"] = detail::sorted_words(z, p);
      result["count"] = z.words.size();
    } else if (sub == "lengths") {
      try {
        result["lengths"] = to_json(fp::lengths_of(z));
      } catch (std::domain_error const& e) {
        throw usage_failure(e.what());
      }
      result["max_length"] = z.max_length();
    } else if (sub == "catenary") {
      doc["inputs"]["distance"] = dist->name;
      result["catenary"]        = fp::catenary_of(z, p, *dist);
      result["factorizations"]  = z.words.size();
    }
    return doc;
  }

  inline json run_zs(std::string const& sub, Invocation const& in) {
    zs::FiniteAbelianGroup G;
    try {
      G = zs::parse_group(in.group);
    } catch (std::invalid_argument const& e) {
      throw usage_failure(e.what());
    }
    std::vector<zs::GroupElement> G0;
    try {
      G0 = in.g0.empty() ? G.elements() : zs::parse_element_list(G, in.g0);
    } catch (std::invalid_argument const& e) {
      throw usage_failure(std::string("--g0: ") + e.what());
    }
    json doc;
    doc["inputs"]["group"] = in.group;
    std::vector<std::string> g0_text;
    for (auto const& g : G0) {
      g0_text.push_back(zs::format_element(g));
    }
    auto& result = doc["result"];

    if (sub == "atoms" || sub == "elasticity") {
      doc["inputs"]["g0"] = g0_text;
      Length const max_len
          = in.zs_max_len.value_or(static_cast<Length>(G.order()) * (sub == "atoms" ? 1 : 3));
      if (max_len < 1) {
        throw usage_failure("--max-len must be positive");
      }
      doc["inputs"]["max_len"] = max_len;
      if (sub == "atoms") {
        std::vector<std::string> atoms;
        for (auto const& A : zs::atoms_up_to(G, G0, max_len)) {
          atoms.push_back(zs::format_sequence(A, G));
        }
        result["count"] = atoms.size();
        result["atoms"] = atoms;
      } else {
        auto const r       = zs::accepted_elasticity(G, G0, max_len);
        result["rho"]      = to_string(r.rho);
        result["attained"] = r.attained;
        result["witness"]
            = r.witness ? json(zs::format_sequence(*r.witness, G)) : json();
        result["sequences_checked"] = r.sequences_checked;
      }
      doc["complete"] = true;
      return doc;
    }
    zs::Sequence S;
    try {
      S = zs::parse_sequence(G, in.seq);
    } catch (std::invalid_argument const& e) {
      throw usage_failure(std::string("--seq: ") + e.what());
    }
    doc["inputs"]["seq"] = zs::format_sequence(S, G);
    if (zs::sigma(S, G) != G.zero()) {
      throw usage_failure("--seq is not a zero-sum sequence");
    }
    if (sub == "lengths") {
      auto const f             = zs::factorizations_zs(S, G);
      result["lengths"]        = to_json(zs::length_set_zs(S, G));
      result["factorizations"] = f.factorizations.size();
    } else if (sub == "catenary") {
      result["catenary"] = zs::catenary_zs(S, G);
      result["distance"] = "commutative";
    }
    doc["complete"] = true;
    return doc;
  }

  inline json run_verify(Invocation const& in, bool& passed) {
    auto const& names = verify::suite_names();
    if (std::find(names.begin(), names.end(), in.suite) == names.end()) {
      throw usage_failure("unknown suite '" + in.suite + "'");
    }
    if (in.n_max < 2 || in.n_max > 12) {
      throw usage_failure("--n-max must lie in [2, 12]");
    }
    if (in.size_max < 1 || in.size_max > 24) {
      throw usage_failure("--size-max must lie in [1, 24]");
    }
    verify::Options opt;
    opt.n_max    = in.n_max;
    opt.size_max = in.size_max;
    opt.seed     = in.seed;
    opt.caps     = fp::Caps{in.max_len, in.max_iter};
    opt.corpus   = corpus::Corpus(in.corpus_dir);
    auto const suite = verify::run_suite(in.suite, opt);
    passed           = suite.passed();
    json doc;
    doc["inputs"] = {{"suite", in.suite},
                     {"n_max", in.n_max},
                     {"size_max", in.size_max},
                     {"seed", in.seed}};
    json checks = json::array();
    for (auto const& c : suite.checks) {
      checks.push_back(verify::to_json(c));
    }
    doc["result"] = {{"checks", checks}, {"passed", passed}};
    doc["complete"] = true;
    return doc;
  }

  inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    Invocation in;
    CLI::App   app{"factorlen: sets of lengths, unions, elasticities and "
                 "catenary degrees of finitely presented monoids"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--pretty", in.pretty, "Print an aligned table instead of JSON");

    std::string command;
    std::string leaf;
    auto        leaf_cb = [&](std::string group, std::string name) {
      return [&, group, name] {
        command = group;
        leaf    = name;
      };
    };

    auto* bn = app.add_subcommand("bn", "Closed forms for B_n = <a,b | ba = b^n>");
    bn->require_subcommand(1);
    bn->fallthrough();
    for (auto const* name : {"length-set", "union", "membership", "phi", "rho-k",
                             "elasticity", "catenary"}) {
      auto* s = bn->add_subcommand(name);
      s->add_option("--n", in.n, "Parameter n >= 2")->required();
      if (std::string(name) == "length-set") {
        s->add_option("--k", in.k, "Exponent of a")->required();
        s->add_option("--m", in.m, "Exponent of b")->required();
      } else if (std::string(name) == "union") {
        s->add_option("--l", in.l, "The length l")->required();
      } else if (std::string(name) == "membership" || std::string(name) == "phi") {
        s->add_option("--set", in.set, "Set literal, e.g. 3,4 or 3..7")->required();
      } else if (std::string(name) == "rho-k") {
        s->add_option("--k", in.k, "k >= 1")->required();
      }
      s->fallthrough();
      s->callback(leaf_cb("bn", name));
    }

    auto* fpc = app.add_subcommand("fp", "Enumeration in a finitely presented monoid");
    fpc->require_subcommand(1);
    fpc->fallthrough();
    for (auto const* name :
         {"factorize", "lengths", "catenary", "relation-bound", "delta-probe"}) {
      auto* s = fpc->add_subcommand(name);
      s->add_option("--presentation", in.presentation, "Presentation file")
          ->required();
      std::string const n(name);
      if (n == "factorize" || n == "lengths" || n == "catenary") {
        s->add_option("--word", in.word, "Seed word")->required();
      }
      if (n == "delta-probe") {
        s->add_option("--max-word-len", in.max_word_len, "Longest seed word");
      }
      s->add_option("--max-len", in.max_len, "Longest word expanded");
      s->add_option("--max-iter", in.max_iter, "Most closure insertions");
      s->add_option("--distance", in.distance, "Distance (levenshtein)");
      s->fallthrough();
      s->callback(leaf_cb("fp", name));
    }

    auto* zsc = app.add_subcommand("zs", "Zero-sum sequences over finite abelian groups");
    zsc->require_subcommand(1);
    zsc->fallthrough();
    Length                    zs_max_len = 0;
    std::vector<CLI::Option*> zs_max_len_opts;
    for (auto const* name : {"atoms", "lengths", "catenary", "elasticity"}) {
      auto* s = zsc->add_subcommand(name);
      s->add_option("--group", in.group, "Group, e.g. 3 or 2x2")->required();
      std::string const n(name);
      if (n == "atoms" || n == "elasticity") {
        s->add_option("--g0", in.g0, "Element list, e.g. \"0,1,2\" or \"1:0,0:1\"");
        zs_max_len_opts.push_back(
            s->add_option("--max-len", zs_max_len, "Longest sequence considered"));
      } else {
        s->add_option("--seq", in.seq, "Sequence, e.g. \"1^3,2^3\"")->required();
      }
      s->fallthrough();
      s->callback(leaf_cb("zs", name));
    }

    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->fallthrough();
    ver->add_option("suite", in.suite, "bn-oracle|catenary|unions|elasticity|zerosum|all")
        ->required();
    ver->add_option("--n-max", in.n_max, "Largest n swept");
    ver->add_option("--size-max", in.size_max, "Largest element/seed size swept");
    ver->add_option("--seed", in.seed, "Seed for sampled checks");
    ver->add_option("--corpus", in.corpus_dir, "Corpus directory");
    ver->add_option("--max-len", in.max_len, "Longest word expanded");
    ver->add_option("--max-iter", in.max_iter, "Most closure insertions");
    ver->callback([&] { command = "verify"; leaf = ""; });

    try {
      in.max_len  = detail::env_or("FACTORLEN_MAX_LEN", 64);
      in.max_iter = detail::env_or("FACTORLEN_MAX_ITER", 1'000'000);
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForVersion const&) {
      out << version << "\n";
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "factorlen: " << e.what() << "\n";
      return usage_error;
    } catch (usage_failure const& e) {
      err << "factorlen: " << e.what() << "\n";
      return usage_error;
    }
    for (auto const* o : zs_max_len_opts) {
      if (o->count() > 0) {
        in.zs_max_len = zs_max_len;
      }
    }

    json doc;
    bool passed = true;
    try {
      if (command == "bn") {
        doc = run_bn(leaf, in);
      } else if (command == "fp") {
        doc = run_fp(leaf, in);
      } else if (command == "zs") {
        doc = run_zs(leaf, in);
      } else {
        doc = run_verify(in, passed);
      }
    } catch (usage_failure const& e) {
      err << "factorlen: " << e.what() << "\n";
      return usage_error;
    } catch (std::invalid_argument const& e) {
      err << "factorlen: " << e.what() << "\n";
      return usage_error;
    }
    doc["command"] = leaf.empty() ? command : command + " " + leaf;
    doc["version"] = version;
    if (in.pretty) {
      out << pretty(doc);
    } else {
      out << doc.dump() << "\n";
    }
    return passed ? ok : verification_failed;
  }

}  // namespace factorlen::cli
