// Command implementations behind the fdouble command line tool. Each command
// writes to the given stream and returns the process exit code:
// 0 pass, 1 verification failure, 2 parse error, 3 precondition violation.

#ifndef FDOUBLE_COMMANDS_HPP_
#define FDOUBLE_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "amalgam.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "mihailova.hpp"
#include "perm_group.hpp"
#include "serialize.hpp"
#include "subgroup_graph.hpp"
#include "word.hpp"

namespace fdouble::cli {

  enum ExitCode : int {
    exit_pass         = 0,
    exit_failure      = 1,
    exit_parse_error  = 2,
    exit_precondition = 3
  };

  struct RunConfig {
    std::string                command;
    std::size_t                rank = 2;
    std::optional<std::string> gens;
    std::optional<std::string> n_gens;
    std::optional<std::string> preset;
    //! Positional arguments: amalgam words for double-nf / double-mul.
    std::vector<std::string> words;
    std::string              presentation;
    std::string              images;
    std::string              pair;
    std::size_t              samples = 10'000;
    std::size_t              max_len = 12;
    std::uint64_t            seed    = 0xC0FFEE;
    //! text, json or dot; empty picks the command's natural format.
    std::string format;
    unsigned    workers = 1;
  };

  struct Preset {
    std::string_view name;
    std::size_t      rank;
    std::string_view gens;
    std::string_view description;
  };

  //! rips: ker(F_2 -> Z/3, a,b -> 1), normal of index 3.
  //! index2: ker(F_2 -> Z/2, a,b -> 1), rejected by the witness construction.
  //! s3stab: stabilizer of 0 under a -> (0 1), b -> (0 1 2); index 3, not
  //! normal, normal core of index 6.
  inline constexpr Preset presets[] = {
      {"rips", 2, "bA,abAA,aaa,aab", "kernel of F2 -> Z/3, a,b -> 1"},
      {"index2", 2, "bA,aa,ab", "kernel of F2 -> Z/2, a,b -> 1"},
      {"s3stab", 2, "bA,aa,abaBA,abb",
       "point stabilizer of F2 -> S3, a -> (0 1), b -> (0 1 2)"}};

  inline std::optional<Preset> find_preset(std::string_view name) {
    for (auto const& p : presets) {
      if (p.name == name) {
        return p;
      }
    }
    return std::nullopt;
  }

  struct SubgroupInput {
    std::size_t       rank;
    std::vector<Word> gens;
    SubgroupGraph     graph;
  };

  inline SubgroupInput resolve_subgroup(RunConfig const& cfg) {
    std::size_t rank = cfg.rank;
    std::string gens;
    if (cfg.preset) {
      auto p = find_preset(*cfg.preset);
      if (!p) {
        throw Error(ErrorKind::malformed_input,
                    "unknown preset \"" + *cfg.preset
                        + "\" (known: rips, index2, s3stab)");
      }
      rank = p->rank;
      gens = std::string(p->gens);
    } else if (cfg.gens) {
      gens = *cfg.gens;
    } else {
      throw Error(ErrorKind::malformed_input, "need --preset or --gens");
    }
    if (rank > max_text_rank) {
      throw Error(ErrorKind::malformed_input, "rank must be at most 26");
    }
    auto words = parse_word_list(gens, rank);
    auto graph = SubgroupGraph::from_generators(words, rank);
    return {rank, std::move(words), std::move(graph)};
  }

  inline std::string show(Word const& w) {
    return w.empty() ? "1" : w.to_string();
  }

  inline std::string join(std::vector<Word> const& words) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      out += (i ? ", " : "") + show(words[i]);
    }
    return out;
  }

  inline std::string format_or(RunConfig const& cfg, std::string fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
  }

  inline int cmd_subgroup_info(RunConfig const& cfg, std::ostream& out) {
    auto in     = resolve_subgroup(cfg);
    auto const& H = in.graph;
    auto idx    = index(H);
    auto fmt    = format_or(cfg, "text");
    if (fmt == "dot") {
      out << to_dot(H);
      return exit_pass;
    }
    auto b      = basis(H);
    bool normal = is_normal(H);
    std::optional<Transversal> T;
    if (idx) {
      T = schreier_transversal(H);
    }
    if (fmt == "json") {
      json j{{"rank", in.rank},
             {"generators", words_to_json(in.gens)},
             {"graph", to_json(H)},
             {"index", idx ? json(*idx) : json("infinite")},
             {"subgroup_rank", subgroup_rank(H)},
             {"basis", words_to_json(b)},
             {"normal", normal}};
      if (T) {
        j["transversal"] = words_to_json(T->reps);
      }
      out << j.dump(2) << '\n';
      return exit_pass;
    }
    out << "ambient rank: " << in.rank << '\n'
        << "generators: " << join(in.gens) << '\n'
        << "vertices: " << H.vertex_count() << '\n'
        << "edges: " << H.edge_count() << '\n'
        << "index: " << (idx ? std::to_string(*idx) : "infinite") << '\n'
        << "rank: " << subgroup_rank(H) << '\n'
        << "basis: " << join(b) << '\n'
        << "normal: " << (normal ? "true" : "false");
    if (!idx) {
      out << " (infinite index: only the trivial subgroup is normal)";
    }
    out << '\n';
    if (T) {
      out << "transversal: " << join(T->reps) << '\n';
    }
    return exit_pass;
  }

  inline int cmd_double_nf(RunConfig const& cfg, std::ostream& out) {
    if (cfg.words.size() != 1) {
      throw Error(ErrorKind::malformed_input,
                  "double-nf takes exactly one amalgam word");
    }
    auto       in = resolve_subgroup(cfg);
    FreeDouble L{FreeFactor(in.graph)};
    auto       u = parse_amalgam(L, cfg.words[0]);
    if (format_or(cfg, "text") == "json") {
      out << to_json(u, L).dump(2) << '\n';
    } else {
      out << L.format(u) << '\n';
    }
    return exit_pass;
  }

  inline int cmd_double_mul(RunConfig const& cfg, std::ostream& out) {
    if (cfg.words.empty()) {
      throw Error(ErrorKind::malformed_input,
                  "double-mul takes one or more amalgam words");
    }
    auto       in = resolve_subgroup(cfg);
    FreeDouble L{FreeFactor(in.graph)};
    auto       u = L.identity();
    for (auto const& text : cfg.words) {
      u = L.multiply(u, parse_amalgam(L, text));
    }
    if (format_or(cfg, "text") == "json") {
      out << to_json(u, L).dump(2) << '\n';
    } else {
      out << L.format(u) << '\n';
    }
    return exit_pass;
  }

  inline int cmd_kernel_basis(RunConfig const& cfg, std::ostream& out) {
    auto       in = resolve_subgroup(cfg);
    FreeDouble L{FreeFactor(in.graph)};
    auto       K = kernel_basis(L);
    if (format_or(cfg, "text") == "json") {
      json j = json::array();
      for (auto const& k : K) {
        j.push_back(to_json(k, L));
      }
      out << json{{"index", in.graph.vertex_count()},
                  {"rank", K.size()},
                  {"basis", j}}
                 .dump(2)
          << '\n';
      return exit_pass;
    }
    out << "[G:H] = " << in.graph.vertex_count() << ", rank of ker(phi1) = "
        << K.size() << '\n';
    for (auto const& k : K) {
      out << L.format(k) << "    phi1 -> " << show(phi1(k, L)) << '\n';
    }
    return exit_pass;
  }

  inline int cmd_witness(RunConfig const& cfg, std::ostream& out) {
    auto                         in = resolve_subgroup(cfg);
    std::optional<SubgroupGraph> N;
    if (cfg.n_gens) {
      N = SubgroupGraph::from_generators(parse_word_list(*cfg.n_gens, in.rank),
                                         in.rank);
    }
    auto w       = build_witness(in.rank, in.graph, std::move(N));
    auto report  = verify_witness(w, cfg.samples, cfg.max_len, cfg.seed,
                                 cfg.workers);
    auto product = virtual_product_report(*w.context);
    if (format_or(cfg, "json") == "json") {
      json j{{"pass", report.passed()},
             {"witness", to_json(w)},
             {"report", report},
             {"virtual_product", product}};
      out << j.dump(2) << '\n';
    } else {
      auto const& L = w.context->L();
      out << "x1 = " << L.format(w.x1) << '\n'
          << "x2 = " << L.format(w.x2) << '\n'
          << "y1 = " << L.format(w.y1) << '\n'
          << "y2 = " << L.format(w.y2) << '\n'
          << "commutators: " << report.commutators_checked << " checked, "
          << (report.commutators_pass ? "all trivial" : "FAILED") << '\n'
          << "kernel conditions: " << (report.kernel_conditions ? "ok" : "FAILED")
          << '\n'
          << "injectivity: " << report.injectivity_samples << " samples, "
          << report.injectivity_failures << " failures (max_len "
          << report.max_len << ", seed " << report.seed << ")\n"
          << "virtually F_" << product.r1 << " x F_" << product.r2
          << ", index " << product.index << '\n'
          << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
    return report.passed() ? exit_pass : exit_failure;
  }

  //! The quotient of the Bass-Serre tree of G *_H G by ker(phi_1): two
  //! vertices and one edge per left coset of H.
  inline int cmd_export_cover(RunConfig const& cfg, std::ostream& out) {
    auto in = resolve_subgroup(cfg);
    auto T  = schreier_transversal(in.graph);
    auto fmt = format_or(cfg, "dot");
    if (fmt == "json") {
      json edges = json::array();
      for (auto const& t : T.reps) {
        edges.push_back(
            {{"from", "v1"}, {"to", "v2"}, {"label", t.to_string()},
             {"covers", "e"}});
      }
      out << json{{"nodes", {"v1", "v2"}},
                  {"edges", edges},
                  {"base", {{"nodes", {"v1", "v2"}}, {"edges", {"e"}}}},
                  {"kernel_rank", T.size() - 1}}
                 .dump(2)
          << '\n';
      return exit_pass;
    }
    if (fmt == "text") {
      out << "nodes: 2\nedges: " << T.size() << "\nrank: " << T.size() - 1
          << '\n';
      return exit_pass;
    }
    out << "// ker(phi1) \\ T for L = G *_H G with [G:H] = " << T.size() << '\n'
        << "// base edge of groups: v1 [G] --e [H]-- v2 [G]\n"
        << "// every edge covers e; rank of ker(phi1) = E - V + 1 = "
        << T.size() - 1 << '\n'
        << "graph cover {\n"
        << "  v1 [label=\"G(1)\"];\n"
        << "  v2 [label=\"G(2)\"];\n";
    for (auto const& t : T.reps) {
      out << "  v1 -- v2 [label=\"" << t.to_string() << "\", covers=\"e\"];\n";
    }
    out << "}\n";
    return exit_pass;
  }

  inline int cmd_mihailova(RunConfig const& cfg, std::ostream& out) {
    auto P = FinitePresentation::parse(cfg.presentation);
    std::vector<Perm> images;
    std::size_t       degree = 0;
    {
      std::string_view rest = cfg.images;
      while (!rest.empty()) {
        auto semi = rest.find(';');
        images.push_back(parse_cycles(rest.substr(0, semi)));
        degree = std::max(degree, images.back().size());
        rest = semi == std::string_view::npos ? std::string_view()
                                              : rest.substr(semi + 1);
      }
    }
    // Pad to a common degree.
    for (auto& p : images) {
      for (auto i = p.size(); i < degree; ++i) {
        p.push_back(static_cast<std::uint32_t>(i));
      }
    }
    auto oracle = finite_quotient_oracle(P, images);
    auto pair   = PairWord::parse(cfg.pair, P.rank);
    auto reduced = pair.left * invert(pair.right);
    bool member = fiber_membership(pair, P, std::cref(oracle));
    if (format_or(cfg, "text") == "json") {
      out << json{{"presentation", P.to_string()},
                  {"pair", pair.to_string()},
                  {"reduced", reduced.to_string()},
                  {"image", to_cycles(oracle.image(reduced))},
                  {"member", member}}
                 .dump(2)
          << '\n';
    } else {
      out << "presentation: " << P.to_string() << '\n'
          << "pair: " << pair.to_string() << '\n'
          << "u v^-1 = " << show(reduced) << '\n'
          << "image: " << to_cycles(oracle.image(reduced)) << '\n'
          << (member ? "member" : "non-member") << '\n';
    }
    return exit_pass;
  }

  //! Dispatches cfg.command; Errors become exit codes with the message on
  //! `err`.
  inline int run(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
    try {
      if (!cfg.format.empty() && cfg.format != "text" && cfg.format != "json"
          && cfg.format != "dot") {
        throw Error(ErrorKind::malformed_input,
                    "unknown format \"" + cfg.format + "\"");
      }
      if (cfg.samples < 1 || cfg.max_len < 1) {
        throw Error(ErrorKind::malformed_input,
                    "--samples and --max-len must be at least 1");
      }
      if (cfg.command == "subgroup-info") {
        return cmd_subgroup_info(cfg, out);
      }
      if (cfg.command == "double-nf") {
        return cmd_double_nf(cfg, out);
      }
      if (cfg.command == "double-mul") {
        return cmd_double_mul(cfg, out);
      }
      if (cfg.command == "kernel-basis") {
        return cmd_kernel_basis(cfg, out);
      }
      if (cfg.command == "witness") {
        return cmd_witness(cfg, out);
      }
      if (cfg.command == "export-cover") {
        return cmd_export_cover(cfg, out);
      }
      if (cfg.command == "mihailova") {
        return cmd_mihailova(cfg, out);
      }
      throw Error(ErrorKind::malformed_input,
                  "unknown command \"" + cfg.command + "\"");
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return e.kind() == ErrorKind::malformed_input ? exit_parse_error
                                                    : exit_precondition;
    }
  }

}  // namespace fdouble::cli

#endif  // FDOUBLE_COMMANDS_HPP_
