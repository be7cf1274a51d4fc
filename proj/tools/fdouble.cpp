// fdouble: command line front end for doubles of free groups.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fdouble/commands.hpp"

int main(int argc, char** argv) {
  using fdouble::cli::RunConfig;

  CLI::App app{"Doubles of free groups over finite-index subgroups"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_subgroup = [&](CLI::App* sub) {
    sub->add_option("--rank", cfg.rank, "rank of the ambient free group")
        ->check(CLI::Range(1, 26));
    sub->add_option("--gens", cfg.gens,
                    "comma separated generators of H, e.g. bA,abAA,aaa,aab");
    sub->add_option("--preset", cfg.preset, "rips, index2 or s3stab");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
  };

  auto* info = app.add_subcommand("subgroup-info",
                                  "index, rank, basis, normality, transversal");
  add_subgroup(info);
  add_format(info);

  auto* nf = app.add_subcommand("double-nf",
                                "normal form of a word such as \"1:a 2:A\"");
  add_subgroup(nf);
  add_format(nf);
  nf->add_option("word", cfg.words, "amalgam word")->required();

  auto* mul = app.add_subcommand("double-mul", "product of amalgam words");
  add_subgroup(mul);
  add_format(mul);
  mul->add_option("words", cfg.words, "amalgam words")->required();

  auto* kb = app.add_subcommand("kernel-basis", "free basis of ker(phi1)");
  add_subgroup(kb);
  add_format(kb);

  auto* witness = app.add_subcommand(
      "witness", "build and verify the F2 x F2 subgroup of the double");
  add_subgroup(witness);
  add_format(witness);
  witness->add_option("--normal-gens", cfg.n_gens,
                      "generators of N (default: the normal core of H)");
  witness->add_option("--samples", cfg.samples, "injectivity samples")
      ->check(CLI::PositiveNumber);
  witness->add_option("--max-len", cfg.max_len, "maximum sampled word length")
      ->check(CLI::PositiveNumber);
  witness->add_option("--seed", cfg.seed, "sampling seed");
  witness->add_option("--workers", cfg.workers, "sampling threads")
      ->check(CLI::PositiveNumber);

  auto* cover = app.add_subcommand(
      "export-cover", "quotient graph of the Bass-Serre tree by ker(phi1)");
  add_subgroup(cover);
  add_format(cover);

  auto* mih = app.add_subcommand(
      "mihailova", "fiber product membership via a finite quotient oracle");
  add_format(mih);
  mih->add_option("--presentation", cfg.presentation,
                  "e.g. \"rank=1; relators=aaa\"")
      ->required();
  mih->add_option("--images", cfg.images,
                  "generator images in cycle notation separated by ';'")
      ->required();
  mih->add_option("--pair", cfg.pair, "pair such as \"(aaa,1)\"")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return fdouble::cli::exit_parse_error;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return fdouble::cli::run(cfg, std::cout, std::cerr);
}
