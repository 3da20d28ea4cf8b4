// Command-line front end for the Lefschetz fibration calculus.
#include <CLI11.hpp>
#include <iostream>

#include "lefschetz/commands.hpp"

using namespace lefschetz::cli;

int main(int argc, char** argv) {
  CLI::App app{"Symbolic calculus for Lefschetz fibrations given by positive factorizations"};
  app.require_subcommand(1);

  int g = 2;
  std::string out, derivation, delta, gamma, k_range = "-3:3", route = "endo", name, file,
                                                file2;
  std::size_t budget = 100000;
  int radius = 2;
  long k1 = 0, k2 = 0;
  std::vector<std::string> conjugators;
  bool serial = false;

  auto* ex = app.add_subcommand("example", "build a named example factorization");
  ex->add_option("name", name, "chain-power, chain-power-selfsum, indecomposable, mg-prime, "
                               "double-odd-chain or separating-chain")
      ->required();
  ex->add_option("--g", g, "genus");
  ex->add_option("--out", out, "output file (default: standard output)");
  ex->add_option("--derivation", derivation, "write the derivation log (indecomposable only)");

  auto* ve = app.add_subcommand("verify", "recheck a factorization file");
  ve->add_option("file", file)->required();
  ve->add_option("--out", out, "write the verification report here");

  auto* se = app.add_subcommand("sections", "run the section-family pipeline");
  se->add_option("file", file)->required();
  se->add_option("--delta", delta, "library curve name or word (default c_2g)");
  se->add_option("--gamma", gamma, "library name or word for the loop (default gamma)");
  se->add_option("--k-range", k_range, "range such as -3:3");
  se->add_option("--out", out, "output directory for section files and certificates");

  auto* in = app.add_subcommand("invariants", "compute chi, sigma, c1^2 and the b+ bound");
  in->add_option("file", file)->required();
  in->add_option("--sigma-route", route, "endo, meyer or substitution");
  in->add_option("--out", out, "write the report here");

  auto* hu = app.add_subcommand("hurwitz", "search for a Hurwitz path between two files");
  hu->add_option("file1", file)->required();
  hu->add_option("file2", file2)->required();
  hu->add_option("--budget", budget, "node budget");
  hu->add_option("--conjugators", conjugators, "library twists allowed as one global conjugation")
      ->delimiter(',');
  hu->add_option("--out", out, "write the path file here");
  hu->add_flag("--serial", serial, "use the serial reference expansion");

  auto* sp = app.add_subcommand("separate", "separate sigma_k1 and sigma_k2 by monodromy groups");
  sp->add_option("--k1", k1)->required();
  sp->add_option("--k2", k2)->required();
  sp->add_option("--g", g, "genus");
  sp->add_option("--radius", radius, "sampling radius");
  sp->add_option("--out", out, "write the certificate here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (ex->parsed()) return cmd_example(name, g, out, derivation, std::cout);
    if (ve->parsed()) return cmd_verify(file, out, std::cout);
    if (se->parsed()) return cmd_sections(file, delta, gamma, parse_k_range(k_range), out, std::cout);
    if (in->parsed()) return cmd_invariants(file, route, out, std::cout);
    if (hu->parsed()) return cmd_hurwitz(file, file2, budget, conjugators, out, serial, std::cout);
    if (sp->parsed()) return cmd_separate(k1, k2, g, radius, out, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInputError;
}
