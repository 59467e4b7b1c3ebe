#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "belyi/error.hpp"
#include "belyi/seed.hpp"
#include "commands.hpp"

namespace cli = belyi::cli;

int main(int argc, char** argv) {
  CLI::App app{"Belyi covers, descent criteria and finite-level lifting checks"};
  app.require_subcommand(1);
  app.fallthrough();
  cli::Common common;
  common.seed = belyi::kDefaultSeed;
  bool text = false;
  app.add_option("--seed", common.seed, "Seed for randomized searches")->capture_default_str();
  auto* json_flag = app.add_flag("--json", common.json, "Emit JSON");
  app.add_flag("--text", text, "Emit aligned text (default)")->excludes(json_flag);

  std::string input, group, module, cocycle, g1, g2, psi, tuple;
  bool refine = false, basis = false, verify = false;
  int rank = 2, perturb = 0;
  long long mod = 2;
  std::vector<int> only;
  int a = 0, b = 0, d = 0, n = 0, t = 0;

  auto* analyze = app.add_subcommand("analyze", "Closure data, genus and branch records of a cover");
  analyze->add_option("--input", input, "Cover JSON")->required();

  auto* descend = app.add_subcommand("descend", "Descent criterion for a cover");
  descend->add_option("--input", input, "Cover JSON")->required();
  descend->add_flag("--refine", refine, "Search subgroup certificates");

  auto* chartab = app.add_subcommand("chartab", "Character table of a permutation group");
  chartab->add_option("--group", group, "Group JSON")->required();

  auto* cohom = app.add_subcommand("cohomology", "Second cohomology of a finite module");
  cohom->add_option("--module", module, "Module JSON")->required();
  cohom->add_option("--cocycle", cocycle, "Cocycle JSON");
  cohom->add_flag("--basis", basis, "Include basis cocycles");

  auto* relmod = app.add_subcommand("relmod", "Relation module of a d-generated group");
  relmod->add_option("--group", group, "Group JSON")->required();
  relmod->add_option("--rank", rank, "Number of free generators")->capture_default_str();
  relmod->add_option("--mod", mod, "Modulus m")->capture_default_str();
  relmod->add_flag("--verify-main", verify, "Exhaustive check over the extension");

  auto* gasch = app.add_subcommand("gaschuetz", "Lifting generating tuples along surjections");
  gasch->require_subcommand(1);
  auto* lift = gasch->add_subcommand("lift", "Lift a generating tuple of g2 to g1");
  lift->add_option("--g1", g1, "Source group JSON")->required();
  lift->add_option("--g2", g2, "Target group JSON")->required();
  lift->add_option("--psi", psi, "Images of the generators of g1 (JSON array)")->required();
  lift->add_option("--tuple", tuple, "Generating tuple of g2 (JSON array)")->required();

  auto* genus1 = app.add_subcommand("genus1", "Genus-one constructions");
  genus1->require_subcommand(1);
  auto* triples = genus1->add_subcommand("triples", "Inertia triples with 1/a + 1/b + 1/c = 1");
  auto* kummer = genus1->add_subcommand("kummer", "Cyclic cover y^d = t^a (t-1)^b");
  kummer->add_option("a", a)->required();
  kummer->add_option("b", b)->required();
  kummer->add_option("d", d)->required();
  auto* cm = genus1->add_subcommand("cm", "Stable subgroups of (Z/n)^2 under the order-d matrix");
  cm->add_option("d", d)->required();
  cm->add_option("n", n)->required();
  auto* jdeg = genus1->add_subcommand("jdeg", "Degree of j at a primitive t-th root of unity");
  jdeg->add_option("t", t)->required();

  auto* corpus = app.add_subcommand("corpus", "Run the acceptance corpus");
  corpus->add_option("--only", only, "Criterion ids to run");
  corpus->add_option("--perturb", perturb, "Alter the expected value of one criterion")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    auto& out = std::cout;
    if (*analyze) return cli::analyze(common, input, out);
    if (*descend) return cli::descend(common, input, refine, out);
    if (*chartab) return cli::chartab(common, group, out);
    if (*cohom) return cli::cohomology(common, module, cocycle, basis, out);
    if (*relmod) return cli::relmod(common, group, rank, mod, verify, out);
    if (*lift) return cli::gaschuetz_lift(common, g1, g2, psi, tuple, out);
    if (*triples) return cli::genus1_triples(common, out);
    if (*kummer) return cli::genus1_kummer(common, a, b, d, out);
    if (*cm) return cli::genus1_cm(common, d, n, out);
    if (*jdeg) return cli::genus1_jdeg(common, t, out);
    if (*corpus) return cli::corpus(common, only, perturb, out);
  } catch (const belyi::ScaleError& e) {
    std::cerr << "scale limit exceeded: " << e.what() << "\n";
    return 1;
  } catch (const belyi::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const belyi::InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
