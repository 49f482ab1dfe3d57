#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ramsey/campaign.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/error.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/search.hpp"
#include "ramsey/tree.hpp"

using namespace ramsey;

namespace {

constexpr int kSuccess = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

/// A tree given either as an edge-list file or as a tree term.
Tree tree_argument(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return load_tree_file(arg);
  return parse_tree_spec(arg);
}

Engine engine_argument(const std::string& name) { return name == "proof" ? Engine::Proof : Engine::Oracle; }

int cmd_compute(const std::string& forest, const std::string& target) {
  const ForestSpec f = parse_forest_spec(forest);
  const CliqueUnion h = parse_clique_union(target);
  check_supported(f, h);
  const auto [chi, s] = chromatic_data(h);
  const auto lb = gj_lower_p(f, h);
  std::map<int, int> values;
  for (int order : f.orders()) values[order] = tree_value(order, h);
  const int upper = union_upper(f, values);
  const int r = ramsey_value(f, h);

  std::cout << "R = " << r << '\n';
  std::cout << "target: " << h.to_string() << " (chi = " << chi << ", s = " << s << ")\n";
  std::cout << "p = " << lb.p << '\n';
  std::cout << "j0 = " << lb.argmax << '\n';
  for (const auto& [order, value] : values)
    std::cout << "component order " << order << ": k = " << f.count_of_order(order) << ", R(T, H) = " << value
              << ", beta = " << beta(value, order, h) << '\n';
  std::cout << "upper bound = " << upper << '\n';
  std::cout << "goodness identity p = upper: " << (upper == lb.p ? "holds" : "fails") << '\n';
  return kSuccess;
}

int cmd_construct(const std::string& forest, const std::string& target, const std::string& out_path) {
  const ForestSpec f = parse_forest_spec(forest);
  const CliqueUnion h = parse_clique_union(target);
  check_supported(f, h);
  const auto block = gj_coloring(f, h);
  const auto report = verify_extremal(block.coloring, f, h);
  const std::string text = write_coloring(block.coloring);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  std::cout << "# vertices: " << block.coloring.order() << '\n';
  std::istringstream blocks(describe_blocks(block.blocks));
  for (std::string line; std::getline(blocks, line);) std::cout << "# " << line << '\n';
  std::cout << "# red forest found: " << (report.red_forest_found ? "yes" : "no") << '\n';
  std::cout << "# blue target found: " << (report.blue_target_found ? "yes" : "no") << '\n';
  std::cout << "# certified: " << (report.certified ? "yes" : "no") << '\n';
  return report.certified ? kSuccess : kVerificationFailed;
}

int cmd_witness(const std::string& path, const std::string& forest, const std::string& target,
                const std::string& engine) {
  const TwoColoring c = parse_coloring(read_file(path));
  const ForestSpec f = parse_forest_spec(forest);
  const CliqueUnion h = parse_clique_union(target);
  const auto w = engine_witness(c, f, h, engine_argument(engine), nullptr, true);
  if (!w) {
    std::cout << "NONE\n";
    return kVerificationFailed;
  }
  std::cout << write_witness(*w);
  return kSuccess;
}

int cmd_verify(const std::string& forest, const std::string& target, int n, bool exhaustive,
               std::uint64_t samples, std::uint64_t seed, const std::string& engine) {
  const ForestSpec f = parse_forest_spec(forest);
  const CliqueUnion h = parse_clique_union(target);
  const Engine e = engine_argument(engine);
  const auto r = exhaustive ? exhaustive_verify(f, h, n, e) : sampled_verify(f, h, n, e, samples, seed);
  std::cout << "forest: " << forest << '\n' << "target: " << h.to_string() << '\n' << "N: " << n << '\n';
  std::cout << "engine: " << to_string(e) << '\n' << write_report(r);
  std::cerr << "elapsed: " << r.elapsed.count() << " s\n";
  return r.passed() ? kSuccess : kVerificationFailed;
}

int cmd_transform(const std::string& from, const std::string& to, const std::string& out_path) {
  const Tree a = tree_argument(from);
  const Tree b = tree_argument(to);
  const Plan plan = plan_between(a, b);
  const Tree result = apply_plan(a, plan);
  const std::string text = write_plan(plan);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  std::cerr << plan.size() << " steps; result " << (is_isomorphic(result, b) ? "is" : "is NOT")
            << " isomorphic to the target\n";
  return is_isomorphic(result, b) ? kSuccess : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trees and forests versus unions of cliques: Ramsey values, colourings, witnesses"};
  app.require_subcommand(1);

  std::string forest, target, out, coloring, engine = "oracle", from, to;
  int n = 0;
  bool exhaustive = false;
  std::uint64_t samples = 0, seed = 0;
  const auto engines = CLI::IsMember({"oracle", "proof"});

  auto* compute = app.add_subcommand("compute", "print R and the formula breakdown");
  compute->add_option("--forest", forest, "red forest, e.g. P3+P4")->required();
  compute->add_option("--target", target, "blue clique union, e.g. K3+K2")->required();

  auto* construct = app.add_subcommand("construct", "extremal colouring with certification");
  construct->add_option("--forest", forest)->required();
  construct->add_option("--target", target)->required();
  construct->add_option("--out", out, "write the colouring here");

  auto* witness = app.add_subcommand("witness", "red forest or blue target in a colouring");
  witness->add_option("--coloring", coloring)->required()->check(CLI::ExistingFile);
  witness->add_option("--forest", forest)->required();
  witness->add_option("--target", target)->required();
  witness->add_option("--engine", engine)->required()->check(engines);

  auto* verify = app.add_subcommand("verify", "exhaustive or sampled campaign");
  verify->add_option("--forest", forest)->required();
  verify->add_option("--target", target)->required();
  verify->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  auto* ex = verify->add_flag("--exhaustive", exhaustive);
  auto* sm = verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
  auto* sd = verify->add_option("--seed", seed);
  ex->excludes(sm)->excludes(sd);
  sm->needs(sd);
  sd->needs(sm);
  verify->add_option("--engine", engine)->required()->check(engines);

  auto* transform = app.add_subcommand("transform", "stretch/expand plan between two trees");
  transform->add_option("--from", from, "tree file or tree term")->required();
  transform->add_option("--to", to, "tree file or tree term")->required();
  transform->add_option("--out", out, "write the plan here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsage;
  }
  if (verify->parsed() && !exhaustive && samples == 0) {
    std::cerr << "verify: give --exhaustive or --samples with --seed\n";
    return kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(forest, target);
    if (construct->parsed()) return cmd_construct(forest, target, out);
    if (witness->parsed()) return cmd_witness(coloring, forest, target, engine);
    if (verify->parsed()) return cmd_verify(forest, target, n, exhaustive, samples, seed, engine);
    return cmd_transform(from, to, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
