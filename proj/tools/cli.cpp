#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "affine2/classify.hpp"
#include "affine2/kernel.hpp"
#include "affine2/runs.hpp"
#include "affine2/solve.hpp"
#include "affine2/task.hpp"
#include "render.hpp"

namespace affine2::tools {
namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::parse_error, "cannot read " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

AffineTask load_task(const std::string& path, const Limits& limits) {
  return parse_task_text(slurp(path), limits);
}

// Writes to the named file, or to out when the name is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::parse_error, "cannot write " + path);
  file << text;
}

std::string read_schedule_arg(const std::string& arg, std::istream& in) {
  if (!arg.empty()) return arg;
  std::string line;
  std::getline(in, line);
  return line;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Decision engine for two-process affine models"};
  app.name(args.empty() ? "affine2" : args.front());
  app.require_subcommand(1);

  Limits limits;
  unsigned max_level = limits.max_level;
  app.add_option("--max-level", max_level, "Highest subdivision level accepted")->capture_default_str();

  std::string file_a, file_b, file_map, output, kind_text, format = "ascii", schedule_text;
  unsigned count = 1, kmax = 3, level = 1, kernel_dim = 1;
  std::optional<unsigned> kernel_iterations;
  std::uint64_t edge_index = 0;
  std::uint64_t budget = limits.max_search_nodes;

  auto* classify_cmd = app.add_subcommand("classify", "Print the class and P1, P2, P3 of a task");
  classify_cmd->add_option("task", file_a)->required()->check(CLI::ExistingFile);

  auto* compare_cmd = app.add_subcommand("compare", "Compare the models of two tasks");
  compare_cmd->add_option("a", file_a)->required()->check(CLI::ExistingFile);
  compare_cmd->add_option("b", file_b)->required()->check(CLI::ExistingFile);

  auto* iterate_cmd = app.add_subcommand("iterate", "Write the k-th iterate of a task");
  iterate_cmd->add_option("task", file_a)->required()->check(CLI::ExistingFile);
  iterate_cmd->add_option("-k", count, "Iteration count")->required()->check(CLI::PositiveNumber);
  iterate_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* witness_cmd = app.add_subcommand("witness", "Write a map from an iterate of A into B");
  witness_cmd->add_option("a", file_a)->required()->check(CLI::ExistingFile);
  witness_cmd->add_option("b", file_b)->required()->check(CLI::ExistingFile);
  witness_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a witness map against two tasks");
  verify_cmd->add_option("map", file_map)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("a", file_a)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("b", file_b)->required()->check(CLI::ExistingFile);

  auto* catalog_cmd = app.add_subcommand("catalog", "Write a canonical task");
  catalog_cmd->add_option("kind", kind_text, "Neither|OnlyV0|OnlyV1|Both|Connected or a model name")
      ->required();
  catalog_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* schedule_cmd = app.add_subcommand("schedule", "Convert between schedules and edges");
  schedule_cmd->require_subcommand(1);
  auto* encode_cmd = schedule_cmd->add_subcommand("encode", "Schedule (e.g. c,c,0) to edge index");
  encode_cmd->add_option("schedule", schedule_text, "Schedule tokens (default: read stdin)");
  auto* decode_cmd = schedule_cmd->add_subcommand("decode", "Edge index to schedule");
  decode_cmd->add_option("edge", edge_index)->required();
  decode_cmd->add_option("-l,--level", level, "Level of the edge")->required();
  auto* member_cmd = schedule_cmd->add_subcommand("member", "Is the schedule a run prefix of the task's model");
  member_cmd->add_option("task", file_a)->required()->check(CLI::ExistingFile);
  member_cmd->add_option("schedule", schedule_text, "Schedule tokens (default: read stdin)");

  auto* render_cmd = app.add_subcommand("render", "Draw a task");
  render_cmd->add_option("task", file_a)->required()->check(CLI::ExistingFile);
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();
  render_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* kernel_cmd = app.add_subcommand("kernel", "List the facets of Chr s^n");
  kernel_cmd->add_option("n", kernel_dim, "Dimension (0..2)")->required();
  kernel_cmd->add_option("--iterations", kernel_iterations, "List Chr^m s^n instead");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force search for a map from A^k into B");
  oracle_cmd->add_option("a", file_a)->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("b", file_b)->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--kmax", kmax, "Largest iteration count tried")->capture_default_str()
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--budget", budget, "Search node cap per k")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  limits.max_level = max_level;
  limits.max_search_nodes = budget;

  try {
    if (classify_cmd->parsed()) {
      out << describe(classify(load_task(file_a, limits))) << '\n';
    } else if (compare_cmd->parsed()) {
      const auto a = load_task(file_a, limits);
      const auto b = load_task(file_b, limits);
      const bool ab = solves(a, b);
      const bool ba = solves(b, a);
      out << (ab && ba ? "equivalent" : ab ? "A-stronger" : ba ? "B-stronger" : "incomparable") << '\n';
    } else if (iterate_cmd->parsed()) {
      emit(to_task_text(iterate(load_task(file_a, limits), count, limits)), output, out);
    } else if (witness_cmd->parsed()) {
      const auto w = witness(load_task(file_a, limits), load_task(file_b, limits), limits);
      if (!w) {
        out << "unsolvable\n";
        return kDomain;
      }
      emit(to_witness_text(*w), output, out);
    } else if (verify_cmd->parsed()) {
      const Witness w = parse_witness_text(slurp(file_map));
      const auto source = iterate(load_task(file_a, limits), w.k, limits);
      const auto result = verify_map(w.map, source, load_task(file_b, limits));
      if (!result) {
        out << result.violation->describe() << '\n';
        return kDomain;
      }
      out << "ok\n";
    } else if (catalog_cmd->parsed()) {
      const auto kind = parse_kind(kind_text);
      if (!kind) {
        err << "unknown kind '" << kind_text << "'\n";
        return kUsage;
      }
      emit(to_task_text(canonical(*kind)), output, out);
    } else if (encode_cmd->parsed()) {
      const EdgeRef e = schedule_to_edge(parse_schedule_text(read_schedule_arg(schedule_text, in)));
      out << e.index << '\n';
    } else if (decode_cmd->parsed()) {
      out << to_schedule_text(edge_to_schedule({level, edge_index})) << '\n';
    } else if (member_cmd->parsed()) {
      const auto a = load_task(file_a, limits);
      const bool in_model = prefix_in_model(a, parse_schedule_text(read_schedule_arg(schedule_text, in)));
      out << (in_model ? "true" : "false") << '\n';
    } else if (render_cmd->parsed()) {
      const auto a = load_task(file_a, limits);
      emit(format == "svg" ? render_svg(a) : render_ascii(a), output, out);
    } else if (kernel_cmd->parsed()) {
      const KernelComplex k = kernel_iterations
                                  ? chr_iterate(static_cast<int>(kernel_dim), *kernel_iterations, limits)
                                  : chr_facets(static_cast<int>(kernel_dim));
      for (const auto& f : k.facets) out << to_string(f) << '\n';
    } else if (oracle_cmd->parsed()) {
      const auto a = load_task(file_a, limits);
      const auto b = load_task(file_b, limits);
      for (unsigned k = 1; k <= kmax; ++k) {
        if (oracle_solves(a, b, k, limits)) {
          out << "solvable k=" << k << '\n';
          return kOk;
        }
      }
      out << "unsolvable k<=" << kmax << '\n';
      return kDomain;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}

}  // namespace affine2::tools
