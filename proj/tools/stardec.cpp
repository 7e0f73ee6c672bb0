// Command-line front end: solve with algorithm selection, verify a
// decomposition against an instance, generate instances (random or by the
// hardness reductions), and print exact edge expansion.

#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stardec/expansion.hpp"
#include "stardec/io.hpp"
#include "stardec/reductions.hpp"
#include "stardec/solve.hpp"

namespace {

using namespace stardec;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitParse = 3;
constexpr int kExitWrongCase = 4;

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stoll(token));
  }
  return out;
}

int answer_exit(Answer a) {
  switch (a) {
    case Answer::Yes: return kExitYes;
    case Answer::No: return kExitNo;
    default: return kExitUnknown;
  }
}

struct SolveArgs {
  std::vector<std::string> files;
  std::string algorithm = "auto";
  long long budget_ms = 120000;
  long long max_nodes = 200'000'000;
  long long threshold = 0;
  std::string cover_file;
  std::string spec_s, spec_a;
  std::string output;
  int jobs = 1;
};

int run_solve(const SolveArgs& args) {
  SolveOptions opts;
  opts.algorithm = parse_algorithm(args.algorithm);
  opts.budget.max_millis = args.budget_ms;
  opts.budget.max_nodes = args.max_nodes;
  if (args.threshold > 0) opts.threshold = args.threshold;
  if (!args.cover_file.empty()) {
    std::vector<int> cover;
    std::istringstream in(read_file(args.cover_file));
    long long v;
    while (in >> v) cover.push_back(static_cast<int>(v));
    opts.cover = cover;
  }
  std::vector<long long> cli_s = parse_int_list(args.spec_s);
  std::vector<long long> cli_a = parse_int_list(args.spec_a);

  auto solve_one = [&](const std::string& path) -> std::pair<int, std::string> {
    Instance inst = load_instance(read_file(path), cli_s, cli_a);
    SolveReport rep = solve(inst, opts);
    return {answer_exit(rep.answer), dump_report(rep, &inst)};
  };

  if (args.files.size() == 1) {
    auto [code, report] = solve_one(args.files[0]);
    if (args.output.empty())
      std::cout << report;
    else
      write_file(args.output, report);
    return code;
  }

  // Batch mode: one report line per file; --jobs parallelizes across files.
  std::vector<std::future<std::pair<int, std::string>>> tasks;
  int jobs = std::max(1, args.jobs);
  std::ostringstream out;
  for (size_t i = 0; i < args.files.size(); i += jobs) {
    tasks.clear();
    size_t hi = std::min(args.files.size(), i + jobs);
    for (size_t k = i; k < hi; ++k)
      tasks.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 solve_one, args.files[k]));
    for (size_t k = i; k < hi; ++k) {
      auto [code, report] = tasks[k - i].get();
      nlohmann::json line = nlohmann::json::parse(report);
      line["file"] = args.files[k];
      out << line.dump() << "\n";
    }
  }
  if (args.output.empty())
    std::cout << out.str();
  else
    write_file(args.output, out.str());
  return kExitYes;
}

struct GenerateArgs {
  std::string kind = "gnm";
  long long n = 8, m = 10, a_side = 3, b_side = 4, children = 4, max_leaves = 3, max_s = 4;
  std::string weights, counts;
  long long bins = 2, bin_size = 2, k = 1;
  std::string graph_file;
  uint64_t seed = 1;
  std::string output;
};

int run_generate(const GenerateArgs& args) {
  nlohmann::json j;
  if (args.kind == "binpack_kmn" || args.kind == "binpack_tree") {
    BinPackingInstance bp;
    bp.weights = parse_int_list(args.weights);
    bp.counts = parse_int_list(args.counts);
    bp.bins = args.bins;
    bp.bin_size = args.bin_size;
    GeneratedInstance gi =
        args.kind == "binpack_kmn" ? binpacking_to_kmn(bp) : binpacking_to_tree(bp);
    j = instance_to_json(gi.instance);
    if (gi.expected) j["expected"] = *gi.expected ? "YES" : "NO";
  } else if (args.kind == "indepset") {
    if (args.graph_file.empty()) throw parse_error("indepset generator needs --graph");
    Graph g = load_graph(read_file(args.graph_file));
    GeneratedInstance gi = indepset_to_stardec(g, args.k);
    j = instance_to_json(gi.instance);
    if (gi.expected) j["expected"] = *gi.expected ? "YES" : "NO";
  } else {
    std::map<std::string, long long> params{{"n", args.n},       {"m", args.m},
                                            {"a", args.a_side},  {"b", args.b_side},
                                            {"children", args.children},
                                            {"max_leaves", args.max_leaves},
                                            {"max_s", args.max_s}};
    Instance inst = gen_random(args.kind, params, args.seed);
    j = instance_to_json(inst);
  }
  std::string text = j.dump(2) + "\n";
  if (args.output.empty())
    std::cout << text;
  else
    write_file(args.output, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star decomposition solver suite"};
  app.require_subcommand(1);

  SolveArgs sargs;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Decide an instance and print a report");
  solve_cmd->add_option("files", sargs.files, "instance file(s)")->required();
  solve_cmd->add_option("--algorithm", sargs.algorithm,
                        "auto|oracle|poly|tarsi|ilp1|ilp2|vcxp|ndfpt");
  solve_cmd->add_option("--budget-ms", sargs.budget_ms, "wall-clock budget per solve");
  solve_cmd->add_option("--max-nodes", sargs.max_nodes, "search node budget");
  solve_cmd->add_option("--threshold", sargs.threshold, "ndfpt class-size threshold");
  solve_cmd->add_option("--cover", sargs.cover_file, "file with an explicit vertex cover");
  solve_cmd->add_option("--s", sargs.spec_s, "star lengths for edge-list input, e.g. 1,3");
  solve_cmd->add_option("--a", sargs.spec_a, "star counts for edge-list input");
  solve_cmd->add_option("--output", sargs.output, "write the report here instead of stdout");
  solve_cmd->add_option("--jobs", sargs.jobs, "parallel solves in batch mode");

  std::string verify_instance, verify_dec;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a decomposition file");
  verify_cmd->add_option("instance", verify_instance, "instance file")->required();
  verify_cmd->add_option("decomposition", verify_dec, "decomposition file")->required();

  GenerateArgs gargs;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Emit an instance");
  gen_cmd->add_option("--kind", gargs.kind,
                      "gnm|complete|complete_bipartite|tree_depth_2|cubic|binpack_kmn|"
                      "binpack_tree|indepset");
  gen_cmd->add_option("--n", gargs.n, "vertex count");
  gen_cmd->add_option("--m", gargs.m, "edge count (gnm)");
  gen_cmd->add_option("--a-side", gargs.a_side, "first part size");
  gen_cmd->add_option("--b-side", gargs.b_side, "second part size");
  gen_cmd->add_option("--children", gargs.children, "root degree (tree_depth_2)");
  gen_cmd->add_option("--max-leaves", gargs.max_leaves, "max leaves per child");
  gen_cmd->add_option("--max-s", gargs.max_s, "max star length in the random spec");
  gen_cmd->add_option("--weights", gargs.weights, "bin packing weights, e.g. 1,2");
  gen_cmd->add_option("--counts", gargs.counts, "bin packing item counts");
  gen_cmd->add_option("--bins", gargs.bins, "bin count");
  gen_cmd->add_option("--bin-size", gargs.bin_size, "bin capacity");
  gen_cmd->add_option("--k", gargs.k, "independent-set size");
  gen_cmd->add_option("--graph", gargs.graph_file, "cubic source graph (indepset)");
  gen_cmd->add_option("--seed", gargs.seed, "random seed");
  gen_cmd->add_option("--output", gargs.output, "write the instance here");

  std::string expansion_file;
  CLI::App* exp_cmd = app.add_subcommand("expansion", "Print exact edge expansion");
  exp_cmd->add_option("graph", expansion_file, "graph or instance file")->required();

  std::string model_file, model_kind = "ilp1", model_cover;
  CLI::App* model_cmd = app.add_subcommand("model", "Print a feasibility model as LP text");
  model_cmd->add_option("instance", model_file, "instance file")->required();
  model_cmd->add_option("--kind", model_kind, "ilp1|ilp2");
  model_cmd->add_option("--cover", model_cover, "explicit vertex cover file (ilp2)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return run_solve(sargs);
    if (*verify_cmd) {
      Instance inst = load_instance(read_file(verify_instance));
      StarDecomposition dec = load_decomposition(read_file(verify_dec));
      if (auto why = verify_explain(inst, dec)) {
        std::cerr << "invalid: " << *why << "\n";
        return kExitNo;
      }
      std::cout << "valid\n";
      return kExitYes;
    }
    if (*gen_cmd) return run_generate(gargs);
    if (*exp_cmd) {
      Graph g = load_graph(read_file(expansion_file));
      Rational phi = edge_expansion(g);
      std::cout << phi.str() << "\n";
      return 0;
    }
    if (*model_cmd) {
      Instance inst = load_instance(read_file(model_file));
      if (model_kind == "ilp1") {
        std::cout << to_lp_format(build_ilp1(inst).model);
      } else if (model_kind == "ilp2") {
        std::vector<int> cover;
        if (!model_cover.empty()) {
          std::istringstream in(read_file(model_cover));
          long long v;
          while (in >> v) cover.push_back(static_cast<int>(v));
        } else {
          auto found = min_vertex_cover(inst.graph);
          if (!found) throw wrong_case_error("no vertex cover within the cap");
          cover = *found;
        }
        std::cout << to_lp_format(build_ilp2(inst, cover).model);
      } else {
        throw parse_error("model kind must be ilp1 or ilp2");
      }
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const wrong_case_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitWrongCase;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitWrongCase;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return kExitParse;
}
