#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

#include "cdecomp/basecases.hpp"
#include "cdecomp/conditions.hpp"
#include "cdecomp/detach.hpp"
#include "cdecomp/refine.hpp"
#include "cdecomp/search.hpp"
#include "cdecomp/text_format.hpp"

namespace cdecomp::cli {

namespace {

// Malformed flag values; reported like CLI11 parse errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> lengths_flag(const std::string& text) {
  try {
    return parse_lengths(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--lengths: ") + e.what());
  }
}

std::vector<int> int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError(flag + ": bad integer '" + tok + "'");
    }
  }
  return out;
}

// "i=q1+q2+..." flags into 1-based class -> partition.
std::map<int, LengthPartition> split_flags(const std::vector<std::string>& flags) {
  std::map<int, LengthPartition> out;
  for (const auto& f : flags) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw UsageError("--split expects i=q1+q2+..., got '" + f + "'");
    const auto cls = int_list(f.substr(0, eq), "--split");
    std::string rhs = f.substr(eq + 1);
    std::replace(rhs.begin(), rhs.end(), '+', ',');
    if (cls.size() != 1 || rhs.empty()) throw UsageError("--split expects i=q1+q2+..., got '" + f + "'");
    if (out.count(cls[0])) throw UsageError("--split given twice for class " + std::to_string(cls[0]));
    out[cls[0]] = LengthPartition{int_list(rhs, "--split")};
  }
  return out;
}

std::vector<LengthPartition> partitions_for(const std::map<int, LengthPartition>& given, int count, int m) {
  for (const auto& [i, p] : given)
    if (i < 1 || i > count) throw UsageError("--split class " + std::to_string(i) + " is not governed");
  std::vector<LengthPartition> out;
  for (int i = 1; i <= count; ++i) {
    auto it = given.find(i);
    out.push_back(it == given.end() ? LengthPartition{{m}} : it->second);
  }
  return out;
}

CycleDecomposition read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_decomposition(in);
}

void emit(const std::string& path, std::ostream& out, const CycleDecomposition& d,
          const std::vector<std::pair<std::size_t, std::string>>& comments = {}) {
  if (path.empty()) {
    write_decomposition(out, d, comments);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  write_decomposition(file, d, comments);
  if (!file) throw std::runtime_error("error writing " + path);
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

void print_conditions(std::ostream& out, const ConditionReport& r) {
  for (const auto& item : r.items) {
    const char* verdict = !item.applicable ? "n/a " : item.pass ? "pass" : "FAIL";
    out << item.name << (item.name.size() < 3 ? "  " : " ") << verdict << "  " << item.inequality << "\n";
  }
  out << (r.passed() ? "necessary conditions hold (not known to be sufficient)\n" : "necessary conditions fail\n");
}

std::string header_text(const DecompositionContext& c) {
  return "lambda=" + std::to_string(c.lambda) + " m=" + std::to_string(c.m) + " n=" + std::to_string(c.n);
}

void require_header(const CycleDecomposition& d, const DecompositionContext& want, const std::string& what) {
  if (!(d.context == want)) {
    throw std::invalid_argument(what + " header says " + header_text(d.context) + ", expected " + header_text(want));
  }
}

std::vector<std::pair<std::size_t, std::string>> class_comments(const RefinedDecomposition& r) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t index = 0;
  for (std::size_t i = 0; i < r.subgraphs.size(); ++i) {
    out.emplace_back(index, "F_" + std::to_string(i + 1) + ": " + join(r.component_lengths(static_cast<int>(i) + 1)));
    index += r.subgraphs[i].size();
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle decompositions of complete equipartite multigraphs"};
  app.name("cdecomp");
  app.require_subcommand(1, 1);

  int lambda = 1, m = 1, n = 0, mu = 0, a = -1, b = -1, c = -1, N = 1;
  std::string lengths, input, output, order;
  std::vector<std::string> splits;
  bool uniform = false, check_steps = false;

  auto* check = app.add_subcommand("check", "Evaluate the necessary conditions for a length list");
  check->add_option("--lambda", lambda, "Edge multiplicity of lambda*K_{n x m}");
  check->add_option("--m", m, "Part size");
  check->add_option("--mu", mu, "Check mu*K_n instead");
  check->add_option("--n", n, "Number of parts (or vertices)")->required();
  check->add_option("--lengths", lengths, "Cycle lengths, e.g. 2^3,4")->required();

  auto* base = app.add_subcommand("base", "Closed-form decomposition of mu*K_n, n in {2,3,4}");
  base->add_option("--mu", mu, "Edge multiplicity")->required();
  base->add_option("--n", n, "Number of vertices")->required();
  base->add_option("--a", a, "Number of 2-cycles");
  base->add_option("--b", b, "Number of 3-cycles");
  base->add_option("--c", c, "Number of 4-cycles");
  base->add_option("--output", output, "Output file (default stdout)");

  auto* construct = app.add_subcommand("construct", "Detach a decomposition of (lambda*m)*K_n");
  construct->add_option("--lambda", lambda)->required();
  construct->add_option("--m", m)->required();
  construct->add_option("--n", n)->required();
  construct->add_option("--input", input, "Seed decomposition")->required();
  construct->add_option("--output", output, "Output file (default stdout)");
  construct->add_flag("--check-steps", check_steps, "Check the detachment invariants after every step");

  auto* refine = app.add_subcommand("refine", "Detach with prescribed component lengths");
  refine->add_option("--lambda", lambda);
  refine->add_option("--m", m)->required();
  refine->add_option("--n", n)->required();
  refine->add_option("--input", input, "Seed decomposition");
  refine->add_option("--order", order, "Cycle order, 1-based, comma separated (default: file order)");
  refine->add_option("--N", N, "Number of governed classes");
  refine->add_option("--split", splits, "i=q1+q2+...; classes without one stay whole (q = m)");
  refine->add_flag("--uniform", uniform, "Odd n, lambda = 1: govern one class per seed cycle");
  refine->add_option("--lengths", lengths, "With --uniform and no --input: search K_n for these lengths");
  refine->add_option("--output", output, "Output file (default stdout)");
  refine->add_flag("--check-steps", check_steps, "Check the stage invariants after every stage");

  auto* verify = app.add_subcommand("verify", "Check a decomposition of lambda*K_{n x m}");
  verify->add_option("--lambda", lambda)->required();
  verify->add_option("--m", m)->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--input", input)->required();
  verify->add_option("--lengths", lengths, "Also require this cycle-length multiset");

  auto* search = app.add_subcommand("search", "Exhaustive search on mu*K_n");
  search->add_option("--mu", mu)->required();
  search->add_option("--n", n)->required();
  search->add_option("--lengths", lengths)->required();
  search->add_option("--output", output, "Output file (default stdout)");

  std::vector<std::string> argv_store{"cdecomp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) {
      const auto ls = lengths_flag(lengths);
      const auto report = check->count("--mu") ? check_complete_conditions(mu, n, ls)
                                               : check_equipartite_conditions(lambda, m, n, ls);
      print_conditions(out, report);
      return report.passed() ? kExitOk : kExitFailure;
    }

    if (*base) {
      CycleDecomposition d;
      switch (n) {
        case 2:
          if (a >= 0 && a != mu / 2) throw std::invalid_argument("mu*K_2 has exactly floor(mu/2) 2-cycles");
          d = decompose_muK2(mu);
          break;
        case 3:
          if (a < 0 || b < 0) throw UsageError("base --n 3 needs --a and --b");
          d = decompose_muK3(mu, a, b);
          break;
        case 4:
          if (a < 0 || b < 0 || c < 0) throw UsageError("base --n 4 needs --a, --b and --c");
          d = decompose_muK4(mu, a, b, c);
          break;
        default: throw UsageError("base handles n = 2, 3, 4 only");
      }
      emit(output, out, d);
      return kExitOk;
    }

    if (*construct) {
      const auto seed = read_input(input);
      require_header(seed, {lambda * m, 1, n}, "seed");
      DetachOptions options;
      options.check_each_step = options.check_each_step || check_steps;
      emit(output, out, detach_full(lambda, m, n, seed, options));
      return kExitOk;
    }

    if (*refine) {
      const auto given = split_flags(splits);
      if (uniform) {
        if (lambda != 1) throw std::invalid_argument("--uniform needs lambda = 1");
        CycleDecomposition seed;
        if (!input.empty()) {
          seed = read_input(input);
          require_header(seed, {1, 1, n}, "seed");
        } else if (!lengths.empty()) {
          const auto ls = lengths_flag(lengths);
          if (n % 2 == 0) throw std::invalid_argument("n must be odd");
          if (std::any_of(ls.begin(), ls.end(), [&](int x) { return x < 3 || x > n; }) ||
              std::accumulate(ls.begin(), ls.end(), 0L) != static_cast<long>(n) * (n - 1) / 2) {
            throw std::invalid_argument("lengths must lie in [3, n] and sum to C(n,2)");
          }
          auto found = search_decomposition(1, n, ls);
          if (!found) throw std::runtime_error("no decomposition of K_n into these lengths");
          seed = *found;
        } else {
          throw UsageError("--uniform needs --input or --lengths");
        }
        const auto parts = partitions_for(given, static_cast<int>(seed.cycles.size()), m);
        const auto r = uniform_refined(m, seed, parts);
        emit(output, out, r.flatten(), class_comments(r));
        return kExitOk;
      }
      if (input.empty()) throw UsageError("refine needs --input (or --uniform)");
      OrderedCD ocd;
      ocd.cd = read_input(input);
      require_header(ocd.cd, {lambda * m, 1, n}, "seed");
      if (order.empty()) {
        ocd.order.resize(ocd.cd.cycles.size());
        std::iota(ocd.order.begin(), ocd.order.end(), 0);
      } else {
        for (int i : int_list(order, "--order")) ocd.order.push_back(i - 1);
      }
      ocd.N = N;
      RefineOptions options;
      options.check_each_stage = options.check_each_stage || check_steps;
      const auto r = refined_detach(lambda, m, n, ocd, partitions_for(given, N, m), options);
      emit(output, out, r.flatten(), class_comments(r));
      return kExitOk;
    }

    if (*verify) {
      const auto d = read_input(input);
      const DecompositionContext want{lambda, m, n};
      if (!(d.context == want)) {
        out << "FAIL header: file says " << header_text(d.context) << ", expected " << header_text(want) << "\n";
        return kExitFailure;
      }
      const Multigraph host = complete_equipartite(lambda, n, m);
      const auto report = lengths.empty() ? verify_decomposition(host, d)
                                          : verify_decomposition(host, d, lengths_flag(lengths));
      if (report.ok()) {
        out << "ok: " << d.cycles.size() << " cycles, lengths " << join(decomposition_lengths(d))
            << (d.one_factor ? ", plus a 1-factor" : "") << "\n";
        return kExitOk;
      }
      for (const auto& f : report.failures) out << "FAIL " << to_string(f.kind) << ": " << f.detail << "\n";
      return kExitFailure;
    }

    if (*search) {
      const auto found = search_decomposition(mu, n, lengths_flag(lengths));
      if (!found) {
        out << "none\n";
        return kExitFailure;
      }
      emit(output, out, *found);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace cdecomp::cli
