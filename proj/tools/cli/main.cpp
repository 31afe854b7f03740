// ulat: command-line front end for the lattice uniformity laboratory.
//
// Exit codes: 0 when everything passes, 1 when a check fails, 2 on usage
// errors (bad flags, unknown suites, unreadable files).

#include "ulat/lab/config.hpp"
#include "ulat/lab/examples.hpp"
#include "ulat/lab/report.hpp"
#include "ulat/lab/suites.hpp"
#include "ulat/lab/witness_file.hpp"
#include "ulat/lattice_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ulat::lab::ConfigError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct SuiteRunOptions {
  std::vector<std::string> names;
  std::string config_file;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> horizon;
  std::string eps_grid;
  std::string format;
  bool timing = false;
  std::string output;
};

int run_suites_command(const SuiteRunOptions& opt) {
  using namespace ulat::lab;
  SuiteConfig config;
  if (!opt.config_file.empty()) apply_config(config, parse_config_text(read_file(opt.config_file)));
  apply_environment(config, process_env);
  if (!opt.names.empty()) config.suites = opt.names;
  if (opt.seed) config.seed = *opt.seed;
  if (opt.horizon) {
    if (*opt.horizon == 0) throw ConfigError("--horizon must be positive");
    config.horizon = *opt.horizon;
  }
  if (!opt.eps_grid.empty()) config.eps_grid = parse_eps_grid(opt.eps_grid);
  if (!opt.format.empty()) config.format = parse_format(opt.format);
  if (opt.timing) config.timing = true;
  if (config.suites.empty()) throw ConfigError("no suites given (name them, use 'all', or set suites in the config)");

  const Report report = run_suites(config);
  const std::string doc = emit_report(report, config.format);
  if (opt.output.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + opt.output + "'");
    out << doc;
  }
  return report.all_pass() ? kPass : kFail;
}

int lattice_check_command(const std::string& path) {
  const std::string text = read_file(path);
  try {
    const auto L = ulat::load_finite_lattice(text);
    const auto dist = ulat::check_distributive(L);
    std::cout << "lattice '" << L.name() << "': " << L.size() << " elements, " << L.covers().size() << " covers\n";
    std::cout << "bounded: " << (L.info().bounded ? "yes" : "no");
    if (L.bottom() && L.top()) std::cout << " (bottom " << L.element_name(*L.bottom()) << ", top " << L.element_name(*L.top()) << ")";
    std::cout << "\ndistributive: " << (dist.distributive ? "yes" : "no");
    if (dist.counterexample) {
      const auto& t = *dist.counterexample;
      std::cout << " (x=" << L.element_name(t[0]) << ", y=" << L.element_name(t[1]) << ", z=" << L.element_name(t[2])
                << ")";
    }
    std::cout << "\n";
    return kPass;
  } catch (const ulat::NotALatticeError& e) {
    std::cout << "not a lattice: " << e.what() << "\n";
    return kFail;
  }
}

int example_command(const std::string& name) {
  const auto out = ulat::lab::run_example(name);
  std::cout << out.text;
  std::cout << (out.reproduced ? "\nreproduced\n" : "\nNOT reproduced\n");
  return out.reproduced ? kPass : kFail;
}

int witness_check_command(const std::string& path, std::optional<std::size_t> horizon) {
  const auto r = ulat::lab::check_witness_document(read_file(path), horizon);
  std::cout << r.carrier << " " << r.mode << ": " << r.verdict << "\n";
  return r.verdict.accepted() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact laboratory for lattice uniformities and unbounded convergence"};
  app.require_subcommand(1);

  auto* suite = app.add_subcommand("suite", "Run or list verification suites");
  suite->require_subcommand(1);
  SuiteRunOptions run_opt;
  auto* run = suite->add_subcommand("run", "Run named suites ('all' for every suite)");
  run->add_option("names", run_opt.names, "Suite names");
  run->add_option("--config", run_opt.config_file, "key = value config file (seed, horizon, eps-grid, format, timing, suites)");
  run->add_option("--seed", run_opt.seed, "Seed for randomized inputs");
  run->add_option("--horizon", run_opt.horizon, "Horizon for certificate checks");
  run->add_option("--eps-grid", run_opt.eps_grid, "Tolerances, e.g. \"1,1/2,1/4\"");
  run->add_option("--format", run_opt.format, "json or md");
  run->add_flag("--timing", run_opt.timing, "Include elapsed time (makes output non-deterministic)");
  run->add_option("-o,--output", run_opt.output, "Write the report to a file");
  auto* list = suite->add_subcommand("list", "List suite names and anchors");

  auto* lattice = app.add_subcommand("lattice", "Finite lattice documents");
  lattice->require_subcommand(1);
  std::string lattice_file;
  auto* check = lattice->add_subcommand("check", "Validate a {\"elements\", \"covers\"} document");
  check->add_option("file", lattice_file, "JSON file")->required();

  std::string example_name;
  auto* example = app.add_subcommand("example", "Reproduce a counterexample");
  example->add_option("name", example_name, "ex-r, ex or o1o2")->required()->check(CLI::IsMember(ulat::lab::example_names()));

  auto* witness = app.add_subcommand("witness", "Order-convergence witness documents");
  witness->require_subcommand(1);
  std::string witness_file;
  std::optional<std::size_t> witness_horizon;
  auto* wcheck = witness->add_subcommand("check", "Check a witness document");
  wcheck->add_option("file", witness_file, "JSON file")->required();
  wcheck->add_option("--horizon", witness_horizon, "Override the document's horizon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*run) return run_suites_command(run_opt);
    if (*list) {
      for (const auto& s : ulat::lab::suite_registry()) std::cout << s.name << "\t" << s.anchor << "\n";
      return kPass;
    }
    if (*check) return lattice_check_command(lattice_file);
    if (*example) return example_command(example_name);
    if (*wcheck) return witness_check_command(witness_file, witness_horizon);
  } catch (const ulat::lab::UnknownSuiteError& e) {
    std::cerr << "ulat: " << e.what() << "\n";
    return kUsage;
  } catch (const ulat::lab::ConfigError& e) {
    std::cerr << "ulat: " << e.what() << "\n";
    return kUsage;
  } catch (const ulat::lab::WitnessFileError& e) {
    std::cerr << "ulat: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ulat: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "ulat: internal error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
