#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "exlab/cli/commands.hpp"
#include "exlab/errors.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kResource = 3;
constexpr int kNumerical = 4;

void add_common(CLI::App& app, exlab::cli::ExperimentSpec& spec) {
  app.add_option("--precision-bits", spec.precision_bits, "Working precision in bits")
      ->capture_default_str();
  app.add_option("--format", spec.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", spec.out, "Write the report to this file instead of stdout");
}

void add_range(CLI::App& app, exlab::cli::ExperimentSpec& spec) {
  app.add_option("--l", spec.l, "Excess l (first of the range)");
  app.add_option("--l-max", spec.l_max, "Last excess of the range (default: --l)");
}

void add_simulation(CLI::App& app, exlab::cli::ExperimentSpec& spec) {
  app.add_option("--replicas", spec.replicas, "Independent runs")->capture_default_str();
  app.add_option("--seed", spec.seed, "Base seed; replica i uses mix64(seed ^ 0x9E3779B97F4A7C15*i)")
      ->capture_default_str();
  app.add_option("--threads", spec.threads, "Worker threads (0: all cores); output does not depend on it")
      ->capture_default_str();
}

std::string columns_footer(const char* columns) {
  return std::string("CSV columns: ") + columns +
         "\nJSON: array of objects with the same keys. Exact rationals are written p/q.";
}

}  // namespace

int main(int argc, char** argv) {
  using exlab::cli::Command;
  exlab::cli::ExperimentSpec spec;

  CLI::App app{"Exact, asymptotic and simulated transition counts for the excess of random graph components"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Connected graph counts c(k, m), optionally against the BCM estimate");
  count->add_option("--k", spec.k, "Vertices")->required();
  count->add_option("--m", spec.m, "Edges");
  add_range(*count, spec);
  count->add_flag("--compare-bcm", spec.compare_bcm, "Add the BCM estimate and its ratio to the exact count");
  add_common(*count, spec);
  count->footer(columns_footer(exlab::cli::kCountColumns));

  auto* alpha = app.add_subcommand("alpha", "Expected l -> l+1 transition counts, per component order and in total");
  alpha->add_option("--n", spec.n, "Vertices of the graph process");
  add_range(*alpha, spec);
  alpha->add_option("--k", spec.k, "Restrict per-order rows to this component order");
  alpha->add_option("--engine", spec.engine, "exact | approx | asymptotic-total")
      ->check(CLI::IsMember({"exact", "approx", "asymptotic-total"}))
      ->capture_default_str();
  add_common(*alpha, spec);
  alpha->footer(columns_footer(exlab::cli::kAlphaColumns) +
                "\nexact requires n <= " + std::to_string(exlab::cli::kExactMaxN) +
                "; approx lists every k only for n <= " + std::to_string(exlab::cli::kApproxRowsMaxN) + ".");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo replay of the random graph process");
  simulate->add_option("--n", spec.n, "Vertices")->required();
  add_range(*simulate, spec);
  add_simulation(*simulate, spec);
  add_common(*simulate, spec);
  simulate->footer(columns_footer(exlab::cli::kSimulateColumns));

  auto* compare = app.add_subcommand("compare", "Exact, approximate, asymptotic and simulated totals side by side");
  compare->add_option("--n", spec.n, "Vertices")->required();
  add_range(*compare, spec);
  add_simulation(*compare, spec);
  add_common(*compare, spec);
  compare->footer(columns_footer(exlab::cli::kCompareColumns) +
                  "\nexact is filled for n <= " + std::to_string(exlab::cli::kExactMaxN) +
                  ", approx and asymptotic_total for l >= 1.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (count->parsed()) spec.command = Command::kCount;
  if (alpha->parsed()) spec.command = Command::kAlpha;
  if (simulate->parsed()) spec.command = Command::kSimulate;
  if (compare->parsed()) spec.command = Command::kCompare;

  try {
    const std::string text = exlab::cli::render(exlab::cli::run(spec), spec.format);
    if (spec.out) {
      std::ofstream file(*spec.out, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open " << *spec.out << " for writing\n";
        return kResource;
      }
      file << text;
    } else {
      std::cout << text;
    }
  } catch (const exlab::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const exlab::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kResource;
  } catch (const exlab::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  }
  return 0;
}
