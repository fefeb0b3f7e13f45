#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "exlab/cli/report.hpp"
#include "exlab/numeric/real.hpp"

namespace exlab::cli {

enum class Command { kCount, kAlpha, kSimulate, kCompare };

struct ExperimentSpec {
  Command command = Command::kCount;
  std::optional<long> n, l, l_max, k, m;
  long replicas = 100;
  std::uint64_t seed = 1;
  mpfr_prec_t precision_bits = 128;
  std::string format = "csv";
  std::optional<std::string> out;
  std::string engine = "exact";
  bool compare_bcm = false;
  unsigned threads = 0;  // simulation workers, 0: hardware concurrency
};

/// Largest n for which reports include exact transition counts.
inline constexpr long kExactMaxN = 400;
/// Largest n for which alpha --engine approx lists every k.
inline constexpr long kApproxRowsMaxN = 10'000;

/// CSV columns per command; JSON uses the same keys.
inline constexpr const char* kCountColumns = "k,m,l,connected_count,c_bcm,ratio";
inline constexpr const char* kAlphaColumns = "engine,n,l,k,value,decimal,error_order";
inline constexpr const char* kSimulateColumns =
    "n,l,replicas,seed,transitions_mean,transitions_stderr,V_mean,V_stderr,V_max_mean,V_max_stderr";
inline constexpr const char* kCompareColumns =
    "n,l,exact,approx,asymptotic_total,sim_mean,sim_stderr,ratio_sim_exact,ratio_approx_exact,"
    "ratio_sim_asymptotic,ratio_approx_asymptotic";

/// Validates the spec and runs it. Throws DomainError for invalid arguments,
/// ResourceError when a table or simulation would exceed the built-in limits,
/// NumericalError when an evaluation fails.
Report run(const ExperimentSpec& spec);

Report cmd_count(const ExperimentSpec& spec);
Report cmd_alpha(const ExperimentSpec& spec);
Report cmd_simulate(const ExperimentSpec& spec);
Report cmd_compare(const ExperimentSpec& spec);

/// Report rendered in spec.format ("csv" or "json").
std::string render(const Report& report, const std::string& format);

}  // namespace exlab::cli
