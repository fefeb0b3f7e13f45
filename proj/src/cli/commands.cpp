#include "exlab/cli/commands.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "exlab/asymptotics/estimates.hpp"
#include "exlab/errors.hpp"
#include "exlab/exact/alpha.hpp"
#include "exlab/exact/count_table.hpp"
#include "exlab/laplace/saddle.hpp"
#include "exlab/sim/aggregate.hpp"

namespace exlab::cli {

namespace {

constexpr long kCountMaxK = 2048;
constexpr long kCountMaxExcess = 32;
constexpr long kSimMaxN = 50'000'000;

std::vector<std::string> split_columns(const char* spec) {
  std::vector<std::string> out;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  return out;
}

long require(const std::optional<long>& v, const char* flag) {
  if (!v) throw DomainError(std::string("missing required flag ") + flag);
  return *v;
}

struct LRange {
  long lo, hi;
};

LRange l_range(const ExperimentSpec& spec) {
  const long lo = require(spec.l, "--l");
  const long hi = spec.l_max.value_or(lo);
  if (lo < -1) throw DomainError("--l must be >= -1");
  if (hi < lo) throw DomainError("--l-max must be >= --l");
  return {lo, hi};
}

std::string real_cell(const Real& x, const ExperimentSpec& spec) {
  return format_real(x, digits_for_bits(spec.precision_bits));
}

std::string log_real_cell(const LogReal& x, const ExperimentSpec& spec) {
  return real_cell(x.to_real(), spec);
}

std::string double_cell(double x, const ExperimentSpec& spec) {
  return format_double(x, digits_for_bits(spec.precision_bits));
}

std::string ratio_cell(std::optional<double> num, std::optional<double> den, const ExperimentSpec& spec) {
  if (!num || !den || *den == 0.0) return "";
  return double_cell(*num / *den, spec);
}

exact::ConnectedCountTable table_for(long max_k, long max_excess) {
  exact::TableLimits limits;
  limits.max_k = static_cast<int>(std::max(1L, max_k));
  limits.max_excess = static_cast<int>(std::max(0L, max_excess));
  limits.dense_max_k = static_cast<int>(std::min<long>(limits.dense_max_k, limits.max_k));
  return exact::ConnectedCountTable(limits);
}

/// Sum of alpha_approx over k = 1..n, i.e. (ρ_l/2) n^{-(l+1)} times the power sum.
LogReal approx_total(long n, long l, mpfr_prec_t bits) {
  const LogReal ps = laplace::power_sum(laplace::SaddleProblem(l, n, bits));
  const Real log_den = Real(l + 1, bits) * log(Real(n, bits)) + log(Real(2L, bits));
  return asymptotics::rho(l, asymptotics::RhoMode::kLeading, bits).value * ps /
         LogReal::from_log(log_den);
}

void check_common(const ExperimentSpec& spec) {
  if (spec.precision_bits < 32 || spec.precision_bits > 4096)
    throw DomainError("--precision-bits must lie in [32, 4096]");
  if (spec.format != "csv" && spec.format != "json") throw DomainError("--format must be csv or json");
}

}  // namespace

Report cmd_count(const ExperimentSpec& spec) {
  check_common(spec);
  const long k = require(spec.k, "--k");
  if (k < 1) throw DomainError("--k must be >= 1");
  if (k > kCountMaxK) throw ResourceError("--k exceeds the table limit " + std::to_string(kCountMaxK));

  std::vector<long> ms;
  if (spec.m) {
    if (spec.l) throw DomainError("--m and --l are mutually exclusive");
    if (*spec.m < 0) throw DomainError("--m must be >= 0");
    ms.push_back(*spec.m);
  } else if (spec.l) {
    const auto [lo, hi] = l_range(spec);
    for (long l = lo; l <= hi; ++l) ms.push_back(k + l);
  } else if (k <= exact::TableLimits{}.dense_max_k) {
    for (long m = k - 1; m <= k * (k - 1) / 2; ++m) ms.push_back(m);
  } else {
    throw DomainError("--m or --l is required for k > " + std::to_string(exact::TableLimits{}.dense_max_k));
  }

  long max_excess = 0;
  for (const long m : ms)
    if (m <= k * (k - 1) / 2) max_excess = std::max(max_excess, m - k);
  const bool dense = k <= exact::TableLimits{}.dense_max_k;
  if (!dense && max_excess > kCountMaxExcess)
    throw ResourceError("excess " + std::to_string(max_excess) + " exceeds the table limit " +
                        std::to_string(kCountMaxExcess));
  const auto table = table_for(k, dense ? 0 : max_excess);

  Report report(split_columns(kCountColumns));
  for (const long m : ms) {
    const exact::Count c = table.count(k, m);
    const long l = m - k;
    std::string bcm, bcm_ratio;
    if (spec.compare_bcm && l >= 1 && k >= 2) {
      const auto est = asymptotics::c_bcm(k, l, 3, spec.precision_bits);
      bcm = log_real_cell(est.value, spec);
      if (c > 0) bcm_ratio = real_cell(ratio(est.value, LogReal::from_real(Real(c, spec.precision_bits))), spec);
    }
    report.add({{"k", std::to_string(k)},
                {"m", std::to_string(m)},
                {"l", std::to_string(l)},
                {"connected_count", format_integer(c)},
                {"c_bcm", bcm},
                {"ratio", bcm_ratio}});
  }
  return report;
}

Report cmd_alpha(const ExperimentSpec& spec) {
  check_common(spec);
  const auto [lo, hi] = l_range(spec);
  const auto bits = spec.precision_bits;
  Report report(split_columns(kAlphaColumns));

  if (spec.engine == "asymptotic-total") {
    if (lo < 1) throw DomainError("asymptotic-total requires --l >= 1");
    for (long l = lo; l <= hi; ++l) {
      const auto est = asymptotics::alpha_total_asymptotic(l, bits);
      const std::string v = log_real_cell(est.value, spec);
      report.add({{"engine", spec.engine}, {"l", std::to_string(l)}, {"k", "total"}, {"value", v},
                  {"decimal", v}, {"error_order", std::string(est.tag())}});
    }
    return report;
  }

  const long n = require(spec.n, "--n");
  if (n < 1) throw DomainError("--n must be >= 1");
  if (spec.k && (*spec.k < 1 || *spec.k > n)) throw DomainError("--k must lie in [1, n]");

  if (spec.engine == "exact") {
    if (n > kExactMaxN) throw ResourceError("exact engine is limited to n <= " + std::to_string(kExactMaxN));
    const auto table = table_for(n, hi);
    for (long l = lo; l <= hi; ++l) {
      const auto li = static_cast<int>(l);
      auto emit = [&](const std::string& k_cell, const exact::ExactRational& q) {
        report.add({{"engine", spec.engine}, {"n", std::to_string(n)}, {"l", std::to_string(l)},
                    {"k", k_cell}, {"value", format_rational(q)},
                    {"decimal", real_cell(Real(q, bits), spec)},
                    {"error_order", std::string(asymptotics::error_order_tag(asymptotics::ErrorOrder::kExact))}});
      };
      if (spec.k) {
        emit(std::to_string(*spec.k), exact::alpha_exact(table, n, li, *spec.k));
        emit("total", exact::alpha_total_exact(table, n, li));
      } else {
        const auto profile = exact::alpha_profile(table, n, li);
        exact::ExactRational total = 0;
        for (std::size_t i = 0; i < profile.size(); ++i) {
          emit(std::to_string(i + 1), profile[i]);
          total += profile[i];
        }
        emit("total", total);
      }
    }
    return report;
  }

  if (spec.engine == "approx") {
    if (lo < 1) throw DomainError("approx engine requires --l >= 1");
    for (long l = lo; l <= hi; ++l) {
      std::vector<long> ks;
      if (spec.k) {
        ks.push_back(*spec.k);
      } else if (n <= kApproxRowsMaxN) {
        for (long k = 1; k <= n; ++k) ks.push_back(k);
      }
      for (const long k : ks) {
        const auto est = asymptotics::alpha_approx(n, l, k, bits);
        const std::string v = log_real_cell(est.value, spec);
        report.add({{"engine", spec.engine}, {"n", std::to_string(n)}, {"l", std::to_string(l)},
                    {"k", std::to_string(k)}, {"value", v}, {"decimal", v},
                    {"error_order", std::string(est.tag())}});
      }
      const std::string v = log_real_cell(approx_total(n, l, bits), spec);
      report.add({{"engine", spec.engine}, {"n", std::to_string(n)}, {"l", std::to_string(l)},
                  {"k", "total"}, {"value", v}, {"decimal", v},
                  {"error_order", std::string(asymptotics::error_order_tag(asymptotics::ErrorOrder::kOneOverL))}});
    }
    return report;
  }

  throw DomainError("--engine must be exact, approx or asymptotic-total");
}

namespace {

sim::AggregateStats simulate(const ExperimentSpec& spec, long n, LRange range) {
  if (n < 1) throw DomainError("--n must be >= 1");
  if (n > kSimMaxN) throw ResourceError("simulation is limited to n <= " + std::to_string(kSimMaxN));
  if (spec.replicas < 1) throw DomainError("--replicas must be >= 1");
  sim::AggregateConfig cfg;
  cfg.n = static_cast<sim::Vertex>(n);
  cfg.base_seed = spec.seed;
  cfg.replicas = spec.replicas;
  for (long l = range.lo; l <= range.hi; ++l) cfg.tracked.insert(l);
  cfg.l_stop = range.hi;
  cfg.threads = spec.threads;
  return sim::aggregate(cfg);
}

}  // namespace

Report cmd_simulate(const ExperimentSpec& spec) {
  check_common(spec);
  const long n = require(spec.n, "--n");
  const LRange range = l_range(spec);
  const auto agg = simulate(spec, n, range);
  Report report(split_columns(kSimulateColumns));
  for (long l = range.lo; l <= range.hi; ++l) {
    const auto& t = agg.transitions.at(l);
    const auto& v = agg.V.at(l);
    const auto& vm = agg.V_max.at(l);
    report.add({{"n", std::to_string(n)},
                {"l", std::to_string(l)},
                {"replicas", std::to_string(spec.replicas)},
                {"seed", std::to_string(spec.seed)},
                {"transitions_mean", double_cell(t.mean, spec)},
                {"transitions_stderr", double_cell(t.stderr_, spec)},
                {"V_mean", double_cell(v.mean, spec)},
                {"V_stderr", double_cell(v.stderr_, spec)},
                {"V_max_mean", double_cell(vm.mean, spec)},
                {"V_max_stderr", double_cell(vm.stderr_, spec)}});
  }
  return report;
}

Report cmd_compare(const ExperimentSpec& spec) {
  check_common(spec);
  const long n = require(spec.n, "--n");
  const LRange range = l_range(spec);
  const auto bits = spec.precision_bits;
  const auto agg = simulate(spec, n, range);

  std::optional<exact::ConnectedCountTable> table;
  if (n <= kExactMaxN) table.emplace(table_for(n, range.hi));

  Report report(split_columns(kCompareColumns));
  for (long l = range.lo; l <= range.hi; ++l) {
    std::optional<double> exact_v, approx_v, asym_v;
    std::string exact_s, approx_s, asym_s;
    if (table) {
      const Real q(exact::alpha_total_exact(*table, n, static_cast<int>(l)), bits);
      exact_s = real_cell(q, spec);
      exact_v = q.to_double();
    }
    if (l >= 1) {
      const LogReal a = approx_total(n, l, bits);
      approx_s = log_real_cell(a, spec);
      approx_v = a.to_double();
      const auto t = asymptotics::alpha_total_asymptotic(l, bits);
      asym_s = log_real_cell(t.value, spec);
      asym_v = t.to_double();
    }
    const auto& sim_t = agg.transitions.at(l);
    report.add({{"n", std::to_string(n)},
                {"l", std::to_string(l)},
                {"exact", exact_s},
                {"approx", approx_s},
                {"asymptotic_total", asym_s},
                {"sim_mean", double_cell(sim_t.mean, spec)},
                {"sim_stderr", double_cell(sim_t.stderr_, spec)},
                {"ratio_sim_exact", ratio_cell(sim_t.mean, exact_v, spec)},
                {"ratio_approx_exact", ratio_cell(approx_v, exact_v, spec)},
                {"ratio_sim_asymptotic", ratio_cell(sim_t.mean, asym_v, spec)},
                {"ratio_approx_asymptotic", ratio_cell(approx_v, asym_v, spec)}});
  }
  return report;
}

Report run(const ExperimentSpec& spec) {
  switch (spec.command) {
    case Command::kCount:
      return cmd_count(spec);
    case Command::kAlpha:
      return cmd_alpha(spec);
    case Command::kSimulate:
      return cmd_simulate(spec);
    case Command::kCompare:
      return cmd_compare(spec);
  }
  throw DomainError("unknown command");
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return to_json(report);
  if (format == "csv") return to_csv(report);
  throw DomainError("--format must be csv or json");
}

}  // namespace exlab::cli
