#ifndef MULTLAB_VERIFY_HPP
#define MULTLAB_VERIFY_HPP

#include "multlab/bigint.hpp"
#include "multlab/buchsbaum_rim.hpp"
#include "multlab/ideal.hpp"
#include "multlab/multiplicity.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace multlab {

/// Seeded description of a random corpus.  Identical configs produce
/// identical corpora and identical reports.
struct CorpusConfig {
  std::uint64_t seed = 42;
  int d = 4;
  /// Tuple size for checks that take a variable number of ideals
  /// (direct-sum rank, number of ideals in the two-variable bound).
  int r = 2;
  int max_pure_power = 3;
  int extra_gens = 2;
  int instances = 10;
  /// Check names to run; empty means every check whose hypotheses fit d.
  std::vector<std::string> checks;
  /// Allow the strict bounds below their proven dimension range.
  bool exploration = false;
  /// Also re-run each inequality on the integral closures of its inputs.
  bool closures = false;
  int jobs = 1;

  void validate() const;
};

/// Flat `key = value` text, one entry per line, `;` or `#` comments.
/// Keys mirror the CorpusConfig fields (`B` is accepted for
/// max_pure_power); `checks` is a comma-separated list or `all`.
CorpusConfig parse_config(std::istream& in);
CorpusConfig load_config(const std::string& path);

/// Independent stream for instance `index` of the corpus.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index);

/// Pure powers x_i^{k_i}, k_i uniform in [1, B], then `extra_gens`
/// monomials uniform in the box prod [0, k_i) minus the origin.
MonomialIdeal gen_random_mprimary(const CorpusConfig& config, std::mt19937_64& rng);

enum class Relation { less, less_equal, equal };

std::string to_string(Relation relation);

struct InequalityReport {
  std::string check;
  std::vector<std::string> instance;
  std::uint64_t seed = 0;
  std::int64_t index = -1;
  BigInt lhs;
  BigInt rhs;
  Relation relation = Relation::less_equal;
  bool holds = false;
  /// rhs - lhs.
  BigInt slack;
  std::vector<std::pair<std::string, BigInt>> terms;
  /// Set when the engine failed on this instance; holds is then false.
  std::optional<std::string> error;

  /// Fills holds and slack from lhs, rhs and relation.
  void settle();
};

/// One JSON object per report, fields in a fixed order, integers as
/// decimal strings.
std::string to_json_line(const InequalityReport& report);

// Individual checks.  Each throws AlgebraError when its hypotheses fail.
InequalityReport check_lech_classical(const MonomialIdeal& ideal, const EngineOptions& options = {});
InequalityReport check_main_mixed(const std::vector<MonomialIdeal>& ideals, const EngineOptions& options = {},
                                  bool exploration = false);
InequalityReport check_main_br(const DirectSumModule& module, const EngineOptions& options = {},
                               bool exploration = false);
InequalityReport check_prop_dim2(const std::vector<MonomialIdeal>& ideals, const EngineOptions& options = {});
InequalityReport check_lech_mixed(const std::vector<MonomialIdeal>& ideals, const EngineOptions& options = {});
InequalityReport check_prop_dim3(const std::vector<MonomialIdeal>& ideals, const EngineOptions& options = {});
InequalityReport check_additivity(const std::vector<MonomialIdeal>& ideals, const MonomialIdeal& j,
                                  const EngineOptions& options = {});
InequalityReport check_route_agreement(const DirectSumModule& module, const EngineOptions& options = {});
InequalityReport check_closure_invariance(const std::vector<MonomialIdeal>& ideals,
                                          const EngineOptions& options = {});
InequalityReport check_symmetry(const std::vector<MonomialIdeal>& ideals, const EngineOptions& options = {});
InequalityReport check_pairwise_bound(const MonomialIdeal& a, const MonomialIdeal& b,
                                      const EngineOptions& options = {});

/// Every check name, in suite order.
const std::vector<std::string>& all_checks();
/// Checks whose hypotheses fit the config's d and r.
std::vector<std::string> applicable_checks(const CorpusConfig& config);

/// Instance `index` of `check` under `config`: inputs drawn from
/// instance_rng(seed, index).  Engine failures become error reports.
std::vector<InequalityReport> run_instance(const CorpusConfig& config, const std::string& check,
                                           std::int64_t index, LengthCache* cache);

struct CheckSummary {
  std::string check;
  int reports = 0;
  int held = 0;
  int violated = 0;
  int errors = 0;
  std::optional<BigInt> min_slack;
};

struct SuiteResult {
  std::vector<InequalityReport> reports;
  std::vector<CheckSummary> summary;

  int violations() const;
  int errors() const;
};

/// Runs every enabled check on every instance; `config.jobs` threads.
/// Report order does not depend on the thread count.
SuiteResult run_suite(const CorpusConfig& config);

std::vector<CheckSummary> summarize(const std::vector<InequalityReport>& reports);

void write_json_lines(std::ostream& out, const std::vector<InequalityReport>& reports);
/// check,reports,held,violated,errors,min_slack
void write_csv_summary(std::ostream& out, const std::vector<CheckSummary>& summary);

struct FuzzResult {
  std::int64_t instances = 0;
  std::int64_t checks_run = 0;
  /// Violations and engine errors only.
  std::vector<InequalityReport> failures;
};

/// Runs instance indices 0, 1, 2, ... of every enabled check until the
/// wall-clock budget is spent.  Every instance stays reproducible from
/// (seed, index).
FuzzResult fuzz(const CorpusConfig& config, double budget_seconds);

}  // namespace multlab

#endif  // MULTLAB_VERIFY_HPP
