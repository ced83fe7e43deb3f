// multlab: multiplicities of monomial ideals from the command line.

#include "multlab/buchsbaum_rim.hpp"
#include "multlab/multiplicity.hpp"
#include "multlab/parse.hpp"
#include "multlab/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/lexical_cast.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace multlab;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, usage = 1, check_failed = 2, unstable = 3 };

struct Shared {
  std::optional<std::size_t> dim;
  bool scale = false;
  bool json = false;
};

void add_shared(CLI::App* cmd, Shared& s) {
  cmd->add_option("--dim", s.dim, "Ambient dimension (default: highest variable index)")->check(CLI::PositiveNumber);
  cmd->add_flag("--scale-by-m", s.scale, "Multiply every ideal by the maximal ideal first");
  cmd->add_flag("--json", s.json, "Machine-readable output");
}

std::vector<MonomialIdeal> scaled(std::vector<MonomialIdeal> ideals, bool scale) {
  if (!scale) return ideals;
  for (auto& i : ideals) i = product(MonomialIdeal::maximal(i.dim()), i);
  return ideals;
}

json names(const std::vector<MonomialIdeal>& ideals) {
  json out = json::array();
  for (const auto& i : ideals) out.push_back(to_string(i));
  return out;
}

void emit(const Shared& s, json j, const BigInt& value) {
  if (s.json) {
    j["value"] = value.str();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << value << '\n';
  }
}

std::vector<int> parse_type(const std::string& text) {
  std::vector<std::string> parts;
  boost::algorithm::split(parts, text, boost::algorithm::is_any_of(","));
  std::vector<int> out;
  for (auto& p : parts) {
    boost::algorithm::trim(p);
    try {
      out.push_back(boost::lexical_cast<int>(p));
    } catch (const boost::bad_lexical_cast&) {
      throw std::invalid_argument("--type expects comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

struct CorpusFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> d, r, bound, extra, instances, jobs;
  std::optional<std::string> checks;
  bool exploration = false;
  bool closures = false;
};

void add_corpus(CLI::App* cmd, CorpusFlags& f) {
  cmd->add_option("--config", f.config, "Flat key = value corpus file");
  cmd->add_option("--seed", f.seed);
  cmd->add_option("-d,--dimension", f.d);
  cmd->add_option("-r,--rank", f.r, "Tuple size for rank-dependent checks");
  cmd->add_option("-B,--max-pure-power", f.bound);
  cmd->add_option("--extra-gens", f.extra);
  cmd->add_option("--instances", f.instances);
  cmd->add_option("--checks", f.checks, "Comma-separated check names or 'all'");
  cmd->add_flag("--exploration", f.exploration, "Run strict bounds below their proven dimension");
  cmd->add_flag("--closures", f.closures, "Repeat inequality checks on integral closures");
  cmd->add_option("--jobs", f.jobs, "Worker threads (default: MULTLAB_JOBS or the config)");
}

CorpusConfig corpus(const CorpusFlags& f) {
  CorpusConfig c = f.config.empty() ? CorpusConfig{} : load_config(f.config);
  if (f.seed) c.seed = *f.seed;
  if (f.d) c.d = *f.d;
  if (f.r) c.r = *f.r;
  if (f.bound) c.max_pure_power = *f.bound;
  if (f.extra) c.extra_gens = *f.extra;
  if (f.instances) c.instances = *f.instances;
  if (f.checks) {
    std::istringstream line("checks = " + *f.checks);
    c.checks = parse_config(line).checks;
  }
  c.exploration |= f.exploration;
  c.closures |= f.closures;
  if (f.jobs) {
    c.jobs = *f.jobs;
  } else if (const char* env = std::getenv("MULTLAB_JOBS")) {
    try {
      c.jobs = boost::lexical_cast<int>(env);
    } catch (const boost::bad_lexical_cast&) {
      throw std::invalid_argument(std::string("MULTLAB_JOBS is not an integer: ") + env);
    }
  }
  c.validate();
  return c;
}

void print_failures(const std::vector<InequalityReport>& reports) {
  for (const auto& r : reports) {
    if (r.error) {
      std::cerr << "error  " << r.check << " index " << r.index << ": " << *r.error << '\n';
    } else if (!r.holds) {
      std::cerr << "FAILED " << r.check << " seed " << r.seed << " index " << r.index << ": " << r.lhs << ' '
                << to_string(r.relation) << ' ' << r.rhs << " on " << boost::algorithm::join(r.instance, " ; ")
                << '\n';
    }
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Hilbert-Samuel, mixed and Buchsbaum-Rim multiplicities of monomial ideals"};
  app.require_subcommand(1);

  Shared mult_s;
  std::string mult_expr;
  auto* mult = app.add_subcommand("mult", "Hilbert-Samuel multiplicity e(I)");
  mult->add_option("ideal", mult_expr, "Ideal such as \"(x^2, x*y, y^3)\"")->required();
  add_shared(mult, mult_s);

  Shared mixed_s;
  std::vector<std::string> mixed_exprs;
  std::string mixed_type;
  auto* mixed = app.add_subcommand("mixed", "Mixed multiplicity e(I_1^[a_1], ..., I_r^[a_r])");
  mixed->add_option("ideals", mixed_exprs, "Ideals; without --type exactly d of them")->required();
  mixed->add_option("--type", mixed_type, "Comma-separated a_1,...,a_r summing to d");
  add_shared(mixed, mixed_s);

  Shared br_s;
  std::string br_module;
  bool cross_check = false;
  auto* br = app.add_subcommand("br", "Buchsbaum-Rim multiplicity of a direct sum of ideals");
  br->add_option("--module", br_module, "Summands separated by ';', e.g. \"(x,y);(x^2,y^2)\"")->required();
  br->add_flag("--cross-check", cross_check, "Also extract br directly from module lengths");
  add_shared(br, br_s);

  CorpusFlags verify_f;
  std::string out_path, csv_path;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run the seeded inequality suite");
  add_corpus(verify, verify_f);
  verify->add_option("--out", out_path, "Write JSON-lines reports here");
  verify->add_option("--csv", csv_path, "Write the CSV summary here");
  verify->add_flag("--json", verify_json, "JSON-lines reports on stdout");

  CorpusFlags fuzz_f;
  double budget = 60;
  bool fuzz_json = false;
  auto* fz = app.add_subcommand("fuzz", "Open-ended seeded search until a wall-clock budget runs out");
  add_corpus(fz, fuzz_f);
  fz->add_option("--budget", budget, "Seconds")->check(CLI::NonNegativeNumber);
  fz->add_flag("--json", fuzz_json, "Failures as JSON lines on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : usage;
  }

  try {
    if (mult->parsed()) {
      auto ideal = scaled({parse_ideal(mult_expr, mult_s.dim)}, mult_s.scale).front();
      auto table = mixed_multiplicity_table({ideal}, MixedType{static_cast<int>(ideal.dim())});
      emit(mult_s, json{{"command", "mult"}, {"ideal", to_string(ideal)}, {"dim", ideal.dim()}, {"base", table.base}},
           table.result);
    } else if (mixed->parsed()) {
      auto ideals = scaled(parse_ideals(mixed_exprs, mixed_s.dim), mixed_s.scale);
      MixedType type = mixed_type.empty() ? MixedType::ones(ideals.size()) : MixedType(parse_type(mixed_type));
      auto table = mixed_multiplicity_table(ideals, type);
      emit(mixed_s,
           json{{"command", "mixed"}, {"ideals", names(ideals)}, {"type", type.entries()}, {"dim", ideals.front().dim()},
                {"base", table.base}},
           table.result);
    } else if (br->parsed()) {
      DirectSumModule module(parse_module(br_module, br_s.dim));
      if (br_s.scale) module = scale_by_m(module);
      const BigInt value = br_via_mixed(module);
      json j{{"command", "br"}, {"module", names(module.ideals())}, {"dim", module.dim()}};
      if (cross_check) {
        const BigInt direct = br_direct(module);
        j["direct"] = direct.str();
        if (direct != value) {
          std::cerr << "route disagreement: via mixed " << value << ", direct " << direct << '\n';
          emit(br_s, j, value);
          return check_failed;
        }
      }
      emit(br_s, j, value);
    } else if (verify->parsed()) {
      const CorpusConfig config = corpus(verify_f);
      const SuiteResult result = run_suite(config);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        write_json_lines(out, result.reports);
      }
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::invalid_argument("cannot write " + csv_path);
        write_csv_summary(out, result.summary);
      }
      if (verify_json) write_json_lines(std::cout, result.reports);
      else write_csv_summary(std::cout, result.summary);
      print_failures(result.reports);
      if (result.violations()) return check_failed;
      if (result.errors()) return unstable;
    } else if (fz->parsed()) {
      const CorpusConfig config = corpus(fuzz_f);
      const FuzzResult result = fuzz(config, budget);
      if (fuzz_json) {
        write_json_lines(std::cout, result.failures);
      } else {
        std::cout << "instances " << result.instances << ", checks " << result.checks_run << ", failures "
                  << result.failures.size() << '\n';
      }
      print_failures(result.failures);
      for (const auto& r : result.failures)
        if (!r.error) return check_failed;
      if (!result.failures.empty()) return unstable;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const StabilizationError& e) {
    std::cerr << "stabilization failure: " << e.what() << '\n';
    return unstable;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
