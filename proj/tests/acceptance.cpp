// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "multlab/buchsbaum_rim.hpp"
#include "multlab/length.hpp"
#include "multlab/multiplicity.hpp"
#include "multlab/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace multlab;

namespace {

// Wall-clock limits in seconds.  Every value comparison below is exact.
constexpr double kGoldenLimit = 60;
constexpr double kRouteLimit = 600;
constexpr double kMainMixedLimit = 1800;

// Pass/fail for one criterion plus a short account of what was checked.
struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

MonomialIdeal m(std::size_t d) { return MonomialIdeal::maximal(d); }

CorpusConfig corpus(std::uint64_t seed, int d, int r, int bound, int extra, int instances,
                    std::vector<std::string> checks, bool closures = false) {
  CorpusConfig c;
  c.seed = seed;
  c.d = d;
  c.r = r;
  c.max_pure_power = bound;
  c.extra_gens = extra;
  c.instances = instances;
  c.checks = std::move(checks);
  c.closures = closures;
  return c;
}

// Runs a suite and folds every report into the outcome.  Strict reports
// must clear an integer slack of at least 1.
int absorb(Outcome& o, const CorpusConfig& c, BigInt* min_slack = nullptr) {
  const SuiteResult result = run_suite(c);
  for (const auto& r : result.reports) {
    std::ostringstream where;
    where << r.check << " seed " << r.seed << " index " << r.index;
    if (r.error) {
      o.expect(false, where.str() + ": " + *r.error);
      continue;
    }
    o.expect(r.holds, where.str() + ": " + r.lhs.str() + " " + to_string(r.relation) + " " + r.rhs.str() +
                          " fails");
    if (r.relation == Relation::less) o.expect(r.slack >= 1, where.str() + ": strict slack below 1");
    if (min_slack && (r.slack < *min_slack || *min_slack < 0)) *min_slack = r.slack;
  }
  return static_cast<int>(result.reports.size());
}

Outcome golden() {
  Outcome o;
  int n = 0;
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto sd = std::to_string(d);
    o.expect(hilbert_samuel(m(d)) == 1, "e(m) != 1 in d=" + sd);
    o.expect(mixed_multiplicity(std::vector<MonomialIdeal>(d, m(d))) == 1, "e(m,...,m) != 1 in d=" + sd);
    o.expect(hilbert_samuel(product(m(d), m(d))) == BigInt(1) << d, "e(m^2) != 2^d in d=" + sd);
    n += 3;
  }
  LengthCache cache;
  EngineOptions opts;
  opts.cache = &cache;
  for (int k = 0; k < 20; ++k) {
    CorpusConfig c = corpus(101, 2 + k % 2, 1, 3, 2, 1, {});
    auto rng = instance_rng(c.seed, static_cast<std::uint64_t>(k));
    auto ideal = gen_random_mprimary(c, rng);
    o.expect(br_direct(DirectSumModule({ideal}), opts) == hilbert_samuel(ideal, opts),
             "br(I) != e(I) for " + to_string(ideal));
    ++n;
  }
  o.detail = std::to_string(n) + " exact values";
  return o;
}

Outcome route_agreement() {
  Outcome o;
  int n = 0;
  for (int d = 2; d <= 3; ++d)
    for (int r = 1; r <= 3; ++r) n += absorb(o, corpus(202 + 10 * d + r, d, r, 3, 2, 9, {"route_agreement"}));
  o.expect(n >= 50, "fewer than 50 instances");
  o.detail = std::to_string(n) + " modules, br_direct = br_via_mixed";
  return o;
}

Outcome additivity() {
  Outcome o;
  int n = 0;
  for (int d = 2; d <= 3; ++d) n += absorb(o, corpus(303 + d, d, 2, 3, 2, 20, {"additivity"}));
  o.expect(n >= 30, "fewer than 30 instances");
  o.detail = std::to_string(n) + " tuples, exact equality";
  return o;
}

Outcome main_mixed() {
  Outcome o;
  auto base = check_main_mixed(std::vector<MonomialIdeal>(4, m(4)));
  o.expect(base.lhs == 16 && base.rhs == 24 && base.holds, "base case is not 16 < 24");
  BigInt min_slack = -1;
  const int n = absorb(o, corpus(404, 4, 4, 3, 2, 100, {"main_mixed"}), &min_slack);
  o.expect(n >= 100, "fewer than 100 instances");
  o.detail = std::to_string(n) + " quadruples in d=4 plus 16 < 24, min slack " + min_slack.str();
  return o;
}

Outcome main_br() {
  Outcome o;
  auto base = check_main_br(DirectSumModule({m(4), m(4)}));
  o.expect(base.lhs == 80 && base.rhs == 120 && base.holds, "br(m^2 + m^2) is not 80 < 120");
  BigInt min_slack = -1;
  int n = 0;
  for (int r = 1; r <= 2; ++r) n += absorb(o, corpus(505 + r, 4, r, 3, 2, 25, {"main_br"}), &min_slack);
  o.expect(n >= 50, "fewer than 50 instances");
  o.detail = std::to_string(n) + " modules in d=4 plus 80 < 120, min slack " + min_slack.str();
  return o;
}

Outcome prop_dim2() {
  Outcome o;
  int n = 0;
  for (int r = 2; r <= 4; ++r) n += absorb(o, corpus(606 + r, 2, r, 3, 2, 34, {"prop_dim2"}, true));
  int sharp = 0;
  for (int s = 1; s <= 3; ++s)
    for (std::size_t r = 2; r <= 4; ++r) {
      auto rep = check_prop_dim2(std::vector<MonomialIdeal>(r, power(m(2), s)));
      o.expect(rep.holds && rep.slack == 0, "m^" + std::to_string(s) + " witness has nonzero slack");
      ++sharp;
    }
  o.expect(n >= 100, "fewer than 100 instances");
  o.detail = std::to_string(n) + " reports (with closures), " + std::to_string(sharp) + " sharp witnesses";
  return o;
}

Outcome lech_and_dim3() {
  Outcome o;
  int mixed = 0;
  for (int d = 2; d <= 4; ++d) mixed += absorb(o, corpus(707 + d, d, 2, 3, 2, 34, {"lech_mixed"}));
  const int dim3 = absorb(o, corpus(717, 3, 2, 3, 2, 30, {"prop_dim3"}, true));
  auto all_m = check_prop_dim3(std::vector<MonomialIdeal>(4, m(3)));
  o.expect(all_m.lhs == 15 && all_m.rhs == 24, "all-m instance is not 15 vs 24");
  o.expect(mixed >= 100 && dim3 >= 30, "too few instances");
  o.detail = std::to_string(mixed) + " mixed Lech, " + std::to_string(dim3) + " three-variable reports, 15 <= 24";
  return o;
}

Outcome invariance() {
  Outcome o;
  int n = 0;
  for (int d = 2; d <= 3; ++d) n += absorb(o, corpus(808 + d, d, 2, 3, 2, 25, {"symmetry", "closure_invariance"}));
  const int pairs = absorb(o, corpus(818, 2, 2, 4, 3, 50, {"pairwise_bound"}));
  o.expect(pairs >= 50, "fewer than 50 pairs");
  o.detail = std::to_string(n) + " symmetry/closure reports, " + std::to_string(pairs) + " pairwise bounds";
  return o;
}

Outcome engine_oracles() {
  Outcome o;
  int counted = 0;
  for (int k = 0; k < 400; ++k) {
    const int d = 1 + k % 5;
    CorpusConfig c = corpus(909, d, 1, 2 + k % 13, k % 6, 1, {});
    auto rng = instance_rng(c.seed, static_cast<std::uint64_t>(k));
    auto ideal = gen_random_mprimary(c, rng);
    if (box_volume(ideal) > 1000000) continue;
    o.expect(colength_sweep(ideal) == colength_naive(ideal), "sweep != naive on " + to_string(ideal));
    // Products through the staircase against explicit generators.
    auto other = gen_random_mprimary(c, rng);
    auto prod = product(ideal, other);
    if (box_volume(prod) <= 1000000) {
      std::vector<int> n{1, 1};
      o.expect(colength_of_product({ideal, other}, n) == colength_naive(prod),
               "staircase product != naive on " + to_string(prod));
    }
    ++counted;
  }
  int doubled = 0;
  LengthCache cache;
  EngineOptions opts;
  opts.cache = &cache;
  for (int k = 0; k < 30; ++k) {
    const int d = 2 + k % 3;
    CorpusConfig c = corpus(919, d, 1, 3, 2, 1, {});
    auto rng = instance_rng(c.seed, static_cast<std::uint64_t>(k));
    std::vector<MonomialIdeal> slots;
    for (int i = 0; i < d; ++i) slots.push_back(gen_random_mprimary(c, rng));
    auto table = mixed_multiplicity_table(slots, MixedType::ones(slots.size()), opts);
    std::map<MonomialIdeal, int> merged;
    for (const auto& s : slots) ++merged[s];
    std::vector<MonomialIdeal> distinct;
    for (const auto& [ideal, a] : merged) distinct.push_back(ideal);
    ProductLengthSampler sampler(distinct, &cache);
    GridPoint base = table.base;
    for (int& b : base) b *= 2;
    o.expect(mixed_difference(sampler, base, table.order) == table.result, "doubled base changes the value");
    ++doubled;
  }
  o.detail = std::to_string(counted) + " staircase/naive pairs, " + std::to_string(doubled) + " doubled tables";
  return o;
}

Outcome determinism() {
  Outcome o;
  CorpusConfig c = corpus(42, 4, 2, 3, 2, 10, {});
  auto text = [](const CorpusConfig& cfg) {
    std::ostringstream out;
    write_json_lines(out, run_suite(cfg).reports);
    return out.str();
  };
  const std::string first = text(c);
  const std::string second = text(c);
  c.jobs = 3;
  const std::string threaded = text(c);
  o.expect(!first.empty(), "empty report");
  o.expect(first == second, "two runs differ");
  o.expect(first == threaded, "threaded run differs");
  o.detail = std::to_string(first.size()) + " bytes identical across 3 runs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden values", golden, kGoldenLimit},
      {2, "br route agreement", route_agreement, kRouteLimit},
      {3, "additivity", additivity, 0},
      {4, "strict mixed bound, d=4", main_mixed, kMainMixedLimit},
      {5, "strict br bound, d=4", main_br, 0},
      {6, "two-variable bound", prop_dim2, 0},
      {7, "mixed Lech and three-variable bounds", lech_and_dim3, 0},
      {8, "invariance properties", invariance, 0},
      {9, "engine oracles", engine_oracles, 0},
      {10, "determinism", determinism, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs > c.limit) {
      o.pass = false;
      o.problems.push_back("took longer than " + std::to_string(static_cast<int>(c.limit)) + " s");
    }
    std::printf("criterion %2d %s  %s: %s (%.1f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                secs);
    for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
