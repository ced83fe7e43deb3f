#include "multlab/verify.hpp"

#include "multlab/length.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/lexical_cast.hpp>
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <thread>

namespace multlab {

namespace {

bool parse_bool(const std::string& key, const std::string& value) {
  const std::string v = boost::algorithm::to_lower_copy(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::invalid_argument("config key '" + key + "' expects a boolean, got '" + value + "'");
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  try {
    return boost::lexical_cast<T>(value);
  } catch (const boost::bad_lexical_cast&) {
    throw std::invalid_argument("config key '" + key + "' expects an integer, got '" + value + "'");
  }
}

}  // namespace

void CorpusConfig::validate() const {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (max_pure_power < 1) throw std::invalid_argument("max_pure_power must be at least 1");
  if (extra_gens < 0) throw std::invalid_argument("extra_gens must be non-negative");
  if (instances < 0) throw std::invalid_argument("instances must be non-negative");
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  const auto& known = all_checks();
  for (const std::string& c : checks) {
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      throw std::invalid_argument("unknown check '" + c + "'");
    }
  }
}

CorpusConfig parse_config(std::istream& in) {
  CorpusConfig config;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    boost::algorithm::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": expected key = value");
    }
    std::string key = boost::algorithm::trim_copy(line.substr(0, eq));
    std::string value = boost::algorithm::trim_copy(line.substr(eq + 1));
    if (key == "seed") config.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "d") config.d = parse_number<int>(key, value);
    else if (key == "r") config.r = parse_number<int>(key, value);
    else if (key == "max_pure_power" || key == "B") config.max_pure_power = parse_number<int>(key, value);
    else if (key == "extra_gens") config.extra_gens = parse_number<int>(key, value);
    else if (key == "instances") config.instances = parse_number<int>(key, value);
    else if (key == "jobs") config.jobs = parse_number<int>(key, value);
    else if (key == "exploration") config.exploration = parse_bool(key, value);
    else if (key == "closures") config.closures = parse_bool(key, value);
    else if (key == "checks") {
      config.checks.clear();
      if (value != "all") {
        boost::algorithm::split(config.checks, value, boost::algorithm::is_any_of(","));
        for (auto& c : config.checks) boost::algorithm::trim(c);
        std::erase(config.checks, std::string());
      }
    } else {
      throw std::invalid_argument("config line " + std::to_string(number) + ": unknown key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

CorpusConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  return parse_config(in);
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

MonomialIdeal gen_random_mprimary(const CorpusConfig& config, std::mt19937_64& rng) {
  const std::size_t d = static_cast<std::size_t>(config.d);
  std::uniform_int_distribution<int> pick(1, config.max_pure_power);
  std::vector<Exponent> k(d);
  for (auto& e : k) e = pick(rng);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(Monomial::pure_power(d, i, k[i]));
  const bool only_origin = std::all_of(k.begin(), k.end(), [](Exponent e) { return e == 1; });
  for (int t = 0; t < config.extra_gens && !only_origin; ++t) {
    std::vector<Exponent> v(d);
    do {
      for (std::size_t i = 0; i < d; ++i) v[i] = std::uniform_int_distribution<int>(0, k[i] - 1)(rng);
    } while (std::all_of(v.begin(), v.end(), [](Exponent e) { return e == 0; }));
    gens.emplace_back(v);
  }
  return MonomialIdeal(gens, d);
}

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::less: return "<";
    case Relation::less_equal: return "<=";
    case Relation::equal: return "=";
  }
  return "?";
}

void InequalityReport::settle() {
  slack = rhs - lhs;
  switch (relation) {
    case Relation::less: holds = lhs < rhs; break;
    case Relation::less_equal: holds = lhs <= rhs; break;
    case Relation::equal: holds = lhs == rhs; break;
  }
}

std::string to_json_line(const InequalityReport& report) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  j["instance"] = report.instance;
  j["seed"] = report.seed;
  j["index"] = report.index;
  if (report.error) {
    j["error"] = *report.error;
    j["holds"] = false;
    return j.dump();
  }
  j["lhs"] = report.lhs.str();
  j["relation"] = to_string(report.relation);
  j["rhs"] = report.rhs.str();
  j["strict"] = report.relation == Relation::less;
  j["holds"] = report.holds;
  j["slack"] = report.slack.str();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [name, value] : report.terms) terms.push_back({name, value.str()});
  j["terms"] = terms;
  return j.dump();
}

namespace {

std::vector<std::string> describe(const std::vector<MonomialIdeal>& ideals) {
  std::vector<std::string> out;
  for (const MonomialIdeal& i : ideals) out.push_back(to_string(i));
  return out;
}

std::size_t common_dim(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw AlgebraError("at least one ideal is required");
  for (const MonomialIdeal& i : ideals) {
    if (i.dim() != ideals.front().dim()) throw AlgebraError("ideals live in different dimensions");
    if (!is_m_primary(i)) throw AlgebraError(to_string(i) + " is not m-primary");
  }
  return ideals.front().dim();
}

BigInt colength_sum(const std::vector<MonomialIdeal>& ideals) {
  BigInt total = 0;
  for (const MonomialIdeal& i : ideals) total += colength(i);
  return total;
}

std::string slot_name(const std::vector<std::size_t>& idx, const char* prime = "") {
  std::string out = "e(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ',';
    out += 'I' + std::to_string(idx[k] + 1) + prime;
  }
  return out + ')';
}

InequalityReport make(std::string check, const std::vector<MonomialIdeal>& ideals, Relation relation) {
  InequalityReport r;
  r.check = std::move(check);
  r.instance = describe(ideals);
  r.relation = relation;
  return r;
}

}  // namespace

InequalityReport check_lech_classical(const MonomialIdeal& ideal, const EngineOptions& options) {
  const std::size_t d = common_dim({ideal});
  auto r = make("lech_classical", {ideal}, Relation::less_equal);
  r.lhs = hilbert_samuel(ideal, options);
  const BigInt len = colength(ideal);
  r.rhs = factorial(static_cast<std::int64_t>(d)) * len;
  r.terms = {{"e(I)", r.lhs}, {"colength(I)", len}};
  r.settle();
  return r;
}

InequalityReport check_main_mixed(const std::vector<MonomialIdeal>& ideals, const EngineOptions& options,
                                  bool exploration) {
  const std::size_t d = common_dim(ideals);
  if (ideals.size() != d) throw AlgebraError("expected d ideals");
  if (d < 4 && !exploration) throw AlgebraError("the strict mixed bound is stated for d >= 4");
  auto r = make("main_mixed", ideals, Relation::less);
  const MonomialIdeal m = MonomialIdeal::maximal(d);
  std::vector<MonomialIdeal> scaled;
  for (const MonomialIdeal& i : ideals) scaled.push_back(product(m, i));
  r.lhs = mixed_multiplicity(scaled, options);
  const BigInt sum = colength_sum(ideals);
  r.rhs = factorial(static_cast<std::int64_t>(d) - 1) * sum;
  r.terms = {{"e(mI1,...,mId)", r.lhs}, {"sum colength(Ii)", sum}};
  r.settle();
  return r;
}

InequalityReport check_main_br(const DirectSumModule& module, const EngineOptions& options, bool exploration) {
  const std::size_t d = module.dim();
  if (d < 4 && !exploration) throw AlgebraError("the strict br bound is stated for d >= 4");
  if (!module.contained_in_mF()) throw AlgebraError("the br bound needs E inside mF");
  auto r = make("main_br", module.ideals(), Relation::less);
  const auto breakdown = br_via_mixed_terms(scale_by_m(module), options);
  r.lhs = breakdown.total;
  const BigInt len = quotient_length(module);
  const auto rank = static_cast<std::int64_t>(module.rank());
  r.rhs = factorial(static_cast<std::int64_t>(d) + rank - 1) / factorial(rank) * len;
  for (const auto& [a, v] : breakdown.terms) {
    std::string name = "e(";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) name += ',';
      name += "mI" + std::to_string(i + 1) + "^[" + std::to_string(a[i]) + "]";
    }
    r.terms.emplace_back(name + ")", v);
  }
  r.terms.emplace_back("length(F/E)", len);
  r.settle();
  return r;
}

InequalityReport check_prop_dim2(const std::vector<MonomialIdeal>& ideals, const EngineOptions& options) {
  const std::size_t d = common_dim(ideals);
  if (d != 2) throw AlgebraError("this bound is stated for d = 2");
  const std::size_t n = ideals.size();
  if (n < 2) throw AlgebraError("this bound needs at least two ideals");
  auto r = make("prop_dim2", ideals, Relation::less_equal);
  BigInt pairs = 0, sections = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      BigInt v = mixed_multiplicity({ideals[i], ideals[j]}, options);
      r.terms.emplace_back(slot_name({i, j}), v);
      pairs += v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    BigInt v = hyperplane_section_multiplicity({ideals[i]}, 1, options);
    r.terms.emplace_back(slot_name({i}, "'"), v);
    sections += v;
  }
  const BigInt sum = colength_sum(ideals);
  const BigInt k = static_cast<long>(n) - 1;
  r.lhs = 2 * pairs + k * sections;
  r.rhs = 2 * k * sum;
  r.terms.emplace_back("sum colength(Ii)", sum);
  r.settle();
  return r;
}

InequalityReport check_lech_mixed(const std::vector<MonomialIdeal>& ideals, const EngineOptions& options) {
  const std::size_t d = common_dim(ideals);
  if (ideals.size() != d) throw AlgebraError("expected d ideals");
  auto r = make("lech_mixed", ideals, Relation::less_equal);
  r.lhs = mixed_multiplicity(ideals, options);
  const BigInt sum = colength_sum(ideals);
  r.rhs = factorial(static_cast<std::int64_t>(d) - 1) * sum;
  r.terms = {{"e(I1,...,Id)", r.lhs}, {"sum colength(Ii)", sum}};
  r.settle();
  return r;
}

InequalityReport check_prop_dim3(const std::vector<MonomialIdeal>& ideals, const EngineOptions& options) {
  const std::size_t d = common_dim(ideals);
  if (d != 3) throw AlgebraError("this bound is stated for d = 3");
  if (ideals.size() != 4) throw AlgebraError("this bound takes four ideals");
  auto r = make("prop_dim3", ideals, Relation::less_equal);
  BigInt lhs = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k) {
        BigInt v = mixed_multiplicity({ideals[i], ideals[j], ideals[k]}, options);
        r.terms.emplace_back(slot_name({i, j, k}), v);
        lhs += v;
      }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      BigInt v = hyperplane_section_multiplicity({ideals[i], ideals[j]}, 1, options);
      r.terms.emplace_back(slot_name({i, j}, "'"), v);
      lhs += v;
    }
  for (std::size_t i = 0; i < 4; ++i) {
    BigInt v = hyperplane_section_multiplicity({ideals[i]}, 2, options);
    r.terms.emplace_back(slot_name({i}, "''"), v);
    lhs += v;
  }
  r.terms.emplace_back("constant", 1);
  r.lhs = lhs + 1;
  const BigInt sum = colength_sum(ideals);
  r.rhs = 6 * sum;
  r.terms.emplace_back("sum colength(Ii)", sum);
  r.settle();
  return r;
}

InequalityReport check_additivity(const std::vector<MonomialIdeal>& ideals, const MonomialIdeal& j,
                                  const EngineOptions& options) {
  std::vector<MonomialIdeal> all = ideals;
  all.push_back(j);
  const std::size_t d = common_dim(all);
  if (ideals.size() != d) throw AlgebraError("expected d ideals plus J");
  auto r = make("additivity", all, Relation::equal);
  auto split = ideals;
  split[0] = product(ideals[0], j);
  auto swapped = ideals;
  swapped[0] = j;
  r.lhs = mixed_multiplicity(split, options);
  const BigInt first = mixed_multiplicity(ideals, options);
  const BigInt second = mixed_multiplicity(swapped, options);
  r.rhs = first + second;
  r.terms = {{"e(I1 J,I2,...)", r.lhs}, {"e(I1,I2,...)", first}, {"e(J,I2,...)", second}};
  r.settle();
  return r;
}

InequalityReport check_route_agreement(const DirectSumModule& module, const EngineOptions& options) {
  auto r = make("route_agreement", module.ideals(), Relation::equal);
  r.lhs = br_direct(module, options);
  r.rhs = br_via_mixed(module, options);
  r.terms = {{"br_direct", r.lhs}, {"br_via_mixed", r.rhs}};
  r.settle();
  return r;
}

InequalityReport check_closure_invariance(const std::vector<MonomialIdeal>& ideals, const EngineOptions& options) {
  const std::size_t d = common_dim(ideals);
  if (ideals.size() != d) throw AlgebraError("expected d ideals");
  auto r = make("closure_invariance", ideals, Relation::equal);
  std::vector<MonomialIdeal> closed;
  for (const MonomialIdeal& i : ideals) closed.push_back(integral_closure(i));
  r.lhs = mixed_multiplicity(ideals, options);
  r.rhs = mixed_multiplicity(closed, options);
  r.terms = {{"e(I1,...,Id)", r.lhs}, {"e(closures)", r.rhs}};
  r.settle();
  return r;
}

InequalityReport check_symmetry(const std::vector<MonomialIdeal>& ideals, const EngineOptions& options) {
  const std::size_t d = common_dim(ideals);
  if (ideals.size() != d) throw AlgebraError("expected d ideals");
  auto r = make("symmetry", ideals, Relation::equal);
  auto reversed = ideals;
  std::reverse(reversed.begin(), reversed.end());
  auto rotated = ideals;
  std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  r.lhs = mixed_multiplicity(ideals, options);
  r.rhs = mixed_multiplicity(reversed, options);
  const BigInt third = mixed_multiplicity(rotated, options);
  r.terms = {{"e(I1,...,Id)", r.lhs}, {"e(Id,...,I1)", r.rhs}, {"e(I2,...,Id,I1)", third}};
  r.settle();
  if (third != r.lhs) r.holds = false;
  return r;
}

InequalityReport check_pairwise_bound(const MonomialIdeal& a, const MonomialIdeal& b,
                                      const EngineOptions& options) {
  const std::size_t d = common_dim({a, b});
  if (d != 2) throw AlgebraError("the pairwise bound is checked for d = 2");
  auto r = make("pairwise_bound", {a, b}, Relation::less_equal);
  const BigInt ab = mixed_multiplicity({a, b}, options);
  const BigInt ea = hilbert_samuel(a, options);
  const BigInt eb = hilbert_samuel(b, options);
  r.lhs = 2 * ab;
  r.rhs = ea + eb;
  r.terms = {{"e(I1,I2)", ab}, {"e(I1)", ea}, {"e(I2)", eb}};
  r.settle();
  return r;
}

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names = {
      "lech_classical", "main_mixed",  "main_br",         "prop_dim2",          "lech_mixed", "prop_dim3",
      "additivity",     "route_agreement", "closure_invariance", "symmetry",   "pairwise_bound"};
  return names;
}

std::vector<std::string> applicable_checks(const CorpusConfig& config) {
  std::vector<std::string> out;
  for (const std::string& c : all_checks()) {
    if ((c == "main_mixed" || c == "main_br") && config.d < 4 && !config.exploration) continue;
    if ((c == "prop_dim2" || c == "pairwise_bound") && config.d != 2) continue;
    if (c == "prop_dim2" && config.r < 2) continue;
    if (c == "prop_dim3" && config.d != 3) continue;
    out.push_back(c);
  }
  return out;
}

namespace {

bool is_inequality(const std::string& check) {
  return check == "lech_classical" || check == "main_mixed" || check == "main_br" || check == "prop_dim2" ||
         check == "lech_mixed" || check == "prop_dim3" || check == "pairwise_bound";
}

std::vector<MonomialIdeal> draw(const CorpusConfig& config, std::mt19937_64& rng, std::size_t count) {
  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen_random_mprimary(config, rng));
  return out;
}

InequalityReport evaluate(const CorpusConfig& config, const std::string& check,
                          const std::vector<MonomialIdeal>& in, const EngineOptions& opts) {
  if (check == "lech_classical") return check_lech_classical(in[0], opts);
  if (check == "main_mixed") return check_main_mixed(in, opts, config.exploration);
  if (check == "main_br") return check_main_br(DirectSumModule(in), opts, config.exploration);
  if (check == "prop_dim2") return check_prop_dim2(in, opts);
  if (check == "lech_mixed") return check_lech_mixed(in, opts);
  if (check == "prop_dim3") return check_prop_dim3(in, opts);
  if (check == "additivity") {
    std::vector<MonomialIdeal> head(in.begin(), in.end() - 1);
    return check_additivity(head, in.back(), opts);
  }
  if (check == "route_agreement") return check_route_agreement(DirectSumModule(in), opts);
  if (check == "closure_invariance") return check_closure_invariance(in, opts);
  if (check == "symmetry") return check_symmetry(in, opts);
  if (check == "pairwise_bound") return check_pairwise_bound(in[0], in[1], opts);
  throw std::invalid_argument("unknown check '" + check + "'");
}

std::size_t arity(const CorpusConfig& config, const std::string& check) {
  const auto d = static_cast<std::size_t>(config.d);
  const auto r = static_cast<std::size_t>(config.r);
  if (check == "lech_classical") return 1;
  if (check == "main_br" || check == "route_agreement" || check == "prop_dim2") return r;
  if (check == "prop_dim3") return 4;
  if (check == "additivity") return d + 1;
  if (check == "pairwise_bound") return 2;
  return d;
}

}  // namespace

std::vector<InequalityReport> run_instance(const CorpusConfig& config, const std::string& check,
                                           std::int64_t index, LengthCache* cache) {
  auto rng = instance_rng(config.seed, static_cast<std::uint64_t>(index));
  const auto inputs = draw(config, rng, arity(config, check));
  EngineOptions opts;
  opts.cache = cache;

  std::vector<InequalityReport> out;
  auto run = [&](const std::string& name, const std::vector<MonomialIdeal>& in) {
    InequalityReport r;
    try {
      r = evaluate(config, check, in, opts);
    } catch (const std::exception& e) {
      r = InequalityReport{};
      r.instance = describe(in);
      r.error = e.what();
    }
    r.check = name;
    r.seed = config.seed;
    r.index = index;
    out.push_back(std::move(r));
  };
  run(check, inputs);
  if (config.closures && is_inequality(check)) {
    std::vector<MonomialIdeal> closed;
    try {
      for (const MonomialIdeal& i : inputs) closed.push_back(integral_closure(i));
    } catch (const std::exception&) {
      closed = inputs;
    }
    run(check + "/closure", closed);
  }
  return out;
}

int SuiteResult::violations() const {
  return static_cast<int>(std::count_if(reports.begin(), reports.end(),
                                        [](const InequalityReport& r) { return !r.error && !r.holds; }));
}

int SuiteResult::errors() const {
  return static_cast<int>(
      std::count_if(reports.begin(), reports.end(), [](const InequalityReport& r) { return r.error.has_value(); }));
}

std::vector<CheckSummary> summarize(const std::vector<InequalityReport>& reports) {
  std::vector<CheckSummary> out;
  std::map<std::string, std::size_t> slot;
  for (const InequalityReport& r : reports) {
    auto [it, fresh] = slot.try_emplace(r.check, out.size());
    if (fresh) {
      out.emplace_back();
      out.back().check = r.check;
    }
    CheckSummary& s = out[it->second];
    ++s.reports;
    if (r.error) {
      ++s.errors;
      continue;
    }
    if (r.holds) ++s.held;
    else ++s.violated;
    if (!s.min_slack || r.slack < *s.min_slack) s.min_slack = r.slack;
  }
  return out;
}

SuiteResult run_suite(const CorpusConfig& config) {
  config.validate();
  const std::vector<std::string> checks = config.checks.empty() ? applicable_checks(config) : config.checks;
  std::vector<std::pair<std::string, std::int64_t>> work;
  for (const std::string& c : checks)
    for (std::int64_t i = 0; i < config.instances; ++i) work.emplace_back(c, i);

  std::vector<std::vector<InequalityReport>> slots(work.size());
  LengthCache cache;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < work.size(); k = next++) {
      slots[k] = run_instance(config, work[k].first, work[k].second, &cache);
    }
  };
  const int threads = std::min<int>(config.jobs, static_cast<int>(std::max<std::size_t>(work.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SuiteResult result;
  for (auto& s : slots)
    for (auto& r : s) result.reports.push_back(std::move(r));
  result.summary = summarize(result.reports);
  return result;
}

void write_json_lines(std::ostream& out, const std::vector<InequalityReport>& reports) {
  for (const InequalityReport& r : reports) out << to_json_line(r) << '\n';
}

void write_csv_summary(std::ostream& out, const std::vector<CheckSummary>& summary) {
  out << "check,reports,held,violated,errors,min_slack\n";
  for (const CheckSummary& s : summary) {
    out << s.check << ',' << s.reports << ',' << s.held << ',' << s.violated << ',' << s.errors << ','
        << (s.min_slack ? s.min_slack->str() : std::string()) << '\n';
  }
}

FuzzResult fuzz(const CorpusConfig& config, double budget_seconds) {
  config.validate();
  using clock = std::chrono::steady_clock;
  const auto deadline = clock::now() + std::chrono::duration_cast<clock::duration>(
                                           std::chrono::duration<double>(budget_seconds));
  const std::vector<std::string> checks = config.checks.empty() ? applicable_checks(config) : config.checks;
  FuzzResult result;
  LengthCache cache;
  // Small per-batch caches keep memory flat during long runs.
  for (std::int64_t index = 0; clock::now() < deadline; ++index) {
    if (index % 64 == 0) cache.clear();
    for (const std::string& c : checks) {
      for (auto& r : run_instance(config, c, index, &cache)) {
        ++result.checks_run;
        if (r.error || !r.holds) result.failures.push_back(std::move(r));
      }
    }
    ++result.instances;
  }
  return result;
}

}  // namespace multlab
