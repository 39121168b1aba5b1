// Builtin catalog of benchmark groups and the batch runner behind the
// catalog subcommand: one record per (group, prime) with both verdicts,
// implication checks and oracle cross-validation.
#pragma once

#include <algorithm>
#include <cstdio>
#include <future>
#include <string>
#include <vector>

#include "msalg/criteria.hpp"
#include "msalg/groupspec.hpp"
#include "msalg/json_io.hpp"
#include "msalg/oracle.hpp"

namespace msalg {

// All cyclic, dihedral and elementary-abelian groups up to the cap, the small
// symmetric/alternating groups, the quaternion group, and a curated list of
// direct products.
inline std::vector<std::string> catalog_specs(std::uint32_t max_order) {
  std::vector<std::string> specs;
  for (std::uint32_t n = 1; n <= max_order; ++n) specs.push_back("cyclic:" + std::to_string(n));
  for (std::uint32_t n = 2; 2 * n <= max_order; ++n) specs.push_back("dihedral:" + std::to_string(n));
  for (std::uint32_t p : {2, 3, 5, 7}) {
    std::uint64_t pk = static_cast<std::uint64_t>(p) * p;
    for (std::uint32_t k = 2; pk <= max_order; ++k, pk *= p)
      specs.push_back("elemabelian:" + std::to_string(p) + ":" + std::to_string(k));
  }
  for (std::uint32_t n = 3; n <= 4; ++n) {
    std::uint64_t fact = 1;
    for (std::uint32_t i = 2; i <= n; ++i) fact *= i;
    if (fact <= max_order) specs.push_back("symmetric:" + std::to_string(n));
    if (fact / 2 <= max_order) specs.push_back("alternating:" + std::to_string(n));
  }
  if (max_order >= 8) specs.push_back("quaternion:8");
  static const std::vector<std::pair<std::string, std::uint32_t>> products = {
      {"product(cyclic:2,cyclic:4)", 8},      {"product(cyclic:2,cyclic:6)", 12},
      {"product(cyclic:2,cyclic:8)", 16},     {"product(cyclic:2,cyclic:10)", 20},
      {"product(cyclic:2,cyclic:12)", 24},    {"product(cyclic:3,cyclic:6)", 18},
      {"product(cyclic:3,cyclic:9)", 27},     {"product(cyclic:4,cyclic:4)", 16},
      {"product(cyclic:4,cyclic:6)", 24},     {"product(cyclic:2,symmetric:3)", 12},
      {"product(cyclic:3,symmetric:3)", 18},  {"product(cyclic:5,symmetric:3)", 30},
      {"product(cyclic:2,dihedral:4)", 16},   {"product(cyclic:2,quaternion:8)", 16},
      {"product(cyclic:3,quaternion:8)", 24}, {"product(cyclic:2,alternating:4)", 24},
      {"product(cyclic:5,cyclic:5)", 25},     {"product(cyclic:6,cyclic:6)", 36},
      {"product(cyclic:2,cyclic:16)", 32},    {"product(cyclic:7,symmetric:3)", 42},
      {"product(cyclic:4,dihedral:4)", 32},   {"product(cyclic:3,dihedral:5)", 30},
  };
  for (const auto& [spec, order] : products)
    if (order <= max_order) specs.push_back(spec);
  std::sort(specs.begin(), specs.end());
  return specs;
}

struct CatalogOptions {
  std::uint32_t max_order = 24;
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = global_seed();
  ScanBudget budget;
  unsigned workers = 0;  // 0 = hardware default (capped)
  bool run_oracle = true;
};

struct CatalogRecord {
  std::string spec;
  std::uint64_t order = 0;
  std::uint64_t p = 0;
  bool consistent = true;
  json record;
  std::string table_row;
};

struct CatalogOutcome {
  std::vector<CatalogRecord> records;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

namespace detail {

inline CatalogRecord catalog_entry(const std::string& spec, std::uint64_t p, const CatalogOptions& opt) {
  CatalogRecord rec;
  rec.spec = spec;
  rec.p = p;
  FiniteGroup G = parse_group_spec(spec);
  rec.order = G.order;

  ImplicationReport imp = implication_check(G, p, opt.seed);
  json j{
      {"group", spec},
      {"order", G.order},
      {"p", p},
      {"seed", opt.seed},
      {"version", kVersion},
      {"vg", verdict_json(imp.vg)},
      {"central", verdict_json(imp.central)},
      {"implications", implication_json(imp)},
  };
  if (imp.vg.degrees) j["degrees"] = *imp.vg.degrees;
  if (imp.central.blocks) j["blocks"] = blocks_json(*imp.central.blocks);
  bool ok = imp.all_pass;
  if (opt.run_oracle) {
    ScanBudget budget = opt.budget;
    budget.seed = opt.seed;
    CrossReport cross = cross_validate(G, p, budget);
    json cj = cross_report_json(cross);
    j["oracle"] = json{{"hash", json_hash(cj)}, {"all_pass", cross.all_pass}, {"checks", cj["checks"]}};
    ok = ok && cross.all_pass;
  }
  j["consistent"] = ok;
  rec.consistent = ok;
  rec.record = std::move(j);

  char row[160];
  std::snprintf(row, sizeof row, "%-36s %5llu %3llu  vg:%-3s central:%-3s %s",
                spec.c_str(), static_cast<unsigned long long>(rec.order), static_cast<unsigned long long>(p),
                imp.vg.is_ms ? "MS" : "no", imp.central.is_ms ? "MS" : "no", ok ? "ok" : "FAIL");
  rec.table_row = row;
  return rec;
}

}  // namespace detail

inline CatalogOutcome run_catalog(const CatalogOptions& opt) {
  require(!opt.primes.empty(), Err::ParameterOutOfRange, "at least one prime is required");
  for (std::uint64_t p : opt.primes) require(is_prime_u64(p), Err::ParameterOutOfRange, "catalog primes must be prime");
  auto specs = catalog_specs(opt.max_order);
  std::vector<std::pair<std::string, std::uint64_t>> jobs;
  for (const auto& s : specs)
    for (std::uint64_t p : opt.primes) jobs.emplace_back(s, p);

  unsigned workers = opt.workers ? opt.workers : std::min(4u, std::max(1u, std::thread::hardware_concurrency()));
  CatalogOutcome out;
  out.records.resize(jobs.size());
  std::size_t next = 0;
  while (next < jobs.size()) {
    std::size_t batch = std::min<std::size_t>(workers, jobs.size() - next);
    std::vector<std::future<CatalogRecord>> fs;
    for (std::size_t i = 0; i < batch; ++i) {
      auto [spec, p] = jobs[next + i];
      fs.push_back(std::async(std::launch::async,
                              [spec = spec, p = p, &opt] { return detail::catalog_entry(spec, p, opt); }));
    }
    for (std::size_t i = 0; i < batch; ++i) out.records[next + i] = fs[i].get();
    next += batch;
  }
  for (const auto& r : out.records)
    if (!r.consistent) ++out.failures;
  return out;
}

}  // namespace msalg
