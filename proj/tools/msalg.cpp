// msalg: decide whether the trace-zero subspace of a finite-group algebra
// over a splitting field (and its central part) is a Mathieu subspace, with
// block/degree inspection, brute-force oracles and a batch catalog runner.
//
// Machine-readable JSON goes to stdout, a human summary to stderr. Exit codes
// for `decide`: 0 = Mathieu, 2 = not Mathieu, 1 = error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "msalg/msalg.hpp"

namespace {

using namespace msalg;

struct GlobalFlags {
  std::uint64_t seed = global_seed();
  bool seed_set = false;
  bool json_only = false;
};

void apply_seed(const GlobalFlags& g) {
  if (g.seed_set) set_global_seed(g.seed);
}

void human(const GlobalFlags& g, const std::string& line) {
  if (!g.json_only) std::cerr << line << "\n";
}

std::uint64_t parse_prime_arg(std::int64_t p, bool allow_zero) {
  require(p >= 0, Err::ParameterOutOfRange, "p must be nonnegative");
  if (p == 0) {
    require(allow_zero, Err::ParameterOutOfRange, "p = 0 (characteristic zero) is only valid for decide");
    return 0;
  }
  require(is_prime_u64(static_cast<std::uint64_t>(p)), Err::ParameterOutOfRange,
          std::to_string(p) + " is not prime");
  return static_cast<std::uint64_t>(p);
}

int cmd_decide(const GlobalFlags& g, const std::string& spec, std::int64_t prime, const std::string& subject) {
  apply_seed(g);
  std::uint64_t p = parse_prime_arg(prime, /*allow_zero=*/true);
  FiniteGroup G = parse_group_spec(spec);
  json out;
  bool all_ms = true;
  if (subject == "vg" || subject == "central") {
    MsVerdict v = decide(G, subject == "vg" ? Subject::VG : Subject::VG_CENTRAL, p);
    all_ms = v.is_ms;
    out = verdict_json(v);
    human(g, std::string(subject_name(v.subject)) + "(" + spec + ", p=" + std::to_string(p) + "): " +
                 (v.is_ms ? "Mathieu" : "not Mathieu") + " [" + reason_name(v.reason) + "]");
  } else if (subject == "both") {
    MsVerdict v1 = decide_vg(G, p);
    MsVerdict v2 = decide_central(G, p);
    all_ms = v1.is_ms && v2.is_ms;
    out = json{{"vg", verdict_json(v1)}, {"central", verdict_json(v2)}};
    human(g, "vg: " + std::string(v1.is_ms ? "Mathieu" : "not Mathieu") + " [" + reason_name(v1.reason) +
                 "], central: " + (v2.is_ms ? "Mathieu" : "not Mathieu") + " [" + reason_name(v2.reason) + "]");
  } else {
    fail(Err::ParameterOutOfRange, "subject must be vg, central or both");
  }
  std::cout << out.dump(2) << "\n";
  return all_ms ? 0 : 2;
}

int cmd_blocks(const GlobalFlags& g, const std::string& spec, std::int64_t prime, bool emit_idempotents) {
  apply_seed(g);
  std::uint64_t p = parse_prime_arg(prime, false);
  FiniteGroup G = parse_group_spec(spec);
  std::uint64_t d = p_split(G, p).d;
  json out;
  auto fill = [&](auto code_tag) {
    using Code = decltype(code_tag);
    auto A = make_algebra(G, splitting_field_for<Code>(G, p));
    Rng rng(global_seed(), fnv1a(G.label + "|blocks|" + std::to_string(p)));
    auto B = block_idempotents(A, rng);
    out = json{{"group", spec},
               {"order", G.order},
               {"p", p},
               {"field", {{"p", A.field->p()}, {"k", A.field->k()}}},
               {"count", B.summary.count()},
               {"blocks", blocks_json(B.summary)},
               {"seed", global_seed()},
               {"version", kVersion}};
    if (emit_idempotents) {
      json arr = json::array();
      for (const auto& f : B.idempotents) arr.push_back(alg_elem_json(f));
      out["idempotents"] = arr;
    }
  };
  if (detail::field_fits_u64(d, p))
    fill(std::uint64_t{});
  else
    fill(u128{});
  std::cout << out.dump(2) << "\n";
  human(g, spec + " at p=" + std::to_string(p) + ": " + std::to_string(out["count"].get<std::size_t>()) + " block(s)");
  return 0;
}

int cmd_degrees(const GlobalFlags& g, const std::string& spec, std::int64_t prime) {
  apply_seed(g);
  std::uint64_t p = parse_prime_arg(prime, false);
  FiniteGroup G = parse_group_spec(spec);
  DegreeInfo info = compute_degrees(G, p, global_seed());
  json out{{"group", spec}, {"order", G.order}, {"p", p}, {"seed", global_seed()}, {"version", kVersion}};
  if (info.no_normal_sylow) {
    out["notice"] = "NO_NORMAL_SYLOW";
    out["degrees"] = nullptr;
    human(g, spec + " at p=" + std::to_string(p) + ": no normal Sylow p-subgroup, degrees not computed");
  } else {
    out["degrees"] = info.degrees;
    out["computed_on_quotient"] = info.on_quotient;
    if (info.on_quotient) out["quotient_order"] = info.quotient_order;
    out["field"] = json{{"p", info.field_pk->first}, {"k", info.field_pk->second}};
    std::string ds;
    for (auto n : info.degrees) ds += (ds.empty() ? "" : ",") + std::to_string(n);
    human(g, spec + " at p=" + std::to_string(p) + ": degrees [" + ds + "]" +
                 (info.on_quotient ? " (computed on G/H)" : ""));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_oracle(const GlobalFlags& g, const std::string& spec, std::int64_t prime, const std::string& mode,
               std::uint64_t trials, std::uint64_t budget_states) {
  apply_seed(g);
  std::uint64_t p = parse_prime_arg(prime, false);
  FiniteGroup G = parse_group_spec(spec);
  ScanBudget budget;
  budget.trials = trials;
  budget.max_states = budget_states;
  budget.seed = global_seed();
  std::uint64_t d = p_split(G, p).d;
  require(detail::field_fits_u64(d, p), Err::DegreeCap, "oracle scans require a 64-bit splitting field");
  auto A = make_algebra(G, splitting_field_for<std::uint64_t>(G, p));
  json out{{"group", spec},    {"order", G.order},
           {"p", p},           {"field", {{"p", A.field->p()}, {"k", A.field->k()}}},
           {"mode", mode},     {"budget", {{"max_states", budget.max_states}, {"trials", budget.trials}}},
           {"seed", budget.seed}, {"version", kVersion}};
  if (mode == "scan") {
    auto found = scan_all_idempotents(A, budget);
    json arr = json::array();
    std::size_t zero_trace = 0;
    for (const auto& r : found) {
      if (r.nonzero && r.trace_value == 0) ++zero_trace;
      arr.push_back(idempotent_report_json(r));
    }
    out["idempotents"] = arr;
    out["count"] = found.size();
    out["nonzero_trace_zero"] = zero_trace;
    human(g, "scan: " + std::to_string(found.size()) + " idempotent(s), " + std::to_string(zero_trace) +
                 " nonzero trace-zero");
  } else if (mode == "central") {
    Rng rng(budget.seed, fnv1a(G.label + "|blocks|" + std::to_string(p)));
    auto B = block_idempotents(A, rng);
    auto found = enumerate_central_idempotents(B);
    json arr = json::array();
    std::size_t zero_trace = 0;
    for (const auto& r : found) {
      if (r.nonzero && r.trace_value == 0) ++zero_trace;
      arr.push_back(idempotent_report_json(r));
    }
    out["idempotents"] = arr;
    out["count"] = found.size();
    out["nonzero_trace_zero"] = zero_trace;
    human(g, "central enumeration: " + std::to_string(found.size()) + " idempotent(s), " +
                 std::to_string(zero_trace) + " nonzero trace-zero");
  } else if (mode == "random") {
    auto found = random_idempotent_search(A, budget);
    if (found) {
      out["witness"] = idempotent_report_json(*found);
      human(g, "random search: found a nonzero trace-zero idempotent");
    } else {
      out["witness"] = nullptr;
      human(g, "random search: nothing found (not a proof of absence)");
    }
  } else {
    fail(Err::ParameterOutOfRange, "mode must be scan, central or random");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_catalog(const GlobalFlags& g, std::uint32_t max_order, const std::string& primes_csv,
                const std::string& out_path, std::uint64_t trials, std::uint64_t budget_states) {
  apply_seed(g);
  CatalogOptions opt;
  opt.max_order = max_order;
  opt.seed = global_seed();
  opt.budget.trials = trials;
  opt.budget.max_states = budget_states;
  opt.budget.seed = opt.seed;
  std::stringstream ss(primes_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    opt.primes.push_back(parse_prime_arg(std::stoll(tok), false));
  }
  require(!opt.primes.empty(), Err::ParameterOutOfRange, "at least one prime is required (--primes a,b,c)");
  CatalogOutcome outcome = run_catalog(opt);

  std::ostream* sink = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    require(static_cast<bool>(file), Err::IoError, "cannot open " + out_path);
    sink = &file;
  }
  for (const auto& rec : outcome.records) *sink << rec.record.dump() << "\n";
  for (const auto& rec : outcome.records) human(g, rec.table_row);
  human(g, std::to_string(outcome.records.size()) + " record(s), " + std::to_string(outcome.failures) +
               " inconsistent");
  return outcome.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mathieu-subspace decisions for trace-zero subspaces of modular group algebras"};
  app.require_subcommand(1);
  GlobalFlags g;

  std::string spec, subject = "both", mode = "scan", primes_csv, out_path;
  std::int64_t prime = -1;
  std::uint64_t trials = 10000, budget_states = 1ULL << 24;
  std::uint32_t max_order = 24;
  bool emit_idempotents = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", g.seed, "random seed (overrides MSALG_SEED)")->each([&g](const std::string&) {
      g.seed_set = true;
    });
    cmd->add_flag("--json", g.json_only, "suppress the human-readable summary on stderr");
  };

  CLI::App* decide_cmd = app.add_subcommand("decide", "decide the Mathieu property");
  decide_cmd->add_option("--group", spec, "group spec (e.g. symmetric:3)")->required();
  decide_cmd->add_option("--prime", prime, "characteristic p (0 = characteristic zero)")->required();
  decide_cmd->add_option("--subject", subject, "vg | central | both (default both)");
  add_common(decide_cmd);

  CLI::App* blocks_cmd = app.add_subcommand("blocks", "block idempotent summary");
  blocks_cmd->add_option("--group", spec)->required();
  blocks_cmd->add_option("--prime", prime)->required();
  blocks_cmd->add_flag("--emit-idempotents", emit_idempotents, "include full idempotent coefficient arrays");
  add_common(blocks_cmd);

  CLI::App* degrees_cmd = app.add_subcommand("degrees", "irreducible degrees over the splitting field");
  degrees_cmd->add_option("--group", spec)->required();
  degrees_cmd->add_option("--prime", prime)->required();
  add_common(degrees_cmd);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force idempotent oracles");
  oracle_cmd->add_option("--group", spec)->required();
  oracle_cmd->add_option("--prime", prime)->required();
  oracle_cmd->add_option("--mode", mode, "scan | central | random");
  oracle_cmd->add_option("--trials", trials, "random-search trials");
  oracle_cmd->add_option("--budget-states", budget_states, "state cap for exhaustive scans");
  add_common(oracle_cmd);

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "run the builtin catalog");
  catalog_cmd->add_option("--max-order", max_order, "largest group order (default 24, cap 64)");
  catalog_cmd->add_option("--primes", primes_csv, "comma-separated primes")->required();
  catalog_cmd->add_option("--out", out_path, "JSONL output path (default stdout)");
  catalog_cmd->add_option("--trials", trials);
  catalog_cmd->add_option("--budget-states", budget_states);
  add_common(catalog_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // script-friendly: every usage error is exit 1
  }

  try {
    if (decide_cmd->parsed()) return cmd_decide(g, spec, prime, subject);
    if (blocks_cmd->parsed()) return cmd_blocks(g, spec, prime, emit_idempotents);
    if (degrees_cmd->parsed()) return cmd_degrees(g, spec, prime);
    if (oracle_cmd->parsed()) return cmd_oracle(g, spec, prime, mode, trials, budget_states);
    if (catalog_cmd->parsed()) {
      require(max_order <= 64, Err::ParameterOutOfRange, "catalog max order is capped at 64");
      return cmd_catalog(g, max_order, primes_csv, out_path, trials, budget_states);
    }
  } catch (const MsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
