#include "weylrep_tools/sweep.hpp"

#include <atomic>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "weylrep/errors.hpp"
#include "weylrep/fixer.hpp"
#include "weylrep/random.hpp"
#include "weylrep/tits.hpp"

namespace weylrep::io {

namespace {

std::uint64_t cell_seed(std::uint64_t seed, const std::string& type, const std::string& check) {
  // FNV-1a over the cell name, mixed into the user seed.
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : type + "/" + check) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

template <typename T>
void read_key(const json& doc, const char* key, T& out) {
  if (doc.contains(key)) out = doc.at(key).get<T>();
}

CheckResult make(const std::string& type, const std::string& check) {
  CheckResult r;
  r.type = type;
  r.check = check;
  return r;
}

void fail(CheckResult& r, json witness) {
  if (r.passed) r.witness = std::move(witness);
  r.passed = false;
}

json root_json(const RootSystem& rs, RootIndex a) { return rs.root(a); }

CheckResult check_constants(const StructureConstants& sc, const std::string& type) {
  CheckResult r = make(type, "constants");
  r.mode = "exhaustive";
  const RootSystem& rs = sc.roots();
  r.count = sc.entries().size();
  for (const auto& msg : sc.structural_violations()) {
    fail(r, {{"message", msg}});
    break;
  }
  auto jac = sc.jacobi_violations(1);
  if (!jac.empty()) {
    const auto& v = jac.front();
    fail(r, {{"message", "Jacobi identity fails"},
             {"triple", {root_json(rs, v.a), root_json(rs, v.b), root_json(rs, v.c)}}});
    r.note = "Jacobi identity fails on " + format_coeffs(rs.root(v.a)) + ", " +
             format_coeffs(rs.root(v.b)) + ", " + format_coeffs(rs.root(v.c));
  }
  return r;
}

CheckResult check_formula1(std::shared_ptr<const RootSystem> rs, const SweepConfig& cfg,
                           const std::optional<std::vector<WeylElement>>& group) {
  CheckResult r = make(rs->label(), "formula1");
  auto check_one = [&](const WeylElement& w) {
    ++r.count;
    if (!check_symmetry(w)) fail(r, {{"word", word_json(w.word())}, {"message", "symmetry"}});
    for (RootIndex a = 0; a < rs->num_roots(); ++a)
      if (!check_formula1(w, a))
        fail(r, {{"word", word_json(w.word())}, {"root", rs->root(a)}});
  };
  if (group) {
    r.mode = "exhaustive";
    for (const auto& w : *group) check_one(w);
  } else {
    r.mode = "sampled";
    Rng rng(cell_seed(cfg.seed, rs->label(), "formula1"));
    const std::uint64_t n = std::max<std::uint64_t>(1, cfg.budget / rs->num_roots());
    for (std::uint64_t k = 0; k < n; ++k) check_one(random_element(rs, rng));
  }
  return r;
}

CheckResult check_cocycle(std::shared_ptr<const RootSystem> rs, const SweepConfig& cfg,
                          const std::optional<std::vector<WeylElement>>& group) {
  CheckResult r = make(rs->label(), "cocycle");
  auto check_one = [&](const WeylElement& u, const WeylElement& v) {
    ++r.count;
    const TorusPart got = cocycle(u, v);
    const TorusPart want = predicted_cocycle(u, v);
    if (got != want)
      fail(r, {{"u", word_json(u.word())}, {"v", word_json(v.word())}, {"computed", got},
               {"predicted", want}});
  };
  if (group && group->size() * group->size() <= cfg.budget) {
    r.mode = "exhaustive";
    for (const auto& u : *group)
      for (const auto& v : *group) check_one(u, v);
  } else {
    r.mode = "sampled";
    Rng rng(cell_seed(cfg.seed, rs->label(), "cocycle"));
    for (std::uint64_t k = 0; k < cfg.budget; ++k) {
      WeylElement u = random_element(rs, rng);
      WeylElement v = random_element(rs, rng);
      check_one(u, v);
    }
  }
  return r;
}

void check_omega(std::shared_ptr<const RootSystem> rs, const SweepConfig& cfg,
                 std::vector<CheckResult>& out) {
  const auto omega = omega_group(rs, coweight_lattice(*rs));
  CheckResult f2 = make(rs->label(), "formula2");
  CheckResult fib = make(rs->label(), "fibers");
  f2.mode = fib.mode = "exhaustive";
  for (const auto& e : omega) {
    if (e.sigma.is_identity()) continue;
    const json where = {{"node", e.node}, {"cycle", cycle_string(e.diagram_perm)}};
    ++f2.count;
    if (!check_fw_even(e.sigma)) {
      json w = where;
      w["fw_at_r"] = fw_at_r(e.sigma);
      fail(f2, w);
    }
    if (e.sigma.order() < 3) continue;
    SigmaRSDatum d = sigma_rs(e.sigma);
    ++fib.count;
    auto bad = sigma_rs_violations(d);
    if (!fibers_constant(d) || !bad.empty()) {
      json w = where;
      w["violations"] = bad;
      w["fibers"] = {d.a, d.b, d.c};
      fail(fib, w);
    }
    for (RootIndex a = 0; a < rs->num_roots(); ++a)
      if (!check_formula2(d, a)) {
        json w = where;
        w["root"] = rs->root(a);
        fail(f2, w);
      }
  }
  if (fib.count == 0) fib.mode = "vacuous";
  if (f2.count == 0) f2.mode = "vacuous";
  if (cfg.checks.formula2) out.push_back(f2);
  if (cfg.checks.fibers) out.push_back(fib);
}

CheckResult check_cd(const ScalarTable& table, std::shared_ptr<const RootSystem> rs) {
  CheckResult r = make(rs->label(), "c_d");
  r.mode = "exhaustive";
  const auto rel = highest_root_relation(*rs);
  for (const auto& e : omega_group(rs, coweight_lattice(*rs))) {
    ++r.count;
    const int c = evaluate_character(table, rel, e.sigma);
    if (c != 1) fail(r, {{"node", e.node}, {"cycle", cycle_string(e.diagram_perm)}, {"value", c}});
  }
  return r;
}

CheckResult check_fixer(const ScalarTable& table, std::shared_ptr<const RootSystem> rs,
                        const SweepConfig& cfg) {
  CheckResult r = make(rs->label(), "fixer");
  r.mode = "sampled";
  std::vector<CocharLattice> lattices;
  if (cfg.lattices.empty()) {
    lattices = intermediate_lattices(*rs);
  } else {
    for (const auto& name : cfg.lattices) {
      try {
        lattices.push_back(lattice_by_name(*rs, name));
      } catch (const std::invalid_argument&) {
        // Not every type has every named lattice.
      }
    }
  }
  Rng rng(cell_seed(cfg.seed, rs->label(), "fixer"));
  for (const auto& lat : lattices)
    for (const auto& e : omega_group(rs, lat))
      for (std::int64_t q : cfg.field_sizes) {
        const UnitGroup units = UnitGroup::for_field(q);
        for (int k = 0; k < cfg.fixer_samples; ++k) {
          const GenericFunctional lambda = random_functional(rs->rank(), units, rng);
          ++r.count;
          const FixerSystem sys = build_system(table, lat, e, lambda, units);
          if (!sys.consistent || !solve(*rs, sys))
            fail(r, {{"lattice", lat.name()}, {"node", e.node}, {"q", q},
                     {"lambda", lambda.lambdas}, {"consistent", sys.consistent}});
        }
      }
  if (r.count == 0) r.mode = "vacuous";
  return r;
}

}  // namespace

json word_json(const Word& w) {
  json out = json::array();
  for (int s : w) out.push_back(s + 1);
  return out;
}

Word word_from_json(const json& j) {
  Word w;
  for (const auto& x : j) w.push_back(x.get<int>() - 1);
  return w;
}

SweepConfig config_from_json(const json& doc) {
  static const std::vector<std::string> known{"types",  "lattices",       "checks",
                                              "budget", "seed",           "field_sizes",
                                              "fixer_samples", "constants_file", "threads"};
  SweepConfig c;
  try {
    if (!doc.is_object()) throw std::invalid_argument("config must be an object");
    for (const auto& [key, value] : doc.items())
      if (std::find(known.begin(), known.end(), key) == known.end())
        throw std::invalid_argument("unknown config key '" + key + "'");
    read_key(doc, "types", c.types);
    read_key(doc, "lattices", c.lattices);
    read_key(doc, "budget", c.budget);
    read_key(doc, "seed", c.seed);
    read_key(doc, "field_sizes", c.field_sizes);
    read_key(doc, "fixer_samples", c.fixer_samples);
    read_key(doc, "constants_file", c.constants_file);
    read_key(doc, "threads", c.threads);
    if (doc.contains("checks")) {
      const json& ch = doc.at("checks");
      if (!ch.is_object())
        throw std::invalid_argument("'checks' must be an object of booleans, e.g. {\"fixer\": false}");
      static const std::vector<std::string> names{"constants", "formula1", "cocycle", "formula2",
                                                  "fibers",    "c_d",      "fixer"};
      for (const auto& [key, value] : ch.items())
        if (std::find(names.begin(), names.end(), key) == names.end())
          throw std::invalid_argument("unknown check '" + key + "'");
      read_key(ch, "constants", c.checks.constants);
      read_key(ch, "formula1", c.checks.formula1);
      read_key(ch, "cocycle", c.checks.cocycle);
      read_key(ch, "formula2", c.checks.formula2);
      read_key(ch, "fibers", c.checks.fibers);
      read_key(ch, "c_d", c.checks.c_d);
      read_key(ch, "fixer", c.checks.fixer);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config: ") + e.what());
  }
  if (c.types.empty()) throw std::invalid_argument("config lists no types");
  for (const auto& t : c.types) cartan_datum(t);  // validates the label
  for (auto q : c.field_sizes) UnitGroup::for_field(q);
  if (c.fixer_samples < 0) throw std::invalid_argument("fixer_samples must be nonnegative");
  if (!c.constants_file.empty() && c.types.size() != 1)
    throw std::invalid_argument("a constant-table fixture needs exactly one type");
  return c;
}

json config_to_json(const SweepConfig& c) {
  return {{"types", c.types},
          {"lattices", c.lattices},
          {"checks",
           {{"constants", c.checks.constants},
            {"formula1", c.checks.formula1},
            {"cocycle", c.checks.cocycle},
            {"formula2", c.checks.formula2},
            {"fibers", c.checks.fibers},
            {"c_d", c.checks.c_d},
            {"fixer", c.checks.fixer}}},
          {"budget", c.budget},
          {"seed", c.seed},
          {"field_sizes", c.field_sizes},
          {"fixer_samples", c.fixer_samples},
          {"constants_file", c.constants_file}};
}

std::vector<CheckResult> run_cell(const SweepConfig& cfg, const std::string& type) {
  auto rs = std::make_shared<const RootSystem>(cartan_datum(type));
  std::vector<CheckResult> out;
  const auto& ch = cfg.checks;

  std::optional<std::vector<WeylElement>> group;
  if (ch.formula1 || ch.cocycle) group = enumerate_group(rs, cfg.budget);
  if (ch.formula1) out.push_back(check_formula1(rs, cfg, group));
  if (ch.cocycle) out.push_back(check_cocycle(rs, cfg, group));
  if (ch.formula2 || ch.fibers) check_omega(rs, cfg, out);

  if (!(ch.constants || ch.c_d || ch.fixer)) return out;
  std::optional<StructureConstants> sc;
  if (cfg.constants_file.empty())
    sc = StructureConstants::extraspecial(rs);
  else
    sc = constants_from_json(rs, read_json_file(cfg.constants_file));
  bool usable = true;
  if (ch.constants) {
    out.push_back(check_constants(*sc, type));
    usable = out.back().passed;
  }
  std::optional<ScalarTable> table;
  if (usable) {
    try {
      table.emplace(*sc);
    } catch (const InvariantViolation& e) {
      CheckResult r = make(type, "scalars");
      r.mode = "exhaustive";
      fail(r, {{"message", e.what()}});
      out.push_back(r);
    }
  }
  auto skipped = [&](const char* name) {
    CheckResult r = make(type, name);
    r.mode = "skipped";
    r.note = "constant table failed validation";
    return r;
  };
  if (ch.c_d) out.push_back(table ? check_cd(*table, rs) : skipped("c_d"));
  if (ch.fixer) out.push_back(table ? check_fixer(*table, rs, cfg) : skipped("fixer"));
  return out;
}

Report run_sweep(const SweepConfig& config) {
  const std::size_t n = config.types.size();
  std::vector<std::vector<CheckResult>> cells(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        cells[i] = run_cell(config, config.types[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads > 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Report report;
  report.config = config;
  for (auto& c : cells)
    for (auto& r : c) report.results.push_back(std::move(r));
  return report;
}

bool Report::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

json Report::to_json() const {
  json checks = json::array();
  for (const auto& r : results) {
    json j = {{"type", r.type},
              {"check", r.check},
              {"mode", r.mode},
              {"count", r.count},
              {"passed", r.passed}};
    if (!r.passed) j["witness"] = r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    checks.push_back(j);
  }
  return {{"schema_version", kReportSchemaVersion},
          {"seed", config.seed},
          {"config", config_to_json(config)},
          {"passed", passed()},
          {"checks", checks}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "seed " << config.seed << "\n";
  for (const auto& r : results) {
    out << (r.passed ? "pass " : "FAIL ") << r.type << " " << r.check << " (" << r.mode << ", "
        << r.count << ")";
    if (!r.note.empty()) out << ": " << r.note;
    if (!r.passed && r.note.empty()) out << ": " << r.witness.dump();
    out << "\n";
  }
  out << (passed() ? "all checks passed" : "some checks failed") << "\n";
  return out.str();
}

}  // namespace weylrep::io
