// weylrep: verification sweeps and table emission for Weyl group identities.
//
// Exit status: 0 when every verdict passes, 1 when a verdict fails,
// 2 for usage or configuration errors.

#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "weylrep/errors.hpp"
#include "weylrep/fixer.hpp"
#include "weylrep/tits.hpp"
#include "weylrep_tools/io.hpp"
#include "weylrep_tools/sweep.hpp"

using namespace weylrep;
using io::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  std::string type;
  int rank = 0;
  std::string format = "text";
  std::string out;
};

std::string type_label(const Common& c) {
  if (c.type.empty()) throw std::invalid_argument("--type is required");
  if (c.type.size() > 1) return c.type;
  if (c.rank <= 0) throw std::invalid_argument("--rank is required with a bare type letter");
  return c.type + std::to_string(c.rank);
}

std::shared_ptr<const RootSystem> load(const Common& c) {
  return std::make_shared<const RootSystem>(cartan_datum(type_label(c)));
}

void emit(const Common& c, const std::string& text, const json& doc) {
  std::string body = c.format == "json" ? doc.dump(2) + "\n" : text;
  if (c.out.empty())
    std::cout << body;
  else
    io::write_text_file(c.out, body);
}

void add_common(CLI::App* app, Common& c, bool needs_type = true) {
  auto* t = app->add_option("--type", c.type, "Root system type letter (A-G) or label such as D5");
  if (needs_type) t->required();
  app->add_option("--rank", c.rank, "Rank, when --type is a bare letter");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--out", c.out, "Write output to this file instead of stdout");
}

Word parse_word(const std::string& s, int rank) {
  Word w;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    int k = std::stoi(item);
    if (k < 1 || k > rank) throw std::invalid_argument("simple reflection label out of range: " + item);
    w.push_back(k - 1);
  }
  return w;
}

std::string torus_string(const RootSystem& rs, TorusPart t) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int i = 0; i < rs.rank(); ++i)
    if (t >> i & 1u) {
      out << (first ? "" : ", ") << "a" << i + 1 << "^vee(-1)";
      first = false;
    }
  out << "}";
  return out.str();
}

int default_table_node(const RootSystem& rs) {
  // The highest-numbered node whose Omega element has order at least 3.
  auto rsp = std::make_shared<const RootSystem>(rs.datum());
  int best = -1;
  for (const auto& e : omega_group(rsp, coweight_lattice(rs)))
    if (e.sigma.order() >= 3) best = e.node;
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl group, Tits extension and alcove-stabilizer verification"};
  app.require_subcommand(1);

  // sweep
  Common sweep_opts;
  std::string config_file;
  std::vector<std::string> sweep_types;
  std::vector<std::string> sweep_lattices;
  std::vector<std::int64_t> sweep_q;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  std::string constants_file;
  int threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Run verification checks across a grid of types");
  sweep->add_option("--config", config_file, "JSON config document");
  sweep->add_option("--type", sweep_types, "Type labels (A3) or letters combined with --rank");
  sweep->add_option("--rank", sweep_opts.rank, "Rank for bare type letters");
  sweep->add_option("--lattice", sweep_lattices, "Lattice names for the fixer check");
  sweep->add_option("--q", sweep_q, "Residue field sizes for the fixer check");
  auto* seed_opt = sweep->add_option("--seed", seed, "RNG seed");
  sweep->add_option("--budget", budget, "Exhaustive/sampling budget");
  sweep->add_option("--constants", constants_file, "Structure-constant fixture (JSON)");
  sweep->add_option("--threads", threads, "Worker threads (0: all cores)");
  sweep->add_option("--format", sweep_opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  sweep->add_option("--out", sweep_opts.out, "Write the report to this file");

  // table
  Common table_opts;
  int table_node = -1;
  auto* table = app.add_subcommand("table", "Emit the R/S triple table of an Omega element");
  add_common(table, table_opts);
  table->add_option("--node", table_node, "Affine node sigma sends -theta to (default: highest eligible)");

  // cocycle
  Common cocycle_opts;
  std::string u_word, v_word;
  auto* coc = app.add_subcommand("cocycle", "Compare the Tits cocycle with the flipping-set prediction");
  add_common(coc, cocycle_opts);
  coc->add_option("--u", u_word, "Word for u, comma-separated 1-based labels")->required();
  coc->add_option("--v", v_word, "Word for v, comma-separated 1-based labels")->required();

  // fixer
  Common fixer_opts;
  std::string lattice_name = "adjoint";
  std::int64_t q = 5;
  std::uint64_t fixer_seed = 1;
  int fixer_node = -1;
  auto* fix = app.add_subcommand("fixer", "Solve the residue-field fixing system");
  add_common(fix, fixer_opts);
  fix->add_option("--lattice", lattice_name, "Cocharacter lattice name");
  fix->add_option("--q", q, "Residue field size");
  fix->add_option("--seed", fixer_seed, "RNG seed for the generic functional");
  fix->add_option("--node", fixer_node, "Omega element by affine node (default: all)");

  // dump-rootsys
  Common dump_opts;
  auto* dump = app.add_subcommand("dump-rootsys", "Print a root system");
  add_common(dump, dump_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*sweep) {
      io::SweepConfig cfg;
      if (!config_file.empty()) cfg = io::config_from_json(io::read_json_file(config_file));
      if (!sweep_types.empty()) {
        cfg.types.clear();
        for (const auto& t : sweep_types)
          cfg.types.push_back(type_label(Common{t, sweep_opts.rank, "", ""}));
      }
      if (!sweep_lattices.empty()) cfg.lattices = sweep_lattices;
      if (!sweep_q.empty()) cfg.field_sizes = sweep_q;
      if (*seed_opt) cfg.seed = seed;
      if (budget) cfg.budget = budget;
      if (!constants_file.empty()) cfg.constants_file = constants_file;
      if (threads) cfg.threads = threads;
      cfg = io::config_from_json(io::config_to_json(cfg));  // same validation as files

      const io::Report report = io::run_sweep(cfg);
      emit(sweep_opts, report.to_text(), report.to_json());
      return report.passed() ? kPass : kFail;
    }

    if (*table) {
      auto rs = load(table_opts);
      const int node = table_node >= 0 ? table_node : default_table_node(*rs);
      if (node < 0)
        throw std::invalid_argument(rs->label() +
                                    " has no alcove-stabilizer element of order at least 3");
      WeylElement w = omega_sigma(rs, node);
      if (w.order() < 3)
        throw std::invalid_argument("the element for node " + std::to_string(node) + " has order " +
                                    std::to_string(w.order()) + "; a table needs order at least 3");
      SigmaRSDatum d = sigma_rs(w);
      std::vector<int> perm;
      for (int k = 0; k <= rs->rank(); ++k) perm.push_back(affine_image(w, k));
      json doc = io::sigma_table_json(d);
      doc["cycle"] = cycle_string(perm);
      emit(table_opts, rs->label() + " " + cycle_string(perm) + "\n" + io::sigma_table_text(d), doc);
      return fibers_constant(d) && sigma_rs_violations(d).empty() ? kPass : kFail;
    }

    if (*coc) {
      auto rs = load(cocycle_opts);
      WeylElement u = WeylElement::from_word(rs, parse_word(u_word, rs->rank()));
      WeylElement v = WeylElement::from_word(rs, parse_word(v_word, rs->rank()));
      const TorusPart got = cocycle(u, v);
      const TorusPart want = predicted_cocycle(u, v);
      json flips = json::array();
      for (RootIndex a : flipping_set(u, v)) flips.push_back(rs->root(a));
      json doc = {{"type", rs->label()},
                  {"u", io::word_json(u.word())},
                  {"v", io::word_json(v.word())},
                  {"flipping_set", flips},
                  {"computed", got},
                  {"predicted", want},
                  {"agree", got == want}};
      std::ostringstream text;
      text << "u = " << doc["u"].dump() << ", v = " << doc["v"].dump() << "\n"
           << "flipping set: " << flips.size() << " roots\n"
           << "cocycle:   " << torus_string(*rs, got) << "\n"
           << "predicted: " << torus_string(*rs, want) << "\n"
           << (got == want ? "agree" : "DISAGREE") << "\n";
      emit(cocycle_opts, text.str(), doc);
      return got == want ? kPass : kFail;
    }

    if (*fix) {
      auto rs = load(fixer_opts);
      const CocharLattice lat = lattice_by_name(*rs, lattice_name);
      const UnitGroup units = UnitGroup::for_field(q);
      const ScalarTable scalars(StructureConstants::extraspecial(rs));
      Rng rng(fixer_seed);
      const GenericFunctional lambda = random_functional(rs->rank(), units, rng);
      json results = json::array();
      std::ostringstream text;
      text << rs->label() << " " << lat.name() << ", q = " << q << ", lambda = "
           << json(lambda.lambdas).dump() << " (logarithms)\n";
      bool ok = true;
      bool any = false;
      for (const auto& e : omega_group(rs, lat)) {
        if (fixer_node >= 0 && e.node != fixer_node) continue;
        any = true;
        const FixerSystem sys = build_system(scalars, lat, e, lambda, units);
        auto x = solve(*rs, sys);
        const ObstructionClass own = obstruction_of_targets(*rs, lat, sys.targets, units);
        ok = ok && x.has_value() && sys.consistent;
        json r = {{"node", e.node},
                  {"cycle", cycle_string(e.diagram_perm)},
                  {"targets", sys.targets},
                  {"c_d", sys.character},
                  {"consistent", sys.consistent},
                  {"obstruction", {{"modulus", own.modulus}, {"value", own.value}}},
                  {"witness", x ? json(*x) : json(nullptr)}};
        results.push_back(r);
        text << "node " << e.node << " " << (e.node ? cycle_string(e.diagram_perm) : "identity")
             << ": targets " << json(sys.targets).dump() << ", obstruction " << own.value << " mod "
             << own.modulus << ", witness " << (x ? json(*x).dump() : "none") << "\n";
      }
      if (!any) throw std::invalid_argument("no Omega element for node " + std::to_string(fixer_node));
      json doc = {{"type", rs->label()}, {"lattice", lat.name()}, {"q", q},
                  {"seed", fixer_seed},  {"lambda", lambda.lambdas}, {"elements", results}};
      emit(fixer_opts, text.str(), doc);
      return ok ? kPass : kFail;
    }

    if (*dump) {
      auto rs = load(dump_opts);
      emit(dump_opts, io::root_system_text(*rs), io::root_system_json(*rs));
      return kPass;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
