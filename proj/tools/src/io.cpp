#include "weylrep_tools/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace weylrep::io {

json coeffs_json(const Coeffs& c) { return json(c); }

json root_system_json(const RootSystem& rs) {
  json cartan = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.datum().cartan(i, j));
    cartan.push_back(row);
  }
  json roots = json::array();
  for (RootIndex i = 0; i < rs.num_positive(); ++i) {
    roots.push_back({{"index", i},
                     {"coeffs", rs.root(i)},
                     {"coroot", rs.coroot(i)},
                     {"height", rs.height(i)}});
  }
  json lengths = json::array();
  for (int i = 0; i < rs.rank(); ++i) lengths.push_back(rs.simple_length(i));
  return {{"type", rs.label()},
          {"rank", rs.rank()},
          {"cartan", cartan},
          {"simple_lengths", lengths},
          {"num_roots", rs.num_roots()},
          {"coxeter_number", rs.coxeter_number()},
          {"highest_root", rs.marks()},
          {"positive_roots", roots}};
}

std::string root_system_text(const RootSystem& rs) {
  std::ostringstream out;
  out << rs.label() << ": " << rs.num_roots() << " roots, Coxeter number " << rs.coxeter_number()
      << ", highest root " << format_coeffs(rs.marks()) << "\n";
  for (RootIndex i = 0; i < rs.num_positive(); ++i)
    out << std::setw(4) << i << "  ht " << std::setw(2) << rs.height(i) << "  "
        << format_coeffs(rs.root(i)) << "  coroot " << format_coeffs(rs.coroot(i)) << "\n";
  return out.str();
}

json constants_json(const StructureConstants& c) {
  json entries = json::array();
  for (const auto& e : c.entries())
    entries.push_back({{"a", c.roots().root(e.a)}, {"b", c.roots().root(e.b)}, {"n", e.value}});
  return {{"type", c.roots().label()}, {"convention", c.convention()}, {"entries", entries}};
}

StructureConstants constants_from_json(std::shared_ptr<const RootSystem> rs, const json& doc) {
  try {
    if (doc.at("type").get<std::string>() != rs->label())
      throw std::invalid_argument("constant table is for " + doc.at("type").get<std::string>() +
                                  ", not " + rs->label());
    std::vector<ConstantEntry> entries;
    for (const auto& e : doc.at("entries")) {
      auto a = rs->find(e.at("a").get<Coeffs>());
      auto b = rs->find(e.at("b").get<Coeffs>());
      if (!a || !b) throw std::invalid_argument("constant table names a non-root: " + e.dump());
      entries.push_back({*a, *b, e.at("n").get<int>()});
    }
    return StructureConstants::from_entries(std::move(rs), entries,
                                            doc.value("convention", std::string("fixture")));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed constant table: ") + e.what());
  }
}

json sigma_table_json(const SigmaRSDatum& d) {
  const RootSystem& rs = d.w.roots();
  const RootSet& rows = d.part(1, 0);
  const RootSet& cols = d.part(0, 1);
  json jrows = json::array();
  for (RootIndex r : rows) jrows.push_back(rs.root(r));
  json jcols = json::array();
  for (RootIndex c : cols) jcols.push_back(rs.root(c));
  json cells = json::array();
  for (RootIndex r : rows) {
    json line = json::array();
    for (RootIndex c : cols) {
      auto s = rs.sum(r, c);
      line.push_back(s ? json(rs.root(*s)) : json(nullptr));
    }
    cells.push_back(line);
  }
  return {{"type", rs.label()},
          {"R", rs.root(d.r)},
          {"S", rs.root(d.s)},
          {"rows", jrows},
          {"columns", jcols},
          {"cells", cells},
          {"triples", d.triples.size()},
          {"fibers", {{"a", d.a}, {"b", d.b}, {"c", d.c}}},
          {"coxeter_number", rs.coxeter_number()}};
}

std::string sigma_table_text(const SigmaRSDatum& d) {
  const RootSystem& rs = d.w.roots();
  const RootSet& rows = d.part(1, 0);
  const RootSet& cols = d.part(0, 1);
  std::size_t width = 1;
  for (RootIndex i = 0; i < rs.num_positive(); ++i)
    width = std::max(width, format_coeffs(rs.root(i)).size());
  auto cell = [&](const std::string& s) {
    std::string out = s;
    // "∉" is three bytes but one column.
    std::size_t shown = s == "∉" ? 1 : s.size();
    out.append(width - shown + 2, ' ');
    return out;
  };
  std::ostringstream out;
  out << "R = " << format_coeffs(rs.root(d.r)) << ", S = " << format_coeffs(rs.root(d.s)) << "\n";
  out << cell("+") << "| ";
  for (RootIndex c : cols) out << cell(format_coeffs(rs.root(c)));
  out << "\n" << std::string(width + 2, '-') << "+" << std::string(cols.size() * (width + 2) + 1, '-')
      << "\n";
  for (RootIndex r : rows) {
    out << cell(format_coeffs(rs.root(r))) << "| ";
    for (RootIndex c : cols) {
      auto s = rs.sum(r, c);
      out << cell(s ? format_coeffs(rs.root(*s)) : "∉");
    }
    out << "\n";
  }
  out << "fibers: a = " << d.a << ", b = " << d.b << ", c = " << d.c
      << "; h = " << rs.coxeter_number() << "; " << d.triples.size() << " triples\n";
  return out.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace weylrep::io
