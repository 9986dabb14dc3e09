#include "frob/monoid_io.hpp"

#include <sstream>

#include "frob/errors.hpp"

namespace frob {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* name, const std::string& path) {
  if (!j.is_object()) throw parse_error(path, "expected an object");
  const auto it = j.find(name);
  if (it == j.end()) throw parse_error(path + "." + name, "missing field");
  return *it;
}

std::int64_t require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw parse_error(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> require_vector(const json& j, const std::string& path) {
  if (!j.is_array()) throw parse_error(path, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const std::int64_t v = require_int(j[i], p);
    if (v < 0) throw parse_error(p, "expected a non-negative integer");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Monoid parse_monoid(const json& j, const std::string& path) {
  const json& type = require_field(j, "type", path);
  if (!type.is_string()) throw parse_error(path + ".type", "expected a string");
  const std::string kind = type.get<std::string>();
  if (kind == "free") {
    const std::int64_t rank = require_int(require_field(j, "rank", path), path + ".rank");
    if (rank < 1) throw parse_error(path + ".rank", "expected a positive rank");
    return Monoid::free_monoid(rank);
  }
  if (kind == "submonoid") {
    const std::int64_t ambient =
        require_int(require_field(j, "ambient_rank", path), path + ".ambient_rank");
    const json& gens = require_field(j, "generators", path);
    if (!gens.is_array()) throw parse_error(path + ".generators", "expected an array");
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < gens.size(); ++i)
      rows.push_back(require_vector(gens[i], path + ".generators[" + std::to_string(i) + "]"));
    try {
      return Monoid::submonoid(ambient, std::move(rows));
    } catch (const std::invalid_argument& e) {
      throw parse_error(path + ".generators", e.what());
    }
  }
  if (kind == "glued") {
    const Monoid left = parse_monoid(require_field(j, "left", path), path + ".left");
    const Monoid right = parse_monoid(require_field(j, "right", path), path + ".right");
    const Element rho1 = parse_element(left, require_field(j, "rho1", path), path + ".rho1");
    const Element rho2 = parse_element(right, require_field(j, "rho2", path), path + ".rho2");
    try {
      return Monoid::glued(left, right, rho1, rho2);
    } catch (const std::invalid_argument& e) {
      throw parse_error(path, e.what());
    }
  }
  if (kind == "adjoin_root") {
    const Monoid base = parse_monoid(require_field(j, "base", path), path + ".base");
    const Element rho = parse_element(base, require_field(j, "rho", path), path + ".rho");
    const std::int64_t r = require_int(require_field(j, "r", path), path + ".r");
    try {
      return base.adjoin_root(rho, r);
    } catch (const std::invalid_argument& e) {
      throw parse_error(path, e.what());
    }
  }
  throw parse_error(path + ".type", "unknown monoid type \"" + kind + "\"");
}

Element parse_element(const Monoid& m, const json& j, const std::string& path) {
  Element e;
  if (j.is_array()) {
    e = Element::vector_form(require_vector(j, path));
  } else if (j.is_object() && j.contains("x1")) {
    if (m.kind() != Monoid::Kind::glued)
      throw parse_error(path, "raw pairs are only valid for glued monoids");
    const Element x1 = parse_element(m.left(), require_field(j, "x1", path), path + ".x1");
    const Element x2 = parse_element(m.right(), require_field(j, "x2", path), path + ".x2");
    return m.from_pair(x1, x2);
  } else if (j.is_object()) {
    if (m.kind() != Monoid::Kind::glued)
      throw parse_error(path, "glued triples are only valid for glued monoids");
    const std::int64_t n = require_int(require_field(j, "n", path), path + ".n");
    if (n < 0) throw parse_error(path + ".n", "expected a non-negative integer");
    const Element h1 = parse_element(m.left(), require_field(j, "hat1", path), path + ".hat1");
    const Element h2 = parse_element(m.right(), require_field(j, "hat2", path), path + ".hat2");
    e = Element::glued_form(n, h1, h2);
  } else {
    throw parse_error(path, "expected an element literal");
  }
  try {
    m.validate(e);
  } catch (const std::invalid_argument& err) {
    throw parse_error(path, err.what());
  }
  return e;
}

json monoid_to_json(const Monoid& m) {
  switch (m.kind()) {
    case Monoid::Kind::free:
      return json{{"type", "free"}, {"rank", m.rank()}};
    case Monoid::Kind::submonoid: {
      json gens = json::array();
      for (const auto& g : m.generators()) gens.push_back(g.coords());
      return json{{"type", "submonoid"}, {"ambient_rank", m.ambient_rank()}, {"generators", gens}};
    }
    case Monoid::Kind::glued:
      return json{{"type", "glued"},
                  {"left", monoid_to_json(m.left())},
                  {"right", monoid_to_json(m.right())},
                  {"rho1", element_to_json(m.rho1())},
                  {"rho2", element_to_json(m.rho2())}};
  }
  throw std::logic_error("unreachable");
}

json element_to_json(const Element& e) {
  if (e.is_vector()) return json(e.coords());
  return json{{"n", e.glue_count()},
              {"hat1", element_to_json(e.hat1())},
              {"hat2", element_to_json(e.hat2())}};
}

json betti_to_json(const BettiVector& b) {
  json out = json::object();
  for (const auto& [i, v] : b.nonzero_entries()) out[std::to_string(i)] = v;
  return out;
}

json interval_to_json(const OpenInterval& interval) {
  json elements = json::array();
  for (const auto& e : interval.elements) elements.push_back(element_to_json(e));
  json covers = json::array();
  for (const auto& [i, j] : interval.order.cover_pairs()) covers.push_back(json::array({i, j}));
  return json{{"elements", elements}, {"covers", covers}};
}

json frobenius_complex_to_json(const FrobeniusComplex& f) {
  if (f.formal_s2) return json{{"formal", "S^-2"}};
  json vertices = json::array();
  for (const auto& e : f.vertex_labels) vertices.push_back(element_to_json(e));
  if (f.vertex_labels.empty())
    for (std::size_t v = 0; v < f.complex.vertex_count(); ++v) vertices.push_back(v);
  json facets = json::array();
  for (const auto& facet : f.complex.facet_list()) facets.push_back(facet);
  return json{{"vertices", vertices}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j, const std::string& path) {
  const json& vertices = require_field(j, "vertices", path);
  if (!vertices.is_array()) throw parse_error(path + ".vertices", "expected an array");
  const json& facets = require_field(j, "facets", path);
  if (!facets.is_array()) throw parse_error(path + ".facets", "expected an array");
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string p = path + ".facets[" + std::to_string(i) + "]";
    const auto v = require_vector(facets[i], p);
    std::vector<std::uint32_t> row;
    for (auto x : v) {
      if (x >= static_cast<std::int64_t>(vertices.size()))
        throw parse_error(p, "facet vertex out of range");
      row.push_back(static_cast<std::uint32_t>(x));
    }
    rows.push_back(std::move(row));
  }
  try {
    return SimplicialComplex::from_facets(vertices.size(), rows);
  } catch (const std::invalid_argument& e) {
    throw parse_error(path + ".facets", e.what());
  }
}

json table_to_json(const PoincareTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries)
    entries.push_back(json{{"element", element_to_json(e.element)},
                           {"degree", e.degree},
                           {"betti", betti_to_json(e.betti)}});
  return json{{"monoid", monoid_to_json(t.monoid)},
              {"degree_bound", t.degree_bound},
              {"field", t.field.to_string()},
              {"entries", entries}};
}

std::string csv_quote(const std::string& field) {
  bool needs = false;
  for (char c : field)
    if (c == ',' || c == '"' || c == '\n') needs = true;
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string table_to_csv(const PoincareTable& t) {
  std::ostringstream os;
  for (const auto& e : t.entries)
    for (const auto& [i, v] : e.betti.nonzero_entries())
      os << e.degree << "," << csv_quote(e.element.to_string()) << "," << i << "," << v << "\n";
  return os.str();
}

json report_to_json(const VerificationReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr{{"element", element_to_json(row.element)},
            {"degree", row.degree},
            {"direct", betti_to_json(row.direct)},
            {"predicted", betti_to_json(row.predicted)},
            {"match", row.match}};
    if (row.error) jr["error"] = *row.error;
    rows.push_back(std::move(jr));
  }
  json out{{"monoid", monoid_to_json(r.monoid)},
           {"degree_bound", r.degree_bound},
           {"field", r.field.to_string()},
           {"rows", rows},
           {"summary",
            json{{"total", r.rows.size()},
                 {"matched", r.matched},
                 {"mismatched", r.mismatched},
                 {"errors", r.errors}}}};
  if (r.first_mismatch) {
    const auto& d = *r.first_mismatch;
    json elements = json::array();
    for (const auto& e : d.interval_elements) elements.push_back(element_to_json(e));
    json covers = json::array();
    for (const auto& [i, j] : d.interval_covers) covers.push_back(json::array({i, j}));
    out["first_mismatch"] = json{{"element", element_to_json(d.element)},
                                 {"interval", json{{"elements", elements}, {"covers", covers}}},
                                 {"direct", betti_to_json(d.direct)},
                                 {"predicted", betti_to_json(d.predicted)}};
  }
  return out;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "gluing verification: " << r.monoid.describe() << "\n";
  os << "degree bound " << r.degree_bound << ", field " << r.field.to_string() << "\n";
  for (const auto& row : r.rows) {
    os << "  " << row.element.to_string() << " (degree " << row.degree << "): ";
    if (row.error) {
      os << "error: " << *row.error << "\n";
      continue;
    }
    os << "direct " << row.direct.to_string() << ", predicted " << row.predicted.to_string()
       << (row.match ? "" : "  << MISMATCH") << "\n";
  }
  os << "summary: " << r.matched << "/" << r.rows.size() << " matched, " << r.mismatched
     << " mismatched, " << r.errors << " errors\n";
  if (r.first_mismatch) {
    const auto& d = *r.first_mismatch;
    os << "first mismatch at " << d.element.to_string() << "\n";
    os << "  direct    " << d.direct.to_string() << "\n";
    os << "  predicted " << d.predicted.to_string() << "\n";
    os << "  interval elements:";
    for (const auto& e : d.interval_elements) os << " " << e.to_string();
    os << "\n  interval covers:";
    for (const auto& [i, j] : d.interval_covers) os << " (" << i << "<" << j << ")";
    os << "\n";
  }
  return os.str();
}

json composition_report_to_json(const CompositionCheckReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"element", element_to_json(row.element)},
                        {"degree", row.degree},
                        {"composition_count", row.composition_count.str()},
                        {"simplex_count", row.simplex_count.str()},
                        {"counts_match", row.counts_match},
                        {"betti_checked", row.betti_checked},
                        {"betti_match", row.betti_match}});
  }
  return json{{"rows", rows},
              {"summary", json{{"count_mismatches", r.count_mismatches},
                               {"betti_mismatches", r.betti_mismatches},
                               {"betti_checked", r.betti_checked},
                               {"betti_skipped", r.betti_skipped}}}};
}

std::string composition_report_to_text(const CompositionCheckReport& r) {
  std::ostringstream os;
  os << "composition poset verification\n";
  for (const auto& row : r.rows) {
    os << "  " << row.element.to_string() << " (degree " << row.degree << "): |C| = "
       << row.composition_count.str() << ", simplices = " << row.simplex_count.str()
       << (row.counts_match ? "" : "  << COUNT MISMATCH");
    if (row.betti_checked)
      os << ", betti " << (row.betti_match ? "agree" : "<< MISMATCH");
    else
      os << ", betti skipped (budget)";
    os << "\n";
  }
  os << "summary: " << r.count_mismatches << " count mismatches, " << r.betti_mismatches
     << " betti mismatches, " << r.betti_checked << " betti checked, " << r.betti_skipped
     << " betti skipped\n";
  return os.str();
}

}  // namespace frob
