// Command-line front end: load monoid descriptors, run computations, export
// tables and verification reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "frob/composition.hpp"
#include "frob/errors.hpp"
#include "frob/frobenius.hpp"
#include "frob/gluing.hpp"
#include "frob/monoid_io.hpp"

using nlohmann::json;

namespace {

struct CommonOpts {
  std::string monoid_file;
  std::string element_literal;
  std::string left_file, right_file;
  std::int64_t bound = 0;
  std::uint32_t field_p = 0;  // 0 = rationals
  unsigned jobs = 1;
  std::string format;
  std::string output;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw frob::parse_error("$", "cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw frob::parse_error("$", std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

frob::Monoid load_monoid(const std::string& path) { return frob::parse_monoid(read_json_file(path)); }

frob::Element load_element(const frob::Monoid& m, const std::string& literal) {
  json j;
  try {
    j = json::parse(literal);
  } catch (const json::parse_error& e) {
    throw frob::parse_error("$", std::string("invalid element literal: ") + e.what());
  }
  return frob::parse_element(m, j);
}

frob::FieldChoice field_of(const CommonOpts& o) {
  return o.field_p == 0 ? frob::FieldChoice::rationals() : frob::FieldChoice::prime_field(o.field_p);
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw std::runtime_error("cannot open output file: " + o.output);
  out << text;
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

std::string format_or(const CommonOpts& o, const char* fallback) {
  return o.format.empty() ? fallback : o.format;
}

int cmd_show(const CommonOpts& o) {
  const auto m = load_monoid(o.monoid_file);
  if (format_or(o, "text") == "json") {
    json out = frob::monoid_to_json(m);
    json gens = json::array();
    for (const auto& g : m.generators())
      gens.push_back(json{{"element", frob::element_to_json(g)}, {"degree", m.degree(g)}});
    out["generator_degrees"] = gens;
    emit(o, pretty(out));
    return 0;
  }
  std::ostringstream os;
  os << m.describe() << "\n";
  os << "generators:\n";
  for (const auto& g : m.generators())
    os << "  " << g.to_string() << " (degree " << m.degree(g) << ")\n";
  if (m.kind() == frob::Monoid::Kind::glued)
    os << "rho degree: " << m.degree(m.rho()) << "\n";
  emit(o, os.str());
  return 0;
}

int cmd_interval(const CommonOpts& o) {
  const auto m = load_monoid(o.monoid_file);
  const auto lam = load_element(m, o.element_literal);
  const auto interval = m.open_interval(lam);
  if (format_or(o, "json") == "text") {
    std::ostringstream os;
    os << "open interval (0, " << lam.to_string() << "), " << interval.elements.size()
       << " elements\n";
    for (std::size_t i = 0; i < interval.elements.size(); ++i)
      os << "  " << i << ": " << interval.elements[i].to_string() << " (degree "
         << m.degree(interval.elements[i]) << ")\n";
    os << "covers:";
    for (const auto& [i, j] : interval.order.cover_pairs()) os << " (" << i << "<" << j << ")";
    os << "\n";
    emit(o, os.str());
  } else {
    emit(o, pretty(frob::interval_to_json(interval)));
  }
  return 0;
}

int cmd_export_complex(const CommonOpts& o) {
  const auto m = load_monoid(o.monoid_file);
  const auto lam = load_element(m, o.element_literal);
  const auto f = frob::frobenius_complex(m, lam);
  if (format_or(o, "json") == "text") {
    std::ostringstream os;
    if (f.formal_s2) {
      os << "S^-2 (formal)\n";
    } else {
      for (std::size_t i = 0; i < f.vertex_labels.size(); ++i)
        os << "vertex " << i << ": " << f.vertex_labels[i].to_string() << "\n";
      for (const auto& facet : f.complex.facet_list()) {
        os << "facet:";
        for (auto v : facet) os << " " << v;
        os << "\n";
      }
    }
    emit(o, os.str());
  } else {
    emit(o, pretty(frob::frobenius_complex_to_json(f)));
  }
  return 0;
}

int cmd_betti(const CommonOpts& o) {
  const auto m = load_monoid(o.monoid_file);
  const auto lam = load_element(m, o.element_literal);
  const auto field = field_of(o);
  const auto b = frob::betti_vector(m, lam, field);
  const std::int64_t degree = m.degree(lam);
  const std::string format = format_or(o, "csv");
  if (format == "json") {
    emit(o, pretty(json{{"element", frob::element_to_json(lam)},
                        {"degree", degree},
                        {"field", field.to_string()},
                        {"betti", frob::betti_to_json(b)}}));
  } else if (format == "text") {
    emit(o, "betti(" + lam.to_string() + ") over " + field.to_string() + ": " + b.to_string() + "\n");
  } else {
    std::ostringstream os;
    for (const auto& [i, v] : b.nonzero_entries()) os << degree << "," << i << "," << v << "\n";
    emit(o, os.str());
  }
  return 0;
}

int cmd_poincare(const CommonOpts& o) {
  const auto m = load_monoid(o.monoid_file);
  const auto t = frob::poincare_table(m, o.bound, field_of(o), o.jobs);
  const std::string format = format_or(o, "csv");
  if (format == "json") {
    emit(o, pretty(frob::table_to_json(t)));
  } else if (format == "text") {
    std::ostringstream os;
    for (const auto& e : t.entries)
      os << "degree " << e.degree << "  " << e.element.to_string() << " : " << e.betti.to_string()
         << "\n";
    emit(o, os.str());
  } else {
    emit(o, frob::table_to_csv(t));
  }
  return 0;
}

int cmd_verify_gluing(const CommonOpts& o) {
  const auto m = load_monoid(o.monoid_file);
  const auto report = frob::verify_gluing(m, o.bound, field_of(o), o.jobs);
  emit(o, format_or(o, "text") == "json" ? pretty(frob::report_to_json(report))
                                         : frob::report_to_text(report));
  return report.exit_code();
}

int cmd_verify_dirsum(const CommonOpts& o) {
  const auto m = load_monoid(o.monoid_file);
  const auto left = load_monoid(o.left_file);
  const auto right = load_monoid(o.right_file);
  const auto field = field_of(o);
  const auto direct = frob::poincare_table(m, o.bound, field, o.jobs);
  const auto t1 = frob::poincare_table(left, o.bound, field, o.jobs);
  const auto t2 = frob::poincare_table(right, o.bound, field, o.jobs);
  const auto predicted = frob::dirsum_predicted_table(t1, t2);
  const auto cmp = frob::compare_tables(direct, predicted);
  if (format_or(o, "text") == "json") {
    json rows = json::array();
    for (const auto& row : cmp.rows)
      rows.push_back(json{{"element", frob::element_to_json(row.element)},
                          {"degree", row.degree},
                          {"direct", frob::betti_to_json(row.left)},
                          {"predicted", frob::betti_to_json(row.right)},
                          {"match", row.match}});
    emit(o, pretty(json{{"rows", rows}, {"mismatches", cmp.mismatches}}));
  } else {
    std::ostringstream os;
    os << "direct-sum verification: " << m.describe() << "\n";
    for (const auto& row : cmp.rows)
      os << "  " << row.element.to_string() << ": direct " << row.left.to_string()
         << ", predicted " << row.right.to_string() << (row.match ? "" : "  << MISMATCH") << "\n";
    os << "summary: " << cmp.rows.size() - cmp.mismatches << "/" << cmp.rows.size()
       << " matched\n";
    emit(o, os.str());
  }
  return cmp.all_match() ? 0 : 1;
}

int cmd_verify_comp(const CommonOpts& o) {
  const auto m = load_monoid(o.monoid_file);
  const auto report = frob::verify_composition_poset(m, o.bound, field_of(o));
  emit(o, format_or(o, "text") == "json" ? pretty(frob::composition_report_to_json(report))
                                         : frob::composition_report_to_text(report));
  return report.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius complexes, Betti tables and gluing verification for affine monoids"};
  app.require_subcommand(1);

  CommonOpts o;
  auto add_common = [&](CLI::App* cmd, bool element, bool bound) {
    cmd->add_option("--monoid", o.monoid_file, "monoid descriptor JSON file")->required();
    if (element)
      cmd->add_option("--element", o.element_literal, "element literal (JSON)")->required();
    if (bound) cmd->add_option("--bound", o.bound, "degree bound")->required();
    cmd->add_option("--field", o.field_p, "prime p for GF(p); exact rationals if absent");
    cmd->add_option("--jobs", o.jobs, "worker threads (output is identical for any value)");
    cmd->add_option("--format", o.format, "output format (json, csv or text)");
    cmd->add_option("--output", o.output, "output path (stdout if absent)");
  };

  auto* show = app.add_subcommand("show", "summarize a monoid descriptor");
  add_common(show, false, false);
  auto* interval = app.add_subcommand("interval", "open interval (0, element) as a poset");
  add_common(interval, true, false);
  auto* exportc = app.add_subcommand("export-complex", "Frobenius complex of an element");
  add_common(exportc, true, false);
  auto* betti = app.add_subcommand("betti", "Betti vector of one element");
  add_common(betti, true, false);
  auto* poincare = app.add_subcommand("poincare", "truncated Poincare table");
  add_common(poincare, false, true);
  auto* vgluing = app.add_subcommand("verify-gluing", "compare direct and predicted Betti vectors");
  add_common(vgluing, false, true);
  auto* vdirsum = app.add_subcommand("verify-dirsum", "compare a direct-sum table with the factor product");
  add_common(vdirsum, false, true);
  vdirsum->add_option("--left", o.left_file, "left factor descriptor")->required();
  vdirsum->add_option("--right", o.right_file, "right factor descriptor")->required();
  auto* vcomp = app.add_subcommand("verify-comp", "compare the composition-poset route with the direct route");
  add_common(vcomp, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (show->parsed()) return cmd_show(o);
    if (interval->parsed()) return cmd_interval(o);
    if (exportc->parsed()) return cmd_export_complex(o);
    if (betti->parsed()) return cmd_betti(o);
    if (poincare->parsed()) return cmd_poincare(o);
    if (vgluing->parsed()) return cmd_verify_gluing(o);
    if (vdirsum->parsed()) return cmd_verify_dirsum(o);
    if (vcomp->parsed()) return cmd_verify_comp(o);
  } catch (const frob::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const frob::resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
