#include "ryd_cli/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ryd/error.hpp"
#include "ryd/nonzero.hpp"
#include "ryd/render.hpp"
#include "ryd/shapes.hpp"
#include "ryd/table.hpp"

namespace ryd::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string family;
  int n = 0;
  std::string format = "text";
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format = "text") {
  c.format = default_format;
  sub->add_option("--family,-f", c.family, "Flag, LG, OGodd, OGeven, ChainB, ChainC, G2P1, G2P2")->required();
  sub->add_option("--n,-n", c.n, "rank parameter n (ignored for G2)");
  sub->add_option("--format", c.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

Family resolve(const Common& c) {
  const FamilyKind k = parse_family_kind(c.family);
  if (k == FamilyKind::G2P1 || k == FamilyKind::G2P2) return Family::make(k, 2);
  if (c.n == 0) throw ConfigError("--n is required for " + to_string(k));
  return Family::make(k, c.n);
}

json family_json(const Family& f) { return {{"family", to_string(f.kind)}, {"n", f.n}}; }

// Expansion terms ordered by their shape string.
std::vector<std::pair<std::string, std::int64_t>> sorted_terms(const Expansion& e) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  for (const auto& [s, c] : e) out.emplace_back(format_shape(s), c);
  std::sort(out.begin(), out.end());
  return out;
}

int do_multiply(const Common& c, const std::vector<std::string>& shapes, std::ostream& out) {
  const Family f = resolve(c);
  const Shape a = parse_shape(f, shapes.at(0));
  const Shape b = parse_shape(f, shapes.at(1));
  const auto terms = sorted_terms(multiply(a, b));
  if (c.format == "json") {
    json j = family_json(f);
    j["terms"] = json::array();
    for (const auto& [s, k] : terms) j["terms"].push_back({{"shape", s}, {"coeff", k}});
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "shape,coeff\n";
    for (const auto& [s, k] : terms) out << '"' << s << "\"," << k << '\n';
  } else {
    if (terms.empty()) out << "0\n";
    for (const auto& [s, k] : terms) out << k << " * " << s << '\n';
  }
  return kOk;
}

int do_enumerate(const Common& c, std::ostream& out) {
  const Family f = resolve(c);
  const auto shapes = enumerate_shapes(f);
  if (c.format == "json") {
    std::vector<std::string> names;
    for (const auto& s : shapes) names.push_back(format_shape(s));
    std::sort(names.begin(), names.end());
    json j = family_json(f);
    j["count"] = names.size();
    j["shapes"] = names;
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "shape,size\n";
    for (const auto& s : shapes) out << '"' << format_shape(s) << "\"," << s.size() << '\n';
  } else {
    for (const auto& s : shapes) out << format_shape(s) << '\n';
  }
  return kOk;
}

int do_nonzero(const Common& c, const std::vector<std::string>& shapes, std::ostream& out) {
  const Family f = resolve(c);
  const Shape l = parse_shape(f, shapes.at(0));
  const Shape m = parse_shape(f, shapes.at(1));
  const Shape n = parse_shape(f, shapes.at(2));
  const bool pred = nonzero_predicate(l, m, n);
  const auto coeff = structure_constant(l, m, n);
  if (c.format == "json") {
    json j = family_json(f);
    j["lambda"] = format_shape(l);
    j["mu"] = format_shape(m);
    j["nu"] = format_shape(n);
    j["predicate"] = pred;
    j["coeff"] = coeff;
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "lambda,mu,nu,predicate,coeff\n"
        << '"' << format_shape(l) << "\",\"" << format_shape(m) << "\",\"" << format_shape(n) << "\","
        << (pred ? "nonzero" : "zero") << ',' << coeff << '\n';
  } else {
    out << "predicate " << (pred ? "nonzero" : "zero") << "\ncoeff " << coeff << '\n';
  }
  return kOk;
}

int do_table(const Common& c, bool oracle, std::ostream& out) {
  const Family f = resolve(c);
  const StructTable t = oracle ? StructTable::from_oracle(f) : StructTable::from_rules(f);
  if (c.format == "csv") {
    out << t.to_csv();
  } else if (c.format == "json") {
    json j = family_json(f);
    j["entries"] = json::array();
    for (const auto& e : t.nonzero_entries()) {
      j["entries"].push_back(
          {{"lambda", format_shape(e.lambda)}, {"mu", format_shape(e.mu)}, {"nu", format_shape(e.nu)}, {"coeff", e.coeff}});
    }
    out << j.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < t.shapes().size(); ++i) {
      for (std::size_t k = 0; k < t.shapes().size(); ++k) {
        const auto terms = sorted_terms(t.product(i, k));
        if (terms.empty()) continue;
        out << format_shape(t.shapes()[i]) << " * " << format_shape(t.shapes()[k]) << " =";
        for (std::size_t q = 0; q < terms.size(); ++q) {
          out << (q ? " + " : " ") << terms[q].second << " * " << terms[q].first;
        }
        out << '\n';
      }
    }
  }
  return kOk;
}

FamilyKind coadjoint_partner(FamilyKind k) {
  switch (k) {
    case FamilyKind::LG: return FamilyKind::OGodd;
    case FamilyKind::OGodd: return FamilyKind::LG;
    case FamilyKind::ChainB: return FamilyKind::ChainC;
    case FamilyKind::ChainC: return FamilyKind::ChainB;
    case FamilyKind::G2P1: return FamilyKind::G2P2;
    case FamilyKind::G2P2: return FamilyKind::G2P1;
    default: throw ConfigError("coadjoint suite needs LG, OGodd, ChainB, ChainC, G2P1 or G2P2");
  }
}

std::string witness_line(const NonconvexityWitness& w) {
  std::ostringstream os;
  os << w.label << ": " << format_shape(w.lambda) << " * " << format_shape(w.mu) << " pattern " << w.pattern
     << (w.collinear ? " collinear" : " not-collinear") << (w.alternates ? " alternating" : "");
  return os.str();
}

int do_verify(const Common& c, const std::string& suite, std::ostream& out) {
  static const std::vector<std::string> suites = {"assoc",     "oracle", "polytope", "counts",
                                                  "values",    "coadjoint", "witness", "monk"};
  if (std::find(suites.begin(), suites.end(), suite) == suites.end()) throw ConfigError("unknown suite: " + suite);
  const Family f = resolve(c);
  std::vector<SuiteReport> reports;
  std::optional<ValueReport> values;
  std::vector<std::string> notes;
  if (suite == "assoc") {
    reports.push_back(verify_associativity(StructTable::from_rules(f)));
  } else if (suite == "oracle") {
    reports.push_back(verify_against_oracle(StructTable::from_rules(f)));
    if (f.kind == FamilyKind::Flag) reports.push_back(verify_monk(f.n));
  } else if (suite == "monk") {
    if (f.kind != FamilyKind::Flag) throw ConfigError("monk suite needs the Flag family");
    reports.push_back(verify_monk(f.n));
  } else if (suite == "polytope") {
    reports.push_back(verify_polytope_description(f));
  } else if (suite == "counts") {
    reports.push_back(verify_counts(f));
    notes.push_back("|Y|=" + std::to_string(enumerate_shapes(f).size()) + " table=" + std::to_string(f.count()));
  } else if (suite == "values") {
    values = verify_values(StructTable::from_rules(f));
    reports.push_back(values->report);
  } else if (suite == "coadjoint") {
    reports.push_back(verify_coadjoint_relation(f.kind, coadjoint_partner(f.kind), f.n));
  } else {
    if (f.kind != FamilyKind::OGeven) throw ConfigError("witness suite needs the OGeven family");
    SuiteReport r{"witness", 0, {}};
    std::vector<NonconvexityWitness> ws;
    if (f.n >= 4) ws.push_back(find_nonconvexity_witness(f.n));
    if (f.n == 4 || f.n == 5) {
      for (const auto& w : example_witnesses()) {
        if (w.lambda.family.n == f.n) ws.push_back(w);
      }
    }
    for (const auto& w : ws) {
      ++r.checked;
      notes.push_back(witness_line(w));
      const bool mixed = w.pattern.find('N') != std::string::npos && w.pattern.find('Z') != std::string::npos;
      if (!w.collinear || !mixed) r.failures.push_back(witness_line(w));
    }
    reports.push_back(r);
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (c.format == "json") {
    json j = family_json(f);
    j["suite"] = suite;
    j["ok"] = ok;
    j["reports"] = json::array();
    for (const auto& r : reports) {
      j["reports"].push_back({{"name", r.name}, {"checked", r.checked}, {"failures", r.failures}});
    }
    if (values) {
      j["observed"] = values->observed;
      j["allowed"] = values->allowed;
    }
    if (!notes.empty()) j["notes"] = notes;
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "suite,family,n,checked,failures\n";
    for (const auto& r : reports) {
      out << r.name << ',' << to_string(f.kind) << ',' << f.n << ',' << r.checked << ',' << r.failures.size() << '\n';
    }
  } else {
    for (const auto& r : reports) {
      out << r.name << ' ' << to_string(f) << ": checked " << r.checked << ", failures " << r.failures.size() << '\n';
      for (const auto& line : r.failures) out << "  FAIL " << line << '\n';
    }
    if (values) {
      out << "observed {";
      for (std::size_t i = 0; i < values->observed.size(); ++i) out << (i ? "," : "") << values->observed[i];
      out << "}\n";
    }
    for (const auto& s : notes) out << s << '\n';
  }
  return ok ? kOk : kFailures;
}

int do_render(const Common& c, const std::string& shape, std::ostream& out) {
  const Family f = resolve(c);
  std::optional<Shape> overlay;
  if (!shape.empty()) overlay = parse_shape(f, shape);
  const std::string pic = render_lambda(f, overlay);
  if (c.format == "json") {
    json j = family_json(f);
    if (overlay) j["shape"] = format_shape(*overlay);
    j["render"] = pic;
    out << j.dump() << '\n';
  } else {
    out << pic;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert structure constants for (co)adjoint varieties", "ryd"};
  app.require_subcommand(1);

  Common mul_c, enum_c, nz_c, tab_c, ver_c, ren_c;
  std::vector<std::string> mul_shapes, nz_shapes;
  std::string suite, render_shape;
  bool oracle = false;

  auto* mul = app.add_subcommand("multiply", "expand the product of two Schubert classes");
  add_common(mul, mul_c);
  mul->add_option("shapes", mul_shapes, "two shapes")->required()->expected(2);

  auto* en = app.add_subcommand("enumerate", "list the shapes of a family");
  add_common(en, enum_c);

  auto* nz = app.add_subcommand("nonzero", "evaluate the nonvanishing predicate for a triple");
  add_common(nz, nz_c);
  nz->add_option("shapes", nz_shapes, "lambda mu nu")->required()->expected(3);

  auto* tab = app.add_subcommand("table", "dump every nonzero structure constant");
  add_common(tab, tab_c, "csv");
  tab->add_flag("--oracle", oracle, "compute with the Weyl-group localization oracle");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  add_common(ver, ver_c);
  ver->add_option("suite", suite, "assoc, oracle, polytope, counts, values, coadjoint, witness, monk")->required();

  auto* ren = app.add_subcommand("render", "draw Lambda with an optional shape");
  add_common(ren, ren_c);
  ren->add_option("--shape,-s", render_shape, "shape to overlay");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*mul) return do_multiply(mul_c, mul_shapes, out);
    if (*en) return do_enumerate(enum_c, out);
    if (*nz) return do_nonzero(nz_c, nz_shapes, out);
    if (*tab) return do_table(tab_c, oracle, out);
    if (*ver) return do_verify(ver_c, suite, out);
    if (*ren) return do_render(ren_c, render_shape, out);
  } catch (const std::invalid_argument& e) {
    err << "ryd: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "ryd: internal error: " << e.what() << '\n';
    return kFailures;
  }
  return kUsage;
}

}  // namespace ryd::cli
