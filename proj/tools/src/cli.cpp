#include "bdecat_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bdecat/cfk2cfd.hpp"
#include "bdecat/config.hpp"
#include "bdecat/diagram.hpp"
#include "bdecat/grading.hpp"
#include "bdecat/grothendieck.hpp"
#include "bdecat/io.hpp"
#include "bdecat/satellite.hpp"
#include "bdecat/torus.hpp"

namespace bdecat::cli {

using nlohmann::json;

namespace {

const char* kNormalization =
    "polynomials are shifted by a monomial t^(c/2) to be symmetric, then signed so q(1) >= 0";

struct Options {
  bool json_out = false;
  bool selftest = false;
  bool parallel = false;
  std::string pmc = "torus";
  int summand = 0;
  bool gradings = false;
  std::string file, file2;
  int weight = 1;
  std::optional<int> winding;  // overrides the fixture value
  bool report = false;
  std::string out_path;
};

Pmc load_pmc(const std::string& spec) {
  if (spec == "torus") return Pmc::torus();
  if (spec.rfind("split", 0) == 0) return Pmc::split(std::stoi(spec.substr(5)));
  return parse_pmc(read_file(spec));
}

json class_json(const ExteriorClass& x) { return json::parse(dump_class(x)); }
json laurent_json(const LaurentHalf& p) { return json::parse(dump_laurent(p)); }

json verdict_json(const Report& r) {
  json j = {{"ok", r.ok}};
  if (!r.ok) j["error"] = {{"code", std::string(errc_name(r.code))}, {"detail", r.detail}};
  return j;
}

std::string verdict_line(const Report& r) {
  return r.ok ? "OK" : "FAIL " + std::string(errc_name(r.code)) + ": " + r.detail;
}

int exit_for(const Report& r) {
  if (r.ok) return 0;
  return is_verification_failure(r.code) ? 1 : 2;
}

void emit(const Options& o, std::ostream& out, const json& j, const std::string& text) {
  if (o.json_out) out << j.dump(2) << "\n";
  else out << text;
}

// ---- subcommands ------------------------------------------------------------

int cmd_algebra(const Options& o, std::ostream& out) {
  Pmc pmc = load_pmc(o.pmc);
  if (o.selftest) {
    Report r = algebra_selftest(pmc);
    emit(o, out, {{"pmc", to_string(pmc)}, {"selftest", verdict_json(r)}},
         "selftest on " + to_string(pmc) + ": " + verdict_line(r) + "\n");
    return exit_for(r);
  }
  auto elems = basis_of_AZ(pmc, o.summand);
  const bool torus = pmc == Pmc::torus();
  const RefinementData ref = torus ? torus_refinement() : default_refinement(pmc);
  json list = json::array();
  std::ostringstream text;
  text << "A(Z, " << o.summand << ") for " << to_string(pmc) << ": " << elems.size() << " basis elements\n";
  if (o.gradings && o.summand == 0) text << "refinement: " << (torus ? "torus (psi(iota1) = (1/2; 1,0,0))" : "default") << "\n";
  for (const auto& e : elems) {
    json item = {{"element", to_string(e)}};
    std::string name = torus && o.summand == 0 ? torus_algebra().name_of(e) : "";
    if (!name.empty()) item["name"] = name;
    text << "  " << (name.empty() ? "" : name + " = ") << to_string(e);
    if (o.gradings) {
      GradingElement g = gr_prime(e);
      item["gr_prime"] = {{"j", to_string(g.j)}, {"alpha", g.alpha}};
      text << "  gr' = " << to_string(g);
      if (o.summand == 0) {
        int m = m_of(e, pmc, ref);
        item["m"] = m;
        text << "  m = " << m;
      }
    }
    text << "\n";
    list.push_back(item);
  }
  emit(o, out, {{"pmc", to_string(pmc)}, {"summand", o.summand}, {"size", elems.size()}, {"basis", list}}, text.str());
  return 0;
}

bool is_ainf_file(const json& j) { return j.contains("ops"); }

int cmd_k0(const Options& o, std::ostream& out) {
  std::string text = read_file(o.file);
  json j = json::parse(text);
  ExteriorClass x = is_ainf_file(j) ? class_of(parse_ainf(text)) : class_of(parse_type_d(text));
  emit(o, out, {{"class", class_json(x)}}, "[M] = " + to_string(x) + "\n");
  return 0;
}

int cmd_pair(const Options& o, std::ostream& out) {
  AInfModule m = parse_ainf(read_file(o.file));
  TypeDStructure n = parse_type_d(read_file(o.file2));
  LaurentHalf p = pair(class_of(m), class_of(n));
  ChainComplex c = box_tensor(m, n, o.weight);
  LaurentHalf chi = euler_of_complex(c);
  Report r = Report::pass();
  if (!(chi == p)) r = Report::fail(Errc::Mismatch, "chi = " + to_string(chi) + " but [M].[N] = " + to_string(p));
  else if (!squares_to_zero(c)) r = Report::fail(Errc::Mismatch, "box tensor differential does not square to zero");
  std::ostringstream text;
  text << "[M].[N]        = " << to_string(p) << "\n"
       << "chi(M box N)   = " << to_string(chi) << "\n"
       << "generators     = " << c.gens.size() << ", differential terms = " << c.diff.size() << "\n"
       << "verdict: " << verdict_line(r) << "\n";
  emit(o, out,
       {{"pairing", laurent_json(p)}, {"euler", laurent_json(chi)}, {"complex", json::parse(dump_complex(c))},
        {"verdict", verdict_json(r)}},
       text.str());
  return exit_for(r);
}

int cmd_cfd(const Options& o, std::ostream& out) {
  CFKComplex c = parse_cfk(read_file(o.file));
  TypeDStructure n = build_cfd(c);
  Report r = check_type_d(n);
  if (r) r = check_bigrading(n, 0);
  LaurentHalf a1;
  if (r) {
    try {
      a1 = verify_a1(n, c);
    } catch (const Error& e) {
      r = Report::fail(e.code(), e.detail());
    }
  }
  if (r) r = verify_a2_zero(n);
  std::string dump = dump_type_d(n);
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    f << dump << "\n";
  }
  const ChainConvention& conv = calibrated_convention();
  std::ostringstream text;
  if (o.out_path.empty()) text << dump << "\n";
  text << "convention: D1/D123 chains for " << (conv.d1_row_for_vertical ? "vertical" : "horizontal")
       << " arrows, a = " << (conv.a_sign > 0 ? "+" : "-") << "A on iota0\n";
  text << "[CFD] = " << to_string(class_of(n)) << "\n";
  if (!a1.is_zero()) text << "a1 component (normalized) = " << to_string(a1) << "\n";
  text << "normalization: " << kNormalization << "\n";
  text << "verdict: " << verdict_line(r) << "\n";
  emit(o, out,
       {{"cfd", json::parse(dump)},
        {"class", class_json(class_of(n))},
        {"a1", laurent_json(a1)},
        {"normalization", kNormalization},
        {"verdict", verdict_json(r)}},
       text.str());
  return exit_for(r);
}

int cmd_satellite(const Options& o, std::ostream& out) {
  PatternClass pc = parse_pattern(read_file(o.file));
  if (o.winding) pc.winding = *o.winding;
  CFKComplex c = parse_cfk(read_file(o.file2));
  SatelliteReport r = satellite_report(pc, c);
  std::ostringstream text;
  if (o.report) {
    text << "Q(t)            = " << to_string(r.pattern.q) << "\n"
         << "P(t)            = " << to_string(r.pattern.p) << "\n"
         << "Delta_K(t)      = " << to_string(r.delta_k) << "\n"
         << "winding k       = " << pc.winding << "\n";
    if (r.box_euler) text << "chi(box tensor) = " << to_string(*r.box_euler) << "\n";
    text << "normalization: " << kNormalization << "\n";
  }
  text << "[CFA].[CFD, k]  = " << to_string(r.lhs) << "\n"
       << "Q(t) Delta_K(t^k) = " << to_string(r.rhs) << "\n"
       << "verdict: " << verdict_line(r.verdict) << "\n";
  json j = {{"Q", laurent_json(r.pattern.q)},          {"P", laurent_json(r.pattern.p)},
            {"delta_K", laurent_json(r.delta_k)},      {"winding", pc.winding},
            {"lhs", laurent_json(r.lhs)},              {"rhs", laurent_json(r.rhs)},
            {"normalization", kNormalization},          {"verdict", verdict_json(r.verdict)}};
  if (r.box_euler) j["box_euler"] = laurent_json(*r.box_euler);
  emit(o, out, j, text.str());
  return exit_for(r.verdict);
}

int cmd_diagram(const Options& o, std::ostream& out) {
  BorderedDiagram d = parse_diagram(read_file(o.file));
  IntMatrix m = intersection_matrix(d);
  IntegerClass cls = cfd_class_from_determinants(d);
  HomologyKernel h = homology_kernel(d);
  Report r = verify_cfdker(d);
  if (r) r = check_duality(d);
  std::ostringstream text;
  text << "M(H) =\n" << to_string(m);
  text << "[CFD] from determinants = " << to_string(cls) << "\n";
  text << "b1(Y, dY) = " << h.b1_rel << "\n";
  text << "|H1(Y, dY)| = " << (h.order ? h.order->str() : std::string("infinite")) << "\n";
  text << "kernel wedge = " << to_string(h.kernel_wedge) << "\n";
  text << "verdict: " << verdict_line(r) << "\n";
  auto int_class = [](const IntegerClass& c) {
    json j = json::object();
    for (const auto& [s, v] : c) {
      std::string key;
      for (size_t i = 0; i < s.size(); ++i) key += (i ? "," : "") + std::to_string(s[i]);
      j[key] = v.str();
    }
    return j;
  };
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(i, c).str());
    rows.push_back(row);
  }
  emit(o, out,
       {{"matrix", rows},
        {"class", int_class(cls)},
        {"b1_rel", h.b1_rel},
        {"order", h.order ? json(h.order->str()) : json("infinite")},
        {"kernel_wedge", int_class(h.kernel_wedge)},
        {"verdict", verdict_json(r)}},
       text.str());
  return exit_for(r);
}

int cmd_check(const Options& o, std::ostream& out) {
  std::string text = read_file(o.file);
  json j = json::parse(text);
  std::string kind;
  Report r = Report::pass();
  if (j.contains("delta")) {
    kind = "type D structure";
    TypeDStructure n = parse_type_d(text);
    r = check_type_d(n);
  } else if (j.contains("ops")) {
    kind = "A-infinity module";
    AInfModule m = parse_ainf(text);
    r = check_ainf(m);
    if (r) r = check_ainf_gradings(m);
  } else if (j.contains("tau")) {
    kind = "CFK complex";
    validate(parse_cfk(text));
  } else if (j.contains("points")) {
    kind = "bordered diagram";
    BorderedDiagram d = parse_diagram(text);
    r = check_duality(d);
  } else {
    kind = "pointed matched circle";
    parse_pmc(text);
  }
  emit(o, out, {{"kind", kind}, {"verdict", verdict_json(r)}}, kind + ": " + verdict_line(r) + "\n");
  return exit_for(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"bdecat: decategorified bordered invariants"};
  app.require_subcommand(0, 1);
  app.add_flag("--json", o.json_out, "Machine-readable output");
  app.add_flag("--selftest", o.selftest, "Run the exhaustive algebra checks");
  app.add_flag("--parallel", o.parallel, "Use threads in enumeration-heavy routines");

  auto* algebra = app.add_subcommand("algebra", "List a basis of A(Z, i)");
  algebra->add_option("--pmc", o.pmc, "torus, split<k> or a pmc JSON file");
  algebra->add_option("--summand", o.summand, "Summand index i");
  algebra->add_flag("--gradings", o.gradings, "Print gr' and m");
  algebra->add_flag("--selftest", o.selftest, "Run the exhaustive algebra checks");

  auto* k0 = app.add_subcommand("k0", "Class of a module in K0");
  k0->add_option("module", o.file)->required();

  auto* pr = app.add_subcommand("pair", "Pair an A-infinity module with a type D structure");
  pr->add_option("ainf", o.file)->required();
  pr->add_option("typed", o.file2)->required();
  pr->add_option("--weight", o.weight, "Alexander weight on the type D side");

  auto* cfd = app.add_subcommand("cfd-from-cfk", "Build CFD of the 0-framed knot complement");
  cfd->add_option("cfk", o.file)->required();
  cfd->add_option("--out", o.out_path, "Write the type D structure here");

  auto* sat = app.add_subcommand("satellite", "Check the satellite formula");
  sat->add_option("cfa", o.file)->required();
  sat->add_option("cfk", o.file2)->required();
  sat->add_option("--winding", o.winding, "Winding number k");
  sat->add_flag("--report", o.report, "Print Q, P and Delta_K");

  auto* dk = app.add_subcommand("diagram-kernel", "Determinant class and homology kernel of a diagram");
  dk->add_option("diagram", o.file)->required();

  auto* chk = app.add_subcommand("check", "Validate a fixture file");
  chk->add_option("file", o.file)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  set_parallel(o.parallel);
  try {
    if (*algebra) return cmd_algebra(o, out);
    if (*k0) return cmd_k0(o, out);
    if (*pr) return cmd_pair(o, out);
    if (*cfd) return cmd_cfd(o, out);
    if (*sat) return cmd_satellite(o, out);
    if (*dk) return cmd_diagram(o, out);
    if (*chk) return cmd_check(o, out);
    if (o.selftest) {
      Report r = algebra_selftest(Pmc::torus());
      if (r) r = algebra_selftest(Pmc::split(2));
      emit(o, out, {{"selftest", verdict_json(r)}}, "selftest (torus, split2): " + verdict_line(r) + "\n");
      return exit_for(r);
    }
    out << app.help();
    return 2;
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.detail() << "\n";
    return is_verification_failure(e.code()) ? 1 : 2;
  } catch (const json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace bdecat::cli
