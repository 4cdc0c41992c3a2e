#include "bdecat/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bdecat/torus.hpp"

namespace bdecat {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad(std::string("field '") + key + "' has the wrong type");
  }
}

std::string subset_key(const Subset& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

Subset parse_subset_key(const std::string& key) {
  Subset s;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ','))
    if (!part.empty()) s.push_back(std::stoi(part));
  std::sort(s.begin(), s.end());
  return s;
}

Rational rational_field(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  bad("expected an integer or a fraction string");
}

Pmc pmc_from(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "torus") return Pmc::torus();
    if (s.rfind("split", 0) == 0 && s.size() > 5) return Pmc::split(std::stoi(s.substr(5)));
    bad("unknown pmc name " + s);
  }
  if (j.is_array()) return Pmc(j.get<std::vector<int>>());
  return Pmc(get<std::vector<int>>(j, "matching"));
}

json grading_json(const GradingElement& g) { return {{"j", to_string(g.j)}, {"alpha", g.alpha}}; }

GradingElement grading_from(const json& j) {
  return {rational_field(j.at("j")), get<std::vector<long long>>(j, "alpha")};
}

RefinementData refinement_from(const Pmc& pmc, const json& j) {
  if (j.is_null()) return pmc == Pmc::torus() ? torus_refinement() : default_refinement(pmc);
  if (j.is_string()) {
    if (j == "default") return default_refinement(pmc);
    if (j == "torus") return torus_refinement();
    bad("unknown refinement " + j.get<std::string>());
  }
  RefinementData r;
  r.base = get<Subset>(j, "base");
  const json psi = get<json>(j, "psi");
  for (const auto& [key, v] : psi.items()) r.psi[parse_subset_key(key)] = grading_from(v);
  return r;
}

json refinement_json(const Pmc& pmc, const RefinementData& r) {
  if (pmc == Pmc::torus() && r == torus_refinement()) return "torus";
  if (r == default_refinement(pmc)) return "default";
  json psi = json::object();
  for (const auto& [s, g] : r.psi) psi[subset_key(s)] = grading_json(g);
  return {{"base", r.base}, {"psi", psi}};
}

std::vector<ModuleGenerator> generators_from(const json& j) {
  std::vector<ModuleGenerator> out;
  for (const auto& g : get<json>(j, "generators")) {
    ModuleGenerator x;
    x.name = get<std::string>(g, "name");
    x.idem = get<Subset>(g, "idem");
    std::sort(x.idem.begin(), x.idem.end());
    if (!g.contains("m")) throw Error(Errc::MissingGrading, "generator " + x.name + " has no m grading");
    x.m = ((get<int>(g, "m") % 2) + 2) % 2;
    if (g.contains("a")) x.a = rational_field(g.at("a"));
    out.push_back(std::move(x));
  }
  return out;
}

json generators_json(const std::vector<ModuleGenerator>& gens) {
  json out = json::array();
  for (const auto& g : gens) {
    json x = {{"name", g.name}, {"idem", g.idem}, {"m", g.m}};
    if (g.a) x["a"] = to_string(*g.a);
    out.push_back(x);
  }
  return out;
}

int lookup(const std::vector<ModuleGenerator>& gens, const std::string& name) {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  bad("unknown generator " + name);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

AlgebraElement parse_term(const Pmc& pmc, const std::string& term) {
  if (term == "1") {
    AlgebraElement one(pmc.num_points());
    for (const auto& s : k_subsets(pmc.num_pairs(), pmc.genus())) one += idempotent(pmc, s);
    return one;
  }
  if (term.rfind("rho(", 0) == 0 && term.back() == ')') {
    std::vector<ReebChord> chords;
    std::stringstream in(term.substr(4, term.size() - 5));
    std::string part;
    while (std::getline(in, part, ';')) {
      int a = 0, b = 0;
      char comma = 0;
      std::stringstream cs(part);
      if (!(cs >> a >> comma >> b) || comma != ',') bad("bad chord in " + term);
      chords.push_back({a, b});
    }
    return a_of(pmc, chords, 0);
  }
  if (!term.empty() && term.front() == '{')
    return AlgebraElement(pmc.num_points(), {parse_generator(term)});
  if (pmc == Pmc::torus()) return torus_algebra()[term];
  bad("cannot parse coefficient term '" + term + "'");
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Pmc parse_pmc(const std::string& text) {
  std::string t = trim(text);
  if (t == "torus" || t.rfind("split", 0) == 0) return pmc_from(json(t));
  return pmc_from(parse_json(text));
}

std::string dump_pmc(const Pmc& p) { return json{{"matching", p.matching()}}.dump(2); }

AlgebraElement parse_expression(const Pmc& pmc, const std::string& expr) {
  AlgebraElement sum(pmc.num_points());
  std::stringstream in(expr);
  std::string part;
  bool any = false;
  while (std::getline(in, part, '+')) {
    std::string t = trim(part);
    if (t.empty()) bad("empty term in coefficient '" + expr + "'");
    sum += parse_term(pmc, t);
    any = true;
  }
  if (!any) bad("empty coefficient");
  return sum;
}

AlgebraElement parse_coefficient(const Pmc& pmc, const std::string& expr, const Subset& left,
                                 const Subset& right) {
  AlgebraElement sum = parse_expression(pmc, expr);
  AlgebraElement restricted = idempotent(pmc, left) * sum * idempotent(pmc, right);
  return restricted.is_zero() ? sum : restricted;
}

std::string coefficient_string(const Pmc& pmc, const AlgebraElement& a) {
  auto basis = middle_basis(pmc);
  std::vector<int> parts;
  try {
    parts = basis->decompose(a);
  } catch (const Error&) {
    return to_string(a);
  }
  const bool torus = pmc == Pmc::torus();
  std::string out;
  for (int b : parts) {
    std::string t;
    if (basis->is_idempotent(b)) {
      t = "1";
    } else if (torus) {
      t = torus_algebra().name_of(basis->element(b));
    } else {
      t = "rho(";
      auto chords = basis->chords(b);
      for (size_t i = 0; i < chords.size(); ++i)
        t += (i ? ";" : "") + std::to_string(chords[i].start) + "," + std::to_string(chords[i].end);
      t += ")";
    }
    out += (out.empty() ? "" : " + ") + t;
  }
  return out.empty() ? "0" : out;
}

TypeDStructure parse_type_d(const std::string& text) {
  json j = parse_json(text);
  TypeDStructure n;
  n.pmc = pmc_from(get<json>(j, "pmc"));
  n.ref = refinement_from(n.pmc, j.value("refinement", json()));
  n.gens = generators_from(j);
  for (const auto& e : j.value("delta", json::array())) {
    int s = lookup(n.gens, get<std::string>(e, "src"));
    int d = lookup(n.gens, get<std::string>(e, "dst"));
    n.delta.push_back({s, parse_coefficient(n.pmc, get<std::string>(e, "coeff"), n.gens[s].idem, n.gens[d].idem), d});
  }
  return n;
}

std::string dump_type_d(const TypeDStructure& n) {
  json delta = json::array();
  for (const auto& e : n.delta)
    delta.push_back({{"src", n.gens[e.src].name}, {"coeff", coefficient_string(n.pmc, e.coeff)}, {"dst", n.gens[e.dst].name}});
  json j = {{"pmc", {{"matching", n.pmc.matching()}}},
            {"refinement", refinement_json(n.pmc, n.ref)},
            {"generators", generators_json(n.gens)},
            {"delta", delta}};
  return j.dump(2);
}

namespace {

AInfModule ainf_from(const json& j) {
  AInfModule m;
  m.pmc = pmc_from(get<json>(j, "pmc"));
  m.ref = refinement_from(m.pmc, j.value("refinement", json()));
  m.gens = generators_from(j);
  auto basis = middle_basis(m.pmc);
  for (const auto& o : j.value("ops", json::array())) {
    AInfOp op;
    op.x = lookup(m.gens, get<std::string>(o, "x"));
    op.y = lookup(m.gens, get<std::string>(o, "y"));
    op.d = o.value("d", 0);
    // Each input is restricted between the idempotents of its neighbours.
    Subset left = m.gens[op.x].idem;
    auto algs = get<std::vector<std::string>>(o, "algs");
    for (size_t i = 0; i < algs.size(); ++i) {
      AlgebraElement a = parse_expression(m.pmc, algs[i]);
      AlgebraElement restricted = idempotent(m.pmc, left) * a;
      if (!restricted.is_zero()) a = restricted;
      if (i + 1 == algs.size()) {
        AlgebraElement r = a * idempotent(m.pmc, m.gens[op.y].idem);
        if (!r.is_zero()) a = r;
      }
      if (auto ends = idempotents_of(m.pmc, a)) left = ends->second;
      op.algs.push_back(a);
    }
    m.ops.push_back(std::move(op));
  }
  return m;
}

}  // namespace

AInfModule parse_ainf(const std::string& text) { return ainf_from(parse_json(text)); }

std::string dump_ainf(const AInfModule& m) {
  json ops = json::array();
  for (const auto& op : m.ops) {
    json algs = json::array();
    for (const auto& a : op.algs) algs.push_back(coefficient_string(m.pmc, a));
    json o = {{"x", m.gens[op.x].name}, {"algs", algs}, {"y", m.gens[op.y].name}};
    if (op.d != 0) o["d"] = op.d;
    ops.push_back(o);
  }
  json j = {{"pmc", {{"matching", m.pmc.matching()}}},
            {"refinement", refinement_json(m.pmc, m.ref)},
            {"generators", generators_json(m.gens)},
            {"ops", ops}};
  return j.dump(2);
}

PatternClass parse_pattern(const std::string& text) {
  json j = parse_json(text);
  return {ainf_from(j), j.value("winding", 1)};
}

CFKComplex parse_cfk(const std::string& text) {
  json j = parse_json(text);
  CFKComplex c;
  for (const auto& g : get<json>(j, "generators"))
    c.gens.push_back({get<std::string>(g, "name"), get<int>(g, "maslov"), get<int>(g, "alexander")});
  auto arrows = [&](const char* key) {
    std::vector<CFKArrow> out;
    for (const auto& a : j.value(key, json::array())) {
      int s = c.index_of(get<std::string>(a, "src")), d = c.index_of(get<std::string>(a, "dst"));
      if (s < 0 || d < 0) bad(std::string("unknown generator in ") + key + " arrow");
      out.push_back({s, d, a.value("length", 1)});
    }
    return out;
  };
  c.vertical = arrows("vertical");
  c.horizontal = arrows("horizontal");
  c.tau = get<int>(j, "tau");
  return c;
}

std::string dump_cfk(const CFKComplex& c) {
  json gens = json::array();
  for (const auto& g : c.gens) gens.push_back({{"name", g.name}, {"maslov", g.maslov}, {"alexander", g.alexander}});
  auto arrows = [&](const std::vector<CFKArrow>& v) {
    json out = json::array();
    for (const auto& a : v) out.push_back({{"src", c.gens[a.src].name}, {"dst", c.gens[a.dst].name}, {"length", a.length}});
    return out;
  };
  json j = {{"generators", gens}, {"vertical", arrows(c.vertical)}, {"horizontal", arrows(c.horizontal)}, {"tau", c.tau}};
  return j.dump(2);
}

BorderedDiagram parse_diagram(const std::string& text) {
  json j = parse_json(text);
  BorderedDiagram d;
  d.pmc = pmc_from(get<json>(j, "pmc"));
  d.genus = get<int>(j, "genus");
  d.alpha_circles = j.value("alpha_circles", d.genus - d.pmc.genus());
  for (const auto& p : j.value("points", json::array())) {
    DiagramPoint x;
    std::string a = get<std::string>(p, "alpha");
    auto colon = a.find(':');
    if (colon == std::string::npos) bad("alpha must look like arc:i or circle:i");
    std::string kind = a.substr(0, colon);
    if (kind != "arc" && kind != "circle") bad("alpha must look like arc:i or circle:i");
    x.on_arc = kind == "arc";
    x.alpha = std::stoi(a.substr(colon + 1));
    x.beta = get<int>(p, "beta");
    x.sign = p.value("sign", 1);
    d.points.push_back(x);
  }
  validate(d);
  return d;
}

std::string dump_diagram(const BorderedDiagram& d) {
  json pts = json::array();
  for (const auto& p : d.points)
    pts.push_back({{"alpha", std::string(p.on_arc ? "arc:" : "circle:") + std::to_string(p.alpha)},
                   {"beta", p.beta},
                   {"sign", p.sign}});
  json j = {{"pmc", {{"matching", d.pmc.matching()}}}, {"genus", d.genus}, {"alpha_circles", d.alpha_circles}, {"points", pts}};
  return j.dump(2);
}

namespace {

json laurent_json(const LaurentHalf& p) {
  json out = json::array();
  for (auto [e, c] : p.terms()) out.push_back({exponent_string(e), c});
  return out;
}

LaurentHalf laurent_from(const json& j) {
  LaurentHalf p;
  for (const auto& t : j) p += LaurentHalf::monomial(t.at(1).get<long long>(), rational_field(t.at(0)));
  return p;
}

}  // namespace

std::string dump_class(const ExteriorClass& x) {
  json terms = json::object();
  for (const auto& [s, c] : x.terms()) terms[subset_key(s)] = laurent_json(c);
  return json{{"genus", x.genus()}, {"terms", terms}}.dump(2);
}

ExteriorClass parse_class(const std::string& text) {
  json j = parse_json(text);
  ExteriorClass x(get<int>(j, "genus"));
  const json terms = get<json>(j, "terms");
  for (const auto& [key, v] : terms.items()) x.add(parse_subset_key(key), laurent_from(v));
  return x;
}

std::string dump_laurent(const LaurentHalf& p) { return laurent_json(p).dump(); }

std::string dump_complex(const ChainComplex& c) {
  json gens = json::array();
  for (const auto& g : c.gens) {
    json x = {{"name", g.name}, {"m", g.m}};
    if (g.a) x["a"] = to_string(*g.a);
    gens.push_back(x);
  }
  json diff = json::array();
  for (auto [s, d] : c.diff) diff.push_back({c.gens[s].name, c.gens[d].name});
  return json{{"generators", gens}, {"differential", diff}}.dump(2);
}

}  // namespace bdecat
