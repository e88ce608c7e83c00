#include "tropabel/json_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <regex>

namespace tropabel::json {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

void expect_object(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) fail(std::string(what) + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "schema") {
      if (!value.is_string() || value.get<std::string>() != kSchema) fail(std::string(what) + ": unsupported schema");
      continue;
    }
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      fail(std::string(what) + ": unknown field '" + key + "'");
    }
  }
}

const Json& field(const Json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) fail(std::string("missing field '") + name + "'");
  return *it;
}

std::int64_t read_int(const Json& j) {
  if (!j.is_number_integer()) fail("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::uint64_t read_uint(const Json& j) {
  if (!j.is_number_unsigned()) fail("expected a non-negative integer, got " + j.dump());
  return j.get<std::uint64_t>();
}

bool read_bool(const Json& j) {
  if (!j.is_boolean()) fail("expected a boolean, got " + j.dump());
  return j.get<bool>();
}

std::string read_string(const Json& j) {
  if (!j.is_string()) fail("expected a string, got " + j.dump());
  return j.get<std::string>();
}

const Json& array_of(const Json& j, std::size_t n) {
  if (!j.is_array() || (n != 0 && j.size() != n)) fail("expected an array of length " + std::to_string(n) + ", got " + j.dump());
  return j;
}

const Json& any_array(const Json& j) {
  if (!j.is_array()) fail("expected an array, got " + j.dump());
  return j;
}

std::int64_t parse_key(const std::string& key) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(key, &pos);
    if (pos != key.size()) fail("bad integer key '" + key + "'");
    return v;
  } catch (const std::logic_error&) {
    fail("bad integer key '" + key + "'");
  }
}

}  // namespace

static Json encode(std::int64_t v) { return v; }

template <typename T, typename F>
Mat2<T> read_mat2(const Json& j, F read) {
  array_of(j, 2);
  Mat2<T> m;
  for (int i = 0; i < 2; ++i) {
    const Json& row = array_of(j[static_cast<std::size_t>(i)], 2);
    for (int k = 0; k < 2; ++k) m(i, k) = read(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

template <typename T>
Json encode_mat2(const Mat2<T>& m) {
  return Json::array({Json::array({encode(m(0, 0)), encode(m(0, 1))}), Json::array({encode(m(1, 0)), encode(m(1, 1))})});
}

Json document(Json body) {
  body["schema"] = kSchema;
  return body;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error&) {
  }
  static const std::regex bare_key(R"(([\{,]\s*)([A-Za-z_][A-Za-z0-9_]*)\s*:)");
  const std::string quoted = std::regex_replace(std::string(text), bare_key, "$1\"$2\":");
  try {
    return Json::parse(quoted);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

// ---- scalars, vectors, matrices ----

Json encode(const Rat& r) { return r.str(); }

Json encode(const CRat& c) { return Json{{"re", encode(c.re)}, {"im", encode(c.im)}}; }

Json encode(const IVec2& v) { return Json::array({v.x, v.y}); }
Json encode(const RVec2& v) { return Json::array({encode(v.x), encode(v.y)}); }

Json encode(const IMat2& m) { return encode_mat2(m); }
Json encode(const RMat2& m) { return encode_mat2(m); }
Json encode(const CMat2& m) { return encode_mat2(m); }

Json encode(const IMat4& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(Json(row));
  return out;
}

Rat read_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<std::int64_t>()));
  try {
    return Rat::parse(read_string(j));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail("bad rational " + j.dump() + ": " + e.what());
  }
}

CRat read_crat(const Json& j) {
  if (!j.is_object()) return CRat(read_rat(j));
  expect_object(j, {"re", "im"}, "complex");
  return CRat(j.contains("re") ? read_rat(j["re"]) : Rat(), j.contains("im") ? read_rat(j["im"]) : Rat());
}

IVec2 read_ivec2(const Json& j) {
  array_of(j, 2);
  return {read_int(j[0]), read_int(j[1])};
}

RVec2 read_rvec2(const Json& j) {
  array_of(j, 2);
  return {read_rat(j[0]), read_rat(j[1])};
}

IMat2 read_imat2(const Json& j) { return read_mat2<std::int64_t>(j, read_int); }
RMat2 read_rmat2(const Json& j) { return read_mat2<Rat>(j, read_rat); }
CMat2 read_cmat2(const Json& j) { return read_mat2<CRat>(j, read_crat); }

IMat4 read_imat4(const Json& j) {
  array_of(j, 4);
  IMat4 m{};
  for (std::size_t i = 0; i < 4; ++i) {
    const Json& row = array_of(j[i], 4);
    for (std::size_t k = 0; k < 4; ++k) m[i][k] = read_int(row[k]);
  }
  return m;
}

// ---- polarizations ----

Json encode(const SkewForm& q) { return Json{{"C", encode(q.C)}, {"tau", q.tau}}; }

SkewForm read_skew_form(const Json& j) {
  expect_object(j, {"C", "tau"}, "skew form");
  return SkewForm{read_imat2(field(j, "C")), j.contains("tau") ? read_int(j["tau"]) : 0};
}

Json encode(const PeriodData& p) { return Json{{"Z", encode(p.Z)}}; }

PeriodData read_period_data(const Json& j) {
  expect_object(j, {"Z"}, "period data");
  return PeriodData{read_cmat2(field(j, "Z"))};
}

Json encode(const PoincareDual& p) { return Json{{"T", encode(p.T)}, {"B", encode(p.B)}, {"matrix", encode(p.assemble())}}; }

PoincareDual read_poincare_dual(const Json& j) {
  expect_object(j, {"T", "B", "matrix"}, "poincare dual");
  PoincareDual p{read_imat2(field(j, "T")), read_imat2(field(j, "B"))};
  if (j.contains("matrix") && read_imat4(j["matrix"]) != p.assemble()) fail("poincare dual: matrix disagrees with T, B");
  return p;
}

Json encode(const RiemannCheck& r) { return Json{{"isotropic", r.isotropic}, {"positive", r.positive}, {"ok", r.ok()}}; }

RiemannCheck read_riemann_check(const Json& j) {
  expect_object(j, {"isotropic", "positive", "ok"}, "riemann check");
  return RiemannCheck{read_bool(field(j, "isotropic")), read_bool(field(j, "positive"))};
}

Json encode(const PolarizationType& t) { return Json{{"d1", t.d1}, {"d2", t.d2}}; }

PolarizationType read_polarization_type(const Json& j) {
  expect_object(j, {"d1", "d2"}, "polarization type");
  return PolarizationType{read_int(field(j, "d1")), read_int(field(j, "d2"))};
}

// ---- tori and curves ----

Json encode(const TropicalTorus& t) { return Json{{"S", encode(t.S())}}; }

TropicalTorus read_torus(const Json& j) {
  if (j.is_array()) return TropicalTorus(read_rmat2(j));
  expect_object(j, {"S"}, "torus");
  return TropicalTorus(read_rmat2(field(j, "S")));
}

Json encode(const PointConfig& c) {
  Json points = Json::array();
  for (const auto& p : c.points) points.push_back(encode(p.coords));
  return Json{{"points", points}, {"seed", c.seed}};
}

PointConfig read_config(const Json& j) {
  expect_object(j, {"points", "seed"}, "config");
  PointConfig c;
  for (const auto& p : any_array(field(j, "points"))) c.points.push_back(TorusPoint{read_rvec2(p)});
  if (j.contains("seed")) c.seed = read_uint(j["seed"]);
  return c;
}

Json encode(const ParamCurve& pc) {
  Json edges = Json::array();
  for (const auto& e : pc.edges) {
    Json je{{"u", e.u}, {"v", e.v}, {"length", encode(e.length)}, {"slope", encode(e.slope)}};
    if (e.winding) je["winding"] = encode(*e.winding);
    edges.push_back(je);
  }
  Json legs = Json::array();
  for (const auto& l : pc.legs) legs.push_back(Json{{"vertex", l.vertex}, {"marker", l.marker}});
  return Json{{"torus", encode(pc.torus)},
              {"vertices", pc.vertex_count},
              {"edges", edges},
              {"legs", legs},
              {"base", Json{{"vertex", pc.base_vertex}, {"position", encode(pc.base_position)}}}};
}

ParamCurve read_curve(const Json& j) {
  expect_object(j, {"torus", "vertices", "edges", "legs", "base"}, "curve");
  ParamCurve pc{read_torus(field(j, "torus")), static_cast<int>(read_int(field(j, "vertices"))), {}, {}, 0, {}};
  for (const auto& je : any_array(field(j, "edges"))) {
    expect_object(je, {"u", "v", "length", "slope", "winding"}, "edge");
    CurveEdge e{static_cast<int>(read_int(field(je, "u"))), static_cast<int>(read_int(field(je, "v"))),
                read_rat(field(je, "length")), read_ivec2(field(je, "slope")), std::nullopt};
    if (je.contains("winding") && !je["winding"].is_null()) e.winding = read_ivec2(je["winding"]);
    pc.edges.push_back(std::move(e));
  }
  if (j.contains("legs")) {
    for (const auto& jl : any_array(j["legs"])) {
      expect_object(jl, {"vertex", "marker"}, "leg");
      pc.legs.push_back(CurveLeg{static_cast<int>(read_int(field(jl, "vertex"))), static_cast<int>(read_int(field(jl, "marker")))});
    }
  }
  if (j.contains("base")) {
    const Json& jb = j["base"];
    expect_object(jb, {"vertex", "position"}, "base");
    pc.base_vertex = static_cast<int>(read_int(field(jb, "vertex")));
    pc.base_position = read_rvec2(field(jb, "position"));
  } else {
    pc.base_position = RVec2{Rat(0), Rat(0)};
  }
  return pc;
}

Json encode(const std::vector<Diagnostic>& diags) {
  Json list = Json::array();
  for (const auto& d : diags) list.push_back(Json{{"code", d.code}, {"where", d.where}});
  return Json{{"valid", diags.empty()}, {"diagnostics", list}};
}

std::vector<Diagnostic> read_diagnostics(const Json& j) {
  expect_object(j, {"valid", "diagnostics"}, "diagnostics");
  std::vector<Diagnostic> out;
  for (const auto& d : any_array(field(j, "diagnostics"))) {
    expect_object(d, {"code", "where"}, "diagnostic");
    out.push_back(Diagnostic{read_string(field(d, "code")), read_string(field(d, "where"))});
  }
  return out;
}

Json encode(const Multiplicity& m) {
  Json factors = Json::object();
  for (const auto& [v, f] : m.vertex_factors) factors[std::to_string(v)] = f;
  return Json{{"gcd", m.gcd}, {"vertex_factors", factors}, {"total", m.total}};
}

Multiplicity read_multiplicity(const Json& j) {
  expect_object(j, {"gcd", "vertex_factors", "total"}, "multiplicity");
  Multiplicity m{read_int(field(j, "gcd")), {}, read_int(field(j, "total"))};
  if (j.contains("vertex_factors")) {
    if (!j["vertex_factors"].is_object()) fail("vertex_factors: expected an object");
    for (const auto& [k, f] : j["vertex_factors"].items()) m.vertex_factors[static_cast<int>(parse_key(k))] = read_int(f);
  }
  return m;
}

// ---- families ----

Json encode(const MumfordFamily& f) {
  return Json{{"Z", encode(f.Z)}, {"S", encode(f.S)}, {"tau", f.tau}, {"Q", encode(f.Q)}, {"B", encode(f.B())}};
}

MumfordFamily read_family(const Json& j) {
  expect_object(j, {"Z", "S", "tau", "Q", "B"}, "family");
  MumfordFamily f{read_cmat2(field(j, "Z")), read_rmat2(field(j, "S")), read_int(field(j, "tau")), read_skew_form(field(j, "Q"))};
  if (f.Q.tau != f.tau) fail("family: tau disagrees with Q.tau");
  if (j.contains("B") && read_imat2(j["B"]) != f.B()) fail("family: B disagrees with comatrix(Q.C)");
  return f;
}

Json encode(const FamilyCheck& c) {
  return Json{{"block_form", c.block_form}, {"tropical", c.tropical},     {"isotropic", c.isotropic},
              {"positive", c.positive},     {"ok", c.ok()},               {"diagnostics", c.diagnostics}};
}

FamilyCheck read_family_check(const Json& j) {
  expect_object(j, {"block_form", "tropical", "isotropic", "positive", "ok", "diagnostics"}, "family check");
  FamilyCheck c;
  c.block_form = read_bool(field(j, "block_form"));
  c.tropical = read_bool(field(j, "tropical"));
  c.isotropic = read_bool(field(j, "isotropic"));
  c.positive = read_bool(field(j, "positive"));
  if (j.contains("diagnostics")) {
    for (const auto& d : any_array(j["diagnostics"])) c.diagnostics.push_back(read_string(d));
  }
  return c;
}

Json encode(const SigmaExponent& s) {
  return Json{{"exponent", s.value.is_real() ? encode(s.value.re) : encode(s.value)}, {"is_one", s.is_one()}};
}

SigmaExponent read_sigma(const Json& j) {
  expect_object(j, {"exponent", "is_one"}, "sigma");
  return SigmaExponent{read_crat(field(j, "exponent"))};
}

// ---- enumeration ----

Json encode(const SearchBounds& b) { return Json{{"slope_bound", b.slope_bound}, {"winding_bound", b.winding_bound}}; }

SearchBounds read_bounds(const Json& j) {
  expect_object(j, {"slope_bound", "winding_bound"}, "bounds");
  SearchBounds b;
  if (j.contains("slope_bound")) b.slope_bound = static_cast<int>(read_int(j["slope_bound"]));
  if (j.contains("winding_bound")) b.winding_bound = static_cast<int>(read_int(j["winding_bound"]));
  return b;
}

Json encode(const EnumerationResult& r) {
  Json curves = Json::array();
  for (const auto& c : r.curves) {
    curves.push_back(Json{{"curve", encode(c.curve)},
                          {"multiplicity", encode(c.multiplicity)},
                          {"key", c.key},
                          {"type_index", c.type_index}});
  }
  Json by_gcd = Json::object();
  for (const auto& [k, idx] : r.by_gcd) by_gcd[std::to_string(k)] = idx;
  return Json{{"torus", encode(r.torus)},   {"B", encode(r.B)},           {"genus", r.genus},
              {"config", encode(r.config)}, {"bounds", encode(r.bounds)}, {"curves", curves},
              {"by_gcd", by_gcd},           {"warnings", r.warnings}};
}

EnumerationResult read_enumeration(const Json& j) {
  expect_object(j, {"torus", "B", "genus", "config", "bounds", "curves", "by_gcd", "warnings"}, "enumeration");
  EnumerationResult r{read_torus(field(j, "torus")),   read_imat2(field(j, "B")),       static_cast<int>(read_int(field(j, "genus"))),
                      read_config(field(j, "config")), read_bounds(field(j, "bounds")), {},
                      {},                              {}};
  for (const auto& jc : any_array(field(j, "curves"))) {
    expect_object(jc, {"curve", "multiplicity", "key", "type_index"}, "enumerated curve");
    r.curves.push_back(EnumeratedCurve{read_curve(field(jc, "curve")), read_multiplicity(field(jc, "multiplicity")),
                                       read_string(field(jc, "key")), static_cast<int>(read_int(field(jc, "type_index")))});
  }
  const Json& by_gcd = field(j, "by_gcd");
  if (!by_gcd.is_object()) fail("by_gcd: expected an object");
  for (const auto& [k, idx] : by_gcd.items()) {
    auto& slot = r.by_gcd[parse_key(k)];
    for (const auto& i : any_array(idx)) slot.push_back(static_cast<std::size_t>(read_uint(i)));
  }
  if (j.contains("warnings")) {
    for (const auto& w : any_array(j["warnings"])) r.warnings.push_back(read_string(w));
  }
  return r;
}

// ---- multiple cover ----

Json encode(const ComplexCount& c) {
  return Json{{"g", c.g}, {"d", c.d}, {"n", c.n}, {"value", c.value}, {"tau", c.tau}, {"B", encode(c.B)}, {"seed", c.seed}};
}

ComplexCount read_complex_count(const Json& j) {
  expect_object(j, {"g", "d", "n", "value", "tau", "B", "seed"}, "complex count");
  ComplexCount c;
  c.g = static_cast<int>(read_int(field(j, "g")));
  c.d = read_int(field(j, "d"));
  c.n = read_int(field(j, "n"));
  c.value = read_int(field(j, "value"));
  c.tau = read_int(field(j, "tau"));
  c.B = read_imat2(field(j, "B"));
  c.seed = read_uint(field(j, "seed"));
  return c;
}

Json encode(const MultiCoverReport& r) {
  Json primitive = Json::object();
  for (const auto& [m, c] : r.primitive) primitive[std::to_string(m)] = encode(c);
  Json terms = Json::object();
  for (const auto& [k, v] : r.rhs_terms) terms[std::to_string(k)] = v;
  Json bounds = Json::object();
  for (const auto& [k, b] : r.bounds) bounds[std::to_string(k)] = encode(b);
  Json stable = Json::object();
  for (const auto& [k, s] : r.stable) stable[std::to_string(k)] = s;
  Json strata = Json::object();
  for (const auto& [k, v] : r.strata) strata[std::to_string(k)] = v;
  return Json{{"g", r.g},
              {"B", encode(r.B)},
              {"seed", r.seed},
              {"S", encode(r.S)},
              {"lhs", encode(r.lhs)},
              {"primitive", primitive},
              {"rhs_terms", terms},
              {"rhs", r.rhs},
              {"verdict", r.verdict},
              {"certified", r.certified},
              {"status", r.status()},
              {"bounds", bounds},
              {"stable", stable},
              {"strata", strata},
              {"stratification_ok", r.stratification_ok},
              {"bijection_ok", r.bijection_ok},
              {"family_consistency_ok", r.family_consistency_ok},
              {"warnings", r.warnings}};
}

MultiCoverReport read_multicover(const Json& j) {
  expect_object(j,
                {"g", "B", "seed", "S", "lhs", "primitive", "rhs_terms", "rhs", "verdict", "certified", "status", "bounds",
                 "stable", "strata", "stratification_ok", "bijection_ok", "family_consistency_ok", "warnings"},
                "multicover report");
  MultiCoverReport r;
  r.g = static_cast<int>(read_int(field(j, "g")));
  r.B = read_imat2(field(j, "B"));
  r.seed = read_uint(field(j, "seed"));
  r.S = read_rmat2(field(j, "S"));
  r.lhs = read_complex_count(field(j, "lhs"));
  const auto keyed = [](const Json& obj, const char* name) -> const Json& {
    const Json& m = field(obj, name);
    if (!m.is_object()) fail(std::string(name) + ": expected an object");
    return m;
  };
  for (const auto& [k, v] : keyed(j, "primitive").items()) r.primitive[parse_key(k)] = read_complex_count(v);
  for (const auto& [k, v] : keyed(j, "rhs_terms").items()) r.rhs_terms[parse_key(k)] = read_int(v);
  for (const auto& [k, v] : keyed(j, "bounds").items()) r.bounds[parse_key(k)] = read_bounds(v);
  for (const auto& [k, v] : keyed(j, "stable").items()) r.stable[parse_key(k)] = read_bool(v);
  for (const auto& [k, v] : keyed(j, "strata").items()) r.strata[parse_key(k)] = read_int(v);
  r.rhs = read_int(field(j, "rhs"));
  r.verdict = read_bool(field(j, "verdict"));
  r.certified = read_bool(field(j, "certified"));
  r.stratification_ok = read_bool(field(j, "stratification_ok"));
  r.bijection_ok = read_bool(field(j, "bijection_ok"));
  r.family_consistency_ok = read_bool(field(j, "family_consistency_ok"));
  for (const auto& w : any_array(field(j, "warnings"))) r.warnings.push_back(read_string(w));
  return r;
}

}  // namespace tropabel::json
