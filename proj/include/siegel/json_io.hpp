#ifndef SIEGEL_JSON_IO_HPP
#define SIEGEL_JSON_IO_HPP

// JSON documents for domain specs and reports. Exact numbers travel as
// strings ("p" or "p/q"); complex entries as {"re": ..., "im": ...}.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <siegel/catalog.hpp>
#include <siegel/cone.hpp>
#include <siegel/error.hpp>
#include <siegel/graded_algebra.hpp>
#include <siegel/hermitian.hpp>
#include <siegel/matrix.hpp>
#include <siegel/scalar.hpp>

namespace siegel::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view domain_schema = "siegel-domain/1";
inline constexpr std::string_view report_schema = "siegel-report/1";

/// A structural problem inside well-formed JSON; `path` is a JSON pointer.
class document_error : public input_error {
 public:
  document_error(const std::string& path, const std::string& what)
      : input_error("at " + (path.empty() ? std::string("/") : path) + ": " + what), path_(path) {}

  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  std::string path_;
};

namespace detail {

inline std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

inline const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw document_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw document_error(path, std::string("missing field '") + key + "'");
  return *it;
}

inline const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw document_error(path, "expected an array");
  return j;
}

inline std::size_t natural(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw document_error(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

// -- numbers -----------------------------------------------------------------

inline Json to_json(const Rational& r) { return to_string(r); }

/// Rationals are strings; plain JSON integers are accepted on input.
inline Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw document_error(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const input_error& e) {
    throw document_error(path, e.what());
  }
}

inline Json to_json(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re);
  Json o = Json::object();
  o["re"] = to_string(z.re);
  o["im"] = to_string(z.im);
  return o;
}

inline GaussianRational complex_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) return GaussianRational(rational_from_json(j, path));
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "re" && it.key() != "im") throw document_error(path, "unexpected field '" + it.key() + "'");
  GaussianRational z;
  if (j.contains("re")) z.re = rational_from_json(j["re"], detail::child(path, "re"));
  if (j.contains("im")) z.im = rational_from_json(j["im"], detail::child(path, "im"));
  return z;
}

template <class T>
Json to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
Json to_json(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

/// Rows as arrays; `cols` fixes the width when there are no rows.
inline ExactMatrix complex_matrix_from_json(const Json& j, const std::string& path, std::optional<std::size_t> cols = {}) {
  detail::array(j, path);
  const std::size_t rows = j.size();
  std::size_t width = cols.value_or(rows ? j[0].size() : 0);
  ExactMatrix m(rows, width);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto rp = detail::child(path, r);
    const auto& row = detail::array(j[r], rp);
    if (row.size() != width) throw document_error(rp, "expected " + std::to_string(width) + " entries");
    for (std::size_t c = 0; c < width; ++c) m(r, c) = complex_from_json(row[c], detail::child(rp, c));
  }
  return m;
}

inline RealMatrix real_matrix_from_json(const Json& j, const std::string& path, std::optional<std::size_t> cols = {}) {
  const auto m = complex_matrix_from_json(j, path, cols);
  if (!is_real(m)) throw document_error(path, "expected a real matrix");
  return real_part(m);
}

inline RealVector real_vector_from_json(const Json& j, const std::string& path) {
  detail::array(j, path);
  RealVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], detail::child(path, i)));
  return v;
}

inline std::vector<GaussianRational> complex_vector_from_json(const Json& j, const std::string& path) {
  detail::array(j, path);
  std::vector<GaussianRational> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(complex_from_json(j[i], detail::child(path, i)));
  return v;
}

// -- cones and forms ---------------------------------------------------------

/// Runs of half-lines are written as orthants.
inline Json to_json(const ConeSpec& cone) {
  std::vector<Json> factors;
  const auto& atoms = cone.atoms();
  for (std::size_t i = 0; i < atoms.size();) {
    if (atoms[i].kind == AtomKind::lorentz) {
      factors.push_back(Json{{"type", "lorentz"}, {"dim", atoms[i].dim}});
      ++i;
      continue;
    }
    std::size_t run = 0;
    while (i < atoms.size() && atoms[i].kind == AtomKind::half_line) ++run, ++i;
    factors.push_back(run == 1 ? Json{{"type", "halfline"}} : Json{{"type", "orthant"}, {"dim", run}});
  }
  if (factors.size() == 1) return factors.front();
  Json out{{"type", "product"}, {"factors", Json::array()}};
  for (auto& f : factors) out["factors"].push_back(std::move(f));
  return out;
}

inline ConeSpec cone_from_json(const Json& j, const std::string& path = "") {
  const auto& type = detail::field(j, path, "type");
  if (!type.is_string()) throw document_error(detail::child(path, "type"), "expected a string");
  const auto t = type.get<std::string>();
  try {
    if (t == "halfline") return ConeSpec::half_line();
    if (t == "orthant") return ConeSpec::orthant(detail::natural(detail::field(j, path, "dim"), detail::child(path, "dim")));
    if (t == "lorentz") return ConeSpec::lorentz(detail::natural(detail::field(j, path, "dim"), detail::child(path, "dim")));
  } catch (const document_error&) {
    throw;
  } catch (const input_error& e) {
    throw document_error(detail::child(path, "dim"), e.what());
  }
  if (t == "product") {
    const auto fp = detail::child(path, "factors");
    const auto& fs = detail::array(detail::field(j, path, "factors"), fp);
    if (fs.empty()) throw document_error(fp, "a product needs at least one factor");
    std::vector<ConeSpec> factors;
    for (std::size_t i = 0; i < fs.size(); ++i) factors.push_back(cone_from_json(fs[i], detail::child(fp, i)));
    return ConeSpec::product(factors);
  }
  throw document_error(detail::child(path, "type"), "unknown cone type '" + t + "'");
}

inline Json to_json(const HermitianTuple& h) {
  Json out = Json::array();
  for (const auto& c : h.components()) out.push_back(to_json(c));
  return out;
}

/// A list of k square matrices of a common size m (each [] when m = 0).
inline HermitianTuple hermitian_from_json(const Json& j, const std::string& path = "") {
  detail::array(j, path);
  if (j.empty()) throw document_error(path, "expected at least one component");
  const std::size_t m = j[0].is_array() ? j[0].size() : 0;
  std::vector<ExactMatrix> comps;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = detail::child(path, i);
    auto c = complex_matrix_from_json(j[i], p, m);
    if (c.rows() != m) throw document_error(p, "expected a " + std::to_string(m) + "x" + std::to_string(m) + " matrix");
    if (!is_hermitian(c)) throw document_error(p, "component is not Hermitian");
    comps.push_back(std::move(c));
  }
  return HermitianTuple(m, std::move(comps));
}

// -- domain documents --------------------------------------------------------

struct DomainDocument {
  std::optional<std::string> name;
  RealVector params;
  std::optional<ConeSpec> cone;
  std::optional<HermitianTuple> hermitian;

  friend bool operator==(const DomainDocument&, const DomainDocument&) = default;
};

inline Json to_json(const DomainDocument& d) {
  Json out = Json::object();
  out["schema"] = domain_schema;
  if (d.name) out["name"] = *d.name;
  if (d.name || !d.params.empty()) out["params"] = to_json(d.params);
  if (d.cone) out["cone"] = to_json(*d.cone);
  if (d.hermitian) out["hermitian"] = to_json(*d.hermitian);
  return out;
}

inline DomainDocument domain_from_json(const Json& j) {
  if (!j.is_object()) throw document_error("", "expected an object");
  if (j.contains("schema") && j["schema"] != domain_schema)
    throw document_error("/schema", "unsupported schema, expected \"" + std::string(domain_schema) + "\"");
  DomainDocument d;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw document_error("/name", "expected a string");
    d.name = j["name"].get<std::string>();
  }
  if (j.contains("params")) d.params = real_vector_from_json(j["params"], "/params");
  if (j.contains("cone")) d.cone = cone_from_json(j["cone"], "/cone");
  if (j.contains("hermitian")) d.hermitian = hermitian_from_json(j["hermitian"], "/hermitian");
  if (!d.name && !d.cone) throw document_error("", "a domain needs either 'name' or 'cone'");
  if (d.cone && !d.hermitian) d.hermitian = HermitianTuple::zero(d.cone->dim(), 0);
  if (d.cone && d.hermitian->k() != d.cone->dim())
    throw document_error("/hermitian", "expected " + std::to_string(d.cone->dim()) + " components (cone dimension)");
  return d;
}

/// Explicit cone/hermitian data wins over the name shortcut.
inline SiegelDomainSpec to_spec(const DomainDocument& d, bool validate = true) {
  if (d.cone) return make_domain(*d.cone, *d.hermitian, validate);
  return named_domain(*d.name, d.params, validate).spec;
}

// -- text parsing ------------------------------------------------------------

/// 1-based line and column of a byte offset.
inline std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports the offset just past the offending character.
    const std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    auto [line, column] = locate(text, at);
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw parse_error(what, line, column);
  }
}

inline DomainDocument parse_domain(std::string_view text) { return domain_from_json(parse_json(text)); }

inline std::string emit(const Json& j) { return j.dump(2) + "\n"; }

// -- reports -----------------------------------------------------------------

/// Bases of every graded component, as computed.
struct GeneratorBases {
  std::vector<RealVector> minus_one;
  std::vector<ComplexVector> minus_half;
  std::vector<AssociatedPair> zero;
  std::vector<HalfPlusGenerator> half;
  std::vector<OnePlusGenerator> one;

  friend bool operator==(const GeneratorBases&, const GeneratorBases&) = default;
};

inline GeneratorBases generator_bases(const GradedAlgebra& g) {
  GeneratorBases out;
  const std::size_t k = g.spec.k(), m = g.spec.m();
  for (std::size_t j = 0; j < k; ++j) {
    RealVector a(k, Rational(0));
    a[j] = 1;
    out.minus_one.push_back(std::move(a));
  }
  for (std::size_t p = 0; p < m; ++p)
    for (const auto& s : {GaussianRational(1), GaussianRational::i()}) {
      ComplexVector b(m);
      b[p] = s;
      out.minus_half.push_back(std::move(b));
    }
  out.zero = g.zero.basis;
  out.half = g.half;
  out.one = g.one;
  return out;
}

struct ReportDocument {
  std::optional<std::string> name;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::string cone;
  std::array<std::size_t, 5> dims{};
  std::size_t total = 0;
  std::size_t s = 0;
  std::size_t cone_algebra_dim = 0;
  std::size_t stabilizer_dim = 0;
  std::vector<BoundCheck> bounds;
  TransitivityVerdict homogeneity = TransitivityVerdict::not_transitive;
  std::size_t homogeneity_points = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string validation;
  std::optional<GeneratorBases> generators;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline ReportDocument make_report_document(const GradedReport& r, const ReportOptions& opt,
                                           std::optional<std::string> name = {}) {
  ReportDocument d;
  d.name = std::move(name);
  d.n = r.n;
  d.k = r.k;
  d.m = r.m;
  d.cone = r.cone;
  d.dims = r.dims;
  d.total = r.total;
  d.s = r.s;
  d.cone_algebra_dim = r.cone_algebra_dim;
  d.stabilizer_dim = r.stabilizer_dim;
  d.bounds = r.bounds;
  d.homogeneity = r.homogeneity;
  d.homogeneity_points = r.homogeneity_points;
  d.samples = opt.samples;
  d.seed = opt.seed;
  d.validation = r.validation;
  if (r.algebra) d.generators = generator_bases(*r.algebra);
  return d;
}

inline constexpr const char* grade_keys[5] = {"-1", "-1/2", "0", "1/2", "1"};

inline Json to_json(const GeneratorBases& g) {
  Json out = Json::object();
  out["-1"] = Json::array();
  for (const auto& a : g.minus_one) out["-1"].push_back(Json{{"a", to_json(a)}});
  out["-1/2"] = Json::array();
  for (const auto& b : g.minus_half) out["-1/2"].push_back(Json{{"b", to_json(b)}});
  out["0"] = Json::array();
  for (const auto& p : g.zero) out["0"].push_back(Json{{"A", to_json(p.a)}, {"B", to_json(p.b)}});
  out["1/2"] = Json::array();
  for (const auto& x : g.half) out["1/2"].push_back(Json{{"phi", to_json(x.phi)}, {"c", to_json(x.c)}});
  out["1"] = Json::array();
  for (const auto& x : g.one) out["1"].push_back(Json{{"a", to_json(x.a)}, {"b", to_json(x.b)}});
  return out;
}

inline GeneratorBases generators_from_json(const Json& j, const std::string& path, std::size_t k, std::size_t m) {
  GeneratorBases g;
  auto each = [&](const char* key, auto&& fn) {
    const auto p = detail::child(path, key);
    const auto& arr = detail::array(detail::field(j, path, key), p);
    for (std::size_t i = 0; i < arr.size(); ++i) fn(arr[i], detail::child(p, i));
  };
  each("-1", [&](const Json& e, const std::string& p) {
    g.minus_one.push_back(real_vector_from_json(detail::field(e, p, "a"), p + "/a"));
  });
  each("-1/2", [&](const Json& e, const std::string& p) {
    g.minus_half.push_back(complex_vector_from_json(detail::field(e, p, "b"), p + "/b"));
  });
  each("0", [&](const Json& e, const std::string& p) {
    g.zero.push_back({real_matrix_from_json(detail::field(e, p, "A"), p + "/A", k),
                      complex_matrix_from_json(detail::field(e, p, "B"), p + "/B", m)});
  });
  each("1/2", [&](const Json& e, const std::string& p) {
    g.half.push_back({complex_matrix_from_json(detail::field(e, p, "phi"), p + "/phi", k),
                      complex_vector_from_json(detail::field(e, p, "c"), p + "/c")});
  });
  each("1", [&](const Json& e, const std::string& p) {
    g.one.push_back({real_vector_from_json(detail::field(e, p, "a"), p + "/a"),
                     complex_vector_from_json(detail::field(e, p, "b"), p + "/b")});
  });
  return g;
}

inline Json to_json(const ReportDocument& d) {
  Json out = Json::object();
  out["schema"] = report_schema;
  out["kind"] = "domain-report";
  if (d.name) out["name"] = *d.name;
  out["n"] = d.n;
  out["k"] = d.k;
  out["m"] = d.m;
  out["cone"] = d.cone;
  Json dims = Json::object();
  for (std::size_t i = 0; i < 5; ++i) dims[grade_keys[i]] = d.dims[i];
  out["dims"] = std::move(dims);
  out["d"] = d.total;
  out["s"] = d.s;
  out["cone_algebra_dim"] = d.cone_algebra_dim;
  out["stabilizer_dim"] = d.stabilizer_dim;
  out["bounds"] = Json::array();
  for (const auto& b : d.bounds)
    out["bounds"].push_back(Json{{"label", b.label},
                                 {"relation", b.relation},
                                 {"lhs", to_json(b.lhs)},
                                 {"rhs", to_json(b.rhs)},
                                 {"holds", b.holds()}});
  out["homogeneity"] = Json{{"verdict", to_string(d.homogeneity)},
                            {"points", d.homogeneity_points},
                            {"samples", d.samples},
                            {"seed", d.seed}};
  out["validation"] = d.validation;
  if (d.generators) out["generators"] = to_json(*d.generators);
  return out;
}

inline ReportDocument report_from_json(const Json& j) {
  if (!j.is_object()) throw document_error("", "expected an object");
  if (detail::field(j, "", "schema") != report_schema) throw document_error("/schema", "unsupported schema");
  if (detail::field(j, "", "kind") != "domain-report") throw document_error("/kind", "expected \"domain-report\"");
  auto nat = [&](const char* key) { return detail::natural(detail::field(j, "", key), detail::child("", key)); };
  auto str = [&](const Json& v, const std::string& p) {
    if (!v.is_string()) throw document_error(p, "expected a string");
    return v.get<std::string>();
  };
  ReportDocument d;
  if (j.contains("name")) d.name = str(j["name"], "/name");
  d.n = nat("n");
  d.k = nat("k");
  d.m = nat("m");
  d.cone = str(detail::field(j, "", "cone"), "/cone");
  const auto& dims = detail::field(j, "", "dims");
  for (std::size_t i = 0; i < 5; ++i)
    d.dims[i] = detail::natural(detail::field(dims, "/dims", grade_keys[i]), std::string("/dims/") + grade_keys[i]);
  d.total = nat("d");
  d.s = nat("s");
  d.cone_algebra_dim = nat("cone_algebra_dim");
  d.stabilizer_dim = nat("stabilizer_dim");
  const auto& bounds = detail::array(detail::field(j, "", "bounds"), "/bounds");
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const auto p = detail::child("/bounds", i);
    BoundCheck b{str(detail::field(bounds[i], p, "label"), p + "/label"),
                 str(detail::field(bounds[i], p, "relation"), p + "/relation"),
                 rational_from_json(detail::field(bounds[i], p, "lhs"), p + "/lhs"),
                 rational_from_json(detail::field(bounds[i], p, "rhs"), p + "/rhs")};
    if (b.relation != "<=" && b.relation != "=") throw document_error(p + "/relation", "expected \"<=\" or \"=\"");
    d.bounds.push_back(std::move(b));
  }
  const auto& h = detail::field(j, "", "homogeneity");
  const auto verdict = str(detail::field(h, "/homogeneity", "verdict"), "/homogeneity/verdict");
  if (verdict == to_string(TransitivityVerdict::transitive_certified))
    d.homogeneity = TransitivityVerdict::transitive_certified;
  else if (verdict == to_string(TransitivityVerdict::not_transitive))
    d.homogeneity = TransitivityVerdict::not_transitive;
  else
    throw document_error("/homogeneity/verdict", "unknown verdict '" + verdict + "'");
  d.homogeneity_points = detail::natural(detail::field(h, "/homogeneity", "points"), "/homogeneity/points");
  d.samples = detail::natural(detail::field(h, "/homogeneity", "samples"), "/homogeneity/samples");
  const auto& seed = detail::field(h, "/homogeneity", "seed");
  if (!seed.is_number_unsigned()) throw document_error("/homogeneity/seed", "expected a non-negative integer");
  d.seed = seed.get<std::uint64_t>();
  d.validation = str(detail::field(j, "", "validation"), "/validation");
  if (j.contains("generators")) d.generators = generators_from_json(j["generators"], "/generators", d.k, d.m);
  return d;
}

inline ReportDocument parse_report(std::string_view text) { return report_from_json(parse_json(text)); }

// -- tables ------------------------------------------------------------------

inline Json to_json(const VerificationTable& t) {
  Json out{{"schema", report_schema}, {"kind", "verification-table"}, {"all_pass", t.all_pass()}, {"rows", Json::array()}};
  for (const auto& r : t.rows)
    out["rows"].push_back(Json{{"id", r.id},
                               {"description", r.description},
                               {"expected", r.expected},
                               {"computed", r.computed},
                               {"pass", r.pass}});
  return out;
}

inline Json to_json(const BoundScan& s) {
  Json out{{"schema", report_schema}, {"kind", "bound-scan"}, {"pattern_holds", s.pattern_holds}, {"rows", Json::array()}};
  for (const auto& r : s.rows)
    out["rows"].push_back(Json{{"n", r.n},
                               {"k", r.k},
                               {"rhs", to_json(r.rhs)},
                               {"target", to_json(r.target)},
                               {"eliminated", r.eliminated}});
  return out;
}

inline Json to_json(const CaseAnalysis& c) {
  Json out{{"schema", report_schema}, {"kind", "case-analysis"}, {"n", c.n}, {"target", c.target},
           {"all_hold", c.all_hold()}, {"steps", Json::array()}, {"survivors", Json::array()}};
  for (const auto& s : c.steps)
    out["steps"].push_back(Json{{"label", s.label}, {"claim", s.claim}, {"computed", s.computed}, {"holds", s.holds}});
  for (const auto& s : c.survivors) out["survivors"].push_back(Json{{"name", s.name}, {"d", s.d}});
  return out;
}

}  // namespace siegel::io

#endif  // SIEGEL_JSON_IO_HPP
