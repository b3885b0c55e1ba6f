// siegel: graded automorphism algebras of Siegel domains from the command line.
//
//   siegel compute <file|->            report for a domain document
//   siegel catalog <name> [params...]  report for a named domain
//   siegel verify-paper                classification table (exit 1 on mismatch)
//   siegel bounds <n_min> <n_max>      (n, k) elimination table
//   siegel case-analysis <n>           replay of the n = 4, 5 case analysis
//
// Exit status: 0 success, 1 verification mismatch, 2 input error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <siegel/catalog.hpp>
#include <siegel/graded_algebra.hpp>
#include <siegel/json_io.hpp>

namespace {

using namespace siegel;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;

struct Options {
  bool json = false;
  bool generators = false;
  bool no_validate = false;
  std::size_t samples = 8;
  std::uint64_t seed = 1;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

RealVector parse_params(const std::vector<std::string>& raw) {
  RealVector out;
  for (const auto& p : raw) out.push_back(parse_rational(p));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

/// `product ball:2 T3 D6:1,1,0` builds the product of the listed factors.
NamedDomain resolve_catalog(const std::string& name, const std::vector<std::string>& params, bool validate) {
  if (name != "product") return named_domain(name, parse_params(params), validate);
  if (params.empty()) throw input_error("product needs at least one factor, e.g. 'product ball:1 T3'");
  std::vector<NamedDomain> factors;
  for (const auto& f : params) {
    const auto colon = f.find(':');
    const auto fname = f.substr(0, colon);
    const auto fparams = colon == std::string::npos ? std::vector<std::string>{} : split(f.substr(colon + 1), ',');
    factors.push_back(named_domain(fname, parse_params(fparams), validate));
    if (fname == "ball" && fparams.size() == 1) factors.back().name = "B^" + fparams[0];
  }
  return product_of(factors, validate);
}

void print_report_text(const io::ReportDocument& d) {
  auto& o = std::cout;
  if (d.name) o << "domain: " << *d.name << "\n";
  o << "n = " << d.n << ", k = " << d.k << ", m = " << d.m << ", cone = " << d.cone << "\n";
  o << "dims:";
  for (std::size_t i = 0; i < 5; ++i) o << "  g_" << io::grade_keys[i] << " = " << d.dims[i];
  o << "\n";
  o << "d = " << d.total << "\n";
  o << "s = " << d.s << ", dim g(cone) = " << d.cone_algebra_dim << ", stabilizer dim = " << d.stabilizer_dim << "\n";
  o << "validation: " << d.validation << "\n";
  o << "homogeneity: " << to_string(d.homogeneity) << " (" << d.homogeneity_points << " points, seed " << d.seed
    << ")\n";
  o << "bounds:\n";
  for (const auto& b : d.bounds)
    o << "  " << std::left << std::setw(20) << b.label << std::right << to_string(b.lhs) << " " << b.relation << " "
      << to_string(b.rhs) << (b.holds() ? "" : "   VIOLATED") << "\n";
  if (!d.generators) return;
  const auto& g = *d.generators;
  o << "generators:\n";
  for (const auto& a : g.minus_one) o << "  g_-1   a = " << io::to_json(a).dump() << "\n";
  for (const auto& b : g.minus_half) o << "  g_-1/2 b = " << io::to_json(b).dump() << "\n";
  for (const auto& p : g.zero)
    o << "  g_0    A = " << io::to_json(p.a).dump() << "  B = " << io::to_json(p.b).dump() << "\n";
  for (const auto& x : g.half)
    o << "  g_1/2  phi = " << io::to_json(x.phi).dump() << "  c = " << io::to_json(x.c).dump() << "\n";
  for (const auto& x : g.one)
    o << "  g_1    a = " << io::to_json(x.a).dump() << "  b = " << io::to_json(x.b).dump() << "\n";
}

int emit_report(const SiegelDomainSpec& spec, const Options& opt, std::optional<std::string> name) {
  const ReportOptions ro{opt.samples, opt.seed, opt.generators};
  const auto doc = io::make_report_document(report(spec, ro), ro, std::move(name));
  if (opt.json)
    std::cout << io::emit(io::to_json(doc));
  else
    print_report_text(doc);
  for (const auto& b : doc.bounds)
    if (!b.holds()) return exit_mismatch;
  return exit_ok;
}

int run_verify(const Options& opt) {
  const auto t = verify_paper();
  if (opt.json) {
    std::cout << io::emit(io::to_json(t));
  } else {
    for (const auto& r : t.rows)
      std::cout << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(26) << r.id << std::right << r.description
                << ": expected " << r.expected << ", computed " << r.computed << "\n";
    std::cout << (t.all_pass() ? "all rows match\n" : "MISMATCH\n");
  }
  return t.all_pass() ? exit_ok : exit_mismatch;
}

int run_bounds(std::size_t lo, std::size_t hi, const Options& opt) {
  const auto s = bound_scan(lo, hi);
  if (opt.json) {
    std::cout << io::emit(io::to_json(s));
  } else {
    std::cout << "   n   k   bound_rhs   n^2-3   eliminated\n";
    for (const auto& r : s.rows)
      std::cout << std::setw(4) << r.n << std::setw(4) << r.k << std::setw(12) << to_string(r.rhs) << std::setw(8)
                << to_string(r.target) << "   " << (r.eliminated ? "yes" : "no") << "\n";
    std::cout << "elimination pattern (n>=5,k>=4 or n>=6,k=3): " << (s.pattern_holds ? "holds" : "VIOLATED") << "\n";
  }
  return s.pattern_holds ? exit_ok : exit_mismatch;
}

int run_cases(std::size_t n, const Options& opt) {
  const auto c = case_analysis(n);
  if (opt.json) {
    std::cout << io::emit(io::to_json(c));
  } else {
    std::cout << "n = " << c.n << ", target d = n^2-3 = " << c.target << "\n";
    for (const auto& s : c.steps)
      std::cout << (s.holds ? "  ok    " : "  FAIL  ") << s.label << ": " << s.claim << " [" << s.computed << "]\n";
    std::cout << "survivors:";
    if (c.survivors.empty()) std::cout << " none";
    for (const auto& s : c.survivors) std::cout << " " << s.name << " (d = " << s.d << ")";
    std::cout << "\n";
  }
  return c.all_hold() ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded automorphism algebras of Siegel domains in exact arithmetic"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit machine-readable JSON");
  app.add_flag("--generators", opt.generators, "Include generator bases in reports");
  app.add_flag("--no-validate", opt.no_validate, "Skip the Omega-Hermitian check");
  app.add_option("--samples", opt.samples, "Random interior points for the homogeneity test")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for all sampling")->capture_default_str();

  std::string file;
  auto* compute = app.add_subcommand("compute", "Report for a domain document (JSON file, '-' for stdin)");
  compute->add_option("file", file)->required();

  std::string name;
  std::vector<std::string> params;
  auto* catalog = app.add_subcommand("catalog", "Report for a named domain");
  catalog->add_option("name", name, "ball, polydisc, D1..D8, T3, T4, tube, product")->required();
  catalog->add_option("params", params, "Rational parameters; for product, factors like ball:2 or D6:1,1,0");

  auto* verify = app.add_subcommand("verify-paper", "Recompute the classification table");

  std::size_t lo = 0, hi = 0;
  auto* bounds = app.add_subcommand("bounds", "Elimination table for 2 <= k <= n, n_min <= n <= n_max");
  bounds->add_option("n_min", lo)->required();
  bounds->add_option("n_max", hi)->required();

  std::size_t cn = 0;
  auto* cases = app.add_subcommand("case-analysis", "Replay the case analysis for n = 4 or 5");
  cases->add_option("n", cn)->required();

  for (auto* sub : {compute, catalog, verify, bounds, cases}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_input;
  }

  try {
    if (*compute) {
      const auto doc = io::parse_domain(read_input(file));
      return emit_report(io::to_spec(doc, !opt.no_validate), opt, doc.name);
    }
    if (*catalog) {
      const auto dom = resolve_catalog(name, params, !opt.no_validate);
      return emit_report(dom.spec, opt, dom.name);
    }
    if (*verify) return run_verify(opt);
    if (*bounds) return run_bounds(lo, hi, opt);
    if (*cases) return run_cases(cn, opt);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const not_representable_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
