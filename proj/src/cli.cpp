#include "eispart/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "eispart/serialize.hpp"
#include "eispart/verify.hpp"

namespace eispart::cli {

namespace {

// Inline JSON, or @path to read it from a file.
std::string slurp(const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in)
    throw std::invalid_argument("cannot read file " + value.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot write file " + out_path);
  f << text;
  if (text.empty() || text.back() != '\n') f << "\n";
}

std::string render_table(const std::vector<TableRow>& rows,
                         const std::string& format) {
  if (format == "json") return table_to_json(rows).dump(2);
  std::ostringstream ss;
  write_table_csv(ss, rows);
  return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("eispart");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "exact Eisenstein parts of modular forms on Gamma_0(N), N square-free"};
  app.require_subcommand(1);

  long level = 1, k = 2, l = 2, m = 2, a = 1, b = 1, i = 1;
  long terms = 100, nmax = 100;
  std::string coeffs_arg, constants_arg, exponents_arg, out_path;
  std::string suite = "all";

  auto* expand = app.add_subcommand(
      "expand", "q-expansion of a combination sum_d a_d E_{2k}(dz)");
  expand->add_option("--level", level, "square-free level N")->required();
  expand->add_option("--k", k, "half-weight k (weight 2k, k >= 2)")->required();
  expand->add_option("--terms", terms, "number of coefficients (default 100)");
  expand->add_option("--coeffs", coeffs_arg,
                     "JSON {\"d\": \"p/q\", ...} or @file; default is E_{2k} "
                     "itself ({\"1\": \"1\"})");
  std::string expand_format = "json";
  expand->add_option("--format", expand_format)->check(CLI::IsMember({"json"}));
  expand->add_option("--out", out_path, "write to a file instead of stdout");

  auto* project = app.add_subcommand(
      "project", "recover a combination from its cusp constant terms");
  project->add_option("--level", level)->required();
  project->add_option("--k", k)->required();
  project
      ->add_option("--constants", constants_arg,
                   "JSON {\"c\": \"p/q\", ...} of constant terms at the cusps "
                   "1/c, or @file; omitted cusps read as 0")
      ->required();
  std::string project_format = "json";
  project->add_option("--format", project_format)->check(CLI::IsMember({"json"}));
  project->add_option("--out", out_path);

  auto* conv = app.add_subcommand(
      "conv-table",
      "convolution sums W(n): brute force next to the closed formula");
  conv->add_option("--a", a)->required();
  conv->add_option("--b", b)->required();
  conv->add_option("--l", l)->required();
  conv->add_option("--m", m)->required();
  conv->add_option("--nmax", nmax, "table upper bound (default 100)");
  conv->add_option("--level", level,
                   "square-free level, a multiple of lcm(a,b); defaults to "
                   "lcm(a,b)");
  std::string conv_format = "csv";
  conv->add_option("--format", conv_format)->check(CLI::IsMember({"csv", "json"}));
  conv->add_option("--out", out_path);

  auto* quad = app.add_subcommand(
      "quad-table",
      "representation counts of a diagonal form: lattice enumeration next to "
      "the closed formula");
  quad->add_option("--level", level, "odd square-free N")->required();
  quad->add_option("--exponents", exponents_arg,
                   "JSON {\"delta\": r, ...} block multiplicities, or @file")
      ->required();
  quad->add_option("--nmax", nmax);
  std::string quad_format = "csv";
  quad->add_option("--format", quad_format)->check(CLI::IsMember({"csv", "json"}));
  quad->add_option("--out", out_path);

  auto* orders = app.add_subcommand(
      "eta-orders", "cusp orders of an eta quotient and their total");
  orders->add_option("--level", level)->required();
  orders->add_option("--exponents", exponents_arg,
                     "JSON {\"delta\": r, ...}, negative exponents allowed")
      ->required();
  std::string orders_format = "json";
  orders->add_option("--format", orders_format)->check(CLI::IsMember({"json"}));
  orders->add_option("--out", out_path);

  auto* basis = app.add_subcommand(
      "basis", "triangular weight-2k cusp basis on Gamma_0(6)");
  basis->add_option("--k", k)->required();
  basis->add_option("--i", i, "single element 1 <= i <= 2k-3; default: all");
  basis->add_option("--terms", terms);
  std::string basis_format = "json";
  basis->add_option("--format", basis_format)->check(CLI::IsMember({"json"}));
  basis->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand(
      "verify", "run the self-check suites (exit 0 only if all pass)");
  verify_cmd->add_option(
      "--suite", suite,
      "one suite by name, or 'all' (default); see --list");
  bool list_suites = false;
  verify_cmd->add_flag("--list", list_suites, "list suite names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (expand->parsed()) {
      std::map<long, Rational> cmap{{1, Rational(1)}};
      if (!coeffs_arg.empty())
        cmap = rational_map_from_json(json::parse(slurp(coeffs_arg)));
      EisCombo combo(make_level(level), k, cmap);
      emit(to_json(eis_combo_series(combo, terms)).dump(2), out_path, out);
    } else if (project->parsed()) {
      CuspConstants constants(
          make_level(level), k,
          rational_map_from_json(json::parse(slurp(constants_arg))));
      emit(to_json(project_eisenstein(constants)).dump(2), out_path, out);
    } else if (conv->parsed()) {
      ConvSpec spec = conv->count("--level")
                          ? ConvSpec(a, b, l, m, make_level(level))
                          : ConvSpec(a, b, l, m);
      emit(render_table(conv_table(spec, nmax), conv_format), out_path, out);
    } else if (quad->parsed()) {
      QuadFormSpec spec(
          make_level(level),
          integer_map_from_json(json::parse(slurp(exponents_arg))));
      emit(render_table(quad_table(spec, nmax), quad_format), out_path, out);
    } else if (orders->parsed()) {
      EtaQuotient e(make_level(level),
                    integer_map_from_json(json::parse(slurp(exponents_arg))));
      emit(to_json(total_cusp_order(e)).dump(2), out_path, out);
    } else if (basis->parsed()) {
      if (basis->count("--i")) {
        emit(to_json(s_basis_element(k, i, terms)).dump(2), out_path, out);
      } else {
        json all = json::array();
        for (long j = 1; j <= 2 * k - 3; ++j)
          all.push_back(json{{"i", j}, {"series", to_json(s_basis_element(k, j, terms))}});
        emit(all.dump(2), out_path, out);
      }
    } else if (verify_cmd->parsed()) {
      if (list_suites) {
        for (const std::string& name : verify::suite_names()) out << name << "\n";
        return 0;
      }
      std::vector<verify::CheckResult> results;
      if (suite == "all") {
        results = verify::run_all();
      } else {
        auto one = verify::run_suite(suite);
        if (!one) {
          err << "unknown suite '" << suite
              << "'; run `eispart verify --list` for the names\n";
          return 1;
        }
        results.push_back(*one);
      }
      return verify::report(results, out) == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace eispart::cli
