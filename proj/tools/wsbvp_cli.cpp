// Command-line front end for the wavelet collocation SBVP solvers.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsbvp/report.hpp"

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

double parse_real(const std::string &s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
  return v;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Wavelet collocation solvers (HWQA, HWNA, HeWQA, HeWNA) for singular BVPs\n"
               "  y'' + (k_g/t) y' + f(t, y) = 0 on (0, 1].\n\n"
               "Exit codes: 0 all solves converged, 1 invalid arguments, 2 a solve did not converge."};

  std::string problem;
  std::string methods = "HWNA,HeWNA,HWQA,HeWQA";
  std::string resolutions;
  std::string levels;
  std::string init;
  std::string format = "table";
  std::string out_path;
  double tol = 1e-12;
  int max_iter = 50;
  int arrhenius_n = 1;
  double k_g = 0.0;
  bool sweep = false;

  app.add_option("--problem", problem, "arrhenius | stellar | thermal-explosion | membrane | human-head")->required();
  app.add_option("--method", methods, "comma list of HWQA,HWNA,HeWQA,HeWNA");
  auto *res_opt = app.add_option("--resolution", resolutions, "comma list; Haar: level J, Hermite: M functions");
  auto *lvl_opt = app.add_option("--level", levels, "comma list of shared levels J (Haar J, Hermite M = 2^(J+1)); default 2");
  res_opt->excludes(lvl_opt);
  app.add_option("--tol", tol, "stopping tolerance on the nodal update")->check(CLI::PositiveNumber);
  app.add_option("--max-iter", max_iter, "iteration cap")->check(CLI::PositiveNumber);
  app.add_option("--init", init, "initial nodal vector: a constant or a comma list");
  app.add_option("--format", format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--n", arrhenius_n, "exponent n of the arrhenius problem")->check(CLI::PositiveNumber);
  auto *kg_opt = app.add_option("--kg", k_g, "override the shape factor k_g")->check(CLI::NonNegativeNumber);
  app.add_flag("--sweep", sweep, "emit a convergence sweep (one method) as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  wsbvp::RunSpec spec;
  spec.problem = problem;
  spec.arrhenius_n = arrhenius_n;
  if (*kg_opt) spec.k_g = k_g;
  spec.tol = tol;
  spec.max_iter = max_iter;
  spec.format = format == "csv" ? wsbvp::OutputFormat::Csv
                : format == "json" ? wsbvp::OutputFormat::Json
                                   : wsbvp::OutputFormat::Table;
  try {
    for (const auto &m : split(methods, ',')) {
      auto parsed = wsbvp::parse_method(m);
      if (!parsed) throw std::invalid_argument("unknown method: " + m);
      spec.methods.push_back(*parsed);
    }
    // default: shared level J = 2, i.e. Haar J = 2 and Hermite M = 8
    if (levels.empty() && resolutions.empty()) levels = "2";
    spec.shared_level = !levels.empty();
    const std::string &res_list = spec.shared_level ? levels : resolutions;
    for (const auto &r : split(res_list, ',')) {
      const double v = parse_real(r);
      if (v < 0 || v != static_cast<unsigned>(v)) throw std::invalid_argument("bad resolution: " + r);
      spec.resolutions.push_back(static_cast<unsigned>(v));
    }
    if (!init.empty()) {
      const auto parts = split(init, ',');
      if (parts.size() == 1) spec.init_const = parse_real(parts[0]);
      else
        for (const auto &p : parts) spec.init_list.push_back(parse_real(p));
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << '\n';
      return 1;
    }
  }
  std::ostream &out = out_path.empty() ? std::cout : file;

  const int code = sweep ? wsbvp::emit_convergence_sweep(spec, out, std::cerr) : wsbvp::run(spec, out, std::cerr);
  if (code == 1 && !wsbvp::benchmark_for(spec)) std::cerr << app.help();
  return code;
}
