// Command-line surface for the Kerov polynomial library: compute polynomials,
// run the cross-verification suites, convert series files, dump diagram
// functionals and Stanley polynomials.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kerov/characters.hpp"
#include "kerov/diagram.hpp"
#include "kerov/json_io.hpp"
#include "kerov/kerov.hpp"
#include "kerov/series.hpp"
#include "kerov/stanley.hpp"
#include "kerov/verify.hpp"

namespace {

int default_threads() {
  if (const char* env = std::getenv("KEROV_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

kerov::TruncatedSeries convert_series(const kerov::TruncatedSeries& in,
                                      kerov::SeriesRole to) {
  using kerov::SeriesRole;
  if (in.role() == to) return in;
  switch (in.role()) {
    case SeriesRole::free_cumulants:
      return to == SeriesRole::moments ? kerov::moments_from_free_cumulants(in)
                                       : kerov::s_from_r(in);
    case SeriesRole::moments: {
      kerov::TruncatedSeries r = kerov::lagrange_free_cumulant(in);
      return to == SeriesRole::free_cumulants ? r : kerov::s_from_r(r);
    }
    case SeriesRole::s_functionals: {
      kerov::TruncatedSeries r = kerov::r_from_s(in);
      return to == SeriesRole::free_cumulants
                 ? r
                 : kerov::moments_from_free_cumulants(r);
    }
  }
  throw std::logic_error("unreachable");
}

struct ComputeOptions {
  int k = 0;
  std::vector<int> parts;
  std::string format = "text";
  int threads = default_threads();
};

int run_compute(const ComputeOptions& opt) {
  kerov::KerovResult result =
      opt.parts.empty() ? kerov::kerov_polynomial(opt.k, opt.threads)
                        : kerov::generalized_kerov(opt.parts, opt.threads);
  if (opt.format == "text")
    std::cout << result.polynomial.to_text() << "\n";
  else if (opt.format == "latex")
    std::cout << result.polynomial.to_latex() << "\n";
  else
    std::cout << kerov::kerov_result_to_json(result);
  return 0;
}

struct VerifyOptions {
  int max_boxes = 8;
  int max_k = 6;
  std::uint64_t seed = 20100509;
  std::vector<std::string> suites;
};

int run_verify(const VerifyOptions& opt) {
  using namespace kerov;
  std::vector<std::string> suites = opt.suites;
  if (suites.empty())
    suites = {"oracle-identity", "dual-route",   "condition-equivalence",
              "lemmas",          "divisibility", "homogeneity",
              "goulden-rattan"};
  RunReport report;
  for (const std::string& name : suites) {
    if (name == "oracle-identity") {
      report.checks.push_back(verify_oracle_identity(opt.max_boxes, opt.max_k));
      report.checks.push_back(
          verify_generalized(std::min(opt.max_k, 6), std::min(opt.max_boxes, 7)));
    } else if (name == "dual-route") {
      report.checks.push_back(verify_dual_route(std::min(opt.max_k + 1, 7)));
      report.checks.push_back(
          verify_linear_quadratic(std::min(opt.max_k + 1, 7)));
    } else if (name == "condition-equivalence") {
      report.checks.push_back(verify_condition_equivalence(std::min(opt.max_k, 6)));
    } else if (name == "lemmas") {
      report.checks.push_back(verify_lemmas(opt.seed));
    } else if (name == "divisibility") {
      report.checks.push_back(verify_divisibility({3, 5, 7}));
    } else if (name == "homogeneity") {
      report.checks.push_back(verify_homogeneity(opt.seed, 50));
      report.checks.push_back(verify_series_calculus(opt.seed));
    } else if (name == "goulden-rattan") {
      report.checks.push_back(verify_goulden_rattan(7));
    } else {
      throw CLI::ValidationError("unknown suite: " + name);
    }
  }
  std::cout << format_report(report);
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kerov character polynomials via factorization counting"};
  app.require_subcommand(1);

  ComputeOptions compute;
  CLI::App* cmd_compute =
      app.add_subcommand("compute", "compute a (generalized) Kerov polynomial");
  auto* k_opt = cmd_compute->add_option("--k", compute.k, "single cycle length");
  auto* cycles_opt = cmd_compute->add_option(
      "--cycles", compute.parts, "comma-separated cycle lengths")
      ->delimiter(',');
  cmd_compute->add_option("--format", compute.format, "text | latex | json")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  cmd_compute->add_option("--threads", compute.threads, "enumeration threads")
      ->check(CLI::PositiveNumber);
  k_opt->excludes(cycles_opt);

  VerifyOptions verify;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run the cross-verification suites");
  cmd_verify->add_option("--max-boxes", verify.max_boxes,
                         "largest diagram size for oracle checks");
  cmd_verify->add_option("--max-k", verify.max_k, "largest cycle length");
  cmd_verify->add_option("--seed", verify.seed, "seed for randomized checks");
  cmd_verify
      ->add_option("--suites", verify.suites,
                   "oracle-identity, dual-route, condition-equivalence, "
                   "lemmas, divisibility, homogeneity, goulden-rattan")
      ->delimiter(',');

  std::string conv_from, conv_to, conv_input, conv_output;
  CLI::App* cmd_convert =
      app.add_subcommand("convert", "convert a series JSON file between roles");
  cmd_convert->add_option("--from", conv_from, "input role")->required();
  cmd_convert->add_option("--to", conv_to, "output role")->required();
  cmd_convert->add_option("--input", conv_input, "input file or -")->required();
  cmd_convert->add_option("--output", conv_output, "output file (default stdout)");

  std::string diag_input, diag_to = "s-functionals", diag_output;
  int diag_order = 8;
  CLI::App* cmd_diagram = app.add_subcommand(
      "diagram", "functionals of a diagram given as JSON (p/q or partition)");
  cmd_diagram->add_option("--input", diag_input, "input file or -")->required();
  cmd_diagram->add_option("--to", diag_to,
                          "s-functionals | moments | free-cumulants");
  cmd_diagram->add_option("--order", diag_order, "truncation order")
      ->check(CLI::PositiveNumber);
  cmd_diagram->add_option("--output", diag_output, "output file (default stdout)");

  std::vector<int> stanley_parts;
  int stanley_m = 1;
  bool stanley_transitive = false;
  CLI::App* cmd_stanley =
      app.add_subcommand("stanley", "dump a Stanley character polynomial");
  cmd_stanley
      ->add_option("--cycles", stanley_parts, "comma-separated cycle lengths")
      ->required()
      ->delimiter(',');
  cmd_stanley->add_option("--m", stanley_m, "number of rectangle variables")
      ->check(CLI::PositiveNumber);
  cmd_stanley->add_flag("--transitive-only", stanley_transitive,
                        "restrict to transitive factorizations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_compute->parsed()) {
      if (compute.parts.empty() && compute.k < 1)
        throw CLI::ValidationError("compute needs --k or --cycles");
      return run_compute(compute);
    }
    if (cmd_verify->parsed()) return run_verify(verify);
    if (cmd_convert->parsed()) {
      kerov::TruncatedSeries in = kerov::series_from_json(read_file(conv_input));
      if (in.role() != kerov::series_role_from_string(conv_from))
        throw std::invalid_argument("input file role is " +
                                    kerov::to_string(in.role()) +
                                    ", not " + conv_from);
      kerov::TruncatedSeries out =
          convert_series(in, kerov::series_role_from_string(conv_to));
      write_output(conv_output, kerov::series_to_json(out));
      return 0;
    }
    if (cmd_diagram->parsed()) {
      kerov::MultiRectangular d = kerov::diagram_from_json(read_file(diag_input));
      kerov::SeriesRole to = kerov::series_role_from_string(diag_to);
      kerov::TruncatedSeries s = kerov::s_functionals(d, std::max(diag_order, 2));
      kerov::TruncatedSeries out =
          to == kerov::SeriesRole::s_functionals ? s : convert_series(s, to);
      write_output(diag_output, kerov::series_to_json(out));
      return 0;
    }
    if (cmd_stanley->parsed()) {
      kerov::StanleyPolynomial sp =
          kerov::stanley_character(stanley_parts, stanley_m, stanley_transitive);
      std::cout << kerov::stanley_to_json(sp);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
