#pragma once

// Command layer of the spinpoly executable. run_cli never calls exit() so
// tests can drive it with captured streams.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spinpoly/spinpoly.hpp"

namespace spinpoly::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2 };

struct PlotRequest {
  HalfInteger spin{0};
  std::vector<int> k_list;
  double theta_min = 0;
  double theta_max = 4 * std::numbers::pi;
  int samples = 1024;
};

inline void validate(const PlotRequest& req) {
  if (req.samples < 2) throw InputError("samples must be at least 2");
  if (!std::isfinite(req.theta_min) || !std::isfinite(req.theta_max) || !(req.theta_min < req.theta_max))
    throw InputError("theta range must satisfy theta_min < theta_max");
  if (req.k_list.empty()) throw InputError("at least one coefficient index is required");
  for (int k : req.k_list)
    if (k < 0 || k > req.spin.two_j()) throw InputError("coefficient index " + std::to_string(k) + " outside [0, 2j]");
}

inline void write_plotdata(const PlotRequest& req, std::ostream& out) {
  validate(req);
  std::vector<CoefficientEvaluator> evaluators;
  for (int k : req.k_list) evaluators.emplace_back(coefficient(req.spin, k));
  const double step = (req.theta_max - req.theta_min) / (req.samples - 1);

  auto rows = parallel_map(static_cast<std::size_t>(req.samples), [&](std::size_t i) {
    const double theta = i + 1 == static_cast<std::size_t>(req.samples) ? req.theta_max : req.theta_min + step * static_cast<double>(i);
    std::string line = format_double(theta);
    for (const auto& eval : evaluators) line += "," + format_double(eval(theta));
    return line;
  });
  out << "theta";
  for (int k : req.k_list) out << ",A_" << k;
  out << '\n';
  for (const auto& line : rows) out << line << '\n';
}

inline Axis parse_axis(const std::string& text) {
  std::vector<double> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw InputError("axis component '" + item + "' is not a number");
    parts.push_back(v);
  }
  if (parts.size() != 3) throw InputError("axis must have three comma-separated components");
  return Axis(parts[0], parts[1], parts[2]);
}

/// "2,8,24" -> {2, 8, 24}; the empty string gives an empty list.
inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size() || v < 0) throw InputError("expected a non-negative integer, got '" + item + "'");
    out.push_back(v);
  }
  return out;
}

inline Json complex_matrix_json(const ComplexMatrix& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json re_row = Json::array(), im_row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

inline void write_rotation(const RotationResult& rot, const std::string& method, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << "row,col,re,im\n";
    for (Eigen::Index r = 0; r < rot.matrix.rows(); ++r)
      for (Eigen::Index c = 0; c < rot.matrix.cols(); ++c)
        out << r << ',' << c << ',' << format_double(rot.matrix(r, c).real()) << ','
            << format_double(rot.matrix(r, c).imag()) << '\n';
    return;
  }
  Json doc{{"two_j", rot.spin.two_j()},
           {"theta", rot.theta},
           {"axis", Json::array({rot.axis.x(), rot.axis.y(), rot.axis.z()})},
           {"method", method},
           {"matrix", complex_matrix_json(rot.matrix)}};
  write_json(doc, out);
}

inline void write_coefficients(HalfInteger spin, std::optional<int> k, const std::string& format, std::ostream& out) {
  std::vector<CoefficientPolynomial> polys;
  if (k) {
    if (*k < 0 || *k > spin.two_j()) throw InputError("k must lie in [0, 2j] = [0, " + std::to_string(spin.two_j()) + "]");
    polys.push_back(coefficient(spin, *k));
  } else {
    polys = all_coefficients(spin);
  }
  if (format == "csv") {
    out << "two_j,k,epsilon,power,num,den\n";
    for (const auto& p : polys)
      for (const auto& [m, c] : p.sine_coeffs)
        out << spin.two_j() << ',' << p.k << ',' << p.epsilon << ',' << m << ',' << numerator_string(c) << ','
            << denominator_string(c) << '\n';
    return;
  }
  if (k) {
    write_json(coefficient_to_json(polys.front()), out);
    return;
  }
  Json all = Json::array();
  for (const auto& p : polys) all.push_back(coefficient_to_json(p));
  write_json(all, out);
}

struct BenchMethod {
  std::string name;
  std::function<ComplexMatrix()> run;
};

inline Json run_bench(const std::vector<int>& two_j_list, int repetitions) {
  if (repetitions < 1) throw InputError("repetitions must be at least 1");
  Json report{{"repetitions", repetitions}, {"reference", "scaling_squaring"}, {"results", Json::array()}};
  for (int two_j : two_j_list) {
    const HalfInteger spin(two_j);
    std::mt19937_64 rng(9001 + static_cast<std::uint64_t>(two_j));
    const Axis axis = Axis::random(rng);
    const double theta = std::uniform_real_distribution<double>(-4 * std::numbers::pi, 4 * std::numbers::pi)(rng);
    const ComplexMatrix reference = rotation_scaling_squaring(spin, axis, theta).matrix;
    const std::vector<BenchMethod> methods{
        {"polynomial", [&] { return rotation_polynomial(spin, axis, theta).matrix; }},
        {"eigendecomposition", [&] { return rotation_reference(spin, axis, theta).matrix; }},
    };
    Json entry{{"two_j", two_j},
               {"theta", theta},
               {"axis", Json::array({axis.x(), axis.y(), axis.z()})},
               {"working_bits", polynomial_working_bits(spin, theta)},
               {"tolerance", 1e-8 * (two_j + 1)},
               {"methods", Json::array()}};
    bool within = true;
    for (const auto& method : methods) {
      std::vector<double> seconds;
      ComplexMatrix result;
      for (int rep = 0; rep < repetitions; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        result = method.run();
        seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      }
      std::sort(seconds.begin(), seconds.end());
      const std::size_t n = seconds.size();
      const double median = n % 2 ? seconds[n / 2] : 0.5 * (seconds[n / 2 - 1] + seconds[n / 2]);
      const double deviation = max_abs_difference(result, reference);
      within = within && deviation <= 1e-8 * (two_j + 1);
      entry["methods"].push_back(Json{{"name", method.name},
                                      {"median_seconds", median},
                                      {"max_deviation", deviation},
                                      {"unitarity_defect", unitarity_defect(result)}});
    }
    entry["within_tolerance"] = within;
    report["results"].push_back(std::move(entry));
  }
  return report;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial spin rotations, central factorial coefficients and Vandermonde duals", "spinpoly"};
  app.require_subcommand(1);

  int two_j = 0;
  std::optional<int> k;
  std::string format = "json";

  auto* coeffs = app.add_subcommand("coeffs", "Exact A_k coefficients as sine polynomials");
  coeffs->add_option("--two-j", two_j, "2j")->required()->check(CLI::NonNegativeNumber);
  coeffs->add_option("--k", k, "coefficient index (all when omitted)");
  coeffs->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  double theta = 0;
  std::string axis_text = "0,0,1";
  std::string method = "polynomial";
  auto* rotate = app.add_subcommand("rotate", "Rotation matrix exp(i theta n.J)");
  rotate->add_option("--two-j", two_j, "2j")->required()->check(CLI::NonNegativeNumber);
  rotate->add_option("--theta", theta, "angle in radians")->required();
  rotate->add_option("--axis", axis_text, "unit axis x,y,z");
  rotate->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  rotate->add_option("--method", method)->check(CLI::IsMember({"polynomial", "eigendecomposition", "scaling_squaring"}));

  std::string suite = "all";
  int max_two_j = 12;
  auto* verify = app.add_subcommand("verify", "Run identity verification suites");
  verify->add_option("--suite", suite, "cfn, routes, lemmaB, lemmaC, ode, duals, biortho, rotation or all");
  verify->add_option("--max-two-j", max_two_j)->check(CLI::NonNegativeNumber);

  PlotRequest plot;
  std::string output_path;
  auto* plotdata = app.add_subcommand("plotdata", "CSV samples of A_k(theta)");
  plotdata->add_option("--two-j", two_j, "2j")->required()->check(CLI::NonNegativeNumber);
  plotdata->add_option("--k", plot.k_list, "coefficient indices (default 0..min(5, 2j))")->delimiter(',');
  plotdata->add_option("--theta-min", plot.theta_min);
  plotdata->add_option("--theta-max", plot.theta_max);
  plotdata->add_option("--samples", plot.samples);
  plotdata->add_option("--output", output_path, "write to file instead of stdout");

  std::string bench_spins_text;
  int repetitions = 5;
  auto* bench = app.add_subcommand("bench", "Time and compare polynomial and eigendecomposition rotations");
  auto* bench_spins = bench->add_option("--two-j", bench_spins_text, "comma-separated 2j values (default 2,8,24,60; empty allowed)")
                          ->expected(0, 1);
  bench->add_option("--repetitions", repetitions);

  auto* duals = app.add_subcommand("duals", "Exact V, V^-1, T_n and G");
  duals->add_option("--two-j", two_j, "2j")->required()->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    thread_count();  // rejects a malformed SPINPOLY_THREADS up front
    if (*coeffs) {
      write_coefficients(HalfInteger(two_j), k, format, out);
    } else if (*rotate) {
      const HalfInteger spin(two_j);
      const Axis axis = parse_axis(axis_text);
      if (!std::isfinite(theta)) throw InputError("theta must be finite");
      const RotationResult rot = method == "polynomial"           ? rotation_polynomial(spin, axis, theta)
                                 : method == "eigendecomposition" ? rotation_reference(spin, axis, theta)
                                                                  : rotation_scaling_squaring(spin, axis, theta);
      write_rotation(rot, method, format, out);
    } else if (*verify) {
      const VerifyReport report = run_verify(suite, max_two_j);
      write_json(verify_report_to_json(report), out);
      return report.passed() ? kPass : kFailure;
    } else if (*plotdata) {
      plot.spin = HalfInteger(two_j);
      if (plot.k_list.empty())
        for (int i = 0; i <= std::min(5, two_j); ++i) plot.k_list.push_back(i);
      validate(plot);
      if (output_path.empty()) {
        write_plotdata(plot, out);
      } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) throw InputError("cannot open " + output_path);
        write_plotdata(plot, file);
      }
    } else if (*bench) {
      const std::vector<int> bench_list = bench_spins->count() == 0 ? std::vector<int>{2, 8, 24, 60} : parse_int_list(bench_spins_text);
      write_json(run_bench(bench_list, repetitions), out);
    } else if (*duals) {
      write_json(vandermonde_to_json(build_vandermonde(HalfInteger(two_j))), out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kFailure;
  }
  return kPass;
}

}  // namespace spinpoly::cli
