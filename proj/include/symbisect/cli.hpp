#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symbisect/body_io.hpp"
#include "symbisect/error.hpp"
#include "symbisect/generators.hpp"
#include "symbisect/report.hpp"

namespace symbisect::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInconsistency = 3;

inline int exit_code(const Error& e) {
  return e.kind() == ErrorKind::Inconsistency ? kExitInconsistency : kExitValidation;
}

/// Parses "k=v,k=v" into generator parameters.
inline Params parse_params(const std::string& text) {
  Params out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    start = comma + 1;
    if (item.empty()) {
      if (comma == text.size()) break;
      continue;
    }
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::InvalidParams, "bad parameter '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    double v = 0.0;
    auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc() || p != val.data() + val.size()) {
      throw Error(ErrorKind::InvalidParams, "parameter '" + key + "' is not a number: '" + val + "'");
    }
    if (out.count(key)) throw Error(ErrorKind::InvalidParams, "parameter '" + key + "' given twice");
    out[key] = v;
  }
  return out;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ValidationError, "cannot write '" + path + "'");
  f << text;
  if (!f) throw Error(ErrorKind::ValidationError, "write failed for '" + path + "'");
}

struct Options {
  std::string body_path;
  std::string gen;
  std::string params;
  std::optional<int> n;
  bool minimize = false, certify = false, necessary = false, standard = false, quiet = false;
  std::optional<double> theta;
  int steps = kDefaultSweepSteps;
  double tol = 1.0;
  std::string json_path, svg_path, out_path;
};

inline ConvexBody load_input(const Options& o) {
  if (o.body_path.empty() == o.gen.empty()) {
    throw Error(ErrorKind::InvalidParams, "exactly one of --body or --gen is required");
  }
  if (!(o.tol > 0.0) || !std::isfinite(o.tol)) throw Error(ErrorKind::InvalidParams, "--tol must be positive");
  if (!o.body_path.empty()) {
    if (!o.params.empty() || o.n) throw Error(ErrorKind::InvalidParams, "--params/--n only apply to --gen");
    return load_body(o.body_path, o.tol);
  }
  return with_tolerance_scale(gen::generate(o.gen, parse_params(o.params), o.n), o.tol);
}

inline void print_summary(std::ostream& out, const AnalysisReport& r) {
  out << "body " << r.body_name << ": " << r.vertex_count << " vertices, D=" << format_number(r.diameter)
      << ", inradius=" << format_number(r.inradius) << "\n";
  if (r.sweep) {
    out << "sweep: best_theta=" << format_number(r.sweep->best_theta)
        << " best_value=" << format_number(r.sweep->best_value) << " (" << r.sweep->local_minima.size()
        << " local minima)\n";
  }
  if (r.necessary) {
    const auto& n = r.necessary->second;
    out << "necessary: " << (n.holds ? "holds" : "fails") << " d1=" << format_number(n.d1)
        << " d2=" << format_number(n.d2) << "\n";
  }
  if (r.certificate) {
    const auto& [chord, c] = *r.certificate;
    out << "certificate at theta=" << format_number(chord.theta) << ": " << to_string(c.verdict);
    if (!c.diagnostic.empty()) out << " (" << c.diagnostic << ")";
    out << "\n";
  }
  if (r.standard) {
    const auto& s = *r.standard;
    out << "standard: " << s.chords.size() << " chords, " << s.value_classes << " value classes, unique="
        << (s.unique ? "true" : "false") << "\n";
    for (const auto& c : s.chords) {
      out << "  theta=" << format_number(c.chord.theta) << " d_M=" << format_number(c.chord.value)
          << " length=" << format_number(c.chord_length) << " necessary=" << (c.necessary ? "yes" : "no")
          << " rule=" << (c.rule ? "yes" : "no") << "\n";
    }
  }
}

/// Entry point of the `symbisect` tool. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Symmetric bisection analysis of centrally symmetric convex bodies", "symbisect"};
  app.require_subcommand(1);
  Options o;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze a body and write a report");
  auto* body_opt = analyze_cmd->add_option("--body", o.body_path, "Body file (JSON)");
  auto* gen_opt = analyze_cmd->add_option("--gen", o.gen, "Builtin generator name");
  body_opt->excludes(gen_opt);
  analyze_cmd->add_option("--params", o.params, "Generator parameters k=v,...");
  analyze_cmd->add_option("--n", o.n, "Boundary samples for smooth generators");
  analyze_cmd->add_flag("--minimize", o.minimize, "Sweep center chords for the minimum d_M");
  analyze_cmd->add_flag("--certify", o.certify, "Run the sufficient-condition certificate");
  analyze_cmd->add_flag("--necessary", o.necessary, "Check the necessary condition (needs --theta)");
  analyze_cmd->add_flag("--standard", o.standard, "Enumerate standard bisections");
  analyze_cmd->add_option("--theta", o.theta, "Chord angle in radians");
  analyze_cmd->add_option("--steps", o.steps, "Sweep grid size")->capture_default_str();
  analyze_cmd->add_option("--tol", o.tol, "Scale factor for all tolerances")->capture_default_str();
  analyze_cmd->add_option("--json", o.json_path, "Write the JSON report here");
  analyze_cmd->add_option("--svg", o.svg_path, "Write an SVG figure here");
  analyze_cmd->add_flag("--quiet", o.quiet, "No summary on stdout");

  CLI::App* gen_cmd = app.add_subcommand("generate", "Write a builtin body to a body file");
  gen_cmd->add_option("--gen", o.gen, "Builtin generator name")->required();
  gen_cmd->add_option("--params", o.params, "Generator parameters k=v,...");
  gen_cmd->add_option("--n", o.n, "Boundary samples for smooth generators");
  gen_cmd->add_option("--out", o.out_path, "Output path (stdout if omitted)");

  CLI::App* list_cmd = app.add_subcommand("generators", "List builtin generators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& g : gen::generators()) {
        out << g.name << "(";
        for (std::size_t i = 0; i < g.params.size(); ++i) out << (i ? "," : "") << g.params[i];
        out << ")" << (g.sampled ? " [--n]" : "") << "\n";
      }
      return kExitOk;
    }
    if (gen_cmd->parsed()) {
      const ConvexBody body = gen::generate(o.gen, parse_params(o.params), o.n);
      const std::string text = body_to_json(body).dump(2) + "\n";
      if (o.out_path.empty()) {
        out << text;
      } else {
        write_file(o.out_path, text);
      }
      return kExitOk;
    }

    const ConvexBody body = load_input(o);
    AnalysisRequest req;
    req.minimize = o.minimize;
    req.certify = o.certify;
    req.necessary = o.necessary;
    req.standard = o.standard;
    req.theta = o.theta;
    req.steps = o.steps;
    if (o.theta && !o.certify && !o.necessary) {
      throw Error(ErrorKind::InvalidParams, "--theta needs --certify or --necessary");
    }
    const AnalysisReport rep = analyze(body, req);
    if (!o.json_path.empty()) write_file(o.json_path, report_to_json(rep).dump(2) + "\n");
    if (!o.svg_path.empty()) write_file(o.svg_path, render_svg(body, rep));
    if (!o.quiet) print_summary(out, rep);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  }
}

}  // namespace symbisect::cli
