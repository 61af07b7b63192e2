#pragma once

// Analysis pipeline behind the CLI: runs the requested operations on one body
// and serializes the outcome. Report field order is fixed:
//   format, body, operations, sweep, necessary, certificate, standard,
//   tolerances, version
// Floats are written in shortest round-trip form.

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symbisect/bisection.hpp"
#include "symbisect/body.hpp"
#include "symbisect/certify.hpp"
#include "symbisect/error.hpp"
#include "symbisect/generators.hpp"
#include "symbisect/optimize.hpp"

namespace symbisect {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportFormat = "symbisect-report/1";

struct AnalysisRequest {
  bool minimize = false;
  bool certify = false;
  bool necessary = false;
  bool standard = false;
  std::optional<double> theta;
  int steps = kDefaultSweepSteps;
  double refine_tol = kDefaultRefineTol;
};

struct ChordRecord {
  double theta = 0.0;
  Point v1, v2;
  double value = 0.0;
};

struct StandardChordRecord {
  ChordRecord chord;
  double chord_length = 0.0;
  bool necessary = false;
  bool rule = false;
};

struct StandardSummary {
  double inradius = 0.0;
  bool unique = false;
  std::size_t touch_count = 0;
  std::vector<StandardChordRecord> chords;
  std::size_t value_classes = 0;
};

struct AnalysisReport {
  std::string body_name;
  std::size_t vertex_count = 0;
  std::optional<int> discretization;
  Point center;
  double diameter = 0.0;
  double inradius = 0.0;
  double area = 0.0;
  std::vector<std::string> operations;
  std::optional<SweepResult> sweep;
  std::optional<ChordRecord> sweep_chord;
  std::optional<std::pair<ChordRecord, NecessaryResult>> necessary;
  std::optional<std::pair<ChordRecord, Certificate>> certificate;
  std::optional<StandardSummary> standard;
  Tolerances tolerances;
  double tolerance_scale = 1.0;
};

namespace detail {

// Both d_M routes must agree on a center chord; a mismatch is a bug.
inline void require_agreement(double eq1, double eq2, double diameter, double theta) {
  if (std::fabs(eq1 - eq2) > 1e-9 * diameter) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "d_M routes disagree at theta=" << theta << ": " << eq1 << " vs " << eq2;
    throw Error(ErrorKind::Inconsistency, msg.str());
  }
}

inline ChordRecord checked_chord(const ChordBisection& b) {
  const double eq2 = dM_chord_eq2(b);
  require_agreement(dM_chord_eq1(b), eq2, b.body().diameter(), b.theta());
  return {b.theta(), b.v1(), b.v2(), eq2};
}

}  // namespace detail

inline AnalysisReport analyze(const ConvexBody& body, const AnalysisRequest& req) {
  if (req.necessary && !req.theta) {
    throw Error(ErrorKind::InvalidParams, "the necessary-condition check needs a chord angle (--theta)");
  }
  AnalysisReport rep;
  rep.body_name = body.name();
  rep.vertex_count = body.size();
  rep.discretization = body.discretization();
  rep.center = body.center();
  rep.diameter = body.diameter();
  rep.inradius = inradius(body).radius;
  rep.area = body.area();
  rep.tolerances = body.tolerances();
  rep.tolerance_scale = body.tolerance_scale();

  const bool need_sweep = req.minimize || (req.certify && !req.theta);
  if (need_sweep) {
    rep.operations.push_back("minimize");
    rep.sweep = sweep_minimize(body, req.steps, req.refine_tol);
    rep.sweep_chord = detail::checked_chord(chord_at_angle(body, rep.sweep->best_theta));
  }
  if (req.necessary) {
    rep.operations.push_back("necessary");
    const ChordBisection b = chord_at_angle(body, *req.theta);
    rep.necessary.emplace(detail::checked_chord(b), necessary_condition(b));
  }
  if (req.certify) {
    rep.operations.push_back("certify");
    const double theta = req.theta ? *req.theta : rep.sweep->best_theta;
    const ChordBisection b = chord_at_angle(body, theta);
    rep.certificate.emplace(detail::checked_chord(b), certify_theorem(b));
  }
  if (req.standard) {
    rep.operations.push_back("standard");
    const StandardBisectionSet set = standard_bisections(body);
    StandardSummary s;
    s.inradius = set.inradius;
    s.unique = standard_uniqueness(body);
    s.touch_count = inradius(body).touch_points.size();
    s.value_classes = set.value_classes(body.tolerances().eps_tie);
    for (const ChordBisection& c : set.chords) {
      StandardChordRecord r;
      r.chord = detail::checked_chord(c);
      r.chord_length = c.chord_length();
      r.necessary = necessary_condition(c).holds;
      r.rule = standard_chord_rule(c, set);
      s.chords.push_back(r);
    }
    rep.standard = std::move(s);
  }
  return rep;
}

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson point_json(Point p) { return ojson::array({p.x, p.y}); }

inline ojson chord_json(const ChordRecord& c) {
  ojson j;
  j["theta"] = c.theta;
  j["v1"] = point_json(c.v1);
  j["v2"] = point_json(c.v2);
  j["value"] = c.value;
  return j;
}

template <typename T>
ojson opt_json(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

inline ojson opt_point(const std::optional<Point>& p) { return p ? point_json(*p) : ojson(nullptr); }

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const AnalysisReport& rep) {
  using detail::ojson;
  ojson j;
  j["format"] = kReportFormat;

  ojson body;
  body["name"] = rep.body_name;
  body["vertex_count"] = rep.vertex_count;
  body["discretization"] = detail::opt_json(rep.discretization);
  body["center"] = detail::point_json(rep.center);
  body["diameter"] = rep.diameter;
  body["inradius"] = rep.inradius;
  body["area"] = rep.area;
  j["body"] = std::move(body);
  j["operations"] = rep.operations;

  if (rep.sweep) {
    const SweepResult& s = *rep.sweep;
    ojson sw;
    sw["steps"] = s.steps;
    sw["refinement_tolerance"] = s.refinement_tolerance;
    sw["best_theta"] = s.best_theta;
    sw["best_value"] = s.best_value;
    sw["chord"] = detail::chord_json(*rep.sweep_chord);
    sw["evaluations"] = s.evaluations;
    ojson mins = ojson::array();
    for (const ThetaValue& m : s.local_minima) mins.push_back({{"theta", m.theta}, {"value", m.value}});
    sw["local_minima"] = std::move(mins);
    j["sweep"] = std::move(sw);
  } else {
    j["sweep"] = nullptr;
  }

  if (rep.necessary) {
    const auto& [chord, res] = *rep.necessary;
    ojson n;
    n["chord"] = detail::chord_json(chord);
    n["holds"] = res.holds;
    n["d1"] = res.d1;
    n["d2"] = res.d2;
    j["necessary"] = std::move(n);
  } else {
    j["necessary"] = nullptr;
  }

  if (rep.certificate) {
    const auto& [chord, cert] = *rep.certificate;
    ojson c;
    c["chord"] = detail::chord_json(chord);
    c["verdict"] = to_string(cert.verdict);
    c["phi1"] = detail::opt_point(cert.phi1);
    c["phi2"] = detail::opt_point(cert.phi2);
    c["radius1"] = detail::opt_json(cert.radius1);
    c["radius2"] = detail::opt_json(cert.radius2);
    auto violation = [](const LensViolation& v) {
      ojson w;
      w["edge"] = v.edge;
      w["t"] = v.t;
      w["point"] = detail::point_json(v.point);
      return w;
    };
    c["witness"] = cert.witness ? violation(*cert.witness) : ojson(nullptr);
    ojson all = ojson::array();
    for (const auto& v : cert.violations) all.push_back(violation(v));
    c["violations"] = std::move(all);
    c["tried_pairs"] = cert.tried_pairs;
    c["common_farthest"] = cert.common_farthest;
    c["diagnostic"] = cert.diagnostic;
    j["certificate"] = std::move(c);
  } else {
    j["certificate"] = nullptr;
  }

  if (rep.standard) {
    const StandardSummary& s = *rep.standard;
    ojson st;
    st["inradius"] = s.inradius;
    st["unique"] = s.unique;
    st["touch_count"] = s.touch_count;
    st["value_classes"] = s.value_classes;
    ojson chords = ojson::array();
    for (const auto& r : s.chords) {
      ojson c = detail::chord_json(r.chord);
      c["chord_length"] = r.chord_length;
      c["necessary"] = r.necessary;
      c["rule"] = r.rule;
      chords.push_back(std::move(c));
    }
    st["chords"] = std::move(chords);
    j["standard"] = std::move(st);
  } else {
    j["standard"] = nullptr;
  }

  ojson tol;
  tol["scale"] = rep.tolerance_scale;
  tol["eps_geom"] = rep.tolerances.eps_geom;
  tol["eps_tie"] = rep.tolerances.eps_tie;
  tol["eps_cert"] = rep.tolerances.eps_cert;
  tol["eps_sym"] = rep.tolerances.eps_sym;
  j["tolerances"] = std::move(tol);
  j["version"] = kVersion;
  return j;
}

/// SVG figure: body outline, the analysed chord, farthest-distance segments and
/// (with a certificate) the two disks. Lengths scale with the body diameter.
inline std::string render_svg(const ConvexBody& body, const AnalysisReport& rep) {
  const double D = body.diameter();
  const double pad = 0.05 * D;
  const double stroke = 0.004 * D;
  double minx = body.vertex(0).x, maxx = minx, miny = body.vertex(0).y, maxy = miny;
  for (const Point& p : body.vertices()) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  auto num = [](double v) { return format_number(v); };
  // SVG y grows downward; flip it.
  auto X = [&](Point p) { return num(p.x); };
  auto Y = [&](Point p) { return num(-p.y); };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(minx - pad) << ' ' << num(-maxy - pad) << ' '
    << num(maxx - minx + 2 * pad) << ' ' << num(maxy - miny + 2 * pad) << "\">\n";
  s << "  <title>" << rep.body_name << "</title>\n";
  s << "  <polygon class=\"body\" fill=\"#eef3f8\" stroke=\"#1b2a3a\" stroke-width=\"" << num(stroke)
    << "\" points=\"";
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i) s << ' ';
    s << X(body.vertex(i)) << ',' << Y(body.vertex(i));
  }
  s << "\"/>\n";

  auto line = [&](Point a, Point b, const char* cls, const char* color, double w, const char* dash) {
    s << "  <line class=\"" << cls << "\" x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b) << "\" y2=\""
      << Y(b) << "\" stroke=\"" << color << "\" stroke-width=\"" << num(w) << "\"";
    if (dash) s << " stroke-dasharray=\"" << dash << "\"";
    s << "/>\n";
  };
  auto dot_at = [&](Point p, const char* cls, const char* color) {
    s << "  <circle class=\"" << cls << "\" cx=\"" << X(p) << "\" cy=\"" << Y(p) << "\" r=\"" << num(2.5 * stroke)
      << "\" fill=\"" << color << "\"/>\n";
  };

  if (rep.standard) {
    for (const auto& c : rep.standard->chords) line(c.chord.v1, c.chord.v2, "standard", "#8a8a8a", 0.5 * stroke, nullptr);
  }

  std::optional<ChordRecord> chord;
  if (rep.certificate) {
    chord = rep.certificate->first;
  } else if (rep.necessary) {
    chord = rep.necessary->first;
  } else if (rep.sweep_chord) {
    chord = rep.sweep_chord;
  }
  if (chord) {
    line(chord->v1, chord->v2, "chord", "#c0392b", 1.5 * stroke, nullptr);
    const ChordBisection b = chord_at_angle(body, chord->theta);
    const double eps = body.tolerances().eps_tie;
    Point phi1 = farthest_from(b.v1(), b.c1().vertices, eps).witnesses.front();
    Point phi2 = farthest_from(b.v2(), b.c1().vertices, eps).witnesses.front();
    if (rep.certificate && rep.certificate->second.phi1) {
      phi1 = *rep.certificate->second.phi1;
      phi2 = *rep.certificate->second.phi2;
    }
    line(b.v1(), phi1, "farthest", "#2e86c1", stroke, nullptr);
    line(b.v2(), phi2, "farthest", "#2e86c1", stroke, nullptr);
    dot_at(b.v1(), "endpoint", "#c0392b");
    dot_at(b.v2(), "endpoint", "#c0392b");
    if (rep.certificate && rep.certificate->second.phi1) {
      const Certificate& cert = rep.certificate->second;
      for (auto [p, r] : {std::pair{*cert.phi1, *cert.radius1}, std::pair{*cert.phi2, *cert.radius2}}) {
        s << "  <circle class=\"disk\" cx=\"" << X(p) << "\" cy=\"" << Y(p) << "\" r=\"" << num(r)
          << "\" fill=\"none\" stroke=\"#27ae60\" stroke-width=\"" << num(stroke) << "\" stroke-dasharray=\""
          << num(4 * stroke) << ',' << num(2 * stroke) << "\"/>\n";
      }
      for (const auto& v : cert.violations) dot_at(v.point, "violation", "#e67e22");
    }
  }
  dot_at(body.center(), "center", "#1b2a3a");
  s << "</svg>\n";
  return s.str();
}

}  // namespace symbisect
