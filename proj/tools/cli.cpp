#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "limfree/decomposition.hpp"
#include "limfree/dual.hpp"
#include "limfree/error.hpp"
#include "limfree/parser.hpp"
#include "limfree/rules.hpp"
#include "limfree/tangency.hpp"
#include "plot.hpp"

namespace limfree::cli {

using nlohmann::json;

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ExprPtr parse_expr(const std::string& text, const std::string& what) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(what + ": parse error at position " + std::to_string(e.position()) + ": " + e.what());
  }
}

Polynomial parse_polynomial(const std::string& text, const std::string& what) {
  auto e = parse_expr(text, what);
  try {
    return lower_poly(*e);
  } catch (const LoweringError& err) {
    throw InputError(what + ": at position " + std::to_string(err.position()) + ": " + err.what());
  }
}

Rational parse_number(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

json multiplicity_json(const Multiplicity& m) {
  if (m.is_infinite()) return "INFINITE";
  return m.value();
}

std::string line_text(const Rational& k, const Rational& b) {
  return "y = " + LinearFunction{k, b}.as_polynomial().to_string();
}

/// Runs `body`, turning exceptions into an error envelope with the matching exit code.
Envelope guarded(std::string command, json inputs, const std::function<void(Envelope&)>& body) {
  Envelope env;
  env.command = std::move(command);
  env.inputs = std::move(inputs);
  try {
    body(env);
  } catch (const InvariantViolation& e) {
    env.ok = false;
    env.error = std::string("internal invariant violated: ") + e.what();
    env.exit_code = kInvariantViolation;
  } catch (const std::exception& e) {
    env.ok = false;
    env.error = e.what();
    env.exit_code = kInputError;
  }
  if (!env.ok) {
    env.result = nullptr;
    env.text.clear();
  }
  return env;
}

}  // namespace

json Envelope::to_json() const {
  json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result;
  j["status"] = ok ? "ok" : "error";
  j["error"] = ok ? json(nullptr) : json(error);
  return j;
}

Envelope cmd_tangent(const std::string& expr, const std::string& p_text) {
  return guarded("tangent", {{"expr", expr}, {"p", p_text}}, [&](Envelope& env) {
    const Polynomial f = parse_polynomial(expr, "expr");
    const Rational p = parse_number(p_text, "p");
    env.inputs = {{"expr", render(f)}, {"p", p.to_string()}};

    const TangentLine t = tangent_at(f, p);
    const std::string factor = Polynomial::linear_factor(p).to_string();
    const std::string certificate = render(f) + " - (" + t.line().as_polynomial().to_string() + ") = (" + factor +
                                    ")^2 * (" + render(t.cofactor) + ")";
    env.result = {{"k", t.k.to_string()},
                  {"b", t.b.to_string()},
                  {"Q", render(t.cofactor)},
                  {"equation", line_text(t.k, t.b)},
                  {"certificate", certificate},
                  {"verified", t.certifies(f)}};

    std::ostringstream os;
    os << "f(x)        = " << render(f) << "\n"
       << "p           = " << p << "\n"
       << "tangent     : " << line_text(t.k, t.b) << "\n"
       << "k           = " << t.k << "\n"
       << "b           = " << t.b << "\n"
       << "Q(x)        = " << render(t.cofactor) << "\n"
       << "certificate : " << certificate << "  [verified]\n";
    env.text = os.str();
  });
}

Envelope cmd_derive(const std::string& expr) {
  return guarded("derive", {{"expr", expr}}, [&](Envelope& env) {
    auto e = parse_expr(expr, "expr");
    std::string canonical;
    std::string derivative;
    std::string kind;
    try {
      const Polynomial f = lower_poly(*e);
      canonical = render(f);
      derivative = render(derive_poly(f));
      kind = "polynomial";
    } catch (const LoweringError&) {
      RationalFunction r;
      try {
        r = lower_ratfun(*e);
      } catch (const LoweringError& err) {
        throw InputError("expr: at position " + std::to_string(err.position()) + ": " + err.what());
      }
      canonical = render(r);
      derivative = render(derive_ratfun(r));
      kind = "rational_function";
    }
    env.inputs = {{"expr", canonical}};
    env.result = {{"derivative", derivative}, {"kind", kind}};
    env.text = "f(x)  = " + canonical + "\nf'(x) = " + derivative + "\n";
  });
}

namespace {

struct LineQuery {
  Polynomial f;
  LinearFunction line;
  Rational p;
  Multiplicity m = Multiplicity::finite(0);
};

LineQuery line_query(Envelope& env, const std::string& expr, const std::string& k, const std::string& b,
                     const std::string& p) {
  LineQuery q{parse_polynomial(expr, "expr"), {parse_number(k, "k"), parse_number(b, "b")}, parse_number(p, "p")};
  env.inputs = {{"expr", render(q.f)}, {"k", q.line.k.to_string()}, {"b", q.line.b.to_string()}, {"p", q.p.to_string()}};
  q.m = intersection_multiplicity(q.f, q.line, q.p);
  return q;
}

}  // namespace

Envelope cmd_check(const std::string& expr, const std::string& k, const std::string& b, const std::string& p) {
  return guarded("check", {{"expr", expr}, {"k", k}, {"b", b}, {"p", p}}, [&](Envelope& env) {
    const LineQuery q = line_query(env, expr, k, b, p);
    const bool tangent = q.m.at_least(2);
    std::string verdict = tangent ? (q.m.is_infinite() ? "tangent (coincident)" : "tangent") : "not tangent";
    env.result = {{"line", line_text(q.line.k, q.line.b)},
                  {"multiplicity", multiplicity_json(q.m)},
                  {"tangent", tangent},
                  {"verdict", verdict}};
    env.text = "f(x)         = " + render(q.f) + "\nline         : " + line_text(q.line.k, q.line.b) +
               "\np            = " + q.p.to_string() + "\nmultiplicity = " + q.m.to_string() +
               "\nverdict      : " + verdict + "\n";
  });
}

Envelope cmd_mult(const std::string& expr, const std::string& k, const std::string& b, const std::string& p) {
  return guarded("mult", {{"expr", expr}, {"k", k}, {"b", b}, {"p", p}}, [&](Envelope& env) {
    const LineQuery q = line_query(env, expr, k, b, p);
    env.result = {{"multiplicity", multiplicity_json(q.m)}};
    env.text = q.m.to_string() + "\n";
  });
}

Envelope cmd_expand(const std::string& expr, const std::string& p_text) {
  return guarded("expand", {{"expr", expr}, {"p", p_text}}, [&](Envelope& env) {
    const Polynomial f = parse_polynomial(expr, "expr");
    const Rational p = parse_number(p_text, "p");
    env.inputs = {{"expr", render(f)}, {"p", p.to_string()}};
    const LocalExpansion e = taylor_shift(f, p);
    json coeffs = json::array();
    for (const auto& c : e.coeffs) coeffs.push_back(c.to_string());
    const std::string expansion = e.in_shift_variable().to_string("t");
    env.result = {{"coefficients", coeffs}, {"expansion", expansion}};
    env.text = "f(" + p.to_string() + " + t) = " + expansion + "\n";
  });
}

Envelope cmd_decompose(const std::string& expr, const std::string& x0_text) {
  return guarded("decompose", {{"expr", expr}, {"x0", x0_text}}, [&](Envelope& env) {
    const Polynomial f = parse_polynomial(expr, "expr");
    const Rational x0 = parse_number(x0_text, "x0");
    env.inputs = {{"expr", render(f)}, {"x0", x0.to_string()}};
    const Decomposition d = decompose(f, x0);
    const Multiplicity v = remainder_valuation(d);
    const std::string remainder = d.remainder.to_string("t");
    env.result = {{"value", d.value.to_string()},
                  {"slope", d.slope.to_string()},
                  {"remainder", remainder},
                  {"valuation", multiplicity_json(v)}};
    std::ostringstream os;
    os << "f(x0 + t) = f(x0) + f'(x0)*t + R(t)\n"
       << "f(x0)     = " << d.value << "\n"
       << "f'(x0)    = " << d.slope << "\n"
       << "R(t)      = " << remainder << "\n"
       << "valuation = " << v.to_string() << "\n";
    env.text = os.str();
  });
}

Envelope cmd_table(const std::string& expr, const std::string& x0_text, int steps) {
  return guarded("table", {{"expr", expr}, {"x0", x0_text}, {"steps", steps}}, [&](Envelope& env) {
    const Polynomial f = parse_polynomial(expr, "expr");
    const Rational x0 = parse_number(x0_text, "x0");
    if (steps < 1) throw InputError("steps: must be at least 1");
    env.inputs = {{"expr", render(f)}, {"x0", x0.to_string()}, {"steps", steps}};
    const Rational slope = derive_poly(f)(x0);
    const auto rows = quotient_table(f, x0, static_cast<std::size_t>(steps));
    json out = json::array();
    std::ostringstream os;
    os << "f'(" << x0 << ") = " << slope << "\n";
    os << "h\tdy\tdy/h\tgap\n";
    for (const auto& r : rows) {
      out.push_back({{"h", r.h.to_string()},
                     {"h_decimal", r.h.to_decimal()},
                     {"dy", r.dy.to_string()},
                     {"quotient", r.quotient.to_string()},
                     {"quotient_decimal", r.quotient.to_decimal()},
                     {"gap", r.gap.to_string()},
                     {"gap_decimal", r.gap.to_decimal()}});
      os << r.h << "\t" << r.dy << "\t" << r.quotient << " (" << r.quotient.to_decimal() << ")\t" << r.gap << " ("
         << r.gap.to_decimal() << ")\n";
    }
    env.result = {{"slope", slope.to_string()}, {"rows", out}};
    env.text = os.str();
  });
}

Envelope cmd_rules(const std::string& f_expr, const std::string& g_expr) {
  return guarded("rules", {{"f", f_expr}, {"g", g_expr}}, [&](Envelope& env) {
    const Polynomial f = parse_polynomial(f_expr, "f");
    const Polynomial g = parse_polynomial(g_expr, "g");
    env.inputs = {{"f", render(f)}, {"g", render(g)}};
    json result = json::object();
    std::ostringstream os;
    bool all_hold = true;
    auto add = [&](const RuleReport& r) {
      result[to_string(r.rule)] = {{"lhs", render(r.lhs)}, {"rhs", render(r.rhs)}, {"holds", r.holds}};
      os << to_string(r.rule) << ": " << render(r.lhs) << " == " << render(r.rhs) << "  ["
         << (r.holds ? "holds" : "FAILS") << "]\n";
      all_hold = all_hold && r.holds;
    };
    add(verify_sum(f, g));
    add(verify_product(f, g));
    if (g.is_zero()) {
      result["quotient"] = {{"error", "g: quotient rule needs a nonzero denominator"}};
      os << "quotient: input error: g must be nonzero\n";
    } else {
      add(verify_quotient(f, g));
    }
    add(verify_chain(f, g));
    if (!all_hold) throw InvariantViolation("a differentiation rule failed to hold");
    env.result = result;
    env.text = os.str();
  });
}

Envelope cmd_dual(const std::string& fn, const std::string& a_text, const std::string& b_text) {
  return guarded("dual", {{"fn", fn}, {"a", a_text}, {"b", b_text}}, [&](Envelope& env) {
    const Rational a = parse_number(a_text, "a");
    const Rational b = parse_number(b_text, "b");
    if (auto elem = ElementaryFn::from_name(fn)) {
      env.inputs = {{"fn", elem->name()}, {"a", a.to_string()}, {"b", b.to_string()}};
      const Dual<double> r = evaluate(*elem, Dual<double>(a.to_double(), b.to_double()));
      env.result = {{"real", r.real}, {"eps", r.eps}};
      env.text = fn + "(" + a.to_string() + " + " + b.to_string() + "*eps) = " + json(r.real).dump() + " + " +
                 json(r.eps).dump() + "*eps\n";
      return;
    }
    const Polynomial f = parse_polynomial(fn, "fn");
    env.inputs = {{"fn", render(f)}, {"a", a.to_string()}, {"b", b.to_string()}};
    const Dual<Rational> r = evaluate(f, Dual<Rational>(a, b));
    env.result = {{"real", r.real.to_double()},
                  {"eps", r.eps.to_double()},
                  {"real_exact", r.real.to_string()},
                  {"eps_exact", r.eps.to_string()}};
    env.text = "f(" + a.to_string() + " + " + b.to_string() + "*eps) = " + r.real.to_string() + " + " +
               r.eps.to_string() + "*eps\n";
  });
}

namespace {

std::pair<Rational, Rational> parse_range(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("range: expected lo,hi");
  Rational lo = parse_number(text.substr(0, comma), "range");
  Rational hi = parse_number(text.substr(comma + 1), "range");
  if (!(lo < hi)) throw InputError("range: empty range, need lo < hi");
  return {lo, hi};
}

std::pair<int, int> parse_size(const std::string& text) {
  const auto sep = text.find('x');
  try {
    if (sep == std::string::npos) throw std::invalid_argument("missing 'x'");
    std::size_t used = 0;
    const int w = std::stoi(text.substr(0, sep), &used);
    if (used != sep) throw std::invalid_argument("width");
    const std::string hs = text.substr(sep + 1);
    const int h = std::stoi(hs, &used);
    if (used != hs.size()) throw std::invalid_argument("height");
    if (w < 100 || h < 100 || w > 20000 || h > 20000) throw std::invalid_argument("out of bounds");
    return {w, h};
  } catch (const std::exception&) {
    throw InputError("size: expected WxH with 100 <= W, H <= 20000");
  }
}

json point_json(const plot::Point& pt) { return json::array({pt.first.to_string(), pt.second.to_string()}); }

json segment_json(const plot::Segment& s) { return {{"from", point_json(s.from)}, {"to", point_json(s.to)}}; }

}  // namespace

Envelope cmd_plot(const std::string& expr, const std::string& p_text, const PlotOptions& options, std::string& svg) {
  json raw = {{"expr", expr}, {"p", p_text}, {"range", options.range}, {"size", options.size}};
  if (options.dx) raw["dx"] = *options.dx;
  return guarded("plot", raw, [&](Envelope& env) {
    plot::Spec spec;
    spec.f = parse_polynomial(expr, "expr");
    spec.p = parse_number(p_text, "p");
    std::tie(spec.lo, spec.hi) = parse_range(options.range);
    std::tie(spec.width, spec.height) = parse_size(options.size);
    if (options.dx) {
      spec.dx = parse_number(*options.dx, "dx");
      if (spec.dx->is_zero()) throw InputError("dx: must be nonzero");
    }
    env.inputs = {{"expr", render(spec.f)},
                  {"p", spec.p.to_string()},
                  {"range", json::array({spec.lo.to_string(), spec.hi.to_string()})},
                  {"size", std::to_string(spec.width) + "x" + std::to_string(spec.height)}};
    if (spec.dx) env.inputs["dx"] = spec.dx->to_string();

    const plot::Geometry g = plot::compute_geometry(spec);
    svg = plot::render_svg(spec, g);
    env.result = {{"point", point_json(g.point)},
                  {"samples", plot::kCurveSamples},
                  {"tangent",
                   {{"k", g.slope.to_string()}, {"b", g.intercept.to_string()}, {"segment", segment_json(g.tangent)}}}};
    std::ostringstream os;
    os << "tangent at A(" << g.point.first << ", " << g.point.second << "): " << line_text(g.slope, g.intercept)
       << "\n";
    if (g.secant) {
      const auto& s = *g.secant;
      env.result["secant"] = segment_json(s.secant);
      env.result["annotations"] = {{"dx", s.run.axis_length().to_string()},
                                   {"delta_y", s.increment.axis_length().to_string()},
                                   {"dy", s.differential.axis_length().to_string()}};
      os << "secant A -> B(" << s.secant.to.first << ", " << s.secant.to.second << ")\n"
         << "|dx| = " << s.run.axis_length() << ", |delta y| = " << s.increment.axis_length()
         << ", |dy| = " << s.differential.axis_length() << "\n";
    }
    env.text = os.str();
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tangents and derivatives of polynomials by the double-root criterion"};
  app.name("limfree");
  app.require_subcommand(1, 1);
  app.fallthrough();

  bool json_output = false;
  std::string output_path;
  app.add_flag("--json", json_output, "Emit a JSON envelope instead of text");
  app.add_option("--output", output_path, "Write the report (the SVG for plot) to this file");

  std::string expr, expr2, p, k, b;
  int steps = 6;
  PlotOptions plot_opts;
  std::string dx;

  auto* tangent = app.add_subcommand("tangent", "Tangent line at p with its divisibility certificate");
  tangent->add_option("expr", expr)->required();
  tangent->add_option("p", p)->required();

  auto* derive = app.add_subcommand("derive", "Derivative of a polynomial or rational function");
  derive->add_option("expr", expr)->required();

  auto* check = app.add_subcommand("check", "Is y = k*x + b tangent to f at p?");
  auto* mult = app.add_subcommand("mult", "Intersection multiplicity of f and y = k*x + b at p");
  for (auto* sub : {check, mult}) {
    sub->add_option("expr", expr)->required();
    sub->add_option("k", k)->required();
    sub->add_option("b", b)->required();
    sub->add_option("p", p)->required();
  }

  auto* expand = app.add_subcommand("expand", "Coefficients of f(p + t)");
  expand->add_option("expr", expr)->required();
  expand->add_option("p", p)->required();

  auto* decomp = app.add_subcommand("decompose", "f(x0 + t) = f(x0) + f'(x0) t + R(t)");
  decomp->add_option("expr", expr)->required();
  decomp->add_option("x0", p)->required();

  auto* table = app.add_subcommand("table", "Difference quotients for h = 10^-1 ... 10^-steps");
  table->add_option("expr", expr)->required();
  table->add_option("x0", p)->required();
  table->add_option("--steps", steps, "Number of rows")->capture_default_str();

  auto* rules = app.add_subcommand("rules", "Check the sum, product, quotient and chain rules on f and g");
  rules->add_option("f", expr)->required();
  rules->add_option("g", expr2)->required();

  auto* plot = app.add_subcommand("plot", "SVG of the curve, tangent and optional secant");
  plot->add_option("expr", expr)->required();
  plot->add_option("p", p)->required();
  plot->add_option("--range", plot_opts.range, "lo,hi")->capture_default_str();
  auto* dx_opt = plot->add_option("--dx", dx, "Increment for the secant and annotations");
  plot->add_option("--size", plot_opts.size, "WxH")->capture_default_str();

  auto* dual = app.add_subcommand("dual", "Evaluate fn at a + b*eps (fn: exp, log, sin, cos, tan or a polynomial)");
  dual->add_option("fn", expr)->required();
  dual->add_option("a", k)->required();
  dual->add_option("b", b)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Envelope env;
  std::string svg;
  if (tangent->parsed()) {
    env = cmd_tangent(expr, p);
  } else if (derive->parsed()) {
    env = cmd_derive(expr);
  } else if (check->parsed()) {
    env = cmd_check(expr, k, b, p);
  } else if (mult->parsed()) {
    env = cmd_mult(expr, k, b, p);
  } else if (expand->parsed()) {
    env = cmd_expand(expr, p);
  } else if (decomp->parsed()) {
    env = cmd_decompose(expr, p);
  } else if (table->parsed()) {
    env = cmd_table(expr, p, steps);
  } else if (rules->parsed()) {
    env = cmd_rules(expr, expr2);
  } else if (plot->parsed()) {
    if (dx_opt->count() > 0) plot_opts.dx = dx;
    env = cmd_plot(expr, p, plot_opts, svg);
  } else if (dual->parsed()) {
    env = cmd_dual(expr, k, b);
  }

  std::string report;
  if (json_output) {
    report = env.to_json().dump(2) + "\n";
  } else if (env.ok) {
    report = env.text;
  } else {
    err << "error: " << env.error << "\n";
  }

  const bool is_plot = plot->parsed();
  if (is_plot && env.ok) {
    const std::string path = output_path.empty() ? "plot.svg" : output_path;
    std::ofstream f(path, std::ios::binary);
    if (!(f << svg)) {
      err << "error: cannot write " << path << "\n";
      return kInputError;
    }
  }
  if (!is_plot && !output_path.empty() && !report.empty()) {
    std::ofstream f(output_path, std::ios::binary);
    if (!(f << report)) {
      err << "error: cannot write " << output_path << "\n";
      return kInputError;
    }
  } else {
    out << report;
  }
  return env.exit_code;
}

}  // namespace limfree::cli
