#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "algcurv/branch.hpp"
#include "algcurv/curvature.hpp"
#include "algcurv/dalg.hpp"
#include "algcurv/diffield.hpp"
#include "algcurv/error.hpp"
#include "algcurv/parse.hpp"

namespace algcurv::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> p;
  for (const auto& part : split(text, ',')) p.push_back(parse_rational(part));
  return p;
}

std::string point_text(std::span<const Rational> p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + to_string(p[k]);
  return s + ")";
}

Json rational_array(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json optional_order(const std::optional<std::size_t>& o) { return o ? Json(*o) : Json(nullptr); }

std::string kappa_name(unsigned i, unsigned j, unsigned n, bool implicit) {
  std::string s = implicit ? "kappa~_" : "kappa_";
  s += std::to_string(i);
  if (n > 1) s += "," + std::to_string(j);
  return s;
}

std::string graph_name(unsigned j, unsigned n) { return n == 1 ? "Y" : "Y" + std::to_string(j); }

std::vector<std::string> curve_sources(const std::vector<std::string>& inline_sources, const std::string& file) {
  std::vector<std::string> sources = inline_sources;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot read curve file '" + file + "'");
    std::string line;
    while (std::getline(in, line)) {
      const auto text = trim(line.substr(0, line.find('#')));
      if (!text.empty()) sources.push_back(text);
    }
  }
  if (sources.empty()) throw InputError("no curve given (use --curve or --curve-file)");
  return sources;
}

unsigned infer_dimension(const std::vector<std::string>& sources) {
  bool plain_y = false;
  unsigned max_index = 0;
  for (const auto& src : sources) {
    for (const auto& id : identifiers(src)) {
      if (id == "x") continue;
      if (id == "y") {
        plain_y = true;
        continue;
      }
      if (id.size() >= 2 && id.size() <= 6 && id[0] == 'y' && id[1] != '0' &&
          id.find_first_not_of("0123456789", 1) == std::string::npos) {
        max_index = std::max(max_index, static_cast<unsigned>(std::stoul(id.substr(1))));
        continue;
      }
      throw UnknownVariable("unknown variable '" + id + "' in curve (use x with y, or x with y1..yn)");
    }
  }
  if (plain_y && max_index > 0) throw InputError("a curve uses either y or y1..yn, not both");
  if (max_index == 1) throw InputError("a plane curve is written in x and y");
  return max_index > 0 ? max_index : 1;
}

CurveIdeal load_curve(const std::vector<std::string>& sources, unsigned n) {
  const VarAlphabet alpha = curve_alphabet(n);
  std::vector<MPoly> gens;
  for (const auto& src : sources) {
    try {
      gens.push_back(parse_poly(src, alpha));
    } catch (const SyntaxError& e) {
      throw InputError(std::string(e.what()) + " in \"" + src + "\"");
    }
  }
  return CurveIdeal(std::move(gens));
}

unsigned resolve_n(unsigned flag, unsigned inferred) {
  if (flag == 0) return inferred;
  if (flag < inferred) throw InputError("--n " + std::to_string(flag) + " is smaller than the curve dimension");
  return flag;
}

Parametrization load_param(const std::vector<std::string>& comps, std::uint32_t order) {
  if (comps.size() < 2) throw InputError("a parametrization needs --param for x and for each y");
  std::vector<TruncSeries> series;
  for (const auto& c : comps) series.push_back(parse_series(c, order));
  return Parametrization(std::move(series));
}

struct SeriesInput {
  TruncSeries series;
  bool polynomial = false;
};

SeriesInput load_series(const std::string& spec, std::uint32_t order) {
  if (spec == "exp") {
    TruncSeries s(order);
    for (std::uint32_t i = 0; i <= order; ++i) s.set_coeff(i, Rational(1) / factorial(i));
    return {s, false};
  }
  if (spec.rfind("surrogate:", 0) == 0) {
    const auto seed = spec.substr(10);
    if (seed.empty() || seed.find_first_not_of("0123456789") != std::string::npos || seed.size() > 19)
      throw InputError("surrogate seed must be a natural number: '" + spec + "'");
    return {surrogate_series(std::stoull(seed), order), false};
  }
  const VarAlphabet t({"t"});
  try {
    const MPoly p = parse_poly(spec, t);
    if (p.is_zero() || p.total_degree() < order) return {TruncSeries::from_polynomial(p, order), true};
  } catch (const SyntaxError&) {
    // not a polynomial; fall through to series arithmetic
  }
  return {parse_series(spec, order), false};
}

SeriesFamily load_family(const std::vector<std::string>& specs, std::uint32_t order) {
  if (specs.empty()) throw InputError("no series given (use --series)");
  std::vector<TruncSeries> members;
  bool polynomial = true;
  for (const auto& s : specs) {
    auto in = load_series(s, order);
    polynomial = polynomial && in.polynomial;
    members.push_back(std::move(in.series));
  }
  return SeriesFamily(std::move(members), polynomial);
}

// Output collected per command; text is wrapped afterwards if requested.
struct Output {
  bool json = false;
  std::ostringstream text;
  Json doc = Json::object();
};

struct Common {
  bool json = false;
  unsigned n = 0;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "Emit JSON instead of text");
  sub->add_option("--n", c.n, "Number of y coordinates (inferred when omitted)");
}

const char* status_name(PointValue::Status s) {
  switch (s) {
    case PointValue::Status::Finite:
      return "finite";
    case PointValue::Status::Pole:
      return "pole";
    case PointValue::Status::Indeterminate:
      return "indeterminate";
  }
  return "";
}

void emit_point_values(Output& o, const CurveIdeal& ideal, std::span<const Rational> point, unsigned imax) {
  const auto values = kappa_at_point(ideal, point, imax);
  o.doc["mode"] = "point";
  o.doc["n"] = ideal.n();
  o.doc["point"] = rational_array(point);
  Json arr = Json::array();
  o.text << "point: " << point_text(point) << "\n";
  for (const auto& v : values) {
    Json e;
    e["i"] = v.i;
    e["j"] = v.j;
    e["status"] = status_name(v.status);
    e["value"] = v.status == PointValue::Status::Finite ? Json(to_string(v.value)) : Json(nullptr);
    arr.push_back(e);
    o.text << kappa_name(v.i, v.j, ideal.n(), true) << " = "
           << (v.status == PointValue::Status::Finite ? to_string(v.value) : std::string(status_name(v.status)))
           << "\n";
  }
  o.doc["values"] = arr;
}

void emit_table(Output& o, const CurveIdeal& ideal, unsigned imax) {
  const auto table = implicit_kappa(ideal, imax);
  o.doc["mode"] = "implicit";
  o.doc["n"] = ideal.n();
  Json arr = Json::array();
  for (unsigned i = 0; i <= imax; ++i) {
    for (unsigned j = 1; j <= ideal.n(); ++j) {
      const std::string f = table.at(i, j).to_string();
      Json e;
      e["i"] = i;
      e["j"] = j;
      e["expr"] = f;
      arr.push_back(e);
      o.text << kappa_name(i, j, ideal.n(), true) << " = " << f << "\n";
    }
  }
  o.doc["table"] = arr;
}

void emit_branch(Output& o, const BranchSeries& b, const char* key) {
  Json graphs = Json::array();
  for (unsigned j = 1; j <= b.n(); ++j) {
    graphs.push_back(rational_array(b.graphs[j - 1].coeffs()));
  }
  o.doc[key] = graphs;
}

std::string local_coordinates(std::span<const Rational> p) {
  auto shift = [](const std::string& v, const Rational& a) {
    if (a == 0) return v;
    return v + (a < 0 ? " + " : " - ") + to_string(abs(a));
  };
  std::string s = "X = " + shift("x", p[0]);
  const unsigned n = static_cast<unsigned>(p.size() - 1);
  for (unsigned j = 1; j <= n; ++j)
    s += ", " + graph_name(j, n) + " = " + shift(n == 1 ? "y" : "y" + std::to_string(j), p[j]);
  return s;
}

}  // namespace

std::string wrap_lines(const std::string& text, std::size_t width) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (line.size() > width) {
      std::size_t cut = std::string::npos;
      for (std::size_t k = width; k > 4; --k) {
        if (k + 2 < line.size() && line[k] == ' ' && (line[k + 1] == '+' || line[k + 1] == '-') &&
            line[k + 2] == ' ') {
          cut = k;
          break;
        }
      }
      if (cut == std::string::npos) break;
      out += line.substr(0, cut) + "\n";
      line = "    " + line.substr(cut + 1);
    }
    out += line + "\n";
  }
  if (!text.empty() && text.back() != '\n') out.pop_back();
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic curvatures of curves: exact invariants, branches and relation search", "algcurv"};
  app.require_subcommand(1);
  Output o;
  std::function<void()> action;

  // slope
  Common slope_c;
  std::vector<std::string> slope_curves;
  std::string slope_file, slope_point;
  auto* slope = app.add_subcommand("slope", "Implicit slopes kappa~_0 (optionally at a point)");
  add_common(slope, slope_c);
  slope->add_option("--curve", slope_curves, "Generator polynomial (repeatable)");
  slope->add_option("--curve-file", slope_file, "File with one generator per line");
  slope->add_option("--point", slope_point, "Point on the curve, e.g. 0,-1");
  slope->callback([&] {
    action = [&] {
      o.json = slope_c.json;
      const auto src = curve_sources(slope_curves, slope_file);
      const CurveIdeal ideal = load_curve(src, resolve_n(slope_c.n, infer_dimension(src)));
      o.doc["command"] = "slope";
      if (!slope_point.empty())
        emit_point_values(o, ideal, parse_point(slope_point), 0);
      else
        emit_table(o, ideal, 0);
    };
  });

  // curvature
  Common curv_c;
  std::vector<std::string> curv_curves, curv_params;
  std::string curv_file, curv_point;
  unsigned curv_imax = 3;
  std::uint32_t curv_order = 8;
  auto* curv = app.add_subcommand("curvature", "Curvature table: implicit, at a point, or along a parametrization");
  add_common(curv, curv_c);
  curv->add_option("--curve", curv_curves, "Generator polynomial (repeatable)");
  curv->add_option("--curve-file", curv_file, "File with one generator per line");
  curv->add_option("--point", curv_point, "Point on the curve");
  curv->add_option("--param", curv_params, "Parametrization component in t: x first, then each y (repeatable)");
  curv->add_option("--imax", curv_imax, "Largest curvature index")->capture_default_str();
  curv->add_option("--order", curv_order, "Series truncation order for --param")->capture_default_str();
  curv->callback([&] {
    action = [&] {
      o.json = curv_c.json;
      o.doc["command"] = "curvature";
      if (!curv_params.empty()) {
        if (!curv_curves.empty() || !curv_file.empty() || !curv_point.empty())
          throw InputError("--param cannot be combined with --curve or --point");
        const Parametrization gamma = load_param(curv_params, curv_order);
        const unsigned n = static_cast<unsigned>(gamma.n());
        o.doc["mode"] = "parametric";
        o.doc["n"] = n;
        o.doc["order"] = curv_order;
        Json arr = Json::array();
        for (unsigned i = 0; i <= curv_imax; ++i) {
          for (unsigned j = 1; j <= n; ++j) {
            const TruncSeries s = kappa_series(gamma, i, j);
            Json e;
            e["i"] = i;
            e["j"] = j;
            e["coefficients"] = rational_array(s.coeffs());
            arr.push_back(e);
            o.text << kappa_name(i, j, n, false) << "(t) = " << s.to_string() << "\n";
          }
        }
        o.doc["series"] = arr;
        return;
      }
      const auto src = curve_sources(curv_curves, curv_file);
      const CurveIdeal ideal = load_curve(src, resolve_n(curv_c.n, infer_dimension(src)));
      if (!curv_point.empty())
        emit_point_values(o, ideal, parse_point(curv_point), curv_imax);
      else
        emit_table(o, ideal, curv_imax);
    };
  });

  // invariant check / rewrite
  auto* inv = app.add_subcommand("invariant", "Invariance test and rewriting in generators");
  inv->require_subcommand(1);
  Common check_c;
  std::string check_expr;
  std::size_t check_trials = 0;
  std::uint64_t check_seed = 1;
  std::uint32_t check_order = 10;
  auto* check = inv->add_subcommand("check", "Exact fixed-point test p = i_kappa(p)");
  add_common(check, check_c);
  check->add_option("--expr", check_expr, "Jet expression, e.g. \"y'/x'\"")->required();
  check->add_option("--trials", check_trials, "Also run this many randomized reparametrization trials")
      ->capture_default_str();
  check->add_option("--seed", check_seed, "Seed for the randomized trials")->capture_default_str();
  check->add_option("--order", check_order, "Series order for the randomized trials")->capture_default_str();
  check->callback([&] {
    action = [&] {
      o.json = check_c.json;
      const DiffExpr p = parse_diffexpr(check_expr, std::max(1u, check_c.n));
      const InvarianceVerdict v = is_invariant(p);
      o.doc["command"] = "invariant check";
      o.doc["expr"] = p.to_string();
      o.doc["verdict"] = v.invariant ? "Invariant" : "NotInvariant";
      o.doc["witness"] = v.invariant ? Json(nullptr) : Json(v.witness.to_string());
      o.doc["diagnostic"] = v.diagnostic ? Json(*v.diagnostic) : Json(nullptr);
      o.text << (v.invariant ? "Invariant" : "NotInvariant") << "\n";
      if (!v.invariant && !v.diagnostic) o.text << "witness: " << v.witness.to_string() << "\n";
      if (v.diagnostic) o.text << "diagnostic: " << *v.diagnostic << "\n";
      if (check_trials > 0) {
        const auto e = is_equivariant_probabilistic(p, check_trials, check_order, check_seed);
        Json r;
        r["trials"] = e.trials_run;
        r["consistent"] = e.consistent;
        r["first_disagreement"] = e.counterexample ? Json(e.counterexample->order_of_disagreement) : Json(nullptr);
        o.doc["randomized"] = r;
        o.text << "randomized: " << e.trials_run << " trials, ";
        if (e.consistent)
          o.text << "no disagreement\n";
        else
          o.text << "trial " << e.counterexample->trial << " disagrees at t^" << e.counterexample->order_of_disagreement
                 << "\n";
      }
    };
  });
  Common rewrite_c;
  std::string rewrite_expr;
  auto* rewrite = inv->add_subcommand("rewrite", "Write an invariant in the generators X0, Y0(j), K(i,j)");
  add_common(rewrite, rewrite_c);
  rewrite->add_option("--expr", rewrite_expr, "Jet expression")->required();
  rewrite->callback([&] {
    action = [&] {
      o.json = rewrite_c.json;
      const DiffExpr p = parse_diffexpr(rewrite_expr, std::max(1u, rewrite_c.n));
      const GeneratorExpr g = rewrite_in_generators(p);
      Json gens = Json::array();
      for (const auto& gen : g.generators()) gens.push_back(gen.name());
      o.doc["command"] = "invariant rewrite";
      o.doc["expr"] = p.to_string();
      o.doc["generators"] = gens;
      o.doc["rewritten"] = g.to_string();
      o.text << g.to_string() << "\n";
    };
  });

  // implicitize
  Common impl_c;
  std::string impl_expr, impl_file;
  std::vector<std::string> impl_curves;
  auto* impl = app.add_subcommand("implicitize", "Implicit form of an invariant on a curve");
  add_common(impl, impl_c);
  impl->add_option("--expr", impl_expr, "Invariant jet expression")->required();
  impl->add_option("--curve", impl_curves, "Generator polynomial (repeatable)");
  impl->add_option("--curve-file", impl_file, "File with one generator per line");
  impl->callback([&] {
    action = [&] {
      o.json = impl_c.json;
      const auto src = curve_sources(impl_curves, impl_file);
      const CurveIdeal ideal = load_curve(src, resolve_n(impl_c.n, infer_dimension(src)));
      const DiffExpr p = parse_diffexpr(impl_expr, ideal.n());
      const RatFunc f = implicitize_invariant(p, ideal);
      o.doc["command"] = "implicitize";
      o.doc["expr"] = p.to_string();
      o.doc["implicit"] = f.to_string();
      o.text << f.to_string() << "\n";
    };
  });

  // branch
  Common br_c;
  std::vector<std::string> br_curves;
  std::string br_file, br_point;
  std::uint32_t br_order = 8;
  auto* br = app.add_subcommand("branch", "Branch graphs from curvature values, with a residual certificate");
  add_common(br, br_c);
  br->add_option("--curve", br_curves, "Generator polynomial (repeatable)");
  br->add_option("--curve-file", br_file, "File with one generator per line");
  br->add_option("--point", br_point, "Smooth point on the curve")->required();
  br->add_option("--order", br_order, "Truncation order")->capture_default_str();
  br->callback([&] {
    action = [&] {
      o.json = br_c.json;
      const auto src = curve_sources(br_curves, br_file);
      const CurveIdeal ideal = load_curve(src, resolve_n(br_c.n, infer_dimension(src)));
      const auto point = parse_point(br_point);
      const BranchSeries b = reconstruct(ideal, point, br_order);
      const auto residual = residual_order(ideal, b);
      o.doc["command"] = "branch";
      o.doc["base_point"] = rational_array(point);
      o.doc["order"] = br_order;
      emit_branch(o, b, "graphs");
      Json cert = Json::array();
      for (const auto& r : residual) cert.push_back(optional_order(r));
      o.doc["residual"] = cert;
      o.text << "base point: " << point_text(point) << "\n";
      o.text << "local coordinates: " << local_coordinates(point) << "\n";
      for (unsigned j = 1; j <= b.n(); ++j)
        o.text << graph_name(j, b.n()) << " = " << b.graphs[j - 1].to_string("X") << "\n";
      for (std::size_t k = 0; k < residual.size(); ++k) {
        o.text << "residual f" << (k + 1) << ": ";
        if (residual[k])
          o.text << "nonzero at X^" << *residual[k] << "\n";
        else
          o.text << "exact to order " << br_order << "\n";
      }
    };
  });

  // compare
  Common cmp_c;
  std::vector<std::string> cmp_curve1, cmp_curve2;
  std::string cmp_point;
  std::uint32_t cmp_order = 8;
  auto* cmp = app.add_subcommand("compare", "Contact order of two curves through a common point");
  add_common(cmp, cmp_c);
  cmp->add_option("--curve1", cmp_curve1, "Generator of the first curve (repeatable)")->required();
  cmp->add_option("--curve2", cmp_curve2, "Generator of the second curve (repeatable)")->required();
  cmp->add_option("--point", cmp_point, "Common smooth point")->required();
  cmp->add_option("--order", cmp_order, "Truncation order")->capture_default_str();
  cmp->callback([&] {
    action = [&] {
      o.json = cmp_c.json;
      auto all = cmp_curve1;
      all.insert(all.end(), cmp_curve2.begin(), cmp_curve2.end());
      const unsigned n = resolve_n(cmp_c.n, infer_dimension(all));
      const auto point = parse_point(cmp_point);
      const BranchSeries b1 = reconstruct(load_curve(cmp_curve1, n), point, cmp_order);
      const BranchSeries b2 = reconstruct(load_curve(cmp_curve2, n), point, cmp_order);
      const ContactResult c = contact_order(b1, b2);
      o.doc["command"] = "compare";
      o.doc["base_point"] = rational_array(point);
      o.doc["order"] = cmp_order;
      o.doc["contact_order"] = optional_order(c.order);
      emit_branch(o, b1, "graphs1");
      emit_branch(o, b2, "graphs2");
      Json diffs = Json::array();
      o.text << "point: " << point_text(point) << "\n";
      if (!c.order) {
        o.text << "contact order: identical to order " << c.compared_order << "\n";
      } else {
        o.text << "contact order: " << *c.order << "\n";
        for (unsigned j = 1; j <= n; ++j) {
          const Rational& a = b1.graphs[j - 1].coeff(*c.order);
          const Rational& b = b2.graphs[j - 1].coeff(*c.order);
          if (a == b) continue;
          Json d;
          d["j"] = j;
          d["power"] = *c.order;
          d["curve1"] = to_string(a);
          d["curve2"] = to_string(b);
          diffs.push_back(d);
          o.text << "coefficient of X^" << *c.order << " in " << graph_name(j, n) << ": " << to_string(a) << " vs "
                 << to_string(b) << "\n";
        }
      }
      o.doc["differences"] = diffs;
    };
  });

  // paramcheck
  Common pc_c;
  std::vector<std::string> pc_curves, pc_params;
  std::string pc_file;
  unsigned pc_imax = 3;
  std::uint32_t pc_order = 10;
  auto* pc = app.add_subcommand("paramcheck", "Compare implicit and parametric curvatures along a parametrization");
  add_common(pc, pc_c);
  pc->add_option("--curve", pc_curves, "Generator polynomial (repeatable)");
  pc->add_option("--curve-file", pc_file, "File with one generator per line");
  pc->add_option("--param", pc_params, "Parametrization component in t (repeatable)")->required();
  pc->add_option("--imax", pc_imax, "Largest curvature index")->capture_default_str();
  pc->add_option("--order", pc_order, "Series truncation order")->capture_default_str();
  pc->callback([&] {
    action = [&] {
      o.json = pc_c.json;
      const Parametrization gamma = load_param(pc_params, pc_order);
      const auto src = curve_sources(pc_curves, pc_file);
      const unsigned n = resolve_n(pc_c.n, infer_dimension(src));
      const CurveIdeal ideal = load_curve(src, std::max(n, static_cast<unsigned>(gamma.n())));
      const ConsistencyReport r = consistency_check(ideal, gamma, pc_imax, pc_order);
      o.doc["command"] = "paramcheck";
      o.doc["order"] = pc_order;
      o.doc["consistent"] = r.consistent;
      Json res = Json::array();
      for (const auto& v : r.residuals) res.push_back(optional_order(v));
      o.doc["residuals"] = res;
      Json entries = Json::array();
      for (std::size_t k = 0; k < r.residuals.size(); ++k) {
        o.text << "f" << (k + 1) << "(gamma(t)): ";
        if (r.residuals[k])
          o.text << "nonzero at t^" << *r.residuals[k] << "\n";
        else
          o.text << "zero to order " << pc_order << "\n";
      }
      for (const auto& e : r.entries) {
        Json j;
        j["i"] = e.i;
        j["j"] = e.j;
        j["compared_order"] = e.compared_order;
        j["first_disagreement"] = optional_order(e.first_disagreement);
        entries.push_back(j);
        o.text << kappa_name(e.i, e.j, ideal.n(), false) << ": ";
        if (e.first_disagreement)
          o.text << "differs at t^" << *e.first_disagreement << "\n";
        else
          o.text << "consistent to order " << e.compared_order << "\n";
      }
      o.doc["entries"] = entries;
      o.text << (r.consistent ? "consistent" : "inconsistent") << "\n";
    };
  });

  // wronskian
  Common wr_c;
  std::vector<std::string> wr_series;
  std::uint32_t wr_order = 10;
  auto* wr = app.add_subcommand("wronskian", "Wronskian determinant and linear dependence of a series family");
  add_common(wr, wr_c);
  wr->add_option("--series", wr_series, "Series in t, 'exp' or 'surrogate:SEED' (repeatable)")->required();
  wr->add_option("--order", wr_order, "Truncation order")->capture_default_str();
  wr->callback([&] {
    action = [&] {
      o.json = wr_c.json;
      const SeriesFamily fam = load_family(wr_series, wr_order);
      const TruncSeries w = wronskian_det(fam);
      const LinearDependence dep = linear_dependence(fam);
      const char* verdict = dep.verdict == LinearDependence::Verdict::Dependent     ? "Dependent"
                            : dep.verdict == LinearDependence::Verdict::Independent ? "Independent"
                                                                                    : "InconclusiveAtOrder";
      o.doc["command"] = "wronskian";
      o.doc["order"] = wr_order;
      o.doc["wronskian"] = rational_array(w.coeffs());
      o.doc["dependence"] = verdict;
      o.doc["coefficients"] = rational_array(dep.coefficients);
      o.text << "W = " << w.to_string() << "\n";
      o.text << "dependence: " << verdict;
      if (!dep.coefficients.empty()) {
        o.text << " (";
        for (std::size_t k = 0; k < dep.coefficients.size(); ++k)
          o.text << (k ? ", " : "") << to_string(dep.coefficients[k]);
        o.text << ")";
      }
      o.text << "\n";
    };
  });

  // deprel
  Common dr_c;
  std::vector<std::string> dr_series;
  std::uint32_t dr_order = 30;
  unsigned dr_k = 2, dr_d = 2;
  bool dr_t = false;
  auto* dr = app.add_subcommand("deprel", "Bounded search for an algebraic differential relation");
  add_common(dr, dr_c);
  dr->add_option("--series", dr_series, "Series in t, 'exp' or 'surrogate:SEED' (repeatable)")->required();
  dr->add_option("--order", dr_order, "Truncation order")->capture_default_str();
  dr->add_option("--k", dr_k, "Jets per member (f, f', ..., f^(k-1))")->capture_default_str();
  dr->add_option("--d", dr_d, "Total degree bound")->capture_default_str();
  dr->add_flag("--include-t", dr_t, "Allow powers of t in the relation");
  dr->callback([&] {
    action = [&] {
      o.json = dr_c.json;
      const SeriesFamily fam = load_family(dr_series, dr_order);
      const RelationSearchResult r = d_relation_search(fam, dr_k, dr_d, dr_t);
      o.doc["command"] = "deprel";
      o.doc["k"] = dr_k;
      o.doc["d"] = dr_d;
      o.doc["include_t"] = dr_t;
      o.doc["monomials"] = r.monomials;
      o.doc["verified_order"] = r.verified_order;
      if (r.relation) {
        Json terms = Json::array();
        const auto& names = r.relation->q.alphabet().names();
        for (auto it = r.relation->q.terms().rbegin(); it != r.relation->q.terms().rend(); ++it) {
          Json t;
          Json mono = Json::object();
          for (std::size_t v = 0; v < it->first.size(); ++v)
            if (it->first[v] != 0) mono[names[v]] = it->first[v];
          t["monomial"] = mono;
          t["coefficient"] = to_string(it->second);
          terms.push_back(t);
        }
        o.doc["relation"] = r.relation->to_string();
        o.doc["terms"] = terms;
        o.text << "relation: " << r.relation->to_string() << "\n";
        o.text << "verified by substitution to order " << r.verified_order << "\n";
      } else {
        o.doc["relation"] = nullptr;
        o.text << "no relation up to k = " << dr_k << ", d = " << dr_d << " (" << r.monomials
               << " monomials, checked to order " << r.verified_order << ")\n";
      }
    };
  });

  // interp
  Common ip_c;
  std::vector<std::string> ip_points;
  auto* ip = app.add_subcommand("interp", "Polynomial with prescribed derivatives at points");
  add_common(ip, ip_c);
  ip->add_option("--point", ip_points, "a:b0,b1,...,b(k-1) (repeatable)")->required();
  ip->callback([&] {
    action = [&] {
      o.json = ip_c.json;
      std::vector<InterpolationPoint> pts;
      for (const auto& s : ip_points) {
        const auto colon = s.find(':');
        if (colon == std::string::npos) throw InputError("interpolation point must look like a:b0,b1,...: '" + s + "'");
        pts.push_back({parse_rational(trim(s.substr(0, colon))), parse_point(s.substr(colon + 1))});
      }
      const MPoly f = hermite_interpolate(pts);
      o.doc["command"] = "interp";
      o.doc["polynomial"] = f.to_string();
      Json coeffs = Json::array();
      for (std::uint32_t d = 0; d <= f.total_degree(); ++d) {
        const auto it = f.terms().find(Exponents{d});
        coeffs.push_back(to_string(it == f.terms().end() ? Rational(0) : it->second));
      }
      o.doc["coefficients"] = coeffs;
      o.text << "f = " << f.to_string() << "\n";
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (o.json) {
    out << o.doc.dump(2) << "\n";
    return 0;
  }
  std::string text = o.text.str();
  if (const char* w = std::getenv("ALGCURV_WIDTH")) {
    char* end = nullptr;
    const long width = std::strtol(w, &end, 10);
    if (end != w && *end == '\0' && width >= 20) text = wrap_lines(text, static_cast<std::size_t>(width));
  }
  out << text;
  return 0;
}

}  // namespace algcurv::cli
