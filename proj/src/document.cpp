#include "nucert/document.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "nucert/errors.hpp"
#include "nucert/filtration_model.hpp"
#include "nucert/intersection_core.hpp"
#include "nucert/multiplicity_solver.hpp"
#include "nucert/nu_bounds.hpp"
#include "nucert/toric_oracle.hpp"

namespace nucert {

using nlohmann::json;

namespace {

constexpr double kDefaultTolerance = 1e-12;
constexpr long long kDefaultMaxIter = 100000;
constexpr long long kDefaultBCap = 100;
constexpr long long kDefaultWindowN = 200;

// ---------------------------------------------------------------------------
// Parsing

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

long long as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<long long>();
}

std::vector<long long> as_int_vector(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of integers");
  std::vector<long long> out;
  for (const auto& e : j) out.push_back(as_int(e, what + " entry"));
  return out;
}

Rational as_fraction(const json& j, const std::string& what) {
  if (j.is_string()) return parse_fraction(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<long long>());
  throw InputError(what + " must be a \"p/q\" string or an integer");
}

json fractions(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_fraction_string(v));
  return out;
}

IntersectionForm parse_form(const json& j) {
  if (!j.is_array()) throw InputError("\"form\" must be an array of integer rows");
  std::vector<std::vector<long long>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("\"form\" must be an array of integer rows");
    rows.push_back(as_int_vector(row, "form entry"));
  }
  return IntersectionForm(std::move(rows));
}

bool has_toric(const json& config) { return config.contains("surface") || config.contains("rays"); }

std::vector<Ray> parse_rays(const json& j) {
  if (!j.is_array()) throw InputError("\"rays\" must be an array of [x, y] pairs");
  std::vector<Ray> rays;
  for (const auto& r : j) {
    auto xy = as_int_vector(r, "ray");
    if (xy.size() != 2) throw InputError("each ray needs two coordinates");
    rays.push_back({xy[0], xy[1]});
  }
  return rays;
}

ToricSurface parse_surface(const json& config) {
  if (config.contains("rays")) return ToricSurface(parse_rays(config.at("rays")));
  const json& s = config.at("surface");
  if (s.is_string()) {
    const auto name = s.get<std::string>();
    if (name == "P2") return ToricSurface::projective_plane();
    if (name == "P1xP1") return ToricSurface::p1xp1();
    throw InputError("unknown catalog surface \"" + name + "\"");
  }
  if (s.is_object() && s.contains("hirzebruch")) return ToricSurface::hirzebruch(as_int(s.at("hirzebruch"), "hirzebruch"));
  if (s.is_object() && s.contains("rays")) return ToricSurface(parse_rays(s.at("rays")));
  throw InputError("\"surface\" must be \"P2\", \"P1xP1\", {\"hirzebruch\": e} or {\"rays\": [...]}");
}

ToricDivisor parse_divisor(const json& d, const ToricSurface& s) {
  if (!d.is_object()) throw InputError("divisor must be an object");
  if (d.contains("coeffs")) return ToricDivisor(s, as_int_vector(d.at("coeffs"), "coeffs"));
  if (d.contains("O")) {
    auto ab = as_int_vector(d.at("O"), "O");
    if (ab.size() != 2) throw InputError("\"O\" needs two integers");
    return bidegree_class(s, ab[0], ab[1]);
  }
  if (d.contains("degree")) return line_class(s, as_int(d.at("degree"), "degree"));
  throw InputError("divisor needs \"coeffs\", \"O\" or \"degree\"");
}

std::vector<ToricDivisor> parse_divisors(const json& config, const ToricSurface& s) {
  const json& list = field(config, "divisors");
  if (!list.is_array() || list.empty()) throw InputError("\"divisors\" must be a nonempty array");
  std::vector<ToricDivisor> out;
  for (const auto& d : list) out.push_back(parse_divisor(d, s));
  return out;
}

json divisor_json(const ToricDivisor& d) { return json{{"coeffs", d.coeffs()}}; }

void require_ample(const ToricDivisor& d, const std::string& name) {
  if (!is_ample(d)) throw InputError(name + " is not ample");
  if (!d.has_nonnegative_coeffs()) throw InputError(name + " needs nonnegative coefficients as effectivity witness");
}

// ---------------------------------------------------------------------------
// Option resolution: command-line flag, then config key, then default.

struct Context {
  const json& config;
  const RunOptions& options;
  json assumptions = json::array();
};

double tolerance(const Context& c) {
  double t = kDefaultTolerance;
  if (c.options.tolerance) t = *c.options.tolerance;
  else if (c.config.contains("tolerance")) {
    if (!c.config.at("tolerance").is_number()) throw InputError("\"tolerance\" must be a number");
    t = c.config.at("tolerance").get<double>();
  }
  if (!(t > 0)) throw InputError("tolerance must be positive");
  return t;
}

long long positive_option(const Context& c, const std::optional<long long>& flag, const char* key, long long fallback) {
  long long v = fallback;
  if (flag) v = *flag;
  else if (c.config.contains(key)) v = as_int(c.config.at(key), key);
  if (v < 1) throw InputError(std::string(key) + " must be positive");
  return v;
}

// ---------------------------------------------------------------------------
// Commands

json surface_pair_json(const SurfacePair& p) {
  return json{{"l_sq", p.l_sq}, {"l_dot_e", p.l_dot_e}, {"e_sq", p.e_sq},
              {"alpha", to_fraction_string(p.alpha())}, {"beta", to_fraction_string(p.beta())},
              {"nu_lower_bound", to_fraction_string(nu_lower_bound(p))}};
}

SurfacePair toric_pair(const ToricDivisor& l, const ToricDivisor& e) {
  require_ample(l, "L");
  require_ample(e, "E");
  return make_surface_pair(intersection_number(l, l), intersection_number(l, e), intersection_number(e, e));
}

json cmd_nu_bound(Context& c) {
  const json& cfg = c.config;
  if (cfg.contains("curve")) {
    const json& cv = cfg.at("curve");
    const long long a = as_int(field(cv, "l_deg"), "l_deg"), b = as_int(field(cv, "e_deg"), "e_deg");
    return json{{"curve_nu", to_fraction_string(curve_nu(a, b))}};
  }
  if (cfg.contains("form")) {
    const auto form = parse_form(cfg.at("form"));
    const auto m = as_int_vector(field(cfg, "m"), "m");
    const auto bounds = integral_nu_bounds(form, m);
    json per = json::array();
    const auto r = static_cast<long long>(form.size());
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      per.push_back({{"nu_lower_bound", to_fraction_string(bounds[i])},
                     {"exceeds_m", bounds[i] > make_rational(m[i])},
                     {"exceeds_r_over_4_m", bounds[i] > make_rational(r * m[i], 4)}});
    }
    c.assumptions.push_back("ampleness and effectivity of D_1..D_r asserted by the user");
    return json{{"divisors", per}};
  }
  SurfacePair pair;
  if (cfg.contains("pair")) {
    const json& p = cfg.at("pair");
    pair = make_surface_pair(as_int(field(p, "l_sq"), "l_sq"), as_int(field(p, "l_dot_e"), "l_dot_e"),
                             as_int(field(p, "e_sq"), "e_sq"));
  } else if (has_toric(cfg)) {
    const auto s = parse_surface(cfg);
    pair = toric_pair(parse_divisor(field(cfg, "L"), s), parse_divisor(field(cfg, "E"), s));
  } else {
    throw InputError("nu-bound needs \"pair\", \"curve\", \"form\" with \"m\", or a toric \"L\" and \"E\"");
  }
  json out = surface_pair_json(pair);
  if (cfg.contains("n") && cfg.contains("k")) {
    out["morse_lower_bound"] =
        to_fraction_string(morse_lower_bound(pair, as_int(cfg.at("n"), "n"), as_int(cfg.at("k"), "k")));
  }
  return out;
}

json cmd_oracle_nu(Context& c) {
  const json& cfg = c.config;
  const long long n = cfg.contains("n") ? as_int(cfg.at("n"), "n") : kDefaultWindowN;
  const long long n0 = cfg.contains("n0") ? as_int(cfg.at("n0"), "n0") : n;
  H0Provider provider;
  json out;
  if (cfg.contains("curve")) {
    const json& cv = cfg.at("curve");
    const long long a = as_int(field(cv, "l_deg"), "l_deg"), b = as_int(field(cv, "e_deg"), "e_deg");
    out["curve_nu"] = to_fraction_string(curve_nu(a, b));
    provider.h0 = [a, b](long long nn, long long k) { return curve_h0(a * nn - b * k); };
    provider.last_nonzero_k = [a, b](long long nn) { return floor_div(a * nn, b); };
  } else if (has_toric(cfg)) {
    const auto s = parse_surface(cfg);
    const auto l = parse_divisor(field(cfg, "L"), s);
    const auto e = parse_divisor(field(cfg, "E"), s);
    const auto pair = toric_pair(l, e);
    out["pair"] = surface_pair_json(pair);
    provider.h0 = [l, e](long long nn, long long k) { return h0(l * nn - e * k); };
    provider.last_nonzero_k = [pair](long long nn) { return floor_div(pair.l_sq * nn, pair.l_dot_e); };
  } else {
    throw InputError("oracle-nu needs \"curve\" or a toric \"L\" and \"E\"");
  }
  const auto window = truncated_nu_window(provider, n0, n);
  json values = json::array();
  for (std::size_t i = 0; i < window.values.size(); ++i) {
    values.push_back({{"n", window.first_n + static_cast<long long>(i)},
                      {"nu", to_fraction_string(window.values[i])}});
  }
  out["values"] = values;
  out["running_min"] = to_fraction_string(window.running_min);
  c.assumptions.push_back("finite-n values; the liminf is not claimed to be attained");
  return out;
}

struct FormInput {
  IntersectionForm form;
  bool assumed_ample = true;
};

FormInput form_from_config(const json& cfg) {
  if (cfg.contains("form") && has_toric(cfg)) throw InputError("give either \"form\" or a toric surface, not both");
  if (cfg.contains("form")) return {parse_form(cfg.at("form")), true};
  if (has_toric(cfg)) {
    const auto s = parse_surface(cfg);
    auto divisors = parse_divisors(cfg, s);
    for (std::size_t i = 0; i < divisors.size(); ++i) require_ample(divisors[i], "D_" + std::to_string(i + 1));
    return {intersection_form_of(divisors), false};
  }
  throw InputError("need an abstract \"form\" or a toric \"surface\" with \"divisors\"");
}

json certificate_json(const IntersectionForm& form, const NuCertificate& cert, const FixedPointResult& fp) {
  return json{{"r", cert.r()},
              {"m", cert.m},
              {"denominator", cert.denominator},
              {"margins", fractions(cert.margins())},
              {"lhs", fractions(cert.lhs)},
              {"rhs", fractions(cert.rhs)},
              {"residual", cert.residual},
              {"assumed_ample", cert.assumed_ample},
              {"form", form.entries()},
              {"fixed_point", fp.x},
              {"iterations", fp.iterations}};
}

void ample_assumptions(Context& c, bool assumed_ample) {
  if (assumed_ample) {
    c.assumptions.push_back("ampleness and effectivity of D_1..D_r asserted by the user");
    c.assumptions.push_back("proper intersection of D_1..D_r asserted by the user");
  } else {
    c.assumptions.push_back("ampleness verified on the toric surface; effectivity witnessed by nonnegative coefficients");
  }
}

json cmd_solve(Context& c) {
  const auto input = form_from_config(c.config);
  SolverOptions opts;
  opts.tolerance = tolerance(c);
  opts.max_iter = positive_option(c, c.options.max_iter, "max_iter", kDefaultMaxIter);
  const long long cap = positive_option(c, c.options.denominator_cap, "denominator_cap", kDefaultDenominatorCap);
  const auto fp = solve_fixed_point(input.form, opts);
  auto cert = rationalize(input.form, fp, cap);
  cert.assumed_ample = input.assumed_ample;
  ample_assumptions(c, input.assumed_ample);

  const auto integral = integral_nu_bounds(input.form, cert.m);
  bool exceeds_m = true;
  for (std::size_t i = 0; i < integral.size(); ++i) exceeds_m = exceeds_m && integral[i] > make_rational(cert.m[i]);
  return json{{"certificate", certificate_json(input.form, cert, fp)},
              {"integral_nu_lower_bounds", fractions(integral)},
              {"nu_exceeds_m", exceeds_m}};
}

json cmd_verify(Context& c, int& exit_code) {
  const json& doc = c.config;
  const json& cert = field(field(doc, "result"), "certificate");
  const auto form = parse_form(field(cert, "form"));
  const auto m = as_int_vector(field(cert, "m"), "m");
  const long long den = as_int(field(cert, "denominator"), "denominator");
  const long long r = as_int(field(cert, "r"), "r");
  const json& stored_margins = field(cert, "margins");
  const json& assumed = field(cert, "assumed_ample");
  if (!assumed.is_boolean()) throw InputError("\"assumed_ample\" must be a boolean");

  json problems = json::array();
  if (doc.contains("input") && doc.at("input").is_object()) {
    try {
      const auto derived = form_from_config(doc.at("input"));
      if (!(derived.form == form)) problems.push_back("certificate form differs from the form derived from the input");
      if (derived.assumed_ample != assumed.get<bool>()) problems.push_back("assumed_ample flag disagrees with the input kind");
    } catch (const InputError& e) {
      problems.push_back(std::string("input echo is not valid: ") + e.what());
    }
  }
  if (r != static_cast<long long>(form.size())) problems.push_back("r does not match the form size");

  const auto check = verify_certificate(form, m, den);
  for (const auto& p : check.problems) problems.push_back(p);
  if (check.problems.empty()) {
    const json recomputed = fractions(check.margins);
    if (stored_margins != recomputed) problems.push_back("stored margins differ from recomputed margins");
    if (cert.contains("lhs") || cert.contains("rhs")) {
      const auto rebuilt = certificate_for(form, m);
      if (cert.value("lhs", json()) != fractions(rebuilt.lhs) || cert.value("rhs", json()) != fractions(rebuilt.rhs)) {
        problems.push_back("stored lhs/rhs differ from recomputed values");
      }
    }
  }
  const bool valid = problems.empty();
  exit_code = valid ? kExitOk : kExitCertificationFailure;
  return json{{"valid", valid}, {"problems", problems}, {"margins", fractions(check.margins)}};
}

json cmd_proper_check(Context& c, int& exit_code) {
  const auto s = parse_surface(c.config);
  std::vector<SupportedDivisor> divisors;
  for (const auto& d : field(c.config, "divisors")) {
    const bool general = d.is_object() && d.contains("general") && d.at("general").get<bool>();
    divisors.push_back({parse_divisor(d, s), general});
  }
  const auto report = proper_intersection_check(divisors);
  for (const auto& a : report.assumptions) c.assumptions.push_back(a);
  exit_code = report.passed ? kExitOk : kExitInvalidInput;
  return json{{"passed", report.passed}, {"failures", report.failures}};
}

json basis_json(const AdaptedBasis& basis) {
  json out = json::array();
  for (const auto& e : basis.elements) {
    json item{{"orders", e.orders}};
    if (e.exponent) item["exponent"] = *e.exponent;
    if (e.vector) item["vector"] = fractions(*e.vector);
    out.push_back(item);
  }
  return out;
}

json cmd_adapted_basis(Context& c) {
  const json& cfg = c.config;
  FilteredSectionSpace space;
  if (cfg.contains("space")) {
    const json& sp = cfg.at("space");
    const long long dim = as_int(field(sp, "dim"), "dim");
    if (dim < 1) throw InputError("dim must be positive");
    const json& fl = field(sp, "filtrations");
    if (!fl.is_array() || fl.size() != 2) throw InputError("exactly two filtrations are required");
    std::array<std::vector<std::vector<RVector>>, 2> gens;
    for (std::size_t i = 0; i < 2; ++i) {
      for (const auto& lvl : fl[i]) {
        std::vector<RVector> vs;
        for (const auto& v : lvl) {
          RVector vec;
          for (const auto& x : v) vec.push_back(as_fraction(x, "vector entry"));
          vs.push_back(std::move(vec));
        }
        gens[i].push_back(std::move(vs));
      }
    }
    space = explicit_space(static_cast<std::size_t>(dim), gens);
  } else if (has_toric(cfg)) {
    const auto s = parse_surface(cfg);
    const long long b = cfg.contains("b") ? as_int(cfg.at("b"), "b") : 1;
    if (b < 1) throw InputError("b must be positive");
    const auto l = parse_divisor(field(cfg, "L"), s) * b;
    const json& fl = field(cfg, "filtrations");
    if (!fl.is_array() || fl.size() != 2) throw InputError("exactly two filtration divisors are required");
    space = monomial_space(l, parse_divisor(fl[0], s), parse_divisor(fl[1], s));
  } else {
    throw InputError("adapted-basis needs an explicit \"space\" or a toric \"L\" with \"filtrations\"");
  }
  const auto basis = adapted_basis(space);
  json mu = json::array(), tails = json::array();
  bool identity = true;
  for (std::size_t i = 0; i < 2; ++i) {
    mu.push_back(mu_sum(space, basis, i));
    tails.push_back(profile_tail_sum(space, i));
    identity = identity && mu.back() == tails.back();
  }
  return json{{"dim", space.dim},       {"profiles", space.profiles}, {"basis", basis_json(basis)},
              {"mu_sums", mu},          {"tail_sums", tails},         {"identity_holds", identity}};
}

json cmd_find_b(Context& c) {
  const json& cfg = c.config;
  const auto s = parse_surface(cfg);
  const auto divisors = parse_divisors(cfg, s);
  std::vector<long long> m = cfg.contains("m") ? as_int_vector(cfg.at("m"), "m")
                                               : std::vector<long long>(divisors.size(), 1);
  if (m.size() != divisors.size()) throw InputError("one multiplicity per divisor is required");
  ToricDivisor l = divisors[0] * 0;
  if (cfg.contains("L")) {
    l = parse_divisor(cfg.at("L"), s);
  } else {
    for (std::size_t i = 0; i < divisors.size(); ++i) l = l + divisors[i] * m[i];
  }
  Rational eps;
  if (c.options.epsilon) {
    eps = parse_fraction(*c.options.epsilon);
  } else if (cfg.contains("epsilon")) {
    eps = as_fraction(cfg.at("epsilon"), "epsilon");
  } else {
    std::vector<long long> mm = m;
    auto cert = certificate_for(intersection_form_of(divisors), mm);
    eps = epsilon_from_certificate(cert);
  }
  const long long cap = positive_option(c, c.options.b_cap, "b_cap", kDefaultBCap);
  const auto found = find_epsilon_b(l, divisors, m, eps, cap);
  c.assumptions.push_back("bL very ample (not checked)");
  json sums = json::array();
  for (const auto& v : found.section_sums) sums.push_back(v.get_str());
  return json{{"b", found.b},
              {"q", found.q},
              {"epsilon", to_fraction_string(eps)},
              {"L", divisor_json(l)},
              {"section_sums", sums},
              {"thresholds", fractions(found.thresholds)},
              {"very_ample_assumed", found.very_ample_assumed}};
}

const char* status_of(int code) {
  switch (code) {
    case kExitOk:
      return "ok";
    case kExitInvalidInput:
      return "invalid-input";
    case kExitSolverFailure:
      return "solver-failure";
    default:
      return "certification-failure";
  }
}

json envelope(const std::string& command, const json& config) {
  return json{{"schema_version", kSchemaVersion},
              {"tool", "nucert"},
              {"tool_version", kToolVersion},
              {"command", command},
              {"input", config}};
}

}  // namespace

RunResult run(const std::string& command, const json& config, const RunOptions& options) {
  RunResult out;
  out.document = envelope(command, config);
  Context ctx{config, options};
  int code = kExitOk;
  try {
    if (!config.is_object()) throw InputError("config must be a JSON object");
    if (command != "verify-certificate" && config.contains("form")) {
      const auto report = validate_form(parse_form(config.at("form")));
      if (!report.ok()) {
        json violations = json::array();
        for (const auto& v : report.violations) violations.push_back(v.message);
        out.document["report"] = violations;
        throw InputError("invalid intersection form: " + report.summary());
      }
    }
    json result;
    if (command == "nu-bound") result = cmd_nu_bound(ctx);
    else if (command == "oracle-nu") result = cmd_oracle_nu(ctx);
    else if (command == "solve-multiplicities") result = cmd_solve(ctx);
    else if (command == "verify-certificate") result = cmd_verify(ctx, code);
    else if (command == "proper-check") result = cmd_proper_check(ctx, code);
    else if (command == "adapted-basis") result = cmd_adapted_basis(ctx);
    else if (command == "find-b") result = cmd_find_b(ctx);
    else throw InputError("unknown command \"" + command + "\"");
    out.document["result"] = result;
  } catch (const InputError& e) {
    code = kExitInvalidInput;
    out.document["error"] = e.what();
  } catch (const json::exception& e) {
    code = kExitInvalidInput;
    out.document["error"] = e.what();
  } catch (const SolverError& e) {
    code = kExitSolverFailure;
    out.document["error"] = e.what();
    out.document["best_residual"] = e.best_residual();
  } catch (const ContractError& e) {
    code = kExitSolverFailure;
    out.document["error"] = e.what();
  } catch (const CertificationError& e) {
    code = kExitCertificationFailure;
    out.document["error"] = e.what();
  }
  out.document["assumptions"] = ctx.assumptions;
  out.document["status"] = status_of(code);
  out.exit_code = code;
  return out;
}

RunResult run_text(const std::string& command, const std::string& config_text, const RunOptions& options) {
  json config;
  try {
    config = json::parse(config_text);
  } catch (const json::parse_error& e) {
    RunResult out;
    out.exit_code = kExitInvalidInput;
    out.document = envelope(command, nullptr);
    out.document["error"] = std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what();
    out.document["assumptions"] = json::array();
    out.document["status"] = status_of(kExitInvalidInput);
    return out;
  }
  return run(command, config, options);
}

std::string render(const json& document) { return document.dump(2) + "\n"; }

}  // namespace nucert
