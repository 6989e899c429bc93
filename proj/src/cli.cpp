#include "hq/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hq/errors.hpp"
#include "hq/parse.hpp"
#include "hq/selftest.hpp"

namespace hq {

namespace {

const std::array<std::string, 2> kXY = {"x", "y"};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::QNotAllowedInRationalMode:
    case ErrorCode::NegativeExponent:
    case ErrorCode::InvalidMode:
    case ErrorCode::MixedDomains:
    case ErrorCode::MixedModes:
    case ErrorCode::DivisionByZero: return 2;
    default: return 1;
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void merge(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

struct Inputs {
  std::string p, q, f, expr, element, vector;
  bool central = false;
  int max_dx = 6, max_dy = 6;
  int central_cap = -1;
};

CommandResult normalize(const QMode& mode, const Inputs& in) {
  HqElement x = parse_element(in.expr, mode);
  CommandResult r;
  r.machine["input"] = in.expr;
  r.machine["element"] = to_json(x);
  r.machine["order"] = order(x) ? Json(*order(x)) : Json(nullptr);
  r.machine["degree"] = degree(x) ? Json(*degree(x)) : Json(nullptr);
  r.human = x.str() + "\n";
  return r;
}

CommandResult commute(const QMode& mode, const Inputs& in) {
  HqElement p = parse_element(in.p, mode), q = parse_element(in.q, mode);
  HqElement c = commutator(p, q);
  CommandResult r;
  r.machine["P"] = to_json(p);
  r.machine["Q"] = to_json(q);
  r.machine["commutator"] = to_json(c);
  r.machine["commute"] = c.is_zero();
  r.human = "commute: " + yes_no(c.is_zero()) + "\n";
  if (!c.is_zero()) r.human += "[P, Q] = " + c.str() + "\n";
  r.exit_code = c.is_zero() ? 0 : 1;
  return r;
}

CommandResult eliminant(const QMode& mode, const Inputs& in) {
  HqElement p = parse_element(in.p, mode), q = parse_element(in.q, mode);
  EliminantReport rep = run_eliminant(p, q);
  const auto& meta = rep.meta;
  CommandResult r;
  merge(r.machine, to_json(rep));

  std::ostringstream h;
  h << "delta: " << rep.delta.str(kTriPolyNames) << "\n";
  for (std::size_t i = 0; i < rep.curves.size(); ++i)
    h << "delta_" << i << ": " << rep.curves[i].str(kCurveNames) << "\n";
  h << "s = " << meta.s << ", t = " << meta.t << ", M-degree " << meta.m_degree << "\n";
  h << "lambda-degree " << meta.lambda_degree << " (n = " << meta.n
    << "), leading coefficient " << meta.lambda_leading.str(kTriPolyNames) << ", predicted "
    << meta.lambda_leading_predicted.str(kTriPolyNames) << ": " << (meta.lambda_leading_matches ? "match" : "MISMATCH")
    << "\n";
  h << "mu-degree " << meta.mu_degree << " (m = " << meta.m << "), leading coefficient "
    << meta.mu_leading.str(kTriPolyNames) << ", predicted " << meta.mu_leading_predicted.str(kTriPolyNames) << ": "
    << (meta.mu_leading_matches ? "match" : "MISMATCH") << "\n";
  bool ok = !rep.delta.is_zero() && meta.lambda_leading_matches && meta.mu_leading_matches && meta.m_degree_within_s &&
            rep.all_annihilate();
  if (mode.kind() == QMode::Kind::Symbolic) {
    auto d = max_q_degree(rep.delta);
    if (d)
      h << "q-degree of coefficients: " << *d << (*d <= meta.t ? " <= t" : " > t") << "\n";
    else
      h << "q-degree of coefficients: not all coefficients are integer polynomials in q\n";
    ok = ok && d && *d <= meta.t;
  }
  h << "annihilation: " << (rep.all_annihilate() ? "delta_i(P, Q) = 0 for every i" : "FAILED") << "\n";
  r.human = h.str();
  r.exit_code = ok ? 0 : 1;
  return r;
}

CommandResult annihilate(const QMode& mode, const Inputs& in) {
  HqElement p = parse_element(in.p, mode), q = parse_element(in.q, mode);
  SearchConfig cfg;
  cfg.max_dx = in.max_dx;
  cfg.max_dy = in.max_dy;
  CommandResult r;
  r.machine["P"] = to_json(p);
  r.machine["Q"] = to_json(q);
  r.machine["central"] = in.central;
  std::ostringstream h;
  bool verified = false;
  if (in.central) {
    CentralSearchResult res = search_central_annihilator(p, q, cfg, in.central_cap);
    merge(r.machine, to_json(res));
    h << "F(x, y) = " << res.f.str() << "\n";
    h << "found at bounds (" << res.dx << ", " << res.dy << ") with central degree " << res.central_degree
      << ", kernel dimension " << res.kernel_dimension << "\n";
    verified = res.verified;
  } else {
    SearchResult res = search_scalar_annihilator(p, q, cfg);
    merge(r.machine, to_json(res));
    h << "F(x, y) = " << res.f.str(kXY) << "\n";
    h << "found at bounds (" << res.dx << ", " << res.dy << "), kernel dimension " << res.kernel_dimension << "\n";
    verified = res.verified;
  }
  h << "verified: " << yes_no(verified) << "\n";
  r.human = h.str();
  r.exit_code = verified ? 0 : 1;
  return r;
}

CommandResult verify(const QMode& mode, const Inputs& in) {
  HqElement p = parse_element(in.p, mode), q = parse_element(in.q, mode);
  BiPoly f = parse_bipoly(in.f, mode);
  HqElement value = eval_bipoly(f, p, q);
  CommandResult r;
  r.machine["P"] = to_json(p);
  r.machine["Q"] = to_json(q);
  r.machine["F"] = to_json(f, kXY);
  r.machine["value"] = to_json(value);
  r.machine["annihilates"] = value.is_zero();
  r.human = "F(P, Q) = " + value.str() + "\nannihilates: " + yes_no(value.is_zero()) + "\n";
  r.exit_code = value.is_zero() ? 0 : 1;
  return r;
}

CommandResult rep_apply(const QMode& mode, const Inputs& in) {
  HqElement x = parse_element(in.element, mode);
  LaurentVector v = parse_laurent(in.vector, mode);
  Action a = apply_element(x, v);
  CommandResult r;
  r.machine["element"] = to_json(x);
  r.machine["vector"] = to_json(v);
  r.machine["result"] = to_json(a.result);
  r.machine["report"] = {{"input_window", {a.report.input_lo, a.report.input_hi}},
                         {"output_window", {a.report.output_lo, a.report.output_hi}},
                         {"boundary_loss", a.report.boundary_loss}};
  r.human = a.result.str() + "\n";
  return r;
}

CommandResult selftest(bool full) {
  Json report = selftest_report(full);
  CommandResult r;
  merge(r.machine, report);
  std::ostringstream h;
  for (const auto& c : report.at("criteria")) {
    h << "criterion " << c.at("id").get<int>() << " " << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "  "
      << c.at("title").get<std::string>() << ": " << c.at("detail").get<std::string>() << "\n";
  }
  r.human = h.str();
  r.exit_code = report.at("pass").get<bool>() ? 0 : 1;
  return r;
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations in the q-deformed Heisenberg algebra AB - qBA = I", "hq"};
  app.require_subcommand(1);
  std::string q_text = "symbolic", json_path;
  bool quiet = false;
  Inputs in;
  app.add_option("--q", q_text, "q: a nonzero rational (2, 5/3, -1), 'symbolic', or 'root:<d>'")->capture_default_str();
  app.add_option("--json", json_path, "write the JSON report to a file, or '-' for standard output");
  app.add_flag("--quiet", quiet, "suppress the human-readable output");

  auto* normalize_cmd = app.add_subcommand("normalize", "print the normal form sum c_ij B^i A^j")->fallthrough();
  normalize_cmd->add_option("expr,--expr", in.expr, "algebra element")->required();

  auto* commute_cmd = app.add_subcommand("commute", "test whether P and Q commute")->fallthrough();
  commute_cmd->add_option("--P", in.p)->required();
  commute_cmd->add_option("--Q", in.q)->required();

  auto* elim_cmd = app.add_subcommand("eliminant", "eliminant determinant and annihilating curves")->fallthrough();
  elim_cmd->add_option("--P", in.p)->required();
  elim_cmd->add_option("--Q", in.q)->required();

  auto* ann_cmd = app.add_subcommand("annihilate", "search for F with F(P, Q) = 0")->fallthrough();
  ann_cmd->add_option("--P", in.p)->required();
  ann_cmd->add_option("--Q", in.q)->required();
  ann_cmd->add_flag("--central", in.central, "allow coefficients in the center (q a root of unity)");
  ann_cmd->add_option("--max-dx", in.max_dx, "largest x-degree")->capture_default_str()->check(CLI::NonNegativeNumber);
  ann_cmd->add_option("--max-dy", in.max_dy, "largest y-degree")->capture_default_str()->check(CLI::NonNegativeNumber);
  ann_cmd->add_option("--central-cap", in.central_cap, "largest r, s in (A^d)^r (B^d)^s; default d")
      ->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand("verify", "evaluate F(P, Q) and test for zero")->fallthrough();
  verify_cmd->add_option("--P", in.p)->required();
  verify_cmd->add_option("--Q", in.q)->required();
  verify_cmd->add_option("--F", in.f, "polynomial in x, y")->required();

  auto* rep_cmd = app.add_subcommand("rep", "Laurent representation")->fallthrough()->require_subcommand(1);
  auto* apply_cmd = rep_cmd->add_subcommand("apply", "apply an element to a Laurent polynomial")->fallthrough();
  apply_cmd->add_option("--element", in.element)->required();
  apply_cmd->add_option("--vector", in.vector, "e.g. 't^-2 + 3*t^5'")->required();

  bool full = false;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance checks at reduced size")->fallthrough();
  selftest_cmd->add_flag("--full", full, "run at full size");

  CommandResult result;
  std::string command;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.human = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.diagnostic = std::string("error: ") + e.what() + "\n\n" + app.help();
    result.machine = {{"error", {{"code", "UsageError"}, {"message", e.what()}}}};
    result.json_path = json_path;
    return result;
  }

  if (normalize_cmd->parsed()) command = "normalize";
  else if (commute_cmd->parsed()) command = "commute";
  else if (elim_cmd->parsed()) command = "eliminant";
  else if (ann_cmd->parsed()) command = "annihilate";
  else if (verify_cmd->parsed()) command = "verify";
  else if (apply_cmd->parsed()) command = "rep apply";
  else if (selftest_cmd->parsed()) command = "selftest";

  Json head = {{"command", command}};
  try {
    if (command == "selftest") {
      result = selftest(full);
    } else {
      const QMode mode = parse_mode(q_text);
      head["mode"] = mode.name();
      if (command == "normalize") result = normalize(mode, in);
      else if (command == "commute") result = commute(mode, in);
      else if (command == "eliminant") result = eliminant(mode, in);
      else if (command == "annihilate") result = annihilate(mode, in);
      else if (command == "verify") result = verify(mode, in);
      else result = rep_apply(mode, in);
    }
    merge(head, result.machine);
    result.machine = std::move(head);
  } catch (const Error& e) {
    result = CommandResult{};
    result.exit_code = exit_code_for(e.code());
    result.diagnostic = std::string("error: ") + e.what() + "\n";
    head["error"] = {{"code", error_name(e.code())}, {"message", e.what()}};
    result.machine = std::move(head);
  }
  result.json_path = json_path;
  result.quiet = quiet;
  return result;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandResult r = dispatch(args);
  if (!r.json_path.empty()) {
    const std::string doc = r.machine.dump(2) + "\n";
    if (r.json_path == "-") {
      out << doc;
    } else {
      std::ofstream f(r.json_path, std::ios::binary);
      if (!(f << doc)) {
        err << "error: cannot write " << r.json_path << "\n";
        return 2;
      }
    }
  }
  if (!r.quiet && r.json_path != "-") out << r.human;
  err << r.diagnostic;
  return r.exit_code;
}

}  // namespace hq
