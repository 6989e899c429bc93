#include "hq/json_io.hpp"

#include "hq/errors.hpp"
#include "hq/parse.hpp"

namespace hq {

namespace {

const std::array<std::string, 2> kXY = {"x", "y"};

template <class Poly>
Json poly_terms(const Poly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json exps = Json::array();
    for (int x : e) exps.push_back(x);
    terms.push_back({{"e", exps}, {"c", c.str()}});
  }
  return terms;
}

template <class Poly>
Poly poly_from_json(const Json& j, const QMode& mode) {
  Poly f(mode);
  for (const auto& t : j.at("terms")) {
    typename Poly::Exponents e{};
    const auto& exps = t.at("e");
    if (exps.size() != e.size()) throw Error(ErrorCode::ParseError, "exponent list of the wrong length");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps[i].get<int>();
    f.add_term(e, parse_scalar(t.at("c").get<std::string>(), mode));
  }
  return f;
}

}  // namespace

Json to_json(const HqElement& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) terms.push_back({{"b", m.b}, {"a", m.a}, {"c", c.str()}});
  return {{"mode", x.mode().name()}, {"text", x.str()}, {"terms", terms}};
}

HqElement element_from_json(const Json& j, const QMode& mode) {
  if (j.contains("mode") && j.at("mode").get<std::string>() != mode.name())
    throw Error(ErrorCode::MixedModes, "element serialized in mode " + j.at("mode").get<std::string>());
  HqElement x(mode);
  for (const auto& t : j.at("terms"))
    x.add_term(t.at("b").get<int>(), t.at("a").get<int>(), parse_scalar(t.at("c").get<std::string>(), mode));
  return x;
}

Json to_json(const BiPoly& f, const std::array<std::string, 2>& names) {
  return {{"text", f.str(names)}, {"terms", poly_terms(f)}};
}

BiPoly bipoly_from_json(const Json& j, const QMode& mode) { return poly_from_json<BiPoly>(j, mode); }

Json to_json(const TriPoly& f) { return {{"text", f.str(kTriPolyNames)}, {"terms", poly_terms(f)}}; }

TriPoly tripoly_from_json(const Json& j, const QMode& mode) { return poly_from_json<TriPoly>(j, mode); }

Json to_json(const LaurentVector& v) {
  Json coeffs = Json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(c.str());
  return {{"text", v.str()}, {"lo", v.lo()}, {"coeffs", coeffs}};
}

LaurentVector laurent_from_json(const Json& j, const QMode& mode) {
  std::vector<Scalar> c;
  for (const auto& s : j.at("coeffs")) c.push_back(parse_scalar(s.get<std::string>(), mode));
  return LaurentVector(mode, j.at("lo").get<long>(), std::move(c));
}

Json to_json(const CentralBiPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"e", {e[0], e[1]}}, {"c", to_json(c)}});
  return {{"text", f.str()}, {"terms", terms}};
}

CentralBiPoly central_from_json(const Json& j, const QMode& mode) {
  CentralBiPoly f(mode);
  for (const auto& t : j.at("terms")) {
    const auto& e = t.at("e");
    f.add_term({e.at(0).get<int>(), e.at(1).get<int>()}, element_from_json(t.at("c"), mode));
  }
  return f;
}

Json to_json(const EliminantReport& r) {
  const auto& meta = r.meta;
  Json matrix = Json::array();
  for (const auto& row : r.matrix.entries) {
    Json jr = Json::array();
    for (const auto& e : row) jr.push_back(to_json(e));
    matrix.push_back(jr);
  }
  Json curves = Json::array();
  for (const auto& c : r.curves) curves.push_back(to_json(c, kCurveNames));

  Json out;
  out["P"] = to_json(r.matrix.p_shifts.front());
  out["Q"] = to_json(r.matrix.q_shifts.front());
  out["m"] = meta.m;
  out["n"] = meta.n;
  out["matrix"] = matrix;
  out["delta"] = to_json(r.delta);
  out["curves"] = curves;
  out["nonzero"] = r.nonzero;
  out["s"] = meta.s;
  out["t"] = meta.t;
  out["lambda_degree"] = meta.lambda_degree;
  out["mu_degree"] = meta.mu_degree;
  out["m_degree"] = meta.m_degree;
  out["m_degree_within_s"] = meta.m_degree_within_s;
  out["leading_checks"] = {
      {"lambda",
       {{"actual", to_json(meta.lambda_leading)},
        {"predicted", to_json(meta.lambda_leading_predicted)},
        {"match", meta.lambda_leading_matches}}},
      {"mu",
       {{"actual", to_json(meta.mu_leading)},
        {"predicted", to_json(meta.mu_leading_predicted)},
        {"sign_correction", meta.mu_sign_correction},
        {"match", meta.mu_leading_matches}}},
  };
  if (r.delta.mode().kind() == QMode::Kind::Symbolic) {
    auto d = max_q_degree(r.delta);
    out["q_degree"] = {{"max", d ? Json(*d) : Json(nullptr)}, {"within_t", d && *d <= meta.t}};
  }
  out["annihilation"] = r.annihilation;
  return out;
}

Json to_json(const SearchResult& r) {
  return {{"polynomial", to_json(r.f, kXY)},
          {"bounds", {r.dx, r.dy}},
          {"kernel_dimension", r.kernel_dimension},
          {"stages_tried", r.stages_tried},
          {"verified", r.verified}};
}

Json to_json(const CentralSearchResult& r) {
  return {{"polynomial", to_json(r.f)},
          {"bounds", {r.dx, r.dy}},
          {"central_degree", r.central_degree},
          {"kernel_dimension", r.kernel_dimension},
          {"verified", r.verified}};
}

}  // namespace hq
