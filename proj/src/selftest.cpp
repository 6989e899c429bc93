#include "hq/selftest.hpp"

#include <optional>
#include <random>

#include "hq/annihilator.hpp"
#include "hq/eliminant.hpp"
#include "hq/errors.hpp"
#include "hq/laurent.hpp"
#include "hq/parse.hpp"

namespace hq {

namespace {

struct Poly1 {
  std::string text;
  std::vector<long> coeffs;  // ascending
};

HqElement substitute(const Poly1& f, const HqElement& c) {
  const QMode& mode = c.mode();
  HqElement out(mode), p = HqElement::identity(mode);
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    if (k > 0) p = normal_product(p, c);
    if (f.coeffs[k] != 0) out += mode.from_int(f.coeffs[k]) * p;
  }
  return out;
}

std::vector<QMode> theorem_modes(bool full) {
  if (!full) return {QMode::rational(2)};
  return {QMode::rational(2), QMode::rational(mpq_class(5, 3)), QMode::symbolic()};
}

std::string count_str(std::size_t n, const std::string& what) { return std::to_string(n) + " " + what; }

CriterionOutcome fail(const std::string& detail) { return {false, detail}; }

// 1 ------------------------------------------------------------------------

CriterionOutcome defining_relation(bool full) {
  const int top = full ? 5 : 3;
  std::size_t products = 0;
  for (const auto& mode : {QMode::rational(2), QMode::rational(1), QMode::symbolic(), QMode::root_of_unity(2)}) {
    const HqElement a = HqElement::generator_A(mode), b = HqElement::generator_B(mode);
    if (normal_product(a, b) - mode.q() * normal_product(b, a) != HqElement::identity(mode))
      return fail("AB - qBA != I in mode " + mode.name());
    for (int b1 = 0; b1 <= top; ++b1)
      for (int a1 = 0; a1 <= top; ++a1)
        for (int b2 = 0; b2 <= top; ++b2)
          for (int a2 = 0; a2 <= top; ++a2) {
            HqElement x = HqElement::monomial(mode, b1, a1, mode.one());
            HqElement y = HqElement::monomial(mode, b2, a2, mode.one());
            if (normal_product(x, y) != rewrite_oracle_product(x, y))
              return fail("mismatch for " + x.str() + " * " + y.str() + " in mode " + mode.name());
            ++products;
          }
  }
  return {true, count_str(products, "monomial products agree with the rewrite oracle in 4 modes; AB - qBA = I")};
}

// 2 ------------------------------------------------------------------------

CriterionOutcome golden_case(bool) {
  for (const auto& mode : {QMode::rational(2), QMode::rational(1), QMode::rational(mpq_class(5, 3)), QMode::symbolic()}) {
    const HqElement a = HqElement::generator_A(mode);
    const EliminantReport r = run_eliminant(power(a, 2), power(a, 3));
    const TriPoly lambda = TriPoly::variable(mode, kVarLambda), mu = TriPoly::variable(mode, kVarMu);
    const TriPoly one = TriPoly::constant(mode, mode.one());
    const std::string where = " in mode " + mode.name();
    if (r.delta != mu * mu - lambda * lambda * lambda) return fail("delta = " + r.delta.str(kTriPolyNames) + where);
    if (r.meta.lambda_degree != 3 || r.meta.mu_degree != 2) return fail("wrong lambda/mu degrees" + where);
    if (r.meta.lambda_leading != -one || r.meta.mu_leading != one) return fail("wrong leading coefficients" + where);
    if (!r.meta.lambda_leading_matches || !r.meta.mu_leading_matches) return fail("leading formula mismatch" + where);
    if (!r.all_annihilate()) return fail("delta_0(P, Q) != 0" + where);
  }
  return {true, "delta = mu^2 - lambda^3, leading coefficients -1 and 1, delta_0(A^2, A^3) = 0 in 4 modes"};
}

// 3 ------------------------------------------------------------------------

CriterionOutcome theorem_suite(bool full) {
  std::size_t pairs = 0;
  for (const auto& mode : theorem_modes(full)) {
    for (const auto& pair : theorem_catalog(mode, full)) {
      const std::string where = " for " + pair.name + " in mode " + mode.name();
      if (!commutes(pair.p, pair.q)) return fail("pair does not commute" + where);
      const EliminantReport r = run_eliminant(pair.p, pair.q);
      if (r.delta.is_zero()) return fail("delta = 0" + where);
      if (r.meta.lambda_degree != r.meta.n || r.meta.mu_degree != r.meta.m) return fail("degree mismatch" + where);
      if (!r.meta.lambda_leading_matches || !r.meta.mu_leading_matches)
        return fail("leading coefficient mismatch" + where);
      if (!r.meta.m_degree_within_s) return fail("M-degree exceeds s" + where);
      if (!r.all_annihilate()) return fail("some delta_i(P, Q) != 0" + where);
      ++pairs;
    }
  }
  return {true, count_str(pairs, "pair/mode combinations satisfy every eliminant property")};
}

// 4 ------------------------------------------------------------------------

CriterionOutcome q_degree_bound(bool full) {
  const QMode s = QMode::symbolic();
  std::size_t pairs = 0;
  for (const auto& pair : theorem_catalog(s, full)) {
    const EliminantReport r = run_eliminant(pair.p, pair.q);
    const auto d = max_q_degree(r.delta);
    if (!d) return fail("a coefficient is not an integer polynomial in q for " + pair.name);
    if (*d > r.meta.t)
      return fail("q-degree " + std::to_string(*d) + " > t = " + std::to_string(r.meta.t) + " for " + pair.name);
    ++pairs;
  }
  return {true, count_str(pairs, "symbolic pairs have integer q-polynomial coefficients of q-degree <= t")};
}

// 5 ------------------------------------------------------------------------

CriterionOutcome search_soundness(bool full) {
  std::size_t pairs = 0;
  SearchConfig cfg;
  cfg.max_dx = cfg.max_dy = 6;
  for (const auto& mode : theorem_modes(full)) {
    for (const auto& pair : theorem_catalog(mode, full)) {
      const std::string where = " for " + pair.name + " in mode " + mode.name();
      std::optional<SearchResult> res;
      try {
        res = search_scalar_annihilator(pair.p, pair.q, cfg);
      } catch (const Error& e) {
        return fail(std::string(e.what()) + where);
      }
      if (res->f.is_zero() || !res->verified || !eval_bipoly(res->f, pair.p, pair.q).is_zero())
        return fail("search result does not annihilate" + where);
      if (!run_eliminant(pair.p, pair.q).all_annihilate()) return fail("eliminant curve does not annihilate" + where);
      ++pairs;
    }
  }
  return {true, count_str(pairs, "pair/mode combinations: searched F and eliminant curves both annihilate")};
}

// 6 ------------------------------------------------------------------------

CriterionOutcome torsion_dichotomy(bool) {
  const QMode m1 = QMode::rational(-1);
  const HqElement a2 = power(HqElement::generator_A(m1), 2), b2 = power(HqElement::generator_B(m1), 2);
  if (!is_central(a2) || !is_central(b2)) return fail("A^2 or B^2 is not central at q = -1");
  SearchConfig cfg;
  cfg.max_dx = cfg.max_dy = 4;
  try {
    search_scalar_annihilator(a2, b2, cfg);
    return fail("scalar search found a relation for (A^2, B^2)");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegreeCapExceeded) return fail(e.what());
  }
  const CentralSearchResult r = search_central_annihilator(a2, b2);
  if (r.f.is_zero() || !r.verified || !r.f.evaluate(a2, b2).is_zero()) return fail("central relation not verified");
  for (const auto& [e, c] : r.f.terms()) {
    if (!is_central(c)) return fail("coefficient " + c.str() + " is not central");
    for (const auto& [mono, s] : c.terms())
      if (mono.a % 2 != 0 || mono.b % 2 != 0) return fail("coefficient " + c.str() + " leaves K[A^2, B^2]");
  }
  return {true, "no scalar relation up to (4, 4); central relation " + r.f.str() + " verified"};
}

// 7 ------------------------------------------------------------------------

HqElement random_sparse(std::mt19937& rng, const QMode& mode) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  HqElement x(mode);
  const int terms = pick(1, 3);
  for (int i = 0; i < terms; ++i) x.add_term(pick(0, 3), pick(0, 3), mode.from_int(pick(-3, 3)));
  return x;
}

CriterionOutcome representation(bool full) {
  const QMode s = QMode::symbolic();
  const LaurentVector t3 = LaurentVector::monomial(s, 3);
  if (apply_Dq(t3) != (s.one() + s.q() + s.q_power(2)) * LaurentVector::monomial(s, 2)) return fail("D_q(t^3) wrong");
  if (apply_M(LaurentVector::monomial(s, -2)) != LaurentVector::monomial(s, -1)) return fail("M(t^-2) wrong");

  const int trials = full ? 200 : 20;
  std::size_t checks = 0;
  std::mt19937 rng(20240611);
  for (const auto& mode : {QMode::rational(2), QMode::rational(1), QMode::rational(mpq_class(5, 3)),
                           QMode::rational(-1), QMode::symbolic(), QMode::root_of_unity(3), QMode::root_of_unity(6)}) {
    for (int i = 0; i < trials; ++i) {
      const HqElement x = random_sparse(rng, mode), y = random_sparse(rng, mode);
      const long n = std::uniform_int_distribution<long>(-5, 5)(rng);
      if (!homomorphism_check(x, y, LaurentVector::monomial(mode, n)))
        return fail("homomorphism fails for X = " + x.str() + ", Y = " + y.str() + " in mode " + mode.name());
      ++checks;
    }
  }
  for (const auto& mode : {QMode::rational(2), QMode::symbolic()}) {
    const HqElement c = normal_product(HqElement::generator_B(mode), HqElement::generator_A(mode));
    for (long n = -5; n <= 5; ++n) {
      const Scalar l0 = q_integer(n, mode);
      if (!joint_eigen_demo(c, normal_product(c, c), l0, l0 * l0, LaurentVector::monomial(mode, n)))
        return fail("joint eigenvector demo fails for t^" + std::to_string(n) + " in mode " + mode.name());
    }
  }
  return {true, count_str(checks, "homomorphism checks; D_q, M definitions and (BA, (BA)^2) eigen demo hold")};
}

// 8 ------------------------------------------------------------------------

CriterionOutcome classical(bool) {
  const QMode one = QMode::rational(1);
  const HqElement a = HqElement::generator_A(one), b = HqElement::generator_B(one);
  const HqElement c = normal_product(b, a) + a + b;
  const EliminantMatrix mat = build_eliminant_matrix(power(c, 3), power(c, 2));
  if (mat.size() != 5 || mat.m != 3 || mat.n != 2) return fail("matrix is not 5x5 with m = 3, n = 2");
  const bool zero_at[5][5] = {{false, false, false, false, true},
                              {false, false, false, false, false},
                              {false, false, false, true, true},
                              {false, false, false, false, true},
                              {false, false, false, false, false}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (mat.entries[i][j].is_zero() != zero_at[i][j])
        return fail("zero pattern differs at row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1));
  const EliminantReport r = run_eliminant(power(a, 2), power(a, 3));
  if (r.curves.size() != 1 || r.curves[0].str(kCurveNames) != "-lambda^3 + mu^2")
    return fail("classical curve is " + r.delta.str(kTriPolyNames));
  return {true, "5x5 zero pattern for (m, n) = (3, 2) and delta_0 = mu^2 - lambda^3 at q = 1"};
}

// 9 ------------------------------------------------------------------------

Json run_range(bool full, int last_id) {
  Json list = Json::array();
  for (const auto& c : acceptance_criteria()) {
    if (c.id > last_id) break;
    CriterionOutcome o;
    try {
      o = c.run(full);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    list.push_back({{"id", c.id}, {"title", c.title}, {"pass", o.pass}, {"detail", o.detail}});
  }
  return list;
}

CriterionOutcome determinism(bool full) {
  const std::string size = full ? "full" : "reduced";
  const std::string first = run_range(full, 8).dump(), second = run_range(full, 8).dump();
  if (first != second) return fail("two " + size + " runs of criteria 1-8 serialize differently");
  return {true, "two " + size + " runs of criteria 1-8 serialize to identical bytes"};
}

}  // namespace

std::vector<CatalogPair> theorem_catalog(const QMode& mode, bool full) {
  const HqElement a = HqElement::generator_A(mode), b = HqElement::generator_B(mode);
  const HqElement ba = normal_product(b, a);
  struct Generator {
    std::string text;
    HqElement c;
    std::vector<std::pair<Poly1, Poly1>> fg;
  };
  const std::vector<Generator> gens = {
      {"A", a, {{{"x", {0, 1}}, {"x^2 + 1", {1, 0, 1}}}, {{"x^2", {0, 0, 1}}, {"x^3", {0, 0, 0, 1}}},
                {{"x^2 + x", {0, 1, 1}}, {"x^3", {0, 0, 0, 1}}}}},
      {"B*A", ba, {{{"x", {0, 1}}, {"x^2", {0, 0, 1}}}, {{"x^2 + x", {0, 1, 1}}, {"x^3", {0, 0, 0, 1}}},
                   {{"x + 1", {1, 1}}, {"x^3 - x", {0, -1, 0, 1}}}}},
      {"A + B*A^2", a + normal_product(b, power(a, 2)),
       {{{"x", {0, 1}}, {"x^2", {0, 0, 1}}}, {{"x^2", {0, 0, 1}}, {"x^3 + x", {0, 1, 0, 1}}},
        {{"x + 2", {2, 1}}, {"x^2 - x", {0, -1, 1}}}}},
      {"(B^2 + 1)*A", normal_product(power(b, 2) + HqElement::identity(mode), a),
       {{{"x", {0, 1}}, {"x^2 + x", {0, 1, 1}}}, {{"x^2", {0, 0, 1}}, {"x^3", {0, 0, 0, 1}}},
        {{"x + 1", {1, 1}}, {"x^3", {0, 0, 0, 1}}}}},
  };
  std::vector<CatalogPair> out;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    if (!full && gi >= 2) break;
    const auto& g = gens[gi];
    for (std::size_t k = 0; k < g.fg.size(); ++k) {
      if (!full && k >= 2) break;
      const auto& [f, h] = g.fg[k];
      HqElement p = substitute(f, g.c), q = substitute(h, g.c);
      if (!commutes(p, q)) continue;
      out.push_back({"C = " + g.text + ", f = " + f.text + ", g = " + h.text, std::move(p), std::move(q)});
    }
  }
  return out;
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list = {
      {1, "defining relation and rewrite oracle", 10, defining_relation},
      {2, "eliminant golden case A^2, A^3", 1, golden_case},
      {3, "eliminant theorem suite on the catalog", 300, theorem_suite},
      {4, "q-degree bound in symbolic mode", 0, q_degree_bound},
      {5, "search soundness and cross-validation", 0, search_soundness},
      {6, "torsion dichotomy at q = -1", 60, torsion_dichotomy},
      {7, "Laurent representation suite", 0, representation},
      {8, "classical specialization at q = 1", 0, classical},
      {9, "determinism of repeated runs", 0, determinism},
  };
  return list;
}

Json selftest_report(bool full) {
  Json list = run_range(full, 9);
  bool pass = true;
  for (const auto& c : list) pass = pass && c.at("pass").get<bool>();
  return {{"criteria", list}, {"pass", pass}};
}

}  // namespace hq
