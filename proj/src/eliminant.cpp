#include "hq/eliminant.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "hq/errors.hpp"

namespace hq {

namespace {

TriPoly lambda_poly(const QMode& mode) { return TriPoly::variable(mode, kVarLambda); }
TriPoly mu_poly(const QMode& mode) { return TriPoly::variable(mode, kVarMu); }

// p(q^k M) for p(X) = sum_i a_i X^i.
TriPoly shifted_in_m(const ScalarPoly& p, int k) {
  const QMode& mode = p.mode();
  TriPoly r(mode);
  for (int i = 0; i <= p.degree(); ++i) {
    if (p[i].is_zero()) continue;
    r.add_term({i, 0, 0}, p[i] * mode.q_power(static_cast<long>(k) * i));
  }
  return r;
}

void add_element_row(std::vector<TriPoly>& row, const HqElement& x) {
  for (const auto& [mono, c] : x.terms()) row[mono.a].add_term({mono.b, 0, 0}, c);
}

}  // namespace

HqElement shift_compose(const HqElement& p, int k) {
  if (k < 0) throw Error(ErrorCode::NegativeExponent, "shift must be nonnegative");
  HqElement r = p;
  const HqElement a = HqElement::generator_A(p.mode());
  for (int i = 0; i < k; ++i) r = normal_product(a, r);
  return r;
}

EliminantMatrix build_eliminant_matrix(const HqElement& p, const HqElement& q) {
  p.check_same_mode(q);
  const QMode& mode = p.mode();
  if (!mode.is_free_type())
    throw Error(ErrorCode::TorsionModeUnsupported, "the eliminant construction needs q of free type, got " + mode.name());
  const auto m = order(p), n = order(q);
  if (!m || *m < 1 || !n || *n < 1) throw Error(ErrorCode::OrderZeroOperand, "both operands must have order at least one");
  if (!commutes(p, q)) throw Error(ErrorCode::NonCommutingPair, "P and Q do not commute");

  EliminantMatrix mat;
  mat.m = *m;
  mat.n = *n;
  const int size = mat.size();
  mat.entries.assign(size, std::vector<TriPoly>(size, TriPoly(mode)));

  HqElement shifted = p;
  for (int k = 0; k < mat.n; ++k) {
    if (k > 0) shifted = normal_product(HqElement::generator_A(mode), shifted);
    mat.p_shifts.push_back(shifted);
    add_element_row(mat.entries[k], shifted);
    mat.entries[k][k] -= lambda_poly(mode);
  }
  shifted = q;
  for (int l = 0; l < mat.m; ++l) {
    if (l > 0) shifted = normal_product(HqElement::generator_A(mode), shifted);
    mat.q_shifts.push_back(shifted);
    add_element_row(mat.entries[mat.n + l], shifted);
    mat.entries[mat.n + l][l] -= mu_poly(mode);
  }
  return mat;
}

TriPoly determinant_bareiss(const PolyMatrix& input) {
  const std::size_t size = input.size();
  if (size == 0) throw std::invalid_argument("determinant of an empty matrix");
  const QMode& mode = input[0][0].mode();
  PolyMatrix a = input;
  bool negate = false;
  TriPoly prev = TriPoly::constant(mode, mode.one());
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t i = k + 1;
      while (i < size && a[i][k].is_zero()) ++i;
      if (i == size) return TriPoly(mode);
      std::swap(a[i], a[k]);
      negate = !negate;
    }
    const bool divide = !(prev.size() == 1 && prev.terms().begin()->first == std::array<int, 3>{} &&
                          prev.terms().begin()->second.is_one());
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        TriPoly v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = divide ? v.exact_divide(prev) : std::move(v);
      }
      a[i][k] = TriPoly(mode);
    }
    prev = a[k][k];
  }
  TriPoly det = a[size - 1][size - 1];
  return negate ? -det : det;
}

TriPoly determinant_cofactor(const PolyMatrix& a) {
  const std::size_t size = a.size();
  if (size == 0) throw std::invalid_argument("determinant of an empty matrix");
  if (size > 20) throw std::invalid_argument("cofactor expansion limited to 20 columns");
  const QMode& mode = a[0][0].mode();
  std::map<unsigned, TriPoly> memo;
  // Determinant of the rows popcount(used).. against the unused columns.
  auto minor = [&](auto&& self, unsigned used) -> TriPoly {
    const auto row = static_cast<std::size_t>(__builtin_popcount(used));
    if (row == size) return TriPoly::constant(mode, mode.one());
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    TriPoly acc(mode);
    int position = 0;
    for (std::size_t j = 0; j < size; ++j) {
      if (used & (1u << j)) continue;
      if (!a[row][j].is_zero()) {
        TriPoly term = a[row][j] * self(self, used | (1u << j));
        if (position % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      ++position;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(minor, 0u);
}

TriPoly eliminant_determinant(const EliminantMatrix& mat) { return determinant_bareiss(mat.entries); }

TheoremMetadata theorem_metadata(const HqElement& p, const HqElement& q, const TriPoly& delta) {
  const QMode& mode = p.mode();
  TheoremMetadata meta(mode);
  meta.m = order(p).value_or(0);
  meta.n = order(q).value_or(0);
  const int dp = coefficient_degree(p).value_or(0);
  const int dq = coefficient_degree(q).value_or(0);
  meta.s = meta.n * dp + meta.m * dq;
  meta.t = meta.n * (meta.n - 1) / 2 * dp + meta.m * (meta.m - 1) / 2 * dq;
  meta.lambda_degree = delta.degree_in(kVarLambda);
  meta.mu_degree = delta.degree_in(kVarMu);
  meta.m_degree = delta.degree_in(kVarM);
  meta.m_degree_within_s = meta.m_degree <= meta.s;

  meta.lambda_leading = delta.coefficient_of(kVarLambda, meta.n);
  meta.mu_leading = delta.coefficient_of(kVarMu, meta.m);

  const ScalarPoly q_lead = coefficient_poly(q, meta.n);
  TriPoly lambda_pred = TriPoly::constant(mode, meta.n % 2 == 0 ? mode.one() : -mode.one());
  for (int k = 0; k < meta.m; ++k) lambda_pred = lambda_pred * shifted_in_m(q_lead, k);
  meta.lambda_leading_predicted = lambda_pred;

  const ScalarPoly p_lead = coefficient_poly(p, meta.m);
  meta.mu_sign_correction = (meta.m * meta.n) % 2 == 0 ? 1 : -1;
  const bool mu_negative = (meta.m % 2 == 1) != (meta.mu_sign_correction < 0);
  TriPoly mu_pred = TriPoly::constant(mode, mu_negative ? -mode.one() : mode.one());
  for (int k = 0; k < meta.n; ++k) mu_pred = mu_pred * shifted_in_m(p_lead, k);
  meta.mu_leading_predicted = mu_pred;

  meta.lambda_leading_matches = meta.lambda_degree == meta.n && meta.lambda_leading == meta.lambda_leading_predicted;
  meta.mu_leading_matches = meta.mu_degree == meta.m && meta.mu_leading == meta.mu_leading_predicted;
  return meta;
}

std::vector<BiPoly> extract_curves(const TriPoly& delta) {
  const int top = delta.degree_in(kVarM);
  std::vector<BiPoly> curves(top < 0 ? 0 : top + 1, BiPoly(delta.mode()));
  for (const auto& [e, c] : delta.terms()) curves[e[kVarM]].add_term({e[kVarLambda], e[kVarMu]}, c);
  return curves;
}

std::vector<bool> verify_annihilation(const HqElement& p, const HqElement& q, const std::vector<BiPoly>& curves) {
  p.check_same_mode(q);
  const QMode& mode = p.mode();
  if (!mode.is_free_type())
    throw Error(ErrorCode::TorsionModeUnsupported, "annihilation is only guaranteed for q of free type");
  if (!commutes(p, q)) throw Error(ErrorCode::NonCommutingPair, "P and Q do not commute");

  std::vector<HqElement> p_pow{HqElement::identity(mode)}, q_pow{HqElement::identity(mode)};
  std::map<std::pair<int, int>, HqElement> products;
  auto product = [&](int a, int b) -> const HqElement& {
    auto it = products.find({a, b});
    if (it != products.end()) return it->second;
    while (static_cast<int>(p_pow.size()) <= a) p_pow.push_back(normal_product(p_pow.back(), p));
    while (static_cast<int>(q_pow.size()) <= b) q_pow.push_back(normal_product(q_pow.back(), q));
    return products.emplace(std::make_pair(a, b), normal_product(p_pow[a], q_pow[b])).first->second;
  };

  std::vector<bool> out;
  out.reserve(curves.size());
  for (const auto& f : curves) {
    HqElement value(mode);
    for (const auto& [e, c] : f.terms()) value += c * product(e[0], e[1]);
    out.push_back(value.is_zero());
  }
  return out;
}

std::optional<int> max_q_degree(const TriPoly& delta) {
  if (delta.mode().kind() != QMode::Kind::Symbolic) return std::nullopt;
  int d = 0;
  for (const auto& [e, c] : delta.terms()) {
    if (!c.is_integer_polynomial()) return std::nullopt;
    d = std::max(d, c.numerator().degree());
  }
  return d;
}

bool EliminantReport::all_annihilate() const {
  for (bool b : annihilation)
    if (!b) return false;
  return true;
}

EliminantReport run_eliminant(const HqElement& p, const HqElement& q) {
  EliminantMatrix mat = build_eliminant_matrix(p, q);
  TriPoly delta = eliminant_determinant(mat);
  TheoremMetadata meta = theorem_metadata(p, q, delta);
  std::vector<BiPoly> curves = extract_curves(delta);
  const std::size_t length = static_cast<std::size_t>(std::max(meta.s, meta.m_degree) + 1);
  while (curves.size() < length) curves.emplace_back(p.mode());
  std::vector<bool> nonzero;
  for (const auto& c : curves) nonzero.push_back(!c.is_zero());
  std::vector<bool> annihilation = verify_annihilation(p, q, curves);
  return EliminantReport{std::move(mat), std::move(delta), std::move(curves), std::move(nonzero), std::move(meta),
                         std::move(annihilation)};
}

}  // namespace hq
