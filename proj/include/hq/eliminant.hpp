#pragma once

// Burchnall-Chaundy eliminant for a commuting pair P, Q of orders m, n >= 1.
//
// Rows 0..n-1 hold the D_q-coefficients of A^k P - lambda A^k, rows n..n+m-1
// those of A^l Q - mu A^l. The determinant Delta(M, lambda, mu) splits as
// sum_i delta_i(lambda, mu) M^i, and each delta_i annihilates (P, Q) when q
// is of free type.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hq/comm_poly.hpp"
#include "hq/element.hpp"

namespace hq {

// Lex with M most significant, then mu, then lambda; leading term first.
struct TriPolyOrder {
  bool operator()(const std::array<int, 3>& a, const std::array<int, 3>& b) const {
    if (a[0] != b[0]) return a[0] > b[0];
    if (a[2] != b[2]) return a[2] > b[2];
    return a[1] > b[1];
  }
};

// Polynomial in (M, lambda, mu).
using TriPoly = CommPoly<3, TriPolyOrder>;

inline constexpr std::size_t kVarM = 0;
inline constexpr std::size_t kVarLambda = 1;
inline constexpr std::size_t kVarMu = 2;
inline const std::array<std::string, 3> kTriPolyNames = {"M", "lambda", "mu"};
inline const std::array<std::string, 2> kCurveNames = {"lambda", "mu"};

using PolyMatrix = std::vector<std::vector<TriPoly>>;

struct EliminantMatrix {
  int m = 0;  // order of P
  int n = 0;  // order of Q
  PolyMatrix entries;
  std::vector<HqElement> p_shifts;  // A^k P, k = 0..n-1
  std::vector<HqElement> q_shifts;  // A^l Q, l = 0..m-1

  int size() const { return m + n; }
};

// Normal form of A^k P, i.e. D_q^k P under the Laurent representation.
HqElement shift_compose(const HqElement& p, int k);

// Throws NonCommutingPair, OrderZeroOperand, or TorsionModeUnsupported.
EliminantMatrix build_eliminant_matrix(const HqElement& p, const HqElement& q);

// Fraction-free Gaussian elimination with exact polynomial division.
TriPoly determinant_bareiss(const PolyMatrix& a);
// Laplace expansion along rows, memoized on the set of used columns.
TriPoly determinant_cofactor(const PolyMatrix& a);

TriPoly eliminant_determinant(const EliminantMatrix& mat);

struct TheoremMetadata {
  int m = 0, n = 0;
  int s = 0, t = 0;
  int lambda_degree = -1;
  int mu_degree = -1;
  int m_degree = -1;
  TriPoly lambda_leading;
  TriPoly lambda_leading_predicted;
  TriPoly mu_leading;
  TriPoly mu_leading_predicted;
  // (-1)^{mn}: sign of the block permutation that pairs Q-rows with the first
  // m columns. Folded into mu_leading_predicted.
  int mu_sign_correction = 1;
  bool lambda_leading_matches = false;
  bool mu_leading_matches = false;
  bool m_degree_within_s = false;

  explicit TheoremMetadata(const QMode& mode)
      : lambda_leading(mode), lambda_leading_predicted(mode), mu_leading(mode), mu_leading_predicted(mode) {}
};

TheoremMetadata theorem_metadata(const HqElement& p, const HqElement& q, const TriPoly& delta);

// delta_i for i = 0..deg_M(delta), as polynomials in (lambda, mu) = (x, y).
std::vector<BiPoly> extract_curves(const TriPoly& delta);

// delta_i(P, Q) == 0 for each curve. Free-type modes only.
std::vector<bool> verify_annihilation(const HqElement& p, const HqElement& q, const std::vector<BiPoly>& curves);

// Largest q-degree among the coefficients of delta in symbolic mode, or
// nullopt if some coefficient is not a polynomial in q.
std::optional<int> max_q_degree(const TriPoly& delta);

struct EliminantReport {
  EliminantMatrix matrix;
  TriPoly delta;
  std::vector<BiPoly> curves;  // length max(s, deg_M delta) + 1
  std::vector<bool> nonzero;
  TheoremMetadata meta;
  std::vector<bool> annihilation;

  bool all_annihilate() const;
};

EliminantReport run_eliminant(const HqElement& p, const HqElement& q);

}  // namespace hq
