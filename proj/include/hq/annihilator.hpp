#pragma once

// Annihilating polynomials for a commuting pair (alpha, beta) found by exact
// nullspace computation over growing degree boxes.
//
// Free-type q: F in K[x, y]. Torsion-type q of order d: F with coefficients
// in the center K[A^d, B^d].

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hq/comm_poly.hpp"
#include "hq/element.hpp"

namespace hq {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Kernel basis of a rows x cols matrix via reduced row echelon form. One
// vector per free column, in ascending column order; each has a 1 in its free
// column and zeros in the other free columns. Throws MixedDomains if an entry
// does not belong to mode.
std::vector<std::vector<Scalar>> kernel_exact(const ScalarMatrix& a, std::size_t cols, const QMode& mode);

struct SearchConfig {
  int max_dx = 6;
  int max_dy = 6;
  // Bound pairs (d_x, d_y) to try in order; empty means default_schedule.
  std::vector<std::pair<int, int>> schedule;
};

// Every box (d_x, d_y) within the caps, by number of unknowns (d_x+1)(d_y+1),
// then the squarer box first, then larger d_x first.
std::vector<std::pair<int, int>> default_schedule(int max_dx, int max_dy);

struct SearchResult {
  BiPoly f;
  int dx = 0, dy = 0;
  std::size_t kernel_dimension = 0;
  std::size_t stages_tried = 0;
  bool verified = false;
};

// Throws NonCommutingPair, DegreeCapExceeded.
SearchResult search_scalar_annihilator(const HqElement& alpha, const HqElement& beta, const SearchConfig& cfg = {});

// F(x, y) = sum c_ij x^i y^j with central coefficients c_ij.
class CentralBiPoly {
 public:
  using Exponents = std::array<int, 2>;
  using Terms = std::map<Exponents, HqElement, GradedLexDescending<2>>;

  explicit CentralBiPoly(QMode mode) : mode_(std::move(mode)) {}

  const QMode& mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const HqElement& c);

  // sum c_ij alpha^i beta^j, coefficients placed on the left.
  HqElement evaluate(const HqElement& alpha, const HqElement& beta) const;
  bool coefficients_central() const;

  // e.g. "x - A^2" or "(B^2 + 1)*x*y + 3".
  std::string str() const;

 private:
  QMode mode_;
  Terms terms_;
};

struct CentralSearchResult {
  CentralBiPoly f;
  int dx = 0, dy = 0;
  int central_degree = 0;
  std::size_t kernel_dimension = 0;
  bool verified = false;
};

// Unknowns are the scalars u in c_ij = sum_{r,s <= c} u_ijrs (A^d)^r (B^d)^s.
// Tries c = 0, 1, ..., central_degree_cap; for each c walks the schedule with
// d_x, d_y additionally bounded by d. A negative cap means d.
// Throws NonCommutingPair, NotTorsionMode, DegreeCapExceeded.
CentralSearchResult search_central_annihilator(const HqElement& alpha, const HqElement& beta,
                                               const SearchConfig& cfg = {}, int central_degree_cap = -1);

}  // namespace hq
