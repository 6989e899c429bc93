#include "hq/annihilator.hpp"

#include <algorithm>
#include <tuple>

#include "hq/errors.hpp"
#include "hq/format.hpp"

namespace hq {

namespace {

using Box = std::pair<int, int>;

// alpha^i beta^j, built on demand and kept across stages.
class PowerTable {
 public:
  PowerTable(const HqElement& alpha, const HqElement& beta)
      : a_{HqElement::identity(alpha.mode())}, b_{HqElement::identity(alpha.mode())}, alpha_(alpha), beta_(beta) {}

  const HqElement& get(int i, int j) {
    auto it = products_.find({i, j});
    if (it != products_.end()) return it->second;
    while (static_cast<int>(a_.size()) <= i) a_.push_back(normal_product(a_.back(), alpha_));
    while (static_cast<int>(b_.size()) <= j) b_.push_back(normal_product(b_.back(), beta_));
    return products_.emplace(Box{i, j}, normal_product(a_[i], b_[j])).first->second;
  }

 private:
  std::vector<HqElement> a_, b_;
  HqElement alpha_, beta_;
  std::map<Box, HqElement> products_;
};

// Ascending graded-lex on (i, j): the reverse of the display order.
bool ascending(const std::array<int, 2>& x, const std::array<int, 2>& y) { return GradedLexDescending<2>()(y, x); }

std::vector<std::array<int, 2>> box_monomials(int dx, int dy) {
  std::vector<std::array<int, 2>> out;
  for (int i = 0; i <= dx; ++i)
    for (int j = 0; j <= dy; ++j) out.push_back({i, j});
  std::sort(out.begin(), out.end(), ascending);
  return out;
}

// Columns are elements; rows are the normal-form monomials they use.
ScalarMatrix flatten(const std::vector<const HqElement*>& columns, const QMode& mode) {
  std::map<Monomial, std::size_t, MonomialDisplayOrder> row_of;
  for (const HqElement* x : columns)
    for (const auto& [mono, c] : x->terms()) row_of.try_emplace(mono, row_of.size());
  ScalarMatrix a(row_of.size(), std::vector<Scalar>(columns.size(), mode.zero()));
  for (std::size_t col = 0; col < columns.size(); ++col)
    for (const auto& [mono, c] : columns[col]->terms()) a[row_of.at(mono)][col] = c;
  return a;
}

void check_pair(const HqElement& alpha, const HqElement& beta) {
  alpha.check_same_mode(beta);
  if (!commutes(alpha, beta)) throw Error(ErrorCode::NonCommutingPair, "alpha and beta do not commute");
}

std::vector<Box> schedule_for(const SearchConfig& cfg, int limit_x, int limit_y) {
  std::vector<Box> s = cfg.schedule.empty() ? default_schedule(limit_x, limit_y) : cfg.schedule;
  std::erase_if(s, [&](const Box& b) { return b.first > limit_x || b.second > limit_y; });
  return s;
}

}  // namespace

std::vector<std::vector<Scalar>> kernel_exact(const ScalarMatrix& input, std::size_t cols, const QMode& mode) {
  for (const auto& row : input) {
    if (row.size() != cols) throw std::invalid_argument("kernel_exact: ragged matrix");
    for (const auto& x : row)
      if (!mode.owns(x)) throw Error(ErrorCode::MixedDomains, "matrix entry does not belong to mode " + mode.name());
  }
  ScalarMatrix a = input;
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      if (best == rows || a[i][c].complexity() < a[best][c].complexity()) best = i;
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    const Scalar inv = a[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!a[r][k].is_zero()) a[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Scalar f = a[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    is_pivot[c] = true;
    ++r;
  }

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, mode.zero());
    v[f] = mode.one();
    for (std::size_t p = 0; p < pivot_col.size(); ++p) v[pivot_col[p]] = -a[p][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::pair<int, int>> default_schedule(int max_dx, int max_dy) {
  std::vector<Box> s;
  for (int dx = 0; dx <= max_dx; ++dx)
    for (int dy = 0; dy <= max_dy; ++dy)
      if (dx + dy > 0) s.emplace_back(dx, dy);
  std::sort(s.begin(), s.end(), [](const Box& x, const Box& y) {
    auto key = [](const Box& b) { return std::make_tuple((b.first + 1) * (b.second + 1), std::abs(b.first - b.second), -b.first); };
    return key(x) < key(y);
  });
  return s;
}

SearchResult search_scalar_annihilator(const HqElement& alpha, const HqElement& beta, const SearchConfig& cfg) {
  check_pair(alpha, beta);
  const QMode& mode = alpha.mode();
  PowerTable table(alpha, beta);
  std::size_t stages = 0;
  for (const auto& [dx, dy] : schedule_for(cfg, cfg.max_dx, cfg.max_dy)) {
    ++stages;
    const auto monos = box_monomials(dx, dy);
    std::vector<const HqElement*> columns;
    for (const auto& [i, j] : monos) columns.push_back(&table.get(i, j));
    const auto kernel = kernel_exact(flatten(columns, mode), columns.size(), mode);
    if (kernel.empty()) continue;

    SearchResult res{BiPoly(mode)};
    for (std::size_t k = 0; k < monos.size(); ++k) res.f.add_term(monos[k], kernel.front()[k]);
    res.dx = dx;
    res.dy = dy;
    res.kernel_dimension = kernel.size();
    res.stages_tried = stages;
    res.verified = eval_bipoly(res.f, alpha, beta).is_zero();
    return res;
  }
  throw Error(ErrorCode::DegreeCapExceeded, "no annihilating polynomial with x-degree <= " + std::to_string(cfg.max_dx) +
                                                " and y-degree <= " + std::to_string(cfg.max_dy) + "; " +
                                                std::to_string(stages) + " stages had trivial kernels");
}

// ---------------------------------------------------------------------------

void CentralBiPoly::add_term(const Exponents& e, const HqElement& c) {
  if (c.mode() != mode_) throw Error(ErrorCode::MixedModes, c.mode().name() + " vs " + mode_.name());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HqElement CentralBiPoly::evaluate(const HqElement& alpha, const HqElement& beta) const {
  alpha.check_same_mode(beta);
  HqElement out(mode_);
  for (const auto& [e, c] : terms_) out += normal_product(c, normal_product(power(alpha, e[0]), power(beta, e[1])));
  return out;
}

bool CentralBiPoly::coefficients_central() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_central(t.second); });
}

std::string CentralBiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const std::string mono = detail::join_factors(detail::power_str("x", e[0]), detail::power_str("y", e[1]));
    if (c.size() == 1 && c.terms().begin()->first == Monomial{0, 0}) {
      detail::append_term(out, c.terms().begin()->second, mono);
      continue;
    }
    if (c.size() == 1) {
      // Single monomial: fold its sign like a scalar term.
      const auto& [m, s] = *c.terms().begin();
      const std::string elem = detail::join_factors(detail::power_str("B", m.b), detail::power_str("A", m.a));
      detail::append_term(out, s, detail::join_factors(elem, mono));
      continue;
    }
    if (!out.empty()) out += " + ";
    out += mono.empty() ? c.str() : "(" + c.str() + ")*" + mono;
  }
  return out;
}

CentralSearchResult search_central_annihilator(const HqElement& alpha, const HqElement& beta, const SearchConfig& cfg,
                                               int central_degree_cap) {
  alpha.check_same_mode(beta);
  const QMode& mode = alpha.mode();
  const auto d = mode.torsion_order();
  if (!d) throw Error(ErrorCode::NotTorsionMode, "central search needs q of torsion type, got " + mode.name());
  check_pair(alpha, beta);
  const int cap = central_degree_cap < 0 ? *d : central_degree_cap;
  const int limit_x = std::min(cfg.max_dx, *d), limit_y = std::min(cfg.max_dy, *d);

  PowerTable table(alpha, beta);
  std::map<std::array<int, 4>, HqElement> scaled;  // (A^d)^r (B^d)^s alpha^i beta^j
  auto column = [&](int i, int j, int r, int s) -> const HqElement& {
    auto it = scaled.find({i, j, r, s});
    if (it != scaled.end()) return it->second;
    HqElement z = HqElement::monomial(mode, *d * s, *d * r, mode.one());
    return scaled.emplace(std::array<int, 4>{i, j, r, s}, normal_product(z, table.get(i, j))).first->second;
  };

  for (int c = 0; c <= cap; ++c) {
    const auto central_monos = box_monomials(c, c);  // (r, s)
    for (const auto& [dx, dy] : schedule_for(cfg, limit_x, limit_y)) {
      const auto monos = box_monomials(dx, dy);
      std::vector<std::array<int, 4>> unknowns;
      std::vector<const HqElement*> columns;
      for (const auto& [i, j] : monos) {
        for (const auto& [r, s] : central_monos) {
          unknowns.push_back({i, j, r, s});
          columns.push_back(&column(i, j, r, s));
        }
      }
      const auto kernel = kernel_exact(flatten(columns, mode), columns.size(), mode);
      if (kernel.empty()) continue;

      CentralSearchResult res{CentralBiPoly(mode)};
      for (std::size_t k = 0; k < unknowns.size(); ++k) {
        const auto& [i, j, r, s] = unknowns[k];
        res.f.add_term({i, j}, HqElement::monomial(mode, *d * s, *d * r, kernel.front()[k]));
      }
      res.dx = dx;
      res.dy = dy;
      res.central_degree = c;
      res.kernel_dimension = kernel.size();
      res.verified = !res.f.is_zero() && res.f.coefficients_central() && res.f.evaluate(alpha, beta).is_zero();
      return res;
    }
  }
  throw Error(ErrorCode::DegreeCapExceeded, "no central annihilating polynomial with x-degree <= " +
                                                std::to_string(limit_x) + ", y-degree <= " + std::to_string(limit_y) +
                                                " and central degree <= " + std::to_string(cap));
}

}  // namespace hq
