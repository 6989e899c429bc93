#include "hq/element.hpp"

#include <algorithm>
#include <ostream>

#include "hq/errors.hpp"
#include "hq/format.hpp"

namespace hq {

namespace {

int checked_add(int x, int y) {
  int r;
  if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "exponent overflow");
  return r;
}

}  // namespace

ScalarPoly::ScalarPoly(QMode mode, std::vector<Scalar> coeffs) : mode_(std::move(mode)), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::string ScalarPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    detail::append_term(out, c_[k], detail::power_str(var, k));
  }
  return out;
}

// ---------------------------------------------------------------------------

HqElement HqElement::monomial(const QMode& mode, int b, int a, const Scalar& c) {
  if (a < 0 || b < 0) throw Error(ErrorCode::NegativeExponent, "monomial exponents must be nonnegative");
  HqElement x(mode);
  x.add_term(b, a, c);
  return x;
}

Scalar HqElement::coefficient(int b, int a) const {
  auto it = terms_.find(Monomial{b, a});
  return it == terms_.end() ? mode_.zero() : it->second;
}

void HqElement::add_term(int b, int a, const Scalar& c) {
  if (c.is_zero()) return;
  if (!mode_.owns(c)) throw Error(ErrorCode::MixedDomains, "coefficient does not belong to mode " + mode_.name());
  auto [it, inserted] = terms_.try_emplace(Monomial{b, a}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HqElement::check_same_mode(const HqElement& o) const {
  if (mode_ != o.mode_) throw Error(ErrorCode::MixedModes, mode_.name() + " vs " + o.mode_.name());
}

HqElement HqElement::operator-() const {
  HqElement r(mode_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

HqElement& HqElement::operator+=(const HqElement& o) {
  check_same_mode(o);
  for (const auto& [m, c] : o.terms_) add_term(m.b, m.a, c);
  return *this;
}

HqElement& HqElement::operator-=(const HqElement& o) {
  check_same_mode(o);
  for (const auto& [m, c] : o.terms_) add_term(m.b, m.a, -c);
  return *this;
}

HqElement operator*(const Scalar& s, const HqElement& x) {
  HqElement r(x.mode_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : x.terms_) r.terms_.emplace(m, s * c);
  return r;
}

HqElement operator*(const HqElement& x, const HqElement& y) { return normal_product(x, y); }

std::string HqElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    detail::append_term(out, c, detail::join_factors(detail::power_str("B", m.b), detail::power_str("A", m.a)));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const HqElement& x) { return os << x.str(); }

// ---------------------------------------------------------------------------

Scalar reorder_coefficient(int j, int k, int r, const QMode& mode) {
  return mode.cache().get_or_compute({4, j, k, r}, [&]() {
    long e = static_cast<long>(j - r) * static_cast<long>(k - r);
    return mode.q_power(e) * q_binomial(j, r, mode) * q_binomial(k, r, mode) * q_factorial(r, mode);
  });
}

HqElement normal_product(const HqElement& x, const HqElement& y) {
  x.check_same_mode(y);
  const QMode& mode = x.mode();
  HqElement out(mode);
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      const Scalar c = cx * cy;
      // B^{bx} (A^{ax} B^{by}) A^{ay}
      const int rmax = std::min(mx.a, my.b);
      for (int r = 0; r <= rmax; ++r) {
        Scalar k = reorder_coefficient(mx.a, my.b, r, mode);
        if (k.is_zero()) continue;
        out.add_term(checked_add(mx.b, my.b - r), checked_add(mx.a - r, my.a), c * k);
      }
    }
  }
  return out;
}

HqElement rewrite_oracle_product(const HqElement& x, const HqElement& y) {
  x.check_same_mode(y);
  const QMode& mode = x.mode();
  const Scalar q = mode.q();
  std::map<std::string, Scalar> pending;
  auto push = [&](const std::string& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      std::string w = std::string(mx.b, 'B') + std::string(mx.a, 'A') + std::string(my.b, 'B') + std::string(my.a, 'A');
      push(w, cx * cy);
    }
  }
  HqElement out(mode);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string& w = node.key();
    const Scalar& c = node.mapped();
    const auto pos = w.find("AB");
    if (pos == std::string::npos) {
      const auto nb = static_cast<int>(std::count(w.begin(), w.end(), 'B'));
      out.add_term(nb, static_cast<int>(w.size()) - nb, c);
      continue;
    }
    std::string swapped = w;
    swapped[pos] = 'B';
    swapped[pos + 1] = 'A';
    push(swapped, q * c);
    push(w.substr(0, pos) + w.substr(pos + 2), c);
  }
  return out;
}

HqElement power(const HqElement& x, int e) {
  if (e < 0) throw Error(ErrorCode::NegativeExponent, "negative power of an algebra element");
  HqElement r = HqElement::identity(x.mode());
  for (int i = 0; i < e; ++i) r = normal_product(r, x);
  return r;
}

HqElement commutator(const HqElement& p, const HqElement& q) { return normal_product(p, q) - normal_product(q, p); }

bool commutes(const HqElement& p, const HqElement& q) { return commutator(p, q).is_zero(); }

std::optional<int> order(const HqElement& p) {
  if (p.is_zero()) return std::nullopt;
  int m = 0;
  for (const auto& [mono, c] : p.terms()) m = std::max(m, mono.a);
  return m;
}

std::optional<int> degree(const HqElement& p) {
  if (p.is_zero()) return std::nullopt;
  return p.terms().begin()->first.total_degree();
}

std::optional<int> coefficient_degree(const HqElement& p) {
  if (p.is_zero()) return std::nullopt;
  int d = 0;
  for (const auto& [mono, c] : p.terms()) d = std::max(d, mono.b);
  return d;
}

ScalarPoly coefficient_poly(const HqElement& p, int j) {
  std::vector<Scalar> c;
  for (const auto& [mono, s] : p.terms()) {
    if (mono.a != j) continue;
    if (c.size() <= static_cast<std::size_t>(mono.b)) c.resize(mono.b + 1, p.mode().zero());
    c[mono.b] = s;
  }
  return ScalarPoly(p.mode(), std::move(c));
}

HqElement eval_bipoly(const BiPoly& f, const HqElement& p, const HqElement& q) {
  p.check_same_mode(q);
  if (f.mode() != p.mode()) throw Error(ErrorCode::MixedModes, f.mode().name() + " vs " + p.mode().name());
  if (!commutes(p, q)) throw Error(ErrorCode::NonCommutingSubstitution, "substituted elements do not commute");
  const QMode& mode = p.mode();
  std::vector<HqElement> p_pow{HqElement::identity(mode)}, q_pow{HqElement::identity(mode)};
  auto p_power = [&](int a) -> const HqElement& {
    while (static_cast<int>(p_pow.size()) <= a) p_pow.push_back(normal_product(p_pow.back(), p));
    return p_pow[a];
  };
  auto q_power = [&](int b) -> const HqElement& {
    while (static_cast<int>(q_pow.size()) <= b) q_pow.push_back(normal_product(q_pow.back(), q));
    return q_pow[b];
  };
  // Group by the power of Q: F(P, Q) = sum_b (sum_a F_ab P^a) Q^b.
  std::map<int, HqElement> by_q;
  for (const auto& [e, c] : f.terms()) {
    auto it = by_q.try_emplace(e[1], mode).first;
    it->second += c * p_power(e[0]);
  }
  HqElement out(mode);
  for (const auto& [b, left] : by_q) out += normal_product(left, q_power(b));
  return out;
}

bool is_central(const HqElement& x) {
  const QMode& mode = x.mode();
  return commutes(x, HqElement::generator_A(mode)) && commutes(x, HqElement::generator_B(mode));
}

}  // namespace hq
