#include "hq/poly.hpp"

#include <stdexcept>

#include "hq/errors.hpp"

namespace hq {

QPoly to_qpoly(const ZPoly& p) {
  std::vector<mpq_class> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return QPoly(std::move(c));
}

ZPoly to_zpoly(const QPoly& p) {
  std::vector<mpz_class> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) {
    if (x.get_den() != 1) throw std::logic_error("to_zpoly: non-integer coefficient");
    c.emplace_back(x.get_num());
  }
  return ZPoly(std::move(c));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<mpq_class> r = a.coeffs();
  const int db = b.degree();
  std::vector<mpq_class> quot(a.degree() - db + 1, mpq_class(0));
  const mpq_class& lb = b.lc();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    mpq_class f = r[k] / lb;
    quot[k - db] = f;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= f * b.coeffs()[i];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(r))};
}

namespace {

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  mpq_class inv = 1 / p.lc();
  return p.scaled(inv);
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  std::vector<mpz_class> r = a.coeffs();
  const int db = b.degree();
  const mpz_class& lb = b.lc();
  int dr = static_cast<int>(r.size()) - 1;
  while (dr >= db) {
    mpz_class lr = r[dr];
    for (auto& x : r) x *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b.coeffs()[i];
    while (dr >= 0 && r[dr] == 0) --dr;
    r.resize(dr + 1);
  }
  return ZPoly(std::move(r));
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

std::pair<QPoly, QPoly> half_extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    QPoly s2 = s0 - quot * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.is_zero()) return {r0, s0};
  mpq_class inv = 1 / r0.lc();
  return {r0.scaled(inv), s0.scaled(inv)};
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& x : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  mpz_class c = content(p);
  if (p.lc() < 0) c = -c;
  if (c == 1) return p;
  std::vector<mpz_class> r = p.coeffs();
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return ZPoly(std::move(r));
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  ZPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return ZPoly::constant(1);
    ZPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return ZPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> r = a.coeffs();
  const int db = b.degree();
  std::vector<mpz_class> quot(a.degree() - db + 1, mpz_class(0));
  const mpz_class& lb = b.lc();
  mpz_class f;
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(f.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
    quot[k - db] = f;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= f * b.coeffs()[i];
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  return ZPoly(std::move(quot));
}

std::pair<ZPoly, mpq_class> clear_denominators(const QPoly& p) {
  if (p.is_zero()) return {ZPoly{}, mpq_class(1)};
  mpz_class l = 1;
  for (const auto& x : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.emplace_back(x.get_num() * (l / x.get_den()));
  ZPoly z(std::move(c));
  mpz_class g = content(z);
  if (g != 1) {
    std::vector<mpz_class> r = z.coeffs();
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    z = ZPoly(std::move(r));
  }
  // p = z * g / l
  return {z, mpq_class(l, g)};
}

namespace {

template <class C>
void append_term(std::string& out, const C& c, std::size_t k, const std::string& var, bool first) {
  const bool neg = c < 0;
  if (first) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  C a = neg ? C(-c) : c;
  if (k == 0) {
    out += a.get_str();
    return;
  }
  if (a != 1) {
    out += a.get_str();
    out += "*";
  }
  out += var;
  if (k > 1) {
    out += "^";
    out += std::to_string(k);
  }
}

template <class C>
std::string format_desc(const UPoly<C>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const C& c = p.coeffs()[k];
    if (c == 0) continue;
    append_term(out, c, static_cast<std::size_t>(k), var, first);
    first = false;
  }
  return out;
}

}  // namespace

std::string format_descending(const ZPoly& p, const std::string& var) { return format_desc(p, var); }
std::string format_descending(const QPoly& p, const std::string& var) { return format_desc(p, var); }

std::string format_ascending(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const mpq_class& c = p.coeffs()[k];
    if (c == 0) continue;
    append_term(out, c, k, var, first);
    first = false;
  }
  return out;
}

}  // namespace hq
