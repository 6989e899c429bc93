#include "hq/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "hq/errors.hpp"

namespace hq {

std::string domain_name(Scalar::Domain d) {
  switch (d) {
    case Scalar::Domain::Rational: return "rational";
    case Scalar::Domain::RationalFunction: return "rational-function";
    case Scalar::Domain::Cyclotomic: return "cyclotomic";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::rational(mpq_class v) {
  v.canonicalize();
  return Scalar(std::move(v));
}

Scalar Scalar::canonical_ratfunc(ZPoly num, ZPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) return Scalar(RatFunc{ZPoly{}, ZPoly::constant(1)});
  if (den.degree() > 0) {
    ZPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = *exact_quotient(num, g);
      den = *exact_quotient(den, g);
    }
  }
  mpz_class c = content(den);
  if (c != 1) {
    mpz_class cn = content(num);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cn.get_mpz_t());
  }
  if (den.lc() < 0) c = -c;
  if (c != 1) {
    std::vector<mpz_class> n = num.coeffs(), d = den.coeffs();
    for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (auto& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    num = ZPoly(std::move(n));
    den = ZPoly(std::move(d));
  }
  return Scalar(RatFunc{std::move(num), std::move(den)});
}

Scalar Scalar::rational_function(const ZPoly& num, const ZPoly& den) { return canonical_ratfunc(num, den); }

Scalar Scalar::rational_function(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  auto [zn, fn] = clear_denominators(num);
  auto [zd, fd] = clear_denominators(den);
  // num/den = (zn * fd) / (zd * fn), with fn, fd rational scalars.
  mpq_class f = fd / fn;
  return canonical_ratfunc(zn.scaled(f.get_num()), zd.scaled(f.get_den()));
}

Scalar Scalar::cyclotomic(std::shared_ptr<const CyclotomicField> field, const QPoly& residue) {
  std::vector<mpq_class> c = residue.coeffs();
  for (auto& x : c) x.canonicalize();
  QPoly r(std::move(c));
  if (r.degree() >= field->phi_q.degree()) r = divmod(r, field->phi_q).second;
  return Scalar(Residue{std::move(field), std::move(r)});
}

Scalar::Domain Scalar::domain() const { return static_cast<Domain>(v_.index()); }

bool Scalar::is_zero() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_) == 0;
    case 1: return std::get<1>(v_).num.is_zero();
    default: return std::get<2>(v_).r.is_zero();
  }
}

bool Scalar::is_one() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_) == 1;
    case 1: return std::get<1>(v_).num.is_one() && std::get<1>(v_).den.is_one();
    default: return std::get<2>(v_).r.is_one();
  }
}

const mpq_class& Scalar::as_rational() const { return std::get<0>(v_); }
const ZPoly& Scalar::numerator() const { return std::get<1>(v_).num; }
const ZPoly& Scalar::denominator() const { return std::get<1>(v_).den; }
const QPoly& Scalar::residue() const { return std::get<2>(v_).r; }
int Scalar::cyclotomic_order() const { return std::get<2>(v_).field->order; }

bool Scalar::is_integer_polynomial() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_).get_den() == 1;
    case 1: return std::get<1>(v_).den.is_one();
    default: {
      for (const auto& c : std::get<2>(v_).r.coeffs())
        if (c.get_den() != 1) return false;
      return true;
    }
  }
}

namespace {

void check_same(const Scalar& a, const Scalar& b) {
  if (a.domain() != b.domain())
    throw Error(ErrorCode::MixedDomains, domain_name(a.domain()) + " vs " + domain_name(b.domain()));
  if (a.domain() == Scalar::Domain::Cyclotomic && a.cyclotomic_order() != b.cyclotomic_order())
    throw Error(ErrorCode::MixedDomains, "cyclotomic fields of different order");
}

}  // namespace

Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 0: return Scalar(mpq_class(-std::get<0>(v_)));
    case 1: {
      const auto& f = std::get<1>(v_);
      return Scalar(RatFunc{-f.num, f.den});
    }
    default: {
      const auto& c = std::get<2>(v_);
      return Scalar(Residue{c.field, -c.r});
    }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  switch (v_.index()) {
    case 0: return Scalar(mpq_class(1 / std::get<0>(v_)));
    case 1: {
      const auto& f = std::get<1>(v_);
      return canonical_ratfunc(f.den, f.num);
    }
    default: {
      const auto& c = std::get<2>(v_);
      auto [g, s] = half_extended_gcd(c.r, c.field->phi_q);
      return cyclotomic(c.field, s);
    }
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  switch (a.v_.index()) {
    case 0: return Scalar(mpq_class(std::get<0>(a.v_) + std::get<0>(b.v_)));
    case 1: {
      const auto& x = std::get<1>(a.v_);
      const auto& y = std::get<1>(b.v_);
      if (x.den.is_one() && y.den.is_one()) return Scalar(Scalar::RatFunc{x.num + y.num, x.den});
      if (x.den == y.den) return Scalar::canonical_ratfunc(x.num + y.num, x.den);
      return Scalar::canonical_ratfunc(x.num * y.den + y.num * x.den, x.den * y.den);
    }
    default: {
      const auto& x = std::get<2>(a.v_);
      return Scalar(Scalar::Residue{x.field, x.r + std::get<2>(b.v_).r});
    }
  }
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  switch (a.v_.index()) {
    case 0: return Scalar(mpq_class(std::get<0>(a.v_) * std::get<0>(b.v_)));
    case 1: {
      const auto& x = std::get<1>(a.v_);
      const auto& y = std::get<1>(b.v_);
      if (x.den.is_one() && y.den.is_one()) return Scalar(Scalar::RatFunc{x.num * y.num, x.den});
      return Scalar::canonical_ratfunc(x.num * y.num, x.den * y.den);
    }
    default: {
      const auto& x = std::get<2>(a.v_);
      return Scalar::cyclotomic(x.field, x.r * std::get<2>(b.v_).r);
    }
  }
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "scalar division by zero");
  if (a.v_.index() == 1) {
    const auto& x = std::get<1>(a.v_);
    const auto& y = std::get<1>(b.v_);
    if (x.den.is_one() && y.den.is_one()) {
      if (auto quot = exact_quotient(x.num, y.num)) return Scalar(Scalar::RatFunc{std::move(*quot), x.den});
    }
  }
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  switch (a.v_.index()) {
    case 0: return std::get<0>(a.v_) == std::get<0>(b.v_);
    case 1: {
      const auto& x = std::get<1>(a.v_);
      const auto& y = std::get<1>(b.v_);
      return x.num == y.num && x.den == y.den;
    }
    default: {
      const auto& x = std::get<2>(a.v_);
      const auto& y = std::get<2>(b.v_);
      return x.field->order == y.field->order && x.r == y.r;
    }
  }
}

std::string Scalar::str() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_).get_str();
    case 1: {
      const auto& f = std::get<1>(v_);
      if (f.den.is_one()) return format_descending(f.num, "q");
      return "(" + format_descending(f.num, "q") + ")/(" + format_descending(f.den, "q") + ")";
    }
    default: {
      const auto& c = std::get<2>(v_);
      return format_ascending(c.r, "q") + " (mod Phi_" + std::to_string(c.field->order) + ")";
    }
  }
}

std::string Scalar::coefficient_str() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_).get_str();
    case 1: {
      const auto& f = std::get<1>(v_);
      if (!f.den.is_one()) return str();
      std::size_t nonzero = 0;
      for (const auto& c : f.num.coeffs()) nonzero += (c != 0);
      std::string s = format_descending(f.num, "q");
      return nonzero > 1 ? "(" + s + ")" : s;
    }
    default: {
      const auto& c = std::get<2>(v_);
      std::size_t nonzero = 0;
      for (const auto& x : c.r.coeffs()) nonzero += (x != 0);
      std::string s = format_ascending(c.r, "q");
      return nonzero > 1 ? "(" + s + ")" : s;
    }
  }
}

bool Scalar::looks_negative() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_) < 0;
    case 1: {
      const auto& f = std::get<1>(v_);
      return !f.num.is_zero() && f.num.lc() < 0;
    }
    default: {
      const auto& c = std::get<2>(v_);
      // Single-term residues only; a multi-term residue is printed in parentheses.
      std::size_t nonzero = 0;
      for (const auto& x : c.r.coeffs()) nonzero += (x != 0);
      return nonzero == 1 && c.r.lc() < 0;
    }
  }
}

std::size_t Scalar::complexity() const {
  auto bits = [](const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); };
  switch (v_.index()) {
    case 0: {
      const auto& x = std::get<0>(v_);
      return bits(x.get_num()) + bits(x.get_den());
    }
    case 1: {
      const auto& f = std::get<1>(v_);
      std::size_t s = 64 * static_cast<std::size_t>(f.num.degree() + f.den.degree() + 2);
      for (const auto& c : f.num.coeffs()) s += bits(c);
      for (const auto& c : f.den.coeffs()) s += bits(c);
      return s;
    }
    default: {
      std::size_t s = 0;
      for (const auto& c : std::get<2>(v_).r.coeffs()) s += 1 + bits(c.get_num()) + bits(c.get_den());
      return s;
    }
  }
}

// ---------------------------------------------------------------------------
// ModeCache

namespace detail {

Scalar ModeCache::get_or_compute(const Key& key, const std::function<Scalar()>& compute) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
  }
  Scalar v = compute();
  std::lock_guard<std::mutex> lock(mu_);
  return table_.emplace(key, std::move(v)).first->second;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// QMode

QMode QMode::rational(const mpq_class& q) {
  mpq_class v = q;
  v.canonicalize();
  if (v == 0) throw Error(ErrorCode::InvalidMode, "q must be nonzero");
  QMode m;
  m.kind_ = Kind::Rational;
  m.value_ = v;
  m.cache_ = std::make_shared<detail::ModeCache>();
  return m;
}

QMode QMode::symbolic() {
  QMode m;
  m.kind_ = Kind::Symbolic;
  m.cache_ = std::make_shared<detail::ModeCache>();
  return m;
}

QMode QMode::root_of_unity(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidMode, "root of unity order must be at least 2");
  QMode m;
  m.kind_ = Kind::RootOfUnity;
  m.order_ = d;
  ZPoly phi = cyclotomic_polynomial(d);
  m.field_ = std::make_shared<const CyclotomicField>(CyclotomicField{d, phi, to_qpoly(phi)});
  m.cache_ = std::make_shared<detail::ModeCache>();
  return m;
}

Scalar QMode::zero() const { return from_rational(0); }
Scalar QMode::one() const { return from_rational(1); }

Scalar QMode::from_rational(const mpq_class& v) const {
  switch (kind_) {
    case Kind::Rational: return Scalar::rational(v);
    case Kind::Symbolic: return Scalar::rational_function(QPoly::constant(v), QPoly::constant(1));
    case Kind::RootOfUnity: return Scalar::cyclotomic(field_, QPoly::constant(v));
  }
  return Scalar();
}

Scalar QMode::q() const {
  switch (kind_) {
    case Kind::Rational: return Scalar::rational(value_);
    case Kind::Symbolic: return Scalar::rational_function(ZPoly::monomial(1, 1), ZPoly::constant(1));
    case Kind::RootOfUnity: return Scalar::cyclotomic(field_, QPoly::monomial(1, 1));
  }
  return Scalar();
}

Scalar QMode::q_power(long n) const {
  return cache_->get_or_compute({0, n, 0, 0}, [&]() {
    if (n < 0) return q_power(-n).inverse();
    switch (kind_) {
      case Kind::Rational: {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(n));
        mpz_pow_ui(r.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(n));
        return Scalar::rational(r);
      }
      case Kind::Symbolic:
        return Scalar::rational_function(ZPoly::monomial(1, static_cast<std::size_t>(n)), ZPoly::constant(1));
      case Kind::RootOfUnity:
        return Scalar::cyclotomic(field_, QPoly::monomial(1, static_cast<std::size_t>(n % order_)));
    }
    return Scalar();
  });
}

bool QMode::is_free_type() const { return !torsion_order().has_value(); }

std::optional<int> QMode::torsion_order() const {
  switch (kind_) {
    case Kind::Rational:
      // Over Q the only roots of unity are 1 and -1, and q = 1 counts as free
      // type in characteristic zero.
      if (value_ == -1) return 2;
      return std::nullopt;
    case Kind::Symbolic: return std::nullopt;
    case Kind::RootOfUnity: return order_;
  }
  return std::nullopt;
}

std::string QMode::name() const {
  switch (kind_) {
    case Kind::Rational: return value_.get_str();
    case Kind::Symbolic: return "symbolic";
    case Kind::RootOfUnity: return "root:" + std::to_string(order_);
  }
  return "?";
}

bool QMode::owns(const Scalar& s) const {
  switch (kind_) {
    case Kind::Rational: return s.domain() == Scalar::Domain::Rational;
    case Kind::Symbolic: return s.domain() == Scalar::Domain::RationalFunction;
    case Kind::RootOfUnity: return s.domain() == Scalar::Domain::Cyclotomic && s.cyclotomic_order() == order_;
  }
  return false;
}

bool operator==(const QMode& a, const QMode& b) {
  return a.kind_ == b.kind_ && a.value_ == b.value_ && a.order_ == b.order_;
}

// ---------------------------------------------------------------------------
// q-numbers

ZPoly cyclotomic_polynomial(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidMode, "cyclotomic order must be positive");
  QPoly p = QPoly::monomial(1, static_cast<std::size_t>(d)) - QPoly::constant(1);
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    p = divmod(p, to_qpoly(cyclotomic_polynomial(e))).first;
  }
  return to_zpoly(p);
}

Scalar q_integer(long n, const QMode& mode) {
  return mode.cache().get_or_compute({1, n, 0, 0}, [&]() {
    if (n < 0) return -(mode.q_power(n) * q_integer(-n, mode));
    Scalar acc = mode.zero();
    for (long k = 0; k < n; ++k) acc += mode.q_power(k);
    return acc;
  });
}

Scalar q_factorial(long n, const QMode& mode) {
  return mode.cache().get_or_compute({2, n, 0, 0}, [&]() {
    Scalar acc = mode.one();
    for (long k = 1; k <= n; ++k) acc *= q_integer(k, mode);
    return acc;
  });
}

Scalar q_binomial(long n, long k, const QMode& mode) {
  if (k < 0 || n < 0 || k > n) return mode.zero();
  if (k == 0 || k == n) return mode.one();
  return mode.cache().get_or_compute({3, n, k, 0}, [&]() {
    return q_binomial(n - 1, k - 1, mode) + mode.q_power(k) * q_binomial(n - 1, k, mode);
  });
}

bool is_root_of_unity_obstruction(const QMode& mode) { return mode.is_free_type(); }

}  // namespace hq
