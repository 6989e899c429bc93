#include "hq/parse.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <vector>

#include "hq/errors.hpp"

namespace hq {

namespace {

constexpr long kMaxExponent = 100000;

// ---------------------------------------------------------------------------
// Tokens and syntax tree

struct Token {
  enum Kind { Number, Symbol, Op, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const unsigned char c = src[i];
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Number, src.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::Symbol, src.substr(i, j - i), i});
      i = j;
    } else if (std::string_view("+-*/^()").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Op, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, static_cast<char>(c)) + "'", i);
    }
  }
  out.push_back({Token::End, "", src.size()});
  return out;
}

struct Node {
  enum Kind { Num, Sym, Add, Sub, Mul, Div, Neg, Pow } kind;
  std::size_t pos = 0;
  std::string text;  // number digits or symbol name
  long exponent = 0;
  std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k, std::size_t pos, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->pos = pos;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

  NodePtr parse() {
    NodePtr e = expr();
    const Token& t = peek();
    if (t.kind != Token::End) {
      if (starts_atom(t)) throw ParseError("missing operator (write multiplication as '*')", t.pos);
      throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool is_op(const char* op) const { return peek().kind == Token::Op && peek().text == op; }
  static bool starts_atom(const Token& t) {
    return t.kind == Token::Number || t.kind == Token::Symbol || (t.kind == Token::Op && t.text == "(");
  }

  NodePtr expr() {
    NodePtr e = term();
    while (is_op("+") || is_op("-")) {
      const Token& t = toks_[i_++];
      e = make(t.text == "+" ? Node::Add : Node::Sub, t.pos, std::move(e), term());
    }
    return e;
  }

  NodePtr term() {
    NodePtr e = unary();
    while (is_op("*") || is_op("/")) {
      const Token& t = toks_[i_++];
      e = make(t.text == "*" ? Node::Mul : Node::Div, t.pos, std::move(e), unary());
    }
    return e;
  }

  NodePtr unary() {
    if (is_op("-")) {
      const std::size_t pos = toks_[i_++].pos;
      return make(Node::Neg, pos, unary());
    }
    return factor();
  }

  NodePtr factor() {
    NodePtr base = atom();
    if (!is_op("^")) return base;
    const std::size_t pos = toks_[i_++].pos;
    bool negative = false;
    if (is_op("-")) {
      negative = true;
      ++i_;
    }
    const Token& t = peek();
    if (t.kind != Token::Number) throw ParseError("expected an integer exponent", t.pos);
    if (t.text.size() > 6 || std::stol(t.text) > kMaxExponent) throw ParseError("exponent too large", t.pos);
    ++i_;
    NodePtr p = make(Node::Pow, pos, std::move(base));
    p->exponent = negative ? -std::stol(t.text) : std::stol(t.text);
    return p;
  }

  NodePtr atom() {
    const Token& t = peek();
    if (t.kind == Token::Number || t.kind == Token::Symbol) {
      ++i_;
      NodePtr n = make(t.kind == Token::Number ? Node::Num : Node::Sym, t.pos);
      n->text = t.text;
      return n;
    }
    if (is_op("(")) {
      ++i_;
      NodePtr e = expr();
      if (!is_op(")")) throw ParseError("expected ')'", peek().pos);
      ++i_;
      return e;
    }
    if (t.kind == Token::End) throw ParseError("unexpected end of input", t.pos);
    throw ParseError("unexpected '" + t.text + "'", t.pos);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------------------
// Evaluation into a target ring

template <class Ring>
typename Ring::Value evaluate(const Node& n, const Ring& ring) {
  using V = typename Ring::Value;
  const QMode& mode = ring.mode;
  switch (n.kind) {
    case Node::Num: return ring.constant(mode.from_rational(mpq_class(mpz_class(n.text))));
    case Node::Sym:
      if (n.text == "q") {
        if (!mode.allows_q_symbol())
          throw ParseError(ErrorCode::QNotAllowedInRationalMode, n.pos,
                           "q is the number " + mode.name() + " in this mode; write the value instead");
        return ring.constant(mode.q());
      }
      return ring.symbol(n.text, n.pos);
    case Node::Add: return evaluate(*n.lhs, ring) + evaluate(*n.rhs, ring);
    case Node::Sub: return evaluate(*n.lhs, ring) - evaluate(*n.rhs, ring);
    case Node::Neg: return -evaluate(*n.lhs, ring);
    case Node::Mul: return ring.mul(evaluate(*n.lhs, ring), evaluate(*n.rhs, ring));
    case Node::Div: {
      V d = evaluate(*n.rhs, ring);
      std::optional<Scalar> s = ring.as_scalar(d);
      if (!s) throw ParseError("division is only allowed by scalars", n.pos);
      if (s->is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero at position " + std::to_string(n.pos));
      return s->inverse() * evaluate(*n.lhs, ring);
    }
    case Node::Pow: {
      V base = evaluate(*n.lhs, ring);
      if (n.exponent < 0) return ring.negative_power(base, n.exponent, n.pos);
      V result = ring.constant(mode.one());
      for (long e = n.exponent; e > 0; e >>= 1) {
        if (e & 1) result = ring.mul(result, base);
        if (e > 1) base = ring.mul(base, base);
      }
      return result;
    }
  }
  throw std::logic_error("unreachable");
}

[[noreturn]] void unknown_symbol(const std::string& name, std::size_t pos) {
  throw ParseError("unknown symbol '" + name + "'", pos);
}

[[noreturn]] void negative_exponent(std::size_t pos) {
  throw ParseError(ErrorCode::NegativeExponent, pos, "negative exponent");
}

struct ScalarRing {
  using Value = Scalar;
  const QMode& mode;
  Value constant(const Scalar& s) const { return s; }
  Value symbol(const std::string& name, std::size_t pos) const { unknown_symbol(name, pos); }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  std::optional<Scalar> as_scalar(const Value& v) const { return v; }
  Value negative_power(const Value& base, long e, std::size_t pos) const {
    if (base.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero to a negative power at position " + std::to_string(pos));
    Value inv = base.inverse(), r = mode.one();
    for (long k = 0; k < -e; ++k) r *= inv;
    return r;
  }
};

struct ElementRing {
  using Value = HqElement;
  const QMode& mode;
  Value constant(const Scalar& s) const { return HqElement::scalar(mode, s); }
  Value symbol(const std::string& name, std::size_t pos) const {
    if (name == "A") return HqElement::generator_A(mode);
    if (name == "B") return HqElement::generator_B(mode);
    unknown_symbol(name, pos);
  }
  Value mul(const Value& a, const Value& b) const { return normal_product(a, b); }
  std::optional<Scalar> as_scalar(const Value& v) const {
    if (v.is_zero()) return mode.zero();
    if (v.size() == 1 && v.terms().begin()->first == Monomial{0, 0}) return v.terms().begin()->second;
    return std::nullopt;
  }
  Value negative_power(const Value&, long, std::size_t pos) const { negative_exponent(pos); }
};

struct BiPolyRing {
  using Value = BiPoly;
  const QMode& mode;
  Value constant(const Scalar& s) const { return BiPoly::constant(mode, s); }
  Value symbol(const std::string& name, std::size_t pos) const {
    if (name == "x") return BiPoly::variable(mode, 0);
    if (name == "y") return BiPoly::variable(mode, 1);
    unknown_symbol(name, pos);
  }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  std::optional<Scalar> as_scalar(const Value& v) const {
    if (v.is_zero()) return mode.zero();
    if (v.size() == 1 && v.terms().begin()->first == BiPoly::Exponents{}) return v.terms().begin()->second;
    return std::nullopt;
  }
  Value negative_power(const Value&, long, std::size_t pos) const { negative_exponent(pos); }
};

// Laurent polynomials in t as an ordered map exponent -> coefficient.
struct LaurentPoly {
  QMode mode;
  std::map<long, Scalar> c;

  void add(long e, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, inserted] = c.try_emplace(e, s);
    if (!inserted) {
      it->second += s;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [e, s] : b.c) a.add(e, s);
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [e, s] : b.c) a.add(e, -s);
    return a;
  }
  LaurentPoly operator-() const { return LaurentPoly{mode, {}} - *this; }
  friend LaurentPoly operator*(const Scalar& s, const LaurentPoly& a) {
    LaurentPoly r{a.mode, {}};
    for (const auto& [e, x] : a.c) r.add(e, s * x);
    return r;
  }
};

struct LaurentRing {
  using Value = LaurentPoly;
  const QMode& mode;
  Value constant(const Scalar& s) const {
    Value v{mode, {}};
    v.add(0, s);
    return v;
  }
  Value symbol(const std::string& name, std::size_t pos) const {
    if (name != "t") unknown_symbol(name, pos);
    Value v{mode, {}};
    v.add(1, mode.one());
    return v;
  }
  Value mul(const Value& a, const Value& b) const {
    Value r{mode, {}};
    for (const auto& [ea, ca] : a.c)
      for (const auto& [eb, cb] : b.c) r.add(ea + eb, ca * cb);
    return r;
  }
  std::optional<Scalar> as_scalar(const Value& v) const {
    if (v.c.empty()) return mode.zero();
    if (v.c.size() == 1 && v.c.begin()->first == 0) return v.c.begin()->second;
    return std::nullopt;
  }
  // Only single terms c*t^k are invertible.
  Value negative_power(const Value& base, long e, std::size_t pos) const {
    if (base.c.size() != 1) negative_exponent(pos);
    const auto& [k, s] = *base.c.begin();
    Value r{mode, {}};
    Scalar coef = mode.one(), inv = s.inverse();
    for (long i = 0; i < -e; ++i) coef *= inv;
    r.add(k * e, coef);
    return r;
  }
};

template <class Ring>
typename Ring::Value parse_with(const std::string& src, const Ring& ring) {
  NodePtr tree = Parser(src).parse();
  return evaluate(*tree, ring);
}

}  // namespace

QMode parse_mode(const std::string& src) {
  static const std::regex rational(R"(^\s*-?[0-9]+(/[0-9]+)?\s*$)");
  static const std::regex root(R"(^\s*root:([0-9]{1,6})\s*$)");
  std::smatch m;
  if (src == "symbolic") return QMode::symbolic();
  if (std::regex_match(src, m, root)) {
    const int d = std::stoi(m[1]);
    if (d < 2) throw Error(ErrorCode::InvalidMode, "root:<d> needs d >= 2 (got " + src + ")");
    return QMode::root_of_unity(d);
  }
  if (std::regex_match(src, rational)) {
    std::string t = src;
    std::erase_if(t, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    mpq_class v(t);
    if (v.get_den() == 0) throw Error(ErrorCode::InvalidMode, "zero denominator in " + src);
    v.canonicalize();
    return QMode::rational(v);
  }
  throw Error(ErrorCode::InvalidMode, "expected a nonzero rational, 'symbolic' or 'root:<d>', got '" + src + "'");
}

Scalar parse_scalar(const std::string& src, const QMode& mode) {
  static const std::regex suffix(R"(^(.*)\s\(mod Phi_([0-9]+)\)\s*$)");
  std::smatch m;
  if (std::regex_match(src, m, suffix)) {
    if (mode.kind() != QMode::Kind::RootOfUnity || std::stoi(m[2]) != mode.root_order())
      throw Error(ErrorCode::MixedDomains, "'" + src + "' does not belong to mode " + mode.name());
    return parse_with(m[1].str(), ScalarRing{mode});
  }
  return parse_with(src, ScalarRing{mode});
}

HqElement parse_element(const std::string& src, const QMode& mode) { return parse_with(src, ElementRing{mode}); }

BiPoly parse_bipoly(const std::string& src, const QMode& mode) { return parse_with(src, BiPolyRing{mode}); }

LaurentVector parse_laurent(const std::string& src, const QMode& mode) {
  LaurentPoly p = parse_with(src, LaurentRing{mode});
  if (p.c.empty()) return LaurentVector(mode);
  const long lo = p.c.begin()->first, hi = p.c.rbegin()->first;
  if (hi - lo > 1000000) throw ParseError("Laurent window too wide", 0);
  std::vector<Scalar> coeffs(hi - lo + 1, mode.zero());
  for (const auto& [e, s] : p.c) coeffs[e - lo] = s;
  return LaurentVector(mode, lo, std::move(coeffs));
}

}  // namespace hq
