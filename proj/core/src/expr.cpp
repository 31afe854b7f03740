#include "ulat/expr.hpp"

#include <cctype>
#include <sstream>

namespace ulat {

struct Term::Node {
  enum class Kind { number, variable, alternating, add, sub, mul, div, neg, power } kind = Kind::number;
  Rational value;            // number
  unsigned exponent = 0;     // power
  std::shared_ptr<const Node> left, right;
};

namespace {

using Node = Term::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind kind, NodePtr l = nullptr, NodePtr r = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

NodePtr number(const Rational& q) {
  auto n = std::make_shared<Node>();
  n->value = q;
  return n;
}

bool is_minus_one(const NodePtr& n) {
  if (n->kind == Node::Kind::number) return n->value == -1;
  return n->kind == Node::Kind::neg && n->left->kind == Node::Kind::number && n->left->value == 1;
}

class Parser {
 public:
  Parser(std::string_view text, std::string_view var) : s_(text), var_(var) {}

  NodePtr parse_all() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw TermSyntaxError("term '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    return end == s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_');
  }

  NodePtr expr() {
    NodePtr n = term();
    for (;;) {
      if (eat('+')) n = make(Node::Kind::add, n, term());
      else if (eat('-')) n = make(Node::Kind::sub, n, term());
      else return n;
    }
  }
  NodePtr term() {
    NodePtr n = unary();
    for (;;) {
      if (eat('*')) n = make(Node::Kind::mul, n, unary());
      else if (eat('/')) n = make(Node::Kind::div, n, unary());
      else if (implicit_product()) n = make(Node::Kind::mul, n, power());
      else return n;
    }
  }
  // "2k" and "3(k+1)" multiply implicitly.
  bool implicit_product() {
    skip();
    if (pos_ >= s_.size()) return false;
    return s_[pos_] == '(' || at_word(var_) || at_word("alt");
  }
  NodePtr unary() {
    if (eat('-')) return make(Node::Kind::neg, unary());
    if (eat('+')) return unary();
    return power();
  }
  NodePtr power() {
    NodePtr base = atom();
    if (!eat('^')) return base;
    skip();
    if (at_word(var_)) {
      pos_ += var_.size();
      if (!is_minus_one(base)) fail("only (-1) may be raised to the index");
      return make(Node::Kind::alternating);
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a natural number or the index");
    const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
    if (e > 64) fail("exponent too large");
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::power;
    n->exponent = static_cast<unsigned>(e);
    n->left = base;
    return n;
  }
  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      NodePtr n = expr();
      if (!eat(')')) fail("missing ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return number(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (at_word(var_)) {
      pos_ += var_.size();
      return make(Node::Kind::variable);
    }
    if (at_word("alt")) {
      pos_ += 3;
      return make(Node::Kind::alternating);
    }
    fail("expected a number, '" + std::string(var_) + "', 'alt' or '('");
  }

  std::string_view s_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

Rational eval(const Node& n, const Rational& v) {
  switch (n.kind) {
    case Node::Kind::number: return n.value;
    case Node::Kind::variable: return v;
    case Node::Kind::alternating: {
      if (v.get_den() != 1) throw std::domain_error("(-1)^v at non-integer v");
      return mpz_even_p(v.get_num_mpz_t()) ? Rational(1) : Rational(-1);
    }
    case Node::Kind::add: return eval(*n.left, v) + eval(*n.right, v);
    case Node::Kind::sub: return eval(*n.left, v) - eval(*n.right, v);
    case Node::Kind::mul: return eval(*n.left, v) * eval(*n.right, v);
    case Node::Kind::div: {
      const Rational d = eval(*n.right, v);
      if (d == 0) throw std::domain_error("division by zero");
      return eval(*n.left, v) / d;
    }
    case Node::Kind::neg: return -eval(*n.left, v);
    case Node::Kind::power: {
      const Rational b = eval(*n.left, v);
      Rational r = 1;
      for (unsigned i = 0; i < n.exponent; ++i) r *= b;
      return r;
    }
  }
  throw std::logic_error("bad term node");
}

ParityRational parity(const Node& n) {
  switch (n.kind) {
    case Node::Kind::number: return ParityRational::uniform(RationalFunction::constant(n.value));
    case Node::Kind::variable: return ParityRational::uniform(RationalFunction::variable());
    case Node::Kind::alternating: return ParityRational::alternating_sign();
    case Node::Kind::add: return parity(*n.left) + parity(*n.right);
    case Node::Kind::sub: return parity(*n.left) - parity(*n.right);
    case Node::Kind::mul: return parity(*n.left) * parity(*n.right);
    case Node::Kind::div: return parity(*n.left) / parity(*n.right);
    case Node::Kind::neg: return -parity(*n.left);
    case Node::Kind::power: {
      const ParityRational b = parity(*n.left);
      ParityRational r = ParityRational::uniform(RationalFunction::constant(1));
      for (unsigned i = 0; i < n.exponent; ++i) r = r * b;
      return r;
    }
  }
  throw std::logic_error("bad term node");
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

// Splits on top-level commas (outside parentheses and brackets).
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

std::int64_t to_int64(const Rational& q, std::string_view what) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p())
    throw TermSyntaxError(std::string(what) + " needs integer coefficients");
  return q.get_num().get_si();
}

}  // namespace

Term Term::parse(std::string_view text, std::string_view variable) {
  Parser p(text, variable);
  return Term(p.parse_all(), std::string(text));
}

Term Term::constant(const Rational& q) { return Term(number(q), to_string(q)); }

Rational Term::evaluate(const Rational& v) const { return eval(*root_, v); }

ParityRational Term::to_parity() const { return parity(*root_); }

SignedAffine parse_affine(std::string_view text, std::string_view variable) {
  const Term t = Term::parse(text, variable);
  Rational f0, f1, f2, f7;
  try {
    f0 = t.evaluate(0);
    f1 = t.evaluate(1);
    f2 = t.evaluate(2);
    f7 = t.evaluate(7);
  } catch (const std::domain_error&) {
    throw TermSyntaxError("'" + std::string(text) + "' is not affine");
  }
  const Rational slope = f1 - f0;
  // Affine iff both parity forms are one polynomial of degree <= 1; the
  // sample points catch terms whose even and odd forms differ.
  const ParityRational form = t.to_parity();
  if (f2 != f0 + 2 * slope || f7 != f0 + 7 * slope || form.even.den().degree() != 0 ||
      form.odd.den().degree() != 0 || form.even.num().degree() > 1 || form.odd.num().degree() > 1)
    throw TermSyntaxError("'" + std::string(text) + "' is not affine");
  return {to_int64(slope, "affine index"), to_int64(f0, "affine index")};
}

AffineIndex parse_eventual_index(std::string_view text) {
  const SignedAffine a = parse_affine(text, "j");
  if (a.scale < 0 || a.offset < 0)
    throw TermSyntaxError("eventual index '" + std::string(text) + "' needs nonnegative coefficients");
  return {static_cast<std::uint64_t>(a.scale), static_cast<std::uint64_t>(a.offset)};
}

SequenceFamily<Rational> parse_rational_sequence(std::string_view text) {
  const Term t = Term::parse(text);
  SequenceFamily<Rational> s = rational_sequence(std::string(text), t.to_parity());
  // Evaluate from the tree so the descriptor can be cross-checked against it.
  s.term = [t](std::size_t k) { return t.evaluate(Rational(static_cast<unsigned long>(k))); };
  return s;
}

SequenceFamily<RatVec> parse_vector_sequence(std::string_view text) {
  const std::string body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw TermSyntaxError("vector term '" + body + "' must look like [t1, t2, ...]");
  std::vector<Term> coords;
  for (const auto& part : split_top(std::string_view(body).substr(1, body.size() - 2), ','))
    coords.push_back(Term::parse(part));
  return from_function<RatVec>(body, [coords](std::size_t k) {
    std::vector<Rational> c;
    for (const auto& t : coords) c.push_back(t.evaluate(Rational(static_cast<unsigned long>(k))));
    return RatVec(std::move(c));
  });
}

SequenceFamily<C00Vector> parse_c00_sequence(std::string_view text) {
  struct Piece {
    Term coefficient;
    SignedAffine index;
  };
  std::vector<Piece> pieces;
  const std::string body = trim(text);
  if (body != "0")
    for (const auto& part : split_top(body, '+')) {
      const auto u = part.find("unit(");
      if (u == std::string::npos || part.back() != ')') throw TermSyntaxError("c00 term '" + part + "' needs unit(...)");
      std::string coef = trim(std::string_view(part).substr(0, u));
      if (!coef.empty()) {
        if (coef.back() != '*') throw TermSyntaxError("c00 term '" + part + "': write c*unit(...)");
        coef.pop_back();
      }
      const std::string inner = part.substr(u + 5, part.size() - u - 6);
      pieces.push_back({coef.empty() ? Term::constant(1) : Term::parse(coef), parse_affine(inner)});
    }
  return from_function<C00Vector>(body, [pieces](std::size_t k) {
    const FinitelySupportedSequences S;
    C00Vector acc;
    for (const auto& p : pieces) {
      const std::int64_t i = p.index.scale * static_cast<std::int64_t>(k) + p.index.offset;
      if (i < 1) throw std::domain_error("unit index below 1");
      acc = S.add(acc, C00Vector::unit(static_cast<std::uint64_t>(i),
                                       p.coefficient.evaluate(Rational(static_cast<unsigned long>(k)))));
    }
    return acc;
  });
}

SequenceFamily<FinCofSet> parse_fincof_sequence(std::string_view text) {
  std::string body = trim(text);
  const std::string name = body;
  if (body == "X") return constant_sequence<FinCofSet>(name, FinCofSet::whole());
  bool complement = false;
  if (!body.empty() && body.front() == '~') {
    complement = true;
    body = trim(std::string_view(body).substr(1));
  }
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    throw TermSyntaxError("set term '" + name + "' must be X, {..} or ~{..}");
  const std::string inner = trim(std::string_view(body).substr(1, body.size() - 2));
  if (inner.empty()) return constant_sequence<FinCofSet>(name, complement ? FinCofSet::whole() : FinCofSet::empty());

  const bool indexed = inner.find('k') != std::string::npos;
  if (!indexed) {
    std::set<Atom> atoms;
    for (const auto& part : split_top(inner, ',')) {
      const auto q = parse_rational(part);
      if (q.get_den() != 1 || q < 1 || !q.get_num().fits_ulong_p())
        throw TermSyntaxError("atom '" + part + "' must be a positive integer");
      atoms.insert(q.get_num().get_ui());
    }
    return constant_sequence<FinCofSet>(name, FinCofSet{complement, std::move(atoms)});
  }
  const auto dots = inner.find("..");
  FinCofShape shape;
  if (dots == std::string::npos) {
    if (complement) throw TermSyntaxError("'~{k..}' singletons are not supported");
    const SignedAffine a = parse_affine(inner);
    if (a.scale != 1) throw TermSyntaxError("singleton index must be k + offset");
    shape = {FinCofShape::Kind::singleton, a.offset};
  } else {
    if (trim(std::string_view(inner).substr(0, dots)) != "1")
      throw TermSyntaxError("segments must start at 1: '" + name + "'");
    const SignedAffine a = parse_affine(std::string_view(inner).substr(dots + 2));
    if (a.scale != 1) throw TermSyntaxError("segment end must be k + offset");
    shape = {complement ? FinCofShape::Kind::co_initial_segment : FinCofShape::Kind::initial_segment, a.offset};
  }
  return fincof_sequence(name, shape);
}

}  // namespace ulat
