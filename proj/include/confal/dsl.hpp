#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "confal/diff_conformal.hpp"
#include "confal/errors.hpp"
#include "confal/presented.hpp"

// Front end for `.confal` definition files.
//
//   algebra weyl {
//     kind differential;
//     base poly x;
//     deriv d/dx;
//     generators { e = 1; L = x; }
//   }
//
// `d` denotes the derivation of the conformal algebra in element
// expressions. Base clauses must precede generators, and generators must
// precede products, because right-hand sides are evaluated on the spot.

namespace confal {

enum class AlgebraKind { Differential, Presented };

struct BaseSpec {
  enum class Kind { Poly, MatPoly, FinDim, MatUnits } kind = Kind::Poly;
  int n = 1;  ///< matrix size or dimension
  std::string var = "x";
  std::vector<Rat> table;
  friend bool operator==(const BaseSpec&, const BaseSpec&) = default;
};

struct DerivSpec {
  enum class Kind { Zero, DDx, Matrix } kind = Kind::Zero;
  Rat scale = 0;  ///< coefficient of d/dvar
  std::optional<AElem> ad;
  std::vector<Rat> matrix;
  friend bool operator==(const DerivSpec&, const DerivSpec&) = default;
};

struct ProductSpec {
  int left = 0, right = 0, order = 0;
  PresElem value;
  friend bool operator==(const ProductSpec&, const ProductSpec&) = default;
};

struct AlgebraSpec {
  std::string name;
  std::optional<AlgebraKind> kind;
  std::optional<BaseSpec> base;
  std::optional<DerivSpec> deriv;
  std::vector<std::string> generator_names;
  std::vector<AElem> generator_values;  ///< differential kind only
  std::vector<ProductSpec> products;
  int line = 1, column = 1;
  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b)
  {
    return a.name == b.name && a.kind == b.kind && a.base == b.base && a.deriv == b.deriv &&
           a.generator_names == b.generator_names && a.generator_values == b.generator_values &&
           a.products == b.products;
  }
};

inline BaseAlgebra build_base(const BaseSpec& b)
{
  switch (b.kind) {
    case BaseSpec::Kind::Poly: return BaseAlgebra::poly(b.var);
    case BaseSpec::Kind::MatPoly: return BaseAlgebra::matpoly(b.n, b.var);
    case BaseSpec::Kind::FinDim: return BaseAlgebra::findim(b.n, b.table);
    case BaseSpec::Kind::MatUnits: return BaseAlgebra::matrix_units(b.n);
  }
  throw std::logic_error("unknown base kind");
}

inline Derivation build_derivation(const DerivSpec& d, int dim)
{
  switch (d.kind) {
    case DerivSpec::Kind::Zero: return d.ad ? Derivation::ad(*d.ad) : Derivation::zero();
    case DerivSpec::Kind::DDx: return d.ad ? Derivation::ddx_plus_ad(d.scale, *d.ad) : Derivation::ddx(d.scale);
    case DerivSpec::Kind::Matrix: {
      if (d.matrix.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("derivation matrix must have dim^2 entries");
      std::vector<std::vector<Rat>> images(static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j)
        images[static_cast<std::size_t>(j)].assign(d.matrix.begin() + j * dim, d.matrix.begin() + (j + 1) * dim);
      return Derivation::matrix(std::move(images));
    }
  }
  throw std::logic_error("unknown derivation kind");
}

using AnyAlgebra = std::variant<DiffAlgebra, PresentedAlgebra>;

namespace detail {

struct Token {
  enum class Type { Ident, Int, Punct, End } type = Type::End;
  std::string text;
  int line = 1, column = 1;
};

inline std::vector<Token> tokenize(const std::string& src)
{
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.type = Token::Type::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.type = Token::Type::Int;
    } else if (std::string("{}()[];,=+-*/^").find(c) != std::string::npos) {
      j = i + 1;
      t.type = Token::Type::Punct;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    t.text = src.substr(i, j - i);
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

/// Either an operator in Q[d] or an element; products and sums mix them.
template <class Elem>
struct ElemValue {
  std::optional<DOp> op;
  Elem elem;
  bool is_op() const { return op.has_value(); }
};

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

  std::vector<AlgebraSpec> parse_file()
  {
    std::vector<AlgebraSpec> out;
    while (!at_end()) {
      if (peek_is("module")) throw error_here("torsion presentations rejected");
      out.push_back(parse_algebra());
      for (const auto& prev : out)
        if (&prev != &out.back() && prev.name == out.back().name)
          throw ParseError("duplicate algebra name '" + prev.name + "'", out.back().line, out.back().column);
    }
    if (out.empty()) throw error_here("expected 'algebra'");
    return out;
  }

  /// Element expression over the generators of an already parsed spec.
  template <class Elem, class Lookup>
  Elem parse_standalone_element(Lookup&& lookup)
  {
    auto v = parse_elem_sum<Elem>(lookup);
    if (!at_end()) throw expected("end of expression");
    return to_elem(v);
  }

  AElem parse_standalone_base(const BaseAlgebra& a)
  {
    AElem v = parse_base_sum(a);
    if (!at_end()) throw expected("end of expression");
    return v;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().type == Token::Type::End; }
  bool peek_is(const std::string& text, std::size_t k = 0) const
  {
    return peek(k).type != Token::Type::End && peek(k).text == text;
  }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  ParseError error_here(const std::string& msg) const { return ParseError(msg, peek().line, peek().column); }
  ParseError expected(const std::string& what) const
  {
    const std::string found = at_end() ? "end of input" : "'" + peek().text + "'";
    return error_here("expected " + what + ", found " + found);
  }

  void expect(const std::string& text)
  {
    if (!peek_is(text)) throw expected("'" + text + "'");
    ++pos_;
  }
  std::string expect_ident()
  {
    if (peek().type != Token::Type::Ident) throw expected("identifier");
    return next().text;
  }
  long expect_int()
  {
    if (peek().type != Token::Type::Int) throw expected("integer");
    const Token t = next();
    try {
      return std::stol(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", t.line, t.column);
    }
  }

  Rat parse_rational()
  {
    bool neg = false;
    if (peek_is("-")) {
      ++pos_;
      neg = true;
    }
    if (peek().type != Token::Type::Int) throw expected("rational literal");
    Rat r(mpz_class(next().text));
    if (peek_is("/")) {
      ++pos_;
      if (peek().type != Token::Type::Int) throw expected("denominator");
      const Token t = next();
      mpz_class den(t.text);
      if (den == 0) throw ParseError("zero denominator", t.line, t.column);
      r /= Rat(den);
    }
    r.canonicalize();
    return neg ? Rat(-r) : r;
  }

  std::vector<Rat> parse_rational_list()
  {
    expect("[");
    std::vector<Rat> out;
    while (!peek_is("]")) {
      out.push_back(parse_rational());
      if (peek_is(",")) ++pos_;
      else if (!peek_is("]")) throw expected("',' or ']'");
    }
    expect("]");
    return out;
  }

  AlgebraSpec parse_algebra()
  {
    AlgebraSpec spec;
    spec.line = peek().line;
    spec.column = peek().column;
    expect("algebra");
    spec.name = expect_ident();
    expect("{");
    std::optional<BaseAlgebra> base;
    bool any_clause = false;
    while (!peek_is("}")) {
      if (at_end()) throw expected("'}'");
      any_clause = true;
      const Token kw = peek();
      if (kw.text == "kind") {
        ++pos_;
        if (spec.kind) throw ParseError("duplicate kind clause", kw.line, kw.column);
        const std::string k = expect_ident();
        if (k == "differential") spec.kind = AlgebraKind::Differential;
        else if (k == "presented") spec.kind = AlgebraKind::Presented;
        else throw ParseError("expected 'differential' or 'presented', found '" + k + "'", kw.line, kw.column);
        expect(";");
      } else if (kw.text == "base") {
        ++pos_;
        if (spec.base) throw ParseError("duplicate base clause", kw.line, kw.column);
        spec.base = parse_base_clause();
        try {
          base = build_base(*spec.base);
        } catch (const std::exception& e) {
          throw ParseError(e.what(), kw.line, kw.column);
        }
        expect(";");
      } else if (kw.text == "deriv") {
        ++pos_;
        if (spec.deriv) throw ParseError("duplicate deriv clause", kw.line, kw.column);
        if (!base) throw ParseError("deriv clause needs a preceding base clause", kw.line, kw.column);
        spec.deriv = parse_deriv_clause(*base);
        expect(";");
      } else if (kw.text == "generators") {
        ++pos_;
        if (!spec.generator_names.empty()) throw ParseError("duplicate generators clause", kw.line, kw.column);
        parse_generators(spec, base);
      } else if (kw.text == "products") {
        ++pos_;
        if (spec.generator_names.empty()) throw ParseError("products clause needs declared generators", kw.line, kw.column);
        parse_products(spec);
      } else if (kw.text == "module") {
        throw error_here("torsion presentations rejected");
      } else {
        throw expected("'kind', 'base', 'deriv', 'generators' or 'products'");
      }
    }
    expect("}");
    if (!any_clause) throw ParseError("empty algebra body", spec.line, spec.column);
    validate(spec);
    return spec;
  }

  BaseSpec parse_base_clause()
  {
    BaseSpec b;
    const Token t = peek();
    const std::string k = expect_ident();
    if (k == "poly") {
      b.kind = BaseSpec::Kind::Poly;
      b.var = expect_ident();
    } else if (k == "matpoly") {
      b.kind = BaseSpec::Kind::MatPoly;
      b.n = static_cast<int>(expect_int());
      b.var = expect_ident();
    } else if (k == "findim") {
      b.kind = BaseSpec::Kind::FinDim;
      b.n = static_cast<int>(expect_int());
      expect("table");
      b.table = parse_rational_list();
    } else if (k == "mat") {
      b.kind = BaseSpec::Kind::MatUnits;
      b.n = static_cast<int>(expect_int());
    } else {
      throw ParseError("expected 'poly', 'matpoly', 'findim' or 'mat', found '" + k + "'", t.line, t.column);
    }
    if (b.n < 1) throw ParseError("size must be positive", t.line, t.column);
    if (b.var == "d" || b.var == "E" || b.var == "b") throw ParseError("reserved variable name '" + b.var + "'", t.line, t.column);
    return b;
  }

  /// `d / d<var>` at the cursor, returning false if not present.
  bool parse_ddx(const BaseAlgebra& base)
  {
    if (!(peek_is("d") && peek_is("/", 1))) return false;
    const Token t = peek(2);
    pos_ += 2;
    const std::string v = expect_ident();
    if (v.size() < 2 || v[0] != 'd') throw ParseError("expected d/d<variable>", t.line, t.column);
    if (base.kind() == BaseKind::FinDim) throw ParseError("d/d" + v.substr(1) + " on a finite-dimensional base", t.line, t.column);
    if (v.substr(1) != base.var())
      throw ParseError("derivation variable '" + v.substr(1) + "' does not match base variable '" + base.var() + "'",
                       t.line, t.column);
    return true;
  }

  DerivSpec parse_deriv_clause(const BaseAlgebra& base)
  {
    DerivSpec d;
    if (peek_is("zero")) {
      ++pos_;
      return d;
    }
    if (peek_is("matrix")) {
      ++pos_;
      d.kind = DerivSpec::Kind::Matrix;
      d.matrix = parse_rational_list();
      if (base.kind() != BaseKind::FinDim) throw error_here("matrix derivation needs a finite-dimensional base");
      if (d.matrix.size() != static_cast<std::size_t>(base.size()) * base.size())
        throw error_here("matrix derivation needs " + std::to_string(base.size() * base.size()) + " entries");
      return d;
    }
    if (peek_is("ad")) {
      d.ad = parse_ad(base);
      return d;
    }
    Rat scale(1);
    if (peek().type == Token::Type::Int || peek_is("-")) {
      scale = parse_rational();
      expect("*");
    }
    if (!parse_ddx(base)) throw expected("'zero', 'matrix', 'ad' or 'd/d<variable>'");
    d.kind = DerivSpec::Kind::DDx;
    d.scale = scale;
    if (peek_is("+")) {
      ++pos_;
      d.ad = parse_ad(base);
    }
    return d;
  }

  AElem parse_ad(const BaseAlgebra& base)
  {
    expect("ad");
    expect("(");
    AElem r = parse_base_sum(base);
    expect(")");
    return r;
  }

  void parse_generators(AlgebraSpec& spec, const std::optional<BaseAlgebra>& base)
  {
    auto check_name = [&](const Token& t) {
      if (t.text == "d") throw ParseError("'d' is reserved for the derivation", t.line, t.column);
      for (const auto& n : spec.generator_names)
        if (n == t.text) throw ParseError("duplicate generator '" + t.text + "'", t.line, t.column);
    };
    if (!peek_is("{")) {
      // generators a, b, c;
      while (true) {
        check_name(peek());
        spec.generator_names.push_back(expect_ident());
        if (peek_is(",")) {
          ++pos_;
          continue;
        }
        break;
      }
      expect(";");
      return;
    }
    expect("{");
    while (!peek_is("}")) {
      const Token t = peek();
      check_name(t);
      std::string name = expect_ident();
      expect("=");
      if (!base) throw ParseError("generator values need a preceding base clause", t.line, t.column);
      AElem v = parse_base_sum(*base);
      expect(";");
      spec.generator_names.push_back(std::move(name));
      spec.generator_values.push_back(std::move(v));
    }
    expect("}");
    if (spec.generator_names.empty()) throw error_here("empty generator list");
  }

  void parse_products(AlgebraSpec& spec)
  {
    expect("{");
    auto index_of = [&](const Token& t) {
      for (std::size_t i = 0; i < spec.generator_names.size(); ++i)
        if (spec.generator_names[i] == t.text) return static_cast<int>(i);
      throw ParseError("undeclared generator '" + t.text + "'", t.line, t.column);
    };
    auto lookup = [&](const Token& t) { return PresElem::basis(index_of(t)); };
    while (!peek_is("}")) {
      ProductSpec p;
      const Token lt = peek();
      expect_ident();
      p.left = index_of(lt);
      expect("(");
      p.order = static_cast<int>(expect_int());
      expect(")");
      const Token rt = peek();
      expect_ident();
      p.right = index_of(rt);
      expect("=");
      p.value = to_elem(parse_elem_sum<PresElem>(lookup));
      expect(";");
      for (const auto& q : spec.products)
        if (q.left == p.left && q.right == p.right && q.order == p.order)
          throw ParseError("duplicate product entry", lt.line, lt.column);
      spec.products.push_back(std::move(p));
    }
    expect("}");
  }

  void validate(const AlgebraSpec& s) const
  {
    auto fail = [&](const std::string& m) { throw ParseError(m + " in algebra '" + s.name + "'", s.line, s.column); };
    if (!s.kind) fail("missing kind clause");
    if (*s.kind == AlgebraKind::Differential) {
      if (!s.base) fail("missing base clause");
      if (!s.products.empty()) fail("products clause in a differential algebra");
      if (s.generator_values.size() != s.generator_names.size()) fail("differential generators need values");
    } else {
      if (s.base || s.deriv) fail("base/deriv clause in a presented algebra");
      if (!s.generator_values.empty()) fail("presented generators are abstract");
      if (s.generator_names.empty()) fail("missing generators");
    }
  }

  // Base expressions: rationals, the variable, x^k, E(i,j), b(i), + - * ().
  AElem parse_base_sum(const BaseAlgebra& a)
  {
    AElem r;
    bool first = true;
    while (true) {
      Rat sign(1);
      if (peek_is("+") || peek_is("-")) {
        if (peek_is("-")) sign = -1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      AElem t = parse_base_product(a);
      t *= sign;
      r += t;
    }
    return r;
  }

  AElem parse_base_product(const BaseAlgebra& a)
  {
    AElem r = parse_base_power(a);
    while (peek_is("*")) {
      ++pos_;
      r = a.mul(r, parse_base_power(a));
    }
    return r;
  }

  AElem parse_base_power(const BaseAlgebra& a)
  {
    const Token t = peek();
    AElem v = parse_base_atom(a);
    if (!peek_is("^")) return v;
    ++pos_;
    const long k = expect_int();
    if (k > 1000) throw ParseError("exponent too large", t.line, t.column);
    if (k == 0) {
      if (!a.has_unit()) throw ParseError("zeroth power in an algebra without unit", t.line, t.column);
      return a.one();
    }
    AElem p = v;
    for (long i = 1; i < k; ++i) p = a.mul(p, v);
    return p;
  }

  AElem parse_base_atom(const BaseAlgebra& a)
  {
    const Token t = peek();
    if (t.type == Token::Type::Int) {
      Rat c = parse_rational();
      if (!a.has_unit()) throw ParseError("scalar in an algebra without unit", t.line, t.column);
      return a.scalar(c);
    }
    if (peek_is("-")) {
      ++pos_;
      AElem v = parse_base_power(a);
      v *= Rat(-1);
      return v;
    }
    if (peek_is("(")) {
      ++pos_;
      AElem v = parse_base_sum(a);
      expect(")");
      return v;
    }
    if (t.type != Token::Type::Ident) throw expected("base expression");
    ++pos_;
    if (t.text == "E") {
      expect("(");
      const long i = expect_int();
      expect(",");
      const long j = expect_int();
      expect(")");
      const int n = a.kind() == BaseKind::MatPoly ? a.size() : a.matrix_size();
      if (n == 0) throw ParseError("E(i,j) needs a matrix base", t.line, t.column);
      if (i < 1 || j < 1 || i > n || j > n) throw ParseError("matrix index out of range", t.line, t.column);
      return a.matrix_unit(static_cast<int>(i - 1), static_cast<int>(j - 1));
    }
    if (t.text == "b") {
      expect("(");
      const long i = expect_int();
      expect(")");
      if (a.kind() != BaseKind::FinDim) throw ParseError("b(i) needs a finite-dimensional base", t.line, t.column);
      if (i < 1 || i > a.size()) throw ParseError("basis index out of range", t.line, t.column);
      return AElem::unit({static_cast<int>(i - 1), 0, 0});
    }
    if (a.kind() != BaseKind::FinDim && t.text == a.var()) return a.x();
    throw ParseError("unknown symbol '" + t.text + "' in base expression", t.line, t.column);
  }

  // Element expressions: sums of products of rationals, d, d^k and generator
  // names; `d(...)` applies d to a subexpression.
  template <class Elem>
  static Elem to_elem(const ElemValue<Elem>& v)
  {
    if (!v.is_op()) return v.elem;
    if (v.op->is_zero()) return Elem();
    throw std::invalid_argument("operator without an element");
  }

  template <class Elem, class Lookup>
  ElemValue<Elem> parse_elem_sum(Lookup& lookup)
  {
    const Token start = peek();
    std::optional<ElemValue<Elem>> acc;
    bool first = true;
    while (true) {
      Rat sign(1);
      if (peek_is("+") || peek_is("-")) {
        if (peek_is("-")) sign = -1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      auto t = parse_elem_product<Elem>(lookup);
      if (t.is_op()) *t.op *= sign;
      else t.elem *= sign;
      if (!acc) {
        acc = std::move(t);
      } else if (acc->is_op() && t.is_op()) {
        *acc->op += *t.op;
      } else if (!acc->is_op() && !t.is_op()) {
        acc->elem += t.elem;
      } else {
        throw ParseError("cannot add an operator and an element", start.line, start.column);
      }
    }
    return *acc;
  }

  template <class Elem, class Lookup>
  ElemValue<Elem> parse_elem_product(Lookup& lookup)
  {
    const Token start = peek();
    auto acc = parse_elem_factor<Elem>(lookup);
    // Juxtaposition multiplies too: `d g`, `d(g)`, `2 d g`.
    while (peek_is("*") || peek_is("(") || peek().type == Token::Type::Ident) {
      if (peek_is("*")) ++pos_;
      auto f = parse_elem_factor<Elem>(lookup);
      if (acc.is_op() && f.is_op()) {
        *acc.op = *acc.op * *f.op;
      } else if (acc.is_op()) {
        f.elem = *acc.op * f.elem;
        acc = std::move(f);
      } else if (f.is_op() && f.op->is_constant()) {
        acc.elem *= f.op->coeff(0);
      } else {
        throw ParseError("product of two elements is not defined here", start.line, start.column);
      }
    }
    return acc;
  }

  template <class Elem, class Lookup>
  ElemValue<Elem> parse_elem_factor(Lookup& lookup)
  {
    const Token t = peek();
    if (t.type == Token::Type::Int) return {DOp(parse_rational()), Elem()};
    if (peek_is("(")) {
      ++pos_;
      auto v = parse_elem_sum<Elem>(lookup);
      expect(")");
      return v;
    }
    if (t.type != Token::Type::Ident) throw expected("element expression");
    ++pos_;
    if (t.text == "d") {
      long k = 1;
      if (peek_is("^")) {
        ++pos_;
        k = expect_int();
      }
      return {DOp::monomial(Rat(1), static_cast<int>(k)), Elem()};
    }
    return {std::nullopt, lookup(t)};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a `.confal` source into algebra specifications.
inline std::vector<AlgebraSpec> parse(const std::string& source)
{
  return detail::Parser(source).parse_file();
}

inline AnyAlgebra build_algebra(const AlgebraSpec& s)
{
  try {
    if (s.kind == AlgebraKind::Presented) {
      ProductTable t(s.generator_names);
      for (const auto& p : s.products) t.set(p.left, p.right, p.order, p.value);
      return PresentedAlgebra(std::move(t));
    }
    BaseAlgebra base = build_base(*s.base);
    Derivation delta = s.deriv ? build_derivation(*s.deriv, base.size()) : Derivation::zero();
    OreContext ctx = make_ore(base, delta);
    std::vector<std::pair<std::string, AElem>> gens;
    for (std::size_t i = 0; i < s.generator_names.size(); ++i) gens.emplace_back(s.generator_names[i], s.generator_values[i]);
    return DiffAlgebra(ctx, std::move(gens));
  } catch (const BoundExceeded&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in algebra '" + s.name + "'", s.line, s.column);
  } catch (const std::logic_error& e) {
    throw ParseError(std::string(e.what()) + " in algebra '" + s.name + "'", s.line, s.column);
  }
}

/// Parses an element expression against a built algebra's generators.
inline ConfElem parse_element(const DiffAlgebra& m, const std::string& text)
{
  detail::Parser p(text);
  return p.parse_standalone_element<ConfElem>([&](const detail::Token& t) {
    const auto& names = m.generator_names();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == t.text) return m.generators()[i];
    throw ParseError("undeclared generator '" + t.text + "'", t.line, t.column);
  });
}

inline PresElem parse_element(const PresentedAlgebra& m, const std::string& text)
{
  detail::Parser p(text);
  return p.parse_standalone_element<PresElem>([&](const detail::Token& t) {
    const auto& names = m.generator_names();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == t.text) return m.generators()[i];
    throw ParseError("undeclared generator '" + t.text + "'", t.line, t.column);
  });
}

inline AElem parse_base_element(const BaseAlgebra& a, const std::string& text)
{
  return detail::Parser(text).parse_standalone_base(a);
}

// Pretty printing back to the DSL.

inline std::string to_dsl(const BaseSpec& b, const AElem& v)
{
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : v.terms()) {
    std::string sym;
    switch (b.kind) {
      case BaseSpec::Kind::Poly: break;
      case BaseSpec::Kind::MatPoly:
      case BaseSpec::Kind::MatUnits:
        sym = "E(" + std::to_string(k.row + 1) + "," + std::to_string(k.col + 1) + ")";
        break;
      case BaseSpec::Kind::FinDim: sym = "b(" + std::to_string(k.row + 1) + ")"; break;
    }
    if (b.kind == BaseSpec::Kind::MatUnits) {
      const int n = b.n;
      sym = "E(" + std::to_string(k.row / n + 1) + "," + std::to_string(k.row % n + 1) + ")";
    }
    if (k.deg > 0) {
      std::string x = b.var + (k.deg > 1 ? "^" + std::to_string(k.deg) : "");
      sym = sym.empty() ? x : sym + "*" + x;
    }
    if (!out.empty()) out += " + ";
    out += "(" + c.get_str() + ")";
    if (!sym.empty()) out += "*" + sym;
  }
  return out;
}

inline std::string to_dsl(const PresElem& v, const std::vector<std::string>& names)
{
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [g, q] : v.terms())
    for (const auto& [p, c] : q.terms()) {
      if (!out.empty()) out += " + ";
      out += "(" + c.get_str() + ")*";
      if (p > 0) out += "d^" + std::to_string(p) + "*";
      out += names[static_cast<std::size_t>(g)];
    }
  return out;
}

inline std::string to_dsl(const AlgebraSpec& s)
{
  auto rats = [](const std::vector<Rat>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
    return out + "]";
  };
  std::ostringstream os;
  os << "algebra " << s.name << " {\n";
  if (s.kind) os << "  kind " << (*s.kind == AlgebraKind::Differential ? "differential" : "presented") << ";\n";
  if (s.base) {
    const auto& b = *s.base;
    os << "  base ";
    switch (b.kind) {
      case BaseSpec::Kind::Poly: os << "poly " << b.var; break;
      case BaseSpec::Kind::MatPoly: os << "matpoly " << b.n << " " << b.var; break;
      case BaseSpec::Kind::FinDim: os << "findim " << b.n << " table " << rats(b.table); break;
      case BaseSpec::Kind::MatUnits: os << "mat " << b.n; break;
    }
    os << ";\n";
  }
  if (s.deriv) {
    const auto& d = *s.deriv;
    os << "  deriv ";
    switch (d.kind) {
      case DerivSpec::Kind::Zero:
        if (d.ad) os << "ad(" << to_dsl(*s.base, *d.ad) << ")";
        else os << "zero";
        break;
      case DerivSpec::Kind::DDx:
        os << d.scale.get_str() << "*d/d" << s.base->var;
        if (d.ad) os << " + ad(" << to_dsl(*s.base, *d.ad) << ")";
        break;
      case DerivSpec::Kind::Matrix: os << "matrix " << rats(d.matrix); break;
    }
    os << ";\n";
  }
  if (!s.generator_names.empty()) {
    if (s.generator_values.empty()) {
      os << "  generators ";
      for (std::size_t i = 0; i < s.generator_names.size(); ++i) os << (i ? ", " : "") << s.generator_names[i];
      os << ";\n";
    } else {
      os << "  generators {\n";
      for (std::size_t i = 0; i < s.generator_names.size(); ++i)
        os << "    " << s.generator_names[i] << " = " << to_dsl(*s.base, s.generator_values[i]) << ";\n";
      os << "  }\n";
    }
  }
  if (!s.products.empty()) {
    os << "  products {\n";
    for (const auto& p : s.products)
      os << "    " << s.generator_names[static_cast<std::size_t>(p.left)] << "(" << p.order << ")"
         << s.generator_names[static_cast<std::size_t>(p.right)] << " = " << to_dsl(p.value, s.generator_names) << ";\n";
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace confal
