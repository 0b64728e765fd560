#include <cctype>

#include "li2lab/expr.hpp"

namespace li2lab {

namespace {

const std::map<std::string, Func, std::less<>>& func_table() {
  static const std::map<std::string, Func, std::less<>> t = {
      {"Li2", Func::li2},        {"Cl2", Func::cl2},
      {"Ti2", Func::ti2},        {"Chi2", Func::chi2},
      {"RogersL", Func::rogers_l}, {"BlochWigner", Func::bloch_wigner},
      {"ln", Func::ln},          {"sqrt", Func::sqrt_fn},
      {"exp", Func::exp_fn},     {"arctan", Func::arctan},
      {"arccot", Func::arccot},  {"arcsin", Func::arcsin},
      {"arccosh", Func::arccosh},{"re", Func::re_part},
      {"im", Func::im_part},     {"arg", Func::arg_fn},
      {"abs", Func::abs_fn},     {"conj", Func::conj_fn},
  };
  return t;
}

const std::map<std::string, ConstantTag, std::less<>>& const_table() {
  static const std::map<std::string, ConstantTag, std::less<>> t = {
      {"pi", ConstantTag::pi},       {"ln2", ConstantTag::ln2},
      {"zeta2", ConstantTag::zeta2}, {"zeta3", ConstantTag::zeta3},
      {"catalan", ConstantTag::catalan}, {"e", ConstantTag::euler_e},
  };
  return t;
}

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw SyntaxError(pos, std::string("'") + c + "'");
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        auto n = Expr::make(Expr::Kind::add);
        const_cast<Expr&>(*n).args = {lhs, parse_term()};
        lhs = n;
      } else if (eat('-')) {
        auto n = Expr::make(Expr::Kind::sub);
        const_cast<Expr&>(*n).args = {lhs, parse_term()};
        lhs = n;
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        auto n = Expr::make(Expr::Kind::mul);
        const_cast<Expr&>(*n).args = {lhs, parse_factor()};
        lhs = n;
      } else if (eat('/')) {
        auto n = Expr::make(Expr::Kind::div);
        const_cast<Expr&>(*n).args = {lhs, parse_factor()};
        lhs = n;
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_factor() {
    skip_ws();
    if (eat('-')) {
      auto n = Expr::make(Expr::Kind::neg);
      const_cast<Expr&>(*n).args = {parse_factor()};
      return n;
    }
    ExprPtr base = parse_atom();
    skip_ws();
    if (eat('^')) {
      auto n = Expr::make(Expr::Kind::pow);
      const_cast<Expr&>(*n).args = {base, parse_factor()};
      return n;
    }
    return base;
  }

  std::string parse_string_literal() {
    skip_ws();
    if (pos >= s.size() || s[pos] != '"') throw SyntaxError(pos, "string literal");
    ++pos;
    std::string out;
    while (pos < s.size() && s[pos] != '"') {
      if (s[pos] == '\\' && pos + 1 < s.size()) ++pos;
      out.push_back(s[pos++]);
    }
    if (pos >= s.size()) throw SyntaxError(pos, "closing quote");
    ++pos;
    return out;
  }

  mpq_class parse_number_token() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
      ++pos;
    if (pos == start) throw SyntaxError(pos, "number");
    std::string tok(s.substr(start, pos - start));
    auto dot = tok.find('.');
    if (dot == std::string::npos) {
      mpq_class q{mpz_class(tok)};
      // NUMBER admits rationals p/q: an integer immediately followed by
      // '/digits' lexes as one token (so 1/2 is the exact rational).
      if (pos + 1 < s.size() && s[pos] == '/' &&
          std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        mpz_class den(std::string(s.substr(dstart, pos - dstart)));
        if (den == 0) throw SyntaxError(dstart, "nonzero denominator");
        q /= mpq_class(den);
      }
      q.canonicalize();
      return q;
    }
    std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
    if (digits.empty()) throw SyntaxError(start, "number");
    mpz_class num(digits);
    mpz_class den(1);
    for (size_t i = dot + 1; i < tok.size(); ++i) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  // signed rational for pfq parameter lists: [-] NUMBER [/ NUMBER]
  mpq_class parse_signed_rational() {
    skip_ws();
    bool neg = eat('-');
    mpq_class v = parse_number_token();
    skip_ws();
    if (eat('/')) {
      mpq_class d = parse_number_token();
      if (d == 0) throw SyntaxError(pos, "nonzero denominator");
      v /= d;
    }
    v.canonicalize();
    return neg ? mpq_class(-v) : v;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos >= s.size()) throw SyntaxError(pos, "expression");
    char c = s[pos];
    if (eat('(')) {
      ExprPtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      auto n = Expr::make(Expr::Kind::literal);
      const_cast<Expr&>(*n).lit = parse_number_token();
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string ident(s.substr(start, pos - start));
      skip_ws();
      if (ident == "i") {
        return Expr::make(Expr::Kind::imag_unit);
      }
      if (ident == "root") {
        expect('(');
        std::string poly = parse_string_literal();
        expect(',');
        skip_ws();
        size_t sel_start = pos;
        int depth = 0;
        while (pos < s.size() && (depth > 0 || s[pos] != ')')) {
          if (s[pos] == '(') ++depth;
          if (s[pos] == ')') --depth;
          ++pos;
        }
        std::string sel_text(s.substr(sel_start, pos - sel_start));
        expect(')');
        auto n = Expr::make(Expr::Kind::root);
        auto& m = const_cast<Expr&>(*n);
        m.poly_text = IntPolynomial::parse(poly).to_string();  // normalized
        m.selector = RootSelector::parse(sel_text);
        return n;
      }
      if (ident == "pfq") {
        expect('(');
        auto n = Expr::make(Expr::Kind::pfq);
        auto& m = const_cast<Expr&>(*n);
        do {
          m.upper.push_back(parse_signed_rational());
        } while (eat(','));
        expect(';');
        do {
          m.lower.push_back(parse_signed_rational());
        } while (eat(','));
        expect(';');
        m.args = {parse_expr()};
        expect(')');
        return n;
      }
      auto fit = func_table().find(ident);
      if (fit != func_table().end()) {
        if (peek() != '(') throw SyntaxError(pos, "'(' after function name");
        expect('(');
        auto n = Expr::make(Expr::Kind::call);
        auto& m = const_cast<Expr&>(*n);
        m.fn = fit->second;
        do {
          m.args.push_back(parse_expr());
        } while (eat(','));
        expect(')');
        return n;
      }
      auto cit = const_table().find(ident);
      if (cit != const_table().end()) {
        if (peek() == '(') throw SyntaxError(pos, "constant used as function");
        auto n = Expr::make(Expr::Kind::constant);
        const_cast<Expr&>(*n).ctag = cit->second;
        return n;
      }
      // plain parameter
      if (peek() == '(') throw SyntaxError(pos, "known function name");
      auto n = Expr::make(Expr::Kind::param);
      const_cast<Expr&>(*n).name = ident;
      return n;
    }
    throw SyntaxError(pos, "number, name or '('");
  }
};

const char* func_name(Func f) {
  switch (f) {
    case Func::li2: return "Li2";
    case Func::cl2: return "Cl2";
    case Func::ti2: return "Ti2";
    case Func::chi2: return "Chi2";
    case Func::rogers_l: return "RogersL";
    case Func::bloch_wigner: return "BlochWigner";
    case Func::ln: return "ln";
    case Func::sqrt_fn: return "sqrt";
    case Func::exp_fn: return "exp";
    case Func::arctan: return "arctan";
    case Func::arccot: return "arccot";
    case Func::arcsin: return "arcsin";
    case Func::arccosh: return "arccosh";
    case Func::re_part: return "re";
    case Func::im_part: return "im";
    case Func::arg_fn: return "arg";
    case Func::abs_fn: return "abs";
    case Func::conj_fn: return "conj";
  }
  return "?";
}

const char* const_name(ConstantTag t) {
  switch (t) {
    case ConstantTag::pi: return "pi";
    case ConstantTag::ln2: return "ln2";
    case ConstantTag::zeta2: return "zeta2";
    case ConstantTag::zeta3: return "zeta3";
    case ConstantTag::catalan: return "catalan";
    case ConstantTag::euler_e: return "e";
  }
  return "?";
}

std::string rat_str(const mpq_class& q) {
  return q.get_str();
}

void print_rec(const ExprPtr& e, std::string& out);

void print_paren(const ExprPtr& e, std::string& out) {
  out += "(";
  print_rec(e, out);
  out += ")";
}

void print_rec(const ExprPtr& e, std::string& out) {
  switch (e->kind) {
    case Expr::Kind::literal: {
      if (e->lit >= 0) {
        out += rat_str(e->lit);  // "p" or "p/q", both single NUMBER tokens
      } else {
        out += "(0 - " + rat_str(mpq_class(-e->lit)) + ")";
      }
      return;
    }
    case Expr::Kind::constant: out += const_name(e->ctag); return;
    case Expr::Kind::imag_unit: out += "i"; return;
    case Expr::Kind::param: out += e->name; return;
    case Expr::Kind::neg:
      out += "-";
      print_paren(e->args[0], out);
      return;
    case Expr::Kind::add:
      print_paren(e->args[0], out);
      out += " + ";
      print_paren(e->args[1], out);
      return;
    case Expr::Kind::sub:
      print_paren(e->args[0], out);
      out += " - ";
      print_paren(e->args[1], out);
      return;
    case Expr::Kind::mul:
      print_paren(e->args[0], out);
      out += "*";
      print_paren(e->args[1], out);
      return;
    case Expr::Kind::div:
      print_paren(e->args[0], out);
      out += "/";
      print_paren(e->args[1], out);
      return;
    case Expr::Kind::pow:
      print_paren(e->args[0], out);
      out += "^";
      print_paren(e->args[1], out);
      return;
    case Expr::Kind::call: {
      out += func_name(e->fn);
      out += "(";
      for (size_t k = 0; k < e->args.size(); ++k) {
        if (k) out += ", ";
        print_rec(e->args[k], out);
      }
      out += ")";
      return;
    }
    case Expr::Kind::root:
      out += "root(\"" + e->poly_text + "\", " + e->selector.to_string() + ")";
      return;
    case Expr::Kind::pfq: {
      out += "pfq(";
      for (size_t k = 0; k < e->upper.size(); ++k) {
        if (k) out += ",";
        out += rat_str(e->upper[k]);
      }
      out += "; ";
      for (size_t k = 0; k < e->lower.size(); ++k) {
        if (k) out += ",";
        out += rat_str(e->lower[k]);
      }
      out += "; ";
      print_rec(e->args[0], out);
      out += ")";
      return;
    }
  }
}

}  // namespace

ExprPtr parse(std::string_view text) {
  Parser p{text};
  ExprPtr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw SyntaxError(p.pos, "end of input");
  return e;
}

std::string print(const ExprPtr& e) {
  std::string out;
  print_rec(e, out);
  return out;
}

std::set<std::string> free_params(const ExprPtr& e) {
  std::set<std::string> out;
  std::vector<ExprPtr> stack{e};
  while (!stack.empty()) {
    ExprPtr n = stack.back();
    stack.pop_back();
    if (n->kind == Expr::Kind::param) out.insert(n->name);
    for (const auto& a : n->args) stack.push_back(a);
  }
  return out;
}

}  // namespace li2lab
