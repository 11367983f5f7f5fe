#include "invlim/parse.hpp"

#include <cctype>

#include "invlim/bigint.hpp"

namespace invlim {
namespace {

enum class Tok {
  Num, XVar, TVar, Word,
  Plus, Minus, Star, Slash, Caret,
  LParen, RParen, Arrow, Comma, Colon, Semi, Eq,
  Newline, End,
};

struct Token {
  Tok kind;
  BigInt num;        // Num
  int var_index = 0; // XVar
  std::string word;  // Word
  int line = 1, col = 1;
};

[[noreturn]] void syntax(const Token& at, const std::string& msg) {
  throw Error(Errc::SyntaxError, msg, at.line, at.col);
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Tok k) {
    out.push_back(Token{k, 0, 0, "", line, col});
    return &out.back();
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      push(Tok::Newline);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Token* t = push(Tok::Num);
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i++];
        ++col;
      }
      t->num = BigInt(digits);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      int start_col = col;
      std::string word;
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
        word += text[i++];
        ++col;
      }
      if (word == "x" && i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          digits += text[i++];
          ++col;
        }
        Token t{Tok::XVar, 0, 0, "", line, start_col};
        if (digits.size() > 6) throw Error(Errc::UnknownVariable, "no such variable: x" + digits, line, start_col);
        t.var_index = std::stoi(digits);
        out.push_back(std::move(t));
      } else if (word == "t") {
        out.push_back(Token{Tok::TVar, 0, 0, "", line, start_col});
      } else {
        out.push_back(Token{Tok::Word, 0, 0, word, line, start_col});
      }
      continue;
    }
    Token t{Tok::End, 0, 0, "", line, col};
    switch (ch) {
      case '+': t.kind = Tok::Plus; break;
      case '*': t.kind = Tok::Star; break;
      case '/': t.kind = Tok::Slash; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case ',': t.kind = Tok::Comma; break;
      case ':': t.kind = Tok::Colon; break;
      case ';': t.kind = Tok::Semi; break;
      case '=': t.kind = Tok::Eq; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          t.kind = Tok::Arrow;
          ++i;
          ++col;
        } else {
          t.kind = Tok::Minus;
        }
        break;
      default:
        throw Error(Errc::SyntaxError, std::string("unexpected character '") + ch + "'", line, col);
    }
    out.push_back(std::move(t));
    ++i;
    ++col;
  }
  out.push_back(Token{Tok::End, 0, 0, "", line, col});
  return out;
}

/// Recursive-descent expression parser over a token window.
class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, size_t pos, size_t end, const Field& k, int nvars)
      : toks_(toks), pos_(pos), end_(end), field_(k), n_(nvars) {}

  Polynomial parse_expr() {
    bool negate = false;
    if (peek().kind == Tok::Plus) {
      next();
    } else if (peek().kind == Tok::Minus) {
      next();
      negate = true;
    }
    Polynomial acc = parse_term();
    if (negate) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      Polynomial rhs = parse_term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  size_t pos() const { return pos_; }

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < end_ ? toks_[i] : toks_[end_];  // toks_[end_] acts as the stop token
  }

 private:
  const Token& next() { return toks_[pos_++]; }

  bool starts_factor(const Token& t) const {
    return t.kind == Tok::Num || t.kind == Tok::XVar || t.kind == Tok::TVar ||
           t.kind == Tok::LParen || t.kind == Tok::Word;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
        acc = acc * parse_factor();
      } else if (starts_factor(peek())) {
        acc = acc * parse_factor();  // implicit '*'
      } else {
        break;
      }
    }
    return acc;
  }

  long long parse_exponent() {
    // Follows a '^' that the caller consumed.
    if (peek().kind != Tok::Num) syntax(peek(), "expected an integer exponent after '^'");
    const Token& t = next();
    if (t.num > 100000) throw Error(Errc::IndexOutOfRange, "exponent too large", t.line, t.col);
    return t.num.convert_to<long long>();
  }

  Polynomial parse_factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Num: {
        next();
        // integer '/' integer is a single rational literal.
        if (peek().kind == Tok::Slash && peek(1).kind == Tok::Num) {
          next();
          const Token& den = next();
          try {
            return Polynomial::constant(field_, n_, Scalar::from_fraction(field_, t.num, den.num));
          } catch (const Error& e) {
            if (e.code() == Errc::DivisionByZero)
              throw Error(Errc::CoefficientOutOfField, "denominator vanishes in " + field_.descriptor(),
                          den.line, den.col);
            throw;
          }
        }
        return Polynomial::constant(field_, n_, Scalar::from_integer(field_, t.num));
      }
      case Tok::XVar: {
        next();
        if (t.var_index < 1 || t.var_index > n_)
          throw Error(Errc::UnknownVariable,
                      "no such variable: x" + std::to_string(t.var_index) + " (map has " +
                          std::to_string(n_) + ")",
                      t.line, t.col);
        Polynomial v = Polynomial::variable(field_, n_, t.var_index - 1);
        if (peek().kind == Tok::Caret) {
          next();
          return v.pow(parse_exponent());
        }
        return v;
      }
      case Tok::TVar: {
        next();
        if (field_.kind() != FieldKind::Extension)
          throw Error(Errc::UnknownVariable, "'t' needs an extension field, got " + field_.descriptor(),
                      t.line, t.col);
        Scalar gen = Scalar::from_coeffs(field_, {0, 1});
        if (peek().kind == Tok::Caret) {
          next();
          gen = gen.pow(parse_exponent());
        }
        return Polynomial::constant(field_, n_, gen);
      }
      case Tok::LParen: {
        next();
        Polynomial inner = parse_expr();
        if (peek().kind != Tok::RParen) syntax(peek(), "expected ')'");
        next();
        if (peek().kind == Tok::Caret) {
          next();
          return inner.pow(parse_exponent());
        }
        return inner;
      }
      case Tok::Word:
        throw Error(Errc::UnknownVariable, "unknown name '" + t.word + "'", t.line, t.col);
      default:
        syntax(t, "expected a number, variable or '('");
    }
  }

  const std::vector<Token>& toks_;
  size_t pos_;
  size_t end_;
  Field field_;
  int n_;
};

/// Univariate integer polynomial in t, for extension-field moduli:
/// "t^2+t+1", "t^3+2t+1". Returns ascending coefficients.
std::vector<long long> parse_tpoly(const std::vector<Token>& toks, size_t& pos, size_t end) {
  std::vector<long long> coeffs;
  auto add = [&](int deg, long long c) {
    if (static_cast<size_t>(deg) >= coeffs.size()) coeffs.resize(static_cast<size_t>(deg) + 1, 0);
    coeffs[static_cast<size_t>(deg)] += c;
  };
  bool first = true;
  while (pos < end) {
    long long sign = 1;
    if (toks[pos].kind == Tok::Plus || toks[pos].kind == Tok::Minus) {
      sign = toks[pos].kind == Tok::Minus ? -1 : 1;
      ++pos;
    } else if (!first) {
      break;
    }
    first = false;
    long long c = 1;
    bool have_coeff = false;
    if (pos < end && toks[pos].kind == Tok::Num) {
      c = toks[pos].num.convert_to<long long>();
      have_coeff = true;
      ++pos;
      if (pos < end && toks[pos].kind == Tok::Star) ++pos;
    }
    int deg = 0;
    if (pos < end && toks[pos].kind == Tok::TVar) {
      deg = 1;
      ++pos;
      if (pos < end && toks[pos].kind == Tok::Caret) {
        ++pos;
        if (pos >= end || toks[pos].kind != Tok::Num) syntax(toks[pos < end ? pos : end - 1], "expected an exponent");
        deg = static_cast<int>(toks[pos].num.convert_to<long long>());
        ++pos;
      }
    } else if (!have_coeff) {
      syntax(toks[pos < end ? pos : end - 1], "expected a modulus term");
    }
    add(deg, sign * c);
  }
  return coeffs;
}

Field parse_field_tokens(const std::vector<Token>& toks, size_t& pos, size_t end) {
  if (pos < end && toks[pos].kind == Tok::Word && toks[pos].word == "rational") {
    ++pos;
    return Field::rationals();
  }
  if (pos < end && toks[pos].kind == Tok::Word && toks[pos].word == "p" && pos + 2 < end + 1 &&
      toks[pos + 1].kind == Tok::Eq && toks[pos + 2].kind == Tok::Num) {
    long long p = toks[pos + 2].num.convert_to<long long>();
    pos += 3;
    if (pos < end && toks[pos].kind == Tok::Semi) {
      ++pos;
      if (!(pos + 1 < end && toks[pos].kind == Tok::Word && toks[pos].word == "mod" &&
            toks[pos + 1].kind == Tok::Eq))
        syntax(toks[pos < end ? pos : end - 1], "expected 'mod=' after ';'");
      pos += 2;
      return Field::extension(p, parse_tpoly(toks, pos, end));
    }
    return Field::prime(p);
  }
  syntax(toks[pos < end ? pos : end - 1], "expected a field descriptor: p=<prime>[;mod=<poly in t>] or rational");
}

struct Statement {
  size_t begin, end;  // token window [begin, end)
};

/// Cut the token list into statements at top-level newlines, and at '/' when
/// it is followed by an assignment head "x<i> ->" (that is the map-document
/// separator; any other '/' belongs to a rational literal).
std::vector<Statement> split_statements(const std::vector<Token>& toks) {
  std::vector<Statement> out;
  size_t start = 0, i = 0;
  int depth = 0;
  auto flush = [&](size_t stop) {
    if (stop > start) out.push_back(Statement{start, stop});
  };
  for (; toks[i].kind != Tok::End; ++i) {
    if (toks[i].kind == Tok::LParen) ++depth;
    if (toks[i].kind == Tok::RParen && depth > 0) --depth;
    bool cut = false;
    if (depth == 0 && toks[i].kind == Tok::Newline) cut = true;
    if (depth == 0 && toks[i].kind == Tok::Slash && i + 2 < toks.size() &&
        toks[i + 1].kind == Tok::XVar && toks[i + 2].kind == Tok::Arrow)
      cut = true;
    if (cut) {
      flush(i);
      start = i + 1;
    }
  }
  flush(i);
  return out;
}

Scalar constant_value(const std::vector<Token>& toks, size_t begin, size_t end, const Field& k) {
  ExprParser p(toks, begin, end, k, 1);
  Polynomial v = p.parse_expr();
  if (p.pos() != end) syntax(p.peek(), "unexpected trailing input");
  if (!v.is_constant())
    throw Error(Errc::SyntaxError, "expected a constant", toks[begin].line, toks[begin].col);
  return v.constant_term();
}

}  // namespace

Field parse_field(const std::string& descriptor) {
  auto toks = tokenize(descriptor);
  // Strip trailing newlines from the window.
  size_t end = toks.size() - 1;
  while (end > 0 && toks[end - 1].kind == Tok::Newline) --end;
  size_t pos = 0;
  Field k = parse_field_tokens(toks, pos, end);
  if (pos != end) syntax(toks[pos], "unexpected trailing input after the field descriptor");
  return k;
}

Polynomial parse_polynomial(const std::string& text, const Field& k, int nvars) {
  auto toks = tokenize(text);
  size_t end = toks.size() - 1;
  while (end > 0 && toks[end - 1].kind == Tok::Newline) --end;
  ExprParser p(toks, 0, end, k, nvars);
  Polynomial f = p.parse_expr();
  if (p.pos() != end) syntax(p.peek(), "unexpected trailing input");
  return f;
}

Scalar parse_scalar(const std::string& text, const Field& k) {
  auto toks = tokenize(text);
  size_t end = toks.size() - 1;
  while (end > 0 && toks[end - 1].kind == Tok::Newline) --end;
  return constant_value(toks, 0, end, k);
}

ParsedMap parse_map(const std::string& text, const std::optional<Field>& fallback_field) {
  auto toks = tokenize(text);
  auto stmts = split_statements(toks);

  // First pass: find the field line and count assignments (that fixes n).
  std::optional<Field> field;
  std::vector<Statement> assignments;
  std::optional<Statement> point_stmt;
  for (const auto& st : stmts) {
    const Token& head = toks[st.begin];
    if (head.kind == Tok::Word && (head.word == "field" || head.word == "point")) {
      if (st.begin + 1 >= st.end || toks[st.begin + 1].kind != Tok::Colon)
        syntax(head, "expected ':' after '" + head.word + "'");
      Statement body{st.begin + 2, st.end};
      if (body.begin >= body.end) syntax(head, "empty '" + head.word + "' line");
      if (head.word == "field") {
        if (field) syntax(head, "duplicate field line");
        size_t pos = body.begin;
        field = parse_field_tokens(toks, pos, body.end);
        if (pos != body.end) syntax(toks[pos], "unexpected trailing input after the field descriptor");
      } else {
        if (point_stmt) syntax(head, "duplicate point line");
        point_stmt = body;
      }
      continue;
    }
    if (head.kind == Tok::XVar && st.begin + 1 < st.end && toks[st.begin + 1].kind == Tok::Arrow) {
      assignments.push_back(st);
      continue;
    }
    syntax(head, "expected 'x<i> ->', 'field:' or 'point:'");
  }

  if (!field) field = fallback_field;
  if (!field)
    fail(Errc::UnsupportedField, "no coefficient field given (add a 'field:' line or pass --field)");

  int n = static_cast<int>(assignments.size());
  if (n == 0) {
    const Token& at = toks.back();
    throw Error(Errc::SyntaxError, "the document contains no assignments", at.line, at.col);
  }

  // Second pass: parse each right-hand side with n known.
  std::vector<std::optional<Polynomial>> images(static_cast<size_t>(n));
  for (const auto& st : assignments) {
    const Token& head = toks[st.begin];
    int idx = head.var_index;
    if (idx < 1 || idx > n)
      throw Error(Errc::UnknownVariable,
                  "assignment for x" + std::to_string(idx) + " but the map has " +
                      std::to_string(n) + " variables",
                  head.line, head.col);
    if (images[static_cast<size_t>(idx - 1)])
      throw Error(Errc::SyntaxError, "duplicate assignment for x" + std::to_string(idx), head.line,
                  head.col);
    ExprParser p(toks, st.begin + 2, st.end, *field, n);
    Polynomial rhs = p.parse_expr();
    if (p.pos() != st.end) syntax(p.peek(), "unexpected trailing input");
    images[static_cast<size_t>(idx - 1)] = std::move(rhs);
  }

  std::vector<Polynomial> ordered;
  ordered.reserve(static_cast<size_t>(n));
  for (auto& img : images) ordered.push_back(std::move(*img));

  std::optional<std::vector<Scalar>> basepoint;
  if (point_stmt) {
    std::vector<Scalar> pt;
    size_t begin = point_stmt->begin;
    for (size_t i = begin; i <= point_stmt->end; ++i) {
      if (i == point_stmt->end || toks[i].kind == Tok::Comma) {
        if (i == begin) syntax(toks[begin], "empty point coordinate");
        pt.push_back(constant_value(toks, begin, i, *field));
        begin = i + 1;
      }
    }
    if (static_cast<int>(pt.size()) != n)
      throw Error(Errc::ArityMismatch,
                  "point has " + std::to_string(pt.size()) + " coordinates, map has " +
                      std::to_string(n),
                  toks[point_stmt->begin].line, toks[point_stmt->begin].col);
    basepoint = std::move(pt);
  }

  return ParsedMap{*field, PolyEndo(*field, std::move(ordered)), std::move(basepoint)};
}

}  // namespace invlim
