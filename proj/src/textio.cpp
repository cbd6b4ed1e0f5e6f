#include "fna/textio.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

#include "fna/algebra.hpp"

namespace fna {

namespace {

// ---------------------------------------------------------------------------
// lexer

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, LParen, RParen, LBracket, RBracket, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) { advance(); }

  const Token& current() const { return current_; }

  void advance() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
    current_.offset = pos_;
    if (pos_ >= input_.size()) {
      current_ = {Tok::End, pos_, ""};
      return;
    }
    char c = input_[pos_];
    switch (c) {
      case '+': current_ = {Tok::Plus, pos_++, "+"}; return;
      case '-': current_ = {Tok::Minus, pos_++, "-"}; return;
      case '*': current_ = {Tok::Star, pos_++, "*"}; return;
      case '/': current_ = {Tok::Slash, pos_++, "/"}; return;
      case '(': current_ = {Tok::LParen, pos_++, "("}; return;
      case ')': current_ = {Tok::RParen, pos_++, ")"}; return;
      case '[': current_ = {Tok::LBracket, pos_++, "["}; return;
      case ']': current_ = {Tok::RBracket, pos_++, "]"}; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) ++pos_;
      current_ = {Tok::Int, start, std::string(input_.substr(start, pos_ - start))};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < input_.size() && std::isalnum(static_cast<unsigned char>(input_[pos_]))) ++pos_;
      current_ = {Tok::Ident, start, std::string(input_.substr(start, pos_ - start))};
      return;
    }
    throw SyntaxError(pos_, {"a token"});
  }

 private:
  std::string_view input_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, 0, ""};
};

// ---------------------------------------------------------------------------
// parser

class Parser {
 public:
  explicit Parser(std::string_view input) : lex_(input) {}

  RawExprPtr parse_input() {
    RawExprPtr e = parse_expr();
    expect(Tok::End, "end of input");
    return e;
  }

 private:
  const Token& tok() const { return lex_.current(); }

  void expect(Tok kind, const std::string& what) {
    if (tok().kind != kind) throw SyntaxError(tok().offset, {what});
    if (kind != Tok::End) lex_.advance();
  }

  static bool starts_atom(const Token& t) {
    return t.kind == Tok::Ident || t.kind == Tok::LParen || t.kind == Tok::LBracket ||
           (t.kind == Tok::Int && t.text == "1");
  }

  RawExprPtr parse_expr() {
    std::vector<std::pair<Rational, RawExprPtr>> terms;
    Rational sign = 1;
    if (tok().kind == Tok::Plus || tok().kind == Tok::Minus) {
      if (tok().kind == Tok::Minus) sign = -1;
      lex_.advance();
    }
    terms.push_back(parse_term(sign));
    while (tok().kind == Tok::Plus || tok().kind == Tok::Minus) {
      sign = tok().kind == Tok::Minus ? -1 : 1;
      lex_.advance();
      terms.push_back(parse_term(sign));
    }
    if (terms.size() == 1 && terms.front().first == 1) return terms.front().second;
    return raw_sum(std::move(terms));
  }

  std::pair<Rational, RawExprPtr> parse_term(Rational sign) {
    if (tok().kind == Tok::Int) {
      // lookahead decides between a coefficient and the unit atom '1'
      Token first = tok();
      lex_.advance();
      if (tok().kind == Tok::Slash || tok().kind == Tok::Star || !starts_atom(tok())) {
        Rational coeff = finish_rational(first);
        if (tok().kind == Tok::Star) {
          lex_.advance();
          return {sign * coeff, parse_wordseq()};
        }
        return {sign * coeff, raw_unit()};
      }
      if (first.text != "1") throw SyntaxError(first.offset, {"'1'", "a coefficient"});
      // '1' juxtaposed with more atoms: a word sequence starting at the unit
      return {sign, parse_wordseq(raw_unit())};
    }
    return {sign, parse_wordseq()};
  }

  Rational finish_rational(const Token& intToken) {
    Integer num(intToken.text);
    if (tok().kind != Tok::Slash) return Rational(num);
    lex_.advance();
    if (tok().kind != Tok::Int) throw SyntaxError(tok().offset, {"an integer"});
    Integer den(tok().text);
    if (den == 0) throw ZeroDenominatorError(tok().offset);
    lex_.advance();
    return make_rational(num, den);
  }

  RawExprPtr parse_wordseq(RawExprPtr first = nullptr) {
    std::vector<RawExprPtr> atoms;
    if (first) atoms.push_back(std::move(first));
    else atoms.push_back(parse_atom());
    for (;;) {
      if (tok().kind == Tok::Star) {
        lex_.advance();
        atoms.push_back(parse_atom());
        continue;
      }
      if (starts_atom(tok())) {
        atoms.push_back(parse_atom());
        continue;
      }
      break;
    }
    if (atoms.size() == 1) return atoms.front();
    return raw_product(std::move(atoms));
  }

  RawExprPtr parse_atom() {
    const Token t = tok();
    switch (t.kind) {
      case Tok::Int:
        if (t.text != "1") break;
        lex_.advance();
        return raw_unit();
      case Tok::Ident:
        lex_.advance();
        if (t.text == "N") {
          // reserved operator name
          expect(Tok::LParen, "'('");
          RawExprPtr child = parse_expr();
          expect(Tok::RParen, "')'");
          return raw_op(std::move(child));
        }
        return raw_letter(t.text);
      case Tok::LBracket: {
        lex_.advance();
        RawExprPtr child = parse_expr();
        expect(Tok::RBracket, "']'");
        return raw_op(std::move(child));
      }
      case Tok::LParen: {
        lex_.advance();
        RawExprPtr child = parse_expr();
        expect(Tok::RParen, "')'");
        return child;
      }
      default:
        break;
    }
    throw SyntaxError(t.offset, {"a letter", "'1'", "'N('", "'['", "'('"});
  }

  Lexer lex_;
};

// ---------------------------------------------------------------------------
// printers

void print_word_into(const BracketedWord& w, std::string& out) {
  if (w.is_unit()) {
    out += "1";
    return;
  }
  bool first = true;
  for (const Factor& f : w.factors()) {
    if (!first) out += " ";
    first = false;
    if (f.is_letter()) {
      out += f.letter().name();
    } else {
      out += "[";
      print_word_into(f.content(), out);
      out += "]";
    }
  }
}

void print_coefficient(const Rational& c, bool first, bool with_star, std::string& out) {
  const bool negative = c < 0;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  Rational a = abs(c);
  if (a != 1) {
    out += rational_to_string(a);
    if (with_star) out += "*";
  }
}

std::string latex_word(const BracketedWord& w) {
  if (w.is_unit()) return "1";
  std::string out;
  for (const Factor& f : w.factors()) {
    std::string piece;
    if (f.is_letter()) {
      piece = f.letter().name();
    } else {
      std::string inner = latex_word(f.content());
      piece = "\\lfloor";
      if (!inner.empty() && std::isalnum(static_cast<unsigned char>(inner.front()))) piece += " ";
      piece += inner;
      piece += "\\rfloor";
    }
    // keep a TeX control word from swallowing a following letter
    if (!out.empty() && out.back() == 'r' && out.size() >= 7 &&
        out.compare(out.size() - 7, 7, "\\rfloor") == 0 &&
        std::isalnum(static_cast<unsigned char>(piece.front())))
      out += " ";
    out += piece;
  }
  return out;
}

// ---------------------------------------------------------------------------
// json helpers

nlohmann::ordered_json json_of_tuple(const TupleRecord& t) {
  nlohmann::ordered_json j;
  j["inputs"] = t.inputs;
  j["lhs"] = t.lhs;
  j["rhs"] = t.rhs;
  return j;
}

std::vector<RawFactor> raw_from_json(const nlohmann::json& j);

RawFactor raw_factor_from_json(const nlohmann::json& j) {
  if (j.is_string()) return RawFactor::letter(j.get<std::string>());
  if (j.is_object()) {
    if (j.size() != 1 || !j.contains("N")) throw SchemaError("factor object must be {\"N\": Word}");
    return RawFactor::bracket(raw_from_json(j.at("N")));
  }
  throw SchemaError("factor must be a letter string or an {\"N\": Word} object");
}

std::vector<RawFactor> raw_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw SchemaError("word must be an array");
  std::vector<RawFactor> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(raw_factor_from_json(item));
  return out;
}

}  // namespace

RawExprPtr parse(std::string_view input) { return Parser(input).parse_input(); }

Element eval_string(std::string_view input) { return eval_expr(parse(input)); }

std::string print_word(const BracketedWord& w) {
  std::string out;
  print_word_into(w, out);
  return out;
}

std::string print_canonical(const Element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    print_coefficient(c, first, /*with_star=*/true, out);
    print_word_into(w, out);
    first = false;
  }
  return out;
}

std::string print_canonical(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    print_coefficient(c, first, /*with_star=*/true, out);
    print_word_into(k.first, out);
    out += " (x) ";
    print_word_into(k.second, out);
    first = false;
  }
  return out;
}

std::string print_latex(const Element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational v = abs(c);
    std::string coeff;
    if (denominator(v) == 1) coeff = numerator_string(v);
    else coeff = "\\frac{" + numerator_string(v) + "}{" + denominator_string(v) + "}";
    if (w.is_unit()) out += coeff;
    else out += (v != 1 ? coeff : "") + latex_word(w);
    first = false;
  }
  return out;
}

nlohmann::ordered_json json_of(const BracketedWord& w) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Factor& f : w.factors()) {
    if (f.is_letter()) {
      arr.push_back(f.letter().name());
    } else {
      nlohmann::ordered_json obj;
      obj["N"] = json_of(f.content());
      arr.push_back(std::move(obj));
    }
  }
  return arr;
}

nlohmann::ordered_json json_of(const Element& a) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : a.terms()) {
    nlohmann::ordered_json term;
    term["num"] = numerator_string(c);
    term["den"] = denominator_string(c);
    term["word"] = json_of(w);
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json j;
  j["terms"] = std::move(terms);
  return j;
}

nlohmann::ordered_json json_of(const TensorElement& t) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [k, c] : t.terms()) {
    nlohmann::ordered_json term;
    term["num"] = numerator_string(c);
    term["den"] = denominator_string(c);
    term["left"] = json_of(k.first);
    term["right"] = json_of(k.second);
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json j;
  j["terms"] = std::move(terms);
  return j;
}

nlohmann::ordered_json json_of(const LawReport& r) {
  nlohmann::ordered_json space;
  space["alphabet"] = r.space.alphabet;
  space["max_degree"] = r.space.max_degree;
  space["arity"] = r.space.arity;
  space["mode"] = r.space.exhaustive ? "exhaustive" : "random";
  if (!r.space.exhaustive) {
    space["sample_count"] = r.space.sample_count;
    space["seed"] = r.space.seed;
  }
  nlohmann::ordered_json j;
  j["law"] = r.law;
  j["space"] = std::move(space);
  j["instances_checked"] = r.instances_checked;
  j["passed"] = r.passed;
  if (r.counterexample) j["counterexample"] = json_of_tuple(*r.counterexample);
  if (r.witness) j["witness"] = json_of_tuple(*r.witness);
  return j;
}

std::string to_json(const Element& a) { return json_of(a).dump(); }
std::string to_json(const TensorElement& t) { return json_of(t).dump(); }
std::string to_json(const LawReport& r) { return json_of(r).dump(); }

Element element_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc.at("terms").is_array())
    throw SchemaError("document must be {\"terms\": [...]}");
  Element out;
  for (const auto& term : doc.at("terms")) {
    if (!term.is_object() || !term.contains("num") || !term.contains("den") ||
        !term.contains("word"))
      throw SchemaError("term must carry num, den and word");
    if (!term.at("num").is_string() || !term.at("den").is_string())
      throw SchemaError("num and den must be decimal strings");
    Rational c = rational_from_strings(term.at("num").get<std::string>(),
                                       term.at("den").get<std::string>());
    BracketedWord w;
    try {
      w = validate_basis(raw_from_json(term.at("word")));
    } catch (const AdjacentBracketsError& e) {
      throw SchemaError(std::string("word is not a basis word: ") + e.what());
    } catch (const InvalidLetterError& e) {
      throw SchemaError(e.what());
    }
    out.add_term(w, c);
  }
  return out;
}

std::string print_report(const LawReport& r) {
  std::ostringstream out;
  out << r.law << ": " << (r.passed ? "PASS" : "FAIL");
  out << " (" << (r.space.exhaustive ? "exhaustive" : "random");
  out << ", alphabet={";
  for (std::size_t i = 0; i < r.space.alphabet.size(); ++i) {
    if (i) out << ",";
    out << r.space.alphabet[i];
  }
  out << "}, max_degree=" << r.space.max_degree << ", arity=" << r.space.arity;
  if (!r.space.exhaustive)
    out << ", sample_count=" << r.space.sample_count << ", seed=" << r.space.seed;
  out << ", instances=" << r.instances_checked << ")";
  auto detail = [&out](const char* label, const TupleRecord& t) {
    for (std::size_t i = 0; i < t.inputs.size(); ++i)
      out << "\n  " << label << " input[" << i << "] = " << t.inputs[i];
    out << "\n  " << label << " lhs = " << t.lhs;
    out << "\n  " << label << " rhs = " << t.rhs;
  };
  if (r.counterexample) detail("counterexample", *r.counterexample);
  if (r.witness) detail("witness", *r.witness);
  return out.str();
}

}  // namespace fna
