#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fna/element.hpp"
#include "fna/rawexpr.hpp"
#include "fna/report.hpp"

namespace fna {

/// Parses the expression language (whitespace-insensitive):
///   expr    := sign? term (sign term)*          sign := '+' | '-'
///   term    := rat '*' wordseq | rat | wordseq
///   wordseq := atom (('*')? atom)*
///   atom    := letter | '1' | 'N(' expr ')' | '[' expr ']' | '(' expr ')'
///   rat     := int ('/' int)?
///   letter  := identifier other than the reserved operator name N
/// 'N(...)' and '[...]' are synonyms. Diagnostics carry the byte offset and
/// the expected-token set. Throws SyntaxError or ZeroDenominatorError.
RawExprPtr parse(std::string_view input);

/// parse + eval_expr.
Element eval_string(std::string_view input);

std::string print_word(const BracketedWord& w);

/// Terms in canonical order, coefficients +-1 elided except for the sign,
/// factors space-separated, brackets as '[' ']', the identity word as '1',
/// the zero element as '0'.
std::string print_canonical(const Element& a);

/// Tensor terms as "a (x) b" pairs, same coefficient conventions.
std::string print_canonical(const TensorElement& t);

std::string print_latex(const Element& a);

nlohmann::ordered_json json_of(const BracketedWord& w);
nlohmann::ordered_json json_of(const Element& a);
nlohmann::ordered_json json_of(const TensorElement& t);
nlohmann::ordered_json json_of(const LawReport& r);

/// Element schema: {"terms":[{"num":string,"den":string,"word":Word}]} with
/// Word an array of letter strings and {"N": Word} objects; the empty array
/// is the identity word; terms in canonical order; integers as decimal
/// strings. to_json(from_json(s)) == to_json-normal form of s.
std::string to_json(const Element& a);
std::string to_json(const TensorElement& t);
std::string to_json(const LawReport& r);

/// Throws SchemaError on anything that does not match the schema.
Element element_from_json(std::string_view text);

/// One-line summary, plus counterexample/witness detail lines when present.
std::string print_report(const LawReport& r);

}  // namespace fna
