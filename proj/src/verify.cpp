#include "fna/verify.hpp"

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <span>

#include "fna/algebra.hpp"
#include "fna/coalgebra.hpp"
#include "fna/enumeration.hpp"
#include "fna/hopf.hpp"
#include "fna/textio.hpp"

namespace fna {

namespace {

using Tuple = std::span<const BracketedWord>;
using Check = std::function<std::optional<TupleRecord>(Tuple)>;

Element word_element(const BracketedWord& w) { return Element::from_word(w); }

TupleRecord record(Tuple tuple, std::string lhs, std::string rhs) {
  TupleRecord r;
  for (const BracketedWord& w : tuple) r.inputs.push_back(print_word(w));
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

std::optional<TupleRecord> element_mismatch(Tuple tuple, const Element& lhs, const Element& rhs) {
  if (lhs == rhs) return std::nullopt;
  return record(tuple, print_canonical(lhs), print_canonical(rhs));
}

std::optional<TupleRecord> tensor_mismatch(Tuple tuple, const TensorElement& lhs,
                                           const TensorElement& rhs) {
  if (lhs == rhs) return std::nullopt;
  return record(tuple, print_canonical(lhs), print_canonical(rhs));
}

// ---------------------------------------------------------------------------
// law checks (universal unless stated otherwise)

// N(u)N(v) = N(N(u)v) + N(uN(v)) - N(N(uv))
std::optional<TupleRecord> check_nijenhuis(Tuple t) {
  Element u = word_element(t[0]), v = word_element(t[1]);
  Element lhs = diamond(bracket(u), bracket(v));
  Element rhs = bracket(diamond(bracket(u), v));
  rhs += bracket(diamond(u, bracket(v)));
  rhs -= bracket(bracket(diamond(u, v)));
  return element_mismatch(t, lhs, rhs);
}

std::optional<TupleRecord> check_assoc(Tuple t) {
  Element a = word_element(t[0]), b = word_element(t[1]), c = word_element(t[2]);
  return element_mismatch(t, diamond(diamond(a, b), c), diamond(a, diamond(b, c)));
}

std::optional<TupleRecord> check_unit(Tuple t) {
  Element a = word_element(t[0]);
  if (auto bad = element_mismatch(t, diamond(Element::unit(), a), a)) return bad;
  return element_mismatch(t, diamond(a, Element::unit()), a);
}

// join(factorize(w)) = w and factorizing the join gives the same sequence
std::optional<TupleRecord> check_factorization(Tuple t) {
  const BracketedWord& w = t[0];
  std::vector<Factor> factors = diamond_factorize(w);
  Element joined = Element::unit();
  for (const Factor& f : factors)
    joined = diamond(joined, word_element(BracketedWord({f})));
  if (auto bad = element_mismatch(t, joined, word_element(w))) return bad;
  const BracketedWord& rejoined = joined.terms().begin()->first;
  if (diamond_factorize(rejoined) != factors)
    return record(t, print_word(rejoined), print_word(w));
  return std::nullopt;
}

std::optional<TupleRecord> check_delta_mult(Tuple t) {
  Element u = word_element(t[0]), v = word_element(t[1]);
  return tensor_mismatch(t, coproduct(diamond(u, v)),
                         tensor_multiply(coproduct(u), coproduct(v)));
}

std::optional<TupleRecord> check_coassoc(Tuple t) {
  // triple tensors expanded locally
  using Triple = std::array<BracketedWord, 3>;
  struct TripleLess {
    bool operator()(const Triple& a, const Triple& b) const {
      for (int i = 0; i < 3; ++i) {
        auto c = compare(a[i], b[i]);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      }
      return false;
    }
  };
  using TripleMap = std::map<Triple, Rational, TripleLess>;
  auto add = [](TripleMap& m, const Triple& k, const Rational& c) {
    auto [it, inserted] = m.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) m.erase(it);
    }
  };
  auto print_triples = [](const TripleMap& m) {
    if (m.empty()) return std::string("0");
    std::string out;
    bool first = true;
    for (const auto& [k, c] : m) {
      if (!first) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      Rational a = abs(c);
      if (a != 1) out += rational_to_string(a) + "*";
      out += print_word(k[0]) + " (x) " + print_word(k[1]) + " (x) " + print_word(k[2]);
      first = false;
    }
    return out;
  };

  TensorElement dw = coproduct(t[0]);
  TripleMap lhs, rhs;
  for (const auto& [k, c] : dw.terms()) {
    const TensorElement d_left = coproduct(k.first);  // (D (x) id)
    for (const auto& [k2, c2] : d_left.terms())
      add(lhs, {k2.first, k2.second, k.second}, c * c2);
    const TensorElement d_right = coproduct(k.second);  // (id (x) D)
    for (const auto& [k2, c2] : d_right.terms())
      add(rhs, {k.first, k2.first, k2.second}, c * c2);
  }
  if (lhs == rhs) return std::nullopt;
  return record(t, print_triples(lhs), print_triples(rhs));
}

// D(N(w)) = (id (x) N) D(w)
std::optional<TupleRecord> check_cocycle(Tuple t) {
  Element w = word_element(t[0]);
  return tensor_mismatch(
      t, coproduct(bracket(w)),
      apply_right(coproduct(w), [](const Element& e) { return bracket(e); }));
}

std::optional<TupleRecord> check_counit_alg(Tuple t) {
  Rational lhs = counit(diamond(word_element(t[0]), word_element(t[1])));
  Rational rhs = counit(word_element(t[0])) * counit(word_element(t[1]));
  if (lhs == rhs) return std::nullopt;
  return record(t, rational_to_string(lhs), rational_to_string(rhs));
}

// (counit (x) id) D(w) = 1 (x) w
std::optional<TupleRecord> check_left_counit(Tuple t) {
  Element collapsed;
  const TensorElement dw0 = coproduct(t[0]);
  for (const auto& [k, c] : dw0.terms())
    collapsed.add_term(k.second, c * counit(word_element(k.first)));
  return element_mismatch(t, collapsed, word_element(t[0]));
}

std::optional<TupleRecord> check_grade_mul(Tuple t) {
  const unsigned expected = t[0].degree() + t[1].degree();
  Element product = diamond(word_element(t[0]), word_element(t[1]));
  for (const auto& [w, c] : product.terms()) {
    (void)c;
    if (w.degree() != expected)
      return record(t, print_canonical(product),
                    "every term of degree " + std::to_string(expected));
  }
  return std::nullopt;
}

// each coproduct term u (x) v has deg u = 0, deg v = n or deg u, deg v > 0
// with deg u + deg v = n
std::optional<TupleRecord> check_grade_delta(Tuple t) {
  const unsigned n = t[0].degree();
  TensorElement dw = coproduct(t[0]);
  for (const auto& [k, c] : dw.terms()) {
    (void)c;
    const unsigned du = k.first.degree(), dv = k.second.degree();
    const bool ok = (du == 0 && dv == n) || (du > 0 && dv > 0 && du + dv == n);
    if (!ok)
      return record(t, print_canonical(dw),
                    "terms of shape (0, " + std::to_string(n) + ") or (p, q), p,q > 0, p+q = " +
                        std::to_string(n));
  }
  return std::nullopt;
}

std::optional<TupleRecord> check_grade_bracket(Tuple t) {
  const unsigned expected = t[0].degree() + 1;
  Element image = bracket(word_element(t[0]));
  for (const auto& [w, c] : image.terms()) {
    (void)c;
    if (w.degree() != expected)
      return record(t, print_canonical(image),
                    "every term of degree " + std::to_string(expected));
  }
  return std::nullopt;
}

// id * S = u∘counit
std::optional<TupleRecord> check_antipode(Tuple t) {
  Element w = word_element(t[0]);
  LinearMap id = [](const Element& e) { return e; };
  LinearMap s = [](const Element& e) { return antipode(e); };
  return element_mismatch(t, convolve(id, s, w), unit_counit(w));
}

// the recursion must agree with the closed form u∘counit
std::optional<TupleRecord> check_antipode_counit(Tuple t) {
  Element w = word_element(t[0]);
  return element_mismatch(t, antipode(w), unit_counit(w));
}

// observed closed form of the coproduct
std::optional<TupleRecord> check_delta_collapse(Tuple t) {
  return tensor_mismatch(t, coproduct(t[0]),
                         tensor(Element::unit(), word_element(t[0])));
}

// existential: a word with (id (x) counit) D(w) != w
std::optional<TupleRecord> witness_right_counit_fails(Tuple t) {
  Element collapsed;
  const TensorElement dw1 = coproduct(t[0]);
  for (const auto& [k, c] : dw1.terms())
    collapsed.add_term(k.first, c * counit(word_element(k.second)));
  if (collapsed == word_element(t[0])) return std::nullopt;
  return record(t, print_canonical(collapsed), print_word(t[0]));
}

struct LawDef {
  LawInfo info;
  Check check;
};

const std::vector<LawDef>& law_table() {
  static const std::vector<LawDef> table = {
      {{"nijenhuis", 2, 3, false, "operator identity N(u)N(v) = N(N(u)v) + N(uN(v)) - N(N(uv))"},
       check_nijenhuis},
      {{"assoc", 3, 3, false, "associativity of the product"}, check_assoc},
      {{"unit", 1, 4, false, "the empty word is a two-sided unit"}, check_unit},
      {{"factorization", 1, 4, false, "unique width factorization round trip"},
       check_factorization},
      {{"delta_mult", 2, 3, false, "the coproduct is an algebra map"}, check_delta_mult},
      {{"coassoc", 1, 4, false, "coassociativity of the coproduct"}, check_coassoc},
      {{"cocycle", 1, 4, false, "operator cocycle rule D∘N = (id (x) N)∘D"}, check_cocycle},
      {{"counit_alg", 2, 3, false, "the counit is an algebra map"}, check_counit_alg},
      {{"left_counit", 1, 4, false, "left counit identity"}, check_left_counit},
      {{"grade_mul", 2, 3, false, "product degree additivity"}, check_grade_mul},
      {{"grade_delta", 1, 4, false, "coproduct degree shape"}, check_grade_delta},
      {{"grade_bracket", 1, 4, false, "the operator raises degree by one"}, check_grade_bracket},
      {{"antipode", 1, 4, false, "right antipode identity id * S = u∘counit"}, check_antipode},
      {{"antipode_counit", 1, 4, false, "antipode recursion agrees with u∘counit"},
       check_antipode_counit},
      {{"delta_collapse", 1, 4, false, "observed coproduct closed form D(w) = 1 (x) w"},
       check_delta_collapse},
      {{"right_counit_fails", 1, 4, true, "a witness that only the left counit law holds"},
       witness_right_counit_fails},
      {{"connected", 1, 4, false, "connectedness of the grading"}, nullptr},
  };
  return table;
}

}  // namespace

const std::vector<LawInfo>& law_catalog() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> out;
    for (const LawDef& def : law_table()) out.push_back(def.info);
    return out;
  }();
  return infos;
}

LawReport run_suite(const std::string& law, const std::vector<Letter>& alphabet,
                    unsigned max_degree, const VerifyMode& mode) {
  const LawDef* def = nullptr;
  for (const LawDef& d : law_table())
    if (d.info.id == law) def = &d;
  if (!def) throw UnknownLawError(law);

  if (law == "connected") {
    // always a full scan of the enumerated space
    LawReport report = check_connected(alphabet, max_degree);
    return report;
  }

  if (!mode.is_exhaustive && mode.sample_count == 0)
    throw EmptySpaceError("random mode with sample_count = 0");

  BasisCache cache(alphabet);
  std::vector<BracketedWord> words = cache.words_up_to(max_degree);

  LawReport report;
  report.law = law;
  for (const Letter& l : alphabet) report.space.alphabet.push_back(l.name());
  report.space.max_degree = max_degree;
  report.space.arity = def->info.arity;
  report.space.exhaustive = mode.is_exhaustive;
  report.space.sample_count = mode.sample_count;
  report.space.seed = mode.seed;
  report.passed = !def->info.existential;

  const unsigned arity = def->info.arity;
  std::vector<BracketedWord> tuple(arity);

  auto run_tuple = [&](const std::vector<BracketedWord>& t) -> bool {
    // skip the identity word where a factorization does not exist
    if (law == "factorization" && t[0].is_unit()) return true;
    ++report.instances_checked;
    auto outcome = def->check(Tuple(t.data(), arity));
    if (def->info.existential) {
      if (outcome && !report.witness) {
        report.witness = std::move(outcome);
        report.passed = true;
      }
      return true;
    }
    if (outcome) {
      report.counterexample = std::move(outcome);
      report.passed = false;
      return false;  // first counterexample in canonical order
    }
    return true;
  };

  if (mode.is_exhaustive) {
    const std::size_t n = words.size();
    std::vector<std::size_t> idx(arity, 0);
    auto advance = [&]() -> bool {  // rightmost slot fastest; false once wrapped
      for (unsigned slot = arity; slot-- > 0;) {
        if (++idx[slot] < n) return true;
        idx[slot] = 0;
      }
      return false;
    };
    for (;;) {
      for (unsigned i = 0; i < arity; ++i) tuple[i] = words[idx[i]];
      if (!run_tuple(tuple)) break;
      if (!advance()) break;
    }
  } else {
    // reproducible across platforms: raw engine output reduced by modulo
    std::mt19937_64 rng(mode.seed);
    for (std::uint64_t k = 0; k < mode.sample_count; ++k) {
      for (unsigned i = 0; i < arity; ++i)
        tuple[i] = words[static_cast<std::size_t>(rng() % words.size())];
      if (!run_tuple(tuple)) break;
    }
  }

  if (report.instances_checked == 0) throw EmptySpaceError("no instances for law \"" + law + "\"");
  return report;
}

}  // namespace fna
