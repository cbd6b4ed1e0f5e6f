#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fna/rational.hpp"

namespace fna {

/// An unevaluated operated-algebra expression: sums with rational
/// coefficients, juxtaposition products, operator applications, letters and
/// the unit. Produced by the parser, consumed by evaluation.
class RawExpr;
using RawExprPtr = std::shared_ptr<const RawExpr>;

class RawExpr {
 public:
  struct Sum {
    std::vector<std::pair<Rational, RawExprPtr>> terms;  // nonempty
  };
  struct Product {
    std::vector<RawExprPtr> factors;  // nonempty
  };
  struct Op {
    RawExprPtr child;
  };
  struct LetterRef {
    std::string name;
  };
  struct Unit {};

  using Node = std::variant<Sum, Product, Op, LetterRef, Unit>;

  explicit RawExpr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

inline RawExprPtr raw_unit() { return std::make_shared<RawExpr>(RawExpr::Unit{}); }
inline RawExprPtr raw_letter(std::string name) {
  return std::make_shared<RawExpr>(RawExpr::LetterRef{std::move(name)});
}
inline RawExprPtr raw_op(RawExprPtr child) {
  return std::make_shared<RawExpr>(RawExpr::Op{std::move(child)});
}
inline RawExprPtr raw_product(std::vector<RawExprPtr> factors) {
  return std::make_shared<RawExpr>(RawExpr::Product{std::move(factors)});
}
inline RawExprPtr raw_sum(std::vector<std::pair<Rational, RawExprPtr>> terms) {
  return std::make_shared<RawExpr>(RawExpr::Sum{std::move(terms)});
}

}  // namespace fna
