#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dunkl/catalogue.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/spinor.hpp"

namespace dunkl {

// Expression tree for the textual operator and scalar language.
// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' INT)?
//   base   := NAME | NAME '(' expr (',' expr)* ')' | NUMBER ('/' NUMBER)? | '(' expr ')'
// NAME is a letter run followed by an optional digit run. The reserved atoms
// i, sqrt2, sqrt3, sqrt6, kappa1, kappa2 are scalar literals; comm and acomm
// are the only callable names and take exactly two arguments.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { number, atom, name, call, product, sum, negation, power };

    Kind kind;
    Rational number;               // kind == number (nonnegative)
    std::string text;              // atom / name / call identifier
    std::vector<ExprPtr> children; // call args, sum terms, product factors,
                                   // negation child, power base
    unsigned exponent = 0;         // kind == power
};

// Throws ParseError with a 1-based character position and an expected-token
// description.
ExprPtr parse(std::string_view input);

// Canonical rendering; reparsing the result yields an equal tree.
std::string render(const ExprPtr& e);

bool equal(const ExprPtr& a, const ExprPtr& b);

// Operator interpretation. Names resolve through the catalogue, so unknown
// names raise std::invalid_argument and out-of-preset names ScopeMismatch.
// Scalar factors become operator scalings.
OpPtr resolve_operator(const ExprPtr& e, const Catalogue& cat);

// Pure scalar interpretation; operator names raise std::invalid_argument.
ParamScalar evaluate_scalar(const ExprPtr& e);

// Spinor-polynomial interpretation: scalars, x1 x2 x3, and the blades
// e1 e2 e3 e12 e13 e23 e123; anything else raises std::invalid_argument.
SpinorPolynomial evaluate_spinor(const ExprPtr& e, Signature sig);

} // namespace dunkl
