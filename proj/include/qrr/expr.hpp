#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qrr/series.hpp"
#include "qrr/theta.hpp"

namespace qrr {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};
struct UnknownAtom : std::runtime_error {
    explicit UnknownAtom(const std::string& name) : std::runtime_error("unknown atom: " + name) {}
};

// argument of an atom: +-q^k with k >= 1
struct AtomArg {
    int sign = 1;
    int64_t k = 1;
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { IntLit, QPow, Atom, NegQ, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    Coef value;                 // IntLit
    int64_t qnum = 0;           // QPow: exponent in fifth-units
    std::string atom;           // Atom name
    std::vector<AtomArg> args;  // Atom arguments
    ExprPtr a, b;               // children
    int64_t exponent = 0;       // Pow
};

ExprPtr parse(const std::string& text);
std::string print_canonical(const ExprPtr& e);
bool structurally_equal(const ExprPtr& x, const ExprPtr& y);

// true when the expression stays on the integer lattice (no R atom, no
// fractional q power); such expressions are evaluated with denom 1
bool is_integral(const ExprPtr& e);

// evaluate to order N fifth-units; the result is exact for all exponents
// below N (internal bounds are widened as needed)
Series evaluate(const ExprPtr& e, int64_t N_fifths);

// evaluate lhs - rhs and report
VerifyOutcome verify_pair(const ExprPtr& lhs, const ExprPtr& rhs, int64_t N_fifths);

}  // namespace qrr
