#pragma once

#include "propq/rational.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace propq::cli {

// Expression language for the command line:
//
//   expr    := term ('+' term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | '+' factor | 'recip' '(' expr ')'
//            | '(' expr ')' | literal
//   literal := integer ('/' integer)?
//
// '*' binds tighter than '+'. '/' only forms rational literals; there is no
// division operator. Unary '-' builds a Neg node ("-3/2" is Neg(3/2)) and
// unary '+' is absorbed. Whitespace is insignificant. Literal magnitudes
// are non-negative by construction; signs are expressed through Neg.
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    enum class Kind { IntegerLiteral, RationalLiteral, Add, Mul, Neg, Recip };

    static ExprPtr integer(Int value);
    static ExprPtr rational(Int numerator, Int denominator);
    static ExprPtr add(ExprPtr lhs, ExprPtr rhs);
    static ExprPtr mul(ExprPtr lhs, ExprPtr rhs);
    static ExprPtr neg(ExprPtr operand);
    static ExprPtr recip(ExprPtr operand);

    Kind kind() const noexcept { return kind_; }

    const Int& int_value() const noexcept { return num_; }          // IntegerLiteral
    const Int& literal_numerator() const noexcept { return num_; }  // RationalLiteral
    const Int& literal_denominator() const noexcept { return den_; }

    const ExprPtr& lhs() const noexcept { return lhs_; } // Add/Mul; operand of Neg/Recip
    const ExprPtr& rhs() const noexcept { return rhs_; }

private:
    Expr(Kind kind, Int num, Int den, ExprPtr lhs, ExprPtr rhs)
        : kind_(kind), num_(std::move(num)), den_(std::move(den)),
          lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

    Kind kind_;
    Int num_;
    Int den_;
    ExprPtr lhs_;
    ExprPtr rhs_;
};

bool equal(const Expr& a, const Expr& b);

// Canonical pretty-printer; output reparses to a structurally equal tree.
std::string print(const Expr& e);

// Throws parse_error on grammar violations and zero_denominator for
// literals like "1/0".
ExprPtr parse(std::string_view input);

// Exact evaluation; throws recip_of_zero when a Recip argument is zero.
CanonicalRational evaluate(const Expr& e);

} // namespace propq::cli
