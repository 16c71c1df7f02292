#ifndef GTS_EXPR_HPP
#define GTS_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>

#include "gts/scalar.hpp"

namespace gts {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class UnaryFn { Sin, Cos, Tan, Atan, Exp, Log, Sqrt, Sinh, Cosh };

const char* unary_fn_name(UnaryFn f);

/// Immutable expression tree for a function of one variable x.
struct Expr {
    enum class Kind { Number, Var, Pi, E, Neg, Add, Sub, Mul, Div, Pow, Fn };

    Kind kind;
    Rational number;  // Kind::Number
    UnaryFn fn{};     // Kind::Fn
    ExprPtr a;        // left / only child
    ExprPtr b;        // right child

    static ExprPtr make_number(Rational q);
    static ExprPtr make_var();
    static ExprPtr make_pi();
    static ExprPtr make_e();
    static ExprPtr make_unary(Kind k, ExprPtr child);           // Neg
    static ExprPtr make_binary(Kind k, ExprPtr l, ExprPtr r);   // Add..Pow
    static ExprPtr make_fn(UnaryFn f, ExprPtr child);
};

/// Parses the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' factor)?
///   atom   := NUMBER | 'x' | 'pi' | 'e' | NAME '(' expr ')' | '(' expr ')'
/// '^' is right-associative and binds tighter than unary minus.
/// Throws SyntaxError with a byte offset and an expected-token message.
ExprPtr parse_expr(std::string_view text);

/// Canonical text form; parse(serialize(e)) is structurally equal to e.
std::string serialize(const Expr& e);

bool structurally_equal(const Expr& lhs, const Expr& rhs);

}  // namespace gts

#endif
