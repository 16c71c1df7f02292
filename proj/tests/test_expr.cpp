#include <doctest.h>

#include <vector>

#include "gts/errors.hpp"
#include "gts/expr.hpp"

using namespace gts;

TEST_CASE("basic shapes") {
    ExprPtr e = parse_expr("exp(x)");
    CHECK(e->kind == Expr::Kind::Fn);
    CHECK(e->fn == UnaryFn::Exp);
    CHECK(e->a->kind == Expr::Kind::Var);

    ExprPtr f = parse_expr("1+x*x");
    CHECK(f->kind == Expr::Kind::Add);
    CHECK(f->a->kind == Expr::Kind::Number);
    CHECK(f->a->number == Rational(1));
    CHECK(f->b->kind == Expr::Kind::Mul);
    CHECK(f->b->a->kind == Expr::Kind::Var);
    CHECK(f->b->b->kind == Expr::Kind::Var);
}

TEST_CASE("syntax errors carry offset and expectation") {
    try {
        parse_expr("sin(x");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 5);
        CHECK(e.expected == ")");
        CHECK(std::string(e.what()).find("expected )") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_expr(""), SyntaxError);
    CHECK_THROWS_AS(parse_expr("1+"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("foo(x)"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("(1+x"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("1 2"), SyntaxError);
}

TEST_CASE("precedence and associativity") {
    // ^ right-associative, tighter than unary minus
    ExprPtr p = parse_expr("x^2^3");
    CHECK(p->kind == Expr::Kind::Pow);
    CHECK(p->a->kind == Expr::Kind::Var);
    CHECK(p->b->kind == Expr::Kind::Pow);

    ExprPtr m = parse_expr("-x^2");
    CHECK(m->kind == Expr::Kind::Neg);
    CHECK(m->a->kind == Expr::Kind::Pow);

    ExprPtr q = parse_expr("(-x)^2");
    CHECK(q->kind == Expr::Kind::Pow);
    CHECK(q->a->kind == Expr::Kind::Neg);

    // a-b-c is (a-b)-c; a/b/c is (a/b)/c
    ExprPtr s = parse_expr("x-1-2");
    CHECK(s->kind == Expr::Kind::Sub);
    CHECK(s->a->kind == Expr::Kind::Sub);

    ExprPtr d = parse_expr("x/x/x");
    CHECK(d->kind == Expr::Kind::Div);
    CHECK(d->a->kind == Expr::Kind::Div);

    ExprPtr mixed = parse_expr("1+2*x^3");
    CHECK(mixed->kind == Expr::Kind::Add);
    CHECK(mixed->b->kind == Expr::Kind::Mul);
    CHECK(mixed->b->b->kind == Expr::Kind::Pow);
}

TEST_CASE("numbers") {
    CHECK(parse_expr("2.5")->number == Rational(5, 2));
    CHECK(parse_expr("1e-3")->number == Rational(1, 1000));
    // p/q is a single NUMBER token
    CHECK(parse_expr("5/2")->kind == Expr::Kind::Number);
    CHECK(parse_expr("5/2")->number == Rational(5, 2));
    // ... but a non-integer denominator is a division
    CHECK(parse_expr("1/2.5")->kind == Expr::Kind::Div);
    CHECK(parse_expr("1/x")->kind == Expr::Kind::Div);
    // division by the zero literal stays a division (fails at evaluation)
    CHECK(parse_expr("1/0")->kind == Expr::Kind::Div);
}

TEST_CASE("named constants versus exponent suffix") {
    CHECK(parse_expr("e")->kind == Expr::Kind::E);
    CHECK(parse_expr("pi")->kind == Expr::Kind::Pi);
    CHECK(parse_expr("2e3")->number == Rational(2000));
    ExprPtr prod = parse_expr("2*e");
    CHECK(prod->kind == Expr::Kind::Mul);
    CHECK(prod->b->kind == Expr::Kind::E);
}

TEST_CASE("serialization round-trips structurally") {
    std::vector<std::string> corpus = {
        "x",
        "pi",
        "e",
        "1",
        "2.5",
        "5/2",
        "-x",
        "--x",
        "1+x",
        "1-x",
        "1+x*x",
        "x*(1+x)",
        "(1+x)*(1-x)",
        "x/(1+x)",
        "1/(1+x^2)",
        "x^2",
        "x^2^3",
        "(x^2)^3",
        "-x^2",
        "(-x)^2",
        "x^(-2)",
        "2*x+1",
        "x-1-2",
        "x-(1-2)",
        "sin(x)",
        "cos(x)*sin(x)",
        "tan(x/2)",
        "atan(1+x)",
        "exp(-x^2)",
        "log(1+x)",
        "sqrt(1+x^2)",
        "sinh(x)+cosh(x)",
        "x*exp(x)",
        "exp(x)/(1+x)",
        "1/2*x^3-3/4*x+5",
        "-(1+x)",
        "2^x",
        "x^x",
    };
    for (const auto& s : corpus) {
        CAPTURE(s);
        ExprPtr once = parse_expr(s);
        std::string text = serialize(*once);
        ExprPtr twice = parse_expr(text);
        CHECK(structurally_equal(*once, *twice));
    }
}

TEST_CASE("neg is also callable by name") {
    ExprPtr e = parse_expr("neg(x)");
    CHECK(e->kind == Expr::Kind::Neg);
    CHECK(e->a->kind == Expr::Kind::Var);
}

TEST_CASE("whitespace is ignored") {
    CHECK(structurally_equal(*parse_expr(" 1 + x * x "), *parse_expr("1+x*x")));
}
