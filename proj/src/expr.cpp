#include "gts/expr.hpp"

#include <array>
#include <cctype>
#include <utility>

#include "gts/errors.hpp"

namespace gts {

const char* unary_fn_name(UnaryFn f) {
    switch (f) {
        case UnaryFn::Sin: return "sin";
        case UnaryFn::Cos: return "cos";
        case UnaryFn::Tan: return "tan";
        case UnaryFn::Atan: return "atan";
        case UnaryFn::Exp: return "exp";
        case UnaryFn::Log: return "log";
        case UnaryFn::Sqrt: return "sqrt";
        case UnaryFn::Sinh: return "sinh";
        case UnaryFn::Cosh: return "cosh";
    }
    return "?";
}

ExprPtr Expr::make_number(Rational q) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Number;
    e->number = std::move(q);
    return e;
}
ExprPtr Expr::make_var() {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Var;
    return e;
}
ExprPtr Expr::make_pi() {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Pi;
    return e;
}
ExprPtr Expr::make_e() {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::E;
    return e;
}
ExprPtr Expr::make_unary(Kind k, ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(child);
    return e;
}
ExprPtr Expr::make_binary(Kind k, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(l);
    e->b = std::move(r);
    return e;
}
ExprPtr Expr::make_fn(UnaryFn f, ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Fn;
    e->fn = f;
    e->a = std::move(child);
    return e;
}

// ---- parser ----

namespace {

struct Parser {
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= src.size() || src[pos] != c)
            throw SyntaxError(pos, std::string(1, c),
                              "syntax error at offset " + std::to_string(pos) + ": expected " +
                                  std::string(1, c));
        ++pos;
    }

    [[noreturn]] void fail(const std::string& expected) {
        throw SyntaxError(pos, expected,
                          "syntax error at offset " + std::to_string(pos) + ": expected " +
                              expected);
    }

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos != src.size()) fail("end of input");
        return e;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = Expr::make_binary(Expr::Kind::Add, lhs, term());
            else if (accept('-'))
                lhs = Expr::make_binary(Expr::Kind::Sub, lhs, term());
            else
                return lhs;
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        for (;;) {
            if (accept('*'))
                lhs = Expr::make_binary(Expr::Kind::Mul, lhs, factor());
            else if (accept('/'))
                lhs = Expr::make_binary(Expr::Kind::Div, lhs, factor());
            else
                return lhs;
        }
    }

    ExprPtr factor() {
        if (accept('-')) return Expr::make_unary(Expr::Kind::Neg, factor());
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (accept('^')) return Expr::make_binary(Expr::Kind::Pow, base, factor());
        return base;
    }

    ExprPtr atom() {
        skip_ws();
        if (pos >= src.size()) fail("number, 'x', or '('");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            ExprPtr inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return name();
        fail("number, 'x', or '('");
    }

    ExprPtr number() {
        std::size_t start = pos;
        bool integral = true;
        while (pos < src.size() &&
               (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '.')) {
            if (src[pos] == '.') integral = false;
            ++pos;
        }
        if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
            // exponent part only when followed by digits (else 'e' is Euler's number)
            std::size_t mark = pos;
            ++pos;
            if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
            if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                integral = false;
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            } else {
                pos = mark;
            }
        }
        // 'p/q' is a single NUMBER token when p is an integer and the
        // denominator is a bare integer (not 2.5, 2e3, ...)
        if (integral && pos + 1 < src.size() && src[pos] == '/' &&
            std::isdigit(static_cast<unsigned char>(src[pos + 1]))) {
            std::size_t j = pos + 1;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            bool bare = j >= src.size() || (src[j] != '.' && src[j] != 'e' && src[j] != 'E');
            if (bare) {
                auto q = Rational::parse(src.substr(start, j - start));
                if (q) {
                    pos = j;
                    return Expr::make_number(std::move(*q));
                }
            }
        }
        auto q = Rational::parse(src.substr(start, pos - start));
        if (!q) {
            pos = start;
            fail("number");
        }
        return Expr::make_number(std::move(*q));
    }

    ExprPtr name() {
        std::size_t start = pos;
        while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
        std::string_view id = src.substr(start, pos - start);
        if (id == "x") return Expr::make_var();
        if (id == "pi") return Expr::make_pi();
        if (id == "e") return Expr::make_e();

        static constexpr std::array<std::pair<std::string_view, UnaryFn>, 9> kFns = {{
            {"sin", UnaryFn::Sin},
            {"cos", UnaryFn::Cos},
            {"tan", UnaryFn::Tan},
            {"atan", UnaryFn::Atan},
            {"exp", UnaryFn::Exp},
            {"log", UnaryFn::Log},
            {"sqrt", UnaryFn::Sqrt},
            {"sinh", UnaryFn::Sinh},
            {"cosh", UnaryFn::Cosh},
        }};
        for (const auto& [fname, fid] : kFns) {
            if (id == fname) {
                expect('(');
                ExprPtr arg = expr();
                expect(')');
                return Expr::make_fn(fid, arg);
            }
        }
        if (id == "neg") {
            expect('(');
            ExprPtr arg = expr();
            expect(')');
            return Expr::make_unary(Expr::Kind::Neg, arg);
        }
        pos = start;
        fail("known function name");
    }
};

// precedence levels for the serializer
int prec(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        default: return 5;
    }
}

void emit(const Expr& e, std::string& out) {
    auto child = [&out](const Expr& c, int min_prec) {
        bool parens = prec(c) < min_prec;
        if (parens) out += '(';
        emit(c, out);
        if (parens) out += ')';
    };
    switch (e.kind) {
        case Expr::Kind::Number: out += e.number.to_string(); break;
        case Expr::Kind::Var: out += 'x'; break;
        case Expr::Kind::Pi: out += "pi"; break;
        case Expr::Kind::E: out += 'e'; break;
        case Expr::Kind::Neg:
            out += '-';
            child(*e.a, 3);
            break;
        case Expr::Kind::Add:
            child(*e.a, 1);
            out += '+';
            child(*e.b, 2);
            break;
        case Expr::Kind::Sub:
            child(*e.a, 1);
            out += '-';
            child(*e.b, 2);
            break;
        case Expr::Kind::Mul:
            child(*e.a, 2);
            out += '*';
            child(*e.b, 3);
            break;
        case Expr::Kind::Div:
            child(*e.a, 2);
            out += '/';
            child(*e.b, 3);
            break;
        case Expr::Kind::Pow:
            child(*e.a, 5);
            out += '^';
            child(*e.b, 4);
            break;
        case Expr::Kind::Fn:
            out += unary_fn_name(e.fn);
            out += '(';
            emit(*e.a, out);
            out += ')';
            break;
    }
}

}  // namespace

ExprPtr parse_expr(std::string_view text) {
    Parser p{text};
    return p.parse();
}

std::string serialize(const Expr& e) {
    std::string out;
    emit(e, out);
    return out;
}

bool structurally_equal(const Expr& lhs, const Expr& rhs) {
    if (lhs.kind != rhs.kind) return false;
    switch (lhs.kind) {
        case Expr::Kind::Number: return lhs.number == rhs.number;
        case Expr::Kind::Fn:
            if (lhs.fn != rhs.fn) return false;
            return structurally_equal(*lhs.a, *rhs.a);
        case Expr::Kind::Var:
        case Expr::Kind::Pi:
        case Expr::Kind::E: return true;
        case Expr::Kind::Neg: return structurally_equal(*lhs.a, *rhs.a);
        default:
            return structurally_equal(*lhs.a, *rhs.a) && structurally_equal(*lhs.b, *rhs.b);
    }
}

}  // namespace gts
