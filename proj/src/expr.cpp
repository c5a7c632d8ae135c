#include "propq/expr.hpp"

#include "propq/errors.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

namespace propq::cli {

ExprPtr Expr::integer(Int value) {
    if (value < 0) throw std::invalid_argument("Expr: literal magnitudes are non-negative");
    return ExprPtr(new Expr(Kind::IntegerLiteral, std::move(value), Int(1), nullptr, nullptr));
}

ExprPtr Expr::rational(Int numerator, Int denominator) {
    if (numerator < 0 || denominator < 0)
        throw std::invalid_argument("Expr: literal magnitudes are non-negative");
    if (denominator == 0) throw zero_denominator("zero denominator in rational literal");
    return ExprPtr(new Expr(Kind::RationalLiteral, std::move(numerator), std::move(denominator),
                            nullptr, nullptr));
}

ExprPtr Expr::add(ExprPtr lhs, ExprPtr rhs) {
    return ExprPtr(new Expr(Kind::Add, Int(0), Int(1), std::move(lhs), std::move(rhs)));
}

ExprPtr Expr::mul(ExprPtr lhs, ExprPtr rhs) {
    return ExprPtr(new Expr(Kind::Mul, Int(0), Int(1), std::move(lhs), std::move(rhs)));
}

ExprPtr Expr::neg(ExprPtr operand) {
    return ExprPtr(new Expr(Kind::Neg, Int(0), Int(1), std::move(operand), nullptr));
}

ExprPtr Expr::recip(ExprPtr operand) {
    return ExprPtr(new Expr(Kind::Recip, Int(0), Int(1), std::move(operand), nullptr));
}

bool equal(const Expr& a, const Expr& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Expr::Kind::IntegerLiteral:
        return a.int_value() == b.int_value();
    case Expr::Kind::RationalLiteral:
        return a.literal_numerator() == b.literal_numerator() &&
               a.literal_denominator() == b.literal_denominator();
    case Expr::Kind::Add:
    case Expr::Kind::Mul:
        return equal(*a.lhs(), *b.lhs()) && equal(*a.rhs(), *b.rhs());
    case Expr::Kind::Neg:
    case Expr::Kind::Recip:
        return equal(*a.lhs(), *b.lhs());
    }
    return false;
}

namespace {

// Parenthesization mirrors the grammar: '+' chains are left-associative, so
// a right Add child needs parentheses; same for a right Mul child under
// Mul; any Add under Mul; and any Add/Mul under Neg (a bare "-a * b" would
// reparse as (-a) * b).
std::string print_node(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::IntegerLiteral:
        return e.int_value().str();
    case Expr::Kind::RationalLiteral:
        return e.literal_numerator().str() + "/" + e.literal_denominator().str();
    case Expr::Kind::Add: {
        std::string lhs = print_node(*e.lhs());
        std::string rhs = print_node(*e.rhs());
        if (e.rhs()->kind() == Expr::Kind::Add) rhs = "(" + rhs + ")";
        return lhs + " + " + rhs;
    }
    case Expr::Kind::Mul: {
        std::string lhs = print_node(*e.lhs());
        std::string rhs = print_node(*e.rhs());
        if (e.lhs()->kind() == Expr::Kind::Add) lhs = "(" + lhs + ")";
        if (e.rhs()->kind() == Expr::Kind::Add || e.rhs()->kind() == Expr::Kind::Mul)
            rhs = "(" + rhs + ")";
        return lhs + " * " + rhs;
    }
    case Expr::Kind::Neg: {
        std::string operand = print_node(*e.lhs());
        if (e.lhs()->kind() == Expr::Kind::Add || e.lhs()->kind() == Expr::Kind::Mul)
            operand = "(" + operand + ")";
        return "-" + operand;
    }
    case Expr::Kind::Recip:
        return "recip(" + print_node(*e.lhs()) + ")";
    }
    return {};
}

struct Token {
    enum class Kind { Integer, Plus, Minus, Star, Slash, LParen, RParen, Recip, End };
    Kind kind;
    std::size_t position;
    std::string digits; // Integer only
};

const char* token_name(Token::Kind k) {
    switch (k) {
    case Token::Kind::Integer: return "an integer";
    case Token::Kind::Plus: return "'+'";
    case Token::Kind::Minus: return "'-'";
    case Token::Kind::Star: return "'*'";
    case Token::Kind::Slash: return "'/'";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::Recip: return "'recip'";
    case Token::Kind::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view input) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < input.size()) {
        const char ch = input[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = i;
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
            tokens.push_back({Token::Kind::Integer, start,
                              std::string(input.substr(start, i - start))});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t start = i;
            while (i < input.size() && std::isalnum(static_cast<unsigned char>(input[i]))) ++i;
            std::string_view word = input.substr(start, i - start);
            if (word != "recip")
                throw parse_error("unknown identifier '" + std::string(word) + "'", start,
                                  {"'recip'"});
            tokens.push_back({Token::Kind::Recip, start, {}});
            continue;
        }
        Token::Kind kind;
        switch (ch) {
        case '+': kind = Token::Kind::Plus; break;
        case '-': kind = Token::Kind::Minus; break;
        case '*': kind = Token::Kind::Star; break;
        case '/': kind = Token::Kind::Slash; break;
        case '(': kind = Token::Kind::LParen; break;
        case ')': kind = Token::Kind::RParen; break;
        default:
            throw parse_error(std::string("unexpected character '") + ch + "'", i, {});
        }
        tokens.push_back({kind, i, {}});
        ++i;
    }
    tokens.push_back({Token::Kind::End, input.size(), {}});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::string_view input) : tokens_(lex(input)) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        expect(Token::Kind::End, {"'+'", "'*'", "end of input"});
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    void expect(Token::Kind kind, std::vector<std::string> expected) {
        if (peek().kind != kind)
            throw parse_error(std::string("unexpected ") + token_name(peek().kind),
                              peek().position, std::move(expected));
        ++pos_;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (peek().kind == Token::Kind::Plus) {
            take();
            e = Expr::add(std::move(e), parse_term());
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (peek().kind == Token::Kind::Star) {
            take();
            e = Expr::mul(std::move(e), parse_factor());
        }
        return e;
    }

    ExprPtr parse_factor() {
        switch (peek().kind) {
        case Token::Kind::Minus:
            take();
            return Expr::neg(parse_factor());
        case Token::Kind::Plus:
            take();
            return parse_factor();
        case Token::Kind::Recip: {
            take();
            expect(Token::Kind::LParen, {"'('"});
            ExprPtr inner = parse_expr();
            expect(Token::Kind::RParen, {"')'"});
            return Expr::recip(std::move(inner));
        }
        case Token::Kind::LParen: {
            take();
            ExprPtr inner = parse_expr();
            expect(Token::Kind::RParen, {"')'"});
            return inner;
        }
        case Token::Kind::Integer:
            return parse_literal();
        default:
            throw parse_error(std::string("unexpected ") + token_name(peek().kind),
                              peek().position,
                              {"an integer", "'-'", "'recip'", "'('"});
        }
    }

    ExprPtr parse_literal() {
        Token first = take();
        if (peek().kind != Token::Kind::Slash)
            return Expr::integer(Int(first.digits));
        take(); // '/'
        if (peek().kind != Token::Kind::Integer)
            throw parse_error(std::string("unexpected ") + token_name(peek().kind),
                              peek().position, {"an integer"});
        Token second = take();
        Int denominator(second.digits);
        if (denominator == 0)
            throw zero_denominator("zero denominator in literal at position " +
                                   std::to_string(second.position));
        return Expr::rational(Int(first.digits), std::move(denominator));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

std::string print(const Expr& e) { return print_node(e); }

ExprPtr parse(std::string_view input) { return Parser(input).run(); }

CanonicalRational evaluate(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::IntegerLiteral:
        return CanonicalRational{e.int_value()};
    case Expr::Kind::RationalLiteral:
        return normalize(e.literal_numerator(), e.literal_denominator());
    case Expr::Kind::Add:
        return add(evaluate(*e.lhs()), evaluate(*e.rhs()));
    case Expr::Kind::Mul:
        return mul(evaluate(*e.lhs()), evaluate(*e.rhs()));
    case Expr::Kind::Neg:
        return negate(evaluate(*e.lhs()));
    case Expr::Kind::Recip:
        return reciprocal(evaluate(*e.lhs()));
    }
    throw std::logic_error("evaluate: unreachable expression kind");
}

} // namespace propq::cli
