#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "propq/explain.hpp"

#include <random>
#include <string>

using namespace propq;
using namespace propq::cli;

TEST_CASE("parse builds the expected trees") {
    const ExprPtr sum = parse("1/2 + 1/2");
    REQUIRE(sum->kind() == Expr::Kind::Add);
    CHECK(sum->lhs()->kind() == Expr::Kind::RationalLiteral);
    CHECK(sum->lhs()->literal_numerator() == 1);
    CHECK(sum->lhs()->literal_denominator() == 2);

    const ExprPtr prod = parse("3/2 * 4/3");
    REQUIRE(prod->kind() == Expr::Kind::Mul);
    CHECK(prod->rhs()->literal_numerator() == 4);

    // leading '-' is a Neg node, not part of the literal
    const ExprPtr recip = parse("recip(-3/2)");
    REQUIRE(recip->kind() == Expr::Kind::Recip);
    REQUIRE(recip->lhs()->kind() == Expr::Kind::Neg);
    REQUIRE(recip->lhs()->lhs()->kind() == Expr::Kind::RationalLiteral);
    CHECK(recip->lhs()->lhs()->literal_numerator() == 3);

    CHECK(parse("7")->kind() == Expr::Kind::IntegerLiteral);
    CHECK(parse("+7")->kind() == Expr::Kind::IntegerLiteral); // unary + absorbed
    CHECK(parse("-7")->kind() == Expr::Kind::Neg);
}

TEST_CASE("precedence and associativity") {
    // * binds tighter than +
    const ExprPtr e = parse("1 + 2 * 3");
    REQUIRE(e->kind() == Expr::Kind::Add);
    CHECK(e->rhs()->kind() == Expr::Kind::Mul);

    const ExprPtr grouped = parse("(1 + 1/2) * 3");
    REQUIRE(grouped->kind() == Expr::Kind::Mul);
    CHECK(grouped->lhs()->kind() == Expr::Kind::Add);

    // left associative chains
    const ExprPtr chain = parse("1 + 2 + 3");
    REQUIRE(chain->kind() == Expr::Kind::Add);
    CHECK(chain->lhs()->kind() == Expr::Kind::Add);
    CHECK(chain->rhs()->kind() == Expr::Kind::IntegerLiteral);
}

TEST_CASE("whitespace is insignificant, including inside literals") {
    CHECK(equal(*parse("1/2+1/3"), *parse(" 1 / 2 + 1 / 3 ")));
    CHECK(equal(*parse("recip( 1/2 )"), *parse("recip(1/2)")));
}

TEST_CASE("parse rejects what the grammar does not have") {
    CHECK_THROWS_AS(parse(""), parse_error);
    CHECK_THROWS_AS(parse("1 +"), parse_error);
    CHECK_THROWS_AS(parse("1 - 2"), parse_error); // no binary minus, unary only
    CHECK_THROWS_AS(parse("1/2 / 3"), parse_error); // no division operator
    CHECK_THROWS_AS(parse("recip 2"), parse_error);
    CHECK_THROWS_AS(parse("foo"), parse_error);
    CHECK_THROWS_AS(parse("(1 + 2"), parse_error);
    CHECK_THROWS_AS(parse("1 2"), parse_error);
    CHECK_THROWS_AS(parse("1/0"), zero_denominator);
    CHECK_THROWS_AS(parse("recip(1/0)"), zero_denominator);
}

TEST_CASE("parse errors carry position and expectations") {
    try {
        parse("1/2 / 3");
        FAIL("no error raised");
    } catch (const parse_error& e) {
        CHECK(e.position() == 4);
        CHECK_FALSE(e.expected().empty());
        CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }
    try {
        parse("  foo");
        FAIL("no error raised");
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("evaluate computes exact canonical values") {
    CHECK(evaluate(*parse("1/2 + 1/2")) == normalize(1, 1));
    CHECK(evaluate(*parse("1/2 + 1/3")) == normalize(5, 6));
    CHECK(evaluate(*parse("3/2 * 4/3")) == normalize(2, 1));
    CHECK(evaluate(*parse("recip(-3/2)")) == normalize(-2, 3));
    CHECK(evaluate(*parse("recip(5)")) == normalize(1, 5));
    CHECK(evaluate(*parse("-(3/2 * 4/3)")) == normalize(-2, 1));
    CHECK(evaluate(*parse("0/7")) == CanonicalRational{});
    CHECK(evaluate(*parse("--7")) == normalize(7, 1));
    CHECK_THROWS_AS(evaluate(*parse("recip(0)")), recip_of_zero);
    CHECK_THROWS_AS(evaluate(*parse("recip(1/2 + -1/2)")), recip_of_zero);
}

TEST_CASE("printer emits reparseable canonical text") {
    CHECK(print(*parse("1/2 + 1/3")) == "1/2 + 1/3");
    CHECK(print(*parse("1/2+1/3*2")) == "1/2 + 1/3 * 2");
    CHECK(print(*parse("(1 + 2) * 3")) == "(1 + 2) * 3");
    CHECK(print(*parse("recip(-3/2)")) == "recip(-3/2)");
    CHECK(print(*parse("-(2 * 3)")) == "-(2 * 3)");
    CHECK(print(*Expr::add(Expr::integer(1), Expr::add(Expr::integer(2), Expr::integer(3)))) ==
          "1 + (2 + 3)");
    CHECK(print(*Expr::mul(Expr::neg(Expr::integer(2)), Expr::integer(3))) == "-2 * 3");
    CHECK(print(*Expr::neg(Expr::mul(Expr::integer(2), Expr::integer(3)))) == "-(2 * 3)");
}

namespace {

ExprPtr random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> literal(0, 9);
    std::uniform_int_distribution<int> den(1, 9);
    const int node = depth == 0 ? literal(rng) % 2 : literal(rng) % 6;
    switch (node) {
    case 0: return Expr::integer(literal(rng));
    case 1: return Expr::rational(literal(rng), den(rng));
    case 2: return Expr::add(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 3: return Expr::mul(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 4: return Expr::neg(random_expr(rng, depth - 1));
    default: return Expr::recip(random_expr(rng, depth - 1));
    }
}

} // namespace

TEST_CASE("print/parse round trip over generated trees of depth <= 4") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 2000; ++i) {
        const ExprPtr e = random_expr(rng, 4);
        const std::string text = print(*e);
        const ExprPtr back = parse(text);
        if (!equal(*e, *back)) FAIL("round trip broke on: ", text);
    }
}

TEST_CASE("literal factories keep magnitudes non-negative") {
    CHECK_THROWS_AS(Expr::integer(-1), std::invalid_argument);
    CHECK_THROWS_AS(Expr::rational(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Expr::rational(1, 0), zero_denominator);
}

TEST_CASE("explain dispatches on the top-level node only") {
    const VerdictReport t4 = explain(*parse("1/2 + 1/2"), "1/2 + 1/2");
    REQUIRE(t4.applied_theorems.size() == 1);
    CHECK(t4.applied_theorems[0].name == "T4");
    CHECK(t4.value == normalize(1, 1));

    const VerdictReport t2 = explain(*parse("5/3 + 2"), "5/3 + 2");
    REQUIRE(t2.applied_theorems.size() == 1);
    CHECK(t2.applied_theorems[0].name == "T2");
    CHECK(t2.value == normalize(11, 3));

    const VerdictReport t2_flipped = explain(*parse("2 + 5/3"), "2 + 5/3");
    REQUIRE(t2_flipped.applied_theorems.size() == 1);
    CHECK(t2_flipped.applied_theorems[0].name == "T2");

    const VerdictReport t5 = explain(*parse("3/2 * 4/3"), "3/2 * 4/3");
    REQUIRE(t5.applied_theorems.size() == 1);
    CHECK(t5.applied_theorems[0].name == "T5");

    const VerdictReport t3 = explain(*parse("3/4 * 8"), "3/4 * 8");
    REQUIRE(t3.applied_theorems.size() == 1);
    CHECK(t3.applied_theorems[0].name == "T3");
    CHECK(t3.value == normalize(6, 1));

    const VerdictReport t1 = explain(*parse("recip(1/2)"), "recip(1/2)");
    REQUIRE(t1.applied_theorems.size() == 1);
    CHECK(t1.applied_theorems[0].name == "T1");
    CHECK(t1.value == normalize(2, 1));

    // no rule matches: plain values, integer-only operations, recip of integer
    CHECK(explain(*parse("7"), "7").applied_theorems.empty());
    CHECK(explain(*parse("2 * 3"), "2 * 3").applied_theorems.empty());
    CHECK(explain(*parse("recip(5)"), "recip(5)").applied_theorems.empty());
    CHECK(explain(*parse("(1/2 + 1/2) * 1"), "...").applied_theorems.empty());
    CHECK(explain(*parse("-3/2"), "-3/2").applied_theorems.empty());
}

TEST_CASE("explain reports match text and JSON renderings") {
    const VerdictReport report = explain(*parse("3/4 * 8"), "3/4 * 8");
    const std::string text = report_to_text(report);
    CHECK(text == "3/4 * 8 => 6/1 : integer | T3 proper rational times an integer: "
                  "4 | 8 with quotient 2 => integer");

    const nlohmann::ordered_json doc = report_to_json(report);
    CHECK(doc["input"] == "3/4 * 8");
    CHECK(doc["value"] == "6/1");
    CHECK(doc["classification"] == "integer");
    CHECK(doc["numerator"] == 6);
    CHECK(doc["denominator"] == 1);
    REQUIRE(doc["applied_theorems"].size() == 1);
    CHECK(doc["applied_theorems"][0]["name"] == "T3");
    CHECK(doc["applied_theorems"][0]["witnesses"]["b"] == 4);
    CHECK(doc["applied_theorems"][0]["witnesses"]["i"] == 8);
    CHECK(doc["applied_theorems"][0]["witnesses"]["b_divides_i"] == true);
    CHECK(doc["applied_theorems"][0]["witnesses"]["quotient"] == 2);

    const VerdictReport plain = explain(*parse("7"), "7");
    CHECK(report_to_text(plain) == "7 => 7/1 : integer | classification only");
    CHECK(report_to_json(plain)["applied_theorems"].empty());
}

TEST_CASE("big integers flow through the expression layer exactly") {
    const std::string big = "123456789012345678901234567891";
    const CanonicalRational v = evaluate(*parse(big + "/2"));
    CHECK(v.is_proper());
    CHECK(v.denominator() == 2);
    CHECK(v.numerator().str() == big);

    const nlohmann::ordered_json doc =
        report_to_json(explain(*parse(big + "/2"), big + "/2"));
    // beyond 2^53: serialized as a decimal string
    CHECK(doc["numerator"].is_string());
    CHECK(doc["numerator"] == big);
    CHECK(doc["denominator"] == 2);
}
