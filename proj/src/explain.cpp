#include "propq/explain.hpp"

#include <cstdint>
#include <utility>

namespace propq::cli {
namespace {

std::string classification_id(const CanonicalRational& q) {
    return q.is_integer() ? "integer" : "proper_rational";
}

std::string divides_phrase(const Int& d, const Int& n, bool holds) {
    return d.str() + (holds ? " | " : " does not divide ") + n.str();
}

TheoremApplication apply_t1(const ReciprocalVerdict& verdict, const CanonicalRational& r) {
    TheoremApplication app;
    app.name = "T1";
    app.description = "reciprocal of a proper rational";
    app.condition = "the numerator decides the case: |c| = 1, c >= 2, or c <= -2";
    const Int& c = r.numerator();
    const Int& b = r.denominator();
    std::string case_id;
    switch (verdict.case_tag) {
    case ReciprocalCase::UnitNumeratorInteger:
        case_id = "unit_numerator";
        app.outcome = "|c| = 1 => reciprocal " + to_string(verdict.result) + " is an integer";
        break;
    case ReciprocalCase::PositiveProper:
        case_id = "positive_proper";
        app.outcome = "c = " + c.str() + " >= 2 => reciprocal " + to_string(verdict.result) +
                      " is a positive proper rational";
        break;
    case ReciprocalCase::NegativeProper:
        case_id = "negative_proper";
        app.outcome = "c = " + c.str() + " <= -2 => reciprocal is the negative proper rational " +
                      to_string(verdict.result) + " (numerator -b = " +
                      verdict.result.numerator().str() + ", denominator |c| = " +
                      verdict.result.denominator().str() + ")";
        break;
    }
    app.witnesses = {{"c", c}, {"b", b}, {"case", case_id}};
    return app;
}

TheoremApplication apply_t2(const CanonicalRational& r, const Int& d,
                            const CanonicalRational& result) {
    TheoremApplication app;
    app.name = "T2";
    app.description = "proper rational plus an integer";
    app.condition = "r + d is always a proper rational with the denominator of r";
    app.witnesses = {{"c", r.numerator()}, {"b", r.denominator()}, {"d", d}};
    app.outcome = to_string(r) + " + " + d.str() + " keeps denominator " +
                  r.denominator().str() + " => proper rational " + to_string(result);
    return app;
}

TheoremApplication apply_t3(const ScaleVerdict& verdict, const CanonicalRational& r, const Int& i) {
    TheoremApplication app;
    app.name = "T3";
    app.description = "proper rational times an integer";
    app.condition = "r * i is an integer iff b | i";
    const Int& b = r.denominator();
    app.witnesses = {{"c", r.numerator()}, {"b", b}, {"i", i},
                     {"b_divides_i", verdict.is_integer}};
    if (verdict.is_integer) {
        app.witnesses.emplace_back("quotient", *verdict.witness_quotient);
        app.outcome = divides_phrase(b, i, true) + " with quotient " +
                      verdict.witness_quotient->str() + " => integer";
    } else {
        app.outcome = divides_phrase(b, i, false) + " => proper rational";
    }
    return app;
}

TheoremApplication apply_t4(const SumVerdict& verdict, const CanonicalRational& r1,
                            const CanonicalRational& r2) {
    TheoremApplication app;
    app.name = "T4";
    app.description = "sum of two proper rationals";
    app.condition = "r1 + r2 is an integer iff b1 = b2 and b1 | (c1 + c2)";
    const Int& b1 = r1.denominator();
    const Int& b2 = r2.denominator();
    const std::string sum_text =
        "(" + r1.numerator().str() + " + " + r2.numerator().str() + ")";
    app.witnesses = {{"c1", r1.numerator()}, {"b1", b1},
                     {"c2", r2.numerator()}, {"b2", b2},
                     {"denominators_equal", verdict.denominators_equal}};
    if (verdict.denominators_equal) {
        app.witnesses.emplace_back("divides_sum", *verdict.divisibility_holds);
        if (*verdict.divisibility_holds)
            app.outcome = "b1 = b2 = " + b1.str() + " and " + b1.str() + " | " +
                          sum_text + " => integer";
        else
            app.outcome = "b1 = b2 = " + b1.str() + " but " + b1.str() +
                          " does not divide " + sum_text + " => proper rational";
    } else {
        app.outcome = "b1 = " + b1.str() + " and b2 = " + b2.str() +
                      " differ => proper rational";
    }
    return app;
}

TheoremApplication apply_t5(const ProductVerdict& verdict, const CanonicalRational& r1,
                            const CanonicalRational& r2) {
    TheoremApplication app;
    app.name = "T5";
    app.description = "product of two proper rationals";
    app.condition = "r1 * r2 is an integer iff b1 | c2 and b2 | c1";
    const Int& b1 = r1.denominator();
    const Int& b2 = r2.denominator();
    app.witnesses = {{"c1", r1.numerator()}, {"b1", b1},
                     {"c2", r2.numerator()}, {"b2", b2},
                     {"b1_divides_c2", verdict.b1_divides_c2},
                     {"b2_divides_c1", verdict.b2_divides_c1}};
    if (verdict.is_integer) {
        app.outcome = divides_phrase(b1, r2.numerator(), true) + " and " +
                      divides_phrase(b2, r1.numerator(), true) + " => integer";
    } else {
        std::string failing;
        if (!verdict.b1_divides_c2) failing = divides_phrase(b1, r2.numerator(), false);
        if (!verdict.b2_divides_c1) {
            if (!failing.empty()) failing += " and ";
            failing += divides_phrase(b2, r1.numerator(), false);
        }
        app.outcome = failing + " => proper rational";
    }
    return app;
}

} // namespace

VerdictReport explain(const Expr& e, std::string input_text) {
    VerdictReport report;
    report.input = std::move(input_text);
    report.value = evaluate(e);

    switch (e.kind()) {
    case Expr::Kind::Add: {
        const CanonicalRational lhs = evaluate(*e.lhs());
        const CanonicalRational rhs = evaluate(*e.rhs());
        if (lhs.is_proper() && rhs.is_proper())
            report.applied_theorems.push_back(apply_t4(sum_verdict(lhs, rhs), lhs, rhs));
        else if (lhs.is_proper() && rhs.is_integer())
            report.applied_theorems.push_back(
                apply_t2(lhs, rhs.numerator(), shift_verdict(lhs, rhs.numerator())));
        else if (lhs.is_integer() && rhs.is_proper())
            report.applied_theorems.push_back(
                apply_t2(rhs, lhs.numerator(), shift_verdict(rhs, lhs.numerator())));
        break;
    }
    case Expr::Kind::Mul: {
        const CanonicalRational lhs = evaluate(*e.lhs());
        const CanonicalRational rhs = evaluate(*e.rhs());
        if (lhs.is_proper() && rhs.is_proper())
            report.applied_theorems.push_back(apply_t5(product_verdict(lhs, rhs), lhs, rhs));
        else if (lhs.is_proper() && rhs.is_integer())
            report.applied_theorems.push_back(
                apply_t3(scale_verdict(lhs, rhs.numerator()), lhs, rhs.numerator()));
        else if (lhs.is_integer() && rhs.is_proper())
            report.applied_theorems.push_back(
                apply_t3(scale_verdict(rhs, lhs.numerator()), rhs, lhs.numerator()));
        break;
    }
    case Expr::Kind::Recip: {
        const CanonicalRational operand = evaluate(*e.lhs());
        if (operand.is_proper())
            report.applied_theorems.push_back(apply_t1(reciprocal_verdict(operand), operand));
        break;
    }
    default:
        break;
    }
    return report;
}

std::string report_to_text(const VerdictReport& report) {
    std::string line = report.input + " => " + to_string(report.value) + " : " +
                       to_string(classify(report.value));
    if (report.applied_theorems.empty()) {
        line += " | classification only";
    } else {
        for (const TheoremApplication& app : report.applied_theorems)
            line += " | " + app.name + " " + app.description + ": " + app.outcome;
    }
    return line;
}

nlohmann::ordered_json json_int(const Int& v) {
    static const Int kMax = (Int(1) << 53) - 1;
    if (v >= -kMax && v <= kMax) return static_cast<std::int64_t>(v);
    return v.str();
}

nlohmann::ordered_json report_to_json(const VerdictReport& report) {
    nlohmann::ordered_json doc;
    doc["input"] = report.input;
    doc["value"] = to_string(report.value);
    doc["classification"] = classification_id(report.value);
    doc["numerator"] = json_int(report.value.numerator());
    doc["denominator"] = json_int(report.value.denominator());
    doc["applied_theorems"] = nlohmann::ordered_json::array();
    for (const TheoremApplication& app : report.applied_theorems) {
        nlohmann::ordered_json j;
        j["name"] = app.name;
        j["description"] = app.description;
        j["condition"] = app.condition;
        nlohmann::ordered_json w;
        for (const auto& [key, value] : app.witnesses) {
            if (std::holds_alternative<Int>(value))
                w[key] = json_int(std::get<Int>(value));
            else if (std::holds_alternative<bool>(value))
                w[key] = std::get<bool>(value);
            else
                w[key] = std::get<std::string>(value);
        }
        j["witnesses"] = std::move(w);
        j["outcome"] = app.outcome;
        doc["applied_theorems"].push_back(std::move(j));
    }
    return doc;
}

} // namespace propq::cli
