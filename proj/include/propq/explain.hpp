#pragma once

#include "propq/expr.hpp"
#include "propq/verdicts.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace propq::cli {

using WitnessValue = std::variant<Int, bool, std::string>;

// One decision rule whose precondition matched the top-level expression
// shape, with the condition it decided and the witnesses it used.
struct TheoremApplication {
    std::string name;        // stable id: "T1".."T5"
    std::string description; // e.g. "sum of two proper rationals"
    std::string condition;   // the characterizing condition, as fixed text
    std::vector<std::pair<std::string, WitnessValue>> witnesses;
    std::string outcome;     // one-line conclusion with the concrete numbers
};

struct VerdictReport {
    std::string input;
    CanonicalRational value;
    std::vector<TheoremApplication> applied_theorems;
};

// Evaluate e and, when the top-level node matches a decision rule's
// precondition (sum/product of proper rationals, proper plus or times an
// integer, reciprocal of a proper rational), attach that rule's verdict.
// Subexpressions are evaluated silently.
VerdictReport explain(const Expr& e, std::string input_text);

// Single-line rendering (batch-friendly).
std::string report_to_text(const VerdictReport& report);

// Field names and value encodings are pinned in docs/json_interface.md.
nlohmann::ordered_json report_to_json(const VerdictReport& report);

// Shared JSON encoding for integers: exact JSON number when the magnitude
// fits 2^53 - 1, decimal string beyond that.
nlohmann::ordered_json json_int(const Int& v);

} // namespace propq::cli
