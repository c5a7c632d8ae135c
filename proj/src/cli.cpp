#include "propq/cli.hpp"

#include "propq/cross_validate.hpp"
#include "propq/errors.hpp"
#include "propq/explain.hpp"
#include "propq/oracle.hpp"
#include "propq/roots.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace propq::cli {
namespace {

using nlohmann::ordered_json;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int parse_cli_int(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size())
        throw input_error("'" + text + "' is not a decimal integer");
    for (; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw input_error("'" + text + "' is not a decimal integer");
    return Int(text[0] == '+' ? text.substr(1) : text);
}

std::string classify_text(const CanonicalRational& v) {
    if (v.is_integer()) return to_string(v) + " : integer";
    return to_string(v) + " : proper rational (standard form, b=" +
           v.denominator().str() + ")";
}

ordered_json classify_doc(const std::string& input, const CanonicalRational& v) {
    ordered_json doc;
    doc["input"] = input;
    doc["value"] = to_string(v);
    doc["classification"] = v.is_integer() ? "integer" : "proper_rational";
    doc["numerator"] = json_int(v.numerator());
    doc["denominator"] = json_int(v.denominator());
    return doc;
}

struct LineResult {
    bool ok = true;
    std::string text;
    ordered_json doc;
};

LineResult process_expression(bool explain_mode, const std::string& line) {
    LineResult result;
    try {
        ExprPtr e = parse(line);
        if (explain_mode) {
            VerdictReport report = explain(*e, line);
            result.text = report_to_text(report);
            result.doc = report_to_json(report);
        } else {
            const CanonicalRational v = evaluate(*e);
            result.text = classify_text(v);
            result.doc = classify_doc(line, v);
        }
    } catch (const parse_error& err) {
        result = {false, line + " : error: " + err.what(),
                  ordered_json{{"input", line}, {"error", err.what()}}};
    } catch (const zero_denominator& err) {
        result = {false, line + " : error: " + err.what(),
                  ordered_json{{"input", line}, {"error", err.what()}}};
    } catch (const recip_of_zero& err) {
        result = {false, line + " : error: " + err.what(),
                  ordered_json{{"input", line}, {"error", err.what()}}};
    }
    return result;
}

std::vector<std::string> read_batch_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open batch file '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

void emit_json(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

// classify / explain share the expression-or-batch plumbing.
int run_expression_command(bool explain_mode, const std::string& expr,
                           const std::string& batch_file, bool json, std::ostream& out) {
    if (batch_file.empty() && expr.empty())
        throw input_error("an expression (or --batch FILE) is required");
    if (!batch_file.empty() && !expr.empty())
        throw input_error("give either an expression or --batch FILE, not both");

    if (batch_file.empty()) {
        LineResult result = process_expression(explain_mode, expr);
        if (!result.ok) {
            // single-expression errors go to stderr with a nonzero exit
            throw input_error(std::string(result.doc["error"]));
        }
        if (json)
            emit_json(out, result.doc);
        else
            out << result.text << "\n";
        return 0;
    }

    const std::vector<std::string> lines = read_batch_lines(batch_file);
    bool any_error = false;
    ordered_json docs = ordered_json::array();
    for (const std::string& line : lines) {
        LineResult result = process_expression(explain_mode, line);
        any_error = any_error || !result.ok;
        if (json)
            docs.push_back(std::move(result.doc));
        else
            out << result.text << "\n";
    }
    if (json) emit_json(out, docs);
    return any_error ? 1 : 0;
}

std::string int_list_text(const std::vector<Int>& roots) {
    std::string out = "[";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i > 0) out += ", ";
        out += roots[i].str();
    }
    return out + "]";
}

ordered_json int_array_json(const std::vector<Int>& roots) {
    ordered_json arr = ordered_json::array();
    for (const Int& r : roots) arr.push_back(json_int(r));
    return arr;
}

int run_roots(const std::vector<std::string>& coeff_args, bool json, std::ostream& out) {
    if (coeff_args.size() < 2)
        throw input_error("at least two coefficients are required (constant first)");
    std::vector<Int> coeffs;
    coeffs.reserve(coeff_args.size());
    for (const std::string& a : coeff_args) coeffs.push_back(parse_cli_int(a));
    if (coeffs.back() != 1)
        throw input_error("leading coefficient must be 1 (monic polynomial)");
    const MonicPoly poly{coeffs};
    const std::vector<Int> roots = monic_rational_roots(poly);
    if (json) {
        ordered_json doc;
        doc["coefficients"] = int_array_json(coeffs);
        doc["polynomial"] = to_string(poly);
        doc["roots"] = int_array_json(roots);
        emit_json(out, doc);
    } else {
        out << to_string(poly) << " : integer roots " << int_list_text(roots) << "\n";
    }
    return 0;
}

int run_vieta(const std::string& i1_arg, const std::string& i2_arg, bool json,
              std::ostream& out) {
    const Int i1 = parse_cli_int(i1_arg);
    const Int i2 = parse_cli_int(i2_arg);
    const MonicPoly poly = quadratic_from_sum_product(i1, i2);
    const std::vector<Int> roots = monic_rational_roots(poly);

    // A monic quadratic has either no integer roots, a double root, or two;
    // reconstruct the multiplicity-aware sum and product for display.
    std::optional<Int> root_sum, root_product;
    if (roots.size() == 2) {
        root_sum = roots[0] + roots[1];
        root_product = roots[0] * roots[1];
    } else if (roots.size() == 1) {
        root_sum = 2 * roots[0];
        root_product = roots[0] * roots[0];
    }

    if (json) {
        ordered_json doc;
        doc["i1"] = json_int(i1);
        doc["i2"] = json_int(i2);
        doc["polynomial"] = to_string(poly);
        doc["coefficients"] = int_array_json(poly.coefficients());
        doc["roots"] = int_array_json(roots);
        if (root_sum) {
            doc["sum"] = json_int(*root_sum);
            doc["product"] = json_int(*root_product);
        }
        emit_json(out, doc);
    } else {
        out << to_string(poly) << " : integer roots " << int_list_text(roots);
        if (root_sum)
            out << "; root sum " << root_sum->str() << ", root product "
                << root_product->str();
        out << "\n";
    }
    return 0;
}

int run_search_t7(const std::string& max_num, const std::string& max_den, bool json,
                  std::ostream& out) {
    const oracle::Box box{parse_cli_int(max_num), parse_cli_int(max_den)};
    const oracle::CounterexampleReport report = oracle::search_theorem7(box);
    if (json) {
        ordered_json doc;
        doc["max_num"] = json_int(box.max_abs_numerator());
        doc["max_den"] = json_int(box.max_denominator());
        doc["found"] = report.found;
        if (report.pair)
            doc["pair"] = {to_string(report.pair->first), to_string(report.pair->second)};
        doc["pairs_scanned"] = report.pairs_scanned;
        emit_json(out, doc);
    } else if (report.found) {
        out << "counterexample: " << to_string(report.pair->first) << " and "
            << to_string(report.pair->second)
            << "; pairs scanned: " << report.pairs_scanned << "\n";
    } else {
        out << "no counterexample; pairs scanned: " << report.pairs_scanned << "\n";
    }
    return 0;
}

int run_check(const std::string& theorem, const std::string& max_num,
              const std::string& max_den, bool json, std::ostream& out) {
    oracle::TheoremSelector selector;
    if (theorem == "t3")
        selector = oracle::TheoremSelector::T3;
    else if (theorem == "t4")
        selector = oracle::TheoremSelector::T4;
    else if (theorem == "t5")
        selector = oracle::TheoremSelector::T5;
    else
        throw input_error("--theorem must be one of t3, t4, t5");

    const oracle::Box box{parse_cli_int(max_num), parse_cli_int(max_den)};
    const std::uint64_t checked = oracle::cross_validate(box, selector);
    if (json) {
        ordered_json doc;
        doc["theorem"] = theorem;
        doc["max_num"] = json_int(box.max_abs_numerator());
        doc["max_den"] = json_int(box.max_denominator());
        doc["tuples_checked"] = checked;
        doc["all_agree"] = true;
        emit_json(out, doc);
    } else {
        out << theorem << ": predicate agrees with oracle on all " << checked
            << " tuples\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact rational arithmetic: standard forms, integrality verdicts, "
                 "and brute-force cross-checks",
                 "propq"};
    app.require_subcommand(1);

    struct {
        std::string expr;
        std::string batch;
        bool json = false;
    } classify_opts, explain_opts;

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "evaluate an expression and classify the result");
    classify_cmd->add_option("expr", classify_opts.expr, "expression to evaluate");
    classify_cmd->add_option("--batch", classify_opts.batch, "read one expression per line");
    classify_cmd->add_flag("--json", classify_opts.json, "machine-readable output");

    CLI::App* explain_cmd = app.add_subcommand(
        "explain", "classify and name the decision rule matching the top-level operation");
    explain_cmd->add_option("expr", explain_opts.expr, "expression to evaluate");
    explain_cmd->add_option("--batch", explain_opts.batch, "read one expression per line");
    explain_cmd->add_flag("--json", explain_opts.json, "machine-readable output");

    std::vector<std::string> roots_coeffs;
    bool roots_json = false;
    CLI::App* roots_cmd = app.add_subcommand(
        "roots", "integer roots of a monic polynomial (coefficients constant-first)");
    roots_cmd->add_option("coefficients", roots_coeffs, "constant term first, leading 1 last");
    roots_cmd->add_flag("--json", roots_json, "machine-readable output");

    std::string vieta_i1, vieta_i2;
    bool vieta_json = false;
    CLI::App* vieta_cmd = app.add_subcommand(
        "vieta", "roots of x^2 - i1 x + i2, the quadratic with root sum i1 and product i2");
    vieta_cmd->add_option("i1", vieta_i1, "requested root sum")->required();
    vieta_cmd->add_option("i2", vieta_i2, "requested root product")->required();
    vieta_cmd->add_flag("--json", vieta_json, "machine-readable output");

    std::string t7_max_num, t7_max_den;
    bool t7_json = false;
    CLI::App* t7_cmd = app.add_subcommand(
        "search-t7", "exhaustive search for two proper rationals with integer sum and product");
    t7_cmd->add_option("--max-num", t7_max_num, "numerator bound |c| <= N")->required();
    t7_cmd->add_option("--max-den", t7_max_den, "denominator bound b <= B")->required();
    t7_cmd->add_flag("--json", t7_json, "machine-readable output");

    std::string check_theorem, check_max_num, check_max_den;
    bool check_json = false;
    CLI::App* check_cmd = app.add_subcommand(
        "check", "cross-validate a verdict predicate against the brute-force oracle");
    check_cmd->add_option("--theorem", check_theorem, "one of t3, t4, t5")->required();
    check_cmd->add_option("--max-num", check_max_num, "numerator bound |c| <= N")->required();
    check_cmd->add_option("--max-den", check_max_den, "denominator bound b <= B")->required();
    check_cmd->add_flag("--json", check_json, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));

        if (app.got_subcommand(classify_cmd))
            return run_expression_command(false, classify_opts.expr, classify_opts.batch,
                                          classify_opts.json, out);
        if (app.got_subcommand(explain_cmd))
            return run_expression_command(true, explain_opts.expr, explain_opts.batch,
                                          explain_opts.json, out);
        if (app.got_subcommand(roots_cmd)) return run_roots(roots_coeffs, roots_json, out);
        if (app.got_subcommand(vieta_cmd)) return run_vieta(vieta_i1, vieta_i2, vieta_json, out);
        if (app.got_subcommand(t7_cmd)) return run_search_t7(t7_max_num, t7_max_den, t7_json, out);
        if (app.got_subcommand(check_cmd))
            return run_check(check_theorem, check_max_num, check_max_den, check_json, out);
        err << "error: no subcommand given\n";
        return 1;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const invariant_violation& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const zero_denominator& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const recip_of_zero& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace propq::cli
