#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "propq/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;

    friend bool operator==(const CliRun&, const CliRun&) = default;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = propq::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        path_ = std::filesystem::temp_directory_path() /
                ("propq_cli_test_" + std::to_string(counter_++) + ".txt");
        std::ofstream f(path_);
        f << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

} // namespace

TEST_CASE("classify text output") {
    CHECK(run({"classify", "5/3"}) ==
          CliRun{0, "5/3 : proper rational (standard form, b=3)\n", ""});
    CHECK(run({"classify", "6/2"}).out == "3/1 : integer\n");
    CHECK(run({"classify", "0"}).out == "0/1 : integer\n");
    CHECK(run({"classify", "1/2 + 1/3"}).out ==
          "5/6 : proper rational (standard form, b=6)\n");
}

TEST_CASE("classify json output") {
    const CliRun r = run({"classify", "--json", "5/3"});
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["input"] == "5/3");
    CHECK(doc["value"] == "5/3");
    CHECK(doc["classification"] == "proper_rational");
    CHECK(doc["numerator"] == 5);
    CHECK(doc["denominator"] == 3);
}

TEST_CASE("explain text matches json values") {
    const CliRun text = run({"explain", "1/2 + 1/2"});
    CHECK(text.exit_code == 0);
    CHECK(text.out == "1/2 + 1/2 => 1/1 : integer | T4 sum of two proper rationals: "
                      "b1 = b2 = 2 and 2 | (1 + 1) => integer\n");

    const CliRun json = run({"explain", "--json", "1/2 + 1/2"});
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["value"] == "1/1");
    CHECK(doc["applied_theorems"][0]["name"] == "T4");
    CHECK(doc["applied_theorems"][0]["witnesses"]["denominators_equal"] == true);
    CHECK(doc["applied_theorems"][0]["witnesses"]["divides_sum"] == true);
}

TEST_CASE("input errors exit 1 with a message on stderr") {
    const CliRun bad_expr = run({"classify", "1/0"});
    CHECK(bad_expr.exit_code == 1);
    CHECK(bad_expr.out.empty());
    CHECK(bad_expr.err.find("zero denominator") != std::string::npos);

    const CliRun bad_syntax = run({"classify", "1 - 2"});
    CHECK(bad_syntax.exit_code == 1);
    CHECK(bad_syntax.err.find("position") != std::string::npos);

    const CliRun recip_zero = run({"explain", "recip(0)"});
    CHECK(recip_zero.exit_code == 1);
    CHECK(recip_zero.err.find("reciprocal of zero") != std::string::npos);

    CHECK(run({"bogus"}).exit_code == 1);
    CHECK(run({}).exit_code == 1);
    CHECK(run({"classify"}).exit_code == 1);            // no expression
    CHECK(run({"vieta", "5"}).exit_code == 1);          // missing i2
    CHECK(run({"vieta", "x", "6"}).exit_code == 1);     // not an integer
    CHECK(run({"roots", "6", "-5", "2"}).exit_code == 1); // not monic
    CHECK(run({"roots", "1"}).exit_code == 1);          // degree 0
    CHECK(run({"search-t7", "--max-num", "5"}).exit_code == 1); // missing --max-den
    CHECK(run({"search-t7", "--max-num", "0", "--max-den", "5"}).exit_code == 1);
    CHECK(run({"check", "--theorem", "t9", "--max-num", "2", "--max-den", "2"}).exit_code == 1);
}

TEST_CASE("help exits 0") {
    const CliRun help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("classify") != std::string::npos);
}

TEST_CASE("vieta and roots") {
    CHECK(run({"vieta", "5", "6"}).out ==
          "x^2 - 5x + 6 : integer roots [2, 3]; root sum 5, root product 6\n");
    CHECK(run({"vieta", "1", "1"}).out == "x^2 - x + 1 : integer roots []\n");
    CHECK(run({"vieta", "0", "0"}).out ==
          "x^2 : integer roots [0]; root sum 0, root product 0\n");
    CHECK(run({"vieta", "-5", "6"}).out ==
          "x^2 + 5x + 6 : integer roots [-3, -2]; root sum -5, root product 6\n");
    CHECK(run({"roots", "6", "-5", "1"}).out == "x^2 - 5x + 6 : integer roots [2, 3]\n");
    CHECK(run({"roots", "0", "-1", "0", "1"}).out == "x^3 - x : integer roots [-1, 0, 1]\n");

    const auto doc = nlohmann::json::parse(run({"vieta", "--json", "5", "6"}).out);
    CHECK(doc["roots"] == nlohmann::json::array({2, 3}));
    CHECK(doc["sum"] == 5);
    CHECK(doc["product"] == 6);

    const auto none = nlohmann::json::parse(run({"vieta", "--json", "1", "1"}).out);
    CHECK(none["roots"].empty());
    CHECK_FALSE(none.contains("sum"));
}

TEST_CASE("search-t7 and check") {
    CHECK(run({"search-t7", "--max-num", "2", "--max-den", "2"}).out ==
          "no counterexample; pairs scanned: 3\n");
    const auto doc = nlohmann::json::parse(
        run({"search-t7", "--json", "--max-num", "2", "--max-den", "2"}).out);
    CHECK(doc["found"] == false);
    CHECK(doc["pairs_scanned"] == 3);
    CHECK_FALSE(doc.contains("pair"));

    CHECK(run({"check", "--theorem", "t5", "--max-num", "2", "--max-den", "2"}).out ==
          "t5: predicate agrees with oracle on all 3 tuples\n");
    const auto check_doc = nlohmann::json::parse(
        run({"check", "--json", "--theorem", "t3", "--max-num", "2", "--max-den", "2"}).out);
    CHECK(check_doc["tuples_checked"] == 10);
    CHECK(check_doc["all_agree"] == true);
}

TEST_CASE("roots json carries the same values as text") {
    const auto doc = nlohmann::json::parse(run({"roots", "--json", "6", "-5", "1"}).out);
    CHECK(doc["coefficients"] == nlohmann::json::array({6, -5, 1}));
    CHECK(doc["polynomial"] == "x^2 - 5x + 6");
    CHECK(doc["roots"] == nlohmann::json::array({2, 3}));
}

TEST_CASE("json and text modes report identical values") {
    for (const std::string expr :
         {"5/3", "6/2", "1/2 + 1/3", "recip(-3/2)", "3/4 * 8", "-9/2 * 4/3"}) {
        const CliRun text = run({"classify", expr});
        const auto doc = nlohmann::json::parse(run({"classify", "--json", expr}).out);
        const std::string value = doc["value"];
        CHECK(text.out.substr(0, value.size()) == value);

        const CliRun explained = run({"explain", expr});
        const auto exp_doc = nlohmann::json::parse(run({"explain", "--json", expr}).out);
        const std::string exp_value = exp_doc["value"];
        CHECK(explained.out.find("=> " + exp_value + " : ") != std::string::npos);
    }
}

TEST_CASE("batch mode maps N lines to N report lines, errors independent") {
    const TempFile batch("5/3\n6/2\n1/0\nrecip(1/2)\n-7\n");

    const CliRun text = run({"classify", "--batch", batch.path()});
    CHECK(text.exit_code == 1); // one line failed
    std::istringstream lines(text.out);
    std::vector<std::string> out_lines;
    for (std::string line; std::getline(lines, line);) out_lines.push_back(line);
    REQUIRE(out_lines.size() == 5);
    CHECK(out_lines[0] == "5/3 : proper rational (standard form, b=3)");
    CHECK(out_lines[1] == "3/1 : integer");
    CHECK(out_lines[2].find("error") != std::string::npos);
    CHECK(out_lines[3] == "2/1 : integer");
    CHECK(out_lines[4] == "-7/1 : integer");

    const CliRun json = run({"classify", "--json", "--batch", batch.path()});
    CHECK(json.exit_code == 1);
    const auto docs = nlohmann::json::parse(json.out);
    REQUIRE(docs.is_array());
    REQUIRE(docs.size() == 5);
    CHECK(docs[0]["value"] == "5/3");
    CHECK(docs[2].contains("error"));
    CHECK(docs[4]["value"] == "-7/1");

    const TempFile clean("1/2\n1/3\n");
    CHECK(run({"classify", "--batch", clean.path()}).exit_code == 0);

    CHECK(run({"classify", "--batch", "/nonexistent/propq.txt"}).exit_code == 1);
    CHECK(run({"classify", "--batch", batch.path(), "5/3"}).exit_code == 1); // both given
}

TEST_CASE("explain batch keeps one line per input") {
    const TempFile batch("1/2 + 1/2\n3/4 * 8\nnonsense\n");
    const CliRun r = run({"explain", "--batch", batch.path()});
    CHECK(r.exit_code == 1);
    std::istringstream lines(r.out);
    std::vector<std::string> out_lines;
    for (std::string line; std::getline(lines, line);) out_lines.push_back(line);
    REQUIRE(out_lines.size() == 3);
    CHECK(out_lines[0].find("T4") != std::string::npos);
    CHECK(out_lines[1].find("T3") != std::string::npos);
    CHECK(out_lines[2].find("error") != std::string::npos);
}
