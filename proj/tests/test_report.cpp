// Serialization layer: exact JSON round-trips for matrices and series,
// residual summaries, and the text/JSON forms of a check report.
#include <doctest.h>

#include <string>
#include <vector>

#include "jtk/error.hpp"
#include "jtk/report.hpp"

using namespace jtk;

TEST_CASE("matrix_json lists nonzero terms as power/value pairs") {
    const json j = matrix_json(PolyMatrix::identity(2));
    CHECK(j.dump() ==
          R"({"rows":2,"cols":2,"entries":[[[[0,"1/1"]],[]],[[],[[0,"1/1"]]]]})");
}

TEST_CASE("matrix JSON round trip is exact") {
    PolyMatrix m(2, 3);
    m.at(0, 0) = HPoly(rat(3, 7));
    m.at(0, 2) = HPoly::h() * rat(-5, 2) + HPoly::h(4);
    m.at(1, 1) = HPoly(rat(1)) + HPoly::h(2) * rat(9, 4);

    const json j = matrix_json(m);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    // The (0,2) entry carries exactly its two nonzero terms, ascending.
    CHECK(j["entries"][0][2].size() == 2);
    CHECK(j["entries"][0][2][0][0] == 1);
    CHECK(j["entries"][0][2][0][1] == "-5/2");
    CHECK(j["entries"][0][2][1][0] == 4);
    CHECK(j["entries"][0][2][1][1] == "1/1");
    // Zero entries serialize as empty lists.
    CHECK(j["entries"][1][0].empty());

    CHECK(matrix_from_json(j) == m);
}

TEST_CASE("matrix_from_json rejects negative dimensions") {
    json j;
    j["rows"] = -1;
    j["cols"] = 2;
    j["entries"] = json::array();
    CHECK_THROWS_WITH_AS(matrix_from_json(j),
                         doctest::Contains("matrix_from_json: negative dimension"),
                         jtk::error);
}

TEST_CASE("series JSON round trip is exact") {
    const WSeries s = elementary(Elementary::Sinh, 7);
    const json j = series_json(s);
    CHECK(j["order"] == 7);
    CHECK(j["coeffs"].size() == 7);
    CHECK(j["coeffs"][1] == "1/1");
    CHECK(j["coeffs"][3] == "1/6");
    CHECK(j["coeffs"][5] == "1/120");
    CHECK(j["coeffs"][0] == "0/1");

    const WSeries back = series_from_json(j);
    CHECK(back.order() == 7);
    CHECK(back == s);
}

TEST_CASE("series_from_json validates order and coefficient count") {
    json j;
    j["order"] = 0;
    j["coeffs"] = json::array();
    CHECK_THROWS_WITH_AS(series_from_json(j),
                         doctest::Contains("series_from_json: order must be positive"),
                         jtk::error);

    json k;
    k["order"] = 3;
    k["coeffs"] = json::array({"1/1", "2/1"});
    CHECK_THROWS_WITH_AS(
        series_from_json(k),
        doctest::Contains("series_from_json: coefficient count does not match"),
        jtk::error);
}

TEST_CASE("summarize_residual reports size and top degree") {
    const PolyMatrix z(3, 3);
    const ResidualSummary zs = summarize_residual(z);
    CHECK(zs.max_h_degree == -1);
    CHECK(zs.nonzero_entries == 0);

    PolyMatrix m(2, 2);
    m.at(0, 1) = HPoly::h(2) * rat(5);
    m.at(1, 0) = HPoly(rat(1)) + HPoly::h();
    const ResidualSummary ms = summarize_residual(m);
    CHECK(ms.max_h_degree == 2);
    CHECK(ms.nonzero_entries == 2);
}

namespace {

CheckReport sample_report(bool with_failure) {
    CheckReport r;
    r.suite = "algebra";
    r.map = "minimal";
    r.spins = {1, 2};

    CheckResult ok;
    ok.id = "algebra.relations[two_j=1] : [X,Y] - H";
    ok.anchor = "deformed commutator of X and Y closes on H";
    ok.pass = true;
    ok.detail = "residual is exactly zero";
    ok.residual = PolyMatrix(2, 2);
    r.checks.push_back(ok);

    if (with_failure) {
        CheckResult bad;
        bad.id = "algebra.relations[two_j=2] : T*Tinv - 1";
        bad.anchor = "T and its inverse multiply to the identity";
        bad.pass = false;
        PolyMatrix res(2, 2);
        res.at(0, 0) = HPoly::h(3);
        res.at(1, 1) = HPoly::h() * rat(-2);
        bad.residual = res;
        r.checks.push_back(bad);
    }
    return r;
}

} // namespace

TEST_CASE("CheckReport verdict is the conjunction of its checks") {
    CHECK(sample_report(false).verdict());
    CHECK_FALSE(sample_report(true).verdict());
}

TEST_CASE("report_json carries verdict, checks, and residual summaries") {
    const json pass = report_json(sample_report(false));
    CHECK(pass["suite"] == "algebra");
    CHECK(pass["map"] == "minimal");
    CHECK(pass["spins"] == json::array({1, 2}));
    CHECK(pass["verdict"] == "pass");
    CHECK(pass["checks"].size() == 1);
    const json& okc = pass["checks"][0];
    CHECK(okc["id"] == "algebra.relations[two_j=1] : [X,Y] - H");
    CHECK(okc["pass"] == true);
    // A zero residual is summarized but not dumped in full.
    CHECK(okc["residual_max_h_degree"] == -1);
    CHECK(okc["residual_nonzero_entries"] == 0);
    CHECK_FALSE(okc.contains("residual"));

    const json fail = report_json(sample_report(true));
    CHECK(fail["verdict"] == "fail");
    const json& badc = fail["checks"][1];
    CHECK(badc["pass"] == false);
    CHECK(badc["residual_max_h_degree"] == 3);
    CHECK(badc["residual_nonzero_entries"] == 2);
    // Nonzero residuals are dumped in full for exact inspection.
    CHECK(badc.contains("residual"));
    PolyMatrix expect(2, 2);
    expect.at(0, 0) = HPoly::h(3);
    expect.at(1, 1) = HPoly::h() * rat(-2);
    CHECK(matrix_from_json(badc["residual"]) == expect);
}

TEST_CASE("report_text prints one status line per check plus a verdict") {
    const std::string pass = report_text(sample_report(false));
    CHECK(pass.find("suite 'algebra' on map 'minimal' (two_j: 1 2)") !=
          std::string::npos);
    CHECK(pass.find("[PASS] algebra.relations[two_j=1] : [X,Y] - H: "
                    "residual is exactly zero") != std::string::npos);
    CHECK(pass.find("verdict: PASS (1/1 checks)") != std::string::npos);

    const std::string fail = report_text(sample_report(true));
    CHECK(fail.find("[FAIL] algebra.relations[two_j=2] : T*Tinv - 1") !=
          std::string::npos);
    CHECK(fail.find("[residual: 2 nonzero entries, max h degree 3]") !=
          std::string::npos);
    CHECK(fail.find("verdict: FAIL (1/2 checks)") != std::string::npos);
}
