#include "jtk/report.hpp"

#include <sstream>
#include <utility>

#include "jtk/error.hpp"

namespace jtk {

ResidualSummary summarize_residual(const PolyMatrix& m) {
    ResidualSummary s;
    s.max_h_degree = m.max_h_degree();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) ++s.nonzero_entries;
    return s;
}

bool CheckReport::verdict() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

json matrix_json(const PolyMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            json cell = json::array();
            const HPoly& p = m.at(i, j);
            for (int k = 0; k <= p.degree(); ++k)
                if (!p.coeff(k).is_zero())
                    cell.push_back(json::array({k, p.coeff(k).str()}));
            row.push_back(std::move(cell));
        }
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

PolyMatrix matrix_from_json(const json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    if (rows < 0 || cols < 0) throw error("matrix_from_json: negative dimension");
    PolyMatrix m(rows, cols);
    const json& entries = j.at("entries");
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) {
            HPoly p;
            for (const auto& term : entries.at(i).at(c)) {
                const int power = term.at(0).get<int>();
                p += HPoly::monomial(power, Rational::parse(term.at(1).get<std::string>()));
            }
            m.at(i, c) = std::move(p);
        }
    return m;
}

json series_json(const WSeries& s) {
    json coeffs = json::array();
    for (int k = 0; k < s.order(); ++k) coeffs.push_back(s.coeff(k).str());
    return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

WSeries series_from_json(const json& j) {
    const int order = j.at("order").get<int>();
    if (order <= 0) throw error("series_from_json: order must be positive");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    if (static_cast<int>(coeffs.size()) != order)
        throw error("series_from_json: coefficient count does not match the order");
    return WSeries(order, std::move(coeffs));
}

json report_json(const CheckReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc{{"id", c.id}, {"anchor", c.anchor}, {"pass", c.pass}, {"detail", c.detail}};
        if (c.residual) {
            const ResidualSummary s = summarize_residual(*c.residual);
            jc["residual_max_h_degree"] = s.max_h_degree;
            jc["residual_nonzero_entries"] = s.nonzero_entries;
            if (!c.residual->is_zero()) jc["residual"] = matrix_json(*c.residual);
        }
        checks.push_back(std::move(jc));
    }
    return json{{"suite", r.suite},
                {"map", r.map},
                {"spins", r.spins},
                {"verdict", r.verdict() ? "pass" : "fail"},
                {"checks", std::move(checks)}};
}

std::string report_text(const CheckReport& r) {
    std::ostringstream os;
    os << "suite '" << r.suite << "' on map '" << r.map << "'";
    if (!r.spins.empty()) {
        os << " (two_j:";
        for (int s : r.spins) os << ' ' << s;
        os << ")";
    }
    os << "\n";
    int passed = 0;
    for (const auto& c : r.checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id;
        if (!c.detail.empty()) os << ": " << c.detail;
        if (!c.pass && c.residual) {
            const ResidualSummary s = summarize_residual(*c.residual);
            os << " [residual: " << s.nonzero_entries
               << " nonzero entries, max h degree " << s.max_h_degree << "]";
        }
        os << "\n";
        if (c.pass) ++passed;
    }
    os << "verdict: " << (r.verdict() ? "PASS" : "FAIL") << " (" << passed << "/"
       << r.checks.size() << " checks)\n";
    return os.str();
}

} // namespace jtk
