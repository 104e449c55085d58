#include <eulerrefine/report.hpp>

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace eulerrefine {

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::Enumeration:
        return "enumeration";
    case Method::Formula:
        return "formula";
    case Method::Egf:
        return "egf";
    }
    return "unknown";
}

bool VerifyReport::pass() const
{
    return std::all_of(entries.begin(), entries.end(), [](const VerifyEntry& e) { return e.pass(); });
}

std::size_t VerifyReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const VerifyEntry& e) { return !e.pass(); }));
}

bool all_pass(const std::vector<VerifyReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.pass(); });
}

std::string render_text(const std::vector<VerifyReport>& reports)
{
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.pass() ? "PASS " : "FAIL ") << r.identity << "  [" << to_string(r.lhs_method) << " vs "
           << to_string(r.rhs_method) << "]  " << r.entries.size() - r.failures() << "/" << r.entries.size();
        if (!r.entries.empty()) {
            os << "  n=" << r.entries.front().n << ".." << r.entries.back().n;
        }
        os << '\n';
        for (const auto& e : r.entries) {
            if (!e.pass()) {
                os << "    n=" << e.n << ": " << to_string(e.lhs) << " != " << to_string(e.rhs) << '\n';
            }
        }
    }
    std::size_t failed = static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](const VerifyReport& r) { return !r.pass(); }));
    os << (failed == 0 ? "ALL PASS" : "FAILURES") << ": " << reports.size() - failed << "/" << reports.size()
       << " identities hold\n";
    return os.str();
}

std::string render_json(const std::vector<VerifyReport>& reports)
{
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : r.entries) {
            entries.push_back({{"n", e.n}, {"lhs", to_string(e.lhs)}, {"rhs", to_string(e.rhs)}, {"pass", e.pass()}});
        }
        doc.push_back({{"identity", r.identity},
                       {"lhs_method", std::string(to_string(r.lhs_method))},
                       {"rhs_method", std::string(to_string(r.rhs_method))},
                       {"pass", r.pass()},
                       {"entries", std::move(entries)}});
    }
    return doc.dump(2);
}

} // namespace eulerrefine
