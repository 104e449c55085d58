#ifndef EULERREFINE_REPORT_HPP
#define EULERREFINE_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include <eulerrefine/bigint.hpp>

namespace eulerrefine {

/// How a value was obtained.
enum class Method { Enumeration, Formula, Egf };

std::string_view to_string(Method method);

struct VerifyEntry {
    unsigned n = 0;
    Integer lhs;
    Integer rhs;

    bool pass() const { return lhs == rhs; }
};

/// Pass/fail record of one identity checked at a range of degrees.
/// A report passes iff every entry passes; an empty report passes vacuously.
struct VerifyReport {
    std::string identity;
    Method lhs_method = Method::Formula;
    Method rhs_method = Method::Formula;
    std::vector<VerifyEntry> entries;

    void add(unsigned n, Integer lhs, Integer rhs) { entries.push_back({n, std::move(lhs), std::move(rhs)}); }

    bool pass() const;
    std::size_t failures() const;
};

bool all_pass(const std::vector<VerifyReport>& reports);

/// Human-readable lines: one summary line per report and one line per failing entry.
std::string render_text(const std::vector<VerifyReport>& reports);

/// JSON array of reports; values are decimal strings.
std::string render_json(const std::vector<VerifyReport>& reports);

} // namespace eulerrefine

#endif
