#ifndef EULERREFINE_TOOLS_COMMANDS_HPP
#define EULERREFINE_TOOLS_COMMANDS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <eulerrefine/eulerrefine.hpp>

namespace eulerrefine::cli {

/// Bad flags or out-of-range requests; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Table, Json, Csv, Bfile };
enum class TableMethod { Enumeration, Formula, Egf, All };

inline constexpr unsigned kDefaultEnumerationCap = 11;
inline constexpr unsigned kFormulaSoftCap = 200;
inline constexpr unsigned kDefaultEgfOrder = 20;

Format parse_format(std::string_view text);
TableMethod parse_method(std::string_view text);

/// Enumeration cap: the flag value if given, else $EULER_REFINE_CAP, else the default.
unsigned enumeration_cap(std::optional<unsigned> flag);

/// Brute-force counts for 2..max_n, using all hardware threads.
std::vector<CountTable> enumerate_counts(unsigned max_n);

struct TableOptions {
    unsigned max_n = 9;
    TableMethod method = TableMethod::Enumeration;
    bool all_populations = false;
    Format format = Format::Table;
    unsigned cap = kDefaultEnumerationCap;
};

struct TableResult {
    std::string text;
    /// false only for method=all when the routes disagree somewhere.
    bool consistent = true;
};

TableResult cmd_table(const TableOptions& options);

struct VerifyOptions {
    unsigned max_n = 10;
    unsigned egf_order = kDefaultEgfOrder;
    unsigned theorem_max_n = 40;
    unsigned cap = kDefaultEnumerationCap;
    /// Test hook: add one to E_k in the Euler prefix fed to the formula routes.
    std::optional<unsigned> corrupt_euler_index;
};

std::vector<VerifyReport> cmd_verify(const VerifyOptions& options);

struct RatioRow {
    unsigned n = 0;
    Rational nw_over_ne;
    std::optional<Rational> down_over_up;
};

std::vector<RatioRow> ratio_rows(unsigned max_n);

/// |E^nw_n / E^ne_n - 1| is nonincreasing over even n in [lo, hi].
bool nw_ne_gap_nonincreasing(const std::vector<RatioRow>& rows, unsigned lo, unsigned hi);

std::string cmd_ratios(unsigned max_n, Format format);

struct Conjecture {
    std::string sequence;
    /// Integer coefficients over the candidate basis, in basis_names() order.
    std::vector<Integer> coefficients;
    std::size_t prefix_length = 0;
    std::string expression;
};

/// Names of the candidate EGF basis: tan^b and sec*tan^b for b = 0..3.
const std::vector<std::string>& candidate_basis_names();

/// Searches the candidate library for an EGF whose a_m match target[m] for all
/// m < target.size(). Returns nothing when the data cannot single out a candidate.
std::optional<Conjecture> match_candidate(const std::string& name, const std::vector<Integer>& target);

struct OpenqResult {
    std::vector<CountTable> rows;
    bool partition_holds = true;
    std::vector<Conjecture> conjectures;
    std::string text;
};

OpenqResult cmd_openq(unsigned max_n, unsigned cap, Format format);

/// Names accepted by export.
const std::vector<std::string>& sequence_names();

struct ExportOptions {
    std::string sequence;
    unsigned max_n = 10;
    Format format = Format::Bfile;
    unsigned cap = kDefaultEnumerationCap;
};

/// (n, a(n)) pairs of the named sequence: offset 0 for E, 2 for the refinements.
std::vector<std::pair<unsigned, Integer>> sequence_values(const std::string& name, unsigned max_n, unsigned cap);

std::string cmd_export(const ExportOptions& options);

/// Reads "n a(n)" lines, skipping blanks and '#' comments.
std::vector<std::pair<unsigned, Integer>> parse_bfile(std::string_view text);

struct BijectionOptions {
    unsigned max_n = 10;
    unsigned cap = kDefaultEnumerationCap;
};

std::vector<VerifyReport> cmd_bijection_check(const BijectionOptions& options);

/// Classification, decomposition and bijection images of a single permutation.
std::string describe_permutation(const Permutation& sigma);

} // namespace eulerrefine::cli

#endif
