#ifndef EULERREFINE_PERMUTATION_HPP
#define EULERREFINE_PERMUTATION_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <eulerrefine/count_table.hpp>

namespace eulerrefine {

/// A bijection of {1..n} in one-line notation: values()[i-1] = sigma(i).
class Permutation {
public:
    /// Throws std::invalid_argument unless values is a permutation of {1..n}, n >= 1.
    explicit Permutation(std::vector<int> values);

    /// Parses "3572461" (single digits, n <= 9) or "10,1,12,2,..." (comma separated).
    static Permutation parse(std::string_view text);

    static Permutation identity(int n);

    int degree() const noexcept { return static_cast<int>(values_.size()); }

    /// sigma(position), 1-based.
    int operator()(int position) const { return values_.at(static_cast<std::size_t>(position - 1)); }

    /// sigma^{-1}(value), 1-based.
    int position_of(int value) const;

    std::span<const int> values() const noexcept { return values_; }

    /// Digits for n <= 9, comma separated otherwise.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

enum class AltKind : std::uint8_t { UpDown, DownUp };
enum class MinMax : std::uint8_t { MinMax, MaxMin };
enum class SecondMax : std::uint8_t { Upper, Lower };

struct Classification {
    AltKind kind;
    MinMax minmax;
    SecondMax secondmax;

    friend bool operator==(const Classification&, const Classification&) = default;
};

std::string_view to_string(AltKind kind);
std::string_view to_string(MinMax value);
std::string_view to_string(SecondMax value);

/// sigma(1) < sigma(2) > sigma(3) < ...; degree 1 counts as up-down.
bool is_up_down(const Permutation& sigma);
/// sigma(1) > sigma(2) < sigma(3) > ...; degree 1 counts as down-up.
bool is_down_up(const Permutation& sigma);
bool is_alternating(const Permutation& sigma);

bool is_up_down(std::span<const int> values);
bool is_down_up(std::span<const int> values);

/// sigma*(i) = n - sigma(i) + 1.
Permutation complement(const Permutation& sigma);

/// Positions (1-based) of the upper row: even positions for up-down,
/// odd positions for down-up. Throws std::invalid_argument for n < 2.
std::vector<int> upper_row(int n, AltKind kind);

bool in_upper_row(int position, AltKind kind);

/// Throws std::invalid_argument for non-alternating input or n < 2.
Classification classify(const Permutation& sigma);

using PermutationVisitor = std::function<void(std::span<const int>)>;

/// Visits every alternating permutation of the given kind exactly once, in
/// lexicographic order, by a prefix-pruned depth-first search.
/// The span passed to the visitor is only valid during the call.
void for_each_alternating(int n, AltKind kind, const PermutationVisitor& visit);

/// Same search restricted to permutations starting with `prefix` (which must
/// itself satisfy the alternating chain). Disjoint prefixes give disjoint outputs,
/// so workers can split the search space by first-two-values prefix.
void for_each_alternating_with_prefix(int n, AltKind kind, std::span<const int> prefix,
                                      const PermutationVisitor& visit);

/// All alternating permutations of the given kind, lexicographically sorted.
std::vector<Permutation> enumerate_alternating(int n, AltKind kind);

/// Reference generator: filters all n! permutations. Intended for n <= 9.
std::vector<Permutation> enumerate_alternating_by_filter(int n, AltKind kind);

/// Valid two-value prefixes of alternating permutations of degree n >= 2.
std::vector<std::vector<int>> alternating_prefixes(int n, AltKind kind);

/// Brute-force refinement counts for degree n >= 2 over both up-down and
/// down-up permutations. `threads` > 1 splits the search by prefix.
CountTable count_refinements(int n, unsigned threads = 1);

} // namespace eulerrefine

#endif
