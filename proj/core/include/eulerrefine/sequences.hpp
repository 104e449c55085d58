#ifndef EULERREFINE_SEQUENCES_HPP
#define EULERREFINE_SEQUENCES_HPP

#include <span>
#include <utility>
#include <vector>

#include <eulerrefine/bigint.hpp>
#include <eulerrefine/count_table.hpp>
#include <eulerrefine/report.hpp>

namespace eulerrefine {

/// E_0..E_max_index from the boustrophedon (Seidel-Entringer) triangle.
std::vector<Integer> euler_numbers(unsigned max_index);

/// One summand of a three-block convolution: block sizes and the integral
/// value multinomial(total; sizes) * E_{sizes[0]} * E_{sizes[1]} * E_{sizes[2]}.
struct ConvolutionTerm {
    unsigned sizes[3];
    Integer multinomial;
    Integer value;
};

// Every function below takes an optional Euler prefix (E_0, E_1, ...). Passing one
// lets callers share a precomputed prefix, or inject a corrupted one in tests.
// The prefix must reach the indices the formula needs; std::invalid_argument otherwise.

/// Summands of the 2nd-max-upper convolution for degree n: block sizes (2i+1, 2j+1, k)
/// with (2i+1)+(2j+1)+k = n-2, in lexicographic order of (2i+1, 2j+1).
std::vector<ConvolutionTerm> e_up_terms(unsigned n, std::span<const Integer> euler);

/// Up-down 2nd-max-upper count: twice the sum of e_up_terms. Requires n >= 2.
Integer e_up_formula(unsigned n);
Integer e_up_formula(unsigned n, std::span<const Integer> euler);

/// Up-down 2nd-max-lower count: E_{2k-2} for n = 2k, 2 E_{2k-1} for n = 2k+1. Requires n >= 2.
Integer e_down_recurrence(unsigned n);
Integer e_down_recurrence(unsigned n, std::span<const Integer> euler);

/// Summands of the max-min convolution for even n: block sizes (2i+1, 2j, 2k+1)
/// summing to n-2.
std::vector<ConvolutionTerm> e_nw_terms(unsigned n, std::span<const Integer> euler);

/// Up-down max-min count for even n >= 2.
Integer e_nw_formula(unsigned n);
Integer e_nw_formula(unsigned n, std::span<const Integer> euler);

/// (min-max, max-min) counts for n >= 2. Odd n: both E_n / 2. Even n: max-min from
/// the convolution and min-max = max-min + E_{n-2}.
std::pair<Integer, Integer> e_ne_nw_pair(unsigned n);
std::pair<Integer, Integer> e_ne_nw_pair(unsigned n, std::span<const Integer> euler);

/// E, E^ne, E^nw, E^up, E^down for degree n from formulas only (no enumeration).
CountTable formula_counts(unsigned n, std::span<const Integer> euler);

/// For every even n in [2, n_max], checks from formula values alone:
///   E^ne_n - E^nw_n = E_{n-2}    with E^ne_n taken from the partition E_n - E^nw_n,
///   E^up_n = 2 E^nw_n,
///   E_n = 2 E^nw_n + E_{n-2} = E^up_n + E^down_n (reported as two identities).
std::vector<VerifyReport> theorem_check(unsigned n_max);
std::vector<VerifyReport> theorem_check(unsigned n_max, std::span<const Integer> euler);

} // namespace eulerrefine

#endif
