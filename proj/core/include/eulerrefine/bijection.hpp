#ifndef EULERREFINE_BIJECTION_HPP
#define EULERREFINE_BIJECTION_HPP

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <eulerrefine/permutation.hpp>

namespace eulerrefine {

/// Raised when a permutation or decomposition lies outside a map's domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One block of a decomposition: the values it occupies (ascending) and the
/// order-isomorphic pattern those values form (a standardization, entries 1..size).
struct Block {
    std::vector<int> values;
    std::vector<int> pattern;

    std::size_t size() const noexcept { return values.size(); }
    friend bool operator==(const Block&, const Block&) = default;
};

enum class DecompositionKind {
    /// up-down, 2nd-max-upper, n-1 left of n:
    ///   [block 0: 2i+1] n-1 [block 1: 2j+1] n [block 2: k]
    SecondMaxUpper,
    /// up-down, max-min, even degree:
    ///   [block 0: 2i+1] n [block 1: 2j] 1 [block 2: 2k+1]
    MaxMin,
};

/// Split of a permutation around its two landmark values.
///
/// For SecondMaxUpper the landmarks are n-1 and n, the blocks use {1..n-2}, and
/// all three patterns are up-down. For MaxMin the landmarks are n and 1, the blocks
/// use {2..n-1}, blocks 0 and 1 are up-down and block 2 is down-up.
struct Decomposition {
    DecompositionKind kind = DecompositionKind::SecondMaxUpper;
    std::array<Block, 3> blocks;
    /// 1-based positions of the first and second landmark.
    std::array<int, 2> landmarks{};

    std::array<std::size_t, 3> sizes() const
    {
        return {blocks[0].size(), blocks[1].size(), blocks[2].size()};
    }
    int degree() const
    {
        return static_cast<int>(blocks[0].size() + blocks[1].size() + blocks[2].size()) + 2;
    }
    std::string to_string() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Ranks of the values, e.g. 7 2 5 -> 3 1 2.
std::vector<int> standardize(std::span<const int> values);

/// Inverse of standardize onto the ascending value set.
std::vector<int> embed_pattern(std::span<const int> pattern, std::span<const int> sorted_values);

/// Exchanges the values n-1 and n. Domain: up-down 2nd-max-upper permutations.
Permutation swap_top_two(const Permutation& sigma);

/// True when sigma is up-down and 2nd-max-upper (degree >= 2).
bool is_second_max_upper_up_down(const Permutation& sigma);

/// True when sigma is up-down, of even degree and max-min.
bool is_max_min_up_down_even(const Permutation& sigma);

Decomposition decompose_smu(const Permutation& sigma);
Permutation compose_smu(const Decomposition& d, int n);

Decomposition decompose_maxmin(const Permutation& sigma);
Permutation compose_maxmin(const Decomposition& d, int n);

/// Two-to-one correspondence from even-degree max-min up-down permutations onto
/// 2nd-max-upper up-down permutations of the same degree.
///
/// Blocks (A, B, C) of sizes (2i+1, 2j, 2k+1) become the 2nd-max-upper blocks
/// (A, C*, B) of sizes (2i+1, 2k+1, 2j), where C* is C with its pattern
/// complemented (down-up to up-down) and all values shift down by one.
/// side = true additionally applies swap_top_two.
Permutation maxmin_to_smu(const Permutation& sigma, bool side);

/// Inverse of maxmin_to_smu.
std::pair<Permutation, bool> smu_to_maxmin(const Permutation& tau);

} // namespace eulerrefine

#endif
