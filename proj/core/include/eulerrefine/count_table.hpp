#ifndef EULERREFINE_COUNT_TABLE_HPP
#define EULERREFINE_COUNT_TABLE_HPP

#include <optional>

#include <eulerrefine/bigint.hpp>

namespace eulerrefine {

/// Per-degree refinement counts.
///
/// ene/enw (min-max / max-min) are the table-facing values and count up-down
/// permutations only; the down-up population is kept separately in
/// ene_down_up/enw_down_up when it was computed. eup/edown count up-down
/// permutations, dup/ddown count down-up permutations.
struct CountTable {
    unsigned n = 0;
    Integer e;
    Integer ene;
    Integer enw;
    Integer eup;
    Integer edown;
    std::optional<Integer> dup;
    std::optional<Integer> ddown;
    std::optional<Integer> ene_down_up;
    std::optional<Integer> enw_down_up;

    friend bool operator==(const CountTable&, const CountTable&) = default;
};

} // namespace eulerrefine

#endif
