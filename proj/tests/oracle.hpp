// Test-only reference values and brute-force oracles. Nothing here calls the
// library's generators, classifiers or formulas.
#ifndef EULERREFINE_TESTS_ORACLE_HPP
#define EULERREFINE_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

// E_0..E_30 from the Bernoulli/Euler-number closed forms (computed offline with sympy).
inline const std::vector<std::string> kEuler = {
    "1", "1", "1", "2", "5", "16", "61", "272", "1385", "7936", "50521", "353792", "2702765", "22368256",
    "199360981", "1903757312", "19391512145", "209865342976", "2404879675441", "29088885112832",
    "370371188237525", "4951498053124096", "69348874393137901", "1015423886506852352",
    "15514534163557086905", "246921480190207983616", "4087072509293123892361", "70251601603943959887872",
    "1252259641403629865468285", "23119184187809597841473536", "441543893249023104553682821"};

struct Counts {
    std::uint64_t e = 0, ene = 0, enw = 0, eup = 0, edown = 0, dup = 0, ddown = 0;
};

// Filters all n! permutations and classifies each directly from the definitions.
inline Counts brute_force(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    Counts c;
    do {
        bool up = true, down = true;
        for (int i = 0; i + 1 < n; ++i) {
            const bool rise = p[i] < p[i + 1];
            up = up && (rise == (i % 2 == 0));
            down = down && (rise == (i % 2 == 1));
        }
        if (!up && !down) continue;
        int pos1 = 0, posn = 0, possecond = 0;
        for (int i = 0; i < n; ++i) {
            if (p[i] == 1) pos1 = i + 1;
            if (p[i] == n) posn = i + 1;
            if (p[i] == n - 1) possecond = i + 1;
        }
        if (up) {
            ++c.e;
            (pos1 < posn ? c.ene : c.enw) += 1;
            (possecond % 2 == 0 ? c.eup : c.edown) += 1;
        }
        if (down) {
            (possecond % 2 == 1 ? c.dup : c.ddown) += 1;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return c;
}

} // namespace oracle

#endif
