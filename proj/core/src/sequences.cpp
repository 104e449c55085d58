#include <eulerrefine/sequences.hpp>

#include <stdexcept>
#include <string>

namespace eulerrefine {

namespace {

void require_degree(unsigned n, const char* who)
{
    if (n < 2) {
        throw std::invalid_argument(std::string(who) + ": degree must be at least 2");
    }
}

void require_prefix(std::span<const Integer> euler, unsigned max_index, const char* who)
{
    if (euler.size() <= max_index) {
        throw std::invalid_argument(std::string(who) + ": Euler prefix must reach E_" + std::to_string(max_index));
    }
}

// total! / (a! b! c!), asserting exact divisibility.
Integer checked_multinomial(const std::vector<Integer>& fact, unsigned a, unsigned b, unsigned c)
{
    const Integer denom = fact[a] * fact[b] * fact[c];
    const Integer& numer = fact[a + b + c];
    if (mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t()) == 0) {
        throw std::logic_error("multinomial coefficient is not integral");
    }
    Integer out;
    mpz_divexact(out.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    return out;
}

ConvolutionTerm make_term(const std::vector<Integer>& fact, std::span<const Integer> euler, unsigned a, unsigned b,
                          unsigned c)
{
    ConvolutionTerm t{{a, b, c}, checked_multinomial(fact, a, b, c), 0};
    t.value = t.multinomial * euler[a] * euler[b] * euler[c];
    return t;
}

Integer sum_values(const std::vector<ConvolutionTerm>& terms)
{
    Integer acc = 0;
    for (const auto& t : terms) {
        acc += t.value;
    }
    return acc;
}

} // namespace

std::vector<Integer> euler_numbers(unsigned max_index)
{
    // Entringer numbers: row m holds E(m, 0..m), E(m, 0) = 0 for m > 0,
    // E(m, k) = E(m, k-1) + E(m-1, m-k); E_m = E(m, m).
    std::vector<Integer> out(max_index + 1);
    std::vector<Integer> prev{1};
    out[0] = 1;
    for (unsigned m = 1; m <= max_index; ++m) {
        std::vector<Integer> row(m + 1);
        row[0] = 0;
        for (unsigned k = 1; k <= m; ++k) {
            row[k] = row[k - 1] + prev[m - k];
        }
        out[m] = row[m];
        prev = std::move(row);
    }
    return out;
}

std::vector<ConvolutionTerm> e_up_terms(unsigned n, std::span<const Integer> euler)
{
    require_degree(n, "e_up_terms");
    require_prefix(euler, n - 2, "e_up_terms");
    const unsigned total = n - 2;
    const auto fact = factorials(total);
    std::vector<ConvolutionTerm> terms;
    for (unsigned a = 1; a <= total; a += 2) {
        for (unsigned b = 1; a + b <= total; b += 2) {
            terms.push_back(make_term(fact, euler, a, b, total - a - b));
        }
    }
    return terms;
}

Integer e_up_formula(unsigned n, std::span<const Integer> euler) { return 2 * sum_values(e_up_terms(n, euler)); }

Integer e_up_formula(unsigned n)
{
    require_degree(n, "e_up_formula");
    return e_up_formula(n, euler_numbers(n));
}

Integer e_down_recurrence(unsigned n, std::span<const Integer> euler)
{
    require_degree(n, "e_down_recurrence");
    require_prefix(euler, n - 2, "e_down_recurrence");
    if (n % 2 == 0) {
        return euler[n - 2];
    }
    return 2 * euler[n - 2];
}

Integer e_down_recurrence(unsigned n)
{
    require_degree(n, "e_down_recurrence");
    return e_down_recurrence(n, euler_numbers(n));
}

std::vector<ConvolutionTerm> e_nw_terms(unsigned n, std::span<const Integer> euler)
{
    require_degree(n, "e_nw_terms");
    if (n % 2 != 0) {
        throw std::invalid_argument("e_nw_terms: the max-min convolution covers even degree only");
    }
    require_prefix(euler, n - 2, "e_nw_terms");
    const unsigned total = n - 2;
    const auto fact = factorials(total);
    std::vector<ConvolutionTerm> terms;
    for (unsigned a = 1; a <= total; a += 2) {
        for (unsigned b = 0; a + b + 1 <= total; b += 2) {
            terms.push_back(make_term(fact, euler, a, b, total - a - b));
        }
    }
    return terms;
}

Integer e_nw_formula(unsigned n, std::span<const Integer> euler) { return sum_values(e_nw_terms(n, euler)); }

Integer e_nw_formula(unsigned n)
{
    require_degree(n, "e_nw_formula");
    return e_nw_formula(n, euler_numbers(n));
}

std::pair<Integer, Integer> e_ne_nw_pair(unsigned n, std::span<const Integer> euler)
{
    require_degree(n, "e_ne_nw_pair");
    require_prefix(euler, n, "e_ne_nw_pair");
    if (n % 2 == 1) {
        // min-max and max-min agree at odd degree, so each is half of E_n.
        if (mpz_odd_p(euler[n].get_mpz_t()) != 0) {
            throw std::logic_error("e_ne_nw_pair: E_" + std::to_string(n) + " is odd");
        }
        Integer half = euler[n] / 2;
        return {half, half};
    }
    Integer nw = e_nw_formula(n, euler);
    Integer ne = nw + euler[n - 2];
    return {std::move(ne), std::move(nw)};
}

std::pair<Integer, Integer> e_ne_nw_pair(unsigned n)
{
    require_degree(n, "e_ne_nw_pair");
    return e_ne_nw_pair(n, euler_numbers(n));
}

CountTable formula_counts(unsigned n, std::span<const Integer> euler)
{
    require_degree(n, "formula_counts");
    require_prefix(euler, n, "formula_counts");
    CountTable t;
    t.n = n;
    t.e = euler[n];
    auto [ne, nw] = e_ne_nw_pair(n, euler);
    t.ene = std::move(ne);
    t.enw = std::move(nw);
    t.eup = e_up_formula(n, euler);
    t.edown = e_down_recurrence(n, euler);
    return t;
}

std::vector<VerifyReport> theorem_check(unsigned n_max, std::span<const Integer> euler)
{
    require_degree(n_max, "theorem_check");
    require_prefix(euler, n_max, "theorem_check");
    VerifyReport difference{"E^ne_n - E^nw_n = E_{n-2} (even n)", Method::Formula, Method::Formula, {}};
    VerifyReport doubling{"E^up_n = 2 E^nw_n (even n)", Method::Formula, Method::Formula, {}};
    VerifyReport chain_nw{"E_n = 2 E^nw_n + E_{n-2} (even n)", Method::Formula, Method::Formula, {}};
    VerifyReport chain_up{"E_n = E^up_n + E^down_n (even n)", Method::Formula, Method::Formula, {}};
    for (unsigned n = 2; n <= n_max; n += 2) {
        const Integer nw = e_nw_formula(n, euler);
        const Integer ne = euler[n] - nw;
        const Integer up = e_up_formula(n, euler);
        const Integer down = e_down_recurrence(n, euler);
        difference.add(n, ne - nw, euler[n - 2]);
        doubling.add(n, up, 2 * nw);
        chain_nw.add(n, euler[n], 2 * nw + euler[n - 2]);
        chain_up.add(n, euler[n], up + down);
    }
    return {difference, doubling, chain_nw, chain_up};
}

std::vector<VerifyReport> theorem_check(unsigned n_max)
{
    require_degree(n_max, "theorem_check");
    return theorem_check(n_max, euler_numbers(n_max));
}

} // namespace eulerrefine
