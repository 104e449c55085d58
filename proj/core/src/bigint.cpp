#include <eulerrefine/bigint.hpp>

#include <numeric>
#include <stdexcept>

namespace eulerrefine {

Integer factorial(unsigned n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

std::vector<Integer> factorials(unsigned n)
{
    std::vector<Integer> out(n + 1);
    out[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        out[i] = out[i - 1] * i;
    }
    return out;
}

Integer multinomial(unsigned total, const std::vector<unsigned>& parts)
{
    if (std::accumulate(parts.begin(), parts.end(), 0u) != total) {
        throw std::invalid_argument("multinomial: parts do not sum to total");
    }
    Integer out = 1;
    unsigned remaining = total;
    for (unsigned part : parts) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), remaining, part);
        out *= binom;
        remaining -= part;
    }
    return out;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

Integer parse_integer(const std::string& text)
{
    Integer out;
    if (text.empty() || out.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a base-10 integer: '" + text + "'");
    }
    return out;
}

std::string to_decimal(const Rational& value, int significant_digits)
{
    if (significant_digits < 1) {
        throw std::invalid_argument("to_decimal: need at least one significant digit");
    }
    // 64 guard bits beyond what the requested digits need.
    const auto bits = static_cast<mp_bitcnt_t>(significant_digits * 4 + 64);
    mpf_class approx(value, bits);
    char* raw = nullptr;
    const std::string fmt = "%." + std::to_string(significant_digits) + "Fg";
    if (gmp_asprintf(&raw, fmt.c_str(), approx.get_mpf_t()) < 0) {
        throw std::runtime_error("to_decimal: formatting failed");
    }
    std::string out(raw);
    void (*free_fn)(void*, std::size_t);
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(raw, out.size() + 1);
    return out;
}

} // namespace eulerrefine
