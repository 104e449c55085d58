#ifndef EULERREFINE_SERIES_HPP
#define EULERREFINE_SERIES_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <eulerrefine/bigint.hpp>

namespace eulerrefine {

/// Raised by series operations whose preconditions are caller bugs
/// (order mismatch, non-invertible series, non-integral extraction).
class SeriesError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exponential generating function sum_n a_n x^n / n!, truncated after x^order.
///
/// Internally the ordinary coefficients [x^n] = a_n / n! are stored, so that
/// products are plain Cauchy convolutions. Conversion to the counting sequence
/// a_n happens only in extract_counts().
///
/// Values are immutable once built; all arithmetic is exact.
class TruncatedEgf {
public:
    /// Zero series of the given order.
    explicit TruncatedEgf(std::size_t order);

    /// Series from its ordinary coefficients; order = coeffs.size() - 1.
    /// Throws SeriesError on an empty coefficient vector.
    explicit TruncatedEgf(std::vector<Rational> coeffs);

    /// Series whose EGF coefficients are the given counts: [x^n] = counts[n] / n!.
    static TruncatedEgf from_counts(std::span<const Integer> counts);

    static TruncatedEgf zero(std::size_t order) { return TruncatedEgf(order); }
    static TruncatedEgf one(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    /// [x^n] of the series.
    const Rational& coeff(std::size_t n) const { return coeffs_.at(n); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const TruncatedEgf& lhs, const TruncatedEgf& rhs) = default;

private:
    std::vector<Rational> coeffs_;
};

TruncatedEgf egf_add(const TruncatedEgf& f, const TruncatedEgf& g);
TruncatedEgf egf_sub(const TruncatedEgf& f, const TruncatedEgf& g);

/// Cauchy product truncated at the common order.
TruncatedEgf egf_mul(const TruncatedEgf& f, const TruncatedEgf& g);

TruncatedEgf egf_scale(const TruncatedEgf& f, const Rational& factor);

/// Multiplicative inverse by the triangular recurrence. Requires f.coeff(0) != 0.
TruncatedEgf egf_reciprocal(const TruncatedEgf& f);

inline TruncatedEgf operator+(const TruncatedEgf& f, const TruncatedEgf& g) { return egf_add(f, g); }
inline TruncatedEgf operator-(const TruncatedEgf& f, const TruncatedEgf& g) { return egf_sub(f, g); }
inline TruncatedEgf operator*(const TruncatedEgf& f, const TruncatedEgf& g) { return egf_mul(f, g); }
inline TruncatedEgf operator*(const Rational& c, const TruncatedEgf& f) { return egf_scale(f, c); }

/// f^power, with f^0 the one-series.
TruncatedEgf egf_pow(const TruncatedEgf& f, unsigned power);

TruncatedEgf sin_egf(std::size_t order);
TruncatedEgf cos_egf(std::size_t order);
/// 1 / cos x.
TruncatedEgf sec_egf(std::size_t order);
/// sin x * sec x.
TruncatedEgf tan_egf(std::size_t order);

/// The counting sequence a_n = n! [x^n] for n = 0..order.
/// Throws SeriesError if some a_n is not an integer.
std::vector<Integer> extract_counts(const TruncatedEgf& f);

/// JSON text {"order": N, "a": ["a_0", "a_1", ...]} with decimal-string counts.
std::string to_json(const TruncatedEgf& f);

/// Generating functions of the shifted refinement sequences, e.g.
/// the a_n of min_max_egf are E^ne_{n+2}.
namespace named {
    /// sec^2 x (sec x + tan x)
    TruncatedEgf min_max_egf(std::size_t order);
    /// sec x tan x (sec x + tan x)
    TruncatedEgf max_min_egf(std::size_t order);
    /// 2 tan^2 x (sec x + tan x)
    TruncatedEgf second_max_upper_egf(std::size_t order);
    /// sec x + 2 tan x
    TruncatedEgf second_max_lower_egf(std::size_t order);
    /// sec x + tan x
    TruncatedEgf euler_egf(std::size_t order);
} // namespace named

} // namespace eulerrefine

#endif
