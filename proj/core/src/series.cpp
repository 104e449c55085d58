#include <eulerrefine/series.hpp>

#include <json.hpp>

namespace eulerrefine {

namespace {

void require_same_order(const TruncatedEgf& f, const TruncatedEgf& g, const char* op)
{
    if (f.order() != g.order()) {
        throw SeriesError(std::string(op) + ": order mismatch (" + std::to_string(f.order()) + " vs "
                          + std::to_string(g.order()) + ")");
    }
}

} // namespace

TruncatedEgf::TruncatedEgf(std::size_t order)
    : coeffs_(order + 1)
{
}

TruncatedEgf::TruncatedEgf(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw SeriesError("TruncatedEgf: at least one coefficient is required");
    }
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
}

TruncatedEgf TruncatedEgf::from_counts(std::span<const Integer> counts)
{
    if (counts.empty()) {
        throw SeriesError("TruncatedEgf::from_counts: empty sequence");
    }
    std::vector<Rational> coeffs(counts.size());
    Integer fact = 1;
    for (std::size_t n = 0; n < counts.size(); ++n) {
        if (n > 0) {
            fact *= static_cast<unsigned long>(n);
        }
        coeffs[n] = Rational(counts[n], fact);
    }
    return TruncatedEgf(std::move(coeffs));
}

TruncatedEgf TruncatedEgf::one(std::size_t order)
{
    TruncatedEgf out(order);
    out.coeffs_[0] = 1;
    return out;
}

TruncatedEgf egf_add(const TruncatedEgf& f, const TruncatedEgf& g)
{
    require_same_order(f, g, "egf_add");
    std::vector<Rational> out(f.order() + 1);
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] = f.coeff(n) + g.coeff(n);
    }
    return TruncatedEgf(std::move(out));
}

TruncatedEgf egf_sub(const TruncatedEgf& f, const TruncatedEgf& g)
{
    require_same_order(f, g, "egf_sub");
    std::vector<Rational> out(f.order() + 1);
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] = f.coeff(n) - g.coeff(n);
    }
    return TruncatedEgf(std::move(out));
}

TruncatedEgf egf_mul(const TruncatedEgf& f, const TruncatedEgf& g)
{
    require_same_order(f, g, "egf_mul");
    const std::size_t order = f.order();
    std::vector<Rational> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc;
        for (std::size_t i = 0; i <= n; ++i) {
            if (sgn(f.coeff(i)) == 0 || sgn(g.coeff(n - i)) == 0) {
                continue;
            }
            acc += f.coeff(i) * g.coeff(n - i);
        }
        out[n] = std::move(acc);
    }
    return TruncatedEgf(std::move(out));
}

TruncatedEgf egf_scale(const TruncatedEgf& f, const Rational& factor)
{
    std::vector<Rational> out(f.coeffs());
    for (auto& c : out) {
        c *= factor;
    }
    return TruncatedEgf(std::move(out));
}

TruncatedEgf egf_reciprocal(const TruncatedEgf& f)
{
    const Rational& lead = f.coeff(0);
    if (sgn(lead) == 0) {
        throw SeriesError("egf_reciprocal: constant term is zero, series is not invertible");
    }
    const std::size_t order = f.order();
    std::vector<Rational> out(order + 1);
    out[0] = 1 / lead;
    // sum_{i=0}^{n} f_i g_{n-i} = 0 for n >= 1
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc;
        for (std::size_t i = 1; i <= n; ++i) {
            if (sgn(f.coeff(i)) != 0) {
                acc += f.coeff(i) * out[n - i];
            }
        }
        out[n] = -acc / lead;
    }
    return TruncatedEgf(std::move(out));
}

TruncatedEgf egf_pow(const TruncatedEgf& f, unsigned power)
{
    TruncatedEgf out = TruncatedEgf::one(f.order());
    for (unsigned i = 0; i < power; ++i) {
        out = egf_mul(out, f);
    }
    return out;
}

TruncatedEgf sin_egf(std::size_t order)
{
    std::vector<Rational> out(order + 1);
    Integer fact = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        fact *= static_cast<unsigned long>(n);
        if (n % 2 == 1) {
            out[n] = Rational((n % 4 == 1) ? 1 : -1, fact);
        }
    }
    return TruncatedEgf(std::move(out));
}

TruncatedEgf cos_egf(std::size_t order)
{
    std::vector<Rational> out(order + 1);
    out[0] = 1;
    Integer fact = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        fact *= static_cast<unsigned long>(n);
        if (n % 2 == 0) {
            out[n] = Rational((n % 4 == 0) ? 1 : -1, fact);
        }
    }
    return TruncatedEgf(std::move(out));
}

TruncatedEgf sec_egf(std::size_t order) { return egf_reciprocal(cos_egf(order)); }

TruncatedEgf tan_egf(std::size_t order) { return egf_mul(sin_egf(order), sec_egf(order)); }

std::vector<Integer> extract_counts(const TruncatedEgf& f)
{
    std::vector<Integer> out(f.order() + 1);
    Integer fact = 1;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (n > 0) {
            fact *= static_cast<unsigned long>(n);
        }
        const Rational a = f.coeff(n) * fact;
        if (a.get_den() != 1) {
            throw SeriesError("extract_counts: a_" + std::to_string(n) + " = " + to_string(a)
                              + " is not an integer");
        }
        out[n] = a.get_num();
    }
    return out;
}

std::string to_json(const TruncatedEgf& f)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : extract_counts(f)) {
        a.push_back(to_string(v));
    }
    nlohmann::json doc;
    doc["order"] = f.order();
    doc["a"] = std::move(a);
    return doc.dump();
}

namespace named {

TruncatedEgf euler_egf(std::size_t order) { return sec_egf(order) + tan_egf(order); }

TruncatedEgf min_max_egf(std::size_t order)
{
    const auto sec = sec_egf(order);
    return sec * sec * (sec + tan_egf(order));
}

TruncatedEgf max_min_egf(std::size_t order)
{
    const auto sec = sec_egf(order);
    const auto tan = tan_egf(order);
    return sec * tan * (sec + tan);
}

TruncatedEgf second_max_upper_egf(std::size_t order)
{
    const auto sec = sec_egf(order);
    const auto tan = tan_egf(order);
    return Rational(2) * (tan * tan * (sec + tan));
}

TruncatedEgf second_max_lower_egf(std::size_t order)
{
    return sec_egf(order) + Rational(2) * tan_egf(order);
}

} // namespace named

} // namespace eulerrefine
