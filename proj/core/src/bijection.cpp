#include <eulerrefine/bijection.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eulerrefine {

namespace {

Block make_block(std::span<const int> segment)
{
    Block b;
    b.values.assign(segment.begin(), segment.end());
    std::sort(b.values.begin(), b.values.end());
    b.pattern = standardize(segment);
    return b;
}

std::vector<int> complement_pattern(std::span<const int> pattern)
{
    const int m = static_cast<int>(pattern.size());
    std::vector<int> out;
    out.reserve(pattern.size());
    for (int p : pattern) {
        out.push_back(m + 1 - p);
    }
    return out;
}

Block shift_values(const Block& b, int delta)
{
    Block out = b;
    for (int& v : out.values) {
        v += delta;
    }
    return out;
}

bool is_pattern(std::span<const int> pattern)
{
    std::vector<int> sorted(pattern.begin(), pattern.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i) + 1) {
            return false;
        }
    }
    return true;
}

void validate_blocks(const Decomposition& d, int n, int lowest_value, const std::array<AltKind, 3>& kinds,
                     const std::array<int, 3>& parities)
{
    if (d.degree() != n) {
        throw DomainError("decomposition: block sizes do not sum to n-2");
    }
    std::vector<int> all;
    for (std::size_t i = 0; i < 3; ++i) {
        const Block& b = d.blocks[i];
        if (b.pattern.size() != b.values.size()) {
            throw DomainError("decomposition: block " + std::to_string(i) + " pattern/value size mismatch");
        }
        if (parities[i] >= 0 && static_cast<int>(b.size() % 2) != parities[i]) {
            throw DomainError("decomposition: block " + std::to_string(i) + " has the wrong size parity");
        }
        if (!std::is_sorted(b.values.begin(), b.values.end())) {
            throw DomainError("decomposition: block " + std::to_string(i) + " values must be ascending");
        }
        if (!is_pattern(b.pattern)) {
            throw DomainError("decomposition: block " + std::to_string(i) + " pattern is not a permutation");
        }
        const bool ok = kinds[i] == AltKind::UpDown ? is_up_down(b.pattern) : is_down_up(b.pattern);
        if (!ok) {
            throw DomainError("decomposition: block " + std::to_string(i) + " pattern is not " +
                              std::string(to_string(kinds[i])));
        }
        all.insert(all.end(), b.values.begin(), b.values.end());
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i] != lowest_value + static_cast<int>(i)) {
            throw DomainError("decomposition: block values do not partition the non-landmark values");
        }
    }
}

void append_block(std::vector<int>& out, const Block& b)
{
    const auto embedded = embed_pattern(b.pattern, b.values);
    out.insert(out.end(), embedded.begin(), embedded.end());
}

} // namespace

std::string Decomposition::to_string() const
{
    std::ostringstream os;
    os << (kind == DecompositionKind::SecondMaxUpper ? "2nd-max-upper" : "max-min") << " sizes=(" << blocks[0].size()
       << "," << blocks[1].size() << "," << blocks[2].size() << ") landmarks@(" << landmarks[0] << "," << landmarks[1]
       << ")";
    for (const auto& b : blocks) {
        os << " {";
        for (std::size_t i = 0; i < b.values.size(); ++i) {
            os << (i ? "," : "") << b.values[i];
        }
        os << "}:";
        for (int p : b.pattern) {
            os << p;
            if (b.pattern.size() > 9) {
                os << ' ';
            }
        }
    }
    return os.str();
}

std::vector<int> standardize(std::span<const int> values)
{
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<int> ranks(values.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        ranks[order[r]] = static_cast<int>(r) + 1;
    }
    return ranks;
}

std::vector<int> embed_pattern(std::span<const int> pattern, std::span<const int> sorted_values)
{
    if (pattern.size() != sorted_values.size()) {
        throw DomainError("embed_pattern: size mismatch");
    }
    std::vector<int> out;
    out.reserve(pattern.size());
    for (int p : pattern) {
        out.push_back(sorted_values[static_cast<std::size_t>(p - 1)]);
    }
    return out;
}

bool is_second_max_upper_up_down(const Permutation& sigma)
{
    const int n = sigma.degree();
    return n >= 2 && is_up_down(sigma) && in_upper_row(sigma.position_of(n - 1), AltKind::UpDown);
}

bool is_max_min_up_down_even(const Permutation& sigma)
{
    const int n = sigma.degree();
    return n >= 2 && n % 2 == 0 && is_up_down(sigma) && sigma.position_of(n) < sigma.position_of(1);
}

Permutation swap_top_two(const Permutation& sigma)
{
    const int n = sigma.degree();
    if (n < 4 || !is_second_max_upper_up_down(sigma)) {
        throw DomainError("swap_top_two: " + sigma.to_string() + " is not an up-down 2nd-max-upper permutation");
    }
    std::vector<int> out(sigma.values().begin(), sigma.values().end());
    for (int& v : out) {
        if (v == n) {
            v = n - 1;
        } else if (v == n - 1) {
            v = n;
        }
    }
    return Permutation(std::move(out));
}

Decomposition decompose_smu(const Permutation& sigma)
{
    if (!is_second_max_upper_up_down(sigma)) {
        throw DomainError("decompose_smu: " + sigma.to_string() + " is not an up-down 2nd-max-upper permutation");
    }
    const int n = sigma.degree();
    const int p_second = sigma.position_of(n - 1);
    const int p_max = sigma.position_of(n);
    if (p_max < p_second) {
        throw DomainError("decompose_smu: n is left of n-1 in " + sigma.to_string() +
                          "; apply swap_top_two first");
    }
    const auto v = sigma.values();
    Decomposition d;
    d.kind = DecompositionKind::SecondMaxUpper;
    d.landmarks = {p_second, p_max};
    d.blocks[0] = make_block(v.subspan(0, static_cast<std::size_t>(p_second - 1)));
    d.blocks[1] = make_block(v.subspan(static_cast<std::size_t>(p_second), static_cast<std::size_t>(p_max - p_second - 1)));
    d.blocks[2] = make_block(v.subspan(static_cast<std::size_t>(p_max)));
    return d;
}

Permutation compose_smu(const Decomposition& d, int n)
{
    if (d.kind != DecompositionKind::SecondMaxUpper) {
        throw DomainError("compose_smu: decomposition is not of 2nd-max-upper kind");
    }
    validate_blocks(d, n, 1, {AltKind::UpDown, AltKind::UpDown, AltKind::UpDown}, {1, 1, -1});
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    append_block(out, d.blocks[0]);
    out.push_back(n - 1);
    append_block(out, d.blocks[1]);
    out.push_back(n);
    append_block(out, d.blocks[2]);
    return Permutation(std::move(out));
}

Decomposition decompose_maxmin(const Permutation& sigma)
{
    if (!is_max_min_up_down_even(sigma)) {
        throw DomainError("decompose_maxmin: " + sigma.to_string() +
                          " is not an even-degree up-down max-min permutation");
    }
    const int n = sigma.degree();
    const int p_max = sigma.position_of(n);
    const int p_one = sigma.position_of(1);
    const auto v = sigma.values();
    Decomposition d;
    d.kind = DecompositionKind::MaxMin;
    d.landmarks = {p_max, p_one};
    d.blocks[0] = make_block(v.subspan(0, static_cast<std::size_t>(p_max - 1)));
    d.blocks[1] = make_block(v.subspan(static_cast<std::size_t>(p_max), static_cast<std::size_t>(p_one - p_max - 1)));
    d.blocks[2] = make_block(v.subspan(static_cast<std::size_t>(p_one)));
    return d;
}

Permutation compose_maxmin(const Decomposition& d, int n)
{
    if (d.kind != DecompositionKind::MaxMin) {
        throw DomainError("compose_maxmin: decomposition is not of max-min kind");
    }
    if (n % 2 != 0) {
        throw DomainError("compose_maxmin: degree must be even");
    }
    validate_blocks(d, n, 2, {AltKind::UpDown, AltKind::UpDown, AltKind::DownUp}, {1, 0, 1});
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    append_block(out, d.blocks[0]);
    out.push_back(n);
    append_block(out, d.blocks[1]);
    out.push_back(1);
    append_block(out, d.blocks[2]);
    return Permutation(std::move(out));
}

Permutation maxmin_to_smu(const Permutation& sigma, bool side)
{
    const int n = sigma.degree();
    const Decomposition src = decompose_maxmin(sigma);
    Decomposition dst;
    dst.kind = DecompositionKind::SecondMaxUpper;
    dst.blocks[0] = shift_values(src.blocks[0], -1);
    dst.blocks[1] = shift_values(src.blocks[2], -1);
    dst.blocks[1].pattern = complement_pattern(dst.blocks[1].pattern);
    dst.blocks[2] = shift_values(src.blocks[1], -1);
    const int p_second = static_cast<int>(dst.blocks[0].size()) + 1;
    dst.landmarks = {p_second, p_second + static_cast<int>(dst.blocks[1].size()) + 1};
    Permutation tau = compose_smu(dst, n);
    return side ? swap_top_two(tau) : tau;
}

std::pair<Permutation, bool> smu_to_maxmin(const Permutation& tau)
{
    const int n = tau.degree();
    if (n % 2 != 0 || !is_second_max_upper_up_down(tau)) {
        throw DomainError("smu_to_maxmin: " + tau.to_string() +
                          " is not an even-degree up-down 2nd-max-upper permutation");
    }
    const bool side = tau.position_of(n) < tau.position_of(n - 1);
    const Decomposition src = decompose_smu(side ? swap_top_two(tau) : tau);
    Decomposition dst;
    dst.kind = DecompositionKind::MaxMin;
    dst.blocks[0] = shift_values(src.blocks[0], 1);
    dst.blocks[1] = shift_values(src.blocks[2], 1);
    dst.blocks[2] = shift_values(src.blocks[1], 1);
    dst.blocks[2].pattern = complement_pattern(dst.blocks[2].pattern);
    const int p_max = static_cast<int>(dst.blocks[0].size()) + 1;
    dst.landmarks = {p_max, p_max + static_cast<int>(dst.blocks[1].size()) + 1};
    return {compose_maxmin(dst, n), side};
}

} // namespace eulerrefine
