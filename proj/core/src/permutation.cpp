#include <eulerrefine/permutation.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <thread>

namespace eulerrefine {

namespace {

// Degree 64 is far beyond anything enumerable; the bound keeps the used-set in one word.
constexpr int kMaxSearchDegree = 63;

// Relation required between positions i and i+1 (0-based i).
bool must_rise(std::size_t i, AltKind kind)
{
    const bool even = (i % 2 == 0);
    return kind == AltKind::UpDown ? even : !even;
}

bool chain_holds(std::span<const int> values, AltKind kind)
{
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        const bool rise = values[i] < values[i + 1];
        if (rise != must_rise(i, kind)) {
            return false;
        }
    }
    return true;
}

class AlternatingSearch {
public:
    AlternatingSearch(int n, AltKind kind, const PermutationVisitor& visit)
        : n_(n)
        , kind_(kind)
        , visit_(visit)
    {
        buffer_.reserve(static_cast<std::size_t>(n));
    }

    void run(std::span<const int> prefix)
    {
        for (int v : prefix) {
            buffer_.push_back(v);
            used_ |= bit(v);
        }
        extend();
    }

private:
    static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

    void extend()
    {
        if (static_cast<int>(buffer_.size()) == n_) {
            visit_(buffer_);
            return;
        }
        const std::size_t pos = buffer_.size();
        int lo = 1;
        int hi = n_;
        if (pos > 0) {
            const int prev = buffer_.back();
            if (must_rise(pos - 1, kind_)) {
                lo = prev + 1;
            } else {
                hi = prev - 1;
            }
        }
        for (int v = lo; v <= hi; ++v) {
            if (used_ & bit(v)) {
                continue;
            }
            buffer_.push_back(v);
            used_ |= bit(v);
            extend();
            used_ &= ~bit(v);
            buffer_.pop_back();
        }
    }

    int n_;
    AltKind kind_;
    const PermutationVisitor& visit_;
    std::vector<int> buffer_;
    std::uint64_t used_ = 0;
};

struct Tally {
    std::uint64_t up_down = 0;
    std::uint64_t up_down_minmax = 0;
    std::uint64_t up_down_second_upper = 0;
    std::uint64_t down_up = 0;
    std::uint64_t down_up_minmax = 0;
    std::uint64_t down_up_second_upper = 0;

    Tally& operator+=(const Tally& o)
    {
        up_down += o.up_down;
        up_down_minmax += o.up_down_minmax;
        up_down_second_upper += o.up_down_second_upper;
        down_up += o.down_up;
        down_up_minmax += o.down_up_minmax;
        down_up_second_upper += o.down_up_second_upper;
        return *this;
    }
};

void tally_prefix(int n, AltKind kind, std::span<const int> prefix, Tally& tally)
{
    auto visitor = [&](std::span<const int> values) {
        int pos_one = 0;
        int pos_max = 0;
        int pos_second = 0;
        for (int i = 0; i < n; ++i) {
            const int v = values[static_cast<std::size_t>(i)];
            if (v == 1) pos_one = i + 1;
            if (v == n) pos_max = i + 1;
            if (v == n - 1) pos_second = i + 1;
        }
        const bool minmax = pos_one < pos_max;
        const bool upper = in_upper_row(pos_second, kind);
        if (kind == AltKind::UpDown) {
            ++tally.up_down;
            tally.up_down_minmax += minmax;
            tally.up_down_second_upper += upper;
        } else {
            ++tally.down_up;
            tally.down_up_minmax += minmax;
            tally.down_up_second_upper += upper;
        }
    };
    for_each_alternating_with_prefix(n, kind, prefix, visitor);
}

Integer to_integer(std::uint64_t v)
{
    Integer out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return out;
}

} // namespace

Permutation::Permutation(std::vector<int> values)
    : values_(std::move(values))
{
    const int n = degree();
    if (n < 1) {
        throw std::invalid_argument("Permutation: degree must be at least 1");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("Permutation: values are not a permutation of 1.."
                                        + std::to_string(n));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::parse(std::string_view text)
{
    std::vector<int> values;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument("Permutation::parse: unexpected character in '"
                                            + std::string(text) + "'");
            }
            values.push_back(c - '0');
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t end = std::min(text.find(',', start), text.size());
            const auto token = text.substr(start, end - start);
            int v = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
                throw std::invalid_argument("Permutation::parse: bad entry '" + std::string(token)
                                            + "'");
            }
            values.push_back(v);
            start = end + 1;
        }
    }
    return Permutation(std::move(values));
}

Permutation Permutation::identity(int n)
{
    std::vector<int> values(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(values.begin(), values.end(), 1);
    return Permutation(std::move(values));
}

int Permutation::position_of(int value) const
{
    const auto it = std::find(values_.begin(), values_.end(), value);
    if (it == values_.end()) {
        throw std::out_of_range("Permutation::position_of: value not present");
    }
    return static_cast<int>(it - values_.begin()) + 1;
}

std::string Permutation::to_string() const
{
    std::string out;
    const bool compact = degree() <= 9;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!compact && i > 0) {
            out += ',';
        }
        out += std::to_string(values_[i]);
    }
    return out;
}

std::string_view to_string(AltKind kind) { return kind == AltKind::UpDown ? "up-down" : "down-up"; }

std::string_view to_string(MinMax value) { return value == MinMax::MinMax ? "min-max" : "max-min"; }

std::string_view to_string(SecondMax value)
{
    return value == SecondMax::Upper ? "2nd-max-upper" : "2nd-max-lower";
}

bool is_up_down(std::span<const int> values) { return chain_holds(values, AltKind::UpDown); }
bool is_down_up(std::span<const int> values) { return chain_holds(values, AltKind::DownUp); }

bool is_up_down(const Permutation& sigma) { return is_up_down(sigma.values()); }
bool is_down_up(const Permutation& sigma) { return is_down_up(sigma.values()); }
bool is_alternating(const Permutation& sigma) { return is_up_down(sigma) || is_down_up(sigma); }

Permutation complement(const Permutation& sigma)
{
    const int n = sigma.degree();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int v : sigma.values()) {
        out.push_back(n - v + 1);
    }
    return Permutation(std::move(out));
}

bool in_upper_row(int position, AltKind kind)
{
    const bool even = (position % 2 == 0);
    return kind == AltKind::UpDown ? even : !even;
}

std::vector<int> upper_row(int n, AltKind kind)
{
    if (n < 2) {
        throw std::invalid_argument("upper_row: degree must be at least 2");
    }
    std::vector<int> out;
    for (int p = (kind == AltKind::UpDown ? 2 : 1); p <= n; p += 2) {
        out.push_back(p);
    }
    return out;
}

Classification classify(const Permutation& sigma)
{
    const int n = sigma.degree();
    if (n < 2) {
        throw std::invalid_argument("classify: degree must be at least 2");
    }
    AltKind kind;
    if (is_up_down(sigma)) {
        kind = AltKind::UpDown;
    } else if (is_down_up(sigma)) {
        kind = AltKind::DownUp;
    } else {
        throw std::invalid_argument("classify: " + sigma.to_string() + " is not alternating");
    }
    const auto minmax = sigma.position_of(1) < sigma.position_of(n) ? MinMax::MinMax : MinMax::MaxMin;
    const auto second = in_upper_row(sigma.position_of(n - 1), kind) ? SecondMax::Upper : SecondMax::Lower;
    return {kind, minmax, second};
}

void for_each_alternating_with_prefix(int n, AltKind kind, std::span<const int> prefix,
                                      const PermutationVisitor& visit)
{
    if (n < 1 || n > kMaxSearchDegree) {
        throw std::invalid_argument("for_each_alternating: degree out of range");
    }
    if (static_cast<int>(prefix.size()) > n || !chain_holds(prefix, kind)) {
        return;
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : prefix) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("for_each_alternating: prefix is not injective in 1..n");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    AlternatingSearch search(n, kind, visit);
    search.run(prefix);
}

void for_each_alternating(int n, AltKind kind, const PermutationVisitor& visit)
{
    for_each_alternating_with_prefix(n, kind, {}, visit);
}

std::vector<Permutation> enumerate_alternating(int n, AltKind kind)
{
    std::vector<Permutation> out;
    for_each_alternating(n, kind, [&](std::span<const int> values) {
        out.emplace_back(std::vector<int>(values.begin(), values.end()));
    });
    return out;
}

std::vector<Permutation> enumerate_alternating_by_filter(int n, AltKind kind)
{
    if (n < 1) {
        throw std::invalid_argument("enumerate_alternating_by_filter: degree must be at least 1");
    }
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    std::vector<Permutation> out;
    do {
        if (chain_holds(values, kind)) {
            out.emplace_back(values);
        }
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

std::vector<std::vector<int>> alternating_prefixes(int n, AltKind kind)
{
    if (n < 2) {
        throw std::invalid_argument("alternating_prefixes: degree must be at least 2");
    }
    std::vector<std::vector<int>> out;
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            if (a != b && ((a < b) == must_rise(0, kind))) {
                out.push_back({a, b});
            }
        }
    }
    return out;
}

CountTable count_refinements(int n, unsigned threads)
{
    if (n < 2) {
        throw std::invalid_argument("count_refinements: degree must be at least 2");
    }
    std::vector<std::pair<AltKind, std::vector<int>>> jobs;
    for (AltKind kind : {AltKind::UpDown, AltKind::DownUp}) {
        for (auto& prefix : alternating_prefixes(n, kind)) {
            jobs.emplace_back(kind, std::move(prefix));
        }
    }

    Tally total;
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
    if (workers == 1) {
        for (const auto& [kind, prefix] : jobs) {
            tally_prefix(n, kind, prefix, total);
        }
    } else {
        std::vector<Tally> partial(workers);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    for (std::size_t j = w; j < jobs.size(); j += workers) {
                        tally_prefix(n, jobs[j].first, jobs[j].second, partial[w]);
                    }
                });
            }
        }
        for (const auto& t : partial) {
            total += t;
        }
    }

    CountTable table;
    table.n = static_cast<unsigned>(n);
    table.e = to_integer(total.up_down);
    table.ene = to_integer(total.up_down_minmax);
    table.enw = to_integer(total.up_down - total.up_down_minmax);
    table.eup = to_integer(total.up_down_second_upper);
    table.edown = to_integer(total.up_down - total.up_down_second_upper);
    table.dup = to_integer(total.down_up_second_upper);
    table.ddown = to_integer(total.down_up - total.down_up_second_upper);
    table.ene_down_up = to_integer(total.down_up_minmax);
    table.enw_down_up = to_integer(total.down_up - total.down_up_minmax);
    return table;
}

} // namespace eulerrefine
