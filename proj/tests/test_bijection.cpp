#include <doctest.h>

#include <set>

#include <eulerrefine/bijection.hpp>
#include <eulerrefine/sequences.hpp>

using namespace eulerrefine;

namespace {

Permutation P(const char* text) { return Permutation::parse(text); }

std::vector<Permutation> filter_up_down(int n, bool (*pred)(const Permutation&))
{
    std::vector<Permutation> out;
    for (auto& p : enumerate_alternating(n, AltKind::UpDown)) {
        if (pred(p)) out.push_back(std::move(p));
    }
    return out;
}

} // namespace

TEST_CASE("standardize and embed_pattern are inverse")
{
    const std::vector<int> values{7, 2, 5};
    CHECK(standardize(values) == std::vector<int>{3, 1, 2});
    const std::vector<int> sorted{2, 5, 7};
    CHECK(embed_pattern(standardize(values), sorted) == values);
    CHECK(standardize(std::vector<int>{}).empty());
}

TEST_CASE("swap_top_two")
{
    CHECK(swap_top_two(P("1324")) == P("1423"));
    CHECK_THROWS_AS(swap_top_two(P("3412")), DomainError);
    CHECK_THROWS_AS(swap_top_two(P("2143")), DomainError);

    const auto smu4 = filter_up_down(4, is_second_max_upper_up_down);
    CHECK(smu4 == std::vector<Permutation>{P("1324"), P("1423"), P("2314"), P("2413")});
    std::set<std::set<Permutation>> orbits;
    for (const auto& p : smu4) {
        CHECK(swap_top_two(p) != p);
        orbits.insert({p, swap_top_two(p)});
    }
    CHECK(orbits.size() == 2);
}

TEST_CASE("swap_top_two is a fixed-point-free involution up to n = 10")
{
    for (int n = 4; n <= 10; ++n) {
        const auto smu = filter_up_down(n, is_second_max_upper_up_down);
        const std::set<Permutation> set(smu.begin(), smu.end());
        for (const auto& p : smu) {
            const auto q = swap_top_two(p);
            CHECK(q != p);
            CHECK(set.count(q) == 1);
            CHECK(swap_top_two(q) == p);
        }
        CHECK(smu.size() % 2 == 0);
    }
}

TEST_CASE("decompose_smu")
{
    SUBCASE("14253")
    {
        const auto d = decompose_smu(P("14253"));
        CHECK(d.sizes() == std::array<std::size_t, 3>{1, 1, 1});
        CHECK(d.blocks[0].values == std::vector<int>{1});
        CHECK(d.blocks[1].values == std::vector<int>{2});
        CHECK(d.blocks[2].values == std::vector<int>{3});
        CHECK(d.landmarks == std::array<int, 2>{2, 4});
    }
    SUBCASE("2314 has an empty third block")
    {
        const auto d = decompose_smu(P("2314"));
        CHECK(d.sizes() == std::array<std::size_t, 3>{1, 1, 0});
        CHECK(d.blocks[0].values == std::vector<int>{2});
        CHECK(d.blocks[1].values == std::vector<int>{1});
        CHECK(d.blocks[2].values.empty());
    }
    SUBCASE("wrong orientation")
    {
        CHECK_THROWS_AS(decompose_smu(P("1423")), DomainError);
        CHECK_NOTHROW(decompose_smu(swap_top_two(P("1423"))));
    }
    SUBCASE("outside the domain")
    {
        CHECK_THROWS_AS(decompose_smu(P("3412")), DomainError);
    }
}

TEST_CASE("compose_smu rejects malformed decompositions")
{
    auto d = decompose_smu(P("14253"));
    CHECK(compose_smu(d, 5) == P("14253"));
    CHECK_THROWS_AS(compose_smu(d, 6), DomainError);
    auto overlap = d;
    overlap.blocks[1].values = {1};
    CHECK_THROWS_AS(compose_smu(overlap, 5), DomainError);
    auto even_first = decompose_smu(P("2314"));
    std::swap(even_first.blocks[0], even_first.blocks[2]);
    CHECK_THROWS_AS(compose_smu(even_first, 4), DomainError);
    auto not_alternating = decompose_smu(P("1627354"));
    not_alternating.blocks[2].pattern = {3, 2, 1};
    CHECK_THROWS_AS(compose_smu(not_alternating, 7), DomainError);
    auto wrong_kind = d;
    wrong_kind.kind = DecompositionKind::MaxMin;
    CHECK_THROWS_AS(compose_smu(wrong_kind, 5), DomainError);
}

TEST_CASE("decompose_smu / compose_smu round trip up to n = 9")
{
    for (int n = 4; n <= 9; ++n) {
        std::size_t left = 0;
        for (const auto& p : filter_up_down(n, is_second_max_upper_up_down)) {
            if (p.position_of(n - 1) > p.position_of(n)) continue;
            ++left;
            const auto d = decompose_smu(p);
            CHECK(d.sizes()[0] % 2 == 1);
            CHECK(d.sizes()[1] % 2 == 1);
            const auto back = compose_smu(d, n);
            CHECK(back == p);
            CHECK(classify(back).secondmax == SecondMax::Upper);
        }
        CHECK(2 * left == e_up_formula(static_cast<unsigned>(n)));
    }
    // 56 / 2 = 28 left-oriented permutations at n = 6.
    std::size_t left6 = 0;
    for (const auto& p : filter_up_down(6, is_second_max_upper_up_down)) {
        left6 += p.position_of(5) < p.position_of(6);
    }
    CHECK(left6 == 28);
}

TEST_CASE("decompose_maxmin")
{
    SUBCASE("3412")
    {
        const auto d = decompose_maxmin(P("3412"));
        CHECK(d.sizes() == std::array<std::size_t, 3>{1, 0, 1});
        CHECK(d.blocks[0].values == std::vector<int>{3});
        CHECK(d.blocks[1].values.empty());
        CHECK(d.blocks[2].values == std::vector<int>{2});
        CHECK(compose_maxmin(d, 4) == P("3412"));
    }
    SUBCASE("min-max input is rejected")
    {
        CHECK_THROWS_AS(decompose_maxmin(P("1324")), DomainError);
        CHECK_THROWS_AS(decompose_maxmin(P("14253")), DomainError);
    }
    SUBCASE("no max-min permutation of degree 2")
    {
        CHECK(filter_up_down(2, is_max_min_up_down_even).empty());
    }
    SUBCASE("round trip on all 662 max-min permutations of degree 8")
    {
        const auto mm = filter_up_down(8, is_max_min_up_down_even);
        CHECK(mm.size() == 662);
        for (const auto& p : mm) {
            const auto d = decompose_maxmin(p);
            CHECK(is_down_up(d.blocks[2].pattern));
            CHECK(compose_maxmin(d, 8) == p);
        }
    }
}

TEST_CASE("maxmin_to_smu")
{
    SUBCASE("degree 4")
    {
        const auto a = maxmin_to_smu(P("3412"), false);
        const auto b = maxmin_to_smu(P("3412"), true);
        CHECK(a == P("2314"));
        CHECK(b == P("2413"));
        CHECK(decompose_smu(a).sizes() == std::array<std::size_t, 3>{1, 1, 0});
        CHECK(smu_to_maxmin(b) == std::pair{P("3412"), true});
    }
    SUBCASE("domain errors")
    {
        CHECK_THROWS_AS(maxmin_to_smu(P("1324"), false), DomainError);
        CHECK_THROWS_AS(maxmin_to_smu(P("24153"), false), DomainError);
        CHECK_THROWS_AS(smu_to_maxmin(P("14253")), DomainError);
    }
    SUBCASE("bijection onto 2nd-max-upper at degrees 4, 6, 8")
    {
        for (int n : {4, 6, 8}) {
            const auto mm = filter_up_down(n, is_max_min_up_down_even);
            const auto smu = filter_up_down(n, is_second_max_upper_up_down);
            std::set<Permutation> image;
            for (const auto& p : mm) {
                for (bool side : {false, true}) {
                    const auto t = maxmin_to_smu(p, side);
                    CHECK(is_second_max_upper_up_down(t));
                    CHECK(smu_to_maxmin(t) == std::pair{p, side});
                    image.insert(t);
                }
            }
            CHECK(image.size() == 2 * mm.size());
            CHECK(image == std::set<Permutation>(smu.begin(), smu.end()));
        }
    }
}
