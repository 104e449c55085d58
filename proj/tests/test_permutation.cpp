#include <doctest.h>

#include <set>

#include <eulerrefine/permutation.hpp>

#include "oracle.hpp"

using namespace eulerrefine;

namespace {

Permutation P(const char* text) { return Permutation::parse(text); }

std::vector<std::string> strings(const std::vector<Permutation>& perms)
{
    std::vector<std::string> out;
    for (const auto& p : perms) out.push_back(p.to_string());
    return out;
}

} // namespace

TEST_CASE("Permutation construction and text form")
{
    CHECK(P("3572461").degree() == 7);
    CHECK(P("3572461")(2) == 5);
    CHECK(P("3572461").position_of(1) == 7);
    CHECK(P("10,1,12,2,11,3,9,4,8,5,7,6").degree() == 12);
    CHECK(P("10,1,12,2,11,3,9,4,8,5,7,6").to_string() == "10,1,12,2,11,3,9,4,8,5,7,6");
    CHECK(P("2413").to_string() == "2413");
    CHECK_THROWS_AS(P("1224"), std::invalid_argument);
    CHECK_THROWS_AS(P("134"), std::invalid_argument);
    CHECK_THROWS_AS(P(""), std::invalid_argument);
    CHECK_THROWS_AS(P("1,x,3"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("is_up_down")
{
    // 3 < 5 < 7 breaks the chain at position 2.
    CHECK_FALSE(is_up_down(P("3572461")));
    CHECK(is_up_down(P("1324")));
    CHECK_FALSE(is_up_down(P("21")));
    CHECK(is_up_down(P("12")));
    CHECK(is_up_down(P("1")));
}

TEST_CASE("is_down_up")
{
    // The complement of 3572461; neither one is alternating (5 > 3 > 1).
    CHECK_FALSE(is_down_up(P("5316427")));
    CHECK(is_down_up(complement(P("1324"))));
    CHECK_FALSE(is_down_up(P("12")));
    CHECK(is_down_up(P("2143")));
    CHECK(is_down_up(P("1")));
}

TEST_CASE("complement")
{
    CHECK(complement(P("3572461")) == P("5316427"));
    CHECK(complement(P("1")) == P("1"));
    CHECK(complement(complement(P("2413"))) == P("2413"));
}

TEST_CASE("upper_row")
{
    CHECK(upper_row(7, AltKind::UpDown) == std::vector<int>{2, 4, 6});
    CHECK(upper_row(4, AltKind::DownUp) == std::vector<int>{1, 3});
    CHECK_THROWS_AS(upper_row(1, AltKind::UpDown), std::invalid_argument);
}

TEST_CASE("classify")
{
    CHECK(classify(P("3412")) == Classification{AltKind::UpDown, MinMax::MaxMin, SecondMax::Lower});
    CHECK(classify(P("13254")).secondmax == SecondMax::Lower);
    CHECK(classify(P("14253")).secondmax == SecondMax::Upper);
    CHECK(classify(P("14253")).kind == AltKind::UpDown);
    CHECK(classify(P("2143")) == Classification{AltKind::DownUp, MinMax::MinMax, SecondMax::Lower});
    CHECK(classify(P("4231")) == Classification{AltKind::DownUp, MinMax::MaxMin, SecondMax::Upper});
    CHECK_THROWS_AS(classify(P("1234")), std::invalid_argument);
    CHECK_THROWS_AS(classify(P("1")), std::invalid_argument);
}

TEST_CASE("enumerate_alternating")
{
    CHECK(strings(enumerate_alternating(4, AltKind::UpDown)) ==
          std::vector<std::string>{"1324", "1423", "2314", "2413", "3412"});
    CHECK(enumerate_alternating(1, AltKind::UpDown) == std::vector<Permutation>{P("1")});
    CHECK(enumerate_alternating(9, AltKind::UpDown).size() == 7936);
}

TEST_CASE("Table 4 listings at n = 5")
{
    std::vector<std::string> upper, lower;
    for (const auto& p : enumerate_alternating(5, AltKind::UpDown)) {
        (classify(p).secondmax == SecondMax::Upper ? upper : lower).push_back(p.to_string());
    }
    CHECK(upper == std::vector<std::string>{"14253", "14352", "15243", "15342", "24153", "24351", "25143", "25341",
                                            "34152", "34251", "35142", "35241"});
    CHECK(lower == std::vector<std::string>{"13254", "23154", "45132", "45231"});
}

TEST_CASE("pruned generator agrees with the filter generator")
{
    for (int n = 1; n <= 9; ++n) {
        for (AltKind kind : {AltKind::UpDown, AltKind::DownUp}) {
            CAPTURE(n);
            const auto pruned = enumerate_alternating(n, kind);
            CHECK(pruned == enumerate_alternating_by_filter(n, kind));
            CHECK(std::adjacent_find(pruned.begin(), pruned.end(),
                                     [](const auto& a, const auto& b) { return !(a < b); }) == pruned.end());
        }
    }
}

TEST_CASE("prefix partition covers the search space exactly once")
{
    for (int n : {2, 5, 8}) {
        for (AltKind kind : {AltKind::UpDown, AltKind::DownUp}) {
            std::vector<Permutation> joined;
            for (const auto& prefix : alternating_prefixes(n, kind)) {
                for_each_alternating_with_prefix(n, kind, prefix, [&](std::span<const int> v) {
                    CHECK(v[0] == prefix[0]);
                    CHECK(v[1] == prefix[1]);
                    joined.emplace_back(std::vector<int>(v.begin(), v.end()));
                });
            }
            CHECK(joined == enumerate_alternating(n, kind));
        }
    }
    // A prefix that already breaks the chain yields nothing.
    int visits = 0;
    const std::vector<int> bad{2, 1};
    for_each_alternating_with_prefix(4, AltKind::UpDown, bad, [&](std::span<const int>) { ++visits; });
    CHECK(visits == 0);
}

TEST_CASE("complement maps up-down onto down-up")
{
    for (int n = 1; n <= 10; ++n) {
        const auto up = enumerate_alternating(n, AltKind::UpDown);
        const auto down = enumerate_alternating(n, AltKind::DownUp);
        CHECK(up.size() == down.size());
        std::set<Permutation> image;
        for (const auto& p : up) image.insert(complement(p));
        CHECK(image == std::set<Permutation>(down.begin(), down.end()));
    }
}

TEST_CASE("structural observations on every alternating permutation")
{
    for (int n = 2; n <= 10; ++n) {
        for (AltKind kind : {AltKind::UpDown, AltKind::DownUp}) {
            for_each_alternating(n, kind, [&](std::span<const int> v) {
                const Permutation p(std::vector<int>(v.begin(), v.end()));
                CHECK(in_upper_row(p.position_of(n), kind));
                if (kind == AltKind::UpDown && classify(p).secondmax == SecondMax::Lower) {
                    const int second = p.position_of(n - 1);
                    const int top = p.position_of(n);
                    if (n % 2 == 0) {
                        CHECK((second == 1 && top == 2));
                    } else {
                        CHECK(((second == 1 && top == 2) || (second == n && top == n - 1)));
                    }
                }
            });
        }
    }
}

TEST_CASE("count_refinements")
{
    SUBCASE("n = 8")
    {
        const auto t = count_refinements(8);
        CHECK(t.e == 1385);
        CHECK(t.ene == 723);
        CHECK(t.enw == 662);
        CHECK(t.eup == 1324);
        CHECK(t.edown == 61);
    }
    SUBCASE("n = 2")
    {
        const auto t = count_refinements(2);
        CHECK(t.e == 1);
        CHECK(t.eup == 0);
        CHECK(t.edown == 1);
    }
    SUBCASE("n = 4 down-up")
    {
        const auto t = count_refinements(4);
        CHECK(*t.dup == 4);
        CHECK(*t.ddown == 1);
    }
    SUBCASE("threaded counts equal serial counts")
    {
        CHECK(count_refinements(9, 4) == count_refinements(9, 1));
    }
    SUBCASE("degree below 2 is rejected")
    {
        CHECK_THROWS_AS(count_refinements(1), std::invalid_argument);
    }
}

TEST_CASE("count_refinements matches the independent brute-force oracle")
{
    for (int n = 2; n <= 9; ++n) {
        CAPTURE(n);
        const auto expect = oracle::brute_force(n);
        const auto t = count_refinements(n, 2);
        CHECK(t.e == expect.e);
        CHECK(t.ene == expect.ene);
        CHECK(t.enw == expect.enw);
        CHECK(t.eup == expect.eup);
        CHECK(t.edown == expect.edown);
        CHECK(*t.dup == expect.dup);
        CHECK(*t.ddown == expect.ddown);
        CHECK(t.eup + t.edown == t.e);
        CHECK(t.ene + t.enw == t.e);
        CHECK(*t.dup + *t.ddown == t.e);
        CHECK(*t.ene_down_up + *t.enw_down_up == t.e);
    }
}
