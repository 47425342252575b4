#include "segcalc/errors.hpp"
#include "segcalc/permutation.hpp"

#include <doctest.h>

#include <set>

using namespace segcalc;

TEST_CASE("involution enumeration matches the recurrence") {
    // I(t) = I(t-1) + (t-1) I(t-2)
    std::vector<std::size_t> expected{1, 1};
    for (std::size_t t = 2; t <= 8; ++t) expected.push_back(expected[t - 1] + (t - 1) * expected[t - 2]);
    for (std::size_t t = 0; t <= 8; ++t) {
        const auto all = involutions(t);
        CHECK(all.size() == expected[t]);
        std::set<Permutation> unique(all.begin(), all.end());
        CHECK(unique.size() == all.size());
        for (const auto& p : all) CHECK(p.is_involution());
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
}

TEST_CASE("cycle and one-line notation") {
    CHECK(Permutation({1, 0}).cycles() == "(1 2)");
    CHECK(Permutation::identity(3).cycles() == "id");
    CHECK(Permutation({0, 2, 1, 3}).cycles() == "(2 3)");
    CHECK(Permutation({1, 2, 0}).cycles() == "(1 2 3)");
    CHECK_FALSE(Permutation({1, 2, 0}).is_involution());
    CHECK(parse_one_line("2,1,3") == Permutation({1, 0, 2}));
    CHECK(parse_one_line("2,1,3").one_line() == "2,1,3");
    CHECK_THROWS_AS(parse_one_line("1,1"), PreconditionError);
    CHECK_THROWS_AS(parse_one_line("1,x"), PreconditionError);
    CHECK_THROWS_AS(parse_one_line("0,1"), PreconditionError);
}
