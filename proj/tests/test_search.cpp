#include <doctest.h>

#include "harmseq/search.hpp"
#include "harmseq/verify.hpp"

using namespace harmseq;

TEST_CASE("nonexistence certificates") {
    auto z3 = make_cyclic(3);
    auto o = search_r_harmonious(z3);
    CHECK(o.status == SearchStatus::NotExists);
    CHECK(o.nodes_explored < o.budget);

    auto d8 = make_dihedral(8);
    o = search_r_harmonious(d8);
    CHECK(o.status == SearchStatus::NotExists);

    auto klein = make_direct_product(make_cyclic(2), make_cyclic(2));
    CHECK(search_harmonious(klein).status == SearchStatus::NotExists);
    CHECK(search_harmonious(make_cyclic(4)).status == SearchStatus::NotExists);
    CHECK(search_harmonious(make_cyclic(2)).status == SearchStatus::NotExists);
}

TEST_CASE("found witnesses are certified") {
    auto z5 = make_cyclic(5);
    auto o = search_harmonious(z5);
    REQUIRE(o.status == SearchStatus::Found);
    CHECK(is_harmonious(*z5, o.sequence));

    auto klein = make_direct_product(make_cyclic(2), make_cyclic(2));
    o = search_r_harmonious(klein);
    REQUIRE(o.status == SearchStatus::Found);
    CHECK(o.sequence.size() == 3);
    CHECK(is_r_harmonious(*klein, o.sequence));

    auto z2z4 = make_direct_product(make_cyclic(2), make_cyclic(4));
    o = search_r_harmonious(z2z4);
    REQUIRE(o.status == SearchStatus::Found);
    CHECK(is_r_harmonious(*z2z4, o.sequence));
}

TEST_CASE("symmetric search") {
    auto z7 = make_cyclic(7);
    auto o = search_symmetric_harmonious(z7);
    REQUIRE(o.status == SearchStatus::Found);
    CHECK(is_symmetric_harmonious(*z7, o.sequence));

    auto z3z3 = make_direct_product(make_cyclic(3), make_cyclic(3));
    o = search_symmetric_harmonious(z3z3);
    REQUIRE(o.status == SearchStatus::Found);
    CHECK(is_symmetric_harmonious(*z3z3, o.sequence));

    o = search_symmetric_harmonious(make_cyclic(1));
    REQUIRE(o.status == SearchStatus::Found);
    CHECK(o.sequence == std::vector<int>{0});

    CHECK_THROWS_AS(search_symmetric_harmonious(make_cyclic(4)), std::invalid_argument);
}

TEST_CASE("matched search") {
    auto d8 = make_dihedral(8);
    auto o = search_matched(d8);
    CHECK(o.status == SearchStatus::NotExists);

    auto z9 = make_cyclic(9);
    o = search_matched(z9);
    REQUIRE(o.status == SearchStatus::Found);
    CHECK(is_matched_pair(*z9, o.sequence, o.sequence_r));

    auto z5 = make_cyclic(5);
    o = search_matched(z5);
    REQUIRE(o.status == SearchStatus::Found);
    CHECK(is_matched_pair(*z5, o.sequence, o.sequence_r));

    CHECK_THROWS_AS(search_matched(make_cyclic(3)), std::invalid_argument);
}

TEST_CASE("determinism and parallel merge") {
    auto z9 = make_cyclic(9);
    auto a = search_matched(z9);
    auto b = search_matched(z9);
    CHECK(a.sequence == b.sequence);
    CHECK(a.sequence_r == b.sequence_r);
    CHECK(a.nodes_explored == b.nodes_explored);

    auto par = search_matched(z9, kDefaultBudget, 2);
    REQUIRE(par.status == SearchStatus::Found);
    CHECK(par.sequence == a.sequence);  // lowest top branch wins
    CHECK(par.sequence_r == a.sequence_r);

    auto d8 = make_dihedral(8);
    CHECK(search_r_harmonious(d8, kDefaultBudget, 3).status == SearchStatus::NotExists);
}

TEST_CASE("budget handling") {
    auto d12 = make_dihedral(12);
    auto o = search_matched(d12, 50);
    CHECK(o.status == SearchStatus::BudgetExceeded);
    CHECK(o.nodes_explored <= 50);

    o = search_matched(d12);
    REQUIRE(o.status == SearchStatus::Found);
    CHECK(is_matched_pair(*d12, o.sequence, o.sequence_r));
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(search_r_harmonious(make_cyclic(1)), std::invalid_argument);
    CHECK_THROWS_AS(search_harmonious(make_cyclic(129)), std::invalid_argument);
    auto o = search_harmonious(make_cyclic(1));
    CHECK(o.status == SearchStatus::Found);
    CHECK(o.sequence == std::vector<int>{0});
    CHECK(search_r_harmonious(make_cyclic(2)).status == SearchStatus::NotExists);
}
