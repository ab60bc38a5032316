#include <doctest.h>

#include <numeric>

#include "harmseq/construct.hpp"
#include "harmseq/errors.hpp"
#include "harmseq/intseq.hpp"

using namespace harmseq;

TEST_CASE("symmetric harmonious construction") {
    auto z9 = make_cyclic(9);
    auto seq = symmetric_harmonious(z9);
    std::vector<int> nat(9);
    std::iota(nat.begin(), nat.end(), 0);
    CHECK(seq.items == nat);

    CHECK(symmetric_harmonious(make_cyclic(1)).items == std::vector<int>{0});

    auto z3z3 = make_direct_product(make_cyclic(3), make_cyclic(3));
    auto s2 = symmetric_harmonious(z3z3);
    CHECK(is_symmetric_harmonious(*z3z3, s2.items));

    CHECK_THROWS_AS(symmetric_harmonious(make_cyclic(4)), std::invalid_argument);
}

TEST_CASE("mext on cyclic groups") {
    auto z9 = make_cyclic(9);
    auto pair = mext(z9, trivial_subgroup(z9));
    CHECK(pair.h_seq == std::vector<int>{1, 8, 6, 4, 2, 0, 7, 5, 3});
    CHECK(pair.r_seq == std::vector<int>{1, 5, 2, 6, 8, 4, 7, 3});

    auto z5 = make_cyclic(5);
    pair = mext(z5, trivial_subgroup(z5));
    CHECK(pair.h_seq == std::vector<int>{2, 3, 4, 0, 1});
    CHECK(pair.r_seq == std::vector<int>{2, 4, 3, 1});
}

TEST_CASE("mext on a nontrivial extension") {
    auto g55 = make_semidirect_cyclic({5}, 11, {3});
    std::vector<int> z11(11);
    std::iota(z11.begin(), z11.end(), 0);
    Subgroup h{g55, z11};
    auto pair = mext(g55, h);
    CHECK(pair.h_seq.size() == 55);
    CHECK(pair.r_seq.size() == 54);
    CHECK(is_matched_pair(*g55, pair.h_seq, pair.r_seq));

    // every grid entry in row p >= 1, column r lies in the coset H*x^{k_r}
    auto ints = intseq::build_matched(5);
    int x = pair.h_seq[4];  // first row holds x^{k_r} and k_4 = 1
    for (int p = 1; p < 11; ++p) {
        for (int r = 0; r < 5; ++r) {
            int entry = pair.h_seq[p * 5 + r];
            int coset_rep = g55->power(x, ints.k[r]);
            CHECK(h.contains(g55->mul(entry, g55->inv(coset_rep))));
        }
    }
}

TEST_CASE("mext argument validation") {
    auto z9 = make_cyclic(9);
    CHECK_THROWS_AS(mext(z9, generated_subgroup(z9, {3})), UnsupportedError);   // n = 3
    CHECK_THROWS_AS(mext(z9, full_subgroup(z9)), UnsupportedError);             // n = 1
    auto z45 = make_cyclic(45);
    CHECK_THROWS_AS(mext(z45, generated_subgroup(z45, {15})), UnsupportedError);  // n = 15
    auto g21 = make_semidirect_cyclic({3}, 7, {2});
    Subgroup y_sub = generated_subgroup(g21, {*g21->index_of("y")});
    CHECK_THROWS_AS(mext(g21, y_sub), std::invalid_argument);  // non-normal H
    auto d12 = make_dihedral(12);
    Subgroup even_h = generated_subgroup(d12, {*d12->index_of("r^3")});
    CHECK_THROWS_AS(mext(d12, even_h), std::invalid_argument);  // |H| even
}

TEST_CASE("brh with a trivial kernel is the identity transformation") {
    auto z5 = make_cyclic(5);
    auto k_pair = mext(z5, trivial_subgroup(z5));
    auto out = brh(z5, full_subgroup(z5), trivial_subgroup(z5), k_pair);
    CHECK(out.h_seq == k_pair.h_seq);
    CHECK(out.r_seq == k_pair.r_seq);
}

TEST_CASE("brh argument validation") {
    auto z15 = make_cyclic(15);
    Subgroup k = generated_subgroup(z15, {5});  // order 3
    Subgroup h = generated_subgroup(z15, {3});  // order 5
    auto k_pair_bad = MatchedGroupPair{z15, {0, 5, 10}, {5, 10}};
    CHECK_THROWS_AS(brh(z15, k, h, k_pair_bad), std::invalid_argument);  // not matched in K
    Subgroup overlap = generated_subgroup(z15, {3});
    CHECK_THROWS_AS(brh(z15, overlap, h, k_pair_bad), std::invalid_argument);  // K meets H
}

TEST_CASE("matched_pair cascade") {
    auto z9 = make_cyclic(9);
    auto r = matched_pair(z9);
    REQUIRE(r.status == ConstructStatus::Found);
    CHECK(r.report.strategy == "main1");
    CHECK(r.report.witnesses.at("m") == "9");
    CHECK(r.pair->h_seq == std::vector<int>{1, 8, 6, 4, 2, 0, 7, 5, 3});

    auto g55 = make_semidirect_cyclic({5}, 11, {3});
    r = matched_pair(g55);
    REQUIRE(r.status == ConstructStatus::Found);
    CHECK(r.report.strategy == "main1");
    CHECK(r.report.witnesses.at("m") == "5");
    CHECK(r.report.witnesses.at("H_order") == "11");

    // the two built-in dihedral pairs fail certification, the search taking over
    auto d12 = make_dihedral(12);
    r = matched_pair(d12);
    REQUIRE(r.status == ConstructStatus::Found);
    CHECK(r.report.strategy == "search");
    bool golden_attempt = false;
    for (const auto& a : r.report.attempts)
        golden_attempt = golden_attempt || a.find("golden") != std::string::npos;
    CHECK(golden_attempt);
    CHECK(is_matched_pair(*d12, r.pair->h_seq, r.pair->r_seq));

    auto d60 = make_direct_product(make_dihedral(12), make_cyclic(5));
    r = matched_pair(d60);
    REQUIRE(r.status == ConstructStatus::Found);
    CHECK(r.report.strategy == "main2");
    CHECK(r.pair->h_seq.size() == 60);

    auto g81 = make_semidirect_cyclic({3, 3}, 9, {4, 1});
    r = matched_pair(g81);
    REQUIRE(r.status == ConstructStatus::Found);
    CHECK(r.report.strategy == "main2");
    CHECK(r.pair->h_seq.size() == 81);

    CHECK(matched_pair(make_cyclic(3)).status == ConstructStatus::NotConstructed);
    CHECK(matched_pair(make_cyclic(4)).status == ConstructStatus::Impossible);
    CHECK(matched_pair(make_dihedral(8)).status == ConstructStatus::Impossible);
    auto klein = make_direct_product(make_cyclic(2), make_cyclic(2));
    CHECK(matched_pair(klein).status == ConstructStatus::Impossible);
}

TEST_CASE("r_harmonious driver") {
    auto klein = make_direct_product(make_cyclic(2), make_cyclic(2));
    auto r = r_harmonious(klein);
    REQUIRE(r.status == ConstructStatus::Found);
    CHECK(r.seq->items.size() == 3);
    CHECK(is_r_harmonious(*klein, r.seq->items));

    CHECK(r_harmonious(make_cyclic(3)).status == ConstructStatus::Impossible);
    CHECK(r_harmonious(make_dihedral(8)).status == ConstructStatus::Impossible);
    CHECK(r_harmonious(make_dihedral(6)).status == ConstructStatus::Impossible);

    // with a tiny budget the matched search gives up and the built-in order-21
    // sequence is used
    auto g21 = make_semidirect_cyclic({3}, 7, {2});
    auto small = r_harmonious(g21, 2000);
    REQUIRE(small.status == ConstructStatus::Found);
    CHECK(small.report.strategy == "golden");
    CHECK(is_r_harmonious(*g21, small.seq->items));
}

TEST_CASE("construction and oracle agree on small groups") {
    std::vector<GroupPtr> groups{
        make_cyclic(5),  make_cyclic(7),  make_cyclic(9),  make_cyclic(11),
        make_cyclic(13), make_cyclic(15), make_dihedral(12),
        make_direct_product(make_cyclic(3), make_cyclic(3)),
        make_dihedral(16),
    };
    for (const auto& g : groups) {
        CAPTURE(g->order());
        auto r = matched_pair(g);
        if (r.status != ConstructStatus::Found) continue;
        auto o = search_matched(g, 5 * kDefaultBudget);
        CHECK(o.status == SearchStatus::Found);
    }
}

TEST_CASE("cyclic sylow 2 implies r-harmonious nonexistence (order <= 12)") {
    std::vector<GroupPtr> groups{make_cyclic(2),  make_cyclic(4),  make_cyclic(6),
                                 make_cyclic(8),  make_cyclic(10), make_cyclic(12),
                                 make_dihedral(6), make_dihedral(10)};
    for (const auto& g : groups) {
        CAPTURE(g->order());
        REQUIRE(hall_paige_check(g) == Sylow2Class::Cyclic2Sylow);
        CHECK(search_r_harmonious(g).status == SearchStatus::NotExists);
    }
}
