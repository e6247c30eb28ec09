#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "wpat/abacus.hpp"

using namespace wpat;

TEST_SUITE_BEGIN("abacus");

TEST_CASE("beta numbers worked examples") {
    CHECK(beta_numbers(Partition({4, 3, 2, 2}), 4).betas() == std::vector<Int>{7, 5, 3, 2});
    CHECK(beta_numbers(Partition({4, 3, 2, 2}), 5).betas() == std::vector<Int>{8, 6, 4, 3, 0});
    CHECK(beta_numbers(Partition{}, 4).betas() == std::vector<Int>{3, 2, 1, 0});
    CHECK_THROWS_AS(beta_numbers(Partition({4, 3, 2, 2}), 3), std::invalid_argument);
}

TEST_CASE("partition_of_beta worked examples") {
    CHECK(partition_of_beta(BetaSequence({7, 5, 3, 2})) == Partition({4, 3, 2, 2}));
    CHECK(partition_of_beta(BetaSequence({3, 2, 1, 0})) == Partition{});
    CHECK(partition_of_beta(BetaSequence({15, 10, 2})) == Partition({13, 9, 2}));
}

TEST_CASE("beta/partition roundtrip") {
    for (const auto& lam : {Partition{}, Partition({1}), Partition({12, 7, 7, 1})}) {
        for (int r = lam.length(); r <= lam.length() + 3; ++r)
            CHECK(partition_of_beta(beta_numbers(lam, r)) == lam);
    }
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        const auto lam = testing::random_partition(rng, 8, 20);
        const int r = lam.length() + static_cast<int>(rng() % 3);
        CHECK(partition_of_beta(beta_numbers(lam, r)) == lam);
    }
}

TEST_CASE("shift_bead") {
    const auto ab = abacus_of(beta_numbers(Partition({4, 3, 2, 2}), 4), 3);
    REQUIRE(ab.positions == std::set<Int>{7, 5, 3, 2});

    const auto up = shift_bead(ab, 7, BeadMove::up);
    CHECK(up.positions == std::set<Int>{4, 5, 3, 2});

    CHECK_THROWS_AS(shift_bead(ab, 2, BeadMove::down), std::invalid_argument); // 5 occupied
    CHECK_THROWS_AS(shift_bead(ab, 2, BeadMove::up), std::invalid_argument);   // row 0
    CHECK_THROWS_AS(shift_bead(ab, 9, BeadMove::up), std::invalid_argument);   // no bead

    AbacusConfig at_zero{3, {0}};
    CHECK_THROWS_AS(shift_bead(at_zero, 0, BeadMove::left), std::invalid_argument);
    CHECK(shift_bead(at_zero, 0, BeadMove::right).positions == std::set<Int>{1});
    // shift right off the last runner wraps to the next row
    AbacusConfig at_edge{3, {2}};
    CHECK(shift_bead(at_edge, 2, BeadMove::right).positions == std::set<Int>{3});
}

TEST_CASE("abacus text rendering") {
    const AbacusConfig ab{3, {0, 4}};
    CHECK(render_text(ab) == "● · ·\n· ● ·\n");
}

TEST_CASE("e-core worked examples") {
    CHECK(e_core(Partition({4, 3, 2, 2}), 3, 4) == Partition({2}));
    CHECK(e_core(Partition({4, 3, 2, 2}), 3, 5) == Partition({2})); // r-independence
    CHECK(e_core(Partition({2}), 3, 3) == Partition({2}));          // a core is its own core
}

TEST_CASE("e-weight worked examples") {
    CHECK(e_weight(Partition({4, 3, 2, 2}), 3, 4) == 3);
    CHECK(e_weight(Partition({2}), 3, 1) == 0);
    // both definitions agree: size formula vs counted bead slides
    const Partition nu({9, 6, 1});
    CHECK(e_weight(nu, 3, 3) == testing::sliding_e_weight(nu, 3, 3));
    CHECK(e_weight(nu, 3, 3) == (nu.size() - e_core(nu, 3, 3).size()) / 3);
}

TEST_CASE("e-quotient worked examples") {
    const auto q = e_quotient(Partition({4, 3, 2, 2}), 3, 4);
    REQUIRE(q.components.size() == 3);
    CHECK(q.components[0] == Partition({1}));
    CHECK(q.components[1] == Partition({2}));
    CHECK(q.components[2] == Partition{});
    CHECK(q.total_size() == 3); // matches the 3-weight

    const auto core_q = e_quotient(Partition({2}), 3, 4);
    for (const auto& c : core_q.components) CHECK(c.empty());
}

TEST_CASE("from_core_and_quotient") {
    EQuotient q{{Partition({1}), Partition({2}), Partition{}}};
    CHECK(from_core_and_quotient(Partition({2}), q, 3, 4) == Partition({4, 3, 2, 2}));

    EQuotient empty{{Partition{}, Partition{}, Partition{}}};
    CHECK(from_core_and_quotient(Partition({2}), empty, 3, 4) == Partition({2}));

    // (1,1,1) is not a 3-core
    CHECK_THROWS_AS(from_core_and_quotient(Partition({1, 1, 1}), empty, 3, 4),
                    std::invalid_argument);
    // runner 0 of the core abacus holds one bead, the component wants two
    EQuotient deep{{Partition({1, 1}), Partition{}, Partition{}}};
    CHECK_THROWS_AS(from_core_and_quotient(Partition({2}), deep, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(from_core_and_quotient(Partition({2}), q, 3, 2), std::invalid_argument);
}

TEST_CASE("core/quotient roundtrip on random partitions") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        const auto lam = testing::random_partition(rng, 6, 14);
        const Int e = 2 + static_cast<Int>(rng() % 6);
        const int r = lam.length() + static_cast<int>(rng() % 3);
        const auto core = e_core(lam, e, r);
        const auto q = e_quotient(lam, e, r);
        CHECK(from_core_and_quotient(core, q, e, r) == lam);
    }
}

TEST_CASE("weight_if_single_bead_runners") {
    CHECK(weight_if_single_bead_runners(BetaSequence({11, 7, 1}), 3) == std::nullopt);
    CHECK(weight_if_single_bead_runners(beta_numbers(Partition{}, 3), 8) == 0);

    std::mt19937 rng(7);
    int accepted = 0;
    while (accepted < 100) {
        const Int e = 4 + static_cast<Int>(rng() % 5);
        // one bead per runner by construction: distinct residues
        std::vector<Int> betas;
        for (Int res = 0; res < e; ++res)
            if (rng() % 2) betas.push_back(static_cast<Int>(rng() % 5) * e + res);
        if (betas.size() < 2) continue;
        std::sort(betas.rbegin(), betas.rend());
        const BetaSequence bs(betas);
        const auto fast = weight_if_single_bead_runners(bs, e);
        REQUIRE(fast.has_value());
        CHECK(*fast == e_weight(partition_of_beta(bs), e, bs.rank()));
        ++accepted;
    }
}

TEST_CASE("weight_lower_bound") {
    for (Int e : {3, 5}) {
        CHECK(weight_lower_bound(BetaSequence({2 * e + 1, 1, 0}), e) == 1);
        CHECK(e_weight(partition_of_beta(BetaSequence({2 * e + 1, 1, 0})), e, 3) >= 1);
    }
    // cores have e-weight 0, so the bound must be <= 0 there; and the bound
    // never exceeds the e-weight on a box sweep
    for (Int e : {3, 4, 5}) {
        for (const auto& lam : {Partition{}, Partition({2}), Partition({3, 1})}) {
            const auto bs = beta_numbers(lam, 4);
            CHECK(weight_lower_bound(bs, e) <= e_weight(lam, e, 4));
        }
    }
}

TEST_CASE("fundamental identities at desk scale") {
    // exhaustive over partitions with <= 4 parts, parts <= 12
    std::vector<Partition> box;
    for (Int a = 0; a <= 12; ++a)
        for (Int b = 0; b <= a; ++b)
            for (Int c = 0; c <= b; ++c)
                for (Int d = 0; d <= c; ++d) box.push_back(Partition({a, b, c, d}));
    for (const Int e : {3, 4, 5}) {
        for (const auto& lam : box) {
            const int r = 4;
            const auto core = e_core(lam, e, r);
            const auto q = e_quotient(lam, e, r);
            Int quot_size = q.total_size();
            CHECK(lam.size() == core.size() + e * quot_size);
            CHECK(e_weight(lam, e, r) == quot_size);
            CHECK(weight_lower_bound(beta_numbers(lam, r), e) <= e_weight(lam, e, r));
            // independence of the rank choice
            for (int r2 = 4; r2 <= 7; ++r2) {
                CHECK(e_core(lam, e, r2) == core);
                CHECK(e_weight(lam, e, r2) == quot_size);
            }
            CHECK(e_core(core, e, r) == core); // idempotent
        }
    }
}

TEST_SUITE_END();
