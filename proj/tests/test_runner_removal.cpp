#include "doctest.h"

#include "wpat/kernels.hpp"
#include "wpat/runner_removal.hpp"

using namespace wpat;

TEST_SUITE_BEGIN("runner_removal");

TEST_CASE("insert_empty_runner worked examples") {
    const Partition lam({2, 1});
    CHECK(insert_empty_runner(lam, {3, 3, 0}) == Partition({4, 2, 1}));
    CHECK(insert_empty_runner(lam, {3, 3, 1}) == Partition({4, 2}));
    CHECK(insert_empty_runner(lam, {3, 3, 2}) == Partition({3, 2}));

    const Partition mu({4, 1, 1});
    CHECK(insert_empty_runner(mu, {3, 3, 0}) == Partition({7, 2, 2}));
    CHECK(insert_empty_runner(mu, {3, 3, 1}) == Partition({6, 2, 2}));
    CHECK(insert_empty_runner(mu, {3, 3, 2}) == Partition({6, 2, 1}));

    const Partition nu({9, 6, 1});
    CHECK(insert_empty_runner(nu, {3, 3, 0}) == Partition({13, 9, 2}));
    CHECK(insert_empty_runner(nu, {3, 3, 1}) == Partition({13, 9, 2}));
    CHECK(insert_empty_runner(nu, {3, 3, 2}) == Partition({13, 8, 1}));

    CHECK_THROWS_AS(insert_empty_runner(lam, {3, 1, 0}), std::invalid_argument); // rank too small
    CHECK_THROWS_AS(insert_empty_runner(lam, {3, 3, 3}), std::invalid_argument); // k out of range
}

TEST_CASE("shi stability worked example") {
    // (2,1) at level 3 and its k=1 insertion at level 4 share the alcove
    const auto report = verify_shi_stability(Partition({2, 1}), {3, 3, 1});
    CHECK(report.pass);
    CHECK(shi_vector(omega(Partition({2, 1}), 3), 3).entries() == std::vector<Int>{0, 1, 0});
    CHECK(shi_vector(omega(Partition({4, 2}), 3), 4).entries() == std::vector<Int>{0, 1, 0});
}

TEST_CASE("the empty partition stays in the fundamental alcove") {
    for (Int e = 2; e <= 5; ++e) {
        for (Int k = 0; k < e; ++k) {
            const RunnerInsertion ins{e, 3, k};
            CHECK(verify_shi_stability(Partition{}, ins).pass);
            const auto before = shi_vector(omega(Partition{}, 3), e);
            for (Int entry : before.entries()) CHECK(entry == 0);
            const auto plus = insert_empty_runner(Partition{}, ins);
            const auto after = shi_vector(omega(plus, 3), e + 1);
            for (Int entry : after.entries()) CHECK(entry == 0);
        }
    }
}

TEST_CASE("stability sweep at a small box") {
    const auto sweep = shi_stability_sweep_serial(3, 6, {3, 4});
    CHECK(sweep.pass());
    CHECK(sweep.cases == partitions_in_box(3, 6).size() * (3 + 4));
}

TEST_CASE("insertion preserves the part-count bound and the e-weight") {
    for (const auto& lam : partitions_in_box(3, 8)) {
        for (Int e : {3, 4}) {
            for (Int k = 0; k < e; ++k) {
                const auto plus = insert_empty_runner(lam, {e, 3, k});
                CHECK(plus.length() <= 3);
                CHECK(e_weight(plus, e + 1, 3) == e_weight(lam, e, 3));
            }
        }
    }
}

TEST_CASE("insertion beyond all residues is a pure dilation") {
    // with k above every residue the delta never fires: beta = a*e + b maps
    // to a*(e+1) + b; stability still holds
    const Partition lam({2, 1}); // betas at r=2: (3, 1), residues 3 and 1 below k
    const RunnerInsertion ins{5, 2, 4};
    const auto bs = beta_numbers(lam, ins.r);
    const auto plus_bs = beta_numbers(insert_empty_runner(lam, ins), ins.r);
    for (int i = 1; i <= ins.r; ++i) {
        const Int a = bs.beta(i) / ins.e;
        const Int b = bs.beta(i) % ins.e;
        CHECK(plus_bs.beta(i) == a * (ins.e + 1) + b);
    }
    CHECK(verify_shi_stability(lam, ins).pass);
}

TEST_CASE("theorem pair on a same-block pair built from core and quotient") {
    // core (1) at e = 3, rank 3: runners 0 and 1 carry 2 and 1 beads
    const Partition core({1});
    const Composition bounds({2, 1});
    for (Int w = 0; w <= 3; ++w) {
        const auto quotients = enumerate_multipartitions(bounds, w);
        for (const auto& qa : quotients) {
            for (const auto& qb : quotients) {
                const EQuotient ea{{qa.component(1), qa.component(2), Partition{}}};
                const EQuotient eb{{qb.component(1), qb.component(2), Partition{}}};
                const auto lam = from_core_and_quotient(core, ea, 3, 3);
                const auto mu = from_core_and_quotient(core, eb, 3, 3);
                if (!is_e_regular(mu, 3)) continue;
                for (Int k = 0; k < 3; ++k) {
                    const auto report = verify_theorem_pair(lam, mu, {3, 3, k});
                    CHECK(report.pass);
                }
            }
        }
    }
}

TEST_CASE("theorem pair surfaces hypothesis failures") {
    // distinct 3-cores: no stability is asserted
    const auto report = verify_theorem_pair(Partition({1}), Partition({2}), {3, 3, 0});
    CHECK_FALSE(report.pass);
    REQUIRE(!report.witnesses.empty());
    CHECK(report.witnesses.front().find("hypothesis") != std::string::npos);

    // e-irregular second partition
    const auto irregular =
        verify_theorem_pair(Partition({2, 1, 1, 1, 1}), Partition({1, 1, 1, 1, 1, 1}), {3, 6, 0});
    CHECK_FALSE(irregular.pass);
}

TEST_CASE("degenerate same-partition pair passes") {
    for (Int k = 0; k < 3; ++k)
        CHECK(verify_theorem_pair(Partition({2, 1}), Partition({2, 1}), {3, 3, k}).pass);
}

TEST_SUITE_END();
