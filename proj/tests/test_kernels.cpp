#include "doctest.h"

#include "wpat/kernels.hpp"

using namespace wpat;

TEST_SUITE_BEGIN("kernels");

TEST_CASE("parallel oracle matches the serial reference") {
    for (const auto& t : {GenericTriple{3, 5, 2}, GenericTriple{3, 8, 1}, GenericTriple{4, 6, 2}}) {
        CHECK(oracle_weight_set(t) == oracle_weight_set_serial(t));
    }
    CHECK_THROWS_AS(oracle_weight_set({3, 3, 1}), std::invalid_argument);
}

TEST_CASE("widening the search bound finds nothing new") {
    const GenericTriple t{3, 6, 2};
    CHECK(oracle_weight_set_serial(t, 0) == oracle_weight_set_serial(t, t.e));
}

TEST_CASE("parallel stability sweep matches the serial reference") {
    const auto serial = shi_stability_sweep_serial(3, 5, {3, 4});
    const auto parallel = shi_stability_sweep(3, 5, {3, 4});
    CHECK(serial.pass());
    CHECK(parallel.pass());
    CHECK(serial.cases == parallel.cases);
    CHECK(serial.failures == parallel.failures);
}

TEST_CASE("parallel block weight enumeration matches the serial reference") {
    for (const auto& t : {GenericTriple{3, 8, 3}, GenericTriple{4, 6, 2}, GenericTriple{5, 7, 2}})
        CHECK(block_weights_parallel(t) == block_weights_only(t));
    CHECK(block_weights_parallel({3, 2, 0}, true) == block_weights_only({3, 2, 0}, true));
    CHECK_THROWS_AS(block_weights_parallel({3, 3, 1}), std::invalid_argument);
}

TEST_CASE("parallel wall-crossing sweep matches the serial reference") {
    for (int r : {3, 4}) {
        const auto serial = wall_crossing_sweep_serial(r, r + 3, 3);
        const auto parallel = wall_crossing_sweep(r, r + 3, 3);
        CHECK(serial.pass());
        CHECK(serial.crossings == parallel.crossings);
        CHECK(serial.failures == parallel.failures);
    }
}

TEST_CASE("partitions_in_box") {
    const auto box = partitions_in_box(2, 3);
    CHECK(box.size() == 10); // C(3+2, 2)
    std::set<Partition> expected{Partition{},       Partition({1}),    Partition({2}),
                                 Partition({3}),    Partition({1, 1}), Partition({2, 1}),
                                 Partition({2, 2}), Partition({3, 1}), Partition({3, 2}),
                                 Partition({3, 3})};
    CHECK(std::set<Partition>(box.begin(), box.end()) == expected);
}

TEST_SUITE_END();
