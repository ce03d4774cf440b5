#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "punct/errors.hpp"
#include "punct/gap_sequence.hpp"
#include "punct/pairing.hpp"

using namespace punct;

TEST_CASE("pairing round trips and stays within bounds") {
    CHECK(pair_code(0, 0) == 0);
    CHECK(pair_code(1, 0) == 1);
    CHECK(pair_code(0, 1) == 2);
    CHECK(pair_code(1, 1) == 4);
    CHECK(unpair_code(5) == std::pair<Nat, Nat>{0, 2});

    for (Nat z = 0; z < 2000; ++z) {
        auto [x, y] = unpair_code(z);
        CHECK(pair_code(x, y) == z);
        if (z >= 2) {
            CHECK(x < z);
            CHECK(y < z);
        }
    }
    // the lone sub-2 exception: <1,0> = 1 has a component equal to itself
    CHECK(unpair_code(1) == std::pair<Nat, Nat>{1, 0});

    for (Nat x = 0; x < 40; ++x)
        for (Nat y = 0; y < 40; ++y) {
            auto [a, b] = unpair_code(pair_code(x, y));
            CHECK(a == x);
            CHECK(b == y);
        }
}

TEST_CASE("tower provider has the frozen prefix") {
    auto t = GapSequence::tower();
    CHECK(t.name() == "tower");
    CHECK(t.feasible_max() == 4);
    CHECK(t.value(0) == 2);
    CHECK(t.value(1) == 4);
    CHECK(t.value(2) == 16);
    CHECK(t.value(3) == 65536);
    CHECK(bit_width(t.value(4)) == 65537);
    CHECK_THROWS_AS(t.value(5), InfeasibleIndex);

    CHECK(t.inverse(2) == 0);
    CHECK(t.inverse(4) == 1);
    CHECK(t.inverse(16) == 2);
    CHECK(t.inverse(65536) == 3);
    CHECK(t.inverse(17) == 0); // absent values map to 0 by convention

    CHECK(t.contains(65536));
    CHECK(!t.contains(65537));
    CHECK(!t.contains(0));
}

TEST_CASE("ackermann diagonal provider has the frozen prefix") {
    auto a = GapSequence::ackermann_diagonal();
    CHECK(a.feasible_max() == 3);
    CHECK(a.value(0) == 1);
    CHECK(a.value(1) == 3);
    CHECK(a.value(2) == 7);
    CHECK(a.value(3) == 61);
    CHECK_THROWS_AS(a.value(4), InfeasibleIndex);
    CHECK(a.inverse(61) == 3);
    CHECK(!a.contains(2));
}

TEST_CASE("bounded comparisons stay total past the cap") {
    auto t = GapSequence::tower();
    CHECK(t.value_exceeds(2, 15));
    CHECK(!t.value_exceeds(2, 16));
    // index 5 is infeasible but its value dwarfs any input we can hold
    CHECK(t.value_exceeds(5, t.value(4)));
    CHECK(t.value_exceeds(Nat("999999999999"), 0));
    CHECK(t.value_equals(3, 65536));
    CHECK(!t.value_equals(3, 65537));
    CHECK(!t.value_equals(5, 65536));
}

TEST_CASE("complement enumeration matches a direct sieve") {
    for (auto prov : {GapSequence::tower(), GapSequence::ackermann_diagonal()}) {
        std::vector<Nat> sieve;
        for (Nat m = 0; m <= 1000; ++m)
            if (!prov.contains(m)) sieve.push_back(m);
        for (std::size_t i = 0; i < sieve.size(); ++i)
            CHECK(complement_enum(prov, i) == sieve[i]);
    }
}

TEST_CASE("complement enumeration frozen values and growth bound") {
    auto t = GapSequence::tower();
    CHECK(complement_enum(t, 0) == 0);
    CHECK(complement_enum(t, 2) == 3);
    CHECK(complement_enum(t, 14) == 17);
    CHECK(complement_enum(t, 20) == 23);

    auto a = GapSequence::ackermann_diagonal();
    CHECK(complement_enum(a, 1) == 2);
    CHECK(complement_enum(a, 5) == 8);

    Nat prev = complement_enum(t, 0);
    for (Nat x = 1; x <= 2000; ++x) {
        Nat cur = complement_enum(t, x);
        CHECK(cur > prev); // strictly increasing
        if (x >= 2) CHECK(cur <= 3 * x);
        prev = cur;
    }
}
