#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "punct/binary_lift.hpp"
#include "punct/copy_gap.hpp"
#include "punct/errors.hpp"

#include <map>
#include <memory>
#include <vector>

using namespace punct;

TEST_CASE("identity lift degenerates to ordinary arithmetic") {
    LiftContext lift(identity_lift_base());
    CHECK(lift.element(37, 100) == 37);
    CHECK(lift.add(5, 1) == 7);
    CHECK(lift.add(3, 0) == 4);
    CHECK(lift.succ(9) == 10);
    Nat x = 0;
    for (int i = 0; i < 8; ++i) x = lift.succ(x);
    CHECK(x == 8);
    CHECK(lift.plus(5, 3) == 8);
    CHECK(lift.prod(5, 1) == 10);
    CHECK(lift.prod(1, 3) == 8);
    CHECK(lift.prod(77, 0) == 77);
    CHECK(lift.times(5, 3) == 15);
    CHECK(lift.times(123, 0) == 0);
    CHECK(lift.pow2_image(3) == 8);
    CHECK(lift.pow2_image(0) == 1);
    CHECK(lift.pow2_image(10) == 1024);

    for (Nat a = 0; a < 64; ++a)
        for (Nat b = 0; b < 64; ++b) {
            CHECK(lift.plus(a, b) == a + b);
            CHECK(lift.times(a, b) == a * b);
        }
}

TEST_CASE("carry scan stays within popcount plus one probes") {
    auto calls = std::make_shared<Nat>(0);
    PunctualCopy counted{"counted-identity", 0, [calls](const Nat& x) {
                             ++*calls;
                             return x + 1;
                         }};
    LiftContext lift(lift_base_of(counted));
    for (Nat x = 0; x < 512; ++x) {
        *calls = 0;
        lift.add(x, 0);
        CHECK(*calls <= popcount(x) + 1);
    }
}

TEST_CASE("lift over the gap copy") {
    auto base = make_gap_copy(make_gap_context(GapSequence::tower()));
    LiftContext lift(lift_base_of(base));
    CHECK(lift.element(0, 100) == 0);
    CHECK(lift.element(1, 100) == 4);                 // bit at c(0) = 2
    CHECK(lift.element(3, 100) == pow2(23) + 4);      // bits at c(1) = 23 and c(0) = 2
    CHECK(lift.succ(0) == 4);
    CHECK(lift.add(lift.element(1, 100), 2) == lift.element(2, 100));

    CHECK_THROWS_AS(lift.prod(4, 2), MissingBaseAddition);
    CHECK_THROWS_AS(lift.pow2_image(4), MissingBaseAddition);

    // successor and addition against the walking oracle
    auto lifted = lift.copy();
    std::vector<Nat> el;
    Nat cur = 0;
    for (int p = 0; p < 48; ++p) {
        el.push_back(cur);
        cur = lift.succ(cur);
    }
    for (std::size_t p = 0; p + 1 < el.size(); ++p) CHECK(lift.succ(el[p]) == el[p + 1]);
    for (std::size_t a = 0; a < 24; ++a)
        for (std::size_t b = 0; a + b < 48 && b < 24; ++b)
            CHECK(lift.plus(el[a], el[b]) == el[a + b]);
    CHECK(number_of(lifted, el[10], 20) == 10);
}

TEST_CASE("double lift over identity") {
    LiftContext inner(identity_lift_base());
    LiftContext outer(inner.as_base());
    CHECK(outer.times(6, 7) == 42);
    CHECK(outer.plus(19, 23) == 42);
    CHECK(outer.pow2_image(7) == 128);
    for (Nat a = 0; a < 32; ++a)
        for (Nat b = 0; b < 32; ++b) CHECK(outer.times(a, b) == a * b);
}

TEST_CASE("double lift over the gap copy multiplies by position") {
    auto base = make_gap_copy(make_gap_context(GapSequence::tower()));
    LiftContext inner(lift_base_of(base));
    LiftContext outer(inner.as_base());

    // walk the outer copy once, keeping the elements at positions we need
    std::map<Nat, Nat> el;
    Nat cur = 0;
    for (Nat p = 0; p < 50; ++p) {
        if (p < 8 || p % 2 == 0 || p % 3 == 0 || p % 5 == 0 || p % 7 == 0) el[p] = cur;
        cur = outer.succ(cur);
    }
    for (Nat a = 0; a < 8; ++a)
        for (Nat b = 0; b < 8; ++b)
            if (a * b < 50) CHECK(outer.times(el.at(a), el.at(b)) == el.at(a * b));

    // no 2^x image two layers up either: the inner layer cannot compute one
    CHECK_THROWS_AS(outer.pow2_image(4), MissingBasePow);
}
