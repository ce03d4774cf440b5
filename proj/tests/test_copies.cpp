#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "punct/copy.hpp"
#include "punct/errors.hpp"

#include <set>

using namespace punct;

namespace {

// Swaps adjacent pairs: enumeration 1, 0, 3, 2, 5, 4, ...
PunctualCopy pair_swap_copy() {
    return PunctualCopy{"pair-swap", 1,
                        [](const Nat& x) { return x % 2 == 1 ? Nat(x - 1) : Nat(x + 3); }};
}

} // namespace

TEST_CASE("identity copy oracles") {
    auto id = make_identity_copy();
    CHECK(element_at(id, 7) == 7);
    CHECK(number_of(id, 5, 10) == 5);
    CHECK(image_oracle(id, [](const Nat& x) { return 2 * x; }, 5, 1000) == 10);
    CHECK(inverse_bound(id, 5) == 5);
}

TEST_CASE("budgets fail loudly") {
    auto id = make_identity_copy(100);
    CHECK_THROWS_AS(element_at(id, 101), BudgetExceeded);
    auto sw = pair_swap_copy();
    CHECK(number_of(sw, 9, 10) == 8);
    CHECK_THROWS_AS(number_of(sw, 9, 3), NotFoundWithinBudget);
}

TEST_CASE("pair-swap copy walks") {
    auto sw = pair_swap_copy();
    CHECK(element_at(sw, 0) == 1);
    CHECK(element_at(sw, 1) == 0);
    CHECK(element_at(sw, 5) == 4);
    // f^A of the standard successor maps c(p) to c(p+1)
    CHECK(image_oracle(sw, [](const Nat& x) { return x + 1; }, 1, 100) == 0);
    CHECK(image_oracle(sw, [](const Nat& x) { return x + 1; }, 0, 100) == 3);
}

TEST_CASE("round trip, distinctness, origin not an image") {
    for (auto copy : {make_identity_copy(), pair_swap_copy()}) {
        std::set<Nat> seen;
        Nat cur = copy.origin;
        for (Nat p = 0; p < 200; ++p) {
            CHECK(number_of(copy, cur, 200) == p);
            CHECK(seen.insert(cur).second);
            Nat next = copy.successor(cur);
            CHECK(next != copy.origin);
            cur = next;
        }
    }
}

TEST_CASE("inverse_bound satisfies the reach contract") {
    for (auto copy : {make_identity_copy(), pair_swap_copy()}) {
        for (Nat x = 0; x < 200; ++x) {
            Nat t = inverse_bound(copy, x);
            CHECK(t <= x);
            CHECK(element_at(copy, t) >= x);
        }
    }
}
