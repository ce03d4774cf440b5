#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "punct/copy_gap.hpp"
#include "punct/pairing.hpp"

#include <set>
#include <vector>

using namespace punct;

namespace {

std::shared_ptr<const GapCopyContext> tower_ctx() {
    static auto ctx = make_gap_context(GapSequence::tower());
    return ctx;
}

} // namespace

TEST_CASE("free enumeration over the tower provider") {
    auto ctx = tower_ctx();
    // least codes <m,i> with i > a_{m+1}: <0,5> = 20, <0,6> = 27
    CHECK(ctx->free_value(0) == 23);
    CHECK(ctx->free_value(1) == 30);
    for (Nat n = 0; n < 20; ++n) CHECK(ctx->free_value(n) < ctx->free_value(n + 1));
}

TEST_CASE("successor clauses on frozen points") {
    auto ctx = tower_ctx();
    CHECK(ctx->successor(2) == 23);  // a_0 -> free(0)
    CHECK(ctx->successor(23) == 0);  // free(0) -> h(<0,0>)
    CHECK(ctx->successor(0) == 3);   // h(<0,0>) -> h(<0,1>)
    CHECK(ctx->successor(17) == 4);  // offset hits a_1: close the block with the numeral
    CHECK(ctx->successor(4) == 30);  // a_1 -> free(1)
}

TEST_CASE("walk prefix matches the hand trace") {
    auto copy = make_gap_copy(tower_ctx());
    std::vector<Nat> expect = {2, 23, 0, 3, 7, 11, 17, 4, 30};
    for (std::size_t p = 0; p < expect.size(); ++p) CHECK(element_at(copy, p) == expect[p]);
    CHECK(element_at(copy, 7) == 4);
    CHECK(number_of(copy, 4, 100) == 7);
    CHECK(number_of(copy, 23, 100) == 1);
    CHECK(inverse_bound(copy, 2) == 0);
    CHECK(inverse_bound(copy, 3) == 1); // c(0)=2 < 3, c(1)=23 >= 3
    CHECK(image_oracle(copy, [](const Nat& x) { return x + 1; }, 2, 1000) == 23);
    CHECK(image_oracle(copy, [](const Nat& x) { return x + 7; }, 2, 1000) == 4);
}

TEST_CASE("positions and the order image") {
    auto ctx = tower_ctx();
    CHECK(ctx->position(2) == PositionTag{0, 0});
    CHECK(ctx->position(23) == PositionTag{0, 1});
    CHECK(ctx->position(3) == PositionTag{0, 3});
    CHECK(ctx->position(4) == PositionTag{1, 0});
    CHECK(ctx->position(30) == PositionTag{1, 1});

    CHECK(ctx->less(2, 23));
    CHECK(!ctx->less(4, 23)); // block 1 vs block 0
    CHECK(!ctx->less(7, 7));

    // order image agrees with walk order on a window
    auto copy = make_gap_copy(ctx);
    std::vector<Nat> elems;
    Nat cur = copy.origin;
    for (int p = 0; p < 60; ++p) {
        elems.push_back(cur);
        cur = ctx->successor(cur);
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            CHECK(ctx->less(elems[i], elems[j]) == (i < j));
}

TEST_CASE("walk numbers match the closed position formulas") {
    auto ctx = tower_ctx();
    auto copy = make_gap_copy(ctx);
    const auto& a = ctx->provider();
    Nat sum = 0; // sum of a_1..a_n
    for (Nat n = 0; n <= 2; ++n) {
        if (n > 0) sum += a.value(n);
        Nat base = 3 * n + sum;
        CHECK(number_of(copy, a.value(n), 400) == base);
        CHECK(number_of(copy, ctx->free_value(n), 400) == base + 1);
        Nat cap = a.value(n + 1) < 50 ? a.value(n + 1) : Nat(50);
        for (Nat i = 0; i <= cap; ++i)
            CHECK(number_of(copy, ctx->h(pair_code(n, i)), 400) == base + i + 2);
    }
}

TEST_CASE("successor agrees with the image oracle") {
    auto ctx = tower_ctx();
    auto copy = make_gap_copy(ctx);
    auto succ = [](const Nat& x) { return x + 1; };
    Nat cur = copy.origin;
    for (int p = 0; p < 200; ++p) {
        CHECK(ctx->successor(cur) == image_oracle(copy, succ, cur, 300));
        cur = ctx->successor(cur);
    }
}

TEST_CASE("regions partition and match brute force") {
    auto ctx = tower_ctx();
    const auto& a = ctx->provider();
    std::set<Nat> free_window;
    for (Nat k = 0; k <= 2000; ++k) {
        auto [m, i] = unpair_code(k);
        if (i >= 1 && !a.value_exceeds(m + 1, i - 1)) free_window.insert(ctx->h(k));
    }
    for (Nat x = 0; x <= 500; ++x) {
        GapRegion r = ctx->region(x);
        if (a.contains(x))
            CHECK(r == GapRegion::member);
        else if (free_window.count(x))
            CHECK(r == GapRegion::free_element);
        else
            CHECK(r == GapRegion::interior);
    }
}

TEST_CASE("ackermann-diagonal provider spot checks") {
    auto ctx = make_gap_context(GapSequence::ackermann_diagonal());
    CHECK(ctx->free_value(0) == 17); // least code <0,4> = 14, h(14) = 17
    CHECK(ctx->successor(1) == 17);  // a_0 = 1
    auto copy = make_gap_copy(ctx);
    std::set<Nat> seen;
    Nat cur = copy.origin;
    for (int p = 0; p < 150; ++p) {
        CHECK(seen.insert(cur).second);
        CHECK(number_of(copy, cur, 150) == p);
        cur = ctx->successor(cur);
    }
}
