#include "punct/binary_lift.hpp"

#include "punct/errors.hpp"

#include <utility>
#include <vector>

namespace punct {

namespace {

// Set bit positions of n, ascending.
std::vector<Nat> bit_positions(const Nat& n) {
    std::vector<Nat> ps;
    Nat t = n;
    while (t != 0) {
        std::size_t p = boost::multiprecision::lsb(t);
        ps.push_back(p);
        boost::multiprecision::bit_unset(t, p);
    }
    return ps;
}

} // namespace

LiftBase identity_lift_base(Nat budget) {
    return LiftBase{make_identity_copy(std::move(budget)),
                    [](const Nat& x, const Nat& y) { return x + y; },
                    [](const Nat& x) { return pow2(x); }};
}

LiftBase lift_base_of(PunctualCopy copy) { return LiftBase{std::move(copy), {}, {}}; }

LiftContext::LiftContext(LiftBase base) : base_(std::move(base)) {}

Nat LiftContext::element(const Nat& n, const Nat& budget) const {
    Nat r = 0;
    Nat cur = base_.copy.origin;
    Nat pos = 0;
    for (const Nat& j : bit_positions(n)) {
        if (j > budget)
            throw BudgetExceeded("lift element over '" + base_.copy.name + "': exponent " +
                                 to_string(j) + " exceeds the budget " + to_string(budget));
        while (pos < j) {
            cur = base_.copy.successor(cur);
            ++pos;
        }
        bit_set(r, cur);
    }
    return r;
}

Nat LiftContext::add(const Nat& x, const Nat& u) const {
    // each pass clears a set bit of r, so the scan makes at most
    // popcount(x)+1 probes
    Nat r = x;
    Nat v = u;
    while (bit_test(r, v)) {
        bit_unset(r, v);
        v = base_.copy.successor(v);
    }
    bit_set(r, v);
    return r;
}

Nat LiftContext::plus(const Nat& x, const Nat& y) const {
    Nat r = x;
    for (const Nat& u : bit_positions(y)) r = add(r, u);
    return r;
}

Nat LiftContext::prod(const Nat& x, const Nat& u) const {
    if (!base_.plus)
        throw MissingBaseAddition("prod over '" + base_.copy.name +
                                  "': the base exposes no addition image");
    Nat r = 0;
    for (const Nat& b : bit_positions(x)) bit_set(r, base_.plus(b, u));
    return r;
}

Nat LiftContext::times(const Nat& x, const Nat& y) const {
    if (y == 0) return 0;
    Nat r = 0;
    bool first = true;
    for (const Nat& u : bit_positions(y)) {
        Nat term = prod(x, u);
        r = first ? std::move(term) : plus(r, term);
        first = false;
    }
    return r;
}

Nat LiftContext::pow2_image(const Nat& x) const {
    if (!base_.plus)
        throw MissingBaseAddition("pow2 image over '" + base_.copy.name +
                                  "': the base exposes no addition image");
    if (!base_.pow2)
        throw MissingBasePow("pow2 image over '" + base_.copy.name +
                             "': the base exposes no 2^x image");
    Nat e;
    if (x == 0) {
        e = base_.copy.origin; // position 1 holds the single bit at c(0)
    } else {
        bool first = true;
        for (const Nat& b : bit_positions(x)) {
            Nat t = base_.pow2(b);
            e = first ? std::move(t) : base_.plus(e, t);
            first = false;
        }
    }
    Nat r = 0;
    bit_set(r, e);
    return r;
}

LiftBase LiftContext::as_base(Nat budget) const {
    LiftContext self = *this;
    PunctualCopy c{"lift/" + base_.copy.name, 0,
                   [self](const Nat& x) { return self.succ(x); }, std::move(budget)};
    LiftBase out{std::move(c), [self](const Nat& x, const Nat& y) { return self.plus(x, y); }, {}};
    if (base_.plus && base_.pow2)
        out.pow2 = [self](const Nat& x) { return self.pow2_image(x); };
    return out;
}

PunctualCopy LiftContext::copy(Nat budget) const { return as_base(std::move(budget)).copy; }

} // namespace punct
