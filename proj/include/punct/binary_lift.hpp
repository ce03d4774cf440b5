#pragma once

#include "punct/copy.hpp"
#include "punct/nat.hpp"

#include <functional>

namespace punct {

// What a lift layer consumes from the copy below it. The successor drives
// the carry chain and is always required; the addition and 2^x images are
// optional and gate the product/exponentiation algorithms.
struct LiftBase {
    PunctualCopy copy;
    std::function<Nat(const Nat&, const Nat&)> plus; // image of +, may be empty
    std::function<Nat(const Nat&)> pow2;             // image of 2^x, may be empty
};

// Identity copy with ordinary + and 2^x.
LiftBase identity_lift_base(Nat budget = 1'000'000);

// Any copy, successor only.
LiftBase lift_base_of(PunctualCopy copy);

// The transform on base-2 expansions: position n with binary exponents
// i_k..i_0 holds the number with bits at the base elements c(i_k)..c(i_0).
// Layers compose: as_base() packages this layer's operations as the next
// layer's base, mirroring how each algorithm's hypotheses chain.
class LiftContext {
public:
    explicit LiftContext(LiftBase base);

    const LiftBase& base() const { return base_; }

    // Element at position n, by walking the base copy across n's exponents.
    Nat element(const Nat& n, const Nat& budget) const;

    // Addition of 2^u for a base element u: scan bits at u, S(u), S(S(u)), ...
    // for the first clear one, clear the scanned bits, set the final one.
    // At most popcount(x)+1 probes. Contract holds for x in the copy's range
    // and u a base element; garbage in, garbage out.
    Nat add(const Nat& x, const Nat& u) const;

    Nat succ(const Nat& x) const { return add(x, base_.copy.origin); }

    // Folds add across y's bit positions; plus(x, 0) = x.
    Nat plus(const Nat& x, const Nat& y) const;

    // Multiplication by 2^u: shifts each bit position b of x to b +^base u.
    // Throws MissingBaseAddition without a base addition image.
    Nat prod(const Nat& x, const Nat& u) const;

    // Folds prod across y's bit positions with plus; times(x, 0) = 0.
    Nat times(const Nat& x, const Nat& y) const;

    // Image of 2^x: a single bit at the base-plus fold of base-pow2 over x's
    // bit positions. Needs both base images.
    Nat pow2_image(const Nat& x) const;

    // This layer's operations packaged as the next layer's base. The 2^x
    // image is passed along only when this layer can compute it.
    LiftBase as_base(Nat budget = 1'000'000) const;

    PunctualCopy copy(Nat budget = 1'000'000) const;

private:
    LiftBase base_;
};

} // namespace punct
