#pragma once

#include "punct/nat.hpp"

#include <functional>
#include <string>

namespace punct {

// A copy of the naturals-with-successor, held intensionally: an origin and a
// successor function. The canonical isomorphism c(p) = successor^p(origin)
// and its inverse exist only as budgeted walks, so the cost of crossing the
// isomorphism stays visible at every call site.
struct PunctualCopy {
    std::string name;
    Nat origin;
    std::function<Nat(const Nat&)> successor;
    Nat iteration_budget = 1'000'000;
};

PunctualCopy make_identity_copy(Nat budget = 1'000'000);

// c(p), by p-fold successor iteration. Throws BudgetExceeded when p is past
// the copy's configured cap.
Nat element_at(const PunctualCopy& copy, const Nat& p);

// Least p <= budget with c(p) = x; throws NotFoundWithinBudget otherwise.
// A miss means either a wrong copy or a budget that is too small.
Nat number_of(const PunctualCopy& copy, const Nat& x, const Nat& budget);

// Ground truth for images: c(f(c^{-1}(x))), computed purely by walking.
// Every fast image algorithm in this library is validated against this.
Nat image_oracle(const PunctualCopy& copy, const std::function<Nat(const Nat&)>& f,
                 const Nat& x, const Nat& budget);

// Least t <= x with c(t) >= x. Total: c is injective, so among c(0..x) some
// value must reach x.
Nat inverse_bound(const PunctualCopy& copy, const Nat& x);

} // namespace punct
