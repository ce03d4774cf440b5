#include "punct/copy.hpp"

#include "punct/errors.hpp"

namespace punct {

PunctualCopy make_identity_copy(Nat budget) {
    return PunctualCopy{"identity", 0, [](const Nat& x) { return x + 1; }, std::move(budget)};
}

Nat element_at(const PunctualCopy& copy, const Nat& p) {
    if (p > copy.iteration_budget)
        throw BudgetExceeded("element_at(" + copy.name + "): index " + to_string(p) +
                             " exceeds the iteration budget " + to_string(copy.iteration_budget));
    Nat x = copy.origin;
    for (Nat i = 0; i < p; ++i) x = copy.successor(x);
    return x;
}

Nat number_of(const PunctualCopy& copy, const Nat& x, const Nat& budget) {
    Nat cur = copy.origin;
    for (Nat p = 0; p <= budget; ++p) {
        if (cur == x) return p;
        cur = copy.successor(cur);
    }
    throw NotFoundWithinBudget("number_of(" + copy.name + "): " + to_string(x) +
                               " not reached within " + to_string(budget) + " steps");
}

Nat image_oracle(const PunctualCopy& copy, const std::function<Nat(const Nat&)>& f,
                 const Nat& x, const Nat& budget) {
    return element_at(copy, f(number_of(copy, x, budget)));
}

Nat inverse_bound(const PunctualCopy& copy, const Nat& x) {
    Nat cur = copy.origin;
    for (Nat t = 0;; ++t) {
        if (cur >= x) return t;
        cur = copy.successor(cur);
    }
}

} // namespace punct
