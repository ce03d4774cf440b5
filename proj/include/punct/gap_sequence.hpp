#pragma once

#include "punct/nat.hpp"

#include <string>
#include <vector>

namespace punct {

// A strictly increasing sequence a_0 < a_1 < ... whose gaps a_{n+1} - a_n
// grow without bound, precomputed up to a feasibility cap at construction.
// Both shipped providers grow so fast past their cap that the first
// uncomputable value exceeds anything a caller can feed in; the bounded
// comparison helpers lean on that to stay total.
class GapSequence {
public:
    static GapSequence tower();               // a_n: 2, 4, 16, 65536, 2^65536
    static GapSequence ackermann_diagonal();  // a_n: 1, 3, 7, 61

    const std::string& name() const { return name_; }
    std::size_t feasible_max() const { return values_.size() - 1; }

    // a_n; throws InfeasibleIndex past the cap.
    const Nat& value(const Nat& n) const;

    // n such that a_n = k if k is in range, 0 otherwise.
    Nat inverse(const Nat& k) const;

    bool contains(const Nat& k) const;

    // a_n > bound, decided without materializing infeasible values.
    bool value_exceeds(const Nat& n, const Nat& bound) const;

    // a_n == k, likewise total.
    bool value_equals(const Nat& n, const Nat& k) const;

private:
    GapSequence(std::string name, std::vector<Nat> values);

    std::string name_;
    std::vector<Nat> values_;
};

// h(x): the x-th element (0-indexed) of the complement of Ran(a).
Nat complement_enum(const GapSequence& a, const Nat& x);

// Same enumeration bundled with its backing provider.
struct ComplementEnum {
    const GapSequence* backing;
    Nat h(const Nat& x) const { return complement_enum(*backing, x); }
};

} // namespace punct
