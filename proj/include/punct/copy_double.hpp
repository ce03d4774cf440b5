#pragma once

#include "punct/copy.hpp"
#include "punct/nat.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace punct {

// A copy built over any base copy: the base's p-th element x reappears as 2x
// at position max(2^p, 1) - (1 if p = 0), and odd numbers fill the gaps so
// that the doubling image becomes computable by local rules. Between 2x and
// 2y (y the base successor of x) sit odd'(x) and then the k_x codes
// 2<x,i>+1, i < k_x, where k_x = max(2^p, 2) - 2.
class DoubleCopyContext {
public:
    explicit DoubleCopyContext(PunctualCopy base);

    const PunctualCopy& base() const { return base_; }

    // Gap count k_x, found by searching the base number of x up to bound.
    Nat k_count(const Nat& x, const Nat& bound) const;

    // m-th element of {2<x,i>+1 : i >= k_x} in increasing order.
    Nat odd_enum(const Nat& m) const;

    // Inverse of odd_enum; n must be a member of the set.
    Nat odd_index(const Nat& n) const;

    Nat successor(const Nat& n) const;

    // Image of doubling, by local rules only; validated against the oracle.
    Nat double_image(const Nat& n) const;

private:
    // sign of k_x - i, decided by a base walk bounded by log2(i+2)+1: once
    // the candidate gap count outgrows i the answer is settled even though
    // the walk never met x
    int k_compare(const Nat& x, const Nat& i) const;

    bool in_odd_set(const Nat& code) const; // code = <x,i> with i >= k_x

    void grow_codes(const Nat& code_bound, const Nat& count_bound) const;

    PunctualCopy base_;
    mutable std::mutex cache_mutex_;
    mutable std::vector<Nat> odd_codes_; // member codes, increasing
    mutable Nat next_code_ = 0;          // first unexamined code
};

std::shared_ptr<const DoubleCopyContext> make_double_context(PunctualCopy base);

// Packages the context as a walkable copy named "copy-double/<base>".
PunctualCopy make_double_copy(std::shared_ptr<const DoubleCopyContext> ctx,
                              Nat budget = 1'000'000);

} // namespace punct
