#pragma once

#include "punct/copy.hpp"
#include "punct/gap_sequence.hpp"
#include "punct/nat.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace punct {

// Where an element sits relative to the gap sequence a_0 < a_1 < ...
//   member:       x = a_n
//   free_element: x = h(<m,i>) with i > a_{m+1}; these splice in just after
//                 their block's a_n
//   interior:     x = h(<m,i>) with i <= a_{m+1}
enum class GapRegion { member, free_element, interior };

// Position of an element in the induced order: block, then offset within
// the block (0 for a_m, 1 for the free element, i+2 for interiors).
struct PositionTag {
    Nat block;
    Nat offset;
};

inline bool operator==(const PositionTag& a, const PositionTag& b) {
    return a.block == b.block && a.offset == b.offset;
}

// The copy built over a gap sequence. Elements are classified by decoding
// through the complement enumeration h; the successor threads each block's
// interiors between a_n and a_{n+1}, detouring through one free element.
class GapCopyContext {
public:
    explicit GapCopyContext(GapSequence provider);

    const GapSequence& provider() const { return provider_; }

    Nat h(const Nat& x) const { return complement_enum(provider_, x); }

    // n-th value of the increasing enumeration of F = {h(<m,i>) : i > a_{m+1}}.
    Nat free_value(const Nat& n) const;

    GapRegion region(const Nat& x) const;

    Nat successor(const Nat& x) const;

    PositionTag position(const Nat& x) const;

    // The order image: true iff position(x) precedes position(y)
    // lexicographically.
    bool less(const Nat& x, const Nat& y) const;

private:
    struct Decoded {
        GapRegion region;
        Nat a;       // member: index n; free: code <m,i>; interior: block m
        Nat offset;  // interior only: the i
    };
    Decoded decode(const Nat& x) const;

    bool in_code_set(const Nat& k) const;    // k = <m,i> with i > a_{m+1}
    Nat code_rank(const Nat& k) const;       // #{k' < k : k' in the code set}
    Nat h_inverse(const Nat& x) const;       // for x outside Ran(a)

    GapSequence provider_;
    mutable std::mutex cache_mutex_;
    mutable std::vector<Nat> free_codes_;    // increasing codes of F, grown on demand
};

std::shared_ptr<const GapCopyContext> make_gap_context(GapSequence provider);

// Packages the context as a walkable copy named "copy-gap/<provider>".
PunctualCopy make_gap_copy(std::shared_ptr<const GapCopyContext> ctx, Nat budget = 1'000'000);

} // namespace punct
