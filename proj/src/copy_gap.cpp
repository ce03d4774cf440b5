#include "punct/copy_gap.hpp"

#include "punct/pairing.hpp"

#include <utility>

namespace punct {

GapCopyContext::GapCopyContext(GapSequence provider) : provider_(std::move(provider)) {}

bool GapCopyContext::in_code_set(const Nat& k) const {
    auto [m, i] = unpair_code(k);
    if (i == 0) return false;
    // i > a_{m+1}, i.e. not (a_{m+1} > i-1); total even past the provider's
    // cap, where a_{m+1} exceeds any representable i
    return !provider_.value_exceeds(m + 1, i - 1);
}

Nat GapCopyContext::code_rank(const Nat& k) const {
    Nat rank = 0;
    for (Nat c = 0; c < k; ++c)
        if (in_code_set(c)) ++rank;
    return rank;
}

Nat GapCopyContext::h_inverse(const Nat& x) const {
    Nat members = 0;
    for (Nat n = 0; n <= provider_.feasible_max(); ++n) {
        if (provider_.value_exceeds(n, x)) break;
        ++members;
    }
    return x - members;
}

Nat GapCopyContext::free_value(const Nat& n) const {
    Nat code;
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        Nat next = free_codes_.empty() ? Nat(0) : free_codes_.back() + 1;
        while (free_codes_.size() <= n) {
            if (in_code_set(next)) free_codes_.push_back(next);
            ++next;
        }
        code = free_codes_[static_cast<std::size_t>(n)];
    }
    return h(code);
}

GapCopyContext::Decoded GapCopyContext::decode(const Nat& x) const {
    if (provider_.contains(x)) return {GapRegion::member, provider_.inverse(x), 0};
    Nat k = h_inverse(x);
    auto [m, i] = unpair_code(k);
    if (i > 0 && !provider_.value_exceeds(m + 1, i - 1))
        return {GapRegion::free_element, k, 0};
    return {GapRegion::interior, m, i};
}

GapRegion GapCopyContext::region(const Nat& x) const { return decode(x).region; }

Nat GapCopyContext::successor(const Nat& x) const {
    Decoded d = decode(x);
    switch (d.region) {
    case GapRegion::member:
        return free_value(d.a);
    case GapRegion::free_element:
        return h(pair_code(code_rank(d.a), 0));
    case GapRegion::interior:
        if (provider_.value_equals(d.a + 1, d.offset))
            return d.offset; // the numeral a_{m+1}; closes the block
        return h(pair_code(d.a, d.offset + 1));
    }
    return 0; // unreachable
}

PositionTag GapCopyContext::position(const Nat& x) const {
    Decoded d = decode(x);
    switch (d.region) {
    case GapRegion::member:
        return {d.a, 0};
    case GapRegion::free_element:
        return {code_rank(d.a), 1};
    case GapRegion::interior:
        return {d.a, d.offset + 2};
    }
    return {0, 0}; // unreachable
}

bool GapCopyContext::less(const Nat& x, const Nat& y) const {
    PositionTag px = position(x), py = position(y);
    return px.block < py.block || (px.block == py.block && px.offset < py.offset);
}

std::shared_ptr<const GapCopyContext> make_gap_context(GapSequence provider) {
    return std::make_shared<const GapCopyContext>(std::move(provider));
}

PunctualCopy make_gap_copy(std::shared_ptr<const GapCopyContext> ctx, Nat budget) {
    std::string name = "copy-gap/" + ctx->provider().name();
    Nat origin = ctx->provider().value(0);
    return PunctualCopy{std::move(name), std::move(origin),
                        [ctx](const Nat& x) { return ctx->successor(x); }, std::move(budget)};
}

} // namespace punct
