#include "punct/gap_sequence.hpp"

#include "punct/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

namespace punct {

namespace {

std::uint64_t ackermann(std::uint64_t m, std::uint64_t n,
                        std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>& memo) {
    if (m == 0) return n + 1;
    auto key = std::make_pair(m, n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::uint64_t r = n == 0 ? ackermann(m - 1, 1, memo)
                             : ackermann(m - 1, ackermann(m, n - 1, memo), memo);
    memo.emplace(key, r);
    return r;
}

} // namespace

GapSequence::GapSequence(std::string name, std::vector<Nat> values)
    : name_(std::move(name)), values_(std::move(values)) {}

GapSequence GapSequence::tower() {
    std::vector<Nat> v;
    v.push_back(2);
    for (int i = 0; i < 4; ++i) v.push_back(pow2(v.back()));
    return GapSequence("tower", std::move(v));
}

GapSequence GapSequence::ackermann_diagonal() {
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> memo;
    std::vector<Nat> v;
    for (std::uint64_t n = 0; n <= 3; ++n) v.push_back(ackermann(n, n, memo));
    return GapSequence("ackermann-diagonal", std::move(v));
}

const Nat& GapSequence::value(const Nat& n) const {
    if (n >= values_.size())
        throw InfeasibleIndex("gap sequence '" + name_ + "' index " + to_string(n) +
                              " is past the feasibility cap " + std::to_string(feasible_max()));
    return values_[static_cast<std::size_t>(n)];
}

Nat GapSequence::inverse(const Nat& k) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), k);
    if (it != values_.end() && *it == k) return Nat(it - values_.begin());
    return 0;
}

bool GapSequence::contains(const Nat& k) const {
    return std::binary_search(values_.begin(), values_.end(), k);
}

bool GapSequence::value_exceeds(const Nat& n, const Nat& bound) const {
    if (n >= values_.size()) return true;
    return values_[static_cast<std::size_t>(n)] > bound;
}

bool GapSequence::value_equals(const Nat& n, const Nat& k) const {
    if (n >= values_.size()) return false;
    return values_[static_cast<std::size_t>(n)] == k;
}

Nat complement_enum(const GapSequence& a, const Nat& x) {
    // Least fixpoint of m = x + #{n : a_n <= m}. The iteration is monotone
    // and the least fixpoint is never a member of the sequence, so it is the
    // x-th complement element.
    auto members_upto = [&a](const Nat& m) {
        Nat k = 0;
        for (Nat n = 0; n <= a.feasible_max(); ++n) {
            if (a.value_exceeds(n, m)) break;
            ++k;
        }
        return k;
    };
    Nat m = x + members_upto(x);
    for (;;) {
        Nat next = x + members_upto(m);
        if (next == m) return m;
        m = next;
    }
}

} // namespace punct
