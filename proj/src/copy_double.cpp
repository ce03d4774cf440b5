#include "punct/copy_double.hpp"

#include "punct/errors.hpp"
#include "punct/pairing.hpp"

#include <algorithm>
#include <utility>

namespace punct {

DoubleCopyContext::DoubleCopyContext(PunctualCopy base) : base_(std::move(base)) {}

int DoubleCopyContext::k_compare(const Nat& x, const Nat& i) const {
    Nat cur = base_.origin;
    for (Nat p = 0;; ++p) {
        Nat kp = p <= 1 ? Nat(0) : pow2(p) - 2;
        if (cur == x) return kp < i ? -1 : kp == i ? 0 : 1;
        if (kp > i) return 1; // every later position has a larger gap count
        cur = base_.successor(cur);
    }
}

Nat DoubleCopyContext::k_count(const Nat& x, const Nat& bound) const {
    Nat cur = base_.origin;
    for (Nat p = 0; p <= bound; ++p) {
        if (cur == x) return p <= 1 ? Nat(0) : pow2(p) - 2;
        cur = base_.successor(cur);
    }
    throw NotFoundWithinBudget("k_count(" + base_.name + "): " + to_string(x) +
                               " is not a base element within " + to_string(bound) + " steps");
}

bool DoubleCopyContext::in_odd_set(const Nat& code) const {
    auto [x, i] = unpair_code(code);
    return k_compare(x, i) <= 0; // k_x <= i
}

Nat DoubleCopyContext::odd_enum(const Nat& m) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    while (odd_codes_.size() <= m) {
        if (in_odd_set(next_code_)) odd_codes_.push_back(next_code_);
        ++next_code_;
    }
    return 2 * odd_codes_[static_cast<std::size_t>(m)] + 1;
}

Nat DoubleCopyContext::odd_index(const Nat& n) const {
    Nat t = (n - 1) / 2;
    std::lock_guard<std::mutex> lock(cache_mutex_);
    while (next_code_ <= t) {
        if (in_odd_set(next_code_)) odd_codes_.push_back(next_code_);
        ++next_code_;
    }
    auto it = std::lower_bound(odd_codes_.begin(), odd_codes_.end(), t);
    if (it == odd_codes_.end() || *it != t)
        throw NotFoundWithinBudget("odd_index(" + base_.name + "): " + to_string(n) +
                                   " is not in the odd enumeration");
    return Nat(it - odd_codes_.begin());
}

Nat DoubleCopyContext::successor(const Nat& n) const {
    if (n % 2 == 0) return odd_enum(n / 2);
    auto [x, i] = unpair_code((n - 1) / 2);
    if (k_compare(x, 0) > 0) {
        int c = k_compare(x, i + 1); // k_x vs i+1
        if (c == 0) return 2 * base_.successor(x);
        if (c > 0) return 2 * pair_code(x, i + 1) + 1;
    }
    Nat m = odd_index(n);
    if (k_compare(m, 0) <= 0) return 2 * base_.successor(m);
    return 2 * pair_code(m, 0) + 1;
}

Nat DoubleCopyContext::double_image(const Nat& n) const {
    if (n % 2 == 0) {
        if (n == 2 * base_.origin) return n;
        return 2 * base_.successor(n / 2);
    }
    auto [x, i] = unpair_code((n - 1) / 2);
    if (k_compare(x, 0) > 0 && k_compare(x, i + 1) >= 0) {
        // lands 2i+2 codes into the block headed by twice the base successor;
        // codes carry the halved element
        return 2 * pair_code(base_.successor(x), 2 * i + 2) + 1;
    }
    Nat y = base_.successor(odd_index(n));
    if (k_compare(y, 0) > 0) return 2 * pair_code(y, 0) + 1;
    return 2 * y;
}

std::shared_ptr<const DoubleCopyContext> make_double_context(PunctualCopy base) {
    return std::make_shared<const DoubleCopyContext>(std::move(base));
}

PunctualCopy make_double_copy(std::shared_ptr<const DoubleCopyContext> ctx, Nat budget) {
    std::string name = "copy-double/" + ctx->base().name;
    Nat origin = 2 * ctx->base().origin;
    return PunctualCopy{std::move(name), std::move(origin),
                        [ctx](const Nat& n) { return ctx->successor(n); }, std::move(budget)};
}

} // namespace punct
