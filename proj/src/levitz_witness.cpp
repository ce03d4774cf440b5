#include "punct/levitz.hpp"

#include "punct/errors.hpp"

#include <algorithm>

namespace punct {

namespace {

Mnf single(const MnfFactor& f) {
    Mnf m;
    m.runs.emplace_back(f, 1);
    return m;
}

// Drop one copy of the leading factor.
Mnf behead(const Mnf& f) {
    Mnf out = f;
    if (out.runs.front().second > 1) --out.runs.front().second;
    else out.runs.erase(out.runs.begin());
    return out;
}

Mnf intersect(const Mnf& f, const Mnf& g) {
    Mnf out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < f.runs.size() && j < g.runs.size()) {
        Ordering c = compare_mnf_factor(f.runs[i].first, g.runs[j].first);
        if (c == Ordering::greater) ++i;
        else if (c == Ordering::less) ++j;
        else {
            out.runs.emplace_back(f.runs[i].first,
                                  std::min(f.runs[i].second, g.runs[j].second));
            ++i;
            ++j;
        }
    }
    return out;
}

Mnf subtract(const Mnf& f, const Mnf& w) {
    Mnf out;
    std::size_t k = 0;
    for (const auto& [fac, c] : f.runs) {
        if (k < w.runs.size() &&
            compare_mnf_factor(fac, w.runs[k].first) == Ordering::equal) {
            Nat rest = c - w.runs[k].second;
            ++k;
            if (rest > 0) out.runs.emplace_back(fac, std::move(rest));
            continue;
        }
        out.runs.emplace_back(fac, c);
    }
    return out;
}

// Visit every factor except one copy of the head.
template <typename Fn>
void for_tail_factors(const Mnf& f, Fn&& fn) {
    for (std::size_t r = 0; r < f.runs.size(); ++r) {
        const auto& [fac, c] = f.runs[r];
        if (r == 0) {
            if (c > 1) fn(fac);
            continue;
        }
        fn(fac);
    }
}

Nat square(const Nat& v) { return v * v; }

// Bound past which the smaller-head product stays below the single larger
// head; heads are compared by exponent first.
Nat omega_smaller_exponent(const Mnf& a, const Mnf& b) {
    const MnfFactor& a1 = a.runs.front().first;
    const MnfFactor& b1 = b.runs.front().first;
    Nat k = mnf_total_count(a);
    Nat best = square(k + 5);
    best = std::max(best, nu_mnf(*a1.exp, *b1.exp));
    for_tail_factors(a, [&](const MnfFactor& fac) {
        if (compare_mnf_factor(fac, a1) == Ordering::equal) return; // zero bound
        best = std::max(best, omega_mnf(single(fac), single(a1)));
    });
    return best;
}

// Equal head exponents, strictly smaller numeric head base on the a side.
Nat omega_smaller_base(const Mnf& a, const Mnf& b) {
    const MnfFactor& a1 = a.runs.front().first;
    const MnfFactor& b1 = b.runs.front().first;
    (void)b1;
    if (a1.var_base)
        throw ComparisonContractViolated(
            "variable base cannot sit below another base");
    Nat u1 = a1.base;
    Nat k = mnf_total_count(a);
    Nat best = square(k * u1 * (square(u1 + 1) - 1) + 5);
    best = std::max(best, Nat(u1 + 1));
    for_tail_factors(a, [&](const MnfFactor& fac) {
        if (!fac.var_base) best = std::max(best, fac.base);
        best = std::max(best, nu_mnf(*fac.exp, *a1.exp));
    });
    return best;
}

} // namespace

Nat omega_mnf(const Mnf& f, const Mnf& g) {
    if (compare_mnf(f, g) == Ordering::equal) return 0;
    // The unit has no head factor; any other additive prime clears 1 from
    // x = 2 on.
    if (f.is_unit() || g.is_unit()) return 2;
    const MnfFactor& f1 = f.runs.front().first;
    const MnfFactor& g1 = g.runs.front().first;
    Ordering eo = compare_mnf(*f1.exp, *g1.exp);
    if (eo == Ordering::less) return omega_smaller_exponent(f, g);
    if (eo == Ordering::greater) return omega_smaller_exponent(g, f);
    Ordering bo = compare_mnf_factor(f1, g1);
    if (bo == Ordering::less) return omega_smaller_base(f, g);
    if (bo == Ordering::greater) return omega_smaller_base(g, f);
    return omega_mnf(behead(f), behead(g));
}

Nat nu_mnf(const Mnf& f0, const Mnf& g0) {
    Ordering c = compare_mnf(f0, g0);
    if (c == Ordering::equal) return 0;
    const Mnf& f = c == Ordering::less ? f0 : g0;
    const Mnf& g = c == Ordering::less ? g0 : f0;
    if (f.is_unit()) return 0;
    Mnf w = intersect(f, g);
    Mnf fp = subtract(f, w);
    Mnf gp = subtract(g, w);
    if (fp.is_unit()) return 0;
    if (gp.is_unit())
        throw ComparisonContractViolated("shared part swallowed the larger side");
    const MnfFactor& s1 = fp.runs.front().first;
    const MnfFactor& r1 = gp.runs.front().first;
    Nat m = mnf_total_count(fp);
    Ordering eo = compare_mnf(*s1.exp, *r1.exp);
    if (eo == Ordering::greater)
        throw ComparisonContractViolated("leading exponents out of order");
    if (eo == Ordering::less) {
        Nat best = square(m + 6);
        best = std::max(best, nu_mnf(*s1.exp, *r1.exp));
        for_tail_factors(fp, [&](const MnfFactor& fac) {
            if (compare_mnf_factor(fac, s1) == Ordering::equal) return;
            best = std::max(best, omega_mnf(single(fac), single(s1)));
        });
        return best;
    }
    // Equal exponents force distinct bases, the smaller one numeric.
    if (s1.var_base)
        throw ComparisonContractViolated(
            "variable base cannot sit below another base");
    if (!r1.var_base && s1.base >= r1.base)
        throw ComparisonContractViolated("leading bases out of order");
    Nat sb = s1.base;
    Nat best = square((m + 1) * sb * (square(sb + 1) - 1) + 5);
    best = std::max(best, Nat(sb + 1));
    for_tail_factors(fp, [&](const MnfFactor& fac) {
        if (!fac.var_base) best = std::max(best, fac.base);
        best = std::max(best, nu_mnf(*fac.exp, *s1.exp));
    });
    return best;
}

Nat omega(const TermPtr& f, const TermPtr& g, std::uint64_t digit_cap) {
    Mnf mf = mnf(f, digit_cap);
    Mnf mg = mnf(g, digit_cap);
    if (compare_mnf(mf, mg) != Ordering::less)
        throw ComparisonContractViolated("omega expects the first term below the second");
    return omega_mnf(mf, mg);
}

Nat nu(const TermPtr& f, const TermPtr& g, std::uint64_t digit_cap) {
    return nu_mnf(mnf(f, digit_cap), mnf(g, digit_cap));
}

namespace {

// A proper summand prefix dominates strictly from 1 on (the extra summands
// are positive there); it already does from 0 when they do not vanish at 0.
Nat prefix_witness(const TermPtr& f, const TermPtr& g, std::uint64_t digit_cap) {
    try {
        if (eval(f, 0, digit_cap) < eval(g, 0, digit_cap)) return 0;
    } catch (const EvalOverflow&) {
        // fall through: 1 is always sound here
    }
    return 1;
}

} // namespace

Nat witness_d(const TermPtr& f, const TermPtr& g, std::uint64_t digit_cap) {
    Anf a = anf(f, digit_cap);
    Anf b = anf(g, digit_cap);
    if (compare_anf(a, b) != Ordering::less)
        throw ComparisonContractViolated("witness_d expects the first term below the second");
    // Strictness needs x to clear the summand count: k copies of the first
    // differing summand fall below x copies only past x = k, and a constant
    // k against x meets it exactly at k.
    Nat k = anf_total_count(a) + 1;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.runs.size()) {
        if (j >= b.runs.size())
            throw ComparisonContractViolated("summands out of order");
        Ordering to = compare_mnf(a.runs[i].first, b.runs[j].first);
        if (to == Ordering::equal) {
            const Nat& ca = a.runs[i].second;
            const Nat& cb = b.runs[j].second;
            if (ca == cb) {
                ++i;
                ++j;
                continue;
            }
            if (ca > cb)
                throw ComparisonContractViolated("summands out of order");
            // The first difference sits after the shared copies: the
            // smaller side continues with its next summand, or ends and is
            // a proper prefix.
            if (i + 1 >= a.runs.size()) return prefix_witness(f, g, digit_cap);
            return std::max(nu_mnf(a.runs[i + 1].first, b.runs[j].first), k);
        }
        if (to == Ordering::greater)
            throw ComparisonContractViolated("summands out of order");
        return std::max(nu_mnf(a.runs[i].first, b.runs[j].first), k);
    }
    return prefix_witness(f, g, digit_cap); // proper prefix
}

bool verify_witness(const TermPtr& f, const TermPtr& g, const Nat& w, const Nat& span,
                    std::uint64_t digit_cap) {
    for (Nat x = w; x <= w + span; ++x) {
        if (eval(f, x, digit_cap) >= eval(g, x, digit_cap)) return false;
    }
    return true;
}

} // namespace punct
