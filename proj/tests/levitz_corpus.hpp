#pragma once

// Deterministic random term corpus shared by the unit tests and the
// acceptance run. Pairs are rejection-sampled so every downstream check
// (comparison, witnesses, evaluation sweeps) stays inside the digit cap.

#include "punct/errors.hpp"
#include "punct/levitz.hpp"

#include <random>
#include <utility>
#include <vector>

namespace punct::testing {

inline TermPtr random_term(std::mt19937_64& rng, int depth) {
    auto roll = [&](unsigned n) { return static_cast<unsigned>(rng() % n); };
    if (depth <= 0) {
        unsigned r = roll(20);
        if (r < 1) return t_zero();
        if (r < 7) return t_one();
        if (r < 15) return t_var();
        return t_numeral(2 + roll(4));
    }
    unsigned r = roll(20);
    if (r < 6) return t_sum(random_term(rng, depth - 1), random_term(rng, depth - 1));
    if (r < 11) return t_prod(random_term(rng, depth - 1), random_term(rng, depth - 1));
    if (r < 14) return t_const_pow(2 + roll(4), random_term(rng, depth - 1));
    if (r < 17) return t_var_pow(random_term(rng, depth - 1));
    return random_term(rng, 0);
}

// Reconstruction of a term from its canonical forms (for idempotence checks).
inline TermPtr term_of_mnf(const Mnf& m);

inline TermPtr repeat_prod(const TermPtr& t, const Nat& c) {
    if (c == 1) return t;
    Nat half = c / 2;
    TermPtr h = repeat_prod(t, half);
    TermPtr doubled = t_prod(h, h);
    if ((c & 1) != 0) return t_prod(doubled, t);
    return doubled;
}

inline TermPtr term_of_mnf(const Mnf& m) {
    if (m.runs.empty()) return t_one();
    TermPtr acc;
    for (const auto& [fac, c] : m.runs) {
        TermPtr e = term_of_mnf(*fac.exp);
        TermPtr base = fac.var_base ? t_var_pow(e) : t_const_pow(fac.base, e);
        TermPtr piece = repeat_prod(base, c);
        acc = acc ? t_prod(acc, piece) : piece;
    }
    return acc;
}

inline TermPtr term_of_anf(const Anf& a) {
    if (a.runs.empty()) return t_zero();
    TermPtr acc;
    for (const auto& [m, c] : a.runs) {
        TermPtr piece = t_scaled(term_of_mnf(m), c);
        acc = acc ? t_sum(acc, piece) : piece;
    }
    return acc;
}

struct CorpusPair {
    TermPtr f;
    TermPtr g;
    Ordering verdict;
};

// Keep a pair only if the verdict, the witness, and the evaluation sweep all
// fit the digit cap.
inline std::vector<CorpusPair> make_corpus(std::uint64_t seed, std::size_t n,
                                           Nat span = 50) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusPair> out;
    while (out.size() < n) {
        TermPtr f = random_term(rng, 4);
        TermPtr g = random_term(rng, 4);
        try {
            Ordering v = compare(f, g);
            if (v == Ordering::less) {
                Nat w = witness_d(f, g);
                eval(f, w + span);
                eval(g, w + span);
            } else if (v == Ordering::greater) {
                Nat w = witness_d(g, f);
                eval(f, w + span);
                eval(g, w + span);
            } else {
                eval(f, 20);
                eval(g, 20);
            }
            out.push_back({std::move(f), std::move(g), v});
        } catch (const Error&) {
            // overflowed the cap somewhere; draw again
        }
    }
    return out;
}

// The five shape conditions of a canonical factor list.
inline bool mnf_well_formed(const Mnf& m) {
    for (std::size_t i = 0; i < m.runs.size(); ++i) {
        const auto& [fac, c] = m.runs[i];
        if (c < 1) return false;
        if (!fac.var_base && fac.base < 2) return false;           // base shape
        if (!fac.var_base && fac.exp->is_unit()) return false;     // exponent 1
        if (!fac.var_base && c != 1) return false;                 // merged bases
        if (!is_additive_prime(term_of_mnf(*fac.exp))) return false;
        if (i + 1 < m.runs.size()) {
            Ordering o = compare_mnf_factor(fac, m.runs[i + 1].first);
            if (o != Ordering::greater) return false;              // descending runs
        }
    }
    // Numeric bases carry pairwise distinct exponents.
    for (std::size_t i = 0; i < m.runs.size(); ++i) {
        if (m.runs[i].first.var_base) continue;
        for (std::size_t j = i + 1; j < m.runs.size(); ++j) {
            if (m.runs[j].first.var_base) continue;
            if (compare_mnf(*m.runs[i].first.exp, *m.runs[j].first.exp) == Ordering::equal)
                return false;
        }
    }
    return true;
}

} // namespace punct::testing
