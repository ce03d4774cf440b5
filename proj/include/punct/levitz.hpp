#pragma once

#include "punct/nat.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace punct {

// Terms over 0, 1, x, +, *, n^f and x^f. Immutable and shared: subterm
// sharing keeps expansions (numerals, scaled sums) logarithmic, and node
// identity doubles as a memo key.
enum class TermKind { zero, one, var, sum, prod, const_pow, var_pow };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    TermKind kind;
    Nat base;      // const_pow only, n >= 1
    TermPtr left;  // sum/prod left; const_pow/var_pow exponent
    TermPtr right; // sum/prod right
};

TermPtr t_zero();
TermPtr t_one();
TermPtr t_var();
TermPtr t_sum(TermPtr a, TermPtr b);
TermPtr t_prod(TermPtr a, TermPtr b);
TermPtr t_const_pow(Nat base, TermPtr exp); // base >= 1
TermPtr t_var_pow(TermPtr exp);
TermPtr t_numeral(const Nat& n);            // left-fold of ones
TermPtr t_scaled(TermPtr t, const Nat& c);  // c copies of t, balanced and shared

// Exact pointwise-zero / pointwise-one tests (structural recursions).
bool is_zero(const TermPtr& f);
bool is_one(const TermPtr& f);

// Grammar: term := sum; sum := prod ('+' prod)*; prod := atom ('*' atom)*;
// atom := nat | 'x' | nat '^' atom | 'x' '^' atom | '(' term ')'.
// A bare numeral n >= 2 reads as a left-fold of ones; 0^f is rejected.
TermPtr parse_term(const std::string& text);

std::string render(const TermPtr& f);

// Results are capped at digit_cap decimal digits; beyond it EvalOverflow /
// CodeOverflow fire rather than letting towers run away.
inline constexpr std::uint64_t default_digit_cap = 100'000;

Nat eval(const TermPtr& f, const Nat& x, std::uint64_t digit_cap = default_digit_cap);

// The injective numbering: <0> = 0, <1> = 1, <f+g> = 2^{<f>+1} 3^{<g>+1},
// <f*g> = 5^{<f>+1} 7^{<g>+1}, <x^f> = 11^{<f>+1}, <n^f> = 13^n 17^{<f>+1};
// x reads as x^1.
Nat encode(const TermPtr& f, std::uint64_t digit_cap = default_digit_cap);

// --- set normal forms -------------------------------------------------

// Summand list with multiplicities; empty = the zero function.
using SetAnf = std::vector<std::pair<TermPtr, Nat>>;

struct SetFactor {
    bool var_base;
    Nat base; // >= 2 when !var_base
    TermPtr exp;
};

SetAnf set_anf(const TermPtr& f, std::uint64_t digit_cap = default_digit_cap);

// Factor runs of an additive prime, nullopt otherwise. An empty list is the
// constant 1.
using SetMnfRuns = std::vector<std::pair<SetFactor, Nat>>;
std::optional<SetMnfRuns> set_mnf(const TermPtr& f,
                                  std::uint64_t digit_cap = default_digit_cap);

bool is_additive_prime(const TermPtr& f, std::uint64_t digit_cap = default_digit_cap);

// --- canonical normal forms -------------------------------------------

struct Mnf;
using MnfPtr = std::shared_ptr<const Mnf>;

struct MnfFactor {
    bool var_base;
    Nat base;   // >= 2 when !var_base
    MnfPtr exp; // additive prime exponent in canonical form; empty Mnf = 1
};

// Factor runs, descending in the domination order; count > 1 only for
// x-bases (equal-exponent numeric bases merge multiplicatively).
struct Mnf {
    std::vector<std::pair<MnfFactor, Nat>> runs;
    bool is_unit() const { return runs.empty(); }
};

// Summand runs, descending; empty = zero. The unit summand is an empty Mnf.
struct Anf {
    std::vector<std::pair<Mnf, Nat>> runs;
};

enum class Ordering { less, equal, greater };

Mnf mnf(const TermPtr& f, std::uint64_t digit_cap = default_digit_cap); // NotAdditivePrime if absent
Anf anf(const TermPtr& f, std::uint64_t digit_cap = default_digit_cap);

Ordering compare_mnf(const Mnf& f, const Mnf& g);
Ordering compare_anf(const Anf& f, const Anf& g);
Ordering compare_mnf_factor(const MnfFactor& a, const MnfFactor& b);

Nat mnf_total_count(const Mnf& f); // factors, with multiplicity
Nat anf_total_count(const Anf& f); // summands, with multiplicity

// Eventual-domination comparison of whole terms via their canonical forms.
Ordering compare(const TermPtr& f, const TermPtr& g,
                 std::uint64_t digit_cap = default_digit_cap);

std::string render_mnf(const Mnf& f);
std::string render_anf(const Anf& f);

// --- domination witnesses ----------------------------------------------

// For additive primes f < g: past omega(f,g), f(x) < g(x); past nu(f,g),
// f(x)*x <= g(x). Both are total on additive primes (mirrored when the
// order is reversed, 0 on equals).
Nat omega_mnf(const Mnf& f, const Mnf& g);
Nat nu_mnf(const Mnf& f, const Mnf& g);

// Term-level wrappers; omega insists on compare(f,g) = less.
Nat omega(const TermPtr& f, const TermPtr& g, std::uint64_t digit_cap = default_digit_cap);
Nat nu(const TermPtr& f, const TermPtr& g, std::uint64_t digit_cap = default_digit_cap);

// Strict domination witness for any f < g (not just additive primes).
Nat witness_d(const TermPtr& f, const TermPtr& g,
              std::uint64_t digit_cap = default_digit_cap);

// Empirical check: eval(f,x) < eval(g,x) on [w, w+span].
bool verify_witness(const TermPtr& f, const TermPtr& g, const Nat& w, const Nat& span,
                    std::uint64_t digit_cap = default_digit_cap);

} // namespace punct
