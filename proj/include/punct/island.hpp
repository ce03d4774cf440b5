#pragma once

#include "punct/copy.hpp"
#include "punct/levitz.hpp"
#include "punct/nat.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace punct {

// --- opponents ----------------------------------------------------------

// One row of an opponent's stage table: evaluate(argument) = value, visible
// from `stage` onwards. Arguments without a row never converge.
struct OpponentEntry {
    Nat argument;
    Nat value;
    Nat stage;
};

// Desk-scale stand-in for the e-th unary partial computable function: an id
// plus an explicit stage table. Keeping the table explicit is what makes
// runs replayable byte for byte.
struct Opponent {
    Nat id;
    std::vector<OpponentEntry> table;
};

std::optional<OpponentEntry> opponent_probe(const Opponent& o, const Nat& x);

// A well-formed table obeys stage > max(id, argument, value) in every row.
// Returns one message per violating row.
std::vector<std::string> opponent_violations(const Opponent& o);

// strict: violating tables are rejected up front (InvalidOpponentTable).
// permissive: violations become transcript warnings and the run proceeds.
// Serial requirements make honest convergence stages grow with the witness,
// which is out of reach on a desk, so permissive mode exists for exercising
// several requirements in one run.
enum class OpponentCheck { strict, permissive };

// --- linear engine (marks d*x + e) ---------------------------------------

// Every element carries exactly one mark: d = 0 means mainland position e,
// otherwise d is P-smooth and the element sits at offset e of island d.
struct Mark {
    Nat d;
    Nat e;
};

// Diagonalization target a*q + b against the opponent's value; a must have
// a prime divisor outside P.
struct LinearRequirement {
    Nat a;
    Nat b;
    Opponent opponent;
};

// Contiguous block: keys [key, key+len) carry elements [elem, elem+len).
// Keys are mainland positions or island offsets. Runs keep the state small:
// late stages cover billions of positions in a few dozen blocks.
struct SegmentRun {
    Nat key;
    Nat elem;
    Nat len;
};

struct LinearIsland {
    std::vector<SegmentRun> runs; // offsets [0, top], ascending, gap-free
    Nat top;
};

struct LinearSatisfaction {
    std::size_t requirement;
    int connect_case; // 1..4
    Nat q;
    Nat witness;
    Nat witness_position; // always q: the witness carries mark x
    Nat image;            // a*q + b
    Nat value;            // the opponent's m
    Nat value_position;
    bool ok;
};

struct LinearEngineState {
    std::vector<Nat> primes; // ascending
    OpponentCheck mode = OpponentCheck::strict;
    Nat stage{0};
    Nat mainland_size{1};
    std::vector<SegmentRun> mainland; // by position, ascending, gap-free
    std::map<Nat, LinearIsland> islands;
    // element -> (d, key) view; key'd by first element of each run.
    std::map<Nat, Mark> by_element_start;
    std::map<Nat, Nat> by_element_len;
    Nat next_fresh{1};
    std::vector<Nat> injected; // Case 2 values the fresh counter must skip
    Nat element_count{1};
    std::vector<LinearRequirement> requirements;
    std::optional<std::size_t> active;
    std::size_t next_requirement{0};
    Nat witness{0};
    std::vector<LinearSatisfaction> records;
    std::vector<std::string> lines;
};

// Validates the prime set, every requirement (InvalidRequirement when a is
// P-smooth) and every opponent table per `mode`.
LinearEngineState linear_start(std::vector<Nat> primes,
                               std::vector<LinearRequirement> requirements,
                               OpponentCheck mode = OpponentCheck::strict);

// One closure stage: marks closed under +1 and p*(.) per p in P with gaps
// filled, fresh least numbers realizing the new marks in (d, e) order.
// Leaves the requirement queue alone.
LinearEngineState linear_extend(LinearEngineState state);

// Connect + Finish for opponent value m, recording the satisfaction of the
// active requirement. Positions become d*q + e; afterwards everything is
// mainland.
LinearEngineState linear_connect(LinearEngineState state, const Nat& m);

struct LinearRunResult {
    std::shared_ptr<const LinearEngineState> state;
    std::string transcript;
    PunctualCopy copy; // successor by mark lookup; the frontier throws
    Nat size;          // elements placed
    Nat pending;       // island elements never mainlanded
};

LinearRunResult linear_run(std::vector<Nat> primes,
                           std::vector<LinearRequirement> requirements,
                           const Nat& stages,
                           OpponentCheck mode = OpponentCheck::strict);

std::optional<Mark> linear_mark_of(const LinearEngineState& s, const Nat& element);
std::optional<Nat> linear_element_of_mark(const LinearEngineState& s, const Mark& m);
// Mainland elements only; island elements are still pending.
std::optional<Nat> linear_position_of(const LinearEngineState& s, const Nat& element);
// Element with the next mark on the same chain; NotFoundWithinBudget at the
// frontier or for unknown elements.
Nat linear_successor(const LinearEngineState& s, const Nat& element);

// Mark-arithmetic images: x+1 sends mark dx+e to dx+e+1, scaling by p sends
// it to (pd)x + pe. Agreement with the walked oracle is the correctness
// claim for these.
Nat linear_image_successor(const LinearEngineState& s, const Nat& element);
Nat linear_image_scale(const LinearEngineState& s, const Nat& p, const Nat& element);

// --- L-families -----------------------------------------------------------

struct FamilyTermBase {
    virtual ~FamilyTermBase() = default;
};
using FamilyTerm = std::shared_ptr<const FamilyTermBase>;

// A listable, composition-closed family of strictly increasing unary
// functions, linearly ordered by eventual domination, with computable
// normal forms and strict domination witnesses. The engine trusts these
// answers; FamilyContractViolated is thrown where a lie becomes visible.
class LFamily {
public:
    virtual ~LFamily() = default;
    virtual std::string name() const = 0;
    virtual FamilyTerm identity() const = 0;
    virtual FamilyTerm successor() const = 0;
    virtual FamilyTerm list_term(std::uint64_t i) const = 0;
    // outer(inner(x))
    virtual FamilyTerm compose(const FamilyTerm& outer, const FamilyTerm& inner) const = 0;
    virtual Nat eval(const FamilyTerm& t, const Nat& x) const = 0;
    // Equal codes iff equal functions.
    virtual Nat normal_form(const FamilyTerm& t) const = 0;
    virtual Ordering nf_compare(const FamilyTerm& a, const FamilyTerm& b) const = 0;
    // Least known d with lo(x) < hi(x) for all x >= d; callers orient lo < hi.
    virtual Nat strict_witness(const FamilyTerm& lo, const FamilyTerm& hi) const = 0;
    virtual std::string render(const FamilyTerm& t) const = 0;
};

// Polynomials with natural coefficients, degree >= 1. The list starts
// x, x+1, x+2 so small indices keep stage structures linear; the rest of the
// family follows by pairing codes.
std::shared_ptr<const LFamily> poly_family();

// Closed-form tower terms over 0, 1, x, +, *, n^f, excluding x^f (not
// strictly increasing everywhere) and constants.
std::shared_ptr<const LFamily> levitz_family(std::uint64_t digit_cap = default_digit_cap);

// Dense natural coefficients, constant term first.
using PolyCoeffs = std::vector<Nat>;

FamilyTerm poly_family_term(const PolyCoeffs& coeffs); // ConstantPolynomial if degree 0
FamilyTerm levitz_family_term(const TermPtr& t);       // rejects constants and x^f

// Prime-power code p_0^{a_0} p_1^{a_1} ...; ConstantPolynomial unless
// degree >= 1.
Nat poly_normal_form(const PolyCoeffs& t);

// k*(1 + max|b_j|) over b = t2 - t1 with k = deg(b): a strict domination
// witness whenever the leading coefficient of t2 - t1 is positive.
Nat poly_witness(const PolyCoeffs& t1, const PolyCoeffs& t2);

// --- meta engine ------------------------------------------------------------

struct MetaSatisfaction {
    std::size_t requirement;
    Nat id; // opponent id e
    Nat witness;
    Nat value;       // psi_e(w)
    Nat predecessor; // the element whose successor became w
    std::optional<Nat> value_successor;
    bool ok;
};

struct MetaArchEntry {
    Nat element;
    FamilyTerm label; // q_z with q_z(w) = z
    Nat birth_stage;  // closure only touches entries born before this stage
};

struct MetaEngineState {
    std::shared_ptr<const LFamily> family;
    OpponentCheck mode = OpponentCheck::strict;
    std::uint64_t position_limit{1'000'000};
    Nat stage{0};
    Nat theta{0};
    Nat beta{0};
    std::uint64_t signature{0}; // current e: sigma = {S, t_0..t_e}
    std::vector<Nat> chain;     // position -> element
    std::map<Nat, Nat> position;
    std::map<Nat, Nat> successor;
    std::vector<MetaArchEntry> archipelago; // ascending in the domination order
    // (list index j, element) -> declared t_j image for archipelago elements.
    std::map<std::pair<std::uint64_t, Nat>, Nat> declared;
    Nat next_fresh{2};
    std::vector<Opponent> opponents; // ascending by id
    std::optional<std::size_t> active;
    std::size_t next_opponent{0};
    Nat witness{0};
    Nat activation_stage{0};
    std::vector<MetaSatisfaction> records;
    std::vector<std::string> lines;
};

// The finite approximation at signature e and step s: domain [0, bound],
// downward closed, with function rows defined over the previous domain and
// undefined on the frontier. values[0] is the successor row, values[1+j] is
// the t_j row.
struct MetaStageStructure {
    Nat bound;
    std::optional<Nat> previous_bound;
    std::vector<std::vector<Nat>> values;
};

MetaStageStructure meta_stage_structure(const LFamily& family, std::uint64_t e, const Nat& s,
                                        std::uint64_t position_limit = 1'000'000);

MetaEngineState meta_start(std::shared_ptr<const LFamily> family,
                           std::vector<Opponent> opponents,
                           OpponentCheck mode = OpponentCheck::strict,
                           std::uint64_t position_limit = 1'000'000);

// theta+1, mainland padded to match, archipelago closed under the signature
// with normal-form dedup; strict witnesses accumulate into beta.
MetaEngineState meta_extend(MetaEngineState state);

// Absorbs the whole archipelago into the mainland at positions q_a(D'+1),
// checks the ordering property at x = max(theta, beta) for every label pair,
// and records the satisfaction of the active requirement.
MetaEngineState meta_connect(MetaEngineState state, const Nat& value);

struct MetaRunResult {
    std::shared_ptr<const MetaEngineState> state;
    std::string transcript;
    PunctualCopy copy;
    Nat size;
    Nat pending;
};

MetaRunResult meta_run(std::shared_ptr<const LFamily> family,
                       std::vector<Opponent> opponents,
                       const Nat& stages,
                       OpponentCheck mode = OpponentCheck::strict,
                       std::uint64_t position_limit = 1'000'000);

// t_j at x: mainland elements go through positions, archipelago elements
// through the declared table. nullopt past the frontier.
std::optional<Nat> meta_image(const MetaEngineState& s, std::uint64_t term_index, const Nat& x);

} // namespace punct
