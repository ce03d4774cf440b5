#include "punct/levitz.hpp"

#include "punct/errors.hpp"

#include <algorithm>
#include <map>

namespace punct {

namespace {

std::uint64_t cap_bits(std::uint64_t digit_cap) {
    return digit_cap * 3322 / 1000 + 2;
}

// Normalization shares one memo per top-level call; multiplicities stay
// under the digit cap so towers of constants fail loudly instead of
// exhausting memory.
struct NormCtx {
    std::uint64_t bits;
    std::map<const Term*, SetAnf> anf_memo;
    std::map<const Term*, std::optional<SetMnfRuns>> mnf_memo;

    Nat checked_mul(const Nat& a, const Nat& b) {
        if (bit_width(a) + bit_width(b) > bits + 1)
            throw CodeOverflow("normal form multiplicity exceeds the digit cap");
        return a * b;
    }

    Nat checked_pow(const Nat& base, const Nat& exp) {
        if (base == 0) return exp == 0 ? Nat(1) : Nat(0);
        if (base == 1) return 1;
        if (exp * bit_width(base) > Nat(bits) * 2)
            throw CodeOverflow("normal form multiplicity exceeds the digit cap");
        Nat r = nat_pow(base, static_cast<std::uint64_t>(exp));
        if (bit_width(r) > bits)
            throw CodeOverflow("normal form multiplicity exceeds the digit cap");
        return r;
    }

    void push_run(SetAnf& runs, TermPtr t, Nat c) {
        if (!runs.empty() && runs.back().first.get() == t.get()) {
            runs.back().second += c;
            return;
        }
        runs.emplace_back(std::move(t), std::move(c));
    }

    const SetAnf& sa(const TermPtr& f) {
        auto it = anf_memo.find(f.get());
        if (it != anf_memo.end()) return it->second;
        SetAnf out;
        switch (f->kind) {
        case TermKind::zero: break;
        case TermKind::one: out.emplace_back(t_one(), 1); break;
        case TermKind::var:
        case TermKind::var_pow: out.emplace_back(f, 1); break;
        case TermKind::sum: {
            for (const auto& [t, c] : sa(f->left)) push_run(out, t, c);
            for (const auto& [t, c] : sa(f->right)) push_run(out, t, c);
            break;
        }
        case TermKind::prod: {
            const SetAnf l = sa(f->left);
            const SetAnf r = sa(f->right);
            for (const auto& [p, c] : l)
                for (const auto& [q, d] : r) push_run(out, t_prod(p, q), checked_mul(c, d));
            break;
        }
        case TermKind::const_pow: {
            if (f->base == 1) {
                out.emplace_back(t_one(), 1);
                break;
            }
            Nat ones = 0;
            TermPtr rest; // sum over the non-unit summands, with multiplicity
            for (const auto& [p, c] : sa(f->left)) {
                if (is_one(p)) {
                    ones += c;
                    continue;
                }
                TermPtr scaled = t_scaled(p, c);
                rest = rest ? t_sum(rest, scaled) : scaled;
            }
            TermPtr body = rest ? t_const_pow(f->base, rest) : t_one();
            out.emplace_back(std::move(body), checked_pow(f->base, ones));
            break;
        }
        }
        return anf_memo.emplace(f.get(), std::move(out)).first->second;
    }

    void push_factor(SetMnfRuns& runs, SetFactor fac, Nat c) {
        if (!runs.empty() && runs.back().first.exp.get() == fac.exp.get() &&
            runs.back().first.var_base == fac.var_base &&
            runs.back().first.base == fac.base) {
            runs.back().second += c;
            return;
        }
        runs.emplace_back(std::move(fac), std::move(c));
    }

    const std::optional<SetMnfRuns>& sm(const TermPtr& f) {
        auto it = mnf_memo.find(f.get());
        if (it != mnf_memo.end()) return it->second;
        std::optional<SetMnfRuns> out;
        switch (f->kind) {
        case TermKind::zero: break; // 0 splits into nothing; absent
        case TermKind::one: out.emplace(); break;
        case TermKind::var:
            out.emplace();
            out->emplace_back(SetFactor{true, 0, t_one()}, 1);
            break;
        case TermKind::sum:
            if (is_zero(f->left)) out = sm(f->right);
            else if (is_zero(f->right)) out = sm(f->left);
            break; // two nonzero summands: not an additive prime
        case TermKind::prod: {
            const auto l = sm(f->left);
            const auto r = sm(f->right);
            if (l && r) {
                out.emplace(*l);
                for (const auto& [fac, c] : *r) push_factor(*out, fac, c);
            }
            break;
        }
        case TermKind::var_pow: {
            out.emplace();
            for (const auto& [p, c] : sa(f->left))
                push_factor(*out, SetFactor{true, 0, p}, c);
            break;
        }
        case TermKind::const_pow: {
            if (f->base == 1) {
                out.emplace();
                break;
            }
            SetMnfRuns runs;
            bool prime = true;
            for (const auto& [p, c] : sa(f->left)) {
                if (is_one(p)) {
                    prime = false; // contributes base^count copies of the rest
                    break;
                }
                push_factor(runs, SetFactor{false, f->base, p}, c);
            }
            if (prime) out = std::move(runs);
            break;
        }
        }
        return mnf_memo.emplace(f.get(), std::move(out)).first->second;
    }
};

} // namespace

SetAnf set_anf(const TermPtr& f, std::uint64_t digit_cap) {
    NormCtx ctx{cap_bits(digit_cap), {}, {}};
    return ctx.sa(f);
}

std::optional<SetMnfRuns> set_mnf(const TermPtr& f, std::uint64_t digit_cap) {
    NormCtx ctx{cap_bits(digit_cap), {}, {}};
    return ctx.sm(f);
}

bool is_additive_prime(const TermPtr& f, std::uint64_t digit_cap) {
    SetAnf runs = set_anf(f, digit_cap);
    Nat total = 0;
    for (const auto& [t, c] : runs) total += c;
    return total == 1;
}

// --- comparisons ------------------------------------------------------------

Ordering compare_mnf_factor(const MnfFactor& a, const MnfFactor& b) {
    Ordering eo = compare_mnf(*a.exp, *b.exp);
    if (eo != Ordering::equal) return eo;
    if (a.var_base != b.var_base)
        return a.var_base ? Ordering::greater : Ordering::less;
    if (a.var_base) return Ordering::equal;
    if (a.base < b.base) return Ordering::less;
    if (a.base > b.base) return Ordering::greater;
    return Ordering::equal;
}

Ordering compare_mnf(const Mnf& f, const Mnf& g) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < f.runs.size() && j < g.runs.size()) {
        Ordering fo = compare_mnf_factor(f.runs[i].first, g.runs[j].first);
        if (fo != Ordering::equal) return fo;
        const Nat& fc = f.runs[i].second;
        const Nat& gc = g.runs[j].second;
        if (fc == gc) {
            ++i;
            ++j;
            continue;
        }
        // Runs descend strictly, so after the shared copies the side with
        // fewer presents a smaller factor or ends as a proper prefix.
        return fc < gc ? Ordering::less : Ordering::greater;
    }
    if (i < f.runs.size()) return Ordering::greater;
    if (j < g.runs.size()) return Ordering::less;
    return Ordering::equal;
}

Ordering compare_anf(const Anf& f, const Anf& g) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < f.runs.size() && j < g.runs.size()) {
        Ordering to = compare_mnf(f.runs[i].first, g.runs[j].first);
        if (to != Ordering::equal) return to;
        const Nat& fc = f.runs[i].second;
        const Nat& gc = g.runs[j].second;
        if (fc == gc) {
            ++i;
            ++j;
            continue;
        }
        return fc < gc ? Ordering::less : Ordering::greater;
    }
    if (i < f.runs.size()) return Ordering::greater;
    if (j < g.runs.size()) return Ordering::less;
    return Ordering::equal;
}

Nat mnf_total_count(const Mnf& f) {
    Nat total = 0;
    for (const auto& [fac, c] : f.runs) total += c;
    return total;
}

Nat anf_total_count(const Anf& f) {
    Nat total = 0;
    for (const auto& [t, c] : f.runs) total += c;
    return total;
}

// --- canonical forms --------------------------------------------------------

namespace {

struct CanonCtx {
    std::uint64_t digit_cap;
    std::uint64_t bits;

    Mnf canonical_mnf(const TermPtr& f);

    MnfPtr canonical_exp(const TermPtr& e) {
        return std::make_shared<const Mnf>(canonical_mnf(e));
    }

    Mnf from_set_runs(const SetMnfRuns& runs) {
        // Singles carry (factor, multiplicity); numeric bases with equal
        // exponents merge multiplicatively, x-bases keep their counts.
        struct Piece {
            MnfFactor factor;
            Nat count;
        };
        std::vector<Piece> pieces;
        for (const auto& [fac, c] : runs) {
            MnfFactor mf{fac.var_base, fac.base, canonical_exp(fac.exp)};
            bool merged = false;
            if (!fac.var_base) {
                for (auto& p : pieces) {
                    if (p.factor.var_base) continue;
                    if (compare_mnf(*p.factor.exp, *mf.exp) != Ordering::equal) continue;
                    Nat lift = checked_base_pow(mf.base, c);
                    p.factor.base = checked_base_mul(p.factor.base, lift);
                    merged = true;
                    break;
                }
                if (!merged) {
                    Nat lifted = checked_base_pow(mf.base, c);
                    pieces.push_back({MnfFactor{false, std::move(lifted), mf.exp}, 1});
                    merged = true;
                }
            }
            if (merged) continue;
            bool grouped = false;
            for (auto& p : pieces) {
                if (!p.factor.var_base) continue;
                if (compare_mnf(*p.factor.exp, *mf.exp) != Ordering::equal) continue;
                p.count += c;
                grouped = true;
                break;
            }
            if (!grouped) pieces.push_back({std::move(mf), c});
        }
        std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
            return compare_mnf_factor(a.factor, b.factor) == Ordering::greater;
        });
        Mnf out;
        for (auto& p : pieces) {
            if (!out.runs.empty() &&
                compare_mnf_factor(out.runs.back().first, p.factor) == Ordering::equal) {
                out.runs.back().second += p.count;
                continue;
            }
            out.runs.emplace_back(std::move(p.factor), std::move(p.count));
        }
        return out;
    }

    Nat checked_base_pow(const Nat& base, const Nat& exp) {
        if (exp * bit_width(base) > Nat(bits) * 2)
            throw CodeOverflow("merged base exceeds the digit cap");
        Nat r = nat_pow(base, static_cast<std::uint64_t>(exp));
        if (bit_width(r) > bits) throw CodeOverflow("merged base exceeds the digit cap");
        return r;
    }

    Nat checked_base_mul(const Nat& a, const Nat& b) {
        if (bit_width(a) + bit_width(b) > bits + 1)
            throw CodeOverflow("merged base exceeds the digit cap");
        return a * b;
    }
};

Mnf CanonCtx::canonical_mnf(const TermPtr& f) {
    auto runs = set_mnf(f, digit_cap);
    if (!runs) throw NotAdditivePrime("term is not an additive prime");
    return from_set_runs(*runs);
}

} // namespace

Mnf mnf(const TermPtr& f, std::uint64_t digit_cap) {
    CanonCtx ctx{digit_cap, cap_bits(digit_cap)};
    return ctx.canonical_mnf(f);
}

Anf anf(const TermPtr& f, std::uint64_t digit_cap) {
    CanonCtx ctx{digit_cap, cap_bits(digit_cap)};
    std::vector<std::pair<Mnf, Nat>> pieces;
    for (const auto& [t, c] : set_anf(f, digit_cap)) {
        Mnf m = ctx.canonical_mnf(t);
        bool grouped = false;
        for (auto& p : pieces) {
            if (compare_mnf(p.first, m) != Ordering::equal) continue;
            p.second += c;
            grouped = true;
            break;
        }
        if (!grouped) pieces.emplace_back(std::move(m), c);
    }
    std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
        return compare_mnf(a.first, b.first) == Ordering::greater;
    });
    Anf out;
    out.runs = std::move(pieces);
    return out;
}

Ordering compare(const TermPtr& f, const TermPtr& g, std::uint64_t digit_cap) {
    return compare_anf(anf(f, digit_cap), anf(g, digit_cap));
}

// --- rendering --------------------------------------------------------------

namespace {

void render_mnf_into(const Mnf& f, std::string& out) {
    if (f.runs.empty()) {
        out += '1';
        return;
    }
    bool first = true;
    for (const auto& [fac, c] : f.runs) {
        if (!first) out += '*';
        first = false;
        if (fac.var_base) out += 'x';
        else out += to_string(fac.base);
        out += '^';
        if (fac.exp->runs.size() > 1 ||
            (fac.exp->runs.size() == 1 && fac.exp->runs[0].second > 1)) {
            out += '(';
            render_mnf_into(*fac.exp, out);
            out += ')';
        } else {
            render_mnf_into(*fac.exp, out);
        }
        if (c > 1) {
            out += "{x";
            out += to_string(c);
            out += '}';
        }
    }
}

} // namespace

std::string render_mnf(const Mnf& f) {
    std::string out;
    render_mnf_into(f, out);
    return out;
}

std::string render_anf(const Anf& f) {
    if (f.runs.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.runs) {
        if (!first) out += " + ";
        first = false;
        if (c > 1) {
            out += to_string(c);
            out += '*';
        }
        render_mnf_into(m, out);
    }
    return out;
}

} // namespace punct
