#include "punct/levitz.hpp"

#include "punct/errors.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace punct {

namespace {

TermPtr make_node(TermKind k, Nat base, TermPtr l, TermPtr r) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->base = std::move(base);
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

std::uint64_t cap_bits(std::uint64_t digit_cap) {
    // log2(10) < 3.3220, so this over-allows by < 0.01%.
    return digit_cap * 3322 / 1000 + 2;
}

} // namespace

TermPtr t_zero() {
    static const TermPtr t = make_node(TermKind::zero, 0, nullptr, nullptr);
    return t;
}

TermPtr t_one() {
    static const TermPtr t = make_node(TermKind::one, 0, nullptr, nullptr);
    return t;
}

TermPtr t_var() {
    static const TermPtr t = make_node(TermKind::var, 0, nullptr, nullptr);
    return t;
}

TermPtr t_sum(TermPtr a, TermPtr b) {
    return make_node(TermKind::sum, 0, std::move(a), std::move(b));
}

TermPtr t_prod(TermPtr a, TermPtr b) {
    return make_node(TermKind::prod, 0, std::move(a), std::move(b));
}

TermPtr t_const_pow(Nat base, TermPtr exp) {
    if (base < 1) throw UsageError("power base must be at least 1");
    return make_node(TermKind::const_pow, std::move(base), std::move(exp), nullptr);
}

TermPtr t_var_pow(TermPtr exp) {
    return make_node(TermKind::var_pow, 0, std::move(exp), nullptr);
}

TermPtr t_numeral(const Nat& n) {
    if (n == 0) return t_zero();
    TermPtr acc = t_one();
    for (Nat i = 1; i < n; ++i) acc = t_sum(acc, t_one());
    return acc;
}

TermPtr t_scaled(TermPtr t, const Nat& c) {
    if (c < 1) throw UsageError("scaled copy count must be at least 1");
    if (c == 1) return t;
    Nat half = c / 2;
    TermPtr h = t_scaled(t, half);
    TermPtr doubled = t_sum(h, h);
    if ((c & 1) != 0) return t_sum(doubled, std::move(t));
    return doubled;
}

bool is_zero(const TermPtr& f) {
    switch (f->kind) {
    case TermKind::zero: return true;
    case TermKind::one:
    case TermKind::var: return false;
    case TermKind::sum: return is_zero(f->left) && is_zero(f->right);
    case TermKind::prod: return is_zero(f->left) || is_zero(f->right);
    case TermKind::const_pow: return false; // n >= 1
    case TermKind::var_pow: return false;   // value 1 at x = 1
    }
    return false;
}

bool is_one(const TermPtr& f) {
    switch (f->kind) {
    case TermKind::zero: return false;
    case TermKind::one: return true;
    case TermKind::var: return false;
    case TermKind::sum:
        return (is_zero(f->left) && is_one(f->right)) ||
               (is_one(f->left) && is_zero(f->right));
    case TermKind::prod: return is_one(f->left) && is_one(f->right);
    case TermKind::const_pow: return f->base == 1 || is_zero(f->left);
    case TermKind::var_pow: return is_zero(f->left); // x^0 = 1, with 0^0 = 1
    }
    return false;
}

// --- parsing -------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    int depth = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

    Nat read_nat() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a numeral");
        if (pos - start > 6) fail("numeral too large");
        return Nat(text.substr(start, pos - start));
    }

    TermPtr parse_sum() {
        TermPtr acc = parse_prod();
        while (eat('+')) acc = t_sum(std::move(acc), parse_prod());
        return acc;
    }

    TermPtr parse_prod() {
        TermPtr acc = parse_atom();
        while (eat('*')) acc = t_prod(std::move(acc), parse_atom());
        return acc;
    }

    TermPtr parse_atom() {
        skip_ws();
        if (++depth > 2000) fail("expression nested too deeply");
        TermPtr out;
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            out = parse_sum();
            if (!eat(')')) fail("expected ')'");
        } else if (c == 'x') {
            ++pos;
            if (eat('^')) out = t_var_pow(parse_atom());
            else out = t_var();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            Nat n = read_nat();
            if (eat('^')) {
                if (n == 0) fail("0 cannot be a power base");
                out = t_const_pow(std::move(n), parse_atom());
            } else {
                out = t_numeral(n);
            }
        } else {
            fail("unexpected character");
        }
        --depth;
        return out;
    }
};

} // namespace

TermPtr parse_term(const std::string& text) {
    Parser p{text};
    TermPtr t = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return t;
}

// --- rendering -----------------------------------------------------------

namespace {

bool is_numeral_shape(const TermPtr& f) {
    switch (f->kind) {
    case TermKind::zero:
    case TermKind::one: return true;
    case TermKind::var: return false;
    case TermKind::sum:
    case TermKind::prod: return is_numeral_shape(f->left) && is_numeral_shape(f->right);
    case TermKind::const_pow: return is_numeral_shape(f->left);
    case TermKind::var_pow: return false;
    }
    return false;
}

// Precedence: 0 sum, 1 prod, 2 atom.
void render_into(const TermPtr& f, int ctx, std::string& out);

void render_wrapped(const TermPtr& f, int prec, int ctx, std::string& out) {
    bool parens = prec < ctx;
    if (parens) out += '(';
    render_into(f, prec, out);
    if (parens) out += ')';
}

void render_into(const TermPtr& f, int ctx, std::string& out) {
    if (is_numeral_shape(f)) {
        // Constant subtrees print as decimals; they are small by the
        // numeral parse limit but can be checked cheaply through eval.
        out += to_string(eval(f, 0));
        return;
    }
    switch (f->kind) {
    case TermKind::zero: out += '0'; return;
    case TermKind::one: out += '1'; return;
    case TermKind::var: out += 'x'; return;
    case TermKind::sum:
        if (ctx > 0) out += '(';
        render_into(f->left, 0, out);
        out += " + ";
        render_into(f->right, 0, out);
        if (ctx > 0) out += ')';
        return;
    case TermKind::prod:
        if (ctx > 1) out += '(';
        render_into(f->left, 1, out);
        out += " * ";
        render_into(f->right, 1, out);
        if (ctx > 1) out += ')';
        return;
    case TermKind::const_pow:
        out += to_string(f->base);
        out += '^';
        render_wrapped(f->left, 2, 2, out);
        return;
    case TermKind::var_pow:
        out += "x^";
        render_wrapped(f->left, 2, 2, out);
        return;
    }
}

} // namespace

std::string render(const TermPtr& f) {
    std::string out;
    render_into(f, 0, out);
    return out;
}

// --- evaluation ------------------------------------------------------------

namespace {

struct Evaluator {
    const Nat& x;
    std::uint64_t bits;
    std::map<const Term*, Nat> memo;

    void check(const Nat& v) {
        if (bit_width(v) > bits) throw EvalOverflow("value exceeds the digit cap");
    }

    Nat power(const Nat& base, const Nat& exp) {
        if (base == 0) return exp == 0 ? Nat(1) : Nat(0);
        if (base == 1) return 1;
        // bits(base^exp) <= exp * bits(base); reject before computing.
        if (exp * bit_width(base) > Nat(bits) * 2) throw EvalOverflow("power exceeds the digit cap");
        Nat r = nat_pow(base, static_cast<std::uint64_t>(exp));
        check(r);
        return r;
    }

    Nat go(const TermPtr& f) {
        auto it = memo.find(f.get());
        if (it != memo.end()) return it->second;
        Nat v;
        switch (f->kind) {
        case TermKind::zero: v = 0; break;
        case TermKind::one: v = 1; break;
        case TermKind::var: v = x; break;
        case TermKind::sum: v = go(f->left) + go(f->right); check(v); break;
        case TermKind::prod: {
            Nat a = go(f->left);
            Nat b = go(f->right);
            if (bit_width(a) + bit_width(b) > bits + 1)
                throw EvalOverflow("product exceeds the digit cap");
            v = a * b;
            check(v);
            break;
        }
        case TermKind::const_pow: v = power(f->base, go(f->left)); break;
        case TermKind::var_pow: v = power(x, go(f->left)); break;
        }
        memo.emplace(f.get(), v);
        return v;
    }
};

} // namespace

Nat eval(const TermPtr& f, const Nat& x, std::uint64_t digit_cap) {
    Evaluator ev{x, cap_bits(digit_cap), {}};
    return ev.go(f);
}

// --- numbering -------------------------------------------------------------

namespace {

struct Encoder {
    std::uint64_t bits;
    std::map<const Term*, Nat> memo;

    Nat power(const Nat& base, const Nat& exp) {
        if (exp * bit_width(base) > Nat(bits) * 2)
            throw CodeOverflow("term code exceeds the digit cap");
        Nat r = nat_pow(base, static_cast<std::uint64_t>(exp));
        if (bit_width(r) > bits) throw CodeOverflow("term code exceeds the digit cap");
        return r;
    }

    Nat pair(unsigned pa, const Nat& a, unsigned pb, const Nat& b) {
        Nat r = power(pa, a + 1) * power(pb, b + 1);
        if (bit_width(r) > bits) throw CodeOverflow("term code exceeds the digit cap");
        return r;
    }

    Nat go(const TermPtr& f) {
        auto it = memo.find(f.get());
        if (it != memo.end()) return it->second;
        Nat v;
        switch (f->kind) {
        case TermKind::zero: v = 0; break;
        case TermKind::one: v = 1; break;
        case TermKind::var: v = power(11, 2); break; // x = x^1
        case TermKind::sum: v = pair(2, go(f->left), 3, go(f->right)); break;
        case TermKind::prod: v = pair(5, go(f->left), 7, go(f->right)); break;
        case TermKind::var_pow: v = power(11, go(f->left) + 1); break;
        case TermKind::const_pow: {
            Nat e = go(f->left);
            v = power(13, f->base) * power(17, e + 1);
            if (bit_width(v) > bits) throw CodeOverflow("term code exceeds the digit cap");
            break;
        }
        }
        memo.emplace(f.get(), v);
        return v;
    }
};

} // namespace

Nat encode(const TermPtr& f, std::uint64_t digit_cap) {
    Encoder en{cap_bits(digit_cap), {}};
    return en.go(f);
}

} // namespace punct
