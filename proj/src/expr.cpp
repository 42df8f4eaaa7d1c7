#include "qrr/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "qrr/rogers_ramanujan.hpp"

namespace qrr {

namespace {

const std::set<std::string> kAtoms = {"f", "phi", "psi", "chi", "fm", "poch", "G", "H", "T", "R"};

struct Token {
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::string("^+-*/(),").find(c) != std::string::npos) {
            out.push_back({std::string(1, c), i});
            ++i;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    return out;
}

struct Parser {
    const std::vector<Token>& t;
    size_t i = 0;
    size_t end_pos;

    const Token* peek() const { return i < t.size() ? &t[i] : nullptr; }
    Token next() {
        if (i >= t.size()) throw ParseError("unexpected end of input", end_pos);
        return t[i++];
    }
    void expect(const std::string& x) {
        Token tok = next();
        if (tok.text != x) throw ParseError("expected '" + x + "', got '" + tok.text + "'", tok.pos);
    }
    bool peek_is(const std::string& x) const {
        const Token* p = peek();
        return p && p->text == x;
    }

    ExprPtr parse_expr();
    ExprPtr parse_term();
    ExprPtr parse_unary();
    ExprPtr parse_factor();
    ExprPtr parse_primary();
    AtomArg parse_marg();
};

ExprPtr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

ExprPtr binary(ExprNode::Kind k, ExprPtr a, ExprPtr b) {
    ExprNode n;
    n.kind = k;
    n.a = std::move(a);
    n.b = std::move(b);
    return node(std::move(n));
}

ExprPtr Parser::parse_expr() {
    ExprPtr e = parse_term();
    while (peek_is("+") || peek_is("-")) {
        bool plus = next().text == "+";
        e = binary(plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub, e, parse_term());
    }
    return e;
}

ExprPtr Parser::parse_term() {
    ExprPtr e = parse_unary();
    while (peek_is("*") || peek_is("/")) {
        bool star = next().text == "*";
        e = binary(star ? ExprNode::Kind::Mul : ExprNode::Kind::Div, e, parse_unary());
    }
    return e;
}

ExprPtr Parser::parse_unary() {
    if (peek_is("-")) {
        next();
        ExprNode n;
        n.kind = ExprNode::Kind::Neg;
        n.a = parse_unary();
        return node(std::move(n));
    }
    return parse_factor();
}

ExprPtr Parser::parse_factor() {
    ExprPtr e = parse_primary();
    while (peek_is("^")) {
        next();
        int64_t sign = 1;
        if (peek_is("-")) {
            next();
            sign = -1;
        }
        Token tok = next();
        if (tok.text.empty() || !std::isdigit(static_cast<unsigned char>(tok.text[0])))
            throw ParseError("integer power expected", tok.pos);
        ExprNode n;
        n.kind = ExprNode::Kind::Pow;
        n.a = e;
        n.exponent = sign * std::stoll(tok.text);
        e = node(std::move(n));
    }
    return e;
}

AtomArg Parser::parse_marg() {
    AtomArg a;
    if (peek_is("-")) {
        next();
        a.sign = -1;
    }
    expect("q");
    if (peek_is("^")) {
        next();
        Token tok = next();
        if (tok.text.empty() || !std::isdigit(static_cast<unsigned char>(tok.text[0])))
            throw ParseError("integer exponent expected in atom argument", tok.pos);
        a.k = std::stoll(tok.text);
    }
    if (a.k < 1) throw ParseError("atom argument power must be >= 1", end_pos);
    return a;
}

ExprPtr Parser::parse_primary() {
    const Token* p = peek();
    if (!p) throw ParseError("unexpected end of input", end_pos);
    if (std::isdigit(static_cast<unsigned char>(p->text[0]))) {
        Token tok = next();
        ExprNode n;
        n.kind = ExprNode::Kind::IntLit;
        n.value = Coef(tok.text);
        return node(std::move(n));
    }
    if (p->text == "(") {
        next();
        ExprPtr e = parse_expr();
        expect(")");
        return e;
    }
    if (p->text == "q") {
        next();
        ExprNode n;
        n.kind = ExprNode::Kind::QPow;
        n.qnum = 5;
        if (peek_is("^")) {
            next();
            if (peek_is("(")) {
                next();
                int64_t sign = 1;
                if (peek_is("-")) {
                    next();
                    sign = -1;
                }
                Token num = next();
                if (!std::isdigit(static_cast<unsigned char>(num.text[0])))
                    throw ParseError("numerator expected", num.pos);
                expect("/");
                Token den = next();
                if (den.text != "5")
                    throw ParseError("only fifths are supported in fractional powers", den.pos);
                expect(")");
                n.qnum = sign * std::stoll(num.text);
            } else {
                int64_t sign = 1;
                if (peek_is("-")) {
                    next();
                    sign = -1;
                }
                Token tok = next();
                if (!std::isdigit(static_cast<unsigned char>(tok.text[0])))
                    throw ParseError("integer power expected", tok.pos);
                n.qnum = 5 * sign * std::stoll(tok.text);
            }
        }
        return node(std::move(n));
    }
    if (p->text == "negq") {
        next();
        expect("(");
        ExprNode n;
        n.kind = ExprNode::Kind::NegQ;
        n.a = parse_expr();
        expect(")");
        return node(std::move(n));
    }
    if (std::isalpha(static_cast<unsigned char>(p->text[0]))) {
        Token name = next();
        if (!kAtoms.count(name.text)) throw UnknownAtom(name.text);
        expect("(");
        ExprNode n;
        n.kind = ExprNode::Kind::Atom;
        n.atom = name.text;
        n.args.push_back(parse_marg());
        if (peek_is(",")) {
            next();
            n.args.push_back(parse_marg());
        }
        expect(")");
        size_t want = (n.atom == "f" || n.atom == "poch") ? 2 : 1;
        if (n.args.size() != want)
            throw ParseError(n.atom + " takes " + std::to_string(want) + " argument(s)", name.pos);
        return node(std::move(n));
    }
    throw ParseError("unexpected token '" + p->text + "'", p->pos);
}

}  // namespace

ExprPtr parse(const std::string& text) {
    std::vector<Token> toks = tokenize(text);
    Parser p{toks, 0, text.size()};
    ExprPtr e = p.parse_expr();
    if (p.peek()) throw ParseError("trailing input '" + p.peek()->text + "'", p.peek()->pos);
    return e;
}

namespace {

// precedence levels: 1 add/sub, 2 mul/div, 3 unary minus, 4 pow, 5 primary
int precedence(const ExprPtr& e) {
    switch (e->kind) {
        case ExprNode::Kind::Add:
        case ExprNode::Kind::Sub:
            return 1;
        case ExprNode::Kind::Mul:
        case ExprNode::Kind::Div:
            return 2;
        case ExprNode::Kind::Neg:
            return 3;
        case ExprNode::Kind::Pow:
            return 4;
        default:
            return 5;
    }
}

std::string marg_str(const AtomArg& a) {
    std::string s = a.sign < 0 ? "-q" : "q";
    if (a.k != 1) s += "^" + std::to_string(a.k);
    return s;
}

std::string print_at(const ExprPtr& e, int min_prec) {
    std::string s;
    switch (e->kind) {
        case ExprNode::Kind::IntLit:
            s = e->value.str();
            break;
        case ExprNode::Kind::QPow:
            if (e->qnum == 5)
                s = "q";
            else if (e->qnum % 5 == 0)
                s = "q^" + std::to_string(e->qnum / 5);
            else
                s = "q^(" + std::to_string(e->qnum) + "/5)";
            break;
        case ExprNode::Kind::Atom: {
            s = e->atom + "(" + marg_str(e->args[0]);
            if (e->args.size() > 1) s += "," + marg_str(e->args[1]);
            s += ")";
            break;
        }
        case ExprNode::Kind::NegQ:
            s = "negq(" + print_at(e->a, 0) + ")";
            break;
        case ExprNode::Kind::Neg:
            s = "-" + print_at(e->a, 3);
            break;
        case ExprNode::Kind::Add:
            s = print_at(e->a, 1) + " + " + print_at(e->b, 2);
            break;
        case ExprNode::Kind::Sub:
            s = print_at(e->a, 1) + " - " + print_at(e->b, 2);
            break;
        case ExprNode::Kind::Mul:
            s = print_at(e->a, 2) + "*" + print_at(e->b, 3);
            break;
        case ExprNode::Kind::Div:
            s = print_at(e->a, 2) + "/" + print_at(e->b, 3);
            break;
        case ExprNode::Kind::Pow:
            s = print_at(e->a, 5) + "^" + std::to_string(e->exponent);
            break;
    }
    if (precedence(e) < min_prec) return "(" + s + ")";
    return s;
}

}  // namespace

std::string print_canonical(const ExprPtr& e) { return print_at(e, 0); }

bool structurally_equal(const ExprPtr& x, const ExprPtr& y) {
    if (x->kind != y->kind) return false;
    switch (x->kind) {
        case ExprNode::Kind::IntLit:
            return x->value == y->value;
        case ExprNode::Kind::QPow:
            return x->qnum == y->qnum;
        case ExprNode::Kind::Atom:
            if (x->atom != y->atom || x->args.size() != y->args.size()) return false;
            for (size_t i = 0; i < x->args.size(); ++i)
                if (x->args[i].sign != y->args[i].sign || x->args[i].k != y->args[i].k) return false;
            return true;
        case ExprNode::Kind::NegQ:
        case ExprNode::Kind::Neg:
            return structurally_equal(x->a, y->a);
        case ExprNode::Kind::Pow:
            return x->exponent == y->exponent && structurally_equal(x->a, y->a);
        default:
            return structurally_equal(x->a, y->a) && structurally_equal(x->b, y->b);
    }
}

bool is_integral(const ExprPtr& e) {
    switch (e->kind) {
        case ExprNode::Kind::IntLit:
            return true;
        case ExprNode::Kind::QPow:
            return e->qnum % 5 == 0;
        case ExprNode::Kind::Atom:
            return e->atom != "R";
        case ExprNode::Kind::NegQ:
        case ExprNode::Kind::Neg:
        case ExprNode::Kind::Pow:
            return is_integral(e->a);
        default:
            return is_integral(e->a) && is_integral(e->b);
    }
}

namespace {

// static pre-pass: (val, def) per node, in fifth-units.  val is a lower bound
// on the q-order; def estimates how much the achieved bound falls short of
// the working bound.  The evaluate() retry loop makes the final result sound
// regardless of estimate quality.
struct ValDef {
    int64_t val;
    int64_t def;
};

int64_t theta_min_exponent(int64_t ea, int64_t eb) {
    int64_t best = 0;
    for (int64_t n = -8; n <= 8; ++n)
        best = std::min(best, ea * (n * (n + 1) / 2) + eb * (n * (n - 1) / 2));
    return best;
}

ValDef analyze(const ExprPtr& e) {
    switch (e->kind) {
        case ExprNode::Kind::IntLit:
            return {0, 0};
        case ExprNode::Kind::QPow:
            return {e->qnum, 0};
        case ExprNode::Kind::Atom: {
            if (e->atom == "R") return {e->args[0].k, 0};
            if (e->atom == "f")
                return {theta_min_exponent(5 * e->args[0].k, 5 * e->args[1].k), 0};
            return {0, 0};
        }
        case ExprNode::Kind::NegQ:
        case ExprNode::Kind::Neg:
            return analyze(e->a);
        case ExprNode::Kind::Add:
        case ExprNode::Kind::Sub: {
            ValDef x = analyze(e->a), y = analyze(e->b);
            return {std::min(x.val, y.val), std::max(x.def, y.def)};
        }
        case ExprNode::Kind::Mul: {
            ValDef x = analyze(e->a), y = analyze(e->b);
            return {x.val + y.val, std::max(x.def - y.val, y.def - x.val)};
        }
        case ExprNode::Kind::Div: {
            ValDef x = analyze(e->a), y = analyze(e->b);
            ValDef inv{-y.val, y.def + 2 * y.val};
            return {x.val + inv.val, std::max(x.def - inv.val, inv.def - x.val)};
        }
        case ExprNode::Kind::Pow: {
            ValDef x = analyze(e->a);
            int64_t n = e->exponent;
            if (n < 0) {
                x = {-x.val, x.def + 2 * x.val};
                n = -n;
            }
            if (n == 0) return {0, x.def};
            return {n * x.val, x.def - (n - 1) * x.val};
        }
    }
    return {0, 0};
}

Series eval_single_atom(const std::string& name, const AtomArg& arg, int64_t N, int denom) {
    int64_t k = arg.k;
    int64_t nb = (N + k - 1) / k;  // base bound so substitution reaches >= N
    Series base;
    if (name == "fm")
        base = fm(1, nb, denom);
    else if (name == "phi")
        base = phi(1, nb, denom);
    else if (name == "psi")
        base = psi(1, nb, denom);
    else if (name == "chi")
        base = chi(1, nb, denom);
    else if (name == "G")
        base = G(1, nb, denom);
    else if (name == "H")
        base = H(1, nb, denom);
    else if (name == "T")
        base = T(1, nb, denom);
    else if (name == "R") {
        if (arg.sign < 0)
            throw FractionalExponent("R(-q^k) requires a fractional-power branch choice");
        if (denom != 5) throw FractionalExponent("R requires the q^(1/5) lattice");
        // R(q^k) = q^(k/5) T(q^k), assembled directly on the lattice
        int64_t nbt = (std::max<int64_t>(N - k, 1) + k - 1) / k;
        Series body = substitute_power(T(1, nbt, denom), k);
        return crop(mul(monomial(1, k, N + k + 1, denom), body), N);
    } else
        throw UnknownAtom(name);
    if (arg.sign < 0) base = negate_q(base);
    return crop(substitute_power(base, k), N);
}

Series eval_raw(const ExprPtr& e, int64_t N, int denom) {
    switch (e->kind) {
        case ExprNode::Kind::IntLit:
            return const_series(e->value, N, denom);
        case ExprNode::Kind::QPow: {
            int64_t idx = e->qnum * denom / 5;
            if (e->qnum * denom % 5 != 0)
                throw FractionalExponent("fractional q power off the working lattice");
            return monomial(1, idx, std::max(N, idx + 1), denom);
        }
        case ExprNode::Kind::Atom: {
            if (e->atom == "f") {
                return theta_sum_idx(e->args[0].sign, e->args[0].k * denom, e->args[1].sign,
                                     e->args[1].k * denom, N, denom);
            }
            if (e->atom == "poch") {
                if (e->args[1].sign < 0)
                    throw ParseError("poch modulus argument must be positive", 0);
                return pochhammer_idx(e->args[0].sign, e->args[0].k * denom,
                                      e->args[1].k * denom, N, denom);
            }
            return eval_single_atom(e->atom, e->args[0], N, denom);
        }
        case ExprNode::Kind::NegQ:
            return negate_q(eval_raw(e->a, N, denom));
        case ExprNode::Kind::Neg:
            return neg(eval_raw(e->a, N, denom));
        case ExprNode::Kind::Add:
            return add(eval_raw(e->a, N, denom), eval_raw(e->b, N, denom));
        case ExprNode::Kind::Sub:
            return sub(eval_raw(e->a, N, denom), eval_raw(e->b, N, denom));
        case ExprNode::Kind::Mul:
            return mul(eval_raw(e->a, N, denom), eval_raw(e->b, N, denom));
        case ExprNode::Kind::Div:
            return div(eval_raw(e->a, N, denom), eval_raw(e->b, N, denom));
        case ExprNode::Kind::Pow:
            return pow(eval_raw(e->a, N, denom), e->exponent);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Series evaluate(const ExprPtr& e, int64_t N_fifths) {
    int denom = is_integral(e) ? 1 : 5;
    ValDef vd = analyze(e);
    int64_t W = N_fifths + std::max<int64_t>(vd.def, 0);
    for (int tries = 0; tries < 12; ++tries) {
        int64_t Nd = (W * denom + 4) / 5;  // working bound in lattice units
        Series s = eval_raw(e, Nd, denom);
        int64_t achieved_fifths = s.order_bound * 5 / denom;
        if (achieved_fifths >= N_fifths) return crop(s, (N_fifths * denom + 4) / 5);
        W += N_fifths - achieved_fifths;
    }
    throw std::logic_error("evaluation bound did not converge");
}

VerifyOutcome verify_pair(const ExprPtr& lhs, const ExprPtr& rhs, int64_t N_fifths) {
    ExprPtr diff = [&] {
        ExprNode n;
        n.kind = ExprNode::Kind::Sub;
        n.a = lhs;
        n.b = rhs;
        return std::make_shared<const ExprNode>(std::move(n));
    }();
    Series d = evaluate(diff, N_fifths);
    return is_zero(d);
}

}  // namespace qrr
