#include "dunkl/parser.hpp"

#include <cctype>
#include <stdexcept>

namespace dunkl {

namespace {

bool is_scalar_atom(std::string_view s) {
    return s == "i" || s == "sqrt2" || s == "sqrt3" || s == "sqrt6" || s == "kappa1" ||
           s == "kappa2";
}

struct Token {
    enum class Kind { number, ident, punct, end };
    Kind kind;
    std::string text;     // ident text or punct character
    unsigned long value;  // number
    std::size_t pos;      // 1-based offset of the first character
};

class Lexer {
public:
    explicit Lexer(std::string_view input) : in_(input) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[i_]))) ++i_;
        tok_.pos = i_ + 1;
        if (i_ >= in_.size()) {
            tok_.kind = Token::Kind::end;
            tok_.text = "end of input";
            return;
        }
        char c = in_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[i_]))) ++i_;
            tok_.kind = Token::Kind::number;
            tok_.text = std::string(in_.substr(start, i_ - start));
            try {
                tok_.value = std::stoul(tok_.text);
            } catch (const std::exception&) {
                throw ParseError(start + 1, "a smaller number",
                                 "number too large at position " + std::to_string(start + 1));
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < in_.size() && std::isalpha(static_cast<unsigned char>(in_[i_]))) ++i_;
            while (i_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[i_]))) ++i_;
            tok_.kind = Token::Kind::ident;
            tok_.text = std::string(in_.substr(start, i_ - start));
            return;
        }
        if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
            tok_.kind = Token::Kind::punct;
            tok_.text = std::string(1, c);
            ++i_;
            return;
        }
        throw ParseError(i_ + 1, "a token", "unexpected character '" + std::string(1, c) +
                                                "' at position " + std::to_string(i_ + 1));
    }

    std::string_view in_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(std::string_view input) : lex_(input) {}

    ExprPtr run() {
        ExprPtr e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::end)
            throw ParseError(t.pos, "'+', '-', '*' or end of input",
                             "trailing input at position " + std::to_string(t.pos));
        return e;
    }

private:
    static ExprPtr make(ExprNode n) { return std::make_shared<ExprNode>(std::move(n)); }

    bool punct(const char* c) const {
        return lex_.peek().kind == Token::Kind::punct && lex_.peek().text == c;
    }

    void expect_punct(const char* c, const char* what) {
        if (!punct(c))
            throw ParseError(lex_.peek().pos, what,
                             "expected " + std::string(what) + " at position " +
                                 std::to_string(lex_.peek().pos));
        lex_.take();
    }

    ExprPtr expr() {
        std::vector<ExprPtr> terms;
        bool lead_minus = false;
        if (punct("-")) {
            lex_.take();
            lead_minus = true;
        }
        ExprPtr first = term();
        if (lead_minus)
            first = make({ExprNode::Kind::negation, {}, {}, {first}, 0});
        terms.push_back(first);
        while (punct("+") || punct("-")) {
            bool minus = lex_.take().text == "-";
            ExprPtr t = term();
            if (minus) t = make({ExprNode::Kind::negation, {}, {}, {t}, 0});
            terms.push_back(t);
        }
        if (terms.size() == 1) return terms[0];
        return make({ExprNode::Kind::sum, {}, {}, std::move(terms), 0});
    }

    ExprPtr term() {
        std::vector<ExprPtr> factors{factor()};
        while (punct("*")) {
            lex_.take();
            factors.push_back(factor());
        }
        if (factors.size() == 1) return factors[0];
        return make({ExprNode::Kind::product, {}, {}, std::move(factors), 0});
    }

    ExprPtr factor() {
        ExprPtr b = base();
        if (!punct("^")) return b;
        lex_.take();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::number)
            throw ParseError(t.pos, "an integer exponent",
                             "expected an integer exponent at position " + std::to_string(t.pos));
        unsigned e = static_cast<unsigned>(lex_.take().value);
        return make({ExprNode::Kind::power, {}, {}, {b}, e});
    }

    ExprPtr base() {
        const Token t = lex_.peek();
        if (t.kind == Token::Kind::number) {
            lex_.take();
            Rational value(static_cast<long>(t.value));
            if (punct("/")) {
                lex_.take();
                const Token& d = lex_.peek();
                if (d.kind != Token::Kind::number)
                    throw ParseError(d.pos, "a denominator",
                                     "expected a denominator at position " + std::to_string(d.pos));
                Token den = lex_.take();
                if (den.value == 0)
                    throw ParseError(den.pos, "a nonzero denominator",
                                     "zero denominator at position " + std::to_string(den.pos));
                value = Rational(static_cast<long>(t.value), static_cast<long>(den.value));
            }
            return make({ExprNode::Kind::number, value, {}, {}, 0});
        }
        if (t.kind == Token::Kind::ident) {
            lex_.take();
            if (punct("(")) {
                if (t.text != "comm" && t.text != "acomm")
                    throw ParseError(t.pos, "comm or acomm",
                                     "'" + t.text + "' is not callable at position " +
                                         std::to_string(t.pos));
                lex_.take();
                std::vector<ExprPtr> args{expr()};
                while (punct(",")) {
                    lex_.take();
                    args.push_back(expr());
                }
                expect_punct(")", "',' or ')'");
                if (args.size() != 2)
                    throw ParseError(t.pos, "two arguments",
                                     t.text + " takes two arguments, got " +
                                         std::to_string(args.size()));
                return make({ExprNode::Kind::call, {}, t.text, std::move(args), 0});
            }
            if (is_scalar_atom(t.text)) return make({ExprNode::Kind::atom, {}, t.text, {}, 0});
            return make({ExprNode::Kind::name, {}, t.text, {}, 0});
        }
        if (t.kind == Token::Kind::punct && t.text == "(") {
            lex_.take();
            ExprPtr inner = expr();
            expect_punct(")", "',' or ')'");
            return inner;
        }
        throw ParseError(t.pos, "a name, a number or '('",
                         "expected a name, a number or '(' at position " + std::to_string(t.pos));
    }

    Lexer lex_;
};

// Rendering precedence: sum lowest, then product, then power/negation atoms.
enum class Prec { sum, product, tight };

Prec node_prec(const ExprNode& n) {
    switch (n.kind) {
    case ExprNode::Kind::sum: return Prec::sum;
    case ExprNode::Kind::product: return Prec::product;
    case ExprNode::Kind::negation: return Prec::sum;
    default: return Prec::tight;
    }
}

std::string render_at(const ExprPtr& e, Prec context) {
    std::string out;
    switch (e->kind) {
    case ExprNode::Kind::number:
        out = e->number.str();
        break;
    case ExprNode::Kind::atom:
    case ExprNode::Kind::name:
        out = e->text;
        break;
    case ExprNode::Kind::call:
        out = e->text + "(" + render_at(e->children[0], Prec::sum) + ", " +
              render_at(e->children[1], Prec::sum) + ")";
        break;
    case ExprNode::Kind::negation:
        out = "-" + render_at(e->children[0], Prec::product);
        break;
    case ExprNode::Kind::sum: {
        for (std::size_t k = 0; k < e->children.size(); ++k) {
            const ExprPtr& c = e->children[k];
            if (c->kind == ExprNode::Kind::negation) {
                out += k == 0 ? "-" : " - ";
                out += render_at(c->children[0], Prec::product);
            } else {
                if (k > 0) out += " + ";
                out += render_at(c, Prec::product);
            }
        }
        break;
    }
    case ExprNode::Kind::product: {
        for (std::size_t k = 0; k < e->children.size(); ++k) {
            if (k) out += "*";
            out += render_at(e->children[k], Prec::tight);
        }
        break;
    }
    case ExprNode::Kind::power: {
        std::string body = render_at(e->children[0], Prec::tight);
        if (e->children[0]->kind == ExprNode::Kind::power) body = "(" + body + ")";
        out = body + "^" + std::to_string(e->exponent);
        break;
    }
    }
    bool needs_parens = static_cast<int>(node_prec(*e)) < static_cast<int>(context);
    // A sum as a non-first summand is already guarded by the sign rendering;
    // the context passed in encodes that.
    if (needs_parens) out = "(" + out + ")";
    return out;
}

} // namespace

ExprPtr parse(std::string_view input) { return Parser(input).run(); }

std::string render(const ExprPtr& e) { return render_at(e, Prec::sum); }

bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case ExprNode::Kind::number:
        return a->number == b->number;
    case ExprNode::Kind::atom:
    case ExprNode::Kind::name:
        return a->text == b->text;
    case ExprNode::Kind::power:
        if (a->exponent != b->exponent) return false;
        break;
    case ExprNode::Kind::call:
        if (a->text != b->text) return false;
        break;
    default:
        break;
    }
    if (a->children.size() != b->children.size()) return false;
    for (std::size_t k = 0; k < a->children.size(); ++k)
        if (!equal(a->children[k], b->children[k])) return false;
    return true;
}

namespace {

RadicalComplex atom_value(const std::string& text) {
    if (text == "i") return RadicalComplex::i();
    if (text == "sqrt2") return RadicalComplex::sqrt2();
    if (text == "sqrt3") return RadicalComplex::sqrt3();
    return RadicalComplex::sqrt6();
}

ParamScalar scalar_of(const ExprPtr& e) {
    switch (e->kind) {
    case ExprNode::Kind::number:
        return ParamScalar(e->number);
    case ExprNode::Kind::atom:
        if (e->text == "kappa1") return ParamScalar::kappa1();
        if (e->text == "kappa2") return ParamScalar::kappa2();
        return ParamScalar(atom_value(e->text));
    case ExprNode::Kind::name:
    case ExprNode::Kind::call:
        throw std::invalid_argument("'" + (e->text.empty() ? std::string("expression") : e->text) +
                                    "' is not a scalar");
    case ExprNode::Kind::negation:
        return -scalar_of(e->children[0]);
    case ExprNode::Kind::sum: {
        ParamScalar acc;
        for (const auto& c : e->children) acc += scalar_of(c);
        return acc;
    }
    case ExprNode::Kind::product: {
        ParamScalar acc(1L);
        for (const auto& c : e->children) acc *= scalar_of(c);
        return acc;
    }
    case ExprNode::Kind::power:
        return scalar_of(e->children[0]).pow(e->exponent);
    }
    throw std::invalid_argument("not a scalar expression");
}

bool is_scalar_expr(const ExprPtr& e) {
    switch (e->kind) {
    case ExprNode::Kind::number:
    case ExprNode::Kind::atom:
        return true;
    case ExprNode::Kind::name:
    case ExprNode::Kind::call:
        return false;
    default:
        for (const auto& c : e->children)
            if (!is_scalar_expr(c)) return false;
        return true;
    }
}

} // namespace

OpPtr resolve_operator(const ExprPtr& e, const Catalogue& cat) {
    switch (e->kind) {
    case ExprNode::Kind::number:
    case ExprNode::Kind::atom:
        return op_scale(scalar_of(e), op_identity());
    case ExprNode::Kind::name:
        return cat.lookup(e->text);
    case ExprNode::Kind::call: {
        OpPtr a = resolve_operator(e->children[0], cat);
        OpPtr b = resolve_operator(e->children[1], cat);
        return e->text == "comm" ? op_comm(a, b) : op_acomm(a, b);
    }
    case ExprNode::Kind::negation:
        return op_neg(resolve_operator(e->children[0], cat));
    case ExprNode::Kind::sum: {
        std::vector<OpPtr> terms;
        terms.reserve(e->children.size());
        for (const auto& c : e->children) terms.push_back(resolve_operator(c, cat));
        return op_sum(std::move(terms));
    }
    case ExprNode::Kind::product: {
        // Scalar factors commute with everything; collect them into one scale.
        ParamScalar scale(1L);
        bool scaled = false;
        std::vector<OpPtr> ops;
        for (const auto& c : e->children) {
            if (is_scalar_expr(c)) {
                scale *= scalar_of(c);
                scaled = true;
            } else {
                ops.push_back(resolve_operator(c, cat));
            }
        }
        OpPtr body = ops.empty()    ? op_identity()
                     : ops.size() == 1 ? ops[0]
                                       : op_compose(std::move(ops));
        return scaled ? op_scale(scale, body) : body;
    }
    case ExprNode::Kind::power: {
        if (is_scalar_expr(e))
            return op_scale(scalar_of(e), op_identity());
        return op_pow(resolve_operator(e->children[0], cat), e->exponent);
    }
    }
    throw std::invalid_argument("unresolvable expression");
}

ParamScalar evaluate_scalar(const ExprPtr& e) { return scalar_of(e); }

namespace {

SpinorPolynomial spinor_mul(const SpinorPolynomial& a, const SpinorPolynomial& b, Signature sig) {
    SpinorPolynomial out;
    for (Blade ba : blade_order) {
        if (a.component(ba).is_zero()) continue;
        for (Blade bb : blade_order) {
            if (b.component(bb).is_zero()) continue;
            BladeProduct p = blade_mul(ba, bb, sig);
            XPolynomial prod = a.component(ba) * b.component(bb);
            if (p.sign < 0) prod = -prod;
            XPolynomial acc = out.component(p.blade) + prod;
            out.set_component(p.blade, std::move(acc));
        }
    }
    return out;
}

SpinorPolynomial spinor_of(const ExprPtr& e, Signature sig) {
    switch (e->kind) {
    case ExprNode::Kind::number:
    case ExprNode::Kind::atom:
        return SpinorPolynomial::from_poly(XPolynomial::constant(scalar_of(e)));
    case ExprNode::Kind::name: {
        const std::string& t = e->text;
        if (t == "x1" || t == "x2" || t == "x3")
            return SpinorPolynomial::from_poly(XPolynomial::variable(t[1] - '1'));
        if (t.size() >= 2 && t.size() <= 4 && t[0] == 'e') {
            Blade b = 0;
            char last = '0';
            bool ok = true;
            for (std::size_t k = 1; k < t.size(); ++k) {
                if (t[k] <= last || t[k] > '3') ok = false;
                last = t[k];
                if (ok) b |= static_cast<Blade>(1u << (t[k] - '1'));
            }
            if (ok) return SpinorPolynomial::basis(Monomial{}, b);
        }
        throw std::invalid_argument("'" + t + "' is not a spinor polynomial atom");
    }
    case ExprNode::Kind::call:
        throw std::invalid_argument("operator calls are not spinor polynomials");
    case ExprNode::Kind::negation:
        return -spinor_of(e->children[0], sig);
    case ExprNode::Kind::sum: {
        SpinorPolynomial acc;
        for (const auto& c : e->children) acc += spinor_of(c, sig);
        return acc;
    }
    case ExprNode::Kind::product: {
        SpinorPolynomial acc = SpinorPolynomial::from_poly(XPolynomial::constant(ParamScalar(1L)));
        for (const auto& c : e->children) acc = spinor_mul(acc, spinor_of(c, sig), sig);
        return acc;
    }
    case ExprNode::Kind::power: {
        SpinorPolynomial acc = SpinorPolynomial::from_poly(XPolynomial::constant(ParamScalar(1L)));
        SpinorPolynomial b = spinor_of(e->children[0], sig);
        for (unsigned k = 0; k < e->exponent; ++k) acc = spinor_mul(acc, b, sig);
        return acc;
    }
    }
    throw std::invalid_argument("not a spinor polynomial expression");
}

} // namespace

SpinorPolynomial evaluate_spinor(const ExprPtr& e, Signature sig) { return spinor_of(e, sig); }

} // namespace dunkl
