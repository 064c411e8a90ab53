#include "ihz/circuit.hpp"

#include <algorithm>
#include <cctype>

namespace ihz {

namespace {

Circuit node(CircuitNode::Op op) { return std::make_shared<CircuitNode>(op); }

} // namespace

Circuit gen(GenKind k) {
    auto n = std::make_shared<CircuitNode>(CircuitNode::Op::Gen);
    n->kind = k;
    return n;
}

Circuit amp(Int k) {
    auto n = std::make_shared<CircuitNode>(CircuitNode::Op::Gen);
    n->kind = GenKind::Amp;
    n->scalar = std::move(k);
    return n;
}

Circuit coamp(Int k) {
    auto n = std::make_shared<CircuitNode>(CircuitNode::Op::Gen);
    n->kind = GenKind::Coamp;
    n->scalar = std::move(k);
    return n;
}

Circuit id(size_t n) {
    auto c = std::make_shared<CircuitNode>(CircuitNode::Op::Id);
    c->width = n;
    return c;
}

Circuit sym() { return node(CircuitNode::Op::Sym); }

Circuit seq(Circuit a, Circuit b) {
    auto n = std::make_shared<CircuitNode>(CircuitNode::Op::Seq);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

Circuit tensor(Circuit a, Circuit b) {
    auto n = std::make_shared<CircuitNode>(CircuitNode::Op::Tensor);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

Interface gen_interface(GenKind k) {
    switch (k) {
    case GenKind::Add: return {2, 1};
    case GenKind::Zero: return {0, 1};
    case GenKind::Dup: return {1, 2};
    case GenKind::Del: return {1, 0};
    case GenKind::Amp: return {1, 1};
    case GenKind::Coadd: return {1, 2};
    case GenKind::Cozero: return {1, 0};
    case GenKind::Codup: return {2, 1};
    case GenKind::Codel: return {0, 1};
    case GenKind::Coamp: return {1, 1};
    }
    throw TypeError("unknown generator");
}

Interface typecheck(const Circuit& c) {
    switch (c->op) {
    case CircuitNode::Op::Gen:
        return gen_interface(c->kind);
    case CircuitNode::Op::Id:
        return {c->width, c->width};
    case CircuitNode::Op::Sym:
        return {2, 2};
    case CircuitNode::Op::Seq: {
        Interface ia = typecheck(c->a);
        Interface ib = typecheck(c->b);
        if (ia.coarity != ib.arity)
            throw TypeError("cannot compose '" + print_circuit(c->a) + "' : " + ia.str() +
                            " with '" + print_circuit(c->b) + "' : " + ib.str());
        return {ia.arity, ib.coarity};
    }
    case CircuitNode::Op::Tensor: {
        Interface ia = typecheck(c->a);
        Interface ib = typecheck(c->b);
        return {ia.arity + ib.arity, ia.coarity + ib.coarity};
    }
    }
    throw TypeError("unknown circuit node");
}

bool structural_equal(const Circuit& a, const Circuit& b) {
    if (a.get() == b.get())
        return true;
    if (a->op != b->op)
        return false;
    switch (a->op) {
    case CircuitNode::Op::Gen:
        return a->kind == b->kind && a->scalar == b->scalar;
    case CircuitNode::Op::Id:
        return a->width == b->width;
    case CircuitNode::Op::Sym:
        return true;
    case CircuitNode::Op::Seq:
    case CircuitNode::Op::Tensor:
        return structural_equal(a->a, b->a) && structural_equal(a->b, b->b);
    }
    return false;
}

// --- concrete syntax ---------------------------------------------------

namespace {

struct Token {
    enum class Kind { Ident, Integer, Semi, Star, LParen, RParen, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        if (pos_ >= text_.size())
            return {Token::Kind::End, "", line_, col_};
        int l = line_, c = col_;
        char ch = text_[pos_];
        if (ch == ';') { advance(); return {Token::Kind::Semi, ";", l, c}; }
        if (ch == '*') { advance(); return {Token::Kind::Star, "*", l, c}; }
        if (ch == '(') { advance(); return {Token::Kind::LParen, "(", l, c}; }
        if (ch == ')') { advance(); return {Token::Kind::RParen, ")", l, c}; }
        if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
            std::string s(1, ch);
            advance();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                s += text_[pos_];
                advance();
            }
            if (s == "-")
                throw ParseError("stray '-'", l, c);
            return {Token::Kind::Integer, s, l, c};
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                s += text_[pos_];
                advance();
            }
            return {Token::Kind::Ident, s, l, c};
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
    }

private:
    void skip_ws() {
        while (pos_ < text_.size()) {
            char ch = text_[pos_];
            if (ch == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
                advance();
            } else {
                break;
            }
        }
    }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { bump(); }

    Circuit parse() {
        Circuit c = circuit();
        if (tok_.kind != Token::Kind::End)
            throw ParseError("trailing input '" + tok_.text + "'", tok_.line, tok_.col);
        return c;
    }

private:
    void bump() { tok_ = lex_.next(); }

    bool eat(Token::Kind k) {
        if (tok_.kind != k)
            return false;
        bump();
        return true;
    }

    void expect(Token::Kind k, const char* what) {
        if (tok_.kind != k)
            throw ParseError(std::string("expected ") + what + ", got '" + tok_.text + "'",
                             tok_.line, tok_.col);
        bump();
    }

    Circuit circuit() {
        Circuit c = term();
        while (eat(Token::Kind::Semi))
            c = seq(c, term());
        return c;
    }

    Circuit term() {
        Circuit c = factor();
        while (eat(Token::Kind::Star))
            c = tensor(c, factor());
        return c;
    }

    Circuit factor() {
        if (eat(Token::Kind::LParen)) {
            Circuit c = circuit();
            expect(Token::Kind::RParen, "')'");
            return c;
        }
        return atom();
    }

    Int scalar_arg() {
        expect(Token::Kind::LParen, "'('");
        if (tok_.kind != Token::Kind::Integer)
            throw ParseError("expected integer, got '" + tok_.text + "'", tok_.line, tok_.col);
        Int k = parse_int(tok_.text);
        bump();
        expect(Token::Kind::RParen, "')'");
        return k;
    }

    Circuit atom() {
        if (tok_.kind != Token::Kind::Ident)
            throw ParseError("expected atom, got '" + tok_.text + "'", tok_.line, tok_.col);
        std::string name = tok_.text;
        int l = tok_.line, c = tok_.col;
        bump();
        if (name == "id") {
            if (tok_.kind == Token::Kind::LParen) {
                Int n = scalar_arg();
                if (n < 0)
                    throw ParseError("negative width in id(...)", l, c);
                return id(static_cast<size_t>(n));
            }
            return id(1);
        }
        if (name == "sym") return sym();
        if (name == "add") return gen(GenKind::Add);
        if (name == "zero") return gen(GenKind::Zero);
        if (name == "dup") return gen(GenKind::Dup);
        if (name == "del") return gen(GenKind::Del);
        if (name == "coadd") return gen(GenKind::Coadd);
        if (name == "cozero") return gen(GenKind::Cozero);
        if (name == "codup") return gen(GenKind::Codup);
        if (name == "codel") return gen(GenKind::Codel);
        if (name == "neg") return amp(Int(-1));
        if (name == "amp") return amp(scalar_arg());
        if (name == "coamp") return coamp(scalar_arg());
        throw ParseError("unknown atom '" + name + "'", l, c);
    }

    Lexer lex_;
    Token tok_;
};

// Seq = 1, Tensor = 2, atoms = 3; equal precedence needs parentheses on
// the right child only (both operators fold left).
std::string render(const Circuit& c, int parent_prec, bool right_child) {
    int prec;
    std::string s;
    switch (c->op) {
    case CircuitNode::Op::Gen:
        prec = 3;
        switch (c->kind) {
        case GenKind::Add: s = "add"; break;
        case GenKind::Zero: s = "zero"; break;
        case GenKind::Dup: s = "dup"; break;
        case GenKind::Del: s = "del"; break;
        case GenKind::Coadd: s = "coadd"; break;
        case GenKind::Cozero: s = "cozero"; break;
        case GenKind::Codup: s = "codup"; break;
        case GenKind::Codel: s = "codel"; break;
        case GenKind::Amp: s = "amp(" + to_string(c->scalar) + ")"; break;
        case GenKind::Coamp: s = "coamp(" + to_string(c->scalar) + ")"; break;
        }
        break;
    case CircuitNode::Op::Id:
        prec = 3;
        s = c->width == 1 ? "id" : "id(" + std::to_string(c->width) + ")";
        break;
    case CircuitNode::Op::Sym:
        prec = 3;
        s = "sym";
        break;
    case CircuitNode::Op::Seq:
        prec = 1;
        s = render(c->a, 1, false) + " ; " + render(c->b, 1, true);
        break;
    case CircuitNode::Op::Tensor:
        prec = 2;
        s = render(c->a, 2, false) + " * " + render(c->b, 2, true);
        break;
    default:
        throw Error("unknown circuit node");
    }
    if (prec < parent_prec || (prec == parent_prec && right_child))
        return "(" + s + ")";
    return s;
}

} // namespace

Circuit parse_circuit(std::string_view text) { return Parser(text).parse(); }

std::string print_circuit(const Circuit& c) { return render(c, 0, false); }

// --- syntactic transforms ----------------------------------------------

Circuit mirror(const Circuit& c) {
    switch (c->op) {
    case CircuitNode::Op::Gen:
        switch (c->kind) {
        case GenKind::Add: return gen(GenKind::Coadd);
        case GenKind::Coadd: return gen(GenKind::Add);
        case GenKind::Zero: return gen(GenKind::Cozero);
        case GenKind::Cozero: return gen(GenKind::Zero);
        case GenKind::Dup: return gen(GenKind::Codup);
        case GenKind::Codup: return gen(GenKind::Dup);
        case GenKind::Del: return gen(GenKind::Codel);
        case GenKind::Codel: return gen(GenKind::Del);
        case GenKind::Amp: return coamp(c->scalar);
        case GenKind::Coamp: return amp(c->scalar);
        }
        break;
    case CircuitNode::Op::Id:
    case CircuitNode::Op::Sym:
        return c;
    case CircuitNode::Op::Seq:
        return seq(mirror(c->b), mirror(c->a));
    case CircuitNode::Op::Tensor:
        return tensor(mirror(c->a), mirror(c->b));
    }
    throw Error("unknown circuit node");
}

Circuit pn(const Circuit& c) {
    switch (c->op) {
    case CircuitNode::Op::Gen:
        switch (c->kind) {
        case GenKind::Add: return gen(GenKind::Codup);
        case GenKind::Codup: return gen(GenKind::Add);
        case GenKind::Zero: return gen(GenKind::Codel);
        case GenKind::Codel: return gen(GenKind::Zero);
        case GenKind::Dup: return gen(GenKind::Coadd);
        case GenKind::Coadd: return gen(GenKind::Dup);
        case GenKind::Del: return gen(GenKind::Cozero);
        case GenKind::Cozero: return gen(GenKind::Del);
        case GenKind::Amp: return coamp(c->scalar);
        case GenKind::Coamp: return amp(c->scalar);
        }
        break;
    case CircuitNode::Op::Id:
    case CircuitNode::Op::Sym:
        return c;
    case CircuitNode::Op::Seq:
        return seq(pn(c->a), pn(c->b));
    case CircuitNode::Op::Tensor:
        return tensor(pn(c->a), pn(c->b));
    }
    throw Error("unknown circuit node");
}

namespace {

// 1 -> n fan-out, left-associated; del for n = 0.
Circuit dup_tree(size_t n) {
    if (n == 0)
        return gen(GenKind::Del);
    if (n == 1)
        return id(1);
    if (n == 2)
        return gen(GenKind::Dup);
    return seq(gen(GenKind::Dup), tensor(dup_tree(n - 1), id(1)));
}

// n -> 1 sum, left-associated; zero for n = 0.
Circuit add_tree(size_t n) {
    if (n == 0)
        return gen(GenKind::Zero);
    if (n == 1)
        return id(1);
    if (n == 2)
        return gen(GenKind::Add);
    return seq(tensor(add_tree(n - 1), id(1)), gen(GenKind::Add));
}

bool is_identity_shape(const Circuit& c) {
    if (c->op == CircuitNode::Op::Id)
        return true;
    if (c->op == CircuitNode::Op::Tensor)
        return is_identity_shape(c->a) && is_identity_shape(c->b);
    return false;
}

Circuit tensor_fold(const std::vector<Circuit>& parts) {
    if (parts.empty())
        return id(0);
    Circuit c = parts[0];
    for (size_t i = 1; i < parts.size(); ++i)
        c = tensor(c, parts[i]);
    return c;
}

Circuit seq_layers(std::vector<Circuit> layers, size_t arity_if_empty) {
    std::vector<Circuit> kept;
    for (auto& l : layers)
        if (!is_identity_shape(l))
            kept.push_back(std::move(l));
    if (kept.empty())
        return id(arity_if_empty);
    Circuit c = kept[0];
    for (size_t i = 1; i < kept.size(); ++i)
        c = seq(c, kept[i]);
    return c;
}

} // namespace

Circuit desugar_scalars(const Circuit& c) {
    switch (c->op) {
    case CircuitNode::Op::Gen:
        if (c->kind == GenKind::Amp) {
            const Int& k = c->scalar;
            if (k == 0)
                return seq(gen(GenKind::Del), gen(GenKind::Zero));
            if (k == 1)
                return id(1);
            if (k == -1)
                return c;
            if (k < 0)
                return seq(amp(Int(-1)), desugar_scalars(amp(-k)));
            size_t n = static_cast<size_t>(k);
            return seq(dup_tree(n), add_tree(n));
        }
        if (c->kind == GenKind::Coamp)
            return mirror(desugar_scalars(amp(c->scalar)));
        return c;
    case CircuitNode::Op::Id:
    case CircuitNode::Op::Sym:
        return c;
    case CircuitNode::Op::Seq:
        return seq(desugar_scalars(c->a), desugar_scalars(c->b));
    case CircuitNode::Op::Tensor:
        return tensor(desugar_scalars(c->a), desugar_scalars(c->b));
    }
    throw Error("unknown circuit node");
}

Circuit perm_circuit(const std::vector<size_t>& perm) {
    const size_t n = perm.size();
    std::vector<bool> seen(n, false);
    for (size_t t : perm) {
        if (t >= n || seen[t])
            throw DomainError("not a permutation");
        seen[t] = true;
    }
    std::vector<size_t> target_at(n); // target position of the wire now at position p
    for (size_t p = 0; p < n; ++p)
        target_at[p] = perm[p];
    std::vector<Circuit> layers;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (size_t j = 0; j + 1 < n; ++j) {
            if (target_at[j] > target_at[j + 1]) {
                std::swap(target_at[j], target_at[j + 1]);
                std::vector<Circuit> parts;
                if (j > 0)
                    parts.push_back(id(j));
                parts.push_back(sym());
                if (j + 2 < n)
                    parts.push_back(id(n - j - 2));
                layers.push_back(tensor_fold(parts));
                swapped = true;
            }
        }
    }
    return seq_layers(std::move(layers), n);
}

Circuit matrix_to_circuit(const MatZ& a) {
    const size_t m = a.rows(), n = a.cols();
    // Wires carry the nonzero entries, ordered by (column, row).
    struct Wire {
        size_t col, row;
    };
    std::vector<Wire> wires;
    std::vector<size_t> col_count(n, 0), row_count(m, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            if (a.at(j, i) != 0) {
                wires.push_back({i, j});
                ++col_count[i];
                ++row_count[j];
            }

    std::vector<Circuit> fan, scale;
    for (size_t i = 0; i < n; ++i)
        fan.push_back(dup_tree(col_count[i]));
    for (const Wire& w : wires) {
        const Int& k = a.at(w.row, w.col);
        scale.push_back(k == 1 ? id(1) : amp(k));
    }

    // Route wire order (column, row) to order (row, column).
    std::vector<size_t> order(wires.size());
    for (size_t w = 0; w < wires.size(); ++w)
        order[w] = w;
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return wires[x].row != wires[y].row ? wires[x].row < wires[y].row
                                            : wires[x].col < wires[y].col;
    });
    std::vector<size_t> target(wires.size());
    for (size_t pos = 0; pos < order.size(); ++pos)
        target[order[pos]] = pos;

    std::vector<Circuit> adds;
    for (size_t j = 0; j < m; ++j)
        adds.push_back(add_tree(row_count[j]));

    std::vector<Circuit> layers;
    layers.push_back(n == 0 ? id(0) : tensor_fold(fan));
    layers.push_back(wires.empty() ? id(0) : tensor_fold(scale));
    layers.push_back(perm_circuit(target));
    layers.push_back(m == 0 ? id(0) : tensor_fold(adds));
    return seq_layers(std::move(layers), n);
}

} // namespace ihz
