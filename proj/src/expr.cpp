#include "motive/expr.hpp"

#include <cctype>

#include "motive/witness.hpp"

namespace motive {

namespace {

struct Token {
    enum class Kind { integer, name, symbol, end };
    Kind kind = Kind::end;
    std::string text;
    Int value = 0;
    std::size_t offset = 0;
};

std::vector<Token> tokenize(const std::string& input) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < input.size()) {
        const char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token tok;
        tok.offset = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
            tok.kind = Token::Kind::integer;
            tok.text = input.substr(i, j - i);
            tok.value = Int(tok.text);
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < input.size() && (std::isalnum(static_cast<unsigned char>(input[j])) ||
                                        input[j] == '_'))
                ++j;
            tok.kind = Token::Kind::name;
            tok.text = input.substr(i, j - i);
            i = j;
        } else if (std::string("+-*^()[],").find(c) != std::string::npos) {
            tok.kind = Token::Kind::symbol;
            tok.text = std::string(1, c);
            ++i;
        } else {
            throw SyntaxError(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.offset = input.size();
    out.push_back(end);
    return out;
}

}  // namespace

class ExprParser {
public:
    explicit ExprParser(const std::string& input) : tokens_(tokenize(input)) {}

    CycleExpr parse() {
        CycleExpr e = parse_sum();
        if (!at_end()) throw SyntaxError(peek().offset, "trailing input after expression");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool at_end() const { return peek().kind == Token::Kind::end; }
    const Token& advance() { return tokens_[pos_++]; }

    bool match_symbol(const char* s) {
        if (peek().kind == Token::Kind::symbol && peek().text == s) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool match_name(const char* s) {
        if (peek().kind == Token::Kind::name && peek().text == s) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_symbol(const char* s) {
        if (!match_symbol(s))
            throw SyntaxError(peek().offset, std::string("expected '") + s + "'");
    }

    Int expect_integer() {
        if (peek().kind != Token::Kind::integer)
            throw SyntaxError(peek().offset, "expected an integer");
        return advance().value;
    }

    static CycleExpr node(CycleExpr::Kind kind, std::size_t offset) {
        CycleExpr e;
        e.kind_ = kind;
        e.offset_ = offset;
        return e;
    }

    static CycleExpr binary(CycleExpr::Kind kind, std::size_t offset, CycleExpr lhs, CycleExpr rhs) {
        CycleExpr e = node(kind, offset);
        e.children_.push_back(std::move(lhs));
        e.children_.push_back(std::move(rhs));
        return e;
    }

    CycleExpr parse_sum() {
        CycleExpr lhs = parse_comp();
        while (true) {
            const std::size_t off = peek().offset;
            if (match_symbol("+"))
                lhs = binary(CycleExpr::Kind::add, off, std::move(lhs), parse_comp());
            else if (match_symbol("-"))
                lhs = binary(CycleExpr::Kind::subtract, off, std::move(lhs), parse_comp());
            else
                return lhs;
        }
    }

    CycleExpr parse_comp() {
        CycleExpr lhs = parse_ext();
        while (peek().kind == Token::Kind::name && peek().text == "o") {
            const std::size_t off = advance().offset;
            lhs = binary(CycleExpr::Kind::composition, off, std::move(lhs), parse_ext());
        }
        return lhs;
    }

    CycleExpr parse_ext() {
        CycleExpr lhs = parse_prod();
        while (peek().kind == Token::Kind::name && peek().text == "x") {
            const std::size_t off = advance().offset;
            lhs = binary(CycleExpr::Kind::external_product, off, std::move(lhs), parse_prod());
        }
        return lhs;
    }

    CycleExpr parse_prod() {
        CycleExpr lhs = parse_unary();
        while (true) {
            const std::size_t off = peek().offset;
            if (match_symbol("*"))
                lhs = binary(CycleExpr::Kind::ring_product, off, std::move(lhs), parse_unary());
            else
                return lhs;
        }
    }

    CycleExpr parse_unary() {
        const std::size_t off = peek().offset;
        if (match_symbol("-")) {
            CycleExpr e = node(CycleExpr::Kind::negate, off);
            e.children_.push_back(parse_unary());
            return e;
        }
        return parse_power();
    }

    CycleExpr parse_power() {
        CycleExpr base = parse_primary();
        if (peek().kind == Token::Kind::symbol && peek().text == "^") {
            const std::size_t off = advance().offset;
            const Int k = expect_integer();
            if (k < 0 || k > 64) throw SyntaxError(off, "exponent out of range");
            CycleExpr e = node(CycleExpr::Kind::power, off);
            e.exponent_ = static_cast<int>(k);
            e.children_.push_back(std::move(base));
            return e;
        }
        return base;
    }

    CycleExpr parse_primary() {
        const Token& tok = peek();
        if (tok.kind == Token::Kind::integer) {
            CycleExpr e = node(CycleExpr::Kind::integer, tok.offset);
            e.value_ = advance().value;
            return e;
        }
        if (tok.kind == Token::Kind::name) {
            if (tok.text == "S") {
                const std::size_t off = advance().offset;
                expect_symbol("[");
                CycleExpr e = node(CycleExpr::Kind::partition_literal, off);
                std::vector<int> parts;
                if (!match_symbol("]")) {
                    parts.push_back(static_cast<int>(expect_integer()));
                    while (match_symbol(",")) parts.push_back(static_cast<int>(expect_integer()));
                    expect_symbol("]");
                }
                try {
                    e.partition_ = Partition(parts);
                } catch (const Error& err) {
                    throw SyntaxError(off, err.what());
                }
                return e;
            }
            if (tok.text == "t") {
                const std::size_t off = advance().offset;
                expect_symbol("(");
                CycleExpr e = node(CycleExpr::Kind::transposition, off);
                e.children_.push_back(parse_sum());
                expect_symbol(")");
                return e;
            }
            if (tok.text == "mod") {
                const std::size_t off = advance().offset;
                expect_symbol("(");
                CycleExpr e = node(CycleExpr::Kind::mod_reduce, off);
                e.children_.push_back(parse_sum());
                expect_symbol(",");
                e.value_ = expect_integer();
                if (e.value_ < 2) throw SyntaxError(off, "modulus must be >= 2");
                expect_symbol(")");
                return e;
            }
            if (tok.text == "x" || tok.text == "o")
                throw SyntaxError(tok.offset, "operator '" + tok.text + "' needs a left operand");
            CycleExpr e = node(CycleExpr::Kind::name, tok.offset);
            e.name_ = advance().text;
            return e;
        }
        if (tok.kind == Token::Kind::symbol && tok.text == "(") {
            advance();
            CycleExpr e = parse_sum();
            expect_symbol(")");
            return e;
        }
        throw SyntaxError(tok.offset, "expected an expression");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

CycleExpr CycleExpr::parse(const std::string& input) {
    return ExprParser(input).parse();
}

namespace {

int precedence(CycleExpr::Kind kind) {
    switch (kind) {
        case CycleExpr::Kind::add:
        case CycleExpr::Kind::subtract: return 0;
        case CycleExpr::Kind::composition: return 1;
        case CycleExpr::Kind::external_product: return 2;
        case CycleExpr::Kind::ring_product: return 3;
        case CycleExpr::Kind::negate: return 4;
        case CycleExpr::Kind::power: return 5;
        default: return 6;
    }
}

std::string render_child(const CycleExpr& child, int min_prec) {
    const std::string text = child.render();
    if (precedence(child.kind()) < min_prec) return "(" + text + ")";
    return text;
}

const char* binary_op(CycleExpr::Kind kind) {
    switch (kind) {
        case CycleExpr::Kind::add: return " + ";
        case CycleExpr::Kind::subtract: return " - ";
        case CycleExpr::Kind::composition: return " o ";
        case CycleExpr::Kind::external_product: return " x ";
        case CycleExpr::Kind::ring_product: return "*";
        default: return "?";
    }
}

}  // namespace

std::string CycleExpr::render() const {
    switch (kind_) {
        case Kind::integer: return value_.str();
        case Kind::name: return name_;
        case Kind::partition_literal: {
            std::string out = "S[";
            for (int i = 0; i < partition_.length(); ++i) {
                if (i) out += ",";
                out += std::to_string(partition_.part(i));
            }
            return out + "]";
        }
        case Kind::negate:
            return "-" + render_child(children_[0], precedence(kind_));
        case Kind::add:
        case Kind::subtract:
        case Kind::composition:
        case Kind::external_product:
        case Kind::ring_product: {
            const int prec = precedence(kind_);
            return render_child(children_[0], prec) + binary_op(kind_) +
                   render_child(children_[1], prec + 1);
        }
        case Kind::power:
            return render_child(children_[0], 6) + "^" + std::to_string(exponent_);
        case Kind::transposition:
            return "t(" + children_[0].render() + ")";
        case Kind::mod_reduce:
            return "mod(" + children_[0].render() + ", " + value_.str() + ")";
    }
    return "?";
}

bool CycleExpr::operator==(const CycleExpr& other) const {
    if (kind_ != other.kind_ || value_ != other.value_ || name_ != other.name_ ||
        !(partition_ == other.partition_) || exponent_ != other.exponent_ ||
        children_.size() != other.children_.size())
        return false;
    for (std::size_t i = 0; i < children_.size(); ++i)
        if (!(children_[i] == other.children_[i])) return false;
    return true;  // offsets are not part of structural equality
}

namespace {

[[noreturn]] void type_error(const CycleExpr& e, const std::string& path, const std::string& msg) {
    throw TypeError(e.offset(), path, msg);
}

bool has_name_prefix(const std::string& name, const std::string& prefix, int& suffix) {
    if (name.size() <= prefix.size() || name.rfind(prefix, 0) != 0) return false;
    for (std::size_t i = prefix.size(); i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    suffix = std::stoi(name.substr(prefix.size()));
    return true;
}

EvalValue eval_name(const CycleExpr& e, const EvalContext& ctx, const std::string& path) {
    const std::string& name = e.name();
    if (name == "H") {
        if (!ctx.proj_space.is_projective_space())
            type_error(e, path, "H needs a projective factor space");
        return ChowClass::basis_class(ctx.proj_space, ctx.ring, Partition{1});
    }
    if (name == "pt") {
        if (ctx.main_space == GrassmannSpace(2, 5))
            return named_generator(ctx.main_space, "pt", ctx.ring);
        return ChowClass::basis_class(ctx.main_space, ctx.ring, ctx.main_space.point_class());
    }
    if (name == "r" || name == "rho") {
        if (ctx.main_space.ambient_rank() != ctx.proj_space.ambient_rank())
            type_error(e, path, "r and rho need factor spaces with equal ambient rank");
        const int i = name == "r" ? 1 : 2;
        ProductClass cycle = segre_chern_class(ctx.main_space.subspace_rank(), 1,
                                               ctx.main_space.ambient_rank(), i);
        return ctx.ring.is_integers() ? cycle : cycle.cast_to(ctx.ring);
    }
    int m = 0;
    if (has_name_prefix(name, "sigma", m)) {
        if (m < 1 || m > ctx.main_space.cols())
            type_error(e, path, "sigma" + std::to_string(m) + " out of range on " +
                                    ctx.main_space.to_string());
        return ChowClass::basis_class(ctx.main_space, ctx.ring, Partition{m});
    }
    try {
        return named_generator(ctx.main_space, name, ctx.ring);
    } catch (const Error& err) {
        type_error(e, path, err.what());
    }
}

EvalValue eval_node(const CycleExpr& e, const EvalContext& ctx, const std::string& path);

EvalValue eval_child(const CycleExpr& e, std::size_t i, const EvalContext& ctx,
                     const std::string& path) {
    return eval_node(e.children()[i], ctx, path + "/" + std::to_string(i));
}

ChowClass promote_external(const EvalValue& v, bool left, const EvalContext& ctx) {
    if (std::holds_alternative<ChowClass>(v)) return std::get<ChowClass>(v);
    const Rat& c = std::get<Rat>(v);
    const GrassmannSpace& space = left ? ctx.main_space : ctx.proj_space;
    return ChowClass::unit(space, ctx.ring).scaled(c);
}

EvalValue eval_node(const CycleExpr& e, const EvalContext& ctx, const std::string& path) {
    using Kind = CycleExpr::Kind;
    try {
        switch (e.kind()) {
            case Kind::integer:
                return Rat(e.integer_value());
            case Kind::name:
                return eval_name(e, ctx, path);
            case Kind::partition_literal:
                return ChowClass::basis_class(ctx.main_space, ctx.ring, e.partition());
            case Kind::negate: {
                EvalValue v = eval_child(e, 0, ctx, path);
                if (auto* s = std::get_if<Rat>(&v)) return Rat(-*s);
                if (auto* c = std::get_if<ChowClass>(&v)) return -*c;
                return -std::get<ProductClass>(v);
            }
            case Kind::add:
            case Kind::subtract: {
                EvalValue a = eval_child(e, 0, ctx, path);
                EvalValue b = eval_child(e, 1, ctx, path);
                const bool add = e.kind() == Kind::add;
                if (auto* x = std::get_if<Rat>(&a)) {
                    if (auto* y = std::get_if<Rat>(&b)) return add ? Rat(*x + *y) : Rat(*x - *y);
                    type_error(e, path, "cannot add a scalar to a class");
                }
                if (auto* x = std::get_if<ChowClass>(&a)) {
                    if (auto* y = std::get_if<ChowClass>(&b)) return add ? *x + *y : *x - *y;
                    type_error(e, path, "mismatched operands of + / -");
                }
                if (auto* y = std::get_if<ProductClass>(&b))
                    return add ? std::get<ProductClass>(a) + *y : std::get<ProductClass>(a) - *y;
                type_error(e, path, "mismatched operands of + / -");
            }
            case Kind::ring_product: {
                EvalValue a = eval_child(e, 0, ctx, path);
                EvalValue b = eval_child(e, 1, ctx, path);
                if (auto* x = std::get_if<Rat>(&a)) {
                    if (auto* y = std::get_if<Rat>(&b)) return Rat(*x * *y);
                    if (auto* y = std::get_if<ChowClass>(&b)) return y->scaled(*x);
                    return std::get<ProductClass>(b).scaled(*x);
                }
                if (auto* y = std::get_if<Rat>(&b)) {
                    if (auto* x = std::get_if<ChowClass>(&a)) return x->scaled(*y);
                    return std::get<ProductClass>(a).scaled(*y);
                }
                if (auto* x = std::get_if<ChowClass>(&a)) {
                    if (auto* y = std::get_if<ChowClass>(&b)) return *x * *y;
                    type_error(e, path, "cannot ring-multiply a class by a correspondence");
                }
                if (auto* y = std::get_if<ProductClass>(&b))
                    return intersect(std::get<ProductClass>(a), *y);
                type_error(e, path, "mismatched operands of *");
            }
            case Kind::external_product: {
                EvalValue a = eval_child(e, 0, ctx, path);
                EvalValue b = eval_child(e, 1, ctx, path);
                if (std::holds_alternative<ProductClass>(a) ||
                    std::holds_alternative<ProductClass>(b))
                    type_error(e, path, "external product of correspondences is not defined");
                return external_product(promote_external(a, true, ctx),
                                        promote_external(b, false, ctx));
            }
            case Kind::composition: {
                EvalValue a = eval_child(e, 0, ctx, path);
                EvalValue b = eval_child(e, 1, ctx, path);
                auto* x = std::get_if<ProductClass>(&a);
                auto* y = std::get_if<ProductClass>(&b);
                if (!x || !y) type_error(e, path, "composition needs two correspondences");
                return compose(*x, *y);
            }
            case Kind::power: {
                EvalValue base = eval_child(e, 0, ctx, path);
                const int k = e.exponent();
                if (auto* s = std::get_if<Rat>(&base)) {
                    Rat out = 1;
                    for (int i = 0; i < k; ++i) out *= *s;
                    return out;
                }
                if (auto* c = std::get_if<ChowClass>(&base)) {
                    ChowClass out = ChowClass::unit(c->space(), c->ring());
                    for (int i = 0; i < k; ++i) out = out * *c;
                    return out;
                }
                const ProductClass& pc = std::get<ProductClass>(base);
                if (k == 0) return external_product(ChowClass::unit(pc.left(), pc.ring()),
                                                    ChowClass::unit(pc.right(), pc.ring()));
                return intersect_power(pc, k);
            }
            case Kind::transposition: {
                EvalValue v = eval_child(e, 0, ctx, path);
                auto* pc = std::get_if<ProductClass>(&v);
                if (!pc) type_error(e, path, "t() needs a correspondence");
                return transpose(*pc);
            }
            case Kind::mod_reduce: {
                EvalValue v = eval_child(e, 0, ctx, path);
                const Int m = e.modulus();
                if (auto* s = std::get_if<Rat>(&v)) {
                    if (!is_integer(*s)) type_error(e, path, "mod() needs integers");
                    Int r = rat_num(*s) % m;
                    if (r < 0) r += m;
                    return Rat(r);
                }
                if (auto* c = std::get_if<ChowClass>(&v))
                    return c->cast_to(CoefficientRing::integers_mod(m));
                return reduce_mod(std::get<ProductClass>(v), m);
            }
        }
        type_error(e, path, "unreachable expression kind");
    } catch (const TypeError&) {
        throw;
    } catch (const SyntaxError&) {
        throw;
    } catch (const Error& err) {
        throw TypeError(e.offset(), path, std::string(err.what()) + " [" + err.code() + "]");
    }
}

}  // namespace

EvalValue eval(const CycleExpr& expr, const EvalContext& context) {
    return eval_node(expr, context, "/");
}

std::string value_to_string(const EvalValue& v) {
    if (auto* s = std::get_if<Rat>(&v)) return rat_to_string(*s);
    if (auto* c = std::get_if<ChowClass>(&v)) return c->to_string();
    return std::get<ProductClass>(v).to_string();
}

nlohmann::json value_to_json(const EvalValue& v) {
    nlohmann::json j;
    if (auto* s = std::get_if<Rat>(&v)) {
        j["type"] = "scalar";
        j["value"] = rat_to_string(*s);
    } else if (auto* c = std::get_if<ChowClass>(&v)) {
        j["type"] = "class";
        j["space"] = c->space().to_json();
        j["ring"] = c->ring().to_json();
        j["terms"] = c->to_json();
    } else {
        const ProductClass& pc = std::get<ProductClass>(v);
        j["type"] = "correspondence";
        j["left"] = pc.left().to_json();
        j["right"] = pc.right().to_json();
        j["ring"] = pc.ring().to_json();
        j["terms"] = pc.to_json();
    }
    return j;
}

}  // namespace motive
