#pragma once

#include <memory>
#include <variant>

#include "motive/product_class.hpp"

namespace motive {

/// AST of the cycle expression language.
///
/// Grammar (LL(1), whitespace-insensitive; loosest to tightest):
///   expr    := comp (('+' | '-') comp)*
///   comp    := ext ('o' ext)*                 -- correspondence composition
///   ext     := prod ('x' prod)*               -- external product
///   prod    := power ('*' power)*             -- ring product / scaling
///   power   := unary ('^' INT)?
///   unary   := '-' unary | primary
///   primary := INT | NAME | 'S' '[' INT (',' INT)* ']' | 'S' '[' ']'
///            | 't' '(' expr ')' | 'mod' '(' expr ',' INT ')' | '(' expr ')'
class CycleExpr {
public:
    enum class Kind {
        integer,
        name,
        partition_literal,
        negate,
        add,
        subtract,
        ring_product,
        external_product,
        composition,
        power,
        transposition,
        mod_reduce,
    };

    static CycleExpr parse(const std::string& input);  // throws SyntaxError

    Kind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }
    const Int& integer_value() const { return value_; }
    const std::string& name() const { return name_; }
    const Partition& partition() const { return partition_; }
    int exponent() const { return exponent_; }
    const Int& modulus() const { return value_; }
    const std::vector<CycleExpr>& children() const { return children_; }

    /// Canonical text; parse(render()) reproduces the AST.
    std::string render() const;

    bool operator==(const CycleExpr& other) const;

private:
    CycleExpr() = default;
    friend class ExprParser;

    Kind kind_ = Kind::integer;
    std::size_t offset_ = 0;
    Int value_ = 0;           // integer literal / modulus
    std::string name_;
    Partition partition_;
    int exponent_ = 0;
    std::vector<CycleExpr> children_;
};

/// Scalar, ring element, or correspondence.
using EvalValue = std::variant<Rat, ChowClass, ProductClass>;

/// Space bindings for evaluation: names and partition literals resolve in
/// `main_space`; H-powers in `proj_space`; r and rho are the Segre-pullback
/// Chern classes on main x proj.
struct EvalContext {
    GrassmannSpace main_space{2, 5};
    GrassmannSpace proj_space{1, 5};
    CoefficientRing ring = CoefficientRing::integers();
};

EvalValue eval(const CycleExpr& expr, const EvalContext& context);

std::string value_to_string(const EvalValue& v);
nlohmann::json value_to_json(const EvalValue& v);

}  // namespace motive
