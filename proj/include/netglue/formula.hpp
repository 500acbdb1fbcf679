#ifndef NETGLUE_FORMULA_HPP
#define NETGLUE_FORMULA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "netglue/errors.hpp"

namespace netglue {

enum class FormulaKind {
    EdgeAtom,      // x -> y
    EqAtom,        // x = y
    MemberAtom,    // x in X
    Not,
    And,
    Or,
    Implies,
    ExistsVertex,
    ForallVertex,
    ExistsSet,
    ForallSet,
};

/// MSO formula AST over the signature {=, ->, in}. Variable occurrences are
/// resolved to binding slots at parse time (point and set slots counted
/// separately along each path).
struct Formula {
    FormulaKind kind{FormulaKind::EdgeAtom};
    std::string var;    // quantified name, or first atom operand
    std::string var2;   // second atom operand
    int slot = -1;      // binding slot of var (atoms) / of the bound name (quantifiers)
    int slot2 = -1;     // binding slot of var2
    std::vector<Formula> children;

    bool operator==(const Formula& other) const {
        return kind == other.kind && var == other.var && var2 == other.var2 &&
               children == other.children;
    }
};

bool is_quantifier(FormulaKind k);

/// Parses the concrete grammar; precedence ! > & > | > =>, quantifier scope
/// extends maximally to the right. Throws SyntaxError with a position.
Formula parse_formula(const std::string& text);

/// Inverse of parse_formula up to structural equality.
std::string print_formula(const Formula& f);

/// Quantifier nesting depth, counting point and set quantifiers alike.
/// Throws FreeVariable on formulas with unresolved occurrences.
std::size_t rank(const Formula& f);

/// "every vertex has out-degree exactly one" as a sentence.
const Formula& chi();

/// Number of point/set binding slots needed to evaluate the formula.
std::size_t point_slot_count(const Formula& f);
std::size_t set_slot_count(const Formula& f);
bool has_set_quantifier(const Formula& f);

}  // namespace netglue

#endif
