#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace fincat {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Syntax tree shared by the modal and first-order fragments.
struct Formula {
  enum class Kind { True, False, Atom, Not, And, Or, Implies, Box, Diamond, Forall, Exists };

  Kind kind = Kind::True;
  std::string name;                // atom symbol
  bool applied = false;            // atom written as R(...), even with no arguments
  std::vector<std::size_t> args;   // 1-based variable indices of an applied atom
  std::size_t variable = 0;        // variable bound by a quantifier
  std::vector<FormulaPtr> children;

  bool operator==(const Formula& other) const;
};

namespace fml {
FormulaPtr truth();
FormulaPtr falsity();
FormulaPtr prop(std::string name);
FormulaPtr pred(std::string name, std::vector<std::size_t> args);
FormulaPtr negate(FormulaPtr a);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr box(FormulaPtr a);
FormulaPtr dia(FormulaPtr a);
FormulaPtr forall(std::size_t variable, FormulaPtr body);
FormulaPtr exists(std::size_t variable, FormulaPtr body);
}  // namespace fml

/// Grammar, loosest first:
///   impl  := disj ('->' impl)?
///   disj  := conj ('|' conj)*
///   conj  := unary ('&' unary)*
///   unary := '!' unary | 'box' unary | 'dia' unary
///          | ('forall' | 'exists') 'v'K '.' impl
///          | '(' impl ')' | 'true' | 'false' | NAME | NAME '(' vars ')'
/// Quantifier bodies extend as far right as possible. Throws ParseError
/// with the column of the offending token.
FormulaPtr parse_formula(const std::string& text);

/// Fully parenthesized rendering that parse_formula reads back to an equal
/// tree.
std::string to_string(const Formula& f);

/// Atoms and constants have depth 1; each connective adds 1.
std::size_t depth(const Formula& f);

/// No quantifiers and no applied atoms.
bool is_modal(const Formula& f);
/// No box/dia and no bare propositional atoms.
bool is_first_order(const Formula& f);

}  // namespace fincat
