#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gp2/ast.hpp"
#include "gp2/checker.hpp"
#include "gp2/graph.hpp"

namespace gp2 {

/// The value bound to a rule variable: an integer, a string, or a list of
/// atoms. The shape follows the variable's declared type (int -> integer,
/// char/string -> string, atom -> integer or string, list -> atom list).
using Value = std::variant<std::int64_t, std::string, std::vector<Atom>>;

/// Normalise a value to its list-of-atoms shape.
std::vector<Atom> value_atoms(const Value& v);

/// The set of bindings built up while matching; a variable has at most
/// one binding and an extension never overwrites it with a different
/// value.
using Environment = std::map<std::string, Value>;

/// Extends env with var=v; returns false if var is already bound to a
/// different value.
bool env_bind(Environment& env, const std::string& var, Value v);

/// The union of two environments, or nothing if they disagree on a
/// variable.
std::optional<Environment> merge_environments(const Environment& a,
                                              const Environment& b);

/// Matches a single non-list rule atom against a host atom, extending env
/// compatibly. Constants must be equal; variables match by declared type;
/// a concatenation matches a string with its one flexible (string-typed)
/// part bound to the length-determined segment.
std::optional<Environment> match_atom(const Environment& env,
                                      const VarTypeMap& types,
                                      const AtomExpr& ra, const Atom& ha);

/// Matches a left-hand-side label against a host label. Marks must be
/// equal; the list variable (at most one) is bound to the segment whose
/// length is forced by comparing the remaining rule and host atoms.
/// Non-match is a value, not an error.
std::optional<Environment> match_label(const Environment& env,
                                       const VarTypeMap& types,
                                       const RuleLabel& rl,
                                       const HostLabel& hl);

/// (minimum host atoms required, whether the label has a list variable).
std::pair<int, bool> label_length_bound(const VarTypeMap& types,
                                        const RuleLabel& rl);

}  // namespace gp2
