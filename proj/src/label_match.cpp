#include "gp2/label_match.hpp"

namespace gp2 {

std::vector<Atom> value_atoms(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return {Atom{*i}};
  if (const auto* s = std::get_if<std::string>(&v)) return {Atom{*s}};
  return std::get<std::vector<Atom>>(v);
}

bool env_bind(Environment& env, const std::string& var, Value v) {
  auto it = env.find(var);
  if (it != env.end()) return it->second == v;
  env.emplace(var, std::move(v));
  return true;
}

std::optional<Environment> merge_environments(const Environment& a,
                                              const Environment& b) {
  Environment out = a;
  for (const auto& [var, val] : b)
    if (!env_bind(out, var, val)) return std::nullopt;
  return out;
}

namespace {

VarType var_type_of(const VarTypeMap& types, const std::string& name) {
  auto it = types.find(name);
  // Checked rules always declare their variables; default keeps the
  // matcher total on hand-built patterns.
  return it == types.end() ? VarType::List : it->second;
}

bool is_list_var(const VarTypeMap& types, const AtomExpr& e) {
  return e.kind == AtomExpr::Kind::Var &&
         var_type_of(types, e.name) == VarType::List;
}

std::optional<Environment> match_var(Environment env, VarType t,
                                     const std::string& name, const Atom& ha) {
  switch (t) {
    case VarType::Int: {
      const auto* i = std::get_if<std::int64_t>(&ha);
      if (!i) return std::nullopt;
      if (!env_bind(env, name, Value{*i})) return std::nullopt;
      return env;
    }
    case VarType::Char: {
      const auto* s = std::get_if<std::string>(&ha);
      if (!s || s->size() != 1) return std::nullopt;
      if (!env_bind(env, name, Value{*s})) return std::nullopt;
      return env;
    }
    case VarType::String: {
      const auto* s = std::get_if<std::string>(&ha);
      if (!s) return std::nullopt;
      if (!env_bind(env, name, Value{*s})) return std::nullopt;
      return env;
    }
    case VarType::Atom: {
      Value v = std::holds_alternative<std::int64_t>(ha)
                    ? Value{std::get<std::int64_t>(ha)}
                    : Value{std::get<std::string>(ha)};
      if (!env_bind(env, name, std::move(v))) return std::nullopt;
      return env;
    }
    case VarType::List: {
      // A one-atom segment; match_label handles the general case.
      if (!env_bind(env, name, Value{std::vector<Atom>{ha}}))
        return std::nullopt;
      return env;
    }
  }
  return std::nullopt;
}

void flatten_concat(const AtomExpr& e, std::vector<const AtomExpr*>& out) {
  if (e.kind == AtomExpr::Kind::Concat) {
    flatten_concat(e.args[0], out);
    flatten_concat(e.args[1], out);
  } else {
    out.push_back(&e);
  }
}

// Matches concatenation parts against a host string; the same
// length-determination rule as for labels, at character granularity.
// Constants and char variables have fixed width, so the single string
// variable's segment is forced.
std::optional<Environment> match_concat(Environment env,
                                        const VarTypeMap& types,
                                        const AtomExpr& e,
                                        const std::string& h) {
  std::vector<const AtomExpr*> parts;
  flatten_concat(e, parts);

  std::size_t fixed = 0;
  int string_vars = 0;
  for (const AtomExpr* p : parts) {
    if (p->kind == AtomExpr::Kind::StrConst) {
      fixed += p->name.size();
    } else if (p->kind == AtomExpr::Kind::Var) {
      VarType t = var_type_of(types, p->name);
      if (t == VarType::Char) ++fixed;
      else if (t == VarType::String) ++string_vars;
      else return std::nullopt;
    } else {
      return std::nullopt;  // checker-precluded
    }
  }
  if (string_vars > 1) return std::nullopt;
  if (string_vars == 0 && h.size() != fixed) return std::nullopt;
  if (string_vars == 1 && h.size() < fixed) return std::nullopt;
  std::size_t seg = h.size() - fixed;

  std::size_t at = 0;
  for (const AtomExpr* p : parts) {
    if (p->kind == AtomExpr::Kind::StrConst) {
      if (h.compare(at, p->name.size(), p->name) != 0) return std::nullopt;
      at += p->name.size();
    } else if (var_type_of(types, p->name) == VarType::Char) {
      if (!env_bind(env, p->name, Value{h.substr(at, 1)})) return std::nullopt;
      ++at;
    } else {
      if (!env_bind(env, p->name, Value{h.substr(at, seg)}))
        return std::nullopt;
      at += seg;
    }
  }
  return env;
}

}  // namespace

std::optional<Environment> match_atom(const Environment& env,
                                      const VarTypeMap& types,
                                      const AtomExpr& ra, const Atom& ha) {
  switch (ra.kind) {
    case AtomExpr::Kind::IntConst: {
      const auto* i = std::get_if<std::int64_t>(&ha);
      if (i && *i == ra.int_value) return env;
      return std::nullopt;
    }
    case AtomExpr::Kind::StrConst: {
      const auto* s = std::get_if<std::string>(&ha);
      if (s && *s == ra.name) return env;
      return std::nullopt;
    }
    case AtomExpr::Kind::Var:
      return match_var(env, var_type_of(types, ra.name), ra.name, ha);
    case AtomExpr::Kind::Concat: {
      const auto* s = std::get_if<std::string>(&ha);
      if (!s) return std::nullopt;
      return match_concat(env, types, ra, *s);
    }
    default:
      return std::nullopt;  // expressions cannot occur in LHS labels
  }
}

std::optional<Environment> match_label(const Environment& env,
                                       const VarTypeMap& types,
                                       const RuleLabel& rl,
                                       const HostLabel& hl) {
  if (rl.mark != hl.mark) return std::nullopt;

  int list_vars = 0;
  for (const auto& a : rl.atoms)
    if (is_list_var(types, a)) ++list_vars;
  if (list_vars > 1) return std::nullopt;  // not an LHS-legal label

  auto [fixed, has_list] = label_length_bound(types, rl);
  std::size_t n = hl.list.size();
  if (!has_list && n != static_cast<std::size_t>(fixed)) return std::nullopt;
  if (has_list && n < static_cast<std::size_t>(fixed)) return std::nullopt;
  std::size_t seg = n - static_cast<std::size_t>(fixed);

  Environment out = env;
  std::size_t at = 0;
  for (const auto& ra : rl.atoms) {
    if (is_list_var(types, ra)) {
      std::vector<Atom> segment(hl.list.begin() + at,
                                hl.list.begin() + at + seg);
      if (!env_bind(out, ra.name, Value{std::move(segment)}))
        return std::nullopt;
      at += seg;
    } else {
      auto next = match_atom(out, types, ra, hl.list[at]);
      if (!next) return std::nullopt;
      out = std::move(*next);
      ++at;
    }
  }
  return out;
}

std::pair<int, bool> label_length_bound(const VarTypeMap& types,
                                        const RuleLabel& rl) {
  int fixed = 0;
  bool has_list = false;
  for (const auto& a : rl.atoms) {
    if (is_list_var(types, a)) has_list = true;
    else ++fixed;
  }
  return {fixed, has_list};
}

}  // namespace gp2
