#include "gp2/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <set>

namespace gp2 {

namespace {

std::string position_text(int line, int col, const std::string& expected,
                          const std::string& found) {
  return std::to_string(line) + ":" + std::to_string(col) + ": expected " +
         expected + ", found " + found;
}

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {
      "Main",  "if",     "then",   "else",   "try",    "skip",
      "fail",  "not",    "and",    "or",     "edge",   "indeg",
      "outdeg", "int",   "char",   "string", "atom",   "list",
      "empty", "interface", "where", "red",  "green",  "blue",
      "grey",  "dashed"};
  return words;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Program program() {
    skip();
    if (eof()) fail("a declaration");
    Program p;
    while (!eof()) {
      p.decls.push_back(declaration());
      skip();
    }
    return p;
  }

  HostGraph host_graph() {
    RuleGraph g = rule_graph(true);
    skip();
    if (!eof()) fail("end of input");
    HostGraph h;
    std::map<std::string, NodeKey> keys;
    for (const auto& n : g.nodes)
      keys[n.id] = h.add_node({const_label(n.label), n.root});
    for (const auto& e : g.edges)
      h.add_edge(keys.at(e.src), keys.at(e.tgt), const_label(e.label));
    return h;
  }

 private:
  // --- scanning -----------------------------------------------------------

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool eof() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& expected) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string found;
    if (pos_ >= text_.size()) {
      found = "end of input";
    } else {
      std::size_t end = pos_;
      if (is_word_char(text_[pos_])) {
        while (end < text_.size() && is_word_char(text_[end])) ++end;
      } else {
        end = std::min(pos_ + 1, text_.size());
      }
      found = "'" + std::string(text_.substr(pos_, end - pos_)) + "'";
    }
    throw ParseError(line, col, expected, found);
  }

  bool accept_sym(std::string_view s) {
    skip();
    if (text_.substr(pos_).substr(0, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }

  void expect_sym(std::string_view s) {
    if (!accept_sym(s)) fail("'" + std::string(s) + "'");
  }

  bool peek_sym(std::string_view s) {
    skip();
    return text_.substr(pos_).substr(0, s.size()) == s;
  }

  bool peek_word(std::string_view w) {
    skip();
    if (text_.substr(pos_).substr(0, w.size()) != w) return false;
    std::size_t after = pos_ + w.size();
    return after >= text_.size() || !is_word_char(text_[after]);
  }

  bool accept_word(std::string_view w) {
    if (!peek_word(w)) return false;
    pos_ += w.size();
    return true;
  }

  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("'" + std::string(w) + "'");
  }

  std::string word() {
    skip();
    if (eof() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("an identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_word_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string ident() {
    skip();
    std::size_t at = pos_;
    std::string w = word();
    if (reserved_words().count(w)) {
      pos_ = at;
      fail("an identifier");
    }
    return w;
  }

  std::int64_t integer() {
    skip();
    if (eof() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("an integer");
    std::int64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int d = text_[pos_] - '0';
      if (v > (INT64_MAX - d) / 10) fail("an integer in range");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  std::string string_lit() {
    skip();
    if (eof() || text_[pos_] != '"') fail("a string literal");
    ++pos_;
    std::string s;
    while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n')
      s += text_[pos_++];
    if (pos_ >= text_.size() || text_[pos_] != '"') fail("a closing '\"'");
    ++pos_;
    return s;
  }

  // --- program grammar ----------------------------------------------------

  Declaration declaration() {
    Declaration d;
    if (accept_word("Main")) {
      expect_sym("=");
      d.kind = Declaration::Kind::Main;
      d.name = "Main";
      d.body = command_sequence();
      return d;
    }
    std::string name = ident();
    if (accept_sym("(")) {
      d.kind = Declaration::Kind::Rule;
      d.name = name;
      d.rule = rule_decl(name);
      return d;
    }
    expect_sym("=");
    d.kind = Declaration::Kind::Macro;
    d.name = name;
    d.body = command_sequence();
    return d;
  }

  Command command_sequence() {
    std::vector<Command> coms;
    coms.push_back(command());
    while (accept_sym(";")) coms.push_back(command());
    Command out = std::move(coms.back());
    for (std::size_t i = coms.size() - 1; i-- > 0;)
      out = Command::seq(std::move(coms[i]), std::move(out));
    return out;
  }

  Command command() {
    Command c = command_primary();
    while (accept_sym("!")) c = Command::loop(std::move(c));
    return c;
  }

  Command command_primary() {
    bool is_if = accept_word("if");
    bool is_try = !is_if && accept_word("try");
    if (is_if || is_try) {
      Command cond = command_sequence();
      expect_word("then");
      Command then_c = command_sequence();
      Command else_c = Command::skip();
      if (accept_word("else")) else_c = command_sequence();
      return Command::branch(
          is_try ? Command::Kind::Try : Command::Kind::If, std::move(cond),
          std::move(then_c), std::move(else_c));
    }
    if (accept_word("skip")) return Command::skip();
    if (accept_word("fail")) return Command::fail();
    if (accept_sym("(")) {
      Command c = command_sequence();
      expect_sym(")");
      return c;
    }
    if (accept_sym("{")) {
      std::vector<std::string> names;
      if (!peek_sym("}")) {
        names.push_back(ident());
        while (accept_sym(",")) names.push_back(ident());
      }
      expect_sym("}");
      return Command::call(std::move(names));
    }
    return Command::call({ident()});
  }

  // --- rule declarations ----------------------------------------------------

  RuleDecl rule_decl(std::string name) {
    RuleDecl r;
    r.name = std::move(name);
    if (!peek_sym(")")) {
      do {
        std::vector<std::string> vars;
        vars.push_back(ident());
        while (accept_sym(",")) vars.push_back(ident());
        expect_sym(":");
        VarType t = var_type();
        for (auto& v : vars) r.params.emplace_back(std::move(v), t);
      } while (accept_sym(";"));
    }
    expect_sym(")");
    r.lhs = rule_graph(false);
    expect_sym("=>");
    r.rhs = rule_graph(false);
    expect_word("interface");
    expect_sym("=");
    expect_sym("{");
    if (!peek_sym("}")) {
      r.interface.push_back(ident());
      while (accept_sym(",")) r.interface.push_back(ident());
    }
    expect_sym("}");
    if (accept_word("where")) r.condition = condition();
    return r;
  }

  VarType var_type() {
    if (accept_word("int")) return VarType::Int;
    if (accept_word("char")) return VarType::Char;
    if (accept_word("string")) return VarType::String;
    if (accept_word("atom")) return VarType::Atom;
    if (accept_word("list")) return VarType::List;
    fail("a variable type");
  }

  // --- graphs ---------------------------------------------------------------

  RuleGraph rule_graph(bool host_mode) {
    expect_sym("[");
    RuleGraph g;
    std::set<std::string> node_ids, edge_ids;
    while (!peek_sym("|")) {
      if (eof()) fail("'|'");
      RuleNode n;
      expect_sym("(");
      n.id = ident();
      if (accept_sym("(")) {
        expect_word("R");
        expect_sym(")");
        n.root = true;
      }
      expect_sym(",");
      n.label = label(host_mode);
      if (host_mode && n.label.mark == Mark::Dashed)
        fail("a node mark (dashed is edge-only)");
      expect_sym(")");
      if (!node_ids.insert(n.id).second) fail("a fresh node id");
      g.nodes.push_back(std::move(n));
    }
    expect_sym("|");
    while (!peek_sym("]")) {
      if (eof()) fail("']'");
      RuleEdge e;
      expect_sym("(");
      e.id = ident();
      expect_sym(",");
      e.src = ident();
      if (!node_ids.count(e.src)) fail("a node id declared in this graph");
      expect_sym(",");
      e.tgt = ident();
      if (!node_ids.count(e.tgt)) fail("a node id declared in this graph");
      expect_sym(",");
      e.label = label(host_mode);
      if (host_mode && e.label.mark == Mark::Grey)
        fail("an edge mark (grey is node-only)");
      expect_sym(")");
      if (!edge_ids.insert(e.id).second) fail("a fresh edge id");
      g.edges.push_back(std::move(e));
    }
    expect_sym("]");
    return g;
  }

  RuleLabel label(bool host_mode) {
    RuleLabel l;
    if (!accept_word("empty")) {
      l.atoms.push_back(atom_expr(host_mode));
      while (accept_sym(":")) l.atoms.push_back(atom_expr(host_mode));
    }
    if (accept_sym("#")) l.mark = mark();
    return l;
  }

  Mark mark() {
    if (accept_word("red")) return Mark::Red;
    if (accept_word("green")) return Mark::Green;
    if (accept_word("blue")) return Mark::Blue;
    if (accept_word("grey")) return Mark::Grey;
    if (accept_word("dashed")) return Mark::Dashed;
    fail("a mark");
  }

  // Precedence, loosest first: "." concatenation, then +/-, then */" /".
  // Host labels allow constants only.
  AtomExpr atom_expr(bool host_mode) {
    AtomExpr e = additive(host_mode);
    if (host_mode) return e;
    while (accept_sym(".")) {
      e = AtomExpr::binary(AtomExpr::Kind::Concat, std::move(e),
                           additive(host_mode));
    }
    return e;
  }

  AtomExpr additive(bool host_mode) {
    AtomExpr e = multiplicative(host_mode);
    if (host_mode) return e;
    for (;;) {
      if (accept_sym("+")) {
        e = AtomExpr::binary(AtomExpr::Kind::Add, std::move(e),
                             multiplicative(host_mode));
      } else if (accept_sym("-")) {
        e = AtomExpr::binary(AtomExpr::Kind::Sub, std::move(e),
                             multiplicative(host_mode));
      } else {
        return e;
      }
    }
  }

  AtomExpr multiplicative(bool host_mode) {
    AtomExpr e = primary(host_mode);
    if (host_mode) return e;
    for (;;) {
      if (accept_sym("*")) {
        e = AtomExpr::binary(AtomExpr::Kind::Mul, std::move(e),
                             primary(host_mode));
      } else if (accept_sym("/")) {
        e = AtomExpr::binary(AtomExpr::Kind::Div, std::move(e),
                             primary(host_mode));
      } else {
        return e;
      }
    }
  }

  AtomExpr primary(bool host_mode) {
    skip();
    if (eof()) fail("a label atom");
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      std::int64_t v = integer();
      return AtomExpr::integer(-v);
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return AtomExpr::integer(integer());
    if (c == '"') return AtomExpr::str(string_lit());
    if (!host_mode && c == '(') {
      ++pos_;
      AtomExpr e = atom_expr(false);
      expect_sym(")");
      return e;
    }
    if (host_mode) fail("a constant label atom");
    if (accept_word("indeg")) {
      expect_sym("(");
      std::string id = ident();
      expect_sym(")");
      return AtomExpr::degree(AtomExpr::Kind::Indeg, std::move(id));
    }
    if (accept_word("outdeg")) {
      expect_sym("(");
      std::string id = ident();
      expect_sym(")");
      return AtomExpr::degree(AtomExpr::Kind::Outdeg, std::move(id));
    }
    return AtomExpr::var(ident());
  }

  HostLabel const_label(const RuleLabel& rl) {
    HostLabel hl;
    hl.mark = rl.mark;
    for (const auto& a : rl.atoms) {
      if (a.kind == AtomExpr::Kind::IntConst)
        hl.list.emplace_back(a.int_value);
      else
        hl.list.emplace_back(a.name);  // StrConst; host mode admits no others
    }
    return hl;
  }

  // --- conditions -----------------------------------------------------------

  Condition condition() {
    Condition c = cond_and();
    while (accept_word("or")) c = Condition::disj(std::move(c), cond_and());
    return c;
  }

  Condition cond_and() {
    Condition c = cond_not();
    while (accept_word("and")) c = Condition::conj(std::move(c), cond_not());
    return c;
  }

  Condition cond_not() {
    if (accept_word("not")) return Condition::negate(cond_not());
    return cond_primary();
  }

  Condition cond_primary() {
    skip();
    if (peek_word("int") || peek_word("char") || peek_word("string") ||
        peek_word("atom")) {
      VarType t = var_type();
      expect_sym("(");
      std::string v = ident();
      expect_sym(")");
      return Condition::type_is(t, std::move(v));
    }
    if (accept_word("edge")) {
      expect_sym("(");
      std::string src = ident();
      expect_sym(",");
      std::string tgt = ident();
      std::optional<RuleLabel> l;
      if (accept_sym(",")) l = label(false);
      expect_sym(")");
      return Condition::edge(std::move(src), std::move(tgt), std::move(l));
    }
    if (peek_sym("(")) {
      // Either a parenthesised condition or a parenthesised expression
      // starting a relation; try the condition reading first.
      std::size_t at = pos_;
      ++pos_;
      try {
        Condition c = condition();
        expect_sym(")");
        return c;
      } catch (const ParseError&) {
        pos_ = at;
      }
    }
    AtomExpr lhs = atom_expr(false);
    RelOp op;
    if (accept_sym("!=")) op = RelOp::Ne;
    else if (accept_sym("<=")) op = RelOp::Le;
    else if (accept_sym(">=")) op = RelOp::Ge;
    else if (accept_sym("=")) op = RelOp::Eq;
    else if (accept_sym("<")) op = RelOp::Lt;
    else if (accept_sym(">")) op = RelOp::Gt;
    else fail("a relational operator");
    return Condition::relation(op, std::move(lhs), atom_expr(false));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// --- printing ---------------------------------------------------------------

std::string host_label_text(const HostLabel& l) {
  std::string out;
  if (l.list.empty()) {
    out = "empty";
  } else {
    for (std::size_t i = 0; i < l.list.size(); ++i) {
      if (i) out += ":";
      out += atom_text(l.list[i]);
    }
  }
  if (l.mark != Mark::None) out += std::string(" # ") + mark_name(l.mark);
  return out;
}

// Levels: 0 concat, 1 additive, 2 multiplicative, 3 primary.
int expr_level(const AtomExpr& e) {
  switch (e.kind) {
    case AtomExpr::Kind::Concat: return 0;
    case AtomExpr::Kind::Add:
    case AtomExpr::Kind::Sub: return 1;
    case AtomExpr::Kind::Mul:
    case AtomExpr::Kind::Div: return 2;
    default: return 3;
  }
}

std::string expr_text(const AtomExpr& e, int min_level) {
  std::string out;
  switch (e.kind) {
    case AtomExpr::Kind::IntConst:
      out = std::to_string(e.int_value);
      break;
    case AtomExpr::Kind::StrConst:
      out = "\"" + e.name + "\"";
      break;
    case AtomExpr::Kind::Var:
      out = e.name;
      break;
    case AtomExpr::Kind::Indeg:
      out = "indeg(" + e.name + ")";
      break;
    case AtomExpr::Kind::Outdeg:
      out = "outdeg(" + e.name + ")";
      break;
    case AtomExpr::Kind::Concat:
      out = expr_text(e.args[0], 0) + " . " + expr_text(e.args[1], 1);
      break;
    case AtomExpr::Kind::Add:
      out = expr_text(e.args[0], 1) + " + " + expr_text(e.args[1], 2);
      break;
    case AtomExpr::Kind::Sub:
      out = expr_text(e.args[0], 1) + " - " + expr_text(e.args[1], 2);
      break;
    case AtomExpr::Kind::Mul:
      out = expr_text(e.args[0], 2) + " * " + expr_text(e.args[1], 3);
      break;
    case AtomExpr::Kind::Div:
      out = expr_text(e.args[0], 2) + " / " + expr_text(e.args[1], 3);
      break;
  }
  if (expr_level(e) < min_level) return "(" + out + ")";
  return out;
}

std::string rule_label_text(const RuleLabel& l) {
  std::string out;
  if (l.atoms.empty()) {
    out = "empty";
  } else {
    for (std::size_t i = 0; i < l.atoms.size(); ++i) {
      if (i) out += ":";
      out += expr_text(l.atoms[i], 0);
    }
  }
  if (l.mark != Mark::None) out += std::string(" # ") + mark_name(l.mark);
  return out;
}

// Levels: 0 or, 1 and, 2 not, 3 primary.
int cond_level(const Condition& c) {
  switch (c.kind) {
    case Condition::Kind::Or: return 0;
    case Condition::Kind::And: return 1;
    case Condition::Kind::Not: return 2;
    default: return 3;
  }
}

std::string cond_text(const Condition& c, int min_level) {
  std::string out;
  switch (c.kind) {
    case Condition::Kind::True:
      out = "0 = 0";
      break;
    case Condition::Kind::TypeIs:
      out = std::string(var_type_name(c.type_test)) + "(" + c.var + ")";
      break;
    case Condition::Kind::Edge:
      out = "edge(" + c.src + ", " + c.tgt;
      if (c.label) out += ", " + rule_label_text(*c.label);
      out += ")";
      break;
    case Condition::Kind::Rel:
      out = expr_text(c.exprs[0], 0) + " " + rel_op_text(c.rel) + " " +
            expr_text(c.exprs[1], 0);
      break;
    case Condition::Kind::Not:
      out = "not " + cond_text(c.args[0], 2);
      break;
    case Condition::Kind::And:
      out = cond_text(c.args[0], 1) + " and " + cond_text(c.args[1], 2);
      break;
    case Condition::Kind::Or:
      out = cond_text(c.args[0], 0) + " or " + cond_text(c.args[1], 1);
      break;
  }
  if (cond_level(c) < min_level) return "(" + out + ")";
  return out;
}

bool loopable_without_parens(const Command& c) {
  switch (c.kind) {
    case Command::Kind::Call:
    case Command::Kind::Skip:
    case Command::Kind::Fail:
    case Command::Kind::Loop:
      return true;
    default:
      return false;
  }
}

std::string command_text(const Command& c) {
  switch (c.kind) {
    case Command::Kind::Call:
      if (c.names.size() == 1) return c.names[0];
      else {
        std::string out = "{";
        for (std::size_t i = 0; i < c.names.size(); ++i) {
          if (i) out += ", ";
          out += c.names[i];
        }
        return out + "}";
      }
    case Command::Kind::Seq:
      return command_text(c.children[0]) + "; " + command_text(c.children[1]);
    case Command::Kind::Loop: {
      const Command& body = c.children[0];
      if (loopable_without_parens(body)) return command_text(body) + "!";
      return "(" + command_text(body) + ")!";
    }
    case Command::Kind::If:
    case Command::Kind::Try: {
      std::string out = c.kind == Command::Kind::If ? "if " : "try ";
      out += command_text(c.children[0]);
      out += " then (" + command_text(c.children[1]) + ")";
      if (c.children[2] != Command::skip())
        out += " else (" + command_text(c.children[2]) + ")";
      return out;
    }
    case Command::Kind::Skip:
      return "skip";
    case Command::Kind::Fail:
      return "fail";
  }
  return "";
}

std::string rule_graph_text(const RuleGraph& g) {
  std::string out = "[";
  for (const auto& n : g.nodes) {
    out += " (" + n.id + (n.root ? "(R)" : "") + ", " +
           rule_label_text(n.label) + ")";
  }
  out += " |";
  for (const auto& e : g.edges) {
    out += " (" + e.id + ", " + e.src + ", " + e.tgt + ", " +
           rule_label_text(e.label) + ")";
  }
  return out + " ]";
}

std::string rule_text(const RuleDecl& r) {
  std::string out = r.name + "(";
  for (std::size_t i = 0; i < r.params.size();) {
    std::size_t j = i;
    while (j < r.params.size() && r.params[j].second == r.params[i].second) ++j;
    if (i) out += "; ";
    for (std::size_t k = i; k < j; ++k) {
      if (k > i) out += ", ";
      out += r.params[k].first;
    }
    out += std::string(" : ") + var_type_name(r.params[i].second);
    i = j;
  }
  out += ")\n";
  out += rule_graph_text(r.lhs) + "\n=>\n" + rule_graph_text(r.rhs) + "\n";
  out += "interface = {";
  for (std::size_t i = 0; i < r.interface.size(); ++i) {
    if (i) out += ", ";
    out += r.interface[i];
  }
  out += "}\n";
  if (!(r.condition == Condition::truth()))
    out += "where " + cond_text(r.condition, 0) + "\n";
  return out;
}

}  // namespace

ParseError::ParseError(int line, int col, std::string expected,
                       std::string found)
    : std::runtime_error(position_text(line, col, expected, found)),
      line_(line),
      col_(col),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Program parse_program(std::string_view text) {
  return Parser(text).program();
}

HostGraph parse_host_graph(std::string_view text) {
  return Parser(text).host_graph();
}

std::string print_program(const Program& p) {
  std::string out;
  for (const auto& d : p.decls) {
    switch (d.kind) {
      case Declaration::Kind::Main:
        out += "Main = " + command_text(d.body) + "\n";
        break;
      case Declaration::Kind::Macro:
        out += d.name + " = " + command_text(d.body) + "\n";
        break;
      case Declaration::Kind::Rule:
        out += rule_text(d.rule);
        break;
    }
    out += "\n";
  }
  return out;
}

std::string print_host_graph(const HostGraph& g) {
  std::string out = "[";
  for (const auto& [k, n] : g.node_map()) {
    out += " (n" + std::to_string(k) + (n.root ? "(R)" : "") + ", " +
           host_label_text(n.label) + ")";
  }
  out += " |";
  int i = 1;
  for (const auto& [e, l] : g.edge_map()) {
    out += " (e" + std::to_string(i++) + ", n" + std::to_string(e.src) +
           ", n" + std::to_string(e.tgt) + ", " + host_label_text(l) + ")";
  }
  return out + " ]";
}

}  // namespace gp2
