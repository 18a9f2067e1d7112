#include "dsl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace dk::dsl {

ParseFailure::ParseFailure(int line, int col, std::string message, std::vector<std::string> expected)
    : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + message),
      line_(line),
      col_(col),
      detail_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

// ---------------------------------------------------------------- lexer

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int l = line, cc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Number, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (c == '^' && i + 1 < src.size() && src[i + 1] == '^') {
      out.push_back({Token::Kind::Punct, "^^", l, cc});
      advance(2);
      continue;
    }
    if (std::string_view(";,=(){}+-*/^").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Punct, std::string(1, c), l, cc});
      advance(1);
      continue;
    }
    throw ParseFailure(l, cc, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

// ------------------------------------------------------- command table

enum class Arg { Expr, Frame, Model, Integer };

struct CommandSig {
  std::vector<Arg> args;
  std::size_t min_args;
  std::map<std::string, char> clauses;  // keyword -> f frame, v flavor, x variable, E expr list, s set, e expr, - flag
  std::vector<std::string> required;
  bool mode = false;
};

const std::map<std::string, CommandSig>& signatures() {
  static const std::map<std::string, CommandSig> table = {
      {"check_poisson", {{Arg::Expr}, 1, {}, {}}},
      {"schouten", {{Arg::Expr, Arg::Expr}, 2, {}, {}}},
      {"pfaffian", {{Arg::Expr, Arg::Integer}, 2, {}, {}}},
      {"divisor", {{Arg::Expr}, 1, {}, {}}},
      {"degeneracy", {{Arg::Expr}, 1, {}, {}}},
      {"classify", {{Arg::Expr}, 1, {{"with", 'E'}}, {}}},
      {"radical", {{Arg::Expr}, 1, {}, {}}},
      {"divides", {{Arg::Expr, Arg::Expr}, 2, {}, {}}},
      {"preserves", {{Arg::Expr, Arg::Expr}, 2, {}, {}}},
      {"lift", {{Arg::Expr}, 1, {{"to", 'f'}}, {"to"}}},
      {"expand", {{Arg::Expr}, 1, {{"in", 'f'}}, {"in"}}},
      {"modular", {{Arg::Expr}, 1, {}, {}}},
      {"hamiltonian", {{Arg::Expr, Arg::Expr}, 2, {}, {}}},
      {"poisson_bracket", {{Arg::Expr, Arg::Expr, Arg::Expr}, 3, {}, {}}},
      {"poisson_vf", {{Arg::Expr, Arg::Expr}, 2, {}, {}}},
      {"foliation", {{Arg::Expr}, 1, {{"over", 'f'}}, {"over"}}},
      {"verify_frame", {{Arg::Frame, Arg::Expr}, 1, {}, {}}},
      {"involutive", {{Arg::Frame}, 1, {}, {}}},
      {"modify", {{Arg::Frame}, 1, {{"keep", 's'}, {"divide", 's'}, {"by", 'e'}}, {"by"}, true}},
      {"residue", {{Arg::Expr}, 1, {{"over", 'f'}, {"via", 'v'}, {"at", 'x'}, {"force", '-'}}, {"over", "via"}}},
      {"cochain", {{Arg::Expr}, 1, {{"over", 'f'}, {"via", 'v'}, {"at", 'x'}, {"force", '-'}}, {"over", "via"}}},
      {"differential", {{Arg::Expr}, 1, {{"over", 'f'}}, {"over"}}},
      {"spinor", {{Arg::Expr}, 1, {{"over", 'f'}, {"via", 'v'}}, {"over", "via"}}},
      {"darboux", {{Arg::Model}, 1, {}, {}}},
  };
  return table;
}

const std::set<std::string> kClauseWords = {"to", "in", "over", "via", "at", "with", "keep", "divide", "by", "force"};

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Job job() {
    Job j;
    while (!at_end()) {
      if (is_punct(";")) {
        ++pos_;
        continue;
      }
      j.stmts.push_back(statement());
      if (!at_end()) expect(";", {";"});
    }
    return j;
  }

  ExprPtr lone_expression() {
    ExprPtr e = expr();
    if (!at_end()) fail_here("unexpected token after expression", {"end of input"});
    return e;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_punct(const char* p, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Punct && peek(k).text == p;
  }
  bool is_ident(std::size_t k = 0) const { return peek(k).kind == Token::Kind::Ident; }

  [[noreturn]] void fail_here(const std::string& msg, std::vector<std::string> expected = {}) const {
    const Token& t = peek();
    std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw ParseFailure(t.line, t.col, msg + ", found " + found, std::move(expected));
  }

  void expect(const char* p, std::vector<std::string> expected) {
    if (!is_punct(p)) fail_here(std::string("expected '") + p + "'", std::move(expected));
    ++pos_;
  }

  std::string ident(const std::string& what) {
    if (!is_ident()) fail_here("expected " + what, {what});
    return toks_[pos_++].text;
  }

  Stmt statement() {
    const Token& t = peek();
    Stmt s{};
    s.line = t.line;
    s.col = t.col;
    if (!is_ident()) fail_here("expected a statement", {"chart", "frame", "name", "command"});
    if (t.text == "chart" && !is_punct("=", 1)) {
      ++pos_;
      s.kind = Stmt::Kind::Chart;
      s.vars.push_back(ident("variable name"));
      while (is_punct(",")) {
        ++pos_;
        s.vars.push_back(ident("variable name"));
      }
      return s;
    }
    if (t.text == "frame" && is_ident(1) && is_punct("=", 2)) {
      ++pos_;
      s.kind = Stmt::Kind::Frame;
      s.name = ident("frame name");
      expect("=", {"="});
      s.expr = expr();
      return s;
    }
    if (is_punct("=", 1)) {
      s.kind = Stmt::Kind::Assign;
      s.name = ident("name");
      expect("=", {"="});
      s.expr = expr();
      return s;
    }
    s.kind = Stmt::Kind::Command;
    s.name = t.text;
    auto it = signatures().find(s.name);
    if (it == signatures().end()) {
      std::vector<std::string> names = command_names();
      names.insert(names.begin(), {"chart", "frame", "<name> ="});
      fail_here("unknown command", names);
    }
    ++pos_;
    const CommandSig& sig = it->second;
    if (sig.mode) {
      if (!is_ident() || (peek().text != "lower" && peek().text != "upper")) fail_here("expected modification kind", {"lower", "upper"});
      s.mode = toks_[pos_++].text;
    }
    if (!at_end() && !is_punct(";") && !clause_word()) {
      s.args.push_back(expr());
      while (is_punct(",")) {
        ++pos_;
        s.args.push_back(expr());
      }
    }
    while (clause_word()) {
      Clause c{toks_[pos_++].text, {}};
      auto ck = sig.clauses.find(c.keyword);
      if (ck == sig.clauses.end()) {
        --pos_;
        fail_here("clause not accepted by " + s.name);
      }
      if (ck->second != '-') {
        c.values.push_back(expr());
        while (ck->second == 'E' && is_punct(",")) {
          ++pos_;
          c.values.push_back(expr());
        }
      }
      s.clauses.push_back(std::move(c));
    }
    return s;
  }

  bool clause_word() const { return is_ident() && kClauseWords.count(peek().text) > 0; }

  ExprPtr make(Expr::Kind k, const Token& at, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = at.line;
    e->col = at.col;
    e->args = std::move(args);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = wedge_expr();
    while (is_punct("+") || is_punct("-")) {
      const Token& op = toks_[pos_++];
      ExprPtr rhs = wedge_expr();
      lhs = make(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op, {lhs, rhs});
    }
    return lhs;
  }

  ExprPtr wedge_expr() {
    ExprPtr lhs = product();
    while (is_punct("^^")) {
      const Token& op = toks_[pos_++];
      lhs = make(Expr::Kind::Wedge, op, {lhs, product()});
    }
    return lhs;
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    while (is_punct("*") || is_punct("/")) {
      const Token& op = toks_[pos_++];
      ExprPtr rhs = unary();
      lhs = make(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op, {lhs, rhs});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (is_punct("-")) {
      const Token& op = toks_[pos_++];
      return make(Expr::Kind::Neg, op, {unary()});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (is_punct("^")) {
      const Token& op = toks_[pos_++];
      return make(Expr::Kind::Pow, op, {base, atom()});
    }
    return base;
  }

  ExprPtr atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) {
      ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->value = Rational(t.text);
      e->line = t.line;
      e->col = t.col;
      return e;
    }
    if (t.kind == Token::Kind::Ident) {
      ++pos_;
      if (is_punct("(")) {
        ++pos_;
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Call;
        e->name = t.text;
        e->line = t.line;
        e->col = t.col;
        if (!is_punct(")")) {
          e->args.push_back(expr());
          while (is_punct(",") || is_punct(";")) {
            e->semicolons = is_punct(";");
            ++pos_;
            e->args.push_back(expr());
          }
        }
        expect(")", {")"});
        return e;
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Name;
      e->name = t.text;
      e->line = t.line;
      e->col = t.col;
      return e;
    }
    if (is_punct("(")) {
      ++pos_;
      ExprPtr e = expr();
      expect(")", {")"});
      return e;
    }
    if (is_punct("{")) {
      ++pos_;
      std::vector<ExprPtr> members;
      if (!is_punct("}")) {
        members.push_back(expr());
        while (is_punct(",")) {
          ++pos_;
          members.push_back(expr());
        }
      }
      expect("}", {"}"});
      return make(Expr::Kind::Set, t, std::move(members));
    }
    fail_here("expected an expression", {"number", "name", "(", "{"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// -------------------------------------------------------------- resolver

class Resolver {
 public:
  void run(const Job& job) {
    for (const auto& s : job.stmts) statement(s);
  }

 private:
  enum class Sym { Var, Value, Frame };

  [[noreturn]] static void fail_at(const Expr& e, const std::string& msg, std::vector<std::string> expected = {}) {
    throw ParseFailure(e.line, e.col, msg, std::move(expected));
  }

  void statement(const Stmt& s) {
    if (s.kind == Stmt::Kind::Chart) {
      if (chart_) throw ParseFailure(s.line, s.col, "chart already declared");
      chart_ = true;
      for (const auto& v : s.vars) {
        if (syms_.count(v)) throw ParseFailure(s.line, s.col, "duplicate variable '" + v + "'");
        syms_[v] = Sym::Var;
        vars_.push_back(v);
      }
      return;
    }
    if (!chart_) throw ParseFailure(s.line, s.col, "expected a chart declaration first", {"chart"});
    switch (s.kind) {
      case Stmt::Kind::Assign:
        value(*s.expr);
        define(s, Sym::Value);
        break;
      case Stmt::Kind::Frame:
        frame(*s.expr);
        define(s, Sym::Frame);
        break;
      case Stmt::Kind::Command:
        command(s);
        break;
      case Stmt::Kind::Chart:
        break;
    }
  }

  void define(const Stmt& s, Sym kind) {
    auto it = syms_.find(s.name);
    if (it != syms_.end() && it->second == Sym::Var)
      throw ParseFailure(s.line, s.col, "'" + s.name + "' is a chart variable");
    if (is_basis_token(s.name)) throw ParseFailure(s.line, s.col, "'" + s.name + "' is reserved for basis elements");
    syms_[s.name] = kind;
  }

  bool is_var(const std::string& n) const {
    auto it = syms_.find(n);
    return it != syms_.end() && it->second == Sym::Var;
  }

  bool is_basis_token(const std::string& n) const {
    if (n.size() >= 2 && (n[0] == 'D' || n[0] == 'd') && is_var(n.substr(1))) return true;
    if (n.size() >= 2 && n[0] == 'e' && std::all_of(n.begin() + 1, n.end(), ::isdigit) && n[1] != '0') return true;
    return false;
  }

  void value(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Number:
        return;
      case Expr::Kind::Name: {
        auto it = syms_.find(e.name);
        if (it != syms_.end()) {
          if (it->second == Sym::Frame) fail_at(e, "'" + e.name + "' is a frame, not a value");
          return;
        }
        if (is_basis_token(e.name)) return;
        fail_at(e, "unknown name '" + e.name + "'");
      }
      case Expr::Kind::Call:
        fail_at(e, "'" + e.name + "(...)' is not a value");
      case Expr::Kind::Set:
        fail_at(e, "index set is not a value");
      default:
        for (const auto& a : e.args) value(*a);
        if (e.kind == Expr::Kind::Pow && e.args[1]->kind != Expr::Kind::Number)
          fail_at(*e.args[1], "exponent must be a nonnegative integer", {"number"});
        if (e.kind == Expr::Kind::Pow && e.args[1]->value.get_den() != 1)
          fail_at(*e.args[1], "exponent must be a nonnegative integer", {"number"});
    }
  }

  void variable(const Expr& e) {
    if (e.kind != Expr::Kind::Name || !is_var(e.name)) fail_at(e, "expected a chart variable", vars_);
  }

  void integer(const Expr& e) {
    if (e.kind != Expr::Kind::Number || e.value.get_den() != 1) fail_at(e, "expected an integer", {"integer"});
  }

  void index_set(const Expr& e) {
    if (e.kind != Expr::Kind::Set) fail_at(e, "expected an index set", {"{"});
    for (const auto& m : e.args) integer(*m);
  }

  void frame(const Expr& e) {
    if (e.kind == Expr::Kind::Name) {
      auto it = syms_.find(e.name);
      if (it == syms_.end() || it->second != Sym::Frame) fail_at(e, "unknown frame '" + e.name + "'");
      return;
    }
    if (e.kind != Expr::Kind::Call) fail_at(e, "expected a frame", frame_kinds());
    const auto& k = e.name;
    const auto n = e.args.size();
    auto arity = [&](std::size_t want) {
      if (n != want) fail_at(e, k + " takes " + std::to_string(want) + " argument(s)");
    };
    if (k == "tangent") {
      arity(0);
    } else if (k == "log" || k == "zero" || k == "scattering") {
      arity(1);
      variable(*e.args[0]);
    } else if (k == "bk") {
      arity(2);
      variable(*e.args[0]);
      integer(*e.args[1]);
    } else if (k == "elliptic" || k == "elliptic_log") {
      arity(2);
      variable(*e.args[0]);
      variable(*e.args[1]);
    } else if (k == "normal_crossing") {
      if (n == 0) fail_at(e, "normal_crossing needs variables");
      for (const auto& a : e.args) variable(*a);
    } else if (k == "custom") {
      for (const auto& a : e.args) value(*a);
    } else if (k == "lower" || k == "upper") {
      arity(3);
      frame(*e.args[0]);
      index_set(*e.args[1]);
      value(*e.args[2]);
    } else if (k == "fiber") {
      arity(2);
      frame(*e.args[0]);
      frame(*e.args[1]);
    } else {
      fail_at(e, "unknown frame kind '" + k + "'", frame_kinds());
    }
  }

  void model(const Expr& e) {
    static const std::vector<std::string> kinds = {"nondegenerate", "log", "bk", "scattering",
                                                   "elliptic", "elliptic_zero", "elliptic_log"};
    const std::string& k = e.name;
    if ((e.kind != Expr::Kind::Name && e.kind != Expr::Kind::Call) ||
        std::find(kinds.begin(), kinds.end(), k) == kinds.end())
      fail_at(e, "unknown Darboux model", kinds);
    if (e.kind == Expr::Kind::Name && k == "bk") fail_at(e, "bk needs a power, e.g. bk(3)");
    if (e.kind == Expr::Kind::Call) {
      if (k == "bk") {
        if (e.args.size() != 1) fail_at(e, "bk takes one argument");
        integer(*e.args[0]);
      } else if (k == "elliptic") {
        if (e.args.size() != 1) fail_at(e, "elliptic takes one argument");
        value(*e.args[0]);
      } else {
        fail_at(e, k + " takes no arguments");
      }
    }
  }

  void command(const Stmt& s) {
    const CommandSig& sig = signatures().at(s.name);
    if (s.args.size() < sig.min_args || s.args.size() > sig.args.size())
      throw ParseFailure(s.line, s.col, s.name + " takes " + std::to_string(sig.min_args) +
                                            (sig.min_args == sig.args.size() ? "" : "-" + std::to_string(sig.args.size())) +
                                            " argument(s)");
    for (std::size_t i = 0; i < s.args.size(); ++i) {
      switch (sig.args[i]) {
        case Arg::Expr: value(*s.args[i]); break;
        case Arg::Frame: frame(*s.args[i]); break;
        case Arg::Model: model(*s.args[i]); break;
        case Arg::Integer: integer(*s.args[i]); break;
      }
    }
    std::set<std::string> seen;
    for (const auto& c : s.clauses) {
      if (!seen.insert(c.keyword).second) throw ParseFailure(s.line, s.col, "repeated clause '" + c.keyword + "'");
      char kind = sig.clauses.at(c.keyword);
      for (const auto& v : c.values) {
        switch (kind) {
          case 'f': frame(*v); break;
          case 'x': variable(*v); break;
          case 's': index_set(*v); break;
          case 'v':
            if (v->kind != Expr::Kind::Name) fail_at(*v, "expected a flavor name");
            break;
          default: value(*v);
        }
      }
    }
    for (const auto& r : sig.required) {
      if (!seen.count(r)) throw ParseFailure(s.line, s.col, s.name + " needs a '" + r + "' clause", {r});
    }
    if (s.name == "modify") {
      const char* need = s.mode == "lower" ? "keep" : "divide";
      const char* other = s.mode == "lower" ? "divide" : "keep";
      if (!seen.count(need)) throw ParseFailure(s.line, s.col, "modify " + s.mode + " needs a '" + need + "' clause", {need});
      if (seen.count(other)) throw ParseFailure(s.line, s.col, "modify " + s.mode + " does not take '" + other + "'");
    }
  }

  bool chart_ = false;
  std::map<std::string, Sym> syms_;
  std::vector<std::string> vars_;
};

// -------------------------------------------------------------- printer

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Wedge: return 2;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 3;
    case Expr::Kind::Neg: return 4;
    case Expr::Kind::Pow: return 5;
    default: return 6;
  }
}

std::string wrap_if(const Expr& e, bool parens) {
  std::string s = format_expr(e);
  return parens ? "(" + s + ")" : s;
}

}  // namespace

std::string format_expr(const Expr& e) {
  const int p = precedence(e);
  switch (e.kind) {
    case Expr::Kind::Number: return e.value.get_str();
    case Expr::Kind::Name: return e.name;
    case Expr::Kind::Neg: return "-" + wrap_if(*e.args[0], precedence(*e.args[0]) < p);
    case Expr::Kind::Pow: return wrap_if(*e.args[0], precedence(*e.args[0]) <= p) + "^" + wrap_if(*e.args[1], precedence(*e.args[1]) <= p);
    case Expr::Kind::Call:
    case Expr::Kind::Set: {
      std::string s = e.kind == Expr::Kind::Call ? e.name + "(" : "{";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += e.semicolons ? "; " : ", ";
        s += format_expr(*e.args[i]);
      }
      return s + (e.kind == Expr::Kind::Call ? ")" : "}");
    }
    default: {
      const char* op = e.kind == Expr::Kind::Add ? " + " : e.kind == Expr::Kind::Sub ? " - " :
                       e.kind == Expr::Kind::Wedge ? "^^" : e.kind == Expr::Kind::Mul ? "*" : "/";
      return wrap_if(*e.args[0], precedence(*e.args[0]) < p) + op + wrap_if(*e.args[1], precedence(*e.args[1]) <= p);
    }
  }
}

std::string format_stmt(const Stmt& s) {
  std::string out;
  switch (s.kind) {
    case Stmt::Kind::Chart:
      out = "chart ";
      for (std::size_t i = 0; i < s.vars.size(); ++i) out += (i ? ", " : "") + s.vars[i];
      return out;
    case Stmt::Kind::Assign: return s.name + " = " + format_expr(*s.expr);
    case Stmt::Kind::Frame: return "frame " + s.name + " = " + format_expr(*s.expr);
    case Stmt::Kind::Command:
      out = s.name;
      if (!s.mode.empty()) out += " " + s.mode;
      for (std::size_t i = 0; i < s.args.size(); ++i) out += (i ? ", " : " ") + format_expr(*s.args[i]);
      for (const auto& c : s.clauses) {
        out += " " + c.keyword;
        for (std::size_t i = 0; i < c.values.size(); ++i) out += (i ? ", " : " ") + format_expr(*c.values[i]);
      }
      return out;
  }
  return out;
}

std::string format(const Job& job) {
  std::string out;
  for (const auto& s : job.stmts) out += format_stmt(s) + ";\n";
  return out;
}

Job parse(std::string_view source) {
  Job job = Parser(source).job();
  Resolver().run(job);
  return job;
}

ExprPtr parse_expression(std::string_view source) { return Parser(source).lone_expression(); }

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, sig] : signatures()) v.push_back(k);
    return v;
  }();
  return names;
}

const std::vector<std::string>& frame_kinds() {
  static const std::vector<std::string> kinds = {"tangent", "log", "bk", "zero", "scattering", "elliptic", "elliptic_log",
                                                 "normal_crossing", "custom", "lower", "upper", "fiber"};
  return kinds;
}

}  // namespace dk::dsl
