#include "cocond/problem.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace cocond {

namespace {

const std::set<std::string> kReserved{
    "atoms", "constraint", "ce",     "assess", "query", "P",
    "qc",    "v",          "coherent", "bounds", "table", "expand"};

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int col = 1;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t k) {
    for (size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      t.kind = Token::Kind::Ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t j = i;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.'))
        ++j;
      if (j < text.size() && text[j] == '/') {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
          ++j;
      }
      t.kind = Token::Kind::Number;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (c == ':') {
      if (i + 1 >= text.size() || text[i + 1] != '=')
        throw ParseError(line, col, "expected ':='");
      t.kind = Token::Kind::Punct;
      t.text = ":=";
      advance(2);
    } else if (std::string(";,()!&|^=").find(c) != std::string::npos) {
      t.kind = Token::Kind::Punct;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::Kind::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(lex(text)) {}

  ProblemFile parse_file() {
    ProblemFile p;
    while (peek().kind != Token::Kind::End) statement(p);
    return p;
  }

  CompoundRef parse_single_compound(const ProblemFile& p) {
    CompoundRef c = compound(p);
    if (peek().kind != Token::Kind::End)
      throw error(peek(), "unexpected trailing input");
    return c;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& get() { return tokens_[pos_++]; }

  static ParseError error(const Token& t, const std::string& msg) {
    return ParseError(t.line, t.col, msg);
  }

  bool at_punct(const std::string& s) const {
    return peek().kind == Token::Kind::Punct && peek().text == s;
  }
  bool at_ident(const std::string& s) const {
    return peek().kind == Token::Kind::Ident && peek().text == s;
  }

  void expect_punct(const std::string& s) {
    if (!at_punct(s)) throw error(peek(), "expected '" + s + "'");
    ++pos_;
  }

  std::string expect_name() {
    if (peek().kind != Token::Kind::Ident)
      throw error(peek(), "expected a name");
    if (kReserved.count(peek().text))
      throw error(peek(), "'" + peek().text + "' is a reserved word");
    return get().text;
  }

  void statement(ProblemFile& p) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident) throw error(t, "expected a statement");
    if (t.text == "atoms") {
      ++pos_;
      atoms_statement(p);
    } else if (t.text == "constraint") {
      ++pos_;
      p.constraints.push_back(event(p));
      expect_punct(";");
    } else if (t.text == "ce") {
      ++pos_;
      ce_statement(p);
    } else if (t.text == "assess") {
      ++pos_;
      assess_statement(p);
    } else if (t.text == "query") {
      ++pos_;
      query_statement(p);
    } else {
      throw error(t, "expected 'atoms', 'constraint', 'ce', 'assess' or 'query'");
    }
  }

  void atoms_statement(ProblemFile& p) {
    while (true) {
      const Token& t = peek();
      std::string name = expect_name();
      if (std::count(p.atom_names.begin(), p.atom_names.end(), name) ||
          std::count(p.ce_names.begin(), p.ce_names.end(), name))
        throw error(t, "duplicate name '" + name + "'");
      p.atom_names.push_back(name);
      if (at_punct(",")) {
        ++pos_;
        continue;
      }
      expect_punct(";");
      return;
    }
  }

  void ce_statement(ProblemFile& p) {
    const Token& t = peek();
    std::string name = expect_name();
    if (std::count(p.atom_names.begin(), p.atom_names.end(), name) ||
        std::count(p.ce_names.begin(), p.ce_names.end(), name))
      throw error(t, "duplicate name '" + name + "'");
    if (p.ce_names.size() >= 20)
      throw error(t, "too many conditional events (limit 20)");
    expect_punct(":=");
    Event consequent = event(p);
    expect_punct("|");
    Event antecedent = event(p);
    expect_punct(";");
    p.ce_names.push_back(name);
    p.family.push_back({std::move(consequent), std::move(antecedent)});
  }

  void assess_statement(ProblemFile& p) {
    if (!at_ident("P")) throw error(peek(), "expected 'P('");
    ++pos_;
    expect_punct("(");
    CompoundRef target = compound(p);
    expect_punct(")");
    expect_punct("=");
    const Token& num = peek();
    if (num.kind != Token::Kind::Number)
      throw error(num, "expected a rational number");
    Rat value;
    try {
      value = parse_rational(get().text);
    } catch (const std::invalid_argument& e) {
      throw error(num, e.what());
    }
    if (!in_unit_interval(value))
      throw error(num, "previsions must lie in [0,1]");
    for (const AssessmentLine& line : p.assessments)
      if (line.target == target)
        throw error(num, "duplicate assessment for the same compound");
    expect_punct(";");
    p.assessments.push_back({target, std::move(value)});
  }

  void query_statement(ProblemFile& p) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident) throw error(t, "expected a query kind");
    Query q;
    if (t.text == "coherent") {
      ++pos_;
      q.kind = Query::Kind::Coherent;
    } else if (t.text == "bounds" || t.text == "table" || t.text == "expand") {
      q.kind = t.text == "bounds"  ? Query::Kind::Bounds
               : t.text == "table" ? Query::Kind::Table
                                   : Query::Kind::Expand;
      ++pos_;
      expect_punct("(");
      q.target = compound(p);
      expect_punct(")");
    } else {
      throw error(t, "expected 'coherent', 'bounds', 'table' or 'expand'");
    }
    expect_punct(";");
    p.queries.push_back(std::move(q));
  }

  size_t member(const ProblemFile& p) {
    const Token& t = peek();
    std::string name = expect_name();
    for (size_t i = 0; i < p.ce_names.size(); ++i)
      if (p.ce_names[i] == name) return i;
    throw error(t, "unknown conditional event '" + name + "'");
  }

  CompoundRef compound(const ProblemFile& p) {
    CompoundRef c;
    if (at_ident("qc")) {
      ++pos_;
      expect_punct("(");
      size_t i = member(p);
      expect_punct(",");
      size_t j = member(p);
      expect_punct(")");
      if (i == j) throw error(peek(), "quasi conjunction needs two distinct members");
      c.op = CompoundRef::Op::Quasi;
      c.mask = (uint32_t{1} << i) | (uint32_t{1} << j);
      return c;
    }
    c.mask = uint32_t{1} << member(p);
    bool disj = false;
    bool first = true;
    while (at_punct("^") || at_ident("v")) {
      bool this_disj = at_ident("v");
      const Token& op = get();
      if (first) {
        disj = this_disj;
        first = false;
      } else if (this_disj != disj) {
        throw error(op, "cannot mix '^' and 'v' in one compound");
      }
      const Token& t = peek();
      uint32_t bit = uint32_t{1} << member(p);
      if (c.mask & bit) throw error(t, "duplicate member in compound");
      c.mask |= bit;
    }
    c.op = disj ? CompoundRef::Op::Disjunction : CompoundRef::Op::Conjunction;
    return c;
  }

  Event event(const ProblemFile& p) { return event_or(p); }

  Event event_or(const ProblemFile& p) {
    Event e = event_and(p);
    while (at_ident("v")) {
      ++pos_;
      e = e || event_and(p);
    }
    return e;
  }

  Event event_and(const ProblemFile& p) {
    Event e = event_unary(p);
    while (at_punct("&")) {
      ++pos_;
      e = e && event_unary(p);
    }
    return e;
  }

  Event event_unary(const ProblemFile& p) {
    if (at_punct("!")) {
      ++pos_;
      return !event_unary(p);
    }
    if (at_punct("(")) {
      ++pos_;
      Event e = event_or(p);
      expect_punct(")");
      return e;
    }
    const Token& t = peek();
    std::string name = expect_name();
    if (!std::count(p.atom_names.begin(), p.atom_names.end(), name))
      throw error(t, "unknown atom '" + name + "'");
    return Event::atom(name);
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(int line_, int col_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ", col " +
                         std::to_string(col_) + ": " + message),
      line(line_),
      col(col_) {}

size_t ProblemFile::member_index(const std::string& name) const {
  for (size_t i = 0; i < ce_names.size(); ++i)
    if (ce_names[i] == name) return i;
  throw std::invalid_argument("unknown conditional event '" + name + "'");
}

ProblemFile parse_problem(const std::string& text) {
  return Parser(text).parse_file();
}

CompoundRef parse_compound(const std::string& text, const ProblemFile& p) {
  return Parser(text).parse_single_compound(p);
}

std::string compound_text(const CompoundRef& c, const ProblemFile& p) {
  std::vector<std::string> names;
  for (size_t i = 0; i < p.ce_names.size(); ++i)
    if (c.mask >> i & 1) names.push_back(p.ce_names[i]);
  if (c.op == CompoundRef::Op::Quasi)
    return "qc(" + names.at(0) + ", " + names.at(1) + ")";
  std::string sep = c.op == CompoundRef::Op::Disjunction ? " v " : " ^ ";
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) out += (i ? sep : "") + names[i];
  return out;
}

std::string pretty_print(const ProblemFile& p) {
  std::ostringstream os;
  if (!p.atom_names.empty()) {
    os << "atoms ";
    for (size_t i = 0; i < p.atom_names.size(); ++i)
      os << (i ? ", " : "") << p.atom_names[i];
    os << ";\n";
  }
  for (const Event& e : p.constraints) os << "constraint " << e.to_string() << ";\n";
  for (size_t i = 0; i < p.family.size(); ++i)
    os << "ce " << p.ce_names[i] << " := " << p.family[i].consequent.to_string()
       << " | " << p.family[i].antecedent.to_string() << ";\n";
  for (const AssessmentLine& a : p.assessments)
    os << "assess P(" << compound_text(a.target, p)
       << ") = " << to_string(a.value) << ";\n";
  for (const Query& q : p.queries) {
    os << "query ";
    switch (q.kind) {
      case Query::Kind::Coherent:
        os << "coherent";
        break;
      case Query::Kind::Bounds:
        os << "bounds(" << compound_text(*q.target, p) << ")";
        break;
      case Query::Kind::Table:
        os << "table(" << compound_text(*q.target, p) << ")";
        break;
      case Query::Kind::Expand:
        os << "expand(" << compound_text(*q.target, p) << ")";
        break;
    }
    os << ";\n";
  }
  return os.str();
}

}  // namespace cocond
