#include "bezout/sysio.hpp"

#include <cctype>
#include <json.hpp>
#include <sstream>

#include "bezout/errors.hpp"

namespace bezout {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, Equals, Colon, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int column;  // 1-based
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::Slash: return "'/'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Equals: return "'='";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of line";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::Number, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      while (j < line.size() && line[j] == '\'') ++j;  // primes: d', e''
      out.push_back({Tok::Ident, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '/': k = Tok::Slash; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '=': k = Tok::Equals; break;
      case ':': k = Tok::Colon; break;
      case ',': k = Tok::Comma; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", lineno, col);
    }
    out.push_back({k, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

// sum     := signed (('+' | '-') signed)*
// signed  := '-' signed | product
// product := power ('*' power)*
// power   := atom ('^' number)?
// atom    := number ('/' number)? | identifier | '(' sum ')'
class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, std::size_t start, const VarTablePtr& vars, int line)
      : toks_(toks), pos_(start), vars_(vars), line_(line) {}

  MultiPoly equation() {
    MultiPoly lhs = sum();
    if (peek().kind == Tok::Equals) {
      ++pos_;
      lhs -= sum();
    }
    expect_end({"'+'", "'-'", "'*'", "'^'", "'='", "end of line"});
    return lhs;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(std::initializer_list<const char*> expected) const {
    std::string msg = "unexpected " + std::string(describe(peek().kind));
    if (!peek().text.empty()) msg += " '" + peek().text + "'";
    msg += "; expected ";
    bool first = true;
    for (const char* e : expected) {
      msg += (first ? "" : ", ") + std::string(e);
      first = false;
    }
    throw ParseError(msg, line_, peek().column);
  }

  void expect_end(std::initializer_list<const char*> expected) const {
    if (peek().kind != Tok::End) fail(expected);
  }

  MultiPoly sum() {
    MultiPoly acc = signed_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = peek().kind == Tok::Minus;
      ++pos_;
      MultiPoly rhs = signed_term();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  MultiPoly signed_term() {
    if (peek().kind == Tok::Minus) {
      ++pos_;
      return -signed_term();
    }
    return product();
  }

  MultiPoly product() {
    MultiPoly acc = power();
    while (peek().kind == Tok::Star) {
      ++pos_;
      acc *= power();
    }
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek().kind == Tok::Caret) {
      ++pos_;
      if (peek().kind != Tok::Number) fail({"non-negative integer exponent"});
      unsigned long e = std::stoul(peek().text);
      if (e > 1000) throw ParseError("exponent too large", line_, peek().column);
      ++pos_;
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        ++pos_;
        Integer num(t.text);
        Integer den(1);
        if (peek().kind == Tok::Slash) {
          ++pos_;
          if (peek().kind != Tok::Number) fail({"positive integer denominator"});
          den = Integer(peek().text);
          if (den == 0) throw ParseError("zero denominator", line_, peek().column);
          ++pos_;
        }
        Rational q(num, den);
        q.canonicalize();
        return MultiPoly(vars_, q);
      }
      case Tok::Ident: {
        auto v = vars_->find(t.text);
        if (!v) throw ParseError("undeclared variable '" + t.text + "'", line_, t.column);
        ++pos_;
        return MultiPoly::variable(vars_, *v);
      }
      case Tok::LParen: {
        ++pos_;
        MultiPoly inner = sum();
        if (peek().kind != Tok::RParen) fail({"'+'", "'-'", "'*'", "')'"});
        ++pos_;
        return inner;
      }
      default:
        fail({"number", "identifier", "'('", "'-'"});
    }
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  VarTablePtr vars_;
  int line_;
};

std::vector<Token> names_after_colon(const std::vector<Token>& toks, int lineno) {
  std::vector<Token> names;
  for (std::size_t i = 2; toks[i].kind != Tok::End; ++i) {
    if (toks[i].kind == Tok::Comma) continue;
    if (toks[i].kind != Tok::Ident) {
      throw ParseError("unexpected " + std::string(describe(toks[i].kind)) + "; expected identifier", lineno,
                       toks[i].column);
    }
    names.push_back(toks[i]);
  }
  return names;
}

}  // namespace

SystemDocument parse_document(const std::string& text) {
  SystemDocument doc;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::pair<std::vector<Token>, int>> pending;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      doc.comments.push_back(line.substr(first + 1));
      continue;
    }
    auto toks = tokenize(line, lineno);
    bool directive = toks.size() >= 2 && toks[0].kind == Tok::Ident && toks[1].kind == Tok::Colon;
    if (!directive) {
      // Without a vars: directive the table is empty, so the first identifier
      // fails in reading order unless a syntax error precedes it.
      VarTablePtr table = doc.vars ? doc.vars : make_vars({});
      ExprParser p(toks, 0, table, lineno);
      try {
        doc.equations.push_back(p.equation());
      } catch (const ParseError& e) {
        if (doc.vars || std::string(e.what()).find("undeclared variable") == std::string::npos) throw;
        throw ParseError(e.message() + " (no vars: directive)", e.line(), e.column());
      }
      doc.vars = table;
      doc.equation_lines.push_back(lineno);
      continue;
    }
    const std::string& name = toks[0].text;
    auto names = [&] { return names_after_colon(toks, lineno); };
    auto single = [&](const char* what) {
      auto ns = names_after_colon(toks, lineno);
      if (ns.size() != 1)
        throw ParseError(std::string(what) + ": expected exactly one value", lineno, toks[1].column + 1);
      return ns.front();
    };
    if (name == "vars") {
      if (doc.vars) throw ParseError("duplicate vars directive", lineno, toks[0].column);
      std::vector<std::string> vs;
      for (const auto& t : names()) {
        if (std::find(vs.begin(), vs.end(), t.text) != vs.end())
          throw ParseError("duplicate variable '" + t.text + "'", lineno, t.column);
        vs.push_back(t.text);
      }
      doc.vars = make_vars(std::move(vs));
    } else if (name == "keep") {
      if (doc.keep) throw ParseError("duplicate keep directive", lineno, toks[0].column);
      Token t = single("keep");
      if (!doc.vars || !doc.vars->find(t.text)) throw ParseError("undeclared variable '" + t.text + "'", lineno, t.column);
      doc.keep = t.text;
    } else if (name == "eliminate") {
      for (const auto& t : names()) {
        if (!doc.vars || !doc.vars->find(t.text))
          throw ParseError("undeclared variable '" + t.text + "'", lineno, t.column);
        doc.eliminate.push_back(t.text);
      }
    } else if (name == "method") {
      Token t = single("method");
      static const std::vector<std::string> ok{"sylvester", "bezoutian", "somme1", "somme2"};
      if (std::find(ok.begin(), ok.end(), t.text) == ok.end())
        throw ParseError("unknown method '" + t.text + "'; expected sylvester, bezoutian, somme1 or somme2", lineno,
                         t.column);
      doc.method = t.text;
    } else if (name == "seed") {
      if (toks.size() != 4 || toks[2].kind != Tok::Number)
        throw ParseError("seed: expected a non-negative integer", lineno, toks.size() > 2 ? toks[2].column : toks[1].column + 1);
      doc.seed = std::stoul(toks[2].text);
    } else {
      throw ParseError("unknown directive '" + name + "'; expected vars, keep, eliminate, method or seed", lineno,
                       toks[0].column);
    }
  }
  if (!doc.vars) doc.vars = make_vars({});
  return doc;
}

PolySystem to_system(const SystemDocument& doc) {
  if (!doc.keep) throw ParseError("missing keep directive", 1, 1);
  if (doc.equations.empty()) throw UsageError("system has no equations");
  std::vector<VarId> elim;
  for (const auto& n : doc.eliminate) elim.push_back(doc.vars->id(n));
  return make_system(doc.equations, doc.vars->id(*doc.keep), elim);
}

PolySystem parse_system(const std::string& text) { return to_system(parse_document(text)); }

MultiPoly parse_polynomial(const std::string& text, const VarTablePtr& vars) {
  auto toks = tokenize(text, 1);
  ExprParser p(toks, 0, vars, 1);
  return p.equation();
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  throw UsageError("unknown format '" + name + "'; expected text or json");
}

std::string render_polynomial(const MultiPoly& p) { return p.to_string(); }

std::string render_document(const SystemDocument& doc) {
  std::ostringstream os;
  os << "vars:";
  for (const auto& n : doc.vars->names()) os << " " << n;
  os << "\n";
  if (doc.keep) os << "keep: " << *doc.keep << "\n";
  if (!doc.eliminate.empty()) {
    os << "eliminate:";
    for (const auto& n : doc.eliminate) os << " " << n;
    os << "\n";
  }
  if (doc.method) os << "method: " << *doc.method << "\n";
  if (doc.seed) os << "seed: " << *doc.seed << "\n";
  for (const auto& e : doc.equations) os << e.to_string() << " = 0\n";
  return os.str();
}

namespace {

using ojson = nlohmann::ordered_json;

ojson poly_json(const MultiPoly& p) {
  ojson o = ojson::object();
  for (const auto& [m, c] : p.terms()) {
    std::string key = "(";
    for (std::size_t i = 0; i < m.size(); ++i) key += (i ? "," : "") + std::to_string(m[i]);
    key += ")";
    o[key] = to_fraction_string(c);
  }
  return o;
}

std::string monomial_text(const Monomial& m, const VarTable& vt) {
  MultiPoly t = MultiPoly::term(std::make_shared<const VarTable>(vt), m, 1);
  return t.to_string();
}

}  // namespace

std::string render_report(const EliminationReport& r, Format format, bool trace) {
  const VarTable& vt = *r.vars;
  const unsigned degree = keep_degree(r.resultant, r.keep);
  if (format == Format::Json) {
    ojson j;
    j["schema"] = 1;
    j["method"] = r.method;
    j["vars"] = vt.names();
    j["keep"] = vt.name(r.keep);
    j["resultant"] = poly_json(r.resultant);
    j["apparent"] = poly_json(r.apparent);
    j["stripped_factor"] = poly_json(r.stripped_factor);
    if (r.candidate_superfluous) j["candidate_superfluous"] = poly_json(*r.candidate_superfluous);
    j["degree"] = degree;
    j["degree_ceiling"] = r.degree_ceiling;
    ojson plan;
    plan["equation_degrees"] = r.plan.equation_degrees;
    plan["somme_degree"] = r.plan.somme_degree;
    plan["multiplier_degrees"] = r.plan.multiplier_degrees;
    plan["unknowns"] = r.plan.unknowns;
    plan["conditions"] = r.plan.conditions;
    plan["surplus_count"] = r.plan.surplus_count;
    plan["variation"] = r.plan.variation;
    ojson arb = ojson::array();
    for (const auto& a : r.plan.arbitrary_equations) {
      ojson e;
      e["equation"] = a.equation + 1;
      e["mu"] = monomial_text(a.mu, vt);
      e["nu"] = a.nu ? ojson(monomial_text(*a.nu, vt)) : ojson(nullptr);
      std::vector<std::size_t> partners;
      for (auto p : a.partners) partners.push_back(p + 1);
      e["partners"] = partners;
      arb.push_back(e);
    }
    plan["arbitrary_equations"] = arb;
    j["plan"] = plan;
    ojson runs = ojson::array();
    for (std::size_t i = 0; i < r.run_apparents.size(); ++i)
      runs.push_back({{"variation", r.run_variations[i]}, {"apparent", poly_json(r.run_apparents[i])}});
    j["runs"] = runs;
    j["degenerate_variations"] = r.degenerate_variations;
    if (trace) j["trace"] = r.trace;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "method: " << r.method << "\n";
  os << "resultant: " << r.resultant.to_string() << "\n";
  os << "degree in " << vt.name(r.keep) << ": " << degree << " (ceiling " << r.degree_ceiling << ")\n";
  os << "apparent: " << r.apparent.to_string() << "\n";
  os << "stripped factor: " << r.stripped_factor.to_string() << "\n";
  if (r.candidate_superfluous) os << "candidate superfluous factor: " << r.candidate_superfluous->to_string() << "\n";
  os << "surplus coefficients: " << r.plan.surplus_count << "\n";
  if (trace) {
    os << "trace:\n";
    for (const auto& line : r.trace) os << "  " << line << "\n";
  }
  return os.str();
}

}  // namespace bezout
