#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "bezout/counting.hpp"
#include "bezout/errors.hpp"
#include "bezout/multielim.hpp"
#include "bezout/resolvent1762.hpp"
#include "bezout/resultant2.hpp"
#include "bezout/sysio.hpp"

namespace bezout::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  bool trace = false;
  unsigned long seed = 0;
  bool seed_given = false;
  unsigned runs = 3;
  std::string input;
  std::string var;
  std::string method;
  long vars = 0;
  long degree = 0;
  std::string remove;
  std::string degrees;
  unsigned n = 3;
  std::string p = "0";
  std::string q = "0";
  unsigned digits = 12;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty()) throw UsageError("an input file is required (use '-' for stdin)");
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

ojson poly_json(const MultiPoly& p) {
  ojson o = ojson::object();
  for (const auto& [m, c] : p.terms()) {
    std::string key = "(";
    for (std::size_t i = 0; i < m.size(); ++i) key += (i ? "," : "") + std::to_string(m[i]);
    o[key + ")"] = to_fraction_string(c);
  }
  return o;
}

ojson matrix_json(const RingMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

void print_matrix(std::ostream& out, const RingMatrix& m, const std::string& indent) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m.at(i, j).to_string();
    out << "]\n";
  }
}

// Main variable: --var, else keep, else the first declared variable.
VarId main_variable(const SystemDocument& doc, const Options& o) {
  if (!o.var.empty()) return doc.vars->id(o.var);
  if (doc.keep) return doc.vars->id(*doc.keep);
  if (doc.vars->size() == 0) throw UsageError("no variables declared");
  return 0;
}

std::pair<MultiPoly, MultiPoly> two_equations(const SystemDocument& doc, const char* who) {
  if (doc.equations.size() != 2)
    throw UsageError(std::string(who) + " needs exactly two equations, got " + std::to_string(doc.equations.size()));
  return {doc.equations[0], doc.equations[1]};
}

ojson header(const char* command) {
  ojson j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

int cmd_resultant(const Options& o, std::istream& in, std::ostream& out) {
  SystemDocument doc = parse_document(read_input(o.input, in));
  auto [f, g] = two_equations(doc, "resultant");
  VarId x = main_variable(doc, o);
  std::string method = !o.method.empty() ? o.method : doc.method.value_or("sylvester");
  UniView fv = collect_wrt(f, x), gv = collect_wrt(g, x);
  MultiPoly res(doc.vars);
  std::optional<RingMatrix> shown;
  if (method == "sylvester") {
    SylvesterLayout s = sylvester_matrix(fv, gv);
    res = determinant(s.matrix);
    shown = s.matrix;
  } else if (method == "bezoutian") {
    if (fv.m == gv.m) {
      BezoutianLayout b = bezoutian_matrix(fv, gv);
      res = determinant(b.matrix) * Rational(bezoutian_sign(fv.m));
      shown = b.matrix;
    } else {
      bool swapped = fv.m < gv.m;
      UnequalBezoutian b = swapped ? bezoutian_unequal(gv, fv) : bezoutian_unequal(fv, gv);
      res = divide_or_throw(determinant(b.matrix) * Rational(b.sign), b.extraneous);
      if (swapped && (static_cast<unsigned long>(fv.m) * gv.m) % 2 == 1) res = -res;
      shown = b.matrix;
    }
  } else {
    throw UsageError("resultant: method must be sylvester or bezoutian");
  }
  if (parse_format(o.format) == Format::Json) {
    ojson j = header("resultant");
    j["var"] = doc.vars->name(x);
    j["method"] = method;
    j["vars"] = doc.vars->names();
    j["resultant"] = poly_json(res);
    if (o.trace) j["matrix"] = matrix_json(*shown);
    out << j.dump(2) << "\n";
  } else {
    if (o.trace) {
      out << method << " matrix (" << shown->rows() << "x" << shown->cols() << "):\n";
      print_matrix(out, *shown, "  ");
    }
    out << "resultant: " << res.to_string() << "\n";
  }
  return 0;
}

int cmd_bezoutian(const Options& o, std::istream& in, std::ostream& out) {
  SystemDocument doc = parse_document(read_input(o.input, in));
  auto [f, g] = two_equations(doc, "bezoutian");
  VarId x = main_variable(doc, o);
  UniView fv = collect_wrt(f, x), gv = collect_wrt(g, x);
  const bool json = parse_format(o.format) == Format::Json;
  ojson j = header("bezoutian");
  j["var"] = doc.vars->name(x);
  if (fv.m == gv.m) {
    BezoutianLayout b = bezoutian_matrix(fv, gv);
    MultiPoly det = determinant(b.matrix);
    if (json) {
      j["matrix"] = matrix_json(b.matrix);
      j["determinant"] = poly_json(det);
      j["sign"] = bezoutian_sign(fv.m);
    } else {
      out << "bezoutian (" << fv.m << "x" << fv.m << "):\n";
      print_matrix(out, b.matrix, "  ");
      if (o.trace)
        for (std::size_t i = 0; i < b.row_provenance.size(); ++i)
          out << "  row " << i + 1 << ": (" << b.row_provenance[i].second.to_string() << ")*F - ("
              << b.row_provenance[i].first.to_string() << ")*G\n";
      out << "determinant: " << det.to_string() << "\n";
      out << "determinant = " << bezoutian_sign(fv.m) << " * resultant\n";
    }
  } else {
    if (fv.m < gv.m) std::swap(fv, gv);
    UnequalBezoutian b = bezoutian_unequal(fv, gv);
    MultiPoly det = determinant(b.matrix);
    if (json) {
      j["matrix"] = matrix_json(b.matrix);
      j["determinant"] = poly_json(det);
      j["sign"] = b.sign;
      j["extraneous"] = poly_json(b.extraneous);
    } else {
      out << "reduced bezoutian (" << gv.m << "x" << gv.m << "):\n";
      print_matrix(out, b.matrix, "  ");
      out << "determinant: " << det.to_string() << "\n";
      out << "extraneous factor: " << b.extraneous.to_string() << "\n";
      out << "determinant = " << b.sign << " * extraneous * resultant\n";
    }
  }
  if (json) out << j.dump(2) << "\n";
  return 0;
}

int cmd_identity(const Options& o, std::istream& in, std::ostream& out) {
  SystemDocument doc = parse_document(read_input(o.input, in));
  auto [f, g] = two_equations(doc, "identity");
  VarId x = main_variable(doc, o);
  IdentityWitness w = bezout_identity(collect_wrt(f, x), collect_wrt(g, x));
  MultiPoly l1 = w.L1.assemble(), l2 = w.L2.assemble();
  if (parse_format(o.format) == Format::Json) {
    ojson j = header("identity");
    j["var"] = doc.vars->name(x);
    j["vars"] = doc.vars->names();
    j["L1"] = poly_json(l1);
    j["L2"] = poly_json(l2);
    out << j.dump(2) << "\n";
  } else {
    out << "L1 = " << l1.to_string() << ", L2 = " << l2.to_string() << "\n";
    if (o.trace) out << "check: L1*P + L2*Q = " << (l1 * f + l2 * g).to_string() << "\n";
  }
  return 0;
}

int cmd_eliminate(const Options& o, std::istream& in, std::ostream& out) {
  SystemDocument doc = parse_document(read_input(o.input, in));
  PolySystem sys = to_system(doc);
  unsigned long seed = o.seed_given ? o.seed : doc.seed.value_or(0);
  std::string method = o.method;
  if (method.empty()) method = (doc.method == "somme1" || doc.method == "somme2") ? *doc.method : "strip";
  EliminationReport r = [&] {
    if (method == "somme1") return method1_eliminate(sys, static_cast<unsigned>(seed));
    if (method == "somme2") return method2_eliminate(sys, static_cast<unsigned>(seed));
    if (method == "strip") return strip_superfluous(sys, o.runs, static_cast<unsigned>(seed));
    throw UsageError("eliminate: method must be somme1, somme2 or strip");
  }();
  out << render_report(r, parse_format(o.format), o.trace);
  return 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) parts.push_back(cur);
  return parts;
}

// u, x, y, z, then v5, v6, ...
std::string count_var_name(long i) {
  static const char* names[] = {"u", "x", "y", "z"};
  return i < 4 ? names[i] : "v" + std::to_string(i + 1);
}

long parse_long(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + ": '" + s + "'");
  }
}

int cmd_count(const Options& o, std::ostream& out) {
  const bool json = parse_format(o.format) == Format::Json;
  ojson j = header("count");
  if (!o.degrees.empty()) {
    std::vector<unsigned> ds;
    for (const auto& part : split(o.degrees, ',')) {
      long d = parse_long(part, "degree");
      if (d < 1) throw UsageError("degrees must be >= 1");
      ds.push_back(static_cast<unsigned>(d));
    }
    Integer prod = resultant_degree_complete(ds);
    MultiPoly form = degree_theorem_difference(ds);
    if (json) {
      j["degrees"] = ds;
      j["product"] = prod.get_str();
      j["difference_form"] = poly_json(form);
      out << j.dump(2) << "\n";
    } else {
      if (o.trace) out << "(1/n!) d^n[(T+t)^n] = " << form.to_string() << "\n";
      out << prod.get_str() << "\n";
    }
    return 0;
  }
  if (o.vars < 1) throw UsageError("count: --vars must be >= 1");
  RemovalSpec spec;
  for (const auto& item : split(o.remove, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("count: --remove items look like u:2");
    std::string name = item.substr(0, colon);
    long power = parse_long(item.substr(colon + 1), "power");
    if (power < 1) throw UsageError("count: removal powers must be >= 1");
    long index = -1;
    for (long i = 0; i < o.vars; ++i)
      if (count_var_name(i) == name) index = i;
    if (index < 0) index = parse_long(name, "variable");
    spec.bounds.emplace_back(static_cast<unsigned>(index), static_cast<unsigned>(power));
  }
  Integer total = num_terms_complete(o.vars, o.degree);
  Integer left = terms_after_removals(o.vars, o.degree, spec);
  if (json) {
    j["n"] = o.vars;
    j["T"] = o.degree;
    j["complete"] = total.get_str();
    j["remaining"] = left.get_str();
    out << j.dump(2) << "\n";
  } else {
    if (o.trace) out << "N = " << total.get_str() << "\n";
    out << left.get_str() << "\n";
  }
  return 0;
}

int cmd_solve1762(const Options& o, std::ostream& out) {
  SolvableClass cls = solvable_class(o.n, parse_rational(o.p), parse_rational(o.q));
  RadicalRoot root = radical_root(cls, o.digits);
  auto vars = make_vars({"x"});
  MultiPoly e(vars);
  for (std::size_t k = 0; k < cls.coeffsE.size(); ++k)
    e += MultiPoly(vars, cls.coeffsE[k]) * MultiPoly::variable(vars, 0).pow(static_cast<unsigned>(cls.n - k));
  if (parse_format(o.format) == Format::Json) {
    ojson j = header("solve1762");
    j["n"] = cls.n;
    j["e1"] = to_fraction_string(cls.e1);
    j["e2"] = to_fraction_string(cls.e2);
    ojson coeffs = ojson::array();
    for (const auto& c : cls.coeffsE) coeffs.push_back(to_fraction_string(c));
    j["coefficients"] = coeffs;
    j["root"] = {{"re", to_decimal(root.value.real(), o.digits)}, {"im", to_decimal(root.value.imag(), o.digits)}};
    j["branch"] = root.branch;
    out << j.dump(2) << "\n";
  } else {
    out << "E: " << e.to_string() << " = 0\n";
    out << "a + b = " << to_short_string(cls.e1) << ", a*b = " << to_short_string(cls.e2) << "\n";
    if (o.trace) out << "branch: " << root.branch << ", residual: " << to_decimal(root.residual, 3) << "\n";
    out << "root: " << to_decimal(root.value, o.digits) << "\n";
  }
  return 0;
}

int cmd_parse(const Options& o, std::istream& in, std::ostream& out) {
  SystemDocument doc = parse_document(read_input(o.input, in));
  if (parse_format(o.format) == Format::Json) {
    ojson j = header("parse");
    j["vars"] = doc.vars->names();
    if (doc.keep) j["keep"] = *doc.keep;
    j["eliminate"] = doc.eliminate;
    if (doc.method) j["method"] = *doc.method;
    if (doc.seed) j["seed"] = *doc.seed;
    ojson eqs = ojson::array();
    for (const auto& e : doc.equations) eqs.push_back(poly_json(e));
    j["equations"] = eqs;
    out << j.dump(2) << "\n";
  } else {
    out << render_document(doc);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact elimination: resultants, Bezoutians, equation-somme methods, term counts."};
  app.name("bezout");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--trace", o.trace, "print the step-by-step construction");
  app.add_option("--seed", o.seed, "arbitrary-equation family selector")->each([&](const std::string&) {
    o.seed_given = true;
  });
  app.add_option("--runs", o.runs, "variations used to strip superfluous factors")->check(CLI::Range(1u, 64u));

  auto* res = app.add_subcommand("resultant", "resultant of two equations in one variable");
  res->add_option("input", o.input, "system file, '-' for stdin");
  res->add_option("--var", o.var, "variable to eliminate");
  res->add_option("--method", o.method, "sylvester | bezoutian");
  auto* bez = app.add_subcommand("bezoutian", "Bezoutian matrix of two equations");
  bez->add_option("input", o.input, "system file, '-' for stdin");
  bez->add_option("--var", o.var, "main variable");
  auto* ident = app.add_subcommand("identity", "L1*P + L2*Q = 1 for coprime univariate P, Q");
  ident->add_option("input", o.input, "system file, '-' for stdin");
  ident->add_option("--var", o.var, "main variable");
  auto* elim = app.add_subcommand("eliminate", "n equations, n-1 unknowns eliminated");
  elim->add_option("input", o.input, "system file, '-' for stdin");
  elim->add_option("--method", o.method, "somme1 | somme2 | strip");
  auto* count = app.add_subcommand("count", "term counts and the degree theorem");
  count->add_option("--vars", o.vars, "number of variables n");
  count->add_option("--degree", o.degree, "degree T of the complete polynomial");
  count->add_option("--remove", o.remove, "removals like u:2,x:1");
  count->add_option("--degrees", o.degrees, "equation degrees like 3,2,2 (degree theorem)");
  auto* s1762 = app.add_subcommand("solve1762", "solvable class and radical root");
  s1762->add_option("--n", o.n, "degree n >= 3");
  s1762->add_option("--p", o.p, "coefficient of x^(n-2)");
  s1762->add_option("--q", o.q, "coefficient of x^(n-3)");
  s1762->add_option("--digits", o.digits, "decimal digits (1..40)");
  auto* parse = app.add_subcommand("parse", "parse and echo a system file");
  parse->add_option("input", o.input, "system file, '-' for stdin");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    if (res->parsed()) return cmd_resultant(o, in, out);
    if (bez->parsed()) return cmd_bezoutian(o, in, out);
    if (ident->parsed()) return cmd_identity(o, in, out);
    if (elim->parsed()) return cmd_eliminate(o, in, out);
    if (count->parsed()) return cmd_count(o, out);
    if (s1762->parsed()) return cmd_solve1762(o, out);
    if (parse->parsed()) return cmd_parse(o, in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateInput& e) {
    err << "degenerate input: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace bezout::cli
