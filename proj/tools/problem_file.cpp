#include "problem_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "pasa/problems.hpp"

namespace pasa::cli {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Strip comments and blanks, tokenize on whitespace.
std::vector<Line> lex(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

// Locale-independent decimal parse.
double parse_real(const std::string& tok, int line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail(line, "bad number '" + tok + "'");
  return v;
}

int parse_int(const std::string& tok, int line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail(line, "bad integer '" + tok + "'");
  return v;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  const Line& next(const std::string& expect) {
    if (pos_ >= lines_.size())
      throw ParseError("unexpected end of file, expected " + expect);
    return lines_[pos_++];
  }

  void expect_keyword(const std::string& kw) {
    const Line& line = next("'" + kw + "'");
    if (line.tokens.size() != 1 || line.tokens[0] != kw)
      fail(line.number, "expected '" + kw + "'");
  }

  Vector numbers_row(int count, const std::string& what) {
    const Line& line = next(what);
    if (static_cast<int>(line.tokens.size()) != count)
      fail(line.number, what + ": expected " + std::to_string(count) + " numbers, got " +
                            std::to_string(line.tokens.size()));
    Vector v(count);
    for (int i = 0; i < count; ++i) v[i] = parse_real(line.tokens[i], line.number);
    return v;
  }

  bool done() const { return pos_ >= lines_.size(); }
  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ProblemFile parse_problem(std::istream& in) {
  Cursor cur(lex(in));
  ProblemFile pf;

  {
    const Line& head = cur.next("'pasa-problem v1' header");
    if (head.tokens.size() != 2 || head.tokens[0] != "pasa-problem" || head.tokens[1] != "v1")
      fail(head.number, "expected header 'pasa-problem v1'");
  }
  {
    const Line& ln = cur.next("'n <int>'");
    if (ln.tokens.size() != 2 || ln.tokens[0] != "n") fail(ln.number, "expected 'n <int>'");
    pf.n = parse_int(ln.tokens[1], ln.number);
    if (pf.n < 1) fail(ln.number, "n must be >= 1");
  }
  {
    const Line& lm = cur.next("'m <int>'");
    if (lm.tokens.size() != 2 || lm.tokens[0] != "m") fail(lm.number, "expected 'm <int>'");
    pf.m = parse_int(lm.tokens[1], lm.number);
    if (pf.m < 0) fail(lm.number, "m must be >= 0");
  }

  pf.a = Matrix(pf.m, pf.n);
  pf.b = Vector(pf.m);
  if (pf.m > 0) {
    cur.expect_keyword("A");
    for (int i = 0; i < pf.m; ++i) pf.a.row(i) = cur.numbers_row(pf.n, "row of A");
    cur.expect_keyword("b");
    pf.b = cur.numbers_row(pf.m, "b");
  }

  {
    const Line& lo = cur.next("'objective quadratic|rosenbrock'");
    if (lo.tokens.size() != 2 || lo.tokens[0] != "objective")
      fail(lo.number, "expected 'objective quadratic|rosenbrock'");
    if (lo.tokens[1] == "quadratic") {
      pf.kind = ProblemFile::Kind::quadratic;
    } else if (lo.tokens[1] == "rosenbrock") {
      pf.kind = ProblemFile::Kind::rosenbrock;
    } else {
      fail(lo.number, "unknown objective '" + lo.tokens[1] + "'");
    }
  }

  if (pf.kind == ProblemFile::Kind::quadratic) {
    cur.expect_keyword("Q");
    pf.q = Matrix(pf.n, pf.n);
    for (int i = 0; i < pf.n; ++i) pf.q.row(i) = cur.numbers_row(pf.n, "row of Q");
    cur.expect_keyword("c");
    pf.c = cur.numbers_row(pf.n, "c");
  }

  cur.expect_keyword("x0");
  pf.x0 = cur.numbers_row(pf.n, "x0");

  if (!cur.done()) {
    const Line& extra = cur.next("end of file");
    fail(extra.number, "unexpected trailing content");
  }
  return pf;
}

ProblemFile parse_problem_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_problem(ss);
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file '" + path + "'");
  return parse_problem(in);
}

std::string emit_problem(const ProblemFile& pf) {
  std::ostringstream out;
  out << "pasa-problem v1\n";
  out << "n " << pf.n << "\n";
  out << "m " << pf.m << "\n";
  auto row = [&](const auto& r) {
    for (Eigen::Index j = 0; j < r.size(); ++j) out << (j ? " " : "") << format_real(r[j]);
    out << "\n";
  };
  if (pf.m > 0) {
    out << "A\n";
    for (int i = 0; i < pf.m; ++i) row(pf.a.row(i));
    out << "b\n";
    row(pf.b);
  }
  if (pf.kind == ProblemFile::Kind::quadratic) {
    out << "objective quadratic\n";
    out << "Q\n";
    for (int i = 0; i < pf.n; ++i) row(pf.q.row(i));
    out << "c\n";
    row(pf.c);
  } else {
    out << "objective rosenbrock\n";
  }
  out << "x0\n";
  row(pf.x0);
  return out.str();
}

Objective make_objective(const ProblemFile& pf) {
  if (pf.kind == ProblemFile::Kind::quadratic) return quadratic_objective(pf.q, pf.c);
  return rosenbrock_objective(pf.n);
}

Polyhedron make_polyhedron(const ProblemFile& pf) { return Polyhedron(pf.a, pf.b); }

}  // namespace pasa::cli
