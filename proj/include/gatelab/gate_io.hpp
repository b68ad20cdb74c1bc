#pragma once

#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "gatelab/core.hpp"
#include "gatelab/eigen.hpp"
#include "gatelab/gates.hpp"

namespace gatelab {

// The gate text format: either a named constructor like "barenco(0.3,0.4,0.5)"
// or a 4-line matrix literal where each line holds 8 whitespace-separated
// reals, read as (re, im) pairs of one row.

struct ParsedGate {
  Unitary4 u;
  double violation = 0.0;  // unitarity defect of the raw input
  bool projected = false;  // true when the defect was in the warning band
  ParsedGate() : u(Matrix4::identity()) {}
};

namespace detail {

// Unitary polar factor by Newton iteration X <- (X + inv(X)') / 2.
inline Matrix4 polar_unitary(const Matrix4& m) {
  Matrix4 x = m;
  for (int it = 0; it < 60; ++it) {
    const Matrix4 y = inverse4(x).adjoint();
    Matrix4 next;
    for (int i = 0; i < 16; ++i) next.a[i] = 0.5 * (x.a[i] + y.a[i]);
    x = next;
    if (unitarity_violation(x) <= 1e-14) break;
  }
  return x;
}

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Cursor(const std::string& t) : text(t) {}
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  void skip_blanks_in_line() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
      advance();
  }
};

inline double read_real(Cursor& c) {
  c.skip_blanks_in_line();
  if (c.done() || c.peek() == '\n')
    throw parse_error(c.line, c.col, "expected a number");
  const char* start = c.text.c_str() + c.pos;
  char* end = nullptr;
  const double v = std::strtod(start, &end);
  if (end == start) throw parse_error(c.line, c.col, "expected a number");
  const std::size_t used = static_cast<std::size_t>(end - start);
  for (std::size_t i = 0; i < used; ++i) c.advance();
  return v;
}

inline ParsedGate from_matrix(const Matrix4& m, int err_line, int err_col) {
  ParsedGate out;
  out.violation = unitarity_violation(m);
  if (out.violation > 1e-4)
    throw validation_error("gate is not unitary: violation " +
                           std::to_string(out.violation) + " exceeds 1e-4 at line " +
                           std::to_string(err_line) + ", column " +
                           std::to_string(err_col));
  out.projected = out.violation > 1e-8;
  out.u = Unitary4(polar_unitary(m));
  return out;
}

inline ParsedGate parse_named(Cursor& c) {
  const int name_line = c.line, name_col = c.col;
  std::string name;
  while (!c.done() &&
         (std::isalpha(static_cast<unsigned char>(c.peek())) || c.peek() == '_')) {
    name.push_back(c.peek());
    c.advance();
  }
  std::vector<double> args;
  c.skip_space();
  if (!c.done() && c.peek() == '(') {
    c.advance();
    c.skip_space();
    if (!c.done() && c.peek() == ')') {
      c.advance();
    } else {
      for (;;) {
        args.push_back(read_real(c));
        c.skip_space();
        if (c.done())
          throw parse_error(c.line, c.col, "unterminated argument list");
        if (c.peek() == ',') {
          c.advance();
          c.skip_space();
          continue;
        }
        if (c.peek() == ')') {
          c.advance();
          break;
        }
        throw parse_error(c.line, c.col, "expected ',' or ')'");
      }
    }
  }
  c.skip_space();
  if (!c.done())
    throw parse_error(c.line, c.col, "unexpected trailing text");

  auto arity = [&](std::size_t want) {
    if (args.size() != want)
      throw parse_error(name_line, name_col, "gate '" + name + "' takes " + std::to_string(want) +
                            " parameter(s), got " + std::to_string(args.size()));
  };

  ParsedGate out;
  if (name == "identity") {
    arity(0);
    out.u = gate_identity();
  } else if (name == "swap") {
    arity(0);
    out.u = gate_swap();
  } else if (name == "cnot") {
    arity(0);
    out.u = gate_cnot();
  } else if (name == "cz") {
    arity(0);
    out.u = gate_cz();
  } else if (name == "barenco") {
    arity(3);
    out.u = gate_barenco(args[0], args[1], args[2]);
  } else if (name == "diag") {
    arity(4);
    out.u = gate_diag({args[0], args[1], args[2], args[3]});
  } else if (name == "kron") {
    arity(8);
    out.u = gate_kron({args[0], args[1], args[2], args[3], args[4], args[5],
                       args[6], args[7]});
  } else {
    throw parse_error(name_line, name_col, "unknown gate name '" + name + "'");
  }
  return out;
}

}  // namespace detail

// Parse a gate from text. Named gates are exact; matrix literals are
// accepted up to a unitarity defect of 1e-4 and projected onto the nearest
// unitary, with the projected flag raised when the defect exceeds 1e-8.
inline ParsedGate parse_gate(const std::string& text) {
  detail::Cursor c(text);
  c.skip_space();
  if (c.done()) throw parse_error(c.line, c.col, "empty gate text");
  if (std::isalpha(static_cast<unsigned char>(c.peek())) || c.peek() == '_')
    return detail::parse_named(c);

  const int start_line = c.line, start_col = c.col;
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    c.skip_space();
    if (c.done())
      throw parse_error(c.line, c.col, "expected matrix row " + std::to_string(r + 1));
    const int row_line = c.line;
    for (int k = 0; k < 8; ++k) {
      c.skip_blanks_in_line();
      if (c.done() || c.peek() == '\n')
        throw parse_error(row_line, c.col, "row " + std::to_string(r + 1) +
                              " needs 8 numbers, got " + std::to_string(k));
      const double v = detail::read_real(c);
      if (k % 2 == 0)
        m(r, k / 2) = cplx(v, 0.0);
      else
        m(r, k / 2) += cplx(0.0, v);
    }
    c.skip_blanks_in_line();
    if (!c.done() && c.peek() != '\n')
      throw parse_error(c.line, c.col, "row " + std::to_string(r + 1) + " has extra text");
  }
  c.skip_space();
  if (!c.done())
    throw parse_error(c.line, c.col, "unexpected text after 4 matrix rows");
  return detail::from_matrix(m, start_line, start_col);
}

// Emit the 4-line matrix literal with 17 significant digits per real.
inline std::string emit_gate(const Unitary4& u) {
  std::string out;
  char buf[32];
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      std::snprintf(buf, sizeof buf, "%.16e", u.m()(r, c).real());
      out += buf;
      out += ' ';
      std::snprintf(buf, sizeof buf, "%.16e", u.m()(r, c).imag());
      out += buf;
      out += (c == 3 ? '\n' : ' ');
    }
  }
  return out;
}

}  // namespace gatelab
