#ifndef CRITCERT_CLI_HPP
#define CRITCERT_CLI_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "critcert/certify.hpp"

namespace critcert {

// Syntax error with the 0-based offset into the input text.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Recursive-descent parser for the polynomial expression grammar:
//   poly     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := var | rational | '(' poly ')' | '-' base
//   rational := uint ('/' uint)?
// Whitespace is ignored; implicit multiplication ("x1 x2") is rejected.
// Every variable must appear in vars (which fixes the ring and its order).
Poly parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

// JSON document for a certificate (schema version 1): every rational appears
// as {"exact": "p/q", "decimal": approximate}; documents round-trip.
std::string certificate_document(const Certificate& cert, const std::string& poly_text,
                                 const std::vector<std::string>& vars,
                                 double seconds);

// SVG rendering of the real tangency curve V(gamma) of a 2-variable
// polynomial together with the circle of radius R; the viewport is
// [-1.2 R, 1.2 R]^2 mapped onto a 512x512 canvas. Signs of gamma at grid
// points are decided exactly; only drawing positions use floating point.
std::string plot_tangency_svg(const Poly& f, const Rational& R);

// Entry point used by the binary: parses arguments, dispatches subcommands
// (classify, faithful-radius, isolation-radius, tangency, oracle, plot) and
// returns the process exit status: 0 success, 1 usage error, 2
// certification failure.
int run_cli(int argc, const char* const* argv);

}  // namespace critcert

#endif
