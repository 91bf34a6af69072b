#pragma once

#include <stdexcept>
#include <string>

namespace cckit {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Axiom violation found while validating a color matrix. Carries the name
// of the first violated axiom and a witnessing triple (meaning depends on
// the axiom: a point pair plus a color, or a relation triple (r,s,t)).
struct ValidationError : Error {
    std::string axiom;
    long a = -1, b = -1, c = -1;

    ValidationError(std::string axiom_, long a_, long b_, long c_, const std::string& msg)
        : Error(msg), axiom(std::move(axiom_)), a(a_), b(b_), c(c_) {}
};

// Lexical/structural failure while reading a document. Positions are 1-based.
struct ParseError : Error {
    int line = 0;
    int col = 0;

    ParseError(int line_, int col_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

// A search or construction exceeded its configured budget.
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

} // namespace cckit
