#pragma once

#include <stdexcept>
#include <string>

namespace hadz {

// Domain-specific failures. Everything derives from std::runtime_error so the
// CLI can catch one base type and map it to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotCoprimeError : Error {
    NotCoprimeError(int r, int t)
        : Error("dilatation ratio " + std::to_string(r) + " is not coprime to t = " + std::to_string(t)) {}
};

struct NotSymmetricError : Error {
    NotSymmetricError() : Error("diagram has no symmetry axis; fast symmetric test is inapplicable") {}
};

struct NoAxisError : Error {
    NoAxisError() : Error("diagram has no symmetry axis") {}
};

struct NotBackCirculantError : Error {
    int block_row, block_col;
    NotBackCirculantError(int i, int j)
        : Error("matrix is not back-circulant by 4x4 blocks (first mismatch at block " +
                std::to_string(i) + "," + std::to_string(j) + ")"),
          block_row(i), block_col(j) {}
};

struct PatternMismatchError : Error {
    int block;
    explicit PatternMismatchError(int b, const std::string& what)
        : Error("block " + std::to_string(b) + " violates the Williamson block pattern: " + what),
          block(b) {}
};

struct NotHadamardSeedError : Error {
    using Error::Error;
};

struct InfeasibleScaleError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace hadz
