#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hadz/coboundary_set.hpp"

namespace hadz {

// Complement the class-c subset within the t indices of residue class c.
// On diagrams: flip all marks in one row.
CoboundarySet complement(const CoboundarySet& s, int cls);

// k -> k - 4i (mod 4t, into 1..4t); marks shift i columns rightward.
CoboundarySet rotate(const CoboundarySet& s, int i);

// The six swapping generators. Each transposes two diagram rows; the index
// shifts follow from the per-column class values, e.g. s23 maps the class-3
// subset to class 2 by subtracting 1 and the class-2 subset to class 3 by
// adding 1.
enum class Swap { S23, S24, S21, S34, S31, S41 };

CoboundarySet swap_classes(const CoboundarySet& s, Swap g);

// General row permutation: target[c-1] is the class receiving the old class-c
// content; each index moves by target[c-1] - c within its column. Compositions
// of the six generators realize all 24 permutations.
CoboundarySet permute_classes(const CoboundarySet& s, const std::array<int, 4>& target);

// Homothecy of ratio r about the right-most diagram column:
// k -> 4 [ ((k - [k]_4)/4) r ]_t + [k]_4. Requires gcd(r, t) = 1.
CoboundarySet dilate(const CoboundarySet& s, int r);

// A parsed operation token: C2 | T:3 | S:23 | V:2.
struct Operation {
    enum class Kind { Complement, Rotate, Swap, Dilate };
    Kind kind;
    int arg = 0; // class for C, shift for T, ratio for V
    Swap swap = Swap::S23;
};

Operation parse_operation(std::string_view tok);
std::vector<Operation> parse_operations(std::string_view csv); // comma-separated, applied left to right
CoboundarySet apply(const CoboundarySet& s, const Operation& op);
CoboundarySet apply_all(const CoboundarySet& s, const std::vector<Operation>& ops);
std::string format_operation(const Operation& op);

struct PreservationFailure {
    CoboundarySet input;
    std::string operation;
};

struct PreservationReport {
    long long checked = 0;
    std::vector<PreservationFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Applies every operation family (C2, all rotations, the six swaps, all
// coprime dilatations) to every set in the collection and verifies that each
// image still assembles to a Hadamard matrix.
PreservationReport preserves_hadamard_suite(const std::vector<CoboundarySet>& hadamard_sets);

} // namespace hadz
