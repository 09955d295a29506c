#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hadz/coboundary_set.hpp"

namespace hadz {

// The 4 x t grid encoding of a coboundary set. Cell (row, col) with
// row in 1..4, col in 1..t holds the coboundary index
//   4(t - col) + v,   v = 2, 3, 4, 1 for rows 1..4,
// so the right-most column carries the indices 2, 3, 4, 1. Columns wrap:
// the grid is a cylinder, column t adjacent to column 1.
class Diagram {
public:
    explicit Diagram(GroupParams p) : p_(p), marks_(4u * static_cast<size_t>(p.t), 0) {}

    GroupParams params() const { return p_; }
    int t() const { return p_.t; }

    bool mark(int row, int col) const { return marks_[pos(row, col)] != 0; }
    void set_mark(int row, int col, bool v) { marks_[pos(row, col)] = v ? 1 : 0; }

    int row_count(int row) const {
        int n = 0;
        for (int j = 1; j <= p_.t; ++j) n += mark(row, j);
        return n;
    }

    static int cell_index(int row, int col, GroupParams p);
    static std::pair<int, int> cell_of_index(int k, GroupParams p); // (row, col)

    bool operator==(const Diagram&) const = default;

private:
    size_t pos(int row, int col) const {
        return static_cast<size_t>(row - 1) * p_.t + (col - 1);
    }

    GroupParams p_;
    std::vector<uint8_t> marks_;
};

Diagram to_diagram(const CoboundarySet& s);
CoboundarySet from_diagram(const Diagram& d);

// All columns c such that reflecting the cylinder about column c fixes the
// mark set. Empty means no symmetry.
std::vector<int> symmetry_axes(const Diagram& d);

// Four lines of t characters, 'x' for a mark and '.' otherwise, separated by
// newlines (no trailing newline).
std::string render(const Diagram& d);
Diagram parse_diagram(const std::string& text);

} // namespace hadz
