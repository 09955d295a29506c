#include "hadz/diagram.hpp"

#include "hadz/errors.hpp"

namespace hadz {

namespace {
constexpr int kRowClass[4] = {2, 3, 4, 1}; // class value of diagram rows 1..4
}

int Diagram::cell_index(int row, int col, GroupParams p) {
    return 4 * (p.t - col) + kRowClass[row - 1];
}

std::pair<int, int> Diagram::cell_of_index(int k, GroupParams p) {
    const int c = residue4(k);
    int row = 0;
    while (kRowClass[row] != c) ++row;
    const int col = p.t - (k - c) / 4;
    return {row + 1, col};
}

Diagram to_diagram(const CoboundarySet& s) {
    Diagram d(s.params());
    for (int k : s.indices()) {
        auto [row, col] = Diagram::cell_of_index(k, s.params());
        d.set_mark(row, col, true);
    }
    return d;
}

CoboundarySet from_diagram(const Diagram& d) {
    std::vector<int> idx;
    for (int row = 1; row <= 4; ++row)
        for (int col = 1; col <= d.t(); ++col)
            if (d.mark(row, col)) idx.push_back(Diagram::cell_index(row, col, d.params()));
    return CoboundarySet(d.params(), std::move(idx));
}

std::vector<int> symmetry_axes(const Diagram& d) {
    const int t = d.t();
    auto wrap = [t](int c) { return (c % t + t) % t == 0 ? t : (c % t + t) % t; };
    std::vector<int> axes;
    for (int c = 1; c <= t; ++c) {
        bool ok = true;
        for (int off = 1; ok && off <= (t - 1) / 2; ++off)
            for (int row = 1; row <= 4; ++row)
                if (d.mark(row, wrap(c + off)) != d.mark(row, wrap(c - off))) { ok = false; break; }
        if (ok) axes.push_back(c);
    }
    return axes;
}

std::string render(const Diagram& d) {
    std::string out;
    out.reserve(4u * static_cast<size_t>(d.t()) + 3);
    for (int row = 1; row <= 4; ++row) {
        if (row > 1) out += '\n';
        for (int col = 1; col <= d.t(); ++col) out += d.mark(row, col) ? 'x' : '.';
    }
    return out;
}

Diagram parse_diagram(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') { lines.push_back(cur); cur.clear(); }
        else cur += ch;
    }
    if (!cur.empty()) lines.push_back(cur);
    if (lines.size() != 4) throw ParseError("diagram must have exactly 4 lines");
    const size_t t = lines[0].size();
    for (const auto& ln : lines)
        if (ln.size() != t) throw ParseError("diagram lines must all have the same length");

    GroupParams p(static_cast<int>(t)); // validates odd t >= 3
    Diagram d(p);
    for (int row = 1; row <= 4; ++row) {
        for (int col = 1; col <= p.t; ++col) {
            const char ch = lines[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)];
            if (ch == 'x') d.set_mark(row, col, true);
            else if (ch != '.') throw ParseError(std::string("invalid diagram character '") + ch + "'");
        }
    }
    return d;
}

} // namespace hadz
