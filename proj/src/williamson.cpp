#include "hadz/williamson.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "hadz/cocycle.hpp"
#include "hadz/diagram.hpp"
#include "hadz/errors.hpp"
#include "hadz/hadamard.hpp"

namespace hadz {

bool is_williamson_position(const CoboundarySet& s) {
    const auto axes = symmetry_axes(to_diagram(s));
    return std::find(axes.begin(), axes.end(), s.t()) != axes.end();
}

int williamson_rotation(const CoboundarySet& s) {
    const auto axes = symmetry_axes(to_diagram(s));
    if (axes.empty()) throw NoAxisError();
    // T_i moves an axis at column c to column c + i; the axis lands on t for
    // i = t - c. With a unique axis the choice is forced.
    int best = s.t();
    for (int c : axes) best = std::min(best, (s.t() - c) % s.t());
    return best;
}

SignMatrix williamson_form(const CoboundarySet& s) {
    SignMatrix m = assemble(s, Assembly::Generalized);
    for (int k : s.indices()) m.negate_col(k);
    return m;
}

namespace {

bool block_circulant(const SignMatrix& m, int t, int* bad_i, int* bad_j) {
    // block(i,j) must equal block(1, [i+j-2 mod t] + 1)
    for (int bi = 2; bi <= t; ++bi) {
        for (int bj = 1; bj <= t; ++bj) {
            const int ref = (bi + bj - 2) % t; // 0-based block col in first block row
            for (int r = 1; r <= 4; ++r)
                for (int c = 1; c <= 4; ++c)
                    if (m.at(4 * (bi - 1) + r, 4 * (bj - 1) + c) != m.at(r, 4 * ref + c)) {
                        if (bad_i) *bad_i = bi;
                        if (bad_j) *bad_j = bj;
                        return false;
                    }
        }
    }
    return true;
}

} // namespace

WilliamsonBlockData extract_quadruple(const CoboundarySet& s) {
    if (!is_williamson_position(s))
        throw Error("set is not Williamson-positioned (no symmetry axis at the last column)");
    const int t = s.t();

    WilliamsonBlockData data;
    data.t = t;
    data.assembled_literally_circulant =
        block_circulant(assemble(s, Assembly::Generalized), t, nullptr, nullptr);

    const SignMatrix w = williamson_form(s);
    int bi = 0, bj = 0;
    if (!block_circulant(w, t, &bi, &bj)) throw NotBackCirculantError(bi, bj);

    for (int b = 0; b < t; ++b) {
        std::array<std::array<int8_t, 4>, 4> blk;
        for (int r = 1; r <= 4; ++r)
            for (int c = 1; c <= 4; ++c) blk[r - 1][c - 1] = w.at(r, 4 * b + c);

        const int8_t n = blk[0][0], x = blk[0][1], y = blk[0][2], z = blk[0][3];
        const int8_t want[4][4] = {{n, x, y, z},
                                   {x, static_cast<int8_t>(-n), z, static_cast<int8_t>(-y)},
                                   {y, static_cast<int8_t>(-z), static_cast<int8_t>(-n), x},
                                   {z, y, static_cast<int8_t>(-x), static_cast<int8_t>(-n)}};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (blk[r][c] != want[r][c])
                    throw PatternMismatchError(b + 1, "entry (" + std::to_string(r + 1) + "," +
                                                          std::to_string(c + 1) +
                                                          ") breaks the sign pattern");
        data.blocks.push_back(blk);
        data.n.push_back(n);
        data.x.push_back(x);
        data.y.push_back(y);
        data.z.push_back(z);
    }

    for (int i = 1; i <= t - 1; ++i)
        if (data.blocks[static_cast<size_t>(i)] != data.blocks[static_cast<size_t>(t - i)])
            throw PatternMismatchError(i + 1, "W_{i+1} != W_{t-i+1}");

    auto abs_sum = [](const std::vector<int8_t>& v) {
        int s = 0;
        for (int8_t e : v) s += e;
        return std::abs(s);
    };
    data.A = abs_sum(data.n);
    data.B = abs_sum(data.x);
    data.C = abs_sum(data.y);
    data.D = abs_sum(data.z);

    const int sq = data.A * data.A + data.B * data.B + data.C * data.C + data.D * data.D;
    if (sq != 4 * t)
        throw Error("quadruple " + std::to_string(data.A) + "," + std::to_string(data.B) + "," +
                    std::to_string(data.C) + "," + std::to_string(data.D) +
                    " violates A^2+B^2+C^2+D^2 = 4t (matrix is not Hadamard)");
    return data;
}

long long williamson_count(const std::vector<CoboundarySet>& census) {
    long long n = 0;
    for (const auto& s : census) n += is_williamson_position(s);
    return n;
}

std::vector<CoboundarySet> ingest_external_seed(std::istream& in) {
    std::vector<CoboundarySet> seeds;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("seed line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("t") || !j.contains("set"))
            throw ParseError("seed line " + std::to_string(lineno) +
                             ": expected {\"t\": int, \"set\": [ints]}");
        try {
            CoboundarySet s(GroupParams(j.at("t").get<int>()),
                            j.at("set").get<std::vector<int>>());
            if (!is_hadamard(assemble(s)))
                throw NotHadamardSeedError("seed line " + std::to_string(lineno) +
                                           " does not assemble to a Hadamard matrix");
            seeds.push_back(std::move(s));
        } catch (const std::invalid_argument& e) {
            throw ParseError("seed line " + std::to_string(lineno) + ": " + e.what());
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("seed line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return seeds;
}

} // namespace hadz
