#include "hadz/ops.hpp"

#include <numeric>

#include "hadz/errors.hpp"
#include "hadz/hadamard.hpp"

namespace hadz {

namespace {

int wrap_index(long long k, int order) {
    long long m = k % order;
    if (m <= 0) m += order;
    return static_cast<int>(m);
}

} // namespace

CoboundarySet complement(const CoboundarySet& s, int cls) {
    if (cls < 1 || cls > 4) throw std::out_of_range("class must be 1..4");
    return complement_classes(s, 1u << (cls - 1));
}

CoboundarySet rotate(const CoboundarySet& s, int i) {
    const int t = s.t();
    if (i < 0 || i > t - 1) throw std::out_of_range("rotation index must be 0..t-1");
    std::vector<int> out;
    out.reserve(s.indices().size());
    for (int k : s.indices()) out.push_back(wrap_index(k - 4ll * i, s.params().order()));
    return CoboundarySet(s.params(), std::move(out));
}

CoboundarySet permute_classes(const CoboundarySet& s, const std::array<int, 4>& target) {
    std::vector<int> out;
    out.reserve(s.indices().size());
    for (int k : s.indices()) {
        const int c = residue4(k);
        out.push_back(wrap_index(k + target[static_cast<size_t>(c - 1)] - c, s.params().order()));
    }
    return CoboundarySet(s.params(), std::move(out));
}

CoboundarySet swap_classes(const CoboundarySet& s, Swap g) {
    // target[c-1] = image class of class c under the transposition
    static constexpr std::array<std::array<int, 4>, 6> kTargets = {{
        {1, 3, 2, 4}, // s23
        {1, 4, 3, 2}, // s24
        {2, 1, 3, 4}, // s21
        {1, 2, 4, 3}, // s34
        {3, 2, 1, 4}, // s31
        {4, 2, 3, 1}, // s41
    }};
    return permute_classes(s, kTargets[static_cast<size_t>(g)]);
}

CoboundarySet dilate(const CoboundarySet& s, int r) {
    const int t = s.t();
    const int rm = ((r % t) + t) % t;
    if (std::gcd(rm, t) != 1) throw NotCoprimeError(r, t);
    std::vector<int> out;
    out.reserve(s.indices().size());
    for (int k : s.indices()) {
        const int c = residue4(k);
        const long long m = (static_cast<long long>(k - c) / 4) * rm % t;
        out.push_back(static_cast<int>(4 * m + c));
    }
    return CoboundarySet(s.params(), std::move(out));
}

Operation parse_operation(std::string_view tok) {
    auto bad = [&] { return ParseError("invalid operation token '" + std::string(tok) + "'"); };
    if (tok.empty()) throw bad();
    Operation op;
    const char head = tok[0];
    if (head == 'C' || head == 'c') {
        if (tok.size() != 2 || tok[1] < '1' || tok[1] > '4') throw bad();
        op.kind = Operation::Kind::Complement;
        op.arg = tok[1] - '0';
        return op;
    }
    if (tok.size() < 3 || tok[1] != ':') throw bad();
    const std::string_view rest = tok.substr(2);
    if (head == 'S' || head == 's') {
        op.kind = Operation::Kind::Swap;
        if (rest == "23") op.swap = Swap::S23;
        else if (rest == "24") op.swap = Swap::S24;
        else if (rest == "21") op.swap = Swap::S21;
        else if (rest == "34") op.swap = Swap::S34;
        else if (rest == "31") op.swap = Swap::S31;
        else if (rest == "41") op.swap = Swap::S41;
        else throw bad();
        return op;
    }
    int value = 0;
    for (char ch : rest) {
        if (ch < '0' || ch > '9') throw bad();
        value = value * 10 + (ch - '0');
    }
    if (head == 'T' || head == 't') op.kind = Operation::Kind::Rotate;
    else if (head == 'V' || head == 'v') op.kind = Operation::Kind::Dilate;
    else throw bad();
    op.arg = value;
    return op;
}

std::vector<Operation> parse_operations(std::string_view csv) {
    std::vector<Operation> ops;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t next = csv.find(',', pos);
        if (next == std::string_view::npos) next = csv.size();
        ops.push_back(parse_operation(csv.substr(pos, next - pos)));
        pos = next + 1;
        if (next == csv.size()) break;
    }
    return ops;
}

CoboundarySet apply(const CoboundarySet& s, const Operation& op) {
    switch (op.kind) {
    case Operation::Kind::Complement: return complement(s, op.arg);
    case Operation::Kind::Rotate: return rotate(s, op.arg);
    case Operation::Kind::Swap: return swap_classes(s, op.swap);
    case Operation::Kind::Dilate: return dilate(s, op.arg);
    }
    throw std::logic_error("unreachable");
}

CoboundarySet apply_all(const CoboundarySet& s, const std::vector<Operation>& ops) {
    CoboundarySet cur = s;
    for (const auto& op : ops) cur = apply(cur, op);
    return cur;
}

std::string format_operation(const Operation& op) {
    static constexpr const char* kSwapNames[6] = {"S:23", "S:24", "S:21", "S:34", "S:31", "S:41"};
    switch (op.kind) {
    case Operation::Kind::Complement: return "C" + std::to_string(op.arg);
    case Operation::Kind::Rotate: return "T:" + std::to_string(op.arg);
    case Operation::Kind::Swap: return kSwapNames[static_cast<size_t>(op.swap)];
    case Operation::Kind::Dilate: return "V:" + std::to_string(op.arg);
    }
    return {};
}

PreservationReport preserves_hadamard_suite(const std::vector<CoboundarySet>& hadamard_sets) {
    PreservationReport rep;
    auto check = [&](const CoboundarySet& input, CoboundarySet image, const std::string& label) {
        ++rep.checked;
        if (!cocyclic_row_test(image) || !is_hadamard(assemble(image)))
            rep.failures.push_back({input, label});
    };
    for (const auto& s : hadamard_sets) {
        const int t = s.t();
        check(s, complement(s, 2), "C2");
        for (int i = 0; i < t; ++i) check(s, rotate(s, i), "T:" + std::to_string(i));
        for (int g = 0; g < 6; ++g) {
            Operation op{Operation::Kind::Swap, 0, static_cast<Swap>(g)};
            check(s, swap_classes(s, static_cast<Swap>(g)), format_operation(op));
        }
        for (int r = 1; r < t; ++r)
            if (std::gcd(r, t) == 1) check(s, dilate(s, r), "V:" + std::to_string(r));
    }
    return rep;
}

} // namespace hadz
