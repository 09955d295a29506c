#include "hadz/io.hpp"

#include "hadz/errors.hpp"

namespace hadz {

std::vector<int> parse_index_list(std::string_view text) {
    std::vector<int> out;
    int value = 0;
    bool have = false;
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            value = value * 10 + (ch - '0');
            have = true;
        } else if (ch == ',' || ch == ' ') {
            if (have) out.push_back(value);
            value = 0;
            have = false;
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "' in index list");
        }
    }
    if (have) out.push_back(value);
    return out;
}

json set_to_json(const CoboundarySet& s) {
    return json{{"t", s.t()}, {"coboundaries", s.indices()}};
}

CoboundarySet set_from_json(const json& j) {
    try {
        return CoboundarySet(GroupParams(j.at("t").get<int>()),
                             j.at("coboundaries").get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad set JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad set JSON: ") + e.what());
    }
}

std::string paper_style(const CoboundarySet& s) {
    const auto by = s.classes();
    std::string out = "{ ";
    bool first_class = true;
    for (int c : {2, 3, 4, 1}) {
        if (!first_class) out += ", ";
        first_class = false;
        out += "{ ";
        const auto& cls = by[static_cast<size_t>(c - 1)];
        for (size_t i = 0; i < cls.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(cls[i]);
        }
        out += cls.empty() ? "}" : " }";
    }
    out += " }";
    return out;
}

std::string machine_style(const CoboundarySet& s) {
    std::string out;
    for (size_t i = 0; i < s.indices().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.indices()[i]);
    }
    return out;
}

json diagram_to_json(const Diagram& d) {
    json rows = json::array();
    for (int row = 1; row <= 4; ++row) {
        json r = json::array();
        for (int col = 1; col <= d.t(); ++col) r.push_back(d.mark(row, col));
        rows.push_back(std::move(r));
    }
    return json{{"t", d.t()}, {"marks", rows}};
}

Diagram diagram_from_json(const json& j) {
    try {
        GroupParams p(j.at("t").get<int>());
        const auto& rows = j.at("marks");
        if (!rows.is_array() || rows.size() != 4)
            throw ParseError("diagram JSON must carry 4 mark rows");
        Diagram d(p);
        for (int row = 1; row <= 4; ++row) {
            const auto& r = rows[static_cast<size_t>(row - 1)];
            if (!r.is_array() || static_cast<int>(r.size()) != p.t)
                throw ParseError("diagram JSON rows must have length t");
            for (int col = 1; col <= p.t; ++col)
                d.set_mark(row, col, r[static_cast<size_t>(col - 1)].get<bool>());
        }
        return d;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad diagram JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad diagram JSON: ") + e.what());
    }
}

std::string matrix_grid(const SignMatrix& m) {
    std::string out;
    out.reserve(static_cast<size_t>(m.size()) * (m.size() + 1));
    for (int i = 1; i <= m.size(); ++i) {
        for (int j = 1; j <= m.size(); ++j) out += m.at(i, j) > 0 ? '+' : '-';
        out += '\n';
    }
    return out;
}

json matrix_packed_json(const SignMatrix& m) {
    json rows = json::array();
    for (int i = 1; i <= m.size(); ++i) {
        json words = json::array();
        uint64_t w = 0;
        int fill = 0;
        for (int j = 1; j <= m.size(); ++j) {
            if (m.at(i, j) < 0) w |= 1ull << fill;
            if (++fill == 64) {
                words.push_back(w);
                w = 0;
                fill = 0;
            }
        }
        if (fill) words.push_back(w);
        rows.push_back(std::move(words));
    }
    return json{{"n", m.size()}, {"rows", rows}};
}

json row_stats_to_json(const RowStats& rs) {
    return json{{"n", rs.n}, {"c", rs.paths}, {"I", rs.intersections}, {"r", rs.r}};
}

json orbit_to_json(const OrbitRecord& rec, GroupParams p, bool include_members) {
    json j{{"t", p.t},
           {"representative", rec.representative.indices()},
           {"size", rec.size},
           {"symmetric", rec.symmetric},
           {"factors",
            {{"complement", rec.factors.complement},
             {"rotation", rec.factors.rotation},
             {"swap", rec.factors.swaps},
             {"dilatation", rec.factors.dilatation},
             {"product_matches", rec.factors.product_matches}}}};
    if (include_members) j["members"] = rec.members;
    return j;
}

json search_report_to_json(const SearchReport& rep, bool include_hits) {
    json j{{"t", rep.t},
           {"mode", rep.mode == SearchMode::Full ? "full" : "symmetric"},
           {"repartition", rep.repartition == Repartition::All ? "all" : "minimal"},
           {"tested", rep.tested},
           {"hadamard_total", rep.hadamard_total},
           {"wall_seconds", rep.wall_seconds}};
    if (include_hits) {
        json hits = json::array();
        for (const auto& h : rep.hits) hits.push_back(h.indices());
        j["hits"] = std::move(hits);
    }
    return j;
}

} // namespace hadz
