// hadz — build, test, transform and enumerate Hadamard matrices assembled
// from coboundaries over Z_t x Z_2^2.
//
// Subcommands: matrix, test, diagram, apply, orbit, search, tables,
// williamson, calibrate. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hadz/cocycle.hpp"
#include "hadz/diagram.hpp"
#include "hadz/errors.hpp"
#include "hadz/hadamard.hpp"
#include "hadz/io.hpp"
#include "hadz/ops.hpp"
#include "hadz/orbit.hpp"
#include "hadz/search.hpp"
#include "hadz/tables.hpp"
#include "hadz/williamson.hpp"

namespace {

using namespace hadz;

uint64_t default_budget() {
    if (const char* env = std::getenv("HADZ_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed HADZ_BUDGET\n";
    }
    return kDefaultBudget;
}

CoboundarySet set_arg(int t, const std::string& list) {
    return CoboundarySet(GroupParams(t), parse_index_list(list));
}

std::ostream& open_sink(std::optional<std::ofstream>& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.emplace(path);
    if (!*file) throw Error("cannot open output file " + path);
    return *file;
}

int cmd_matrix(int t, const std::string& set, bool raw, const std::string& format,
               const std::string& out) {
    const CoboundarySet s = set_arg(t, set);
    const SignMatrix m = assemble(s, raw ? Assembly::Raw : Assembly::Generalized);
    std::optional<std::ofstream> file;
    std::ostream& os = open_sink(file, out);
    if (format == "grid") os << matrix_grid(m);
    else if (format == "packed") os << matrix_packed_json(m).dump() << "\n";
    else throw ParseError("unknown matrix format '" + format + "'");
    return 0;
}

int cmd_test(int t, const std::string& set, bool verbose) {
    const CoboundarySet s = set_arg(t, set);
    const bool h = cocyclic_row_test(s);
    if (verbose) {
        json j = set_to_json(s);
        j["hadamard"] = h;
        json rows = json::array();
        for (const auto& rs : row_stats(s)) rows.push_back(row_stats_to_json(rs));
        j["rows"] = std::move(rows);
        const auto axes = symmetry_axes(to_diagram(s));
        j["symmetry_axes"] = axes;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (h ? "HADAMARD" : "NOT HADAMARD") << "\n";
    }
    return h ? 0 : 1;
}

int cmd_diagram(int t, const std::string& set, const std::string& parse_file, bool as_json) {
    if (!parse_file.empty()) {
        std::ifstream in(parse_file);
        if (!in) throw Error("cannot open " + parse_file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        while (!text.empty() && text.back() == '\n') text.pop_back();
        const Diagram d = parse_diagram(text);
        const CoboundarySet s = from_diagram(d);
        if (as_json) std::cout << set_to_json(s).dump() << "\n";
        else std::cout << machine_style(s) << "\n";
        return 0;
    }
    const Diagram d = to_diagram(set_arg(t, set));
    if (as_json) std::cout << diagram_to_json(d).dump() << "\n";
    else std::cout << render(d) << "\n";
    return 0;
}

int cmd_apply(int t, const std::string& set, const std::string& ops, bool paper) {
    CoboundarySet s = apply_all(set_arg(t, set), parse_operations(ops));
    std::cout << (paper ? paper_style(s) : machine_style(s)) << "\n";
    return 0;
}

int cmd_orbit(int t, const std::string& set, bool members, bool as_json) {
    const CoboundarySet s = set_arg(t, set);
    const OrbitRecord rec = total_orbit(s);
    if (as_json) {
        std::cout << orbit_to_json(rec, s.params(), members).dump(2) << "\n";
        return 0;
    }
    std::cout << "representative: " << paper_style(rec.representative) << "\n";
    std::cout << "size: " << rec.size << "\n";
    std::cout << "factors: " << rec.factors.complement << " x " << rec.factors.rotation << " x "
              << rec.factors.swaps << " x " << rec.factors.dilatation
              << (rec.factors.product_matches ? "" : "  [NON-PRODUCT]") << "\n";
    if (!rec.symmetric) std::cout << "note: no symmetric member in this orbit\n";
    if (members)
        for (const auto& key : rec.members)
            std::cout << machine_style(CoboundarySet(s.params(), key)) << "\n";
    return 0;
}

int cmd_search(int t, const std::string& mode, const std::string& repartition, int jobs,
               uint64_t budget, const std::string& out, bool orbits) {
    SearchConfig cfg;
    cfg.t = t;
    if (mode == "full") cfg.mode = SearchMode::Full;
    else if (mode == "symmetric") cfg.mode = SearchMode::SymmetricOnly;
    else throw ParseError("mode must be full or symmetric");
    if (repartition == "all") cfg.repartition = Repartition::All;
    else if (repartition == "minimal") cfg.repartition = Repartition::MinimalOnly;
    else throw ParseError("repartition must be all or minimal");
    cfg.jobs = jobs;
    cfg.budget = budget;

    const SearchReport rep = exhaustive_search(cfg);
    std::cerr << "tested " << rep.tested << " candidates in " << rep.wall_seconds << " s\n";

    std::vector<OrbitRecord> decomposition;
    if (orbits) decomposition = orbit_decompose(rep.hits);
    auto rep_of = [&](const CoboundarySet& h) -> const CoboundarySet* {
        if (!orbits) return nullptr;
        const auto key = canonical_key(h).indices();
        for (const auto& o : decomposition)
            for (const auto& m : o.members)
                if (m == key) return &o.representative;
        return nullptr;
    };

    std::optional<std::ofstream> file;
    std::ostream& os = open_sink(file, out);
    for (const auto& h : rep.hits) {
        json line = {{"t", rep.t},
                     {"set", h.indices()},
                     {"symmetric", !symmetry_axes(to_diagram(h)).empty()}};
        if (const CoboundarySet* r = rep_of(h)) line["orbit_rep"] = r->indices();
        os << line.dump() << "\n";
    }
    std::cout << "t=" << rep.t << " mode=" << mode << " hadamard_total=" << rep.hadamard_total
              << "\n";
    if (orbits) {
        std::cout << "orbits:";
        for (const auto& o : decomposition) std::cout << " " << o.size;
        std::cout << "\n";
    }
    return 0;
}

int cmd_tables(const std::string& range, int jobs, uint64_t budget, bool as_json) {
    int lo = 3, hi = 13;
    if (!range.empty()) {
        const auto dots = range.find("..");
        try {
            if (dots == std::string::npos) {
                lo = hi = std::stoi(range);
            } else {
                lo = std::stoi(range.substr(0, dots));
                hi = std::stoi(range.substr(dots + 2));
            }
        } catch (const std::exception&) {
            throw ParseError("bad range '" + range + "', expected e.g. 3..13");
        }
    }
    const TableReport rep = reproduce_tables(lo, hi, jobs, budget);
    if (as_json) {
        json rows = json::array();
        for (const auto& r : rep.rows) {
            json jr = {{"t", r.t},
                       {"strategy", strategy_name(r.strategy)},
                       {"computed", r.computed},
                       {"expected", r.expected},
                       {"pass", r.pass},
                       {"orbits", r.orbit_sizes}};
            if (!r.note.empty()) jr["note"] = r.note;
            rows.push_back(std::move(jr));
        }
        std::cout << json{{"rows", rows}, {"all_pass", rep.all_pass}}.dump(2) << "\n";
    } else {
        for (const auto& r : rep.rows) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  t=" << r.t << "  " << r.computed
                      << " / " << r.expected << "  (" << strategy_name(r.strategy) << "; orbits";
            for (long long s : r.orbit_sizes) std::cout << " " << s;
            std::cout << ")\n";
            if (!r.note.empty()) std::cout << "      note: " << r.note << "\n";
        }
    }
    return rep.all_pass ? 0 : 1;
}

int cmd_williamson(int t, const std::string& set, bool census, const std::string& seeds,
                   int jobs, uint64_t budget) {
    if (!seeds.empty()) {
        std::ifstream in(seeds);
        if (!in) throw Error("cannot open " + seeds);
        auto list = ingest_external_seed(in);
        std::cout << "seeds: " << list.size() << "\n";
        long long total = 0;
        for (const auto& s : list) {
            const OrbitRecord rec = total_orbit(s);
            total += rec.size;
            std::cout << "t=" << s.t() << " orbit=" << rec.size << " rep="
                      << paper_style(rec.representative) << "\n";
        }
        std::cout << "total (before cross-orbit dedup): " << total << "\n";
        return 0;
    }
    if (census) {
        SearchConfig cfg;
        cfg.t = t;
        cfg.jobs = jobs;
        cfg.budget = budget;
        std::vector<CoboundarySet> sets;
        if (t <= 7) {
            cfg.mode = SearchMode::Full;
            sets = exhaustive_search(cfg).hits;
        } else if (t <= 13) {
            cfg.mode = SearchMode::SymmetricOnly;
            sets = exhaustive_search(cfg).hits;
        } else {
            std::vector<CoboundarySet> seeds_v;
            for (const auto& cat : catalog_orbits_for(t)) seeds_v.push_back(cat.set());
            if (seeds_v.empty()) throw Error("no built-in census data for t = " + std::to_string(t));
            sets = expand_from_representatives(seeds_v).hits;
        }
        const long long count = williamson_count(sets);
        std::cout << "census " << sets.size() << ", williamson " << count;
        if (expected_williamson(t) > 0) {
            std::cout << " (expected " << expected_williamson(t) << ")";
            std::cout << (count == expected_williamson(t) ? "  PASS" : "  FAIL") << "\n";
            return count == expected_williamson(t) ? 0 : 1;
        }
        std::cout << "\n";
        return 0;
    }

    const CoboundarySet s = set_arg(t, set);
    const bool positioned = is_williamson_position(s);
    std::cout << "positioned: " << (positioned ? "yes" : "no") << "\n";
    const auto axes = symmetry_axes(to_diagram(s));
    if (axes.empty()) {
        std::cout << "symmetry: none\n";
        return 1;
    }
    std::cout << "rotation to position: " << williamson_rotation(s) << "\n";
    if (positioned) {
        const WilliamsonBlockData data = extract_quadruple(s);
        std::cout << "quadruple: " << data.A << "," << data.B << "," << data.C << "," << data.D
                  << "  (" << data.A << "^2+" << data.B << "^2+" << data.C << "^2+" << data.D
                  << "^2 = " << 4 * data.t << ")\n";
    }
    return 0;
}

int cmd_calibrate(std::vector<int> ts) {
    if (ts.empty()) ts = {3, 5, 7};
    bool ok = true;
    for (int t : ts) {
        const auto rel = dropped_relations_check(GroupParams(t));
        std::cout << (rel.all() ? "PASS" : "FAIL") << "  t=" << t << " dropped relations ("
                  << rel.class1_holds << rel.class3_holds << rel.class4_holds << ")\n";
        ok = ok && rel.all();
        for (const auto& cat : catalog_orbits_for(t)) {
            const bool h = is_hadamard(assemble(cat.set()));
            std::cout << (h ? "PASS" : "FAIL") << "  t=" << t << " representative "
                      << paper_style(cat.set()) << "\n";
            ok = ok && h;
        }
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hadamard matrices from coboundary sets over Z_t x Z_2^2"};
    app.require_subcommand(1);

    int t = 3;
    std::string set, format = "grid", out, mode = "full", repartition = "all", range, opspec,
                parse_file, seeds;
    bool raw = false, verbose = false, paper = false, members = false, as_json = false,
         do_orbits = false, census = false;
    int jobs = 1;
    uint64_t budget = default_budget();
    std::vector<int> calib_ts;

    auto* matrix = app.add_subcommand("matrix", "assemble and print a matrix");
    matrix->add_option("--t", t)->required();
    matrix->add_option("--set", set, "comma-separated coboundary indices");
    matrix->add_flag("--raw", raw, "use raw coboundary matrices");
    matrix->add_option("--format", format, "grid | packed");
    matrix->add_option("--out", out, "output file (default stdout)");

    auto* test = app.add_subcommand("test", "Hadamard verdict for a set");
    test->add_option("--t", t)->required();
    test->add_option("--set", set);
    test->add_flag("--verbose", verbose, "JSON verdict with per-row walk statistics");

    auto* diagram = app.add_subcommand("diagram", "render or parse diagrams");
    diagram->add_option("--t", t);
    diagram->add_option("--set", set);
    diagram->add_option("--parse", parse_file, "read a 4-line x/. grid, print the set");
    diagram->add_flag("--json", as_json);

    auto* apply_cmd = app.add_subcommand("apply", "apply operations to a set");
    apply_cmd->add_option("--t", t)->required();
    apply_cmd->add_option("--set", set);
    apply_cmd->add_option("--op", opspec, "e.g. C2,T:3,S:23,V:2 (left to right)")->required();
    apply_cmd->add_flag("--paper-style", paper, "class-grouped display order");

    auto* orbit = app.add_subcommand("orbit", "total orbit, factors, representative");
    orbit->add_option("--t", t)->required();
    orbit->add_option("--set", set);
    orbit->add_flag("--members", members);
    orbit->add_flag("--json", as_json);

    auto* search = app.add_subcommand("search", "exhaustive or symmetric census search");
    search->add_option("--t", t)->required();
    search->add_option("--mode", mode, "full | symmetric");
    search->add_option("--repartition", repartition, "all | minimal");
    search->add_option("--jobs", jobs);
    search->add_option("--budget", budget, "candidate cap (also env HADZ_BUDGET)");
    search->add_option("--out", out, "JSONL output file (default stdout)");
    search->add_flag("--orbits", do_orbits, "decompose hits into orbits");

    auto* tables = app.add_subcommand("tables", "reproduce census tables");
    tables->add_option("--range", range, "e.g. 3..13 (default)");
    tables->add_option("--jobs", jobs);
    tables->add_option("--budget", budget);
    tables->add_flag("--json", as_json);

    auto* williamson = app.add_subcommand("williamson", "position test, quadruple, census");
    williamson->add_option("--t", t);
    williamson->add_option("--set", set);
    williamson->add_flag("--census", census, "count Williamson-positioned matrices for t");
    williamson->add_option("--seeds", seeds, "JSONL seed file to ingest and expand");
    williamson->add_option("--jobs", jobs);
    williamson->add_option("--budget", budget);

    auto* calibrate = app.add_subcommand("calibrate", "ordering-convention checks");
    calibrate->add_option("--t", calib_ts, "values of t to check (default 3 5 7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (matrix->parsed()) return cmd_matrix(t, set, raw, format, out);
        if (test->parsed()) return cmd_test(t, set, verbose);
        if (diagram->parsed()) return cmd_diagram(t, set, parse_file, as_json);
        if (apply_cmd->parsed()) return cmd_apply(t, set, opspec, paper);
        if (orbit->parsed()) return cmd_orbit(t, set, members, as_json);
        if (search->parsed()) return cmd_search(t, mode, repartition, jobs, budget, out, do_orbits);
        if (tables->parsed()) return cmd_tables(range, jobs, budget, as_json);
        if (williamson->parsed()) return cmd_williamson(t, set, census, seeds, jobs, budget);
        if (calibrate->parsed()) return cmd_calibrate(calib_ts);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
