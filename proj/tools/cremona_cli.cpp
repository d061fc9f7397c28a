// Command-line front end; talks to the shared library exclusively through the
// C interface in cremona.h.
//
// Exit codes: 0 success, 1 mathematically negative answer, 2 malformed
// input/usage, 3 internal failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cremona.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int exit_code_for(crm_status st) {
    switch (st) {
        case CRM_OK:
            return kExitOk;
        case CRM_ERR_NOETHER_SELFINT:
        case CRM_ERR_NOETHER_GENUS:
        case CRM_ERR_REDUCIBLE:
        case CRM_ERR_MATH:
            return kExitMath;
        case CRM_ERR_INTERNAL:
            return kExitInternal;
        default:
            return kExitUsage;
    }
}

// structured reason on stdout, per the machine-readable output contract
int report_failure(crm_status st) {
    nlohmann::json doc;
    doc["error"] = {{"status", static_cast<int>(st)}, {"message", crm_last_error()}};
    std::cout << doc.dump(2) << "\n";
    return exit_code_for(st);
}

std::string slurp(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return {};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    ok = true;
    return ss.str();
}

struct MapHandle {
    crm_map* m = nullptr;
    ~MapHandle() { crm_map_free(m); }
};

struct PointsHandle {
    crm_points* p = nullptr;
    ~PointsHandle() { crm_points_free(p); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { crm_string_free(s); }
};

int load_map(const std::string& path, MapHandle& h) {
    bool ok = false;
    const std::string text = slurp(path, ok);
    if (!ok) {
        std::cerr << "cannot read " << path << "\n";
        return kExitUsage;
    }
    const crm_status st = crm_map_parse_json(text.c_str(), &h.m);
    if (st != CRM_OK) {
        std::cerr << path << ": " << crm_last_error() << "\n";
        return exit_code_for(st);
    }
    return kExitOk;
}

int load_points(const std::string& path, PointsHandle& h) {
    bool ok = false;
    const std::string text = slurp(path, ok);
    if (!ok) {
        std::cerr << "cannot read " << path << "\n";
        return kExitUsage;
    }
    const crm_status st = crm_points_parse_json(text.c_str(), &h.p);
    if (st != CRM_OK) {
        std::cerr << path << ": " << crm_last_error() << "\n";
        return exit_code_for(st);
    }
    return kExitOk;
}

int emit_map(crm_map* m, const std::string& out_path) {
    StringHandle text;
    const crm_status st = crm_map_render_json(m, &text.s);
    if (st != CRM_OK) return report_failure(st);
    if (out_path.empty()) {
        std::cout << text.s;
    } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitUsage;
        }
        out << text.s;
    }
    return kExitOk;
}

int run_adm(const std::vector<long long>& counts) {
    const crm_status st = crm_admissible(counts.data(), counts.size(), nullptr);
    switch (st) {
        case CRM_OK:
            std::cout << "1\n";
            return kExitOk;
        case CRM_ERR_NOETHER_SELFINT:
            std::cout << "ERROR: the self-intersection is not 1\n";
            return kExitMath;
        case CRM_ERR_NOETHER_GENUS:
            std::cout << "ERROR: the genus is not 0\n";
            return kExitMath;
        case CRM_ERR_REDUCIBLE:
            std::cout << "The net is reducible\n";
            return kExitMath;
        default:
            std::cerr << crm_last_error() << "\n";
            return exit_code_for(st);
    }
}

std::string htype_string(const nlohmann::json& counts) {
    std::string s = "(";
    for (size_t i = 0; i < counts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(counts[i].get<long long>());
    }
    return s + ")";
}

int run_census(long long degree, bool as_json, const std::string& cache_dir, bool no_cache) {
    std::string dir = cache_dir;
    if (dir.empty() && !no_cache) {
        StringHandle d;
        if (crm_default_cache_dir(&d.s) == CRM_OK) dir = d.s;
    }
    StringHandle text;
    const crm_status st = crm_census_json(degree, no_cache ? nullptr : dir.c_str(), &text.s);
    if (st != CRM_OK) return report_failure(st);
    if (as_json) {
        std::cout << text.s;
        return kExitOk;
    }

    const auto doc = nlohmann::json::parse(text.s);
    std::printf("%-18s %4s %4s %4s  %-4s %-4s\n", "H-type", "r", "rho", "dim", "deJ", "sym");
    for (const auto& c : doc["components"]) {
        std::printf("%-18s %4lld %4lld %4lld  %-4s %-4s\n", htype_string(c["htype"]).c_str(),
                    c["reduced_length"].get<long long>(), c["length"].get<long long>(),
                    c["dimension"].get<long long>(), c["de_jonquieres"].get<bool>() ? "yes" : "no",
                    c["symmetric"].get<bool>() ? "yes" : "no");
    }
    const long long n = doc["n_components"].get<long long>();
    std::printf("N(%lld) = %lld components; dim of the pure-degree locus = %lld; dim overall = %lld\n",
                degree, n, doc["dims"]["biro"].get<long long>(), doc["dims"]["bir"].get<long long>());
    return kExitOk;
}

int run_verify_pair(const std::string& file_a, const std::string& file_b) {
    MapHandle a, b;
    if (int rc = load_map(file_a, a); rc != kExitOk) return rc;
    if (int rc = load_map(file_b, b); rc != kExitOk) return rc;
    int verified = 0;
    const crm_status st = crm_map_verify_pair(a.m, b.m, &verified);
    if (st != CRM_OK) return report_failure(st);
    nlohmann::json doc;
    doc["check"] = "verify_pair";
    doc["a"] = file_a;
    doc["b"] = file_b;
    doc["pass"] = (verified != 0);
    std::cout << doc.dump(2) << "\n";
    return verified ? kExitOk : kExitMath;
}

int run_compose(const std::string& file_a, const std::string& file_b, bool strip,
                const std::string& out_path) {
    MapHandle a, b;
    if (int rc = load_map(file_a, a); rc != kExitOk) return rc;
    if (int rc = load_map(file_b, b); rc != kExitOk) return rc;
    MapHandle result;
    const crm_status st = crm_map_compose(a.m, b.m, strip ? 1 : 0, &result.m);
    if (st != CRM_OK) return report_failure(st);
    return emit_map(result.m, out_path);
}

int run_invert(const std::string& file, const std::string& points_file, const std::string& out_path) {
    MapHandle m;
    if (int rc = load_map(file, m); rc != kExitOk) return rc;
    PointsHandle pts;
    if (!points_file.empty())
        if (int rc = load_points(points_file, pts); rc != kExitOk) return rc;
    MapHandle result;
    const crm_status st = crm_map_invert(m.m, pts.p, &result.m);
    if (st != CRM_OK) return report_failure(st);
    return emit_map(result.m, out_path);
}

int run_factor(const std::string& file, const std::string& points_file) {
    MapHandle m;
    if (int rc = load_map(file, m); rc != kExitOk) return rc;
    PointsHandle pts;
    if (int rc = load_points(points_file, pts); rc != kExitOk) return rc;
    StringHandle text;
    const crm_status st = crm_map_factor_json(m.m, pts.p, &text.s);
    if (st != CRM_OK) return report_failure(st);
    std::cout << text.s;
    return kExitOk;
}

int run_mults(const std::string& file, const std::string& points_file) {
    MapHandle m;
    if (int rc = load_map(file, m); rc != kExitOk) return rc;
    PointsHandle pts;
    if (int rc = load_points(points_file, pts); rc != kExitOk) return rc;
    StringHandle text;
    const crm_status st = crm_map_multiplicities_json(m.m, pts.p, &text.s);
    if (st != CRM_OK) return report_failure(st);
    std::cout << text.s;
    const auto doc = nlohmann::json::parse(text.s);
    return doc["all_match"].get<bool>() ? kExitOk : kExitMath;
}

int run_fixtures(bool run_all, const std::string& export_dir) {
    if (!export_dir.empty()) {
        StringHandle list;
        if (crm_status st = crm_fixtures_list_json(&list.s); st != CRM_OK) return report_failure(st);
        const auto doc = nlohmann::json::parse(list.s);
        auto export_one = [&](const std::string& name) -> int {
            MapHandle m;
            if (crm_status st = crm_fixture_map(name.c_str(), &m.m); st != CRM_OK)
                return report_failure(st);
            return emit_map(m.m, export_dir + "/" + name + ".json");
        };
        for (const auto& rec : doc["maps"])
            if (int rc = export_one(rec["name"].get<std::string>()); rc != kExitOk) return rc;
        for (const auto& rec : doc["derived_inverses"])
            if (int rc = export_one(rec["name"].get<std::string>()); rc != kExitOk) return rc;
        return kExitOk;
    }

    if (!run_all) {
        StringHandle list;
        if (crm_status st = crm_fixtures_list_json(&list.s); st != CRM_OK) return report_failure(st);
        std::cout << list.s;
        return kExitOk;
    }

    StringHandle report;
    int all_passed = 0;
    if (crm_status st = crm_fixtures_run_json(&report.s, &all_passed); st != CRM_OK)
        return report_failure(st);
    std::cout << report.s;
    const auto doc = nlohmann::json::parse(report.s);
    std::cerr << doc["passed"].get<int>() << "/" << doc["total"].get<int>() << " maps verified\n";
    return all_passed ? kExitOk : kExitMath;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification and arithmetic of plane birational maps"};
    app.set_version_flag("--version", []() { return std::string(crm_version()); });
    app.require_subcommand(1);

    std::vector<long long> adm_counts;
    auto* adm = app.add_subcommand(
        "adm", "test whether a multi-index (nu_1 .. nu_{d-1}) is admissible");
    adm->add_option("counts", adm_counts, "multi-index entries")->required()->expected(-1);

    long long census_degree = 0;
    bool census_json_flag = false, census_table_flag = false, census_no_cache = false;
    std::string census_cache_dir;
    auto* census = app.add_subcommand("census", "irreducible components of one degree");
    census->add_option("degree", census_degree, "map degree (>= 2)")->required();
    census->add_flag("--json", census_json_flag, "machine-readable output");
    census->add_flag("--table", census_table_flag, "human-readable table (default)");
    census->add_option("--cache-dir", census_cache_dir, "cache directory (default: CREMONA_CACHE_DIR or the user cache)");
    census->add_flag("--no-cache", census_no_cache, "compute without touching any cache");

    std::string vp_a, vp_b;
    auto* verify = app.add_subcommand("verify-pair", "check that two maps are mutually inverse");
    verify->add_option("a", vp_a, "map document")->required();
    verify->add_option("b", vp_b, "map document")->required();

    std::string comp_a, comp_b, comp_out;
    bool comp_strip = false;
    auto* comp = app.add_subcommand("compose", "compose two maps (outer inner)");
    comp->add_option("outer", comp_a, "outer map document")->required();
    comp->add_option("inner", comp_b, "inner map document")->required();
    comp->add_flag("--strip", comp_strip, "divide out the common factor");
    comp->add_option("-o,--output", comp_out, "write the result here instead of stdout");

    std::string inv_file, inv_points, inv_out;
    auto* inv = app.add_subcommand("invert", "invert a map through quadratic factorization");
    inv->add_option("map", inv_file, "map document")->required();
    inv->add_option("--points", inv_points, "base points with multiplicities (needed for degree >= 2)");
    inv->add_option("-o,--output", inv_out, "write the result here instead of stdout");

    std::string fac_file, fac_points;
    auto* fac = app.add_subcommand("factor", "factor a map into quadratic maps and a linear tail");
    fac->add_option("map", fac_file, "map document")->required();
    fac->add_option("--points", fac_points, "base points with multiplicities")->required();

    std::string mults_file, mults_points;
    auto* mults = app.add_subcommand("mults", "compare stated and actual base-point multiplicities");
    mults->add_option("map", mults_file, "map document")->required();
    mults->add_option("--points", mults_points, "points with expected multiplicities")->required();

    bool fx_run_all = false;
    std::string fx_export;
    auto* fx = app.add_subcommand("fixtures", "bundled example maps");
    fx->add_flag("--run-all", fx_run_all, "run every bundled verification");
    fx->add_option("--export", fx_export, "write each bundled map into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (app.got_subcommand(adm)) return run_adm(adm_counts);
    if (app.got_subcommand(census))
        return run_census(census_degree, census_json_flag && !census_table_flag, census_cache_dir,
                          census_no_cache);
    if (app.got_subcommand(verify)) return run_verify_pair(vp_a, vp_b);
    if (app.got_subcommand(comp)) return run_compose(comp_a, comp_b, comp_strip, comp_out);
    if (app.got_subcommand(inv)) return run_invert(inv_file, inv_points, inv_out);
    if (app.got_subcommand(fac)) return run_factor(fac_file, fac_points);
    if (app.got_subcommand(mults)) return run_mults(mults_file, mults_points);
    if (app.got_subcommand(fx)) return run_fixtures(fx_run_all, fx_export);
    return kExitUsage;
}
