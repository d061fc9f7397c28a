#include "census_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include <json.hpp>

namespace cremona {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json qstep_to_json(const QStep& s) {
    json j;
    j["input"] = {{"degree", s.input.degree()}, {"counts", s.input.counts()}};
    j["m"] = s.centers;
    j["epsilon"] = s.epsilon;
    j["output"] = {{"degree", s.output.degree()}, {"counts", s.output.counts()}};
    return j;
}

} // namespace

std::string census_json(long long d) {
    if (d < 2) fail(Err::OutOfRange, "census needs degree >= 2");
    json doc;
    doc["schema"] = kCensusSchema;
    doc["degree"] = d;

    json sols = json::array();
    for (const MultiIndex& nu : enumerate_noether(d)) {
        json rec;
        rec["counts"] = nu.counts();
        const Admissibility adm = is_admissible(nu);
        rec["admissible"] = adm.admissible();
        if (adm.kind == Admissibility::Kind::Reducible) {
            rec["reason"] = "reducible";
            rec["reducible_at_step"] = adm.reducible_at_step;
        }
        sols.push_back(std::move(rec));
    }
    doc["noether_solutions"] = std::move(sols);

    json comps = json::array();
    const auto records = census(d);
    for (const ComponentRecord& rec : records) {
        json c;
        c["htype"] = rec.htype.counts();
        c["reduced_length"] = rec.reduced_length;
        c["length"] = rec.length;
        c["dimension"] = rec.dimension;
        c["de_jonquieres"] = rec.de_jonquieres;
        c["symmetric"] = rec.symmetric;
        json trace = json::array();
        for (const QStep& s : rec.reduction_trace) trace.push_back(qstep_to_json(s));
        c["trace"] = std::move(trace);
        comps.push_back(std::move(c));
    }
    doc["components"] = std::move(comps);
    doc["n_components"] = records.size();
    doc["dims"] = {{"biro", dim_biro(d)}, {"bir", dim_bir(d)}};
    return doc.dump(2) + "\n";
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("CREMONA_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::string(xdg) + "/cremona";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.cache/cremona";
    return ".cremona-cache";
}

std::string census_cache_path(const std::string& cache_dir, long long d) {
    return cache_dir + "/census-d" + std::to_string(d) + ".json";
}

std::string census_cached(long long d, const std::string& cache_dir) {
    const std::string path = census_cache_path(cache_dir, d);

    if (fs::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        json doc = json::parse(text, nullptr, false);
        if (!doc.is_discarded() && doc.is_object() && doc.value("schema", "") == kCensusSchema &&
            doc.value("degree", -1) == d)
            return text;
        // stale or foreign file: fall through and regenerate
    }

    const std::string text = census_json(d);
    std::error_code ec;
    fs::create_directories(cache_dir, ec);
    if (ec) fail(Err::IoError, "cannot create cache directory " + cache_dir);
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(Err::IoError, "cannot write " + tmp);
        out << text;
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        fail(Err::IoError, "cannot move census cache into place at " + path);
    }
    return text;
}

} // namespace cremona
