#include "cremona.h"

#include <cstdlib>
#include <cstring>
#include <set>

#include <json.hpp>

#include "census_io.hpp"
#include "fixtures.hpp"
#include "mapdoc.hpp"

using namespace cremona;
using nlohmann::json;

struct crm_map {
    CremonaMap m;
};

struct crm_points {
    AssignedBasePoints p;
};

namespace {

thread_local std::string g_last_error;

crm_status status_of(const Error& e) {
    switch (e.code()) {
        case Err::ParseError:
            return CRM_ERR_PARSE;
        case Err::IoError:
            return CRM_ERR_IO;
        case Err::Internal:
            return CRM_ERR_INTERNAL;
        case Err::SpecialPosition:
        case Err::NotAdmissible:
        case Err::NotOneIrreducible:
        case Err::BoundViolation:
        case Err::CollinearCenters:
        case Err::CoincidentCenters:
        case Err::MultiplicityMismatch:
        case Err::InfinitelyNearUnsupported:
            return CRM_ERR_MATH;
        default:
            return CRM_ERR_INVALID;
    }
}

template <class Fn>
crm_status wrap(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CRM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return CRM_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

crm_status invalid(const char* what) {
    g_last_error = what;
    return CRM_ERR_INVALID;
}

json points_to_json(const AssignedBasePoints& bp) {
    json arr = json::array();
    for (const auto& e : bp.entries()) {
        json rec;
        rec["p"] = {rational_to_string(e.point[0]), rational_to_string(e.point[1]),
                    rational_to_string(e.point[2])};
        rec["mult"] = e.multiplicity;
        arr.push_back(std::move(rec));
    }
    return arr;
}

} // namespace

extern "C" {

const char* crm_version(void) { return "0.1.0"; }

const char* crm_last_error(void) { return g_last_error.c_str(); }

void crm_string_free(char* s) { std::free(s); }

crm_status crm_admissible(const long long* counts, size_t n, long long* reducible_step) {
    return wrap([&]() -> crm_status {
        if (!counts || n == 0) return invalid("need at least one count");
        const MultiIndex nu(static_cast<long long>(n) + 1,
                            std::vector<long long>(counts, counts + n));
        const Admissibility adm = is_admissible(nu);
        switch (adm.kind) {
            case Admissibility::Kind::Admissible:
                return CRM_OK;
            case Admissibility::Kind::NoetherFailure:
                g_last_error = "Noether's equations fail for " + nu.to_string();
                return adm.noether.check == NoetherCheck::SelfIntersectionMismatch
                           ? CRM_ERR_NOETHER_SELFINT
                           : CRM_ERR_NOETHER_GENUS;
            case Admissibility::Kind::Reducible:
                if (reducible_step) *reducible_step = adm.reducible_at_step;
                g_last_error = nu.to_string() + " is reducible at step " +
                               std::to_string(adm.reducible_at_step);
                return CRM_ERR_REDUCIBLE;
        }
        return CRM_ERR_INTERNAL;
    });
}

crm_status crm_census_json(long long degree, const char* cache_dir, char** json_out) {
    return wrap([&]() -> crm_status {
        if (!json_out) return invalid("null output pointer");
        const std::string text = (cache_dir && *cache_dir) ? census_cached(degree, cache_dir)
                                                           : census_json(degree);
        *json_out = dup_string(text);
        return CRM_OK;
    });
}

crm_status crm_default_cache_dir(char** dir_out) {
    return wrap([&]() -> crm_status {
        if (!dir_out) return invalid("null output pointer");
        *dir_out = dup_string(default_cache_dir());
        return CRM_OK;
    });
}

crm_status crm_dim_biro(long long degree, long long* out) {
    return wrap([&]() -> crm_status {
        if (!out) return invalid("null output pointer");
        *out = dim_biro(degree);
        return CRM_OK;
    });
}

crm_status crm_dim_bir(long long degree, long long* out) {
    return wrap([&]() -> crm_status {
        if (!out) return invalid("null output pointer");
        *out = dim_bir(degree);
        return CRM_OK;
    });
}

crm_status crm_dim_bira(long long degree, long long factor_degree, long long* out) {
    return wrap([&]() -> crm_status {
        if (!out) return invalid("null output pointer");
        *out = dim_bira(degree, factor_degree);
        return CRM_OK;
    });
}

crm_status crm_map_parse_json(const char* text, crm_map** out) {
    return wrap([&]() -> crm_status {
        if (!text || !out) return invalid("null argument");
        *out = new crm_map{parse_map_json(text)};
        return CRM_OK;
    });
}

crm_status crm_map_render_json(const crm_map* m, char** json_out) {
    return wrap([&]() -> crm_status {
        if (!m || !json_out) return invalid("null argument");
        *json_out = dup_string(render_map_json(m->m));
        return CRM_OK;
    });
}

void crm_map_free(crm_map* m) { delete m; }

crm_status crm_map_degree(const crm_map* m, long long* out) {
    return wrap([&]() -> crm_status {
        if (!m || !out) return invalid("null argument");
        *out = m->m.degree();
        return CRM_OK;
    });
}

crm_status crm_map_compose(const crm_map* outer, const crm_map* inner, int strip, crm_map** out) {
    return wrap([&]() -> crm_status {
        if (!outer || !inner || !out) return invalid("null argument");
        CremonaMap raw = compose(outer->m, inner->m);
        *out = new crm_map{strip ? strip_gcd(raw).map : std::move(raw)};
        return CRM_OK;
    });
}

crm_status crm_map_verify_pair(const crm_map* a, const crm_map* b, int* verified) {
    return wrap([&]() -> crm_status {
        if (!a || !b || !verified) return invalid("null argument");
        *verified = verify_inverse_pair(a->m, b->m) ? 1 : 0;
        return CRM_OK;
    });
}

crm_status crm_map_jacobian_nonzero(const crm_map* m, int* nonzero) {
    return wrap([&]() -> crm_status {
        if (!m || !nonzero) return invalid("null argument");
        *nonzero = jacobian_nonzero(m->m) ? 1 : 0;
        return CRM_OK;
    });
}

crm_status crm_points_parse_json(const char* text, crm_points** out) {
    return wrap([&]() -> crm_status {
        if (!text || !out) return invalid("null argument");
        *out = new crm_points{parse_points_json(text)};
        return CRM_OK;
    });
}

void crm_points_free(crm_points* p) { delete p; }

crm_status crm_map_multiplicities_json(const crm_map* m, const crm_points* pts, char** json_out) {
    return wrap([&]() -> crm_status {
        if (!m || !pts || !json_out) return invalid("null argument");
        json doc;
        doc["schema"] = "cremona.mults/1";
        doc["degree"] = m->m.degree();
        bool all = true;
        json arr = json::array();
        for (const auto& e : pts->p.entries()) {
            const int found = net_multiplicity_at(m->m, e.point);
            const bool match = (found == e.multiplicity);
            all = all && match;
            json rec;
            rec["p"] = {rational_to_string(e.point[0]), rational_to_string(e.point[1]),
                        rational_to_string(e.point[2])};
            rec["expected"] = e.multiplicity;
            rec["found"] = found;
            rec["match"] = match;
            arr.push_back(std::move(rec));
        }
        doc["points"] = std::move(arr);
        doc["all_match"] = all;
        *json_out = dup_string(doc.dump(2) + "\n");
        return CRM_OK;
    });
}

crm_status crm_map_factor_json(const crm_map* m, const crm_points* pts, char** json_out) {
    return wrap([&]() -> crm_status {
        if (!m || !pts || !json_out) return invalid("null argument");
        const Factorization fact = factor_quadratics(m->m, pts->p);
        json doc;
        doc["schema"] = "cremona.factorization/1";
        doc["degree"] = m->m.degree();
        doc["degree_sequence"] = fact.degree_sequence;
        json quads = json::array();
        for (const CremonaMap& q : fact.quadratics) quads.push_back(json::parse(render_map_json(q)));
        doc["quadratics"] = std::move(quads);
        json tail = json::array();
        for (int r = 0; r < 3; ++r) {
            json row = json::array();
            for (int c = 0; c < 3; ++c) row.push_back(rational_to_string(fact.linear_tail.at(r, c)));
            tail.push_back(std::move(row));
        }
        doc["linear_tail"] = std::move(tail);
        doc["recomposition_ok"] = projectively_equal(recompose(fact), m->m);
        *json_out = dup_string(doc.dump(2) + "\n");
        return CRM_OK;
    });
}

crm_status crm_map_invert(const crm_map* m, const crm_points* pts, crm_map** out) {
    return wrap([&]() -> crm_status {
        if (!m || !out) return invalid("null argument");
        static const AssignedBasePoints no_points;
        const AssignedBasePoints& hints = pts ? pts->p : no_points;
        *out = new crm_map{inverse(m->m, hints)};
        return CRM_OK;
    });
}

crm_status crm_fixtures_list_json(char** json_out) {
    return wrap([&]() -> crm_status {
        if (!json_out) return invalid("null output pointer");
        json doc;
        doc["schema"] = "cremona.fixtures/1";
        json arr = json::array();
        auto describe = [](const FixtureMap& f) {
            json rec;
            rec["name"] = f.name;
            rec["degree"] = f.map.degree();
            if (f.htype)
                rec["htype"] = f.htype->counts();
            else
                rec["htype"] = nullptr;
            rec["points"] = points_to_json(f.proper_points);
            rec["all_base_points_proper"] = f.all_base_points_proper;
            rec["inverse"] = f.inverse_name;
            rec["inverse_derived"] = f.inverse_derived;
            rec["description"] = f.description;
            return rec;
        };
        for (const FixtureMap& f : fixtures()) arr.push_back(describe(f));
        doc["maps"] = std::move(arr);
        json derived = json::array();
        for (const FixtureMap& f : derived_inverse_fixtures()) derived.push_back(describe(f));
        doc["derived_inverses"] = std::move(derived);
        *json_out = dup_string(doc.dump(2) + "\n");
        return CRM_OK;
    });
}

crm_status crm_fixture_map(const char* name, crm_map** out) {
    return wrap([&]() -> crm_status {
        if (!name || !out) return invalid("null argument");
        const FixtureMap* f = find_fixture(name);
        if (!f) {
            g_last_error = std::string("no bundled map named '") + name + "'";
            return CRM_ERR_INVALID;
        }
        *out = new crm_map{f->map};
        return CRM_OK;
    });
}

crm_status crm_fixtures_run_json(char** json_out, int* all_passed) {
    return wrap([&]() -> crm_status {
        if (!json_out) return invalid("null output pointer");
        json doc;
        doc["schema"] = "cremona.fixture-report/1";
        json rows = json::array();
        std::set<std::string> verified_pairs;
        bool all = true;
        int passed = 0;
        for (const FixtureMap& f : fixtures()) {
            json rec;
            rec["name"] = f.name;
            rec["degree"] = f.map.degree();
            bool ok = true;

            const bool jac = jacobian_nonzero(f.map);
            rec["jacobian_nonzero"] = jac;
            ok = ok && jac;

            json mults = json::array();
            bool mult_ok = true;
            for (const auto& e : f.proper_points.entries()) {
                const int found = net_multiplicity_at(f.map, e.point);
                json p;
                p["p"] = {rational_to_string(e.point[0]), rational_to_string(e.point[1]),
                          rational_to_string(e.point[2])};
                p["expected"] = e.multiplicity;
                p["found"] = found;
                p["match"] = (found == e.multiplicity);
                mult_ok = mult_ok && (found == e.multiplicity);
                mults.push_back(std::move(p));
            }
            rec["multiplicities"] = std::move(mults);
            rec["multiplicities_ok"] = mult_ok;
            ok = ok && mult_ok;

            if (!f.inverse_name.empty()) {
                const FixtureMap* partner = find_fixture(f.inverse_name);
                rec["inverse"] = f.inverse_name;
                if (!partner) {
                    rec["inverse_verified"] = false;
                    ok = false;
                } else {
                    const std::string key = std::min(f.name, partner->name) + "|" +
                                            std::max(f.name, partner->name);
                    if (verified_pairs.count(key)) {
                        rec["inverse_verified"] = true; // already checked from the other side
                    } else {
                        const bool pair_ok = verify_inverse_pair(f.map, partner->map);
                        rec["inverse_verified"] = pair_ok;
                        ok = ok && pair_ok;
                        if (pair_ok) verified_pairs.insert(key);
                    }
                }
            }

            rec["pass"] = ok;
            all = all && ok;
            if (ok) ++passed;
            rows.push_back(std::move(rec));
        }
        doc["maps"] = std::move(rows);
        doc["passed"] = passed;
        doc["total"] = fixtures().size();
        doc["all_passed"] = all;
        if (all_passed) *all_passed = all ? 1 : 0;
        *json_out = dup_string(doc.dump(2) + "\n");
        return CRM_OK;
    });
}

} // extern "C"
