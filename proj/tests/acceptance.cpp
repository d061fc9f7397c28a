// Acceptance suite: one pass/fail line per criterion, exact checks throughout.
// Exits nonzero if any criterion fails.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "census_io.hpp"
#include "cremona.h"
#include "fixtures.hpp"
#include "mapdoc.hpp"
#include "testutil.hpp"

using namespace cremona;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

struct CheckFailure {
    std::string message;
};

void expect(bool ok, const std::string& message) {
    if (!ok) throw CheckFailure{message};
}

void criterion(int number, const std::string& label, const std::function<void()>& body) {
    try {
        body();
        std::printf("[PASS] criterion %2d: %s\n", number, label.c_str());
    } catch (const CheckFailure& f) {
        ++g_failures;
        std::printf("[FAIL] criterion %2d: %s -- %s\n", number, label.c_str(), f.message.c_str());
    } catch (const std::exception& e) {
        ++g_failures;
        std::printf("[FAIL] criterion %2d: %s -- unexpected error: %s\n", number, label.c_str(),
                    e.what());
    }
    std::fflush(stdout);
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CREMONA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    expect(pipe != nullptr, "cannot launch the command line tool");
    std::string output;
    char buf[512];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::map<std::vector<long long>, long long> census_dims(long long d) {
    std::map<std::vector<long long>, long long> out;
    for (const ComponentRecord& rec : census(d)) out[rec.htype.counts()] = rec.dimension;
    return out;
}

const FixtureMap& fixture(const std::string& name) {
    const FixtureMap* f = find_fixture(name);
    expect(f != nullptr, "missing bundled map " + name);
    return *f;
}

std::vector<ProjPoint> general_points(testutil::Rng& rng, size_t n) { return rng.distinct_points(n); }

} // namespace

int main() {
    criterion(1, "census for degrees 2..6 matches the known component lists", [] {
        using M = std::map<std::vector<long long>, long long>;
        expect(census_dims(2) == M{{{3}, 14}}, "degree 2");
        expect(census_dims(3) == M{{{4, 1}, 18}}, "degree 3");
        expect(census_dims(4) == M{{{6, 0, 1}, 22}, {{3, 3, 0}, 20}}, "degree 4");
        expect(census_dims(5) == M{{{8, 0, 0, 1}, 26}, {{3, 3, 1, 0}, 22}, {{0, 6, 0, 0}, 20}},
               "degree 5");
        expect(census_dims(6) == M{{{10, 0, 0, 0, 1}, 30},
                                   {{3, 4, 0, 1, 0}, 24},
                                   {{4, 1, 3, 0, 0}, 24},
                                   {{1, 4, 2, 0, 0}, 22}},
               "degree 6");
    });

    criterion(2, "command-line admissibility matches the published script and the library", [] {
        const RunResult ok = run_cli("adm 0 6 0 0");
        expect(ok.exit_code == 0 && ok.output == "1\n",
               "adm 0 6 0 0 printed '" + ok.output + "' with exit " + std::to_string(ok.exit_code));
        const RunResult red = run_cli("adm 6 0 2 0");
        expect(red.exit_code == 1 && red.output == "The net is reducible\n",
               "adm 6 0 2 0 printed '" + red.output + "' with exit " + std::to_string(red.exit_code));

        for (long long d = 2; d <= 20; ++d) {
            for (const MultiIndex& nu : enumerate_noether(d)) {
                const bool lib = is_admissible(nu).admissible();
                const auto& counts = nu.counts();
                const crm_status st = crm_admissible(counts.data(), counts.size(), nullptr);
                expect(st == CRM_OK || st == CRM_ERR_REDUCIBLE, "unexpected status for " + nu.to_string());
                expect((st == CRM_OK) == lib, "disagreement on " + nu.to_string());
            }
        }
    });

    criterion(3, "dimension and point-count bounds for degrees 2..20", [] {
        for (long long d = 2; d <= 20; ++d) {
            const auto records = census(d);
            long long max_dim = 0;
            for (const auto& rec : records) max_dim = std::max(max_dim, rec.dimension);
            expect(max_dim == 4 * d + 6, "max dimension at degree " + std::to_string(d));
            int attainers = 0;
            long long max_r = 0;
            for (const auto& rec : records) {
                if (rec.dimension == max_dim) {
                    ++attainers;
                    expect(rec.de_jonquieres, "max component not de Jonquieres at " + std::to_string(d));
                } else if (d >= 4) {
                    expect(rec.dimension <= 2 * d + 12,
                           "secondary component too big at " + std::to_string(d));
                }
                max_r = std::max(max_r, rec.reduced_length);
                if (d >= 3 && rec.reduced_length == 2 * d - 1)
                    expect(rec.de_jonquieres, "point-count maximum not de Jonquieres");
                if (d >= 4 && !rec.de_jonquieres)
                    expect(rec.reduced_length <= d + 2, "non-de-Jonquieres with too many points");
            }
            expect(attainers == 1, "max dimension not unique at " + std::to_string(d));
            if (d >= 3) expect(max_r == 2 * d - 1, "max point count at " + std::to_string(d));
        }
    });

    criterion(4, "dimension formula with the crossover at degree 7", [] {
        for (long long d = 2; d <= 6; ++d)
            expect(dim_bir(d) == 4 * d + 6, "low-degree branch at " + std::to_string(d));
        for (long long d = 7; d <= 20; ++d)
            expect(dim_bir(d) == d * (d + 1) / 2 + 7, "high-degree branch at " + std::to_string(d));
        expect(4 * 7 + 6 == 34 && dim_bir(7) == 35, "crossover at degree 7");
    });

    criterion(5, "maximal-multiplicity inequality with its equality cases, degrees 2..20", [] {
        std::set<long long> symmetric_degrees;
        for (long long d = 2; d <= 20; ++d) {
            for (const ComponentRecord& rec : census(d)) {
                const auto m = top_three(rec.htype);
                const long long sum = m[0] + m[1] + m[2];
                expect(sum >= d + 1, "inequality fails for " + rec.htype.to_string());
                expect((sum == d + 1) == (rec.symmetric || rec.de_jonquieres),
                       "equality case wrong for " + rec.htype.to_string());
                if (rec.symmetric) symmetric_degrees.insert(d);
            }
        }
        expect(symmetric_degrees == std::set<long long>{2, 5, 8, 17},
               "symmetric types at the wrong degrees");
    });

    criterion(6, "bundled maps: inverse pairs, Jacobians, stated multiplicities", [] {
        expect(verify_inverse_pair(fixture("bir4_t1").map, fixture("bir4_t1_inv").map),
               "quartic pair at t=1");
        expect(verify_inverse_pair(fixture("bir4_t0").map, fixture("bir4_t0_inv").map),
               "quartic pair at t=0");
        for (const FixtureMap& f : fixtures()) {
            expect(jacobian_nonzero(f.map), "vanishing Jacobian for " + f.name);
            for (const auto& e : f.proper_points.entries())
                expect(net_multiplicity_at(f.map, e.point) == e.multiplicity,
                       f.name + " multiplicity at " + e.point.to_string());
        }
        expect(net_multiplicity_at(fixture("bir4_t0").map, ProjPoint(0, 0, 1)) == 3,
               "triple point of the t=0 quartic");
        expect(net_multiplicity_at(fixture("bir6_family2_t0").map, ProjPoint(0, 0, 1)) == 5,
               "multiplicity-5 point of the second sextic family at t=0");
    });

    criterion(7, "derived inverses of the quintic and sextic maps verify", [] {
        int pairs = 0;
        for (const FixtureMap& f : fixtures()) {
            if (!f.inverse_derived) continue;
            expect(verify_inverse_pair(f.map, fixture(f.inverse_name).map), "pair " + f.name);
            ++pairs;
        }
        expect(pairs == 6, "expected six derived pairs, saw " + std::to_string(pairs));
    });

    criterion(8, "constructed nets factor and invert, matching the combinatorial reduction", [] {
        testutil::Rng rng(20250809);
        for (long long d = 2; d <= 5; ++d) {
            for (const ComponentRecord& rec : census(d)) {
                const MultiIndex& nu = rec.htype;
                const MultiplicityProfile profile = multiplicities(nu);

                CremonaMap built = CremonaMap::identity();
                bool ok = false;
                for (int attempt = 0; attempt < 5 && !ok; ++attempt) {
                    const auto pts = general_points(rng, profile.size());
                    try {
                        built = build_net(nu, pts);
                        ok = true;
                        std::vector<AssignedBasePoints::Entry> entries;
                        for (size_t i = 0; i < pts.size(); ++i) entries.push_back({pts[i], profile[i]});
                        const AssignedBasePoints hints{std::move(entries)};

                        expect(built.pure() && built.degree() == nu.degree(),
                               "net for " + nu.to_string());

                        const Factorization fact = factor_quadratics(built, hints);
                        expect(projectively_equal(recompose(fact), built),
                               "recomposition for " + nu.to_string());

                        std::vector<int> expected_degrees;
                        for (const QStep& s : is_admissible(nu).trace)
                            expected_degrees.push_back(static_cast<int>(s.output.degree()));
                        expected_degrees.push_back(1);
                        expect(fact.degree_sequence == expected_degrees,
                               "degree sequence for " + nu.to_string());

                        expect(verify_inverse_pair(built, inverse(built, hints)),
                               "inverse for " + nu.to_string());
                    } catch (const Error& e) {
                        if (e.code() != Err::SpecialPosition) throw;
                        ok = false;
                    }
                }
                expect(ok, "kept drawing special positions for " + nu.to_string());
            }
        }
    });

    criterion(9, "the two degree-10 types satisfy the equations and are admissible", [] {
        const MultiIndex a(10, {0, 0, 7, 0, 0, 1, 0, 0, 0});
        const MultiIndex b(10, {3, 0, 0, 6, 0, 0, 0, 0, 0});
        expect(noether_status(a).ok() && is_admissible(a).admissible(), a.to_string());
        expect(noether_status(b).ok() && is_admissible(b).admissible(), b.to_string());
    });

    criterion(10, "seeded property suites", [] {
        testutil::Rng rng(1748);

        // quadratic involution at random centers
        int involutions = 0;
        while (involutions < 8) {
            const auto pts = rng.distinct_points(3);
            try {
                const CremonaMap w = quadratic_map(pts[0], pts[1], pts[2]);
                const StripResult s = strip_gcd(compose(w, w));
                expect(is_identity_up_to_factor(s.map) && s.map.degree() == 1, "involution");
                ++involutions;
            } catch (const Error& e) {
                if (e.code() != Err::CollinearCenters) throw;
            }
        }

        // gcd divisibility with coprime quotients
        for (int trial = 0; trial < 8; ++trial) {
            const Form common = rng.nonzero_form(static_cast<int>(rng.int_in(0, 2)));
            const Form f = rng.nonzero_form(static_cast<int>(rng.int_in(1, 3))) * common;
            const Form g = rng.nonzero_form(static_cast<int>(rng.int_in(1, 3))) * common;
            const Form h = gcd(f, g);
            expect(divexact(f, h) * h == f && divexact(g, h) * h == g, "gcd divides");
            expect(gcd(divexact(f, h), divexact(g, h)).is_constant(), "quotients coprime");
        }

        // multiplicity is invariant under linear substitution
        for (int trial = 0; trial < 10; ++trial) {
            const ProjPoint p = rng.point();
            Form f = rng.nonzero_form(static_cast<int>(rng.int_in(1, 4)));
            if (trial % 2 == 0) {
                const Form l = scale(Form::variable(Var::X), p[1]) - scale(Form::variable(Var::Y), p[0]);
                f = f * l;
            }
            const Mat3 M = rng.invertible_matrix();
            expect(multiplicity_at(f, p) == multiplicity_at(linear_substitute(f, M), M.inverse().apply(p)),
                   "multiplicity invariance");
        }

        // map documents round-trip byte-exactly
        for (int trial = 0; trial < 10; ++trial) {
            const int d = static_cast<int>(rng.int_in(1, 4));
            const CremonaMap m(rng.nonzero_form(d), rng.form(d), rng.form(d));
            const std::string text = render_map_json(m);
            expect(render_map_json(parse_map_json(text)) == text, "document round-trip");
        }

        // census cache regenerates byte-identically
        const fs::path dir = fs::temp_directory_path() / "cremona-acceptance-cache";
        fs::remove_all(dir);
        const std::string first = census_cached(7, dir.string());
        fs::remove_all(dir);
        const std::string second = census_cached(7, dir.string());
        std::ifstream in(census_cache_path(dir.string(), 7), std::ios::binary);
        const std::string on_disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        fs::remove_all(dir);
        expect(first == second && first == on_disk, "cache determinism");
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
