#include "fixtures.hpp"

#include "form_parse.hpp"

namespace cremona {

namespace {

CremonaMap map3(const std::string& f1, const std::string& f2, const std::string& f3) {
    return CremonaMap(parse_form(f1), parse_form(f2), parse_form(f3));
}

AssignedBasePoints pts(std::vector<std::pair<std::array<long, 3>, long long>> data) {
    std::vector<AssignedBasePoints::Entry> entries;
    for (const auto& [p, m] : data)
        entries.push_back({ProjPoint(p[0], p[1], p[2]), m});
    return AssignedBasePoints(std::move(entries));
}

std::vector<FixtureMap> build_fixtures() {
    std::vector<FixtureMap> out;

    // quartic family with double points at [0,0,1], [t,0,1], [0,t,1] and
    // simple points [1,-2,1], [-2,1,1], [2,3,1]; here t = 1
    out.push_back(FixtureMap{
        "bir4_t1",
        map3("(3x^3 - 6x^2z + 80xy^2 - 107xyz + 3xz^2 - 9y^3 - 98y^2z + 107yz^2)x",
             "-3(-x^2 + 10xy - 12xz - y^2 - 12yz + 13z^2)xy",
             "3(-y + z)(12x^2 - 3xy - 12xz - y^2 + yz)y"),
        MultiIndex(4, {3, 3, 0}),
        pts({{{0, 0, 1}, 2}, {{1, 0, 1}, 2}, {{0, 1, 1}, 2}, {{1, -2, 1}, 1}, {{-2, 1, 1}, 1}, {{2, 3, 1}, 1}}),
        true,
        "bir4_t1_inv",
        false,
        "quartic net: three double points and three simple points",
    });

    out.push_back(FixtureMap{
        "bir4_t1_inv",
        map3("-(-36x^2 - 243xy + 42xz - 396y^2 + 116yz)(-36xy + 39xz - 99y^2 + 107yz)",
             "(-36xy + 39xz - 99y^2 + 107yz)(36xy - 42xz + 99y^2 - 125yz + 10z^2)",
             "-108x^3z - 1296x^2y^2 + 1539x^2yz - 1152x^2z^2 - 7128xy^3 + 10809xy^2z - 6195xyz^2 "
             "- 30xz^3 - 9801y^4 + 15840y^3z - 8317y^2z^2 - 90yz^3"),
        std::nullopt,
        AssignedBasePoints(),
        false,
        "bir4_t1",
        false,
        "printed inverse of bir4_t1",
    });

    // the same family at t = 0: the three double points collide into a triple
    // point with three infinitely near simple points
    out.push_back(FixtureMap{
        "bir4_t0",
        map3("-(12x^3 - 217xy^2 + 308xyz - 30y^3 + 308y^2z)x",
             "6(-2x^2 - 19xy + 28xz - 2y^2 + 28yz)xy",
             "6(-23x^2y + 42x^2z - 5xy^2 + 42xyz - 2y^3)y"),
        MultiIndex(4, {6, 0, 1}),
        pts({{{0, 0, 1}, 3}, {{1, -2, 1}, 1}, {{-2, 1, 1}, 1}, {{2, 3, 1}, 1}}),
        false,
        "bir4_t0_inv",
        false,
        "de Jonquieres quartic: triple point with three infinitely near simple points",
    });

    out.push_back(FixtureMap{
        "bir4_t0_inv",
        map3("-7(6x + 11y)^2(-3y + 2z)(-6x - 17y + 4z)",
             "14(-6x - 17y + 4z)(6x + 11y)(-3y + 2z)^2",
             "216x^3z - 2484x^2y^2 + 4896x^2yz - 1368x^2z^2 - 9648xy^3 + 16710xy^2z - 5544xyz^2 "
             "+ 96xz^3 - 9555y^4 + 15942y^3z - 5854y^2z^2 + 240yz^3"),
        std::nullopt,
        AssignedBasePoints(),
        false,
        "bir4_t0",
        false,
        "printed inverse of bir4_t0",
    });

    // quintic family with an oscnode at [0,0,1] along the conic xz + y^2 = 0,
    // a triple point at [t,0,1] and simple points [1,1,1], [1,-1,1], [2,1,1]
    out.push_back(FixtureMap{
        "bir5_t1",
        map3("10x^2y^2z + 9xy^3z - 18y^3x^2 + 5y^4x + 9y^5 + 5x^5 - 10xy^2z^2 + 15x^3z^2 "
             "- 15x^4z - 5x^2z^3 - 5y^4z",
             "y(7y^2xz + 2y^4 - 9y^2x^2 + 5x^4 - 10x^3z + 5x^2z^2)",
             "y^2(4y^3 + 4yxz - 5x^2z - 8yx^2 + 5x^3)"),
        MultiIndex(5, {3, 3, 1, 0}),
        pts({{{0, 0, 1}, 2}, {{1, 0, 1}, 3}, {{1, 1, 1}, 1}, {{1, -1, 1}, 1}, {{2, 1, 1}, 1}}),
        false,
        "bir5_t1_inv",
        true,
        "quintic net: oscnode (a double point with two infinitely near double points), "
        "a triple point and three simple points",
    });

    out.push_back(FixtureMap{
        "bir5_t0",
        map3("-60y^3x^2 - 5y^4x + 30y^5 + 5x^5 + 30xy^3z",
             "12y^5 - 29y^3x^2 + 5yx^4 + 12xy^3z",
             "6y^5 - 5y^4x - 12y^3x^2 + 5y^2x^3 + 6xy^3z"),
        MultiIndex(5, {8, 0, 0, 1}),
        pts({{{0, 0, 1}, 4}, {{1, 1, 1}, 1}, {{1, -1, 1}, 1}, {{2, 1, 1}, 1}}),
        false,
        "bir5_t0_inv",
        true,
        "de Jonquieres quintic: quadruple point, five of the eight simple points infinitely near",
    });

    // sextic family: triple point at [0,0,1] with an infinitely near double
    // point, triple point at [t,0,1], double points [1,1,1], [-1,1,1],
    // [2,1,1], simple point [2,-3,1]
    out.push_back(FixtureMap{
        "bir6_family1_t1",
        map3("27x^6 - 216y^6 - 81x^2yz^3 + 135x^3yz^2 - 108x^2y^2z^2 - 368xy^3z^2 - 27x^4yz "
             "+ 108x^3y^2z + 520xy^4z - 27x^3z^3 + 81x^4z^2 - 81x^5z + 324y^5z - 27x^5y - 260xy^5",
             "3xy(-z + y)(-4y^3 + 22y^2z - 18xy^2 + 9xz^2 - 18x^2z + 9x^3)",
             "9y^2(-z + y)(6y^3 + 4xy^2 - 7yxz - 3x^2y + 3x^3 - 3x^2z)"),
        MultiIndex(6, {1, 4, 2, 0, 0}),
        pts({{{0, 0, 1}, 3}, {{1, 0, 1}, 3}, {{1, 1, 1}, 2}, {{-1, 1, 1}, 2}, {{2, 1, 1}, 2}, {{2, -3, 1}, 1}}),
        false,
        "bir6_family1_t1_inv",
        true,
        "sextic net: two triple points (one carrying an infinitely near double point), "
        "three double points and a simple point",
    });

    out.push_back(FixtureMap{
        "bir6_family1_t0",
        map3("27x^6 - 540y^6 - 430xy^3z^2 + 54x^4yz + 216x^3y^2z - 702x^2y^3z + 644xy^4z "
             "+ 648y^5z - 108x^5y + 513x^2y^4 - 322xy^5",
             "3y(-z + y)(36y^4 + 20xy^3 - 20y^2xz - 45x^2y^2 + 9x^4)",
             "9y^2(-z + y)(6y^3 + 2xy^2 - 5yxz - 6x^2y + 3x^3)"),
        MultiIndex(6, {3, 4, 0, 1, 0}),
        pts({{{0, 0, 1}, 4}, {{1, 1, 1}, 2}, {{-1, 1, 1}, 2}, {{2, 1, 1}, 2}, {{2, -3, 1}, 1}}),
        false,
        "bir6_family1_t0_inv",
        true,
        "sextic net: quadruple point with an infinitely near double point, "
        "three double points and a simple point",
    });

    // sextic family: double point at [0,0,1] with three infinitely near double
    // points along the conic xz + y^2 = 0, quadruple point at [t,0,1], simple
    // points [1,1,1], [-1,1,1], [2,1,1]
    out.push_back(FixtureMap{
        "bir6_family2_t1",
        map3("-2x^6 - 8y^6 - 4xy^2z^3 + 8x^2y^2z^2 - 4x^3y^2z + 5x^2y^3z - 8xy^4z - 2x^2z^4 "
             "+ 8x^3z^3 - 12x^4z^2 - 2y^4z^2 + 8x^5z - 5x^3y^3 + 13x^2y^4 + 5xy^5",
             "-2y(-xz + x^2 + xy - y^2)(-xz + x^2 - y^2)(-z + x - y)",
             "-y^2(-2xz + 2x^2 - xy - 2y^2)(-xz + x^2 + xy - y^2)"),
        MultiIndex(6, {3, 4, 0, 1, 0}),
        pts({{{0, 0, 1}, 2}, {{1, 0, 1}, 4}, {{1, 1, 1}, 1}, {{-1, 1, 1}, 1}, {{2, 1, 1}, 1}}),
        false,
        "bir6_family2_t1_inv",
        true,
        "sextic net: chain of four double points (three infinitely near), a quadruple point "
        "and three simple points",
    });

    out.push_back(FixtureMap{
        "bir6_family2_t0",
        map3("-3x^6 - 20y^6 - 20xy^4z + 20x^3y^3 + 23x^2y^4",
             "-y(8y^5 + 8y^3xz + 3x^5 - 11x^3y^2 - 8x^2y^3)",
             "-y^2(4y^4 + 4xzy^2 + 3x^4 - 4x^3y - 7x^2y^2)"),
        MultiIndex(6, {10, 0, 0, 0, 1}),
        pts({{{0, 0, 1}, 5}, {{1, 1, 1}, 1}, {{-1, 1, 1}, 1}, {{2, 1, 1}, 1}}),
        false,
        "bir6_family2_t0_inv",
        true,
        "de Jonquieres sextic: a point of multiplicity 5, seven of the ten simple points "
        "infinitely near",
    });

    return out;
}

std::vector<FixtureMap> build_derived_inverses() {
    std::vector<FixtureMap> out;

    out.push_back(FixtureMap{
        "bir5_t1_inv",
        map3("32x^2y^3 + 32x^2y^2z - 6x^2yz^2 - 9x^2z^3 - 112xy^4 - 140xy^3z - 82xy^2z^2 + 18xyz^3 + "
             "36xz^4 + 98y^5 + 147y^4z + 168y^3z^2 + 35y^2z^3 - 12yz^4 - 36z^5",
             "-40x^3yz - 30x^3z^2 + 40x^2y^3 + 120x^2y^2z + 245x^2yz^2 + 180x^2z^3 - 122xy^4 - 176xy^3z - "
             "463xy^2z^2 - 514xyz^3 - 357xz^4 + 91y^5 + 147y^4z + 246y^3z^2 + 433y^2z^3 + 369yz^4 + 234z^5",
             "40x^4z - 40x^3y^2 - 60x^3yz - 320x^3z^2 + 124x^2y^3 + 214x^2y^2z + 418x^2yz^2 + 937x^2z^3 - "
             "134xy^4 - 485xy^3z - 364xy^2z^2 - 949xyz^3 - 1188xz^4 + 59y^5 + 279y^4z + 411y^3z^2 + "
             "230y^2z^3 + 696yz^4 + 549z^5"),
        std::nullopt,
        AssignedBasePoints(),
        false,
        "bir5_t1",
        true,
        "derived inverse of bir5_t1 (tools/derive_inverse.py)",
    });

    out.push_back(FixtureMap{
        "bir5_t0_inv",
        map3("6x^2y^3 - 36x^2y^2z + 72x^2yz^2 - 48x^2z^3 - 24xy^4 + 132xy^3z - 216xy^2z^2 + 48xyz^3 + "
             "96xz^4 + 24y^5 - 120y^4z + 150y^3z^2 + 60y^2z^3 - 120yz^4 - 48z^5",
             "6xy^4 - 48xy^3z + 144xy^2z^2 - 192xyz^3 + 96xz^4 - 12y^5 + 90y^4z - 240y^3z^2 + 240y^2z^3 - "
             "96z^5",
             "5x^4z - 5x^3y^2 - 30x^3yz - 20x^3z^2 + 42x^2y^3 - 2x^2y^2z + 254x^2yz^2 - 86x^2z^3 - 103xy^4 "
             "+ 154xy^3z - 577xy^2z^2 + 6xyz^3 + 212xz^4 + 72y^5 - 85y^4z + 100y^3z^2 + 680y^2z^3 - "
             "710yz^4 + 81z^5"),
        std::nullopt,
        AssignedBasePoints(),
        false,
        "bir5_t0",
        true,
        "derived inverse of bir5_t0 (tools/derive_inverse.py)",
    });

    out.push_back(FixtureMap{
        "bir6_family1_t1_inv",
        map3("2187x^4yz - 16038x^3y^2z + 41796x^3yz^2 + 38151x^2y^3z - 251100x^2y^2z^2 + 293004x^2yz^3 - "
             "32076xy^4z + 442368xy^3z^2 - 1277136xy^2z^3 + 891648xyz^4 + 8748y^5z - 195696y^4z^2 + "
             "1281072y^3z^3 - 2087424y^2z^4 + 995328yz^5",
             "2187x^4z^2 + 2187x^3y^2z - 25515x^3yz^2 + 36450x^3z^3 - 9477x^2y^3z + 133164x^2y^2z^2 - "
             "335340x^2yz^3 + 222912x^2z^4 + 9720xy^4z - 258228xy^3z^2 + 1115208xy^2z^3 - 1416960xyz^4 + "
             "595968xz^5 - 2916y^5z + 120096y^4z^2 - 1134000y^3z^3 + 2380032y^2z^4 - 1945600yz^5 + "
             "589824z^6",
             "2187x^4z^2 - 2187x^3y^3 + 6561x^3y^2z - 23328x^3yz^2 + 32076x^3z^3 + 4374x^2y^4 - "
             "63423x^2y^3z + 169128x^2y^2z^2 - 249804x^2yz^3 + 176256x^2z^4 - 2916xy^5 + 75816xy^4z - "
             "555984xy^3z^2 + 920160xy^2z^3 - 891648xyz^4 + 430080xz^5 + 648y^6 - 24300y^5z + 301968y^4z^2 "
             "- 1185840y^3z^3 + 1428480y^2z^4 - 1060864yz^5 + 393216z^6"),
        std::nullopt,
        AssignedBasePoints(),
        false,
        "bir6_family1_t1",
        true,
        "derived inverse of bir6_family1_t1 (tools/derive_inverse.py)",
    });

    out.push_back(FixtureMap{
        "bir6_family1_t0_inv",
        map3("2187x^4yz - 4374x^4z^2 + 24786x^3y^2z + 972x^3yz^2 - 101088x^3z^3 + 102303x^2y^3z + "
             "233118x^2y^2z^2 - 442800x^2yz^3 - 865296x^2z^4 + 181764xy^4z + 864540xy^3z^2 + 89136xy^2z^3 "
             "- 3465648xyz^4 - 3249792xz^5 + 117612y^5z + 874368y^4z^2 + 1429068y^3z^3 - 2432232y^2z^4 - "
             "7468272yz^5 - 4520544z^6",
             "2187x^4z^2 + 21141x^3yz^2 + 55404x^3z^3 + 74358x^2y^2z^2 + 407754x^2yz^3 + 522288x^2z^4 + "
             "113724xy^3z^2 + 966168xy^2z^3 + 2608092xyz^4 + 2168016xz^5 + 64152y^4z^2 + 744552y^3z^3 + "
             "3127032y^2z^4 + 5527672yz^5 + 3336592z^6",
             "2187x^4z^2 - 2187x^3y^3 + 17496x^3y^2z - 20412x^3yz^2 + 81648x^3z^3 - 24057x^2y^4 + "
             "154548x^2y^3z - 106191x^2y^2z^2 + 92826x^2yz^3 + 879984x^2z^4 - 88209xy^5 + 427680xy^4z + "
             "260820xy^3z^2 - 1028700xy^2z^3 + 2452680xyz^4 + 3705504xz^5 - 107811y^6 + 352836y^5z + "
             "982476y^4z^2 - 1374624y^3z^3 - 169164y^2z^4 + 7229032yz^5 + 5340880z^6"),
        std::nullopt,
        AssignedBasePoints(),
        false,
        "bir6_family1_t0",
        true,
        "derived inverse of bir6_family1_t0 (tools/derive_inverse.py)",
    });

    out.push_back(FixtureMap{
        "bir6_family2_t1_inv",
        map3("8x^3z^3 + 16x^2yz^3 - 88x^2z^4 - 6xy^4z - 32xy^3z^2 - 48xy^2z^3 - 160xyz^4 + 312xz^5 - 2y^6 "
             "- 20y^5z - 50y^4z^2 + 80y^2z^4 + 336yz^5 - 360z^6",
             "12x^3yz^2 + 16x^3z^3 - 6x^2y^3z + 20x^2y^2z^2 - 76x^2yz^3 - 160x^2z^4 - 6xy^5 - 40xy^4z - "
             "4xy^3z^2 - 136xy^2z^3 + 84xyz^4 + 528xz^5 - 5y^6 - 10y^5z + 84y^4z^2 + 42y^3z^3 + 196y^2z^4 "
             "+ 108yz^5 - 576z^6",
             "-18x^3y^2z - 36x^3yz^2 - 8x^3z^3 + 18x^2y^4 + 12x^2y^3z + 138x^2y^2z^2 + 348x^2yz^3 + "
             "72x^2z^4 + 33xy^5 - 50xy^4z - 64xy^3z^2 - 334xy^2z^3 - 1148xyz^4 - 216xz^5 + 13y^6 - 85y^5z "
             "- 52y^4z^2 + 20y^3z^3 + 198y^2z^4 + 1284yz^5 + 216z^6"),
        std::nullopt,
        AssignedBasePoints(),
        false,
        "bir6_family2_t1",
        true,
        "derived inverse of bir6_family2_t1 (tools/derive_inverse.py)",
    });

    out.push_back(FixtureMap{
        "bir6_family2_t0_inv",
        map3("4x^2y^4 - 32x^2y^3z + 96x^2y^2z^2 - 128x^2yz^3 + 64x^2z^4 - 16xy^5 + 120xy^4z - 320xy^3z^2 + "
             "320xy^2z^3 - 128xz^5 + 16y^6 - 112y^5z + 260y^4z^2 - 160y^3z^3 - 160y^2z^4 + 128yz^5 + 64z^6",
             "4xy^5 - 40xy^4z + 160xy^3z^2 - 320xy^2z^3 + 320xyz^4 - 128xz^5 - 8y^6 + 76y^5z - 280y^4z^2 + "
             "480y^3z^3 - 320y^2z^4 - 64yz^5 + 128z^6",
             "3x^5z - 3x^4y^2 - 24x^4yz - 15x^4z^2 + 28x^3y^3 + 57x^3y^2z + 156x^3yz^2 - 14x^3z^3 - "
             "89x^2y^4 - 68x^2y^3z - 381x^2y^2z^2 - 212x^2yz^3 + 166x^2z^4 + 116xy^5 + 102xy^4z + "
             "244xy^3z^2 + 683xy^2z^3 - 204xyz^4 - 245xz^5 - 56y^6 - 52y^5z - 205y^4z^2 + 180y^3z^3 - "
             "1060y^2z^4 + 1052yz^5 - 151z^6"),
        std::nullopt,
        AssignedBasePoints(),
        false,
        "bir6_family2_t0",
        true,
        "derived inverse of bir6_family2_t0 (tools/derive_inverse.py)",
    });

    return out;
}

} // namespace

const std::vector<FixtureMap>& fixtures() {
    static const std::vector<FixtureMap> maps = build_fixtures();
    return maps;
}

const std::vector<FixtureMap>& derived_inverse_fixtures() {
    static const std::vector<FixtureMap> maps = build_derived_inverses();
    return maps;
}

const FixtureMap* find_fixture(const std::string& name) {
    for (const FixtureMap& f : fixtures())
        if (f.name == name) return &f;
    for (const FixtureMap& f : derived_inverse_fixtures())
        if (f.name == name) return &f;
    return nullptr;
}

} // namespace cremona
