#include <doctest.h>

#include "corpus/basic.hpp"
#include "diagram/diagram.hpp"

#include <map>
#include <numeric>
#include <random>

using namespace flatdeck;

namespace {

Scalar q(long p, long r = 1) { return Scalar(Rational(p, r)); }

DiagramParams unit_params(const CylinderDiagram& d) {
    DiagramParams p;
    p.lengths.assign(d.letter_count(), q(1));
    p.heights.assign(d.cylinders.size(), q(1));
    p.twists.assign(d.cylinders.size(), q(0));
    return p;
}

Decomposition horizontal(const PolygonSurface& s) {
    auto r = decompose(s, Direction::integer(1, 0), Budget::default_for(s));
    REQUIRE(std::holds_alternative<Decomposition>(r));
    return std::get<Decomposition>(r);
}

// random relabeling of letters and cylinders plus word rotations
CylinderDiagram shuffle(const CylinderDiagram& d, std::mt19937_64& rng) {
    int m = d.letter_count();
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CylinderDiagram out;
    for (const auto& c : d.cylinders) {
        DiagramCylinder nc;
        for (int x : c.top) nc.top.push_back(perm[x]);
        for (int x : c.bottom) nc.bottom.push_back(perm[x]);
        std::rotate(nc.top.begin(), nc.top.begin() + static_cast<long>(rng() % nc.top.size()), nc.top.end());
        std::rotate(nc.bottom.begin(), nc.bottom.begin() + static_cast<long>(rng() % nc.bottom.size()), nc.bottom.end());
        out.cylinders.push_back(nc);
    }
    std::shuffle(out.cylinders.begin(), out.cylinders.end(), rng);
    return out;
}

}  // namespace

TEST_CASE("diagram text format") {
    auto d = CylinderDiagram::parse("top: 1 2 | bottom: 2 1\n");
    CHECK(d.cylinders.size() == 1);
    CHECK(d.to_text() == "top: 1 2 | bottom: 2 1\n");
    CHECK_THROWS(CylinderDiagram::parse("top: 1 2 | bottom: 2 2\n"));
    CHECK_THROWS(CylinderDiagram::parse("top 1 2 bottom 2 1\n"));
}

TEST_CASE("S1 diagrams") {
    auto s = s1_surface();
    auto h = diagram_of(horizontal(s));
    CHECK(h.diagram.cylinders.size() == 1);
    CHECK(diagrams_isomorphic(h.diagram, reference_diagram(ModelTag::OneCyl)));
    CHECK(classify_h4hyp(h.diagram) == ModelTag::OneCyl);
    // the canonical form of the one-cylinder model is its literal picture
    CHECK(h.diagram.to_text() == "top: 1 2 3 4 5 | bottom: 1 5 4 3 2\n");

    auto v = decompose(s, Direction::integer(0, 1), Budget::default_for(s));
    auto& vd = std::get<Decomposition>(v);
    CHECK(classify_h4hyp(diagram_of(vd).diagram) == ModelTag::ThreeCyl_I);
    auto inv = involution_check(vd);
    CHECK(inv.found);
    CHECK(inv.fixed_letters == 1);
    CHECK(inv.passes());

    auto hi = involution_check(horizontal(s));
    CHECK(hi.fixed_letters == 5);
    for (int x = 0; x < 5; ++x) CHECK(hi.involution[x] == x);
}

TEST_CASE("reference diagrams") {
    CHECK(!diagrams_isomorphic(reference_diagram(ModelTag::ThreeCyl_I), reference_diagram(ModelTag::ThreeCyl_II)));
    const std::map<ModelTag, int> fixed = {{ModelTag::ThreeCyl_I, 1}, {ModelTag::ThreeCyl_II, 1},
                                           {ModelTag::TwoCyl_23, 3}, {ModelTag::TwoCyl_14, 3},
                                           {ModelTag::OneCyl, 5}};
    for (auto t : all_models()) {
        CAPTURE(model_name(t));
        const auto& ref = reference_diagram(t);
        CHECK(classify_h4hyp(ref) == t);
        auto s = build_from_diagram(ref, unit_params(ref));
        CHECK(validate(s).ok());
        CHECK(stratum(s).to_string() == "H(4)");
        auto d = horizontal(s);
        CHECK(d.saddles.size() == 5);
        CHECK(classify_h4hyp(diagram_of(d).diagram) == t);
        auto inv = involution_check(d);
        CHECK(inv.passes());
        CHECK(inv.fixed_letters == fixed.at(t));
        for (auto u : all_models())
            if (u != t) CHECK(!diagrams_isomorphic(ref, reference_diagram(u)));
    }
    CHECK(build_from_diagram(reference_diagram(ModelTag::OneCyl), unit_params(reference_diagram(ModelTag::OneCyl)))
              .polygon_count() == 1);
}

TEST_CASE("classification is relabeling invariant") {
    std::mt19937_64 rng(11);
    for (auto t : all_models())
        for (int k = 0; k < 10; ++k) CHECK(classify_h4hyp(shuffle(reference_diagram(t), rng)) == t);
}

TEST_CASE("non-hyperelliptic diagrams are refused") {
    // a one-cylinder H(4) diagram in the other component
    auto odd = CylinderDiagram::parse("top: 1 2 3 4 5 | bottom: 3 5 2 4 1\n");
    CHECK(!classify_h4hyp(odd));
    CHECK(!classify_h4hyp(CylinderDiagram::parse("top: 1 | bottom: 1\n")));
}

TEST_CASE("build errors") {
    auto d = reference_diagram(ModelTag::OneCyl);
    auto p = unit_params(d);
    p.lengths[0] = q(2);  // top sums to 6, bottom too: still balanced in one cylinder
    CHECK_NOTHROW(build_from_diagram(d, p));
    auto d2 = reference_diagram(ModelTag::TwoCyl_14);
    auto p2 = unit_params(d2);
    p2.lengths[0] = q(2);
    CHECK_THROWS_AS(build_from_diagram(d2, p2), std::invalid_argument);
    auto p3 = unit_params(d);
    p3.heights[0] = q(0);
    CHECK_THROWS(build_from_diagram(d, p3));
}

TEST_CASE("round trip keeps parameters") {
    auto d = reference_diagram(ModelTag::TwoCyl_23);
    DiagramParams p;
    p.lengths = {q(3), q(2), q(2), q(5, 2), q(7)};
    p.heights = {q(3, 2), q(4)};
    p.twists = {q(5), q(1, 2)};
    auto s = build_from_diagram(d, p);
    auto lab = diagram_of(horizontal(s));
    auto orig = canonical(d, &p);
    CHECK(lab.diagram == orig.diagram);
    CHECK(lab.params->lengths == orig.params->lengths);
    CHECK(lab.params->heights == orig.params->heights);
    CHECK(lab.params->twists == orig.params->twists);
}
