#include <gtest/gtest.h>

#include <algorithm>

#include "cf1p/audit.hpp"
#include "cf1p/generators.hpp"
#include "cf1p/io.hpp"
#include "negative_fixtures.hpp"

using namespace cf1p;

namespace {

int threshold_kappa(const Fixture& f, int clause) { return std::min(static_cast<int>(f.claims.kappa), clause); }

const AuditCheck& get(const AuditReport& r, const std::string& name) {
    auto* c = r.find(name);
    if (!c) throw std::runtime_error("missing check " + name);
    return *c;
}

}  // namespace

TEST(AuditTheorems, CorpusPasses) {
    for (const auto& f : corpus()) {
        auto r = audit_theorems(f.drawing);
        EXPECT_TRUE(r.ok()) << f.name << "\n" << format_report(r);
        EXPECT_TRUE(get(r, "T1").applicable);
        EXPECT_TRUE(get(r, "T3").applicable);
        EXPECT_FALSE(get(r, "C1").applicable);
        EXPECT_EQ(get(r, "T2").applicable, f.claims.kappa >= 6) << f.name;
    }
}

TEST(AuditTheorems, NeedsDrawingAndClawFreeness) {
    auto star = build_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}});
    auto r = audit_theorems(star);
    for (const char* n : {"T1", "T2", "T3", "C1"}) EXPECT_FALSE(get(r, n).applicable) << n;
    DrawingData data(star);
    data.rotations[0] = std::vector<Vertex>{1, 2, 3};
    for (Vertex v = 1; v < 4; ++v) data.rotations[v] = std::vector<Vertex>{0};
    auto drawn = audit_theorems(star, build_drawing(data));
    EXPECT_FALSE(get(drawn, "T1").applicable);
    EXPECT_TRUE(drawn.ok());
    EXPECT_EQ(format_report(r), "T1 n/a\nT2 n/a\nT3 n/a\nC1 n/a\n");
}

TEST(AuditTheorems, MismatchedDrawingRejected) {
    EXPECT_THROW(audit_theorems(gen_k5().graph, gen_k6().drawing), InputError);
}

TEST(AuditLemma3, CorpusPassesAtEveryThreshold) {
    for (const auto& f : corpus()) {
        for (int clause : {4, 6, 7}) {
            auto r = audit_lemma3(f.drawing, threshold_kappa(f, clause));
            EXPECT_TRUE(r.ok()) << f.name << " at " << clause << "\n" << format_report(r);
        }
    }
}

TEST(AuditLemma3, ApplicabilityFollowsKappa) {
    auto d = gen_fig1_left().drawing;
    auto r6 = audit_lemma3(d, 6);
    EXPECT_TRUE(get(r6, "lemma3-i").applicable);
    EXPECT_TRUE(get(r6, "lemma3-ii").applicable);
    EXPECT_FALSE(get(r6, "lemma3-iii").applicable);
    auto r3 = audit_lemma3(gen_h0().drawing, 3);
    EXPECT_FALSE(get(r3, "lemma3-i").applicable);
}

TEST(AuditLemma3, AssumptionAboveActualConnectivityThrows) {
    EXPECT_THROW(audit_lemma3(gen_h0().drawing, 4), InputError);
    EXPECT_THROW(audit_propositions(gen_fig5_ii().drawing, 6), InputError);
    EXPECT_THROW(audit_lemma3(gen_k5().drawing, -1), InputError);
    EXPECT_NO_THROW(audit_lemma3(gen_h0().drawing, 4, false));
}

TEST(AuditPropositions, CorpusPassesAtEveryThreshold) {
    for (const auto& f : corpus()) {
        for (int clause : {4, 6, 7}) {
            auto r = audit_propositions(f.drawing, threshold_kappa(f, clause));
            EXPECT_TRUE(r.ok()) << f.name << " at " << clause << "\n" << format_report(r);
        }
    }
}

TEST(AuditPropositions, Fig1WedgesExist) {
    // The propositions are not vacuous on the kappa = 6 fixtures.
    for (const auto& f : {gen_fig1_left(), gen_fig1_right()}) {
        std::size_t wedges = 0, crossed = 0;
        for (Vertex u = 0; u < f.graph.order(); ++u)
            detail::for_each_wedge(f.drawing, u, [&](Vertex x, Vertex y, const std::vector<Vertex>&) {
                ++wedges;
                if (f.drawing.crossing_partner(x, y)) ++crossed;
            });
        EXPECT_GT(wedges, 0u) << f.name;
        EXPECT_GT(crossed, 0u) << f.name;
    }
}

TEST(AuditNegatives, K5Pocket) {
    auto d = parse_drawing_file(testdata::k5_pocket);
    auto r = audit_lemma3(d, 4, false);
    EXPECT_EQ(r.failures(), 1u);
    EXPECT_EQ(get(r, "lemma3-i").witnesses.size(), 1u);
}

TEST(AuditNegatives, TypeIPocket) {
    auto d = parse_drawing_file(testdata::type1_pocket);
    auto r = audit_lemma3(d, 6, false);
    EXPECT_EQ(r.failures(), 1u);
    ASSERT_FALSE(get(r, "lemma3-ii").passed);
    ASSERT_EQ(get(r, "lemma3-ii").witnesses.size(), 1u);
    EXPECT_EQ(get(r, "lemma3-ii").witnesses[0], "x a (a-b|c-d) c");
}

TEST(AuditNegatives, WedgeCross) {
    auto r = audit_propositions(parse_drawing_file(testdata::wedge_cross), 4, false);
    EXPECT_EQ(r.failures(), 1u);
    EXPECT_FALSE(get(r, "prop1").passed);
}

TEST(AuditNegatives, WedgeCrossFar) {
    auto r = audit_propositions(parse_drawing_file(testdata::wedge_cross_far), 6, false);
    EXPECT_EQ(r.failures(), 1u);
    EXPECT_TRUE(get(r, "prop1").passed);
    EXPECT_FALSE(get(r, "prop2").passed);
}

TEST(AuditNegatives, WheelChords) {
    auto far = audit_propositions(parse_drawing_file(testdata::wheel_far_chord), 7, false);
    EXPECT_FALSE(get(far, "prop3-i").passed);
    EXPECT_EQ(get(far, "prop3-i").witnesses.size(), 1u);
    auto near = audit_propositions(parse_drawing_file(testdata::wheel_short_chord), 7, false);
    EXPECT_FALSE(get(near, "prop3-ii").passed);
    EXPECT_EQ(get(near, "prop3-ii").witnesses.size(), 1u);
}

TEST(AuditNegatives, NegativesAreValidDrawings) {
    for (auto text : {testdata::k5_pocket, testdata::type1_pocket, testdata::wedge_cross, testdata::wedge_cross_far,
                      testdata::wheel_far_chord, testdata::wheel_short_chord})
        EXPECT_TRUE(validate_drawing(*parse_file(text).drawing).ok());
}

TEST(Mutations, EveryOperatorBreaksTheDrawing) {
    auto d = gen_fig1_left().drawing;
    for (const auto& op : mutation_operators()) {
        if (op == "none") {
            EXPECT_TRUE(validate_drawing(mutate(d, op, 1)).ok());
            continue;
        }
        EXPECT_FALSE(validate_drawing(mutate(d, op, 1)).ok()) << op;
    }
}
