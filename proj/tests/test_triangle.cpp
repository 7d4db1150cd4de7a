#include <gtest/gtest.h>

#include <cmath>

#include "moebius/pencil.hpp"
#include "moebius/triangle.hpp"
#include "oracles.hpp"

using namespace moebius;
using oracle::Rng;

namespace {

double dist(const CycleVec& x, const CycleVec& y) { return (x - y).norm(); }

TriangleSpec unit_circle_spec(double a, double b, double c) {
    TriangleSpec t;
    t.A = Point::finite(std::polar(1.0, kPi / 2));
    t.B = Point::finite(std::polar(1.0, 7 * kPi / 6));
    t.C = Point::finite(std::polar(1.0, 11 * kPi / 6));
    t.alpha = a;
    t.beta = b;
    t.gamma = c;
    return t;
}

// Random feasible spec with well separated vertices, one of them possibly at infinity.
TriangleSpec random_spec(Rng& rng, double lo = 0.02, double hi = 2 * kPi - 0.02) {
    TriangleSpec t;
    for (;;) {
        t.alpha = rng.uniform(lo, hi);
        t.beta = rng.uniform(lo, hi);
        t.gamma = rng.uniform(lo, hi);
        DigonOffsets d;
        if (!check_angles(t.alpha, t.beta, t.gamma)) continue;
        d = digon_offsets(t.alpha, t.beta, t.gamma);
        // Keep away from the boundary of the feasible region.
        if (std::max({std::abs(d.alpha0), std::abs(d.beta0), std::abs(d.gamma0)}) > kPi - 0.02) continue;
        break;
    }
    for (;;) {
        cplx a = rng.point(), b = rng.point(), c = rng.point();
        if (std::abs(a - b) < 0.3 || std::abs(b - c) < 0.3 || std::abs(a - c) < 0.3) continue;
        t.A = Point::finite(a);
        t.B = Point::finite(b);
        t.C = rng.uniform(0, 1) < 0.1 ? Point::infinity() : Point::finite(c);
        break;
    }
    t.orientation = rng.sign() > 0 ? Orientation::ABC : Orientation::ACB;
    return t;
}

TriangleSpec random_proper_spec(Rng& rng) { return random_spec(rng, 0.02, kPi - 0.02); }

void expect_angles(const Angles& g, double a, double b, double c, double tol) {
    EXPECT_NEAR(g.alpha, a, tol);
    EXPECT_NEAR(g.beta, b, tol);
    EXPECT_NEAR(g.gamma, c, tol);
}

}  // namespace

TEST(CheckAngles, Examples) {
    EXPECT_TRUE(check_angles(kPi / 3, kPi / 3, kPi / 3));
    EXPECT_FALSE(check_angles(0, 0, kPi));
    for (double g : {0.0, 1.0, kPi, 4.0, 2 * kPi}) EXPECT_FALSE(check_angles(0, 2 * kPi, g));
    EXPECT_FALSE(check_angles(-0.1, 1, 1));
    EXPECT_TRUE(check_angles(0.2, 2.0, 2.0));
}

TEST(DigonOffsets, Examples) {
    DigonOffsets e = digon_offsets(0.7, 1.1, kPi - 1.8);
    EXPECT_NEAR(e.alpha0, 0.7, 1e-15);
    EXPECT_NEAR(e.beta0, 1.1, 1e-15);
    DigonOffsets r = digon_offsets(kPi / 2, kPi / 2, kPi / 2);
    EXPECT_NEAR(r.alpha0, kPi / 4, 1e-15);
    EXPECT_NEAR(r.gamma0, kPi / 4, 1e-15);
    DigonOffsets h = digon_offsets(kPi / 4, 3 * kPi / 4, 3 * kPi / 4);
    EXPECT_NEAR(h.alpha0, -kPi / 8, 1e-15);
    EXPECT_NEAR(h.beta0, 3 * kPi / 8, 1e-15);
    EXPECT_NEAR(h.gamma0, 3 * kPi / 8, 1e-15);
    EXPECT_THROW(digon_offsets(0, 0, kPi), GeometryError);
}

TEST(DigonOffsets, SolveTheLinearSystem) {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        TriangleSpec t = random_spec(rng);
        DigonOffsets d = digon_offsets(t.alpha, t.beta, t.gamma);
        EXPECT_NEAR(t.alpha + d.beta0 + d.gamma0, kPi, 1e-12);
        EXPECT_NEAR(d.alpha0 + t.beta + d.gamma0, kPi, 1e-12);
        EXPECT_NEAR(d.alpha0 + d.beta0 + t.gamma, kPi, 1e-12);
    }
}

TEST(Synthesize, EquilateralChords) {
    TriangleSides t = synthesize(unit_circle_spec(kPi / 3, kPi / 3, kPi / 3));
    for (const OrientedCycle* side : {&t.a, &t.b, &t.c}) EXPECT_TRUE(side->is_line(1e-12));
    EXPECT_TRUE(on_cycle(t.a.vec(), t.B, 1e-12));
    EXPECT_TRUE(on_cycle(t.a.vec(), t.C, 1e-12));
    EXPECT_TRUE(on_cycle(t.c.vec(), t.A, 1e-12));
    EXPECT_NEAR(std::abs(t.s.signed_radius()), 1.0, 1e-12);
    // Triangle on the left of every side: the center of the circumcircle is inside.
    for (const OrientedCycle* side : {&t.a, &t.b, &t.c}) EXPECT_TRUE(side->left_of(Point::finite(0.0)));
    expect_angles(measure_angles(t), kPi / 3, kPi / 3, kPi / 3, 1e-12);
    EXPECT_EQ(classify_model(t), TriangleModel::Euclidean);
}

TEST(Synthesize, Octant) {
    TriangleSides t = synthesize(unit_circle_spec(kPi / 2, kPi / 2, kPi / 2));
    expect_angles(measure_angles(t), kPi / 2, kPi / 2, kPi / 2, 1e-12);
    // Each side meets the circumcircle in a digon of inner angle pi/4.
    for (const OrientedCycle* side : {&t.a, &t.b, &t.c}) EXPECT_NEAR(std::abs(inner(*side, t.s)), std::cos(kPi / 4), 1e-12);
    // Sides pairwise orthogonal.
    EXPECT_NEAR(inner(t.a, t.b), 0.0, 1e-12);
    EXPECT_NEAR(inner(t.b, t.c), 0.0, 1e-12);
    EXPECT_NEAR(inner(t.a, t.c), 0.0, 1e-12);
    EXPECT_EQ(classify_model(t), TriangleModel::Spherical);
}

TEST(Synthesize, IsoscelesIncenterFigure) {
    TriangleSpec spec = unit_circle_spec(kPi / 4, 3 * kPi / 4, 3 * kPi / 4);
    TriangleSides t = synthesize(spec);
    expect_angles(measure_angles(t), kPi / 4, 3 * kPi / 4, 3 * kPi / 4, 1e-12);
    // Mirror symmetric in the imaginary axis: b and c swap under reflection.
    MoebiusMap mirror(-1.0, 0.0, 0.0, 1.0, true);
    EXPECT_TRUE(same_cycle(apply_map(mirror, t.b), t.c, 1e-10));
    EXPECT_EQ(classify_model(t), TriangleModel::PureMoebius);
    EXPECT_EQ(side_split(t, 0), SideSplit::Splits);
}

TEST(Synthesize, SidePassesThroughVerticesAndAnglesRoundTrip) {
    Rng rng(42);
    for (int i = 0; i < 500; ++i) {
        TriangleSpec spec = random_spec(rng);
        TriangleSides t = synthesize(spec);
        EXPECT_TRUE(on_cycle(t.a.vec(), t.B, 1e-9) && on_cycle(t.a.vec(), t.C, 1e-9));
        EXPECT_TRUE(on_cycle(t.b.vec(), t.A, 1e-9) && on_cycle(t.b.vec(), t.C, 1e-9));
        EXPECT_TRUE(on_cycle(t.c.vec(), t.A, 1e-9) && on_cycle(t.c.vec(), t.B, 1e-9));
        expect_angles(measure_angles(t), spec.alpha, spec.beta, spec.gamma, 1e-7);
    }
}

TEST(Synthesize, ComplementHasSupplementaryAngles) {
    Rng rng(43);
    for (int i = 0; i < 100; ++i) {
        TriangleSpec spec = random_spec(rng);
        TriangleSides t = synthesize(spec);
        Orientation flipped = spec.orientation == Orientation::ABC ? Orientation::ACB : Orientation::ABC;
        TriangleSides comp{t.a.reversed(), t.b.reversed(), t.c.reversed(), t.s.reversed(), t.A, t.B, t.C, flipped, false};
        expect_angles(measure_angles(comp), 2 * kPi - spec.alpha, 2 * kPi - spec.beta, 2 * kPi - spec.gamma, 1e-7);
    }
}

TEST(Synthesize, OppositeOrientationIsTheInversionInTheCircumcircle) {
    Rng rng(44);
    for (int i = 0; i < 200; ++i) {
        TriangleSpec spec = random_spec(rng);
        spec.orientation = Orientation::ABC;
        TriangleSides t1 = synthesize(spec);
        spec.orientation = Orientation::ACB;
        TriangleSides t2 = synthesize(spec);
        MoebiusMap sigma = inversion_map(t1.s);
        EXPECT_LE(dist(apply_map(sigma, t1.a).vec(), t2.a.vec()), 1e-8);
        EXPECT_LE(dist(apply_map(sigma, t1.b).vec(), t2.b.vec()), 1e-8);
        EXPECT_LE(dist(apply_map(sigma, t1.c).vec(), t2.c.vec()), 1e-8);
    }
}

TEST(Synthesize, CongruenceUnderMaps) {
    Rng rng(45);
    for (int i = 0; i < 200; ++i) {
        TriangleSpec spec = random_spec(rng);
        TriangleSides t = synthesize(spec);
        MoebiusMap g = rng.map(true);
        TriangleSpec moved = spec;
        moved.A = g(spec.A);
        moved.B = g(spec.B);
        moved.C = g(spec.C);
        // Orientation-reversing maps flip the boundary walk.
        if (g.anti()) moved.orientation = spec.orientation == Orientation::ABC ? Orientation::ACB : Orientation::ABC;
        TriangleSides u = synthesize(moved);
        double scale = 1e-8;
        auto close = [&](const OrientedCycle& x, const OrientedCycle& y) {
            return dist(x.vec(), y.vec()) <= scale * std::max(1.0, y.vec().norm());
        };
        EXPECT_TRUE(close(apply_map(g, t.a), u.a));
        EXPECT_TRUE(close(apply_map(g, t.b), u.b));
        EXPECT_TRUE(close(apply_map(g, t.c), u.c));
    }
}

TEST(Synthesize, Errors) {
    TriangleSpec t = unit_circle_spec(0, 0, kPi);
    EXPECT_THROW(synthesize(t), GeometryError);
    t = unit_circle_spec(1, 1, 1);
    t.B = t.A;
    try {
        synthesize(t);
        FAIL();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), ErrorCode::CoincidentVertices);
    }
}

TEST(Synthesize, DegenerateDigonIsFlagged) {
    TriangleSides t = synthesize(unit_circle_spec(kPi, 1.0, 1.0));
    EXPECT_TRUE(t.degenerate);
    EXPECT_TRUE(collinear3(t.a, t.b, t.c).collinear);
    expect_angles(measure_angles(t), kPi, 1.0, 1.0, 1e-9);
    EXPECT_FALSE(synthesize(unit_circle_spec(kPi, 1.0, 1.3)).degenerate);
    EXPECT_TRUE(synthesize(unit_circle_spec(kPi, kPi, kPi)).degenerate);
}

TEST(ClassifyModel, Examples) {
    EXPECT_EQ(classify_model(Angles{kPi / 7, kPi / 7, kPi / 7}), TriangleModel::Hyperbolic);
    EXPECT_EQ(classify_model(Angles{0.5, 1.0, kPi - 1.5}), TriangleModel::Euclidean);
    EXPECT_EQ(classify_model(Angles{kPi / 2, kPi / 2, kPi / 2}), TriangleModel::Spherical);
    EXPECT_EQ(classify_model(Angles{0.2, 2.0, 2.0}), TriangleModel::PureMoebius);
    EXPECT_THROW(classify_model(Angles{kPi, 0.1, 0.1}), GeometryError);
}

TEST(ClassifyModel, ScanFindsPureMoebiusTriangles) {
    int found = 0;
    const int steps = 24;
    for (int i = 1; i < steps; ++i)
        for (int j = 1; j < steps; ++j)
            for (int k = 1; k < steps; ++k) {
                Angles g{kPi * i / steps, kPi * j / steps, kPi * k / steps};
                if (!check_angles(g.alpha, g.beta, g.gamma)) continue;
                if (classify_model(g) != TriangleModel::PureMoebius) continue;
                ++found;
                TriangleSides t = synthesize(unit_circle_spec(g.alpha, g.beta, g.gamma));
                bool any_split = false;
                for (int s = 0; s < 3; ++s) any_split = any_split || side_split_geometric(t, s) != SideSplit::NoSplit;
                EXPECT_TRUE(any_split);
            }
    EXPECT_GT(found, 0);
}

TEST(SideSplit, Examples) {
    TriangleSides e = synthesize(unit_circle_spec(0.5, 1.0, kPi - 1.5));
    for (int s = 0; s < 3; ++s) EXPECT_EQ(side_split(e, s), SideSplit::NoSplit);

    // alpha = beta + gamma - pi: side a lies on the circumcircle.
    TriangleSides on = synthesize(unit_circle_spec(kPi / 6, 2 * kPi / 3, kPi / 2));
    EXPECT_EQ(side_split(on, 0), SideSplit::OnCircumcircle);
    EXPECT_EQ(side_split_geometric(on, 0), SideSplit::OnCircumcircle);
    EXPECT_TRUE(same_cycle(on.a, on.s, 1e-9));

    TriangleSides w = synthesize(unit_circle_spec(0.2, 2.0, 2.0));
    EXPECT_EQ(side_split(w, 0), SideSplit::Splits);
    EXPECT_EQ(side_split_geometric(w, 0), SideSplit::Splits);
}

TEST(SideSplit, AgreesWithVertexTest) {
    Rng rng(46);
    for (int i = 0; i < 500; ++i) {
        TriangleSpec spec = random_proper_spec(rng);
        TriangleSides t = synthesize(spec);
        for (int s = 0; s < 3; ++s) EXPECT_EQ(side_split(t, s), side_split_geometric(t, s));
    }
}
