#include <doctest.h>

#include <cmath>

#include "sectorcover/support_lines.hpp"
#include "test_util.hpp"

using namespace sectorcover;

namespace {

// Hull angle of an arc end computed from the two adjacent hull edges only.
double end_angle_oracle(const PolygonalArc& a, int end) {
    const auto hull = convex_hull(a.vertices());
    const auto idx = hull_corner_indices(a);
    if (hull.size() <= 2) return 0.0;
    const Point c = a.vertex(end == 0 ? idx.front() : idx.back());
    std::size_t k = 0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        if (hull[i].x == c.x && hull[i].y == c.y) k = i;
    const Point& prev = hull[(k + hull.size() - 1) % hull.size()];
    const Point& next = hull[(k + 1) % hull.size()];
    return angle_between(prev - c, next - c);
}

}  // namespace

TEST_CASE("hull_angle_at: equilateral triangle and segment") {
    const double h = std::sqrt(3.0) / 2.0;
    const auto tri = PolygonalArc::from_vertices({{0, 0}, {1, 0}, {0.5, h}});
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(hull_angle_at(tri, k) == doctest::Approx(kPi / 3).epsilon(1e-12));

    const auto seg = PolygonalArc::from_vertices({{0, 0}, {1, 0}});
    CHECK(hull_angle_at(seg, 0) == 0.0);
    CHECK(hull_angle_at(seg, 1) == 0.0);
    CHECK_THROWS_AS(hull_angle_at(seg, 5), std::invalid_argument);
}

TEST_CASE("hull_angle_at matches the adjacent-edge oracle on random arcs") {
    auto g = testutil::rng(101);
    for (int rep = 0; rep < 100; ++rep) {
        const auto arc = testutil::random_simple_arc(g, 9);
        const auto idx = hull_corner_indices(arc);
        CHECK(std::fabs(hull_angle_at(arc, 0) - end_angle_oracle(arc, 0)) <= 1e-10);
        CHECK(std::fabs(hull_angle_at(arc, idx.size() - 1) - end_angle_oracle(arc, 1)) <= 1e-10);
    }
}

TEST_CASE("find_certificates: segment arc gets vertex-at-apex at both ends") {
    const auto seg = PolygonalArc::from_vertices({{0.2, 0.1}, {0.9, 0.5}});
    for (double deg : {10.0, 30.0, 89.0}) {
        const auto pair = find_certificates(seg, deg_to_rad(deg));
        CHECK(pair.first.is_apex_kind());
        CHECK(pair.second.is_apex_kind());
        CHECK(verify_certificate(seg, pair.first, deg_to_rad(deg)).ok);
        CHECK(verify_certificate(seg, pair.second, deg_to_rad(deg)).ok);
    }
}

TEST_CASE("find_certificates: V-shaped arc with a narrow end gets an apex touch") {
    // Hull angle at (0,0) is atan2(0.25, 0.5) ~ 26.6 degrees <= 30.
    const auto v = PolygonalArc::from_vertices({{0, 0}, {1, 0}, {0.5, 0.25}});
    const auto pair = find_certificates(v, deg_to_rad(30));
    CHECK(pair.first.is_apex_kind());
    CHECK(verify_certificate(v, pair.first, deg_to_rad(30)).ok);
    CHECK(verify_certificate(v, pair.second, deg_to_rad(30)).ok);
}

TEST_CASE("find_certificates rejects non-simple arcs and bad theta") {
    const auto bad = PolygonalArc::from_vertices({{0, 0}, {1, 1}, {1, 0}, {0, 1}});
    CHECK_THROWS_AS(find_certificates(bad, deg_to_rad(30)), std::invalid_argument);
    const auto seg = PolygonalArc::from_vertices({{0, 0}, {1, 0}});
    CHECK_THROWS_AS(find_certificates(seg, kPi), std::invalid_argument);
    CHECK_THROWS_AS(find_certificates(seg, -0.1), std::invalid_argument);
}

TEST_CASE("theta = 0: unique parallel support pair with 3 alternating contacts") {
    // Zigzag whose hull angles are wide at both ends.
    const auto z = PolygonalArc::from_vertices({{0, 0}, {0.4, 0.5}, {0.8, -0.1}, {1.3, 0.45}});
    const auto certs = enumerate_certificates(z, 0.0);
    REQUIRE(certs.size() == 1);
    CHECK(verify_certificate(z, certs.front(), 0.0).ok);
    const auto pair = find_certificates(z, 0.0);
    CHECK(!pair.first.is_apex_kind());
}

TEST_CASE("find_certificates output verifies on random simple arcs") {
    auto g = testutil::rng(202);
    for (int rep = 0; rep < 300; ++rep) {
        const auto arc = testutil::unit_arc(g, 3 + static_cast<int>(rep % 10));
        for (double deg : {10.0, 30.0, 60.0, 89.0}) {
            const double theta = deg_to_rad(deg);
            CertificatePair pair;
            REQUIRE_NOTHROW(pair = find_certificates(arc, theta));
            const auto r1 = verify_certificate(arc, pair.first, theta);
            const auto r2 = verify_certificate(arc, pair.second, theta);
            INFO("rep ", rep, " deg ", deg, " first: ", r1.reason, " second: ", r2.reason);
            CHECK(r1.ok);
            CHECK(r2.ok);
            if (!pair.first.is_apex_kind() && !pair.second.is_apex_kind())
                CHECK(interlace(pair) == Interlace::yes);
        }
    }
}

TEST_CASE("exhaustive sweep finds at most two 3-contact certificates (n <= 20)") {
    auto g = testutil::rng(203);
    for (int rep = 0; rep < 200; ++rep) {
        const auto arc = testutil::unit_arc(g, 4 + static_cast<int>(rep % 17));
        for (double deg : {20.0, 30.0, 75.0}) {
            const auto certs = enumerate_certificates(arc, deg_to_rad(deg));
            INFO("rep ", rep, " deg ", deg, " found ", certs.size());
            CHECK(certs.size() <= 2);
        }
    }
}

TEST_CASE("verify_certificate falsification: perturbed contact and angle") {
    auto g = testutil::rng(204);
    PolygonalArc arc = testutil::unit_arc(g, 8);
    // Find an arc with two 3-contact certificates.
    for (int tries = 0; tries < 50; ++tries) {
        const auto pair = find_certificates(arc, deg_to_rad(30));
        if (!pair.first.is_apex_kind()) {
            WedgeCertificate moved = pair.first;
            moved.contacts[1].point = moved.contacts[1].point + Vec2{1e-3, 1e-3};
            const auto r = verify_certificate(arc, moved, deg_to_rad(30));
            CHECK(!r.ok);
            CHECK(r.reason == "contact off ray");

            const auto r2 = verify_certificate(arc, pair.first, deg_to_rad(30) + 1e-3);
            CHECK(!r2.ok);
            CHECK(r2.reason == "angle mismatch");
            return;
        }
        arc = testutil::unit_arc(g, 8);
    }
    FAIL("no 3-contact arc found");
}

TEST_CASE("interlace: apex-touch pairs are not applicable; identical pairs are false") {
    const auto seg = PolygonalArc::from_vertices({{0, 0}, {1, 0}});
    const auto pair = find_certificates(seg, deg_to_rad(30));
    CHECK(interlace(pair) == Interlace::not_applicable);

    auto g = testutil::rng(205);
    for (int tries = 0; tries < 50; ++tries) {
        const auto arc = testutil::unit_arc(g, 8);
        const auto p = find_certificates(arc, deg_to_rad(30));
        if (!p.first.is_apex_kind() && !p.second.is_apex_kind()) {
            CertificatePair same{p.first, p.first, p.first.apex(), p.first.apex()};
            CHECK(interlace(same) == Interlace::no);
            return;
        }
    }
    FAIL("no 3-contact arc found");
}

TEST_CASE("interlace: non-interlacing synthetic ordering is false") {
    // Build two fake certificates whose contacts are disjoint in parameter
    // but whose ownership pattern (121212) matches no admissible case.
    WedgeCertificate a, b;
    a.ray_u = Ray::from_dir({0, 0}, {1, 0});
    a.ray_v = Ray::from_dir({0, 0}, Vec2{1, 0}.rotated(deg_to_rad(30)));
    a.theta = deg_to_rad(30);
    b.ray_u = Ray::from_dir({2, 0}, {-1, 0});
    b.ray_v = Ray::from_dir({2, 0}, Vec2{-1, 0}.rotated(-deg_to_rad(30)));
    b.theta = deg_to_rad(30);
    a.contacts = {WedgeContact{0.1, {0.1, 0}, 0}, WedgeContact{0.3, {0.3, 0.1}, 1},
                  WedgeContact{0.5, {0.5, 0}, 0}};
    b.contacts = {WedgeContact{0.2, {0.2, 0}, 0}, WedgeContact{0.4, {0.4, 0.1}, 1},
                  WedgeContact{0.6, {0.6, 0}, 0}};
    CertificatePair pair{a, b, a.apex(), b.apex()};
    CHECK(interlace(pair) == Interlace::no);
}

TEST_CASE("certificates are equivariant under rigid motions") {
    auto g = testutil::rng(206);
    for (int rep = 0; rep < 40; ++rep) {
        const auto arc = testutil::unit_arc(g, 9);
        const RigidMotion m = testutil::random_motion(g);
        const auto moved = arc.transformed(m);
        const auto p1 = find_certificates(arc, deg_to_rad(30));
        const auto p2 = find_certificates(moved, deg_to_rad(30));
        CHECK(p1.first.is_apex_kind() == p2.first.is_apex_kind());
        CHECK(p1.second.is_apex_kind() == p2.second.is_apex_kind());
        if (!p1.first.is_apex_kind() && !p2.first.is_apex_kind()) {
            for (int k = 0; k < 3; ++k) {
                CHECK(std::fabs(p1.first.contacts[k].param - p2.first.contacts[k].param) <= 1e-10);
                CHECK(dist(m.apply(p1.first.contacts[k].point), p2.first.contacts[k].point) <=
                      1e-9);
            }
            CHECK(dist(m.apply(p1.apex_first), p2.apex_first) <= 1e-8);
        }
    }
}

TEST_CASE("boundary case: theta equal to the hull angle at X1 admits both kinds") {
    // Arc starting at a corner whose hull angle is exactly 30 degrees:
    // legs at 0 and 30 degrees from the first vertex.
    const double t = deg_to_rad(30);
    const auto arc = PolygonalArc::from_vertices(
        {{0.0, 0.0}, {1.0, 0.0}, Point{std::cos(t), std::sin(t)} * 0.8});
    CHECK(hull_angle_at(arc, 0) == doctest::Approx(t).epsilon(1e-12));

    const auto apex = apex_touch_certificate(arc, t, 0);
    REQUIRE(apex.has_value());
    CHECK(verify_certificate(arc, *apex, t).ok);

    // A 3-contact certificate holding X1 and X2 on opposite rays also exists.
    bool has_x1_x2 = false;
    for (const auto& cert : enumerate_certificates(arc, t)) {
        if (!verify_certificate(arc, cert, t).ok) continue;
        if (std::fabs(cert.contacts[0].param - arc.param(0)) <= 1e-12 &&
            std::fabs(cert.contacts[1].param - arc.param(1)) <= 1e-12 &&
            cert.contacts[0].side != cert.contacts[1].side)
            has_x1_x2 = true;
    }
    CHECK(has_x1_x2);
}
