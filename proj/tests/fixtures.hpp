#pragma once
// Engineered arcs that drive each unfolding case. Contacts were constructed
// from explicit 30-degree support wedges; every fixture is longer than 1 and
// carries witnesses beyond distance 1 of the far wedge apex.

#include <cmath>

#include "sectorcover/geometry.hpp"

namespace fixtures {

using sectorcover::deg_to_rad;
using sectorcover::Point;
using sectorcover::PolygonalArc;
using sectorcover::Vec2;

inline Vec2 dir(double deg) {
    return {std::cos(deg_to_rad(deg)), std::sin(deg_to_rad(deg))};
}

/// Case 1: both wedges share the x-axis support line. Contacts A, D on the
/// axis; middles B (30-degree ray from U = origin) and C (150-degree ray
/// from V = (2.2, 0)).
inline PolygonalArc case1_arc() {
    const Point a{0.4, 0.0};
    const Point b = dir(30) * 0.9;
    const Point c = Point{2.2, 0.0} + dir(150) * 0.9;
    const Point d{1.8, 0.0};
    return PolygonalArc::from_vertices({a, b, c, d});
}

/// Case 2 (pattern ABD/CEF): point-symmetric about (1.5, 0.2); wedge 1 rays
/// at 0 and 30 degrees from U = origin, wedge 2 rotated 180 degrees at
/// V = (3, 0.4).
inline PolygonalArc case2_arc() {
    const Point a{0.2, 0.0};
    const Point b = dir(30) * 0.6;
    const Point d{2.0, 0.0};
    const Point f{2.8, 0.4};
    const Point e = Point{3.0, 0.4} + dir(210) * 0.6;
    const Point c{1.0, 0.4};
    return PolygonalArc::from_vertices({a, b, c, d, e, f});
}

/// Case 3 (pattern ABC/DEF, doubled rays on the same side of UV): mirror
/// symmetric about x = 1.5; wedge 1 rays at -10 and +20 degrees from the
/// origin, wedge 2 mirrored at V = (3, 0).
inline PolygonalArc case3_arc() {
    const Point a = dir(-10) * 0.5;
    const Point b = dir(20) * 1.0;
    const Point c = dir(-10) * 1.45;
    const Point v{3.0, 0.0};
    const Point d = v + dir(190) * 1.45;
    const Point e = v + dir(160) * 1.0;
    const Point f = v + dir(190) * 0.5;
    return PolygonalArc::from_vertices({a, b, c, d, e, f});
}

/// Case 4 (pattern ABC/DEF, doubled rays on opposite sides of UV):
/// point-symmetric about (1.5, 0); wedge 1 rays at -10 and +20 degrees.
inline PolygonalArc case4_arc() {
    const Point a = dir(-10) * 0.5;
    const Point b = dir(20) * 1.0;
    const Point c = dir(-10) * 1.7;
    const Point v{3.0, 0.0};
    const Point d = v + dir(170) * 1.7;
    const Point e = v + dir(200) * 1.0;
    const Point f = v + dir(170) * 0.5;
    return PolygonalArc::from_vertices({a, b, c, d, e, f});
}

}  // namespace fixtures
