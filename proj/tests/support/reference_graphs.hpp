#pragma once

// Test-only reference constructions, independent of the realization path.

#include <array>
#include <cmath>
#include <vector>

#include "conefold/realize.hpp"

namespace testsupport {

/// Dodecahedral graph (C20) with a rotation system, built from the golden
/// ratio vertex coordinates of the regular dodecahedron: edges are nearest
/// vertex pairs, neighbor order is counterclockwise seen from outside.
inline conefold::FullereneGraph reference_dodecahedron() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double inv = 1.0 / phi;
    std::vector<std::array<double, 3>> v;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) v.push_back({double(sx), double(sy), double(sz)});
    for (int sy : {-1, 1})
        for (int sz : {-1, 1}) v.push_back({0.0, sy * inv, sz * phi});
    for (int sx : {-1, 1})
        for (int sy : {-1, 1}) v.push_back({sx * inv, sy * phi, 0.0});
    for (int sx : {-1, 1})
        for (int sz : {-1, 1}) v.push_back({sx * phi, 0.0, sz * inv});

    auto d2 = [&](int i, int j) {
        double s = 0;
        for (int k = 0; k < 3; ++k) {
            double d = v[size_t(i)][size_t(k)] - v[size_t(j)][size_t(k)];
            s += d * d;
        }
        return s;
    };
    // edge length^2 = (2/phi)^2 ~ 1.528; next distance^2 = 4/phi^2... > 2.5
    conefold::FullereneGraph g;
    g.rotation.resize(20);
    for (int i = 0; i < 20; ++i) {
        std::vector<int> nbr;
        for (int j = 0; j < 20; ++j)
            if (i != j && d2(i, j) < 2.0) nbr.push_back(j);
        // order counterclockwise around the outward normal v[i]
        auto& p = v[size_t(i)];
        double nn = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        std::array<double, 3> n{p[0] / nn, p[1] / nn, p[2] / nn};
        std::array<double, 3> ref{v[size_t(nbr[0])][0] - p[0], v[size_t(nbr[0])][1] - p[1],
                                  v[size_t(nbr[0])][2] - p[2]};
        double rn = ref[0] * n[0] + ref[1] * n[1] + ref[2] * n[2];
        for (int k = 0; k < 3; ++k) ref[size_t(k)] -= rn * n[size_t(k)];
        std::array<double, 3> e2{n[1] * ref[2] - n[2] * ref[1], n[2] * ref[0] - n[0] * ref[2],
                                 n[0] * ref[1] - n[1] * ref[0]};
        auto angle = [&](int j) {
            std::array<double, 3> w{v[size_t(j)][0] - p[0], v[size_t(j)][1] - p[1],
                                    v[size_t(j)][2] - p[2]};
            double wn = w[0] * n[0] + w[1] * n[1] + w[2] * n[2];
            for (int k = 0; k < 3; ++k) w[size_t(k)] -= wn * n[size_t(k)];
            double x = w[0] * ref[0] + w[1] * ref[1] + w[2] * ref[2];
            double y = w[0] * e2[0] + w[1] * e2[1] + w[2] * e2[2];
            return std::atan2(y, x);
        };
        std::sort(nbr.begin(), nbr.end(), [&](int a, int b) { return angle(a) < angle(b); });
        for (int k = 0; k < 3; ++k) g.rotation[size_t(i)][size_t(k)] = nbr[size_t(k)];
    }
    return g;
}

}  // namespace testsupport
