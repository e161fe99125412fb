#pragma once

#include <array>
#include <cstdint>

#include "fslbm/math3.hpp"

namespace fslbm::stencil {

// D3Q19: one rest direction, six axis directions, twelve edge diagonals.
// Naming: E/W along +/-x, N/S along +/-y, T/B along +/-z.
inline constexpr int Q = 19;

enum Dir : int {
    C = 0,
    W, E, N, S, T, B,
    TW, TE, TN, TS,
    NW, NE, SW, SE,
    BW, BE, BN, BS,
};

inline constexpr std::array<std::array<int, 3>, Q> c = {{
    {0, 0, 0},                                            // C
    {-1, 0, 0}, {1, 0, 0},                                // W, E
    {0, 1, 0},  {0, -1, 0},                               // N, S
    {0, 0, 1},  {0, 0, -1},                               // T, B
    {-1, 0, 1}, {1, 0, 1},  {0, 1, 1},  {0, -1, 1},       // TW, TE, TN, TS
    {-1, 1, 0}, {1, 1, 0},  {-1, -1, 0}, {1, -1, 0},      // NW, NE, SW, SE
    {-1, 0, -1}, {1, 0, -1}, {0, 1, -1}, {0, -1, -1},     // BW, BE, BN, BS
}};

inline constexpr std::array<double, Q> w = {
    1.0 / 3.0,
    1.0 / 18.0, 1.0 / 18.0, 1.0 / 18.0, 1.0 / 18.0, 1.0 / 18.0, 1.0 / 18.0,
    1.0 / 36.0, 1.0 / 36.0, 1.0 / 36.0, 1.0 / 36.0,
    1.0 / 36.0, 1.0 / 36.0, 1.0 / 36.0, 1.0 / 36.0,
    1.0 / 36.0, 1.0 / 36.0, 1.0 / 36.0, 1.0 / 36.0,
};

/// opposite[i] gives the index of -c[i].
inline constexpr std::array<int, Q> opposite = {
    C,
    E, W, S, N, B, T,
    BE, BW, BS, BN,
    SE, SW, NE, NW,
    TE, TW, TS, TN,
};

inline constexpr double cs2 = 1.0 / 3.0;      // speed of sound squared
inline constexpr double inv_cs2 = 3.0;
inline constexpr double inv_cs4 = 9.0;

inline Vec3 cv(int i) {
    return Vec3(static_cast<double>(c[i][0]), static_cast<double>(c[i][1]),
                static_cast<double>(c[i][2]));
}

} // namespace fslbm::stencil
