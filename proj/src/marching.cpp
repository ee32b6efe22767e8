#include "flatfront/marching.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace flatfront {

namespace {

struct Segment {
    std::array<double, 2> a;
    std::array<double, 2> b;
};

// Interpolated crossing on the edge between nodes with values va, vb.
double crossing(double va, double vb)
{
    double d = va - vb;
    if (d == 0.0) return 0.5;
    double t = va / d;
    if (t < 0.0) t = 0.0;
    if (t > 1.0) t = 1.0;
    return t;
}

long long quantize(double v) { return static_cast<long long>(std::llround(v * 1e7)); }

}  // namespace

std::vector<IndexPolyline> marching_squares(const GridField& field, double level)
{
    // Push node values off the level itself so no crossing lands exactly on
    // a grid node (which would create four-way junction points and break the
    // chaining). The shift is global, hence consistent across cells.
    double vmax = 0.0;
    for (double v : field.values)
        if (std::isfinite(v)) vmax = std::max(vmax, std::fabs(v - level));
    const double nudge = vmax > 0.0 ? 1e-6 * vmax : 1.0;
    std::vector<double> shifted(field.values.size());
    for (std::size_t n = 0; n < field.values.size(); ++n) {
        double v = field.values[n] - level;
        if (std::isfinite(v) && std::fabs(v) < nudge) v = v >= 0.0 ? nudge : -nudge;
        shifted[n] = v;
    }
    auto at = [&](int i, int j) { return shifted[static_cast<std::size_t>(j) * field.nx + i]; };

    std::vector<Segment> segments;
    for (int j = 0; j + 1 < field.ny; ++j) {
        for (int i = 0; i + 1 < field.nx; ++i) {
            double v00 = at(i, j);      // bottom-left
            double v10 = at(i + 1, j);  // bottom-right
            double v01 = at(i, j + 1);  // top-left
            double v11 = at(i + 1, j + 1);
            if (!std::isfinite(v00) || !std::isfinite(v10) || !std::isfinite(v01) ||
                !std::isfinite(v11))
                continue;
            int config = (v00 >= 0 ? 1 : 0) | (v10 >= 0 ? 2 : 0) | (v01 >= 0 ? 4 : 0) |
                         (v11 >= 0 ? 8 : 0);
            if (config == 0 || config == 15) continue;

            // Edge crossing points in index coordinates.
            std::array<double, 2> bottom = {i + crossing(v00, v10), double(j)};
            std::array<double, 2> top = {i + crossing(v01, v11), double(j + 1)};
            std::array<double, 2> left = {double(i), j + crossing(v00, v01)};
            std::array<double, 2> right = {double(i + 1), j + crossing(v10, v11)};

            auto emit = [&](std::array<double, 2> a, std::array<double, 2> b) {
                segments.push_back({a, b});
            };
            switch (config) {
                case 1: case 14: emit(bottom, left); break;
                case 2: case 13: emit(bottom, right); break;
                case 3: case 12: emit(left, right); break;
                case 4: case 11: emit(left, top); break;
                case 5: case 10: emit(bottom, top); break;
                case 8: case 7: emit(top, right); break;
                case 9: case 6: {
                    // Saddle (diagonally opposite corners agree): the
                    // cell-center average picks which corners connect.
                    double center = 0.25 * (v00 + v10 + v01 + v11);
                    bool pos_pair_connected = (center >= 0) == (config == 9);
                    if (pos_pair_connected) {
                        emit(bottom, right);
                        emit(left, top);
                    } else {
                        emit(bottom, left);
                        emit(top, right);
                    }
                    break;
                }
                default: break;
            }
        }
    }

    // Chain segments into polylines by shared endpoints.
    using Key = std::pair<long long, long long>;
    auto key = [](const std::array<double, 2>& p) { return Key{quantize(p[0]), quantize(p[1])}; };
    std::multimap<Key, std::size_t> by_end;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        by_end.insert({key(segments[s].a), s});
        by_end.insert({key(segments[s].b), s});
    }
    std::vector<bool> used(segments.size(), false);
    std::vector<IndexPolyline> out;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        if (used[s]) continue;
        used[s] = true;
        IndexPolyline line{segments[s].a, segments[s].b};
        // Extend forward then backward.
        for (int dir = 0; dir < 2; ++dir) {
            while (true) {
                const std::array<double, 2>& tip = dir == 0 ? line.back() : line.front();
                Key k = key(tip);
                std::size_t next = segments.size();
                for (auto [it, end] = by_end.equal_range(k); it != end; ++it) {
                    if (!used[it->second]) {
                        next = it->second;
                        break;
                    }
                }
                if (next == segments.size()) break;
                used[next] = true;
                const Segment& seg = segments[next];
                std::array<double, 2> other = key(seg.a) == k ? seg.b : seg.a;
                if (dir == 0)
                    line.push_back(other);
                else
                    line.insert(line.begin(), other);
            }
        }
        out.push_back(std::move(line));
    }
    return out;
}

}  // namespace flatfront
