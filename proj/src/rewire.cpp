#include "rrtrw/rewire.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

namespace rrtrw {

Path rewire_step(Path p, std::size_t t) {
    if (t + 2 >= p.waypoints.size()) {
        throw std::out_of_range("rewire_step: focus index " + std::to_string(t) +
                                " has no waypoint pair (t+1, t+2) in a path of " +
                                std::to_string(p.waypoints.size()) + " waypoints");
    }
    p.waypoints.erase(p.waypoints.begin() + static_cast<std::ptrdiff_t>(t) + 1);
    return p;
}

std::pair<Path, RewireReport> post_triangular_rewire(const Path& p, const WorldMap& map) {
    const auto t_start = std::chrono::steady_clock::now();

    if (p.waypoints.size() < 2) {
        throw std::invalid_argument("post_triangular_rewire: path needs at least 2 waypoints");
    }
    for (std::size_t i = 1; i < p.waypoints.size(); ++i) {
        if (is_trapped(p.waypoints[i - 1], p.waypoints[i], map)) {
            throw std::invalid_argument("post_triangular_rewire: input edge " +
                                        std::to_string(i - 1) + " is not collision-free");
        }
    }

    RewireReport report;
    report.input_length_px = path_length(p);

    Path current = p;
    bool modified = true;
    while (modified) {
        modified = false;
        ++report.passes;
        std::size_t t = 0;
        while (t + 2 < current.waypoints.size()) {
            if (!is_trapped(current.waypoints[t], current.waypoints[t + 2], map)) {
                current = rewire_step(std::move(current), t);
                ++report.waypoints_removed;
                modified = true;
            } else {
                ++t;
            }
        }
    }

    report.output_length_px = path_length(current);
    const auto t_end = std::chrono::steady_clock::now();
    report.rewire_time_ms = std::chrono::duration<double, std::milli>(t_end - t_start).count();
    return {std::move(current), report};
}

}  // namespace rrtrw
