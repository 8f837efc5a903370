#include "rrtrw/path.hpp"

namespace rrtrw {

double path_length(const Path& p) {
    double total = 0.0;
    for (std::size_t i = 1; i < p.waypoints.size(); ++i) {
        total += distance(p.waypoints[i - 1], p.waypoints[i]);
    }
    return total;
}

}  // namespace rrtrw
