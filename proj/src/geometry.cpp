#include "nfcorr/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nfcorr {

void SetupConfig::validate() const {
    if (!(aperture_radius > 0.0))
        throw std::invalid_argument("geometry.aperture_radius must be > 0");
    if (!(aperture_gap >= 0.0))
        throw std::invalid_argument("geometry.aperture_gap must be >= 0");
    if (!(source_standoff > 0.0))
        throw std::invalid_argument("geometry.epsilon must be > 0");
    if (!(detector_z > 0.0))
        throw std::invalid_argument("geometry.detector_z must be > 0");
    // Far-zone detector assumption: r_z >= 100*(4a+d).
    if (detector_z < 100.0 * mask_extent())
        throw std::invalid_argument(
            "geometry.detector_z violates the far-zone assumption; need r_z >= " +
            std::to_string(100.0 * mask_extent()));
}

std::array<Vec2, 2> aperture_centers(const SetupConfig& config) {
    const double cx = config.aperture_radius + 0.5 * config.aperture_gap;
    return {Vec2{-cx, 0.0}, Vec2{+cx, 0.0}};
}

bool in_aperture(const Vec2& point, const SetupConfig& config) {
    const double r2 = config.aperture_radius * config.aperture_radius;
    for (const Vec2& c : aperture_centers(config)) {
        const double dx = point.x - c.x;
        const double dy = point.y - c.y;
        if (dx * dx + dy * dy < r2) return true;
    }
    return false;
}

double delta_scale(double standoff, const SetupConfig& config,
                   std::optional<double> steepness) {
    if (!(standoff > 0.0))
        throw std::invalid_argument("delta_scale: standoff must be > 0");
    double delta = kWavelength * standoff / (2.0 * config.mask_extent());
    if (steepness) {
        const double p = *steepness;
        if (!(p > 1.0))
            throw std::invalid_argument("delta_scale: steepness factor p must be > 1");
        delta /= std::sqrt(p * p - 1.0);
    }
    return delta;
}

EmitterArray emitter_positions(int n, const SetupConfig& config, double standoff) {
    if (!(standoff > 0.0))
        throw std::invalid_argument("emitter_positions: standoff must be > 0");
    const double delta = delta_scale(standoff, config);
    std::vector<double> xs;
    switch (n) {
        case 1: xs = {0.0}; break;
        case 2: xs = {0.0, delta}; break;
        case 4: xs = {-delta, 0.0, 0.5 * delta, delta}; break;
        default:
            throw std::invalid_argument("emitter placement undefined for N=" +
                                        std::to_string(n) + "; supported N: 1, 2, 4");
    }
    EmitterArray out;
    out.standoff = standoff;
    out.positions.reserve(xs.size());
    for (double x : xs) out.positions.push_back({x, 0.0, -standoff});
    return out;
}

DetectorSet detector_positions(int n, double scan_x, double scan_y,
                               const SetupConfig& config) {
    const double big_delta = delta_scale(config.detector_z, config);
    std::vector<double> xs;
    switch (n) {
        case 1: xs = {scan_x}; break;
        case 2: xs = {scan_x, -scan_x}; break;
        case 4:
            xs = {scan_x, -scan_x, -scan_x + big_delta, scan_x + 0.5 * big_delta};
            break;
        default:
            throw std::invalid_argument("detector placement undefined for N=" +
                                        std::to_string(n) + "; supported N: 1, 2, 4");
    }
    DetectorSet out;
    out.scan_x = scan_x;
    out.scan_y = scan_y;
    out.positions.reserve(xs.size());
    for (double x : xs) out.positions.push_back({x, scan_y, config.detector_z});
    return out;
}

}  // namespace nfcorr
