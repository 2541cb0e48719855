#ifndef NFCORR_GEOMETRY_HPP
#define NFCORR_GEOMETRY_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

// Geometry of the imaging setup: a double-aperture mask in the z=0 plane,
// point emitters just behind it and detectors far in front of it.
// All lengths are in units of the wavelength (lambda = 1).

namespace nfcorr {

inline constexpr double kWavelength = 1.0;
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Wavenumber k = 2*pi/lambda.
inline constexpr double wavenumber() { return kTwoPi / kWavelength; }

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct SetupConfig {
    double aperture_radius = 0.5;   // a
    double aperture_gap = 0.25;     // d, edge-to-edge gap between the circles
    double source_standoff = 0.1;   // epsilon, source plane at z = -epsilon
    double detector_z = 500.0;      // r_z, detector plane at z = +r_z

    // Total x-extent of the mask, the scale entering every placement formula.
    double mask_extent() const { return 4.0 * aperture_radius + aperture_gap; }

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// Emitters all sit at y = 0 on the plane z = -standoff.
struct EmitterArray {
    std::vector<Vec3> positions;
    double standoff = 0.0;

    std::size_t size() const { return positions.size(); }
};

// Detectors all sit on the plane z = detector_z. scan_x/scan_y record the
// free scan parameters the slaved coordinates were derived from.
struct DetectorSet {
    std::vector<Vec3> positions;
    double scan_x = 0.0;
    double scan_y = 0.0;

    std::size_t size() const { return positions.size(); }
};

// Centers of the two circular apertures, (-(a+d/2), 0) and (+(a+d/2), 0).
std::array<Vec2, 2> aperture_centers(const SetupConfig& config);

// True iff the point lies strictly inside either circle (rim excluded).
bool in_aperture(const Vec2& point, const SetupConfig& config);

// Characteristic placement scale delta = lambda*standoff / (2*(4a+d)).
// The optional steepness factor p rescales by 1/sqrt(p^2-1); the default
// leaves the prefactor at 1 (p = sqrt(2)).
double delta_scale(double standoff, const SetupConfig& config,
                   std::optional<double> steepness = std::nullopt);

// Preset emitter placements. N=1 -> {0}; N=2 -> {0, delta};
// N=4 -> {-delta, 0, delta/2, delta}. Other N are an error.
EmitterArray emitter_positions(int n, const SetupConfig& config, double standoff);

// Preset detector placements with Delta = delta_scale(r_z).
// N=1 -> {x}; N=2 -> {x, -x}; N=4 -> {x, -x, -x+Delta, x+Delta/2};
// all at y = scan_y, z = r_z. Other N are an error.
DetectorSet detector_positions(int n, double scan_x, double scan_y,
                               const SetupConfig& config);

}  // namespace nfcorr

#endif
