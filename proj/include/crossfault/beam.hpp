#pragma once

#include <vector>

#include "crossfault/crossbar.hpp"

namespace crossfault {

// =============================================================================
// Spot geometry
// =============================================================================

/// Physical layout of the array: square cells on a uniform pitch, cell (0,0)
/// centered at the origin, x along columns and y along rows.
struct GeometryConfig {
    double cell_pitch_um = 1.0;

    void validate() const;
};

/// Laser spot: position, size, total photocurrent and radial profile.
/// The gaussian profile uses sigma = diameter/4, truncated at the spot edge.
struct BeamSpec {
    enum class Profile { UniformDisk, Gaussian };

    double center_x_um = 0.0;
    double center_y_um = 0.0;
    double diameter_um = 3.0;        // within [1, 50]
    double total_photocurrent = 0.0; // amperes
    Profile profile = Profile::UniformDisk;

    void validate() const;
};

struct CellCurrent {
    CellIndex cell;
    double amps = 0.0;
};

/// Distributes the spot photocurrent over the cells whose centers lie inside
/// the spot. Weights are the profile density sampled at each cell center;
/// normalization runs over the unclipped footprint, so the on-array fractions
/// sum to 1 when the spot lies fully inside the array and to less than 1 when
/// part of it falls off the edge. A spot touching no cell center returns an
/// empty footprint.
std::vector<CellCurrent> beam_footprint(const GeometryConfig& geom, const BeamSpec& beam,
                                        int rows, int cols);

// =============================================================================
// Scan planning
// =============================================================================

/// Rectangular block of cells, inclusive of its origin cell.
struct CellRegion {
    int row0 = 0;
    int col0 = 0;
    int rows = 1;
    int cols = 1;

    bool contains(CellIndex c) const {
        return c.row >= row0 && c.row < row0 + rows && c.col >= col0 && c.col < col0 + cols;
    }
};

struct ScanPlan {
    std::vector<std::pair<double, double>> positions_um;  // raster order, (x, y)
    double effective_step_um = 0.0;
    bool has_overlap = false;
};

/// Raster positions covering the region. The requested step is tightened to
/// diameter / ceil(diameter/step) so that every region cell falls inside at
/// least ceil(diameter/step) footprints along each axis. A step of at least
/// twice the diameter cannot cover the region and raises CoverageGapError;
/// step == diameter tiles without overlap and the plan is flagged.
ScanPlan plan_scan(const GeometryConfig& geom, const BeamSpec& beam, double step_um,
                   const CellRegion& region);

}  // namespace crossfault
