#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crossfault/beam.hpp"
#include "crossfault/crossbar.hpp"
#include "crossfault/team.hpp"

namespace crossfault {

enum class SolveBackend { Ideal, Mna };

// =============================================================================
// Fault campaigns
// =============================================================================

struct CampaignSample {
    double i_inj = 0.0;                   // amperes
    std::vector<double> delta_per_column; // amperes
};

struct CampaignResult {
    CellIndex target;
    double r_true_ohm = 0.0;
    std::vector<CampaignSample> samples;
    std::string preset_label;

    /// ΔI observed on the target's own column for sample k.
    double delta_on_target(std::size_t k) const {
        return samples.at(k).delta_per_column.at(static_cast<std::size_t>(target.col));
    }
};

/// Injects each listed current into the target cell and records the
/// differential column readout. The Mna backend differences two solves of the
/// identical faulted topology (injection current on vs. zero).
CampaignResult run_campaign(const CrossbarConfig& config, const WeightGrid& weights,
                            CellIndex target, const std::vector<double>& injection_currents,
                            SolveBackend backend = SolveBackend::Ideal);

// =============================================================================
// Regression and calibration
// =============================================================================

struct RegressionFit {
    double slope = 0.0;            // ΔI per I_inj, dimensionless
    double intercept = 0.0;        // amperes
    double r_squared = 0.0;
    double reciprocal_slope = 0.0; // 1 / slope
};

/// Ordinary least squares with intercept. Throws DegenerateDesignError when
/// fewer than two points or all abscissae coincide.
RegressionFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// OLS of target-column ΔI on injected current over the campaign samples.
RegressionFit fit_injection_slope(const CampaignResult& campaign);

/// Affine slope-to-resistance model R_est = a * (1/slope) + b, in kilo-ohms.
struct CalibrationModel {
    double a_kohm = 0.0;
    double b_kohm = 0.0;
    std::vector<double> training_r_kohm;
};

/// Fits the calibration constants by OLS of the known training resistances on
/// the reciprocal regression slopes. Needs at least two distinct resistances.
CalibrationModel calibrate(const std::vector<std::pair<double, RegressionFit>>& training_kohm);

/// Exact divider algebra R = r_sh * (1/slope) - r_sh expressed as a model.
CalibrationModel divider_calibration_model(double r_sh0_ohm);

struct ResistanceEstimate {
    double r_est_ohm = 0.0;
    std::optional<double> error_pct;  // 100 * |est - true| / true

    double accuracy_pct() const { return error_pct ? 100.0 - *error_pct : 100.0; }
};

ResistanceEstimate estimate_resistance(const CalibrationModel& model, const RegressionFit& fit,
                                       std::optional<double> r_true_ohm = std::nullopt);

// =============================================================================
// Overlapping-beam extraction
// =============================================================================

/// One scan observation: the per-cell injected currents of the spot at one
/// position and the resulting differential column readout.
struct ScanMeasurement {
    std::vector<CellCurrent> footprint;
    std::vector<double> delta_per_column;  // amperes, one per array column
};

/// Runs the beam over every plan position at every listed current and records
/// the differential readouts.
std::vector<ScanMeasurement> run_scan_campaign(const CrossbarConfig& config,
                                               const WeightGrid& weights,
                                               const GeometryConfig& geom, const BeamSpec& beam,
                                               const ScanPlan& plan,
                                               const std::vector<double>& injection_currents,
                                               SolveBackend backend = SolveBackend::Ideal);

struct ExtractionResult {
    CellRegion region;
    std::vector<double> r_est_ohm;  // region-major, rows*cols entries
    int clamped_ratios = 0;

    double estimate(int row, int col) const;  // array coordinates
};

/// Recovers cell resistances from overlapping-spot measurements. Per column,
/// ΔI_m = Σ_cells I_{m,cell} * ratio_cell is solved by least squares for the
/// divider ratios, which invert through the calibration model. When every
/// footprint touches a single cell the solve reduces to per-cell
/// fit_injection_slope + estimate_resistance, result for result. Rank
/// deficiency raises IdentifiabilityError listing the unresolved cells.
ExtractionResult extract_region(const std::vector<ScanMeasurement>& measurements,
                                const CalibrationModel& model, const CellRegion& region,
                                int array_cols);

/// Root-mean-square relative estimation error against a ground-truth grid.
double extraction_rms_relative_error(const ExtractionResult& result, const WeightGrid& truth);

// =============================================================================
// Active corruption
// =============================================================================

struct CorruptionResult {
    double r_before_ohm = 0.0;
    double r_after_ohm = 0.0;
    double percent_change = 0.0;
    bool permanent = false;  // state velocity at zero drive is exactly zero
};

/// Drives the waveform through one device and reports the resistance shift.
CorruptionResult corrupt_cell(const TeamParams& params, TeamState state,
                              const CurrentWaveform& waveform);

struct ImpactStats {
    double max_rel_deviation = 0.0;
    double mean_rel_deviation = 0.0;
    std::vector<double> per_column_max;

    int affected_columns() const;
};

/// Compares ideal inference outputs of two grids over a set of probe input
/// vectors. Deviation is |I_after - I_before| / max(|I_after|, |I_before|).
ImpactStats inference_impact(const CrossbarConfig& config, const WeightGrid& before,
                             const WeightGrid& after,
                             const std::vector<std::vector<double>>& probes);

}  // namespace crossfault
