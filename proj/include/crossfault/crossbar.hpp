#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crossfault/errors.hpp"

namespace crossfault {

struct CellIndex {
    int row = 0;
    int col = 0;

    friend bool operator==(const CellIndex& a, const CellIndex& b) {
        return a.row == b.row && a.col == b.col;
    }
};

// =============================================================================
// Array description
// =============================================================================

/// Electrical description of a 1T1R crossbar read path.
///
/// The shunt parameters describe the effective row-side return path seen from
/// a photocurrent injection node: R_sh(I) = r_sh0 * (1 + gamma * I). Wire and
/// driver resistances only participate in the nodal-analysis solver; the
/// analytic model treats rows as stiff voltage rails.
struct CrossbarConfig {
    int rows = 256;
    int cols = 128;
    double read_voltage = 0.2;              // volts on the driven row
    double shunt_resistance_r_sh0 = 1468.0; // ohms
    double shunt_nonlinearity_gamma = 0.0;  // per ampere
    double selector_on_resistance = 0.0;    // ohms, in series with each cell
    double wire_res_per_segment = 1.0;      // ohms, nodal analysis only
    double driver_source_resistance = 0.0;  // ohms, nodal analysis only

    void validate() const;

    /// Injection-path shunt resistance at a given injected current.
    double shunt_resistance(double injected_current) const {
        return shunt_resistance_r_sh0 * (1.0 + shunt_nonlinearity_gamma * injected_current);
    }
};

/// Per-cell resistance state of the array, row-major.
class WeightGrid {
public:
    WeightGrid(int rows, int cols, double initial_resistance_ohm);

    /// Uniform random resistances in [r_min, r_max]; identical seeds give
    /// identical grids on every platform.
    static WeightGrid random_uniform(int rows, int cols, double r_min_ohm, double r_max_ohm,
                                     std::uint64_t seed);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool in_bounds(CellIndex c) const {
        return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_;
    }

    double resistance(int row, int col) const { return r_[index(row, col)]; }
    double conductance(int row, int col) const { return 1.0 / r_[index(row, col)]; }
    void set_resistance(int row, int col, double ohms);

private:
    std::size_t index(int row, int col) const;

    int rows_;
    int cols_;
    std::vector<double> r_;
};

/// One localized photocurrent injection at the row-side node of a cell.
struct FaultEvent {
    CellIndex target;
    double injected_current = 0.0;  // amperes, >= 0, positive into the node
};

/// Column sense currents under virtual-ground termination.
struct ColumnReadout {
    std::vector<double> currents;  // amperes, one per column
    std::string label;
};

// =============================================================================
// Analytic read model
// =============================================================================

/// Row-voltage vector for the single-row read scheme: driven_row at
/// config.read_voltage, every other row grounded.
std::vector<double> single_row_voltages(const CrossbarConfig& config, int driven_row);

/// Column currents of the ideal virtual-ground array: I_j = sum_i V_i * G_ij.
ColumnReadout ideal_column_currents(const CrossbarConfig& config, const WeightGrid& weights,
                                    const std::vector<double>& row_voltages);

/// Extra column current contributed by one injected fault: the injected
/// current divides between the cell path to the column and the row-side
/// return path, ΔI = I * R_sh(I) / (R_sh(I) + R_cell).
double fault_delta_current(const CrossbarConfig& config, double cell_resistance_ohm,
                           double injected_current);

/// Baseline currents plus per-fault divider contributions. Faults sharing a
/// cell are merged (their currents sum before the divider is applied);
/// distinct cells superpose.
ColumnReadout faulted_column_currents(const CrossbarConfig& config, const WeightGrid& weights,
                                      const std::vector<double>& row_voltages,
                                      const std::vector<FaultEvent>& faults);

/// Elementwise faulted-minus-baseline difference.
std::vector<double> delta_current(const ColumnReadout& baseline, const ColumnReadout& faulted);

}  // namespace crossfault
