#pragma once

#include <string>
#include <vector>

#include "crossfault/crossbar.hpp"

namespace crossfault {

// =============================================================================
// Generic resistive network
// =============================================================================

/// Flat netlist of resistors, current sources and pinned-voltage nodes,
/// solved by nodal analysis. Zero-ohm resistors tie nodes rigidly instead of
/// stamping an infinite conductance.
class ResistiveNetwork {
public:
    int add_node(std::string name);
    void set_known_voltage(int node, double volts);
    void add_resistor(int node_a, int node_b, double ohms);
    void add_current_source(int node, double amps);  // positive into the node

    struct Solution {
        std::vector<double> voltages;       // one per node
        double max_rel_kcl_residual = 0.0;  // worst node residual / largest branch current
    };

    /// Solves the network. Throws SolverError naming the offending node if a
    /// free node has no resistive path to any pinned node.
    Solution solve() const;

    /// Net current flowing into `node` through resistors and sources.
    double current_into(int node, const Solution& sol) const;

    const std::string& node_name(int node) const { return names_.at(node); }
    int node_count() const { return static_cast<int>(names_.size()); }

private:
    struct Branch {
        int a;
        int b;
        double conductance;
    };
    struct Source {
        int node;
        double amps;
    };

    std::vector<std::string> names_;
    std::vector<bool> known_;
    std::vector<double> known_voltage_;
    std::vector<Branch> branches_;
    std::vector<std::pair<int, int>> ties_;
    std::vector<Source> sources_;
};

// =============================================================================
// Crossbar nodal-analysis oracle
// =============================================================================

struct MnaSolution {
    ColumnReadout readout;
    double max_rel_kcl_residual = 0.0;
    std::vector<std::string> node_names;
    std::vector<double> node_voltages;
};

/// Full-network solve of the crossbar read: row drivers behind
/// driver_source_resistance, per-segment wire resistance along rows and
/// columns, cells in series with the selector resistance, virtual-ground
/// column sensing.
///
/// Every fault target carries its injection node and shunt branch whether or
/// not the injected current is zero, so differential readouts compare
/// identical topologies; an empty fault list is the plain read network.
MnaSolution mna_solve(const CrossbarConfig& config, const WeightGrid& weights,
                      const std::vector<double>& row_voltages,
                      const std::vector<FaultEvent>& faults);

}  // namespace crossfault
