#pragma once

#include <vector>

#include "crossfault/errors.hpp"

namespace crossfault {

// =============================================================================
// Current-controlled threshold-adaptive memristor model
// =============================================================================

/// Device constants. The state velocity is zero inside the current dead zone
/// (i_on, i_off) and follows k * (i/i_thr - 1)^alpha times a smooth window
/// outside it; resistance maps linearly from x onto [r_on, r_off].
struct TeamParams {
    double k_on = -1e-9;    // m/s, < 0
    double k_off = 1e-9;    // m/s, > 0
    double alpha_on = 3.0;  // >= 1
    double alpha_off = 3.0; // >= 1
    double i_on = -50e-6;   // A, < 0
    double i_off = 50e-6;   // A, > 0
    double x_on = 0.0;      // m
    double x_off = 3e-9;    // m, > x_on
    double r_on = 100.0;    // ohms
    double r_off = 500.0;   // ohms, > r_on
    double a_on = 0.3e-9;   // window center, ON side
    double a_off = 2.7e-9;  // window center, OFF side
    double w_c = 0.1e-9;    // window width

    void validate() const;
};

struct TeamState {
    double x = 0.0;  // m, within [x_on, x_off]
};

/// Drive waveform for fault and sweep experiments.
struct CurrentWaveform {
    enum class Shape { SineCycle, TriangleSweep, RectPulse };

    Shape shape = Shape::SineCycle;
    double peak_current = 0.0;  // amperes
    double duration = 0.0;      // seconds
    double dt = 0.0;            // seconds, <= duration/100

    void validate() const;
    double sample(double t) const;
};

double team_window_on(const TeamParams& p, double x);
double team_window_off(const TeamParams& p, double x);

/// dx/dt for the given drive current; exactly zero inside the dead zone and
/// at the thresholds themselves.
double team_state_derivative(const TeamParams& p, const TeamState& s, double current);

/// Linear resistance map R(x).
double team_resistance(const TeamParams& p, const TeamState& s);

/// Inverse of the linear map; r must lie in [r_on, r_off].
TeamState team_state_from_resistance(const TeamParams& p, double r_ohm);

struct Trajectory {
    std::vector<double> t;  // s
    std::vector<double> i;  // A
    std::vector<double> v;  // V, = R(x) * i
    std::vector<double> x;  // m
    std::vector<double> r;  // ohms
    TeamState final_state;

    std::size_t size() const { return t.size(); }
};

/// Fixed-step explicit Euler integration of the state equation with hard
/// clamping to [x_on, x_off]. Throws AccuracyError if any single step would
/// move the state by more than 1% of the state span.
Trajectory integrate_waveform(const TeamParams& p, TeamState state, const CurrentWaveform& w);

/// Bidirectional sinusoidal current sweep over `cycles` periods; dt <= 0
/// selects the default period/1e4.
Trajectory hysteresis_sweep(const TeamParams& p, TeamState state, double amplitude,
                            double period, int cycles, double dt = 0.0);

}  // namespace crossfault
