#pragma once

#include <array>
#include <string>

#include "fslbm/math3.hpp"
#include "fslbm/stencil.hpp"

namespace fslbm {

using PdfSet = std::array<double, stencil::Q>;

/// Macroscopic state of one cell: density, velocity and pressure.
struct MacroState {
    double rho = 1.0;
    Vec3 u{};
    double pressure() const { return stencil::cs2 * rho; }
};

/// Global lattice parameters, all in lattice units (dx = dt = 1).
struct SimParams {
    double tau = 1.0;             // relaxation time, > 1/2
    Vec3 gravity{};               // acceleration acting on the liquid
    double rho_gas = 1.0;         // reference density of the gas phase
    double epsilon = 0.01;        // fill-level conversion hysteresis
    int check_interval = 100;     // cadence of the non-finite field scan

    double omega() const { return 1.0 / tau; }
};

/// nu = cs^2 (tau - 1/2), kinematic viscosity of the BGK model.
double kinematic_viscosity(double tau);

/// Second-order equilibrium distribution for (rho, u).
PdfSet equilibrium(double rho, const Vec3& u);

/// Single-direction equilibrium value.
double equilibrium_i(int i, double rho, const Vec3& u);

/// Density and velocity as zeroth/first moments of the PDFs.
MacroState moments(const PdfSet& f);

/// Second moment sum_i c_i c_i^T f_i (momentum flux plus pressure and shear).
Mat3 momentum_flux(const PdfSet& f);

/// Shear part: momentum_flux minus rho u u^T minus p 1.
Mat3 shear_stress(const PdfSet& f);

/// Body-force contribution per direction for acceleration a.
PdfSet force_term(double rho, const Vec3& u, const Vec3& a);

/// BGK relaxation plus forcing, in place. f holds post-stream PDFs.
void collide_cell(PdfSet& f, const SimParams& params, double& rho_out, Vec3& u_out);

/// Moving-wall bounce-back: value reflected into direction i when the PDF
/// travelling along opposite(i) hit a wall moving at u_w.
double apply_noslip(double f_incoming, int i, const Vec3& wall_velocity, double rho);

/// Advisory pre-run check of the domain-height/force product and wall Mach number.
struct StabilityReport {
    double force_projection = 0.0;   // |(lx,ly,lz) . a|
    double max_mach = 0.0;           // max configured |u| / cs
    bool pass = true;                // projection <= 0.1 cs^2 and Ma small
    bool hard_warning = false;       // projection >= cs^2
    std::string message;
};

StabilityReport check_stability(const std::array<int, 3>& domain, const Vec3& gravity,
                                double max_velocity);

} // namespace fslbm
