#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpb/connection.hpp"
#include "qpb/field_theory.hpp"
#include "qpb/qvb.hpp"

namespace qpb {

/// One entry of the flat-family enumeration: the completed connection,
/// or the reason the parameter is inadmissible.
struct FlatEntry {
    ExactC lambda0;
    std::optional<Connection> conn;
    std::string error; // empty on success
};

/// Completes each lambda0 to the flat connection (lambda0, -lambda0 /
/// (1 + 2i lambda0)); the pole lambda0 = i/2 has no flat partner and
/// produces a per-item error entry instead of throwing.
std::vector<FlatEntry> enumerate_flat(const std::vector<ExactC>& samples);

struct SolveOptions {
    int max_iter = 200;     // total damped-Newton steps, restarts included
    double damping = 1e-8;  // initial Tikhonov damping
    double step_tol = 1e-12;
    double match_tol = 1e-9; // classification distance at the endpoint
    int max_restarts = 6;    // deterministic jitter restarts (spurious minima)
    bool freeze_omega = false;
    bool freeze_sections = false;
};

/// A located critical point: the floating endpoint of the search, its
/// rational snap, and the exact certificate re-derived at the snap.
struct CriticalPoint {
    enum class Kind { flat, ym_nonflat, matter, unclassified };

    Connection omega;            // exact, meaningful when exactified
    std::optional<Section> t1;
    std::optional<Section> t2;
    std::optional<Potential> potential;
    Kind kind = Kind::unclassified;
    std::vector<std::pair<std::string, Residual>> certificate;
    bool exactified = false; // snapping produced an exact candidate
    bool certified = false;  // every certificate residual is exactly zero
    int iterations = 0;
    double residual_norm = 0.0; // objective at the floating endpoint
    ApproxC lambda0_float{0.0, 0.0};
    ApproxC lambda1_float{0.0, 0.0};
    std::string diagnostic; // nonempty on failure paths
};

std::string kind_name(CriticalPoint::Kind k);

/// Critical-point search for the connection action alone: damped Newton
/// on the stationarity residual over the real four-dimensional connection
/// space, with deterministic jitter restarts away from the residual
/// norm's spurious local minima, then rational snapping and an exact
/// stationarity certificate.
CriticalPoint find_critical_ym(const ApproxC& seed0, const ApproxC& seed1,
                               const SolveOptions& opts = {});

/// Joint search over (connection, both sections). The trivial
/// corepresentation minimizes the full coupled residual set; the
/// alternating one targets the componentwise stationarity system
/// together with the unit-eigenvalue Laplacian identities.
CriticalPoint find_critical_ymsm(Corep corep, const Potential& v,
                                 const Connection& omega_seed,
                                 const BaseForm& t1_seed, const BaseForm& t2_seed,
                                 const SolveOptions& opts = {});

/// Post-hoc report for a certified point: kind, exact action value,
/// flatness, and whether the distinguished gauge elements fix it.
struct ClassifyReport {
    CriticalPoint::Kind kind = CriticalPoint::Kind::unclassified;
    std::string name;
    ExactC action;
    bool flat_point = false;
    bool orbit_fixed = false;
};

ClassifyReport classify(const CriticalPoint& p);

} // namespace qpb
