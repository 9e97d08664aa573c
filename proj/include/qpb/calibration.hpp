#pragma once

#include "qpb/scalar.hpp"

namespace qpb {

/// Sign/factor conventions that the defining displays of the calculus do
/// not pin down by themselves. The shipped defaults are the unique choice
/// (verified by enumeration in the test suite) under which every
/// cross-check holds at once: the two curvature computations agree, the
/// distinguished connection has its known curvature, adjointness of the
/// covariant derivatives holds against the inner products, and the
/// Laplacians are positive where they must be.
struct Calibration {
    /// Factor carried by the product of two degree-1 base forms.
    ExactC one_one_factor = ExactC::i_unit();
    /// Global sign of the Hodge operators on the base.
    int hodge_sign = +1;
    /// In the conjugated middle operator of the adjoint composite the
    /// connection coefficient acts from the opposite module side.
    /// `false` keeps that (correct) flip; `true` uses the literal side.
    bool adjoint_literal_side = false;
    /// Apply an extra alternating sign (-1)^{k+1} to adjoint composites.
    bool adjoint_alternating_sign = false;
};

/// Mutable per-thread convention set used by the whole library.
Calibration& calibration();

/// Temporarily install a convention set; restores the previous one on exit.
/// Used by the enumeration tests and the CLI's deliberate-failure mode.
class ScopedCalibration {
public:
    explicit ScopedCalibration(const Calibration& c);
    ~ScopedCalibration();
    ScopedCalibration(const ScopedCalibration&) = delete;
    ScopedCalibration& operator=(const ScopedCalibration&) = delete;

private:
    Calibration saved_;
};

} // namespace qpb
