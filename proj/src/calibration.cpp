#include "qpb/calibration.hpp"

namespace qpb {

Calibration& calibration() {
    thread_local Calibration cal;
    return cal;
}

ScopedCalibration::ScopedCalibration(const Calibration& c) : saved_(calibration()) {
    calibration() = c;
}

ScopedCalibration::~ScopedCalibration() {
    calibration() = saved_;
}

} // namespace qpb
