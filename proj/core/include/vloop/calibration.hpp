#pragma once

#include "vloop/image.hpp"

namespace vloop {

// Intensity breakpoints of the colour linguistic variable. black is certain
// below b0 and fades out at b1; white fades in at w1 and is certain above w2;
// grey fills the middle.
struct ColorCalibration {
    double b0 = 0.0;
    double b1 = 0.0;
    double w1 = 0.0;
    double w2 = 0.0;
};

inline constexpr double kMinBreakpointSeparation = 5.0;

// Derives the breakpoints from the mean-image histogram (256 integer bins):
// b0/b1/w1/w2 sit at the 10th/30th/70th/90th percentiles and are then pushed
// apart so consecutive breakpoints keep at least min_sep intensity units.
// Degenerate histograms (constant images) therefore still yield a well-formed
// trapezoid partition.
ColorCalibration calibrate_color(const MeanImage& mean,
                                 double min_sep = kMinBreakpointSeparation);

}  // namespace vloop
