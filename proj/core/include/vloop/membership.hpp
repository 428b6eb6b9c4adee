#pragma once

#include "vloop/calibration.hpp"
#include "vloop/image.hpp"

namespace vloop {

// Membership degrees over a three-term linguistic variable, ordered as the
// term set: (black, grey, white) for colour, (darker, similar, brighter) for
// the contrast attributes. Always a partition of unity.
struct MembershipTriple {
    double m1 = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
};

// 1 below x0, 0 above x1, linear between.
inline double ramp_down(double v, double x0, double x1) {
    if (v <= x0) return 1.0;
    if (v >= x1) return 0.0;
    return (x1 - v) / (x1 - x0);
}

// 0 below x0, 1 above x1, linear between.
inline double ramp_up(double v, double x0, double x1) {
    if (v <= x0) return 0.0;
    if (v >= x1) return 1.0;
    return (v - x0) / (x1 - x0);
}

// Trapezoidal partition of unity with breakpoints x0 <= x1 <= x2 <= x3:
// the first term covers the low end, the third the high end, the middle
// term takes the complement.
inline MembershipTriple partition3(double v, double x0, double x1, double x2, double x3) {
    const double low = ramp_down(v, x0, x1);
    const double high = ramp_up(v, x2, x3);
    return {low, 1.0 - low - high, high};
}

// Colour attribute C at one mean-image value.
inline MembershipTriple eval_color(double im_value, const ColorCalibration& calib) {
    return partition3(im_value, calib.b0, calib.b1, calib.w1, calib.w2);
}

// Offsets that shape the contrast terms around the reference intensity:
// |d| <= delta_inner is fully "similar", |d| >= delta_outer is fully
// darker/brighter.
struct ContrastConfig {
    double delta_inner = 10.0;
    double delta_outer = 30.0;
};

void validate_contrast(const ContrastConfig& cfg);

// Contrast between the 3x3 region on the pixel and the one on the reference.
inline MembershipTriple eval_contrast(double im_center, double im_ref, const ContrastConfig& cfg) {
    const double d = im_center - im_ref;
    return partition3(d, -cfg.delta_outer, -cfg.delta_inner, cfg.delta_inner, cfg.delta_outer);
}

// Attribute indices used across banks and score grids.
enum Attribute : int {
    kAttrColor = 0,
    kAttrUpperRight = 1,
    kAttrUpperLeft = 2,
    kAttrLowerLeft = 3,
    kAttrLowerRight = 4,
};
inline constexpr int kAttributeCount = 5;

// The five membership triples evaluated at one pixel.
struct AttributeVector {
    MembershipTriple c, ur, ul, ll, lr;

    const MembershipTriple& attr(int i) const {
        switch (i) {
            case kAttrUpperRight: return ur;
            case kAttrUpperLeft: return ul;
            case kAttrLowerLeft: return ll;
            case kAttrLowerRight: return lr;
            default: return c;
        }
    }
};

// Evaluates colour plus the four corner contrasts at (x, y). The row index y
// grows downward, so the upper contrasts reference y - 2. Out-of-range
// references clamp to the border (replicate padding).
inline AttributeVector eval_attributes(int x, int y, const MeanImage& im,
                                       const ColorCalibration& calib, const ContrastConfig& cfg) {
    const double center = im.at(x, y);
    AttributeVector out;
    out.c = eval_color(center, calib);
    out.ur = eval_contrast(center, im.at_clamped(x + 2, y - 2), cfg);
    out.ul = eval_contrast(center, im.at_clamped(x - 2, y - 2), cfg);
    out.ll = eval_contrast(center, im.at_clamped(x - 2, y + 2), cfg);
    out.lr = eval_contrast(center, im.at_clamped(x + 2, y + 2), cfg);
    return out;
}

}  // namespace vloop
