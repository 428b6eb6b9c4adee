#include "vloop/calibration.hpp"

#include <array>
#include <cmath>
#include <cstdint>

namespace vloop {

ColorCalibration calibrate_color(const MeanImage& mean, double min_sep) {
    std::array<std::uint64_t, 256> hist{};
    for (double v : mean.data) {
        long bin = std::lround(v);
        if (bin < 0) bin = 0;
        if (bin > 255) bin = 255;
        hist[static_cast<std::size_t>(bin)]++;
    }
    const double total = static_cast<double>(mean.data.size());
    const auto percentile = [&](double p) -> double {
        const double target = p * total;
        std::uint64_t cum = 0;
        for (int b = 0; b < 256; ++b) {
            cum += hist[static_cast<std::size_t>(b)];
            if (static_cast<double>(cum) >= target) {
                return static_cast<double>(b);
            }
        }
        return 255.0;
    };

    double b1 = percentile(0.30);
    double w1 = percentile(0.70);
    if (w1 - b1 < min_sep) {
        const double mid = 0.5 * (b1 + w1);
        b1 = mid - min_sep;
        w1 = mid + min_sep;
    }
    // keep room for b0 below and w2 above
    const double lo = min_sep;
    const double hi = 255.0 - min_sep;
    if (w1 - b1 > hi - lo) {
        b1 = lo;
        w1 = hi;
    } else if (b1 < lo) {
        w1 += lo - b1;
        b1 = lo;
    } else if (w1 > hi) {
        b1 -= w1 - hi;
        w1 = hi;
    }

    double b0 = percentile(0.10);
    double w2 = percentile(0.90);
    if (b1 - b0 < min_sep) b0 = b1 - min_sep;
    if (w2 - w1 < min_sep) w2 = w1 + min_sep;
    return {b0, b1, w1, w2};
}

}  // namespace vloop
