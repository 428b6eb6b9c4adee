#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace vloop {

class ThreadPool;

// One 8-bit greyscale frame, row-major.
struct Frame {
    int width = 0;
    int height = 0;
    int t = 0;  // 0-based index within the sequence
    std::vector<std::uint8_t> data;

    std::uint8_t at(int x, int y) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }
};

// Per-pixel 3x3 box means of a frame. Values stay real-valued: re-quantizing
// them would bias the membership evaluation downstream.
struct MeanImage {
    int width = 0;
    int height = 0;
    int t = 0;
    std::vector<double> data;

    double at(int x, int y) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    // replicate-padded access: out-of-range coordinates clamp to the border
    double at_clamped(int x, int y) const {
        x = std::clamp(x, 0, width - 1);
        y = std::clamp(y, 0, height - 1);
        return at(x, y);
    }
};

// Smallest frame that can host the 7x7 neighbourhood used by the attributes.
inline constexpr int kMinFrameDim = 7;

// Throws std::invalid_argument on undersized or malformed frames.
void validate_frame(const Frame& frame);

// 3x3 box mean at every pixel, replicate padding at the borders.
// The sums are taken over integers, so the result is exact up to the final
// division by 9.
MeanImage compute_mean_image(const Frame& frame);
void compute_mean_image(const Frame& frame, MeanImage& out, ThreadPool* pool = nullptr);

}  // namespace vloop
