#include "vloop/image.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "vloop/threading.hpp"

namespace vloop {

void validate_frame(const Frame& frame) {
    if (frame.width < kMinFrameDim || frame.height < kMinFrameDim) {
        throw std::invalid_argument("frame must be at least 7x7, got " + std::to_string(frame.width) +
                                    "x" + std::to_string(frame.height));
    }
    if (frame.data.size() != frame.pixel_count()) {
        throw std::invalid_argument("frame data size does not match dimensions");
    }
}

namespace {

// Horizontal 3-tap sums of one source row, replicate-padded.
void hsum_row(const Frame& f, int y, std::uint32_t* dst) {
    const int w = f.width;
    y = std::clamp(y, 0, f.height - 1);
    const std::uint8_t* src = f.data.data() + static_cast<std::size_t>(y) * w;
    dst[0] = 2u * src[0] + src[1];
    for (int x = 1; x + 1 < w; ++x) {
        dst[x] = static_cast<std::uint32_t>(src[x - 1]) + src[x] + src[x + 1];
    }
    dst[w - 1] = static_cast<std::uint32_t>(src[w - 2]) + 2u * src[w - 1];
}

void mean_rows(const Frame& f, MeanImage& out, int y_begin, int y_end) {
    const int w = f.width;
    std::vector<std::uint32_t> ring(static_cast<std::size_t>(3) * w);
    std::uint32_t* rows[3] = {ring.data(), ring.data() + w, ring.data() + 2 * w};
    hsum_row(f, y_begin - 1, rows[0]);
    hsum_row(f, y_begin, rows[1]);
    hsum_row(f, y_begin + 1, rows[2]);
    for (int y = y_begin; y < y_end; ++y) {
        double* dst = out.data.data() + static_cast<std::size_t>(y) * w;
        const std::uint32_t* r0 = rows[0];
        const std::uint32_t* r1 = rows[1];
        const std::uint32_t* r2 = rows[2];
        for (int x = 0; x < w; ++x) {
            dst[x] = static_cast<double>(r0[x] + r1[x] + r2[x]) / 9.0;
        }
        if (y + 1 < y_end) {
            std::uint32_t* recycled = rows[0];
            rows[0] = rows[1];
            rows[1] = rows[2];
            rows[2] = recycled;
            hsum_row(f, y + 2, rows[2]);
        }
    }
}

}  // namespace

void compute_mean_image(const Frame& frame, MeanImage& out, ThreadPool* pool) {
    validate_frame(frame);
    out.width = frame.width;
    out.height = frame.height;
    out.t = frame.t;
    out.data.resize(frame.pixel_count());
    if (pool != nullptr && pool->thread_count() > 1 && frame.height >= 64) {
        pool->run_chunked(frame.height,
                          [&](int y0, int y1) { mean_rows(frame, out, y0, y1); });
    } else {
        mean_rows(frame, out, 0, frame.height);
    }
}

MeanImage compute_mean_image(const Frame& frame) {
    MeanImage out;
    compute_mean_image(frame, out, nullptr);
    return out;
}

}  // namespace vloop
