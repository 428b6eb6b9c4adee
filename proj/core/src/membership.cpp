#include "vloop/membership.hpp"

#include <stdexcept>

namespace vloop {

void validate_contrast(const ContrastConfig& cfg) {
    if (!(cfg.delta_inner > 0.0 && cfg.delta_inner < cfg.delta_outer && cfg.delta_outer <= 255.0)) {
        throw std::invalid_argument("contrast offsets must satisfy 0 < delta_inner < delta_outer <= 255");
    }
}

}  // namespace vloop
