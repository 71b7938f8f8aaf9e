#pragma once

#include <cstdint>
#include <vector>

namespace qce {

enum class AugmentOp {
    none,
    rotate,             // random angle within +-50 degrees
    rotate_crop,        // rotation followed by a center crop
    rotate_crop_shift,  // rotation, crop, then a small random shift
};

// Deterministic per (op, seed); images are 28x28 row-major, any value range.
// Rotation uses bilinear interpolation about the image center; the crop
// takes the central 24x24 window and resizes it back; the shift moves the
// image by up to +-3 pixels on each axis.
std::vector<double> augment(const std::vector<double>& image, AugmentOp op, uint64_t seed);

}  // namespace qce
