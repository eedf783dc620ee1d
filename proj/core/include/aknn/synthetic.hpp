#pragma once

#include <cstdint>

#include "aknn/types.hpp"

namespace aknn {

/// Seeded two-feature binary dataset: two well-separated Gaussian blobs
/// labeled "0" and "1". Stands in for small binary benchmark CSVs.
Dataset make_two_blob_dataset(std::size_t count = 199,
                              std::uint64_t seed = 0);

}  // namespace aknn
