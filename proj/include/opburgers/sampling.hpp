#pragma once

#include <cstdint>
#include <vector>

#include "opburgers/field.hpp"

namespace opburgers::sampling {

/// `count` points of a Halton sequence over box × time, shifted by a seeded
/// random rotation (Cranley–Patterson) so different seeds give different but
/// reproducible point sets.
std::vector<Sample> halton(const Box& box, Interval time, int count, std::uint64_t seed);

/// Uniform tensor grid with the given node counts per axis (time last).
std::vector<Sample> tensor_grid(const Box& box, Interval time, const std::vector<int>& nodes, int time_nodes);

}  // namespace opburgers::sampling
