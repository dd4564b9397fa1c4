#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hycount/rat.hpp"

namespace hycount {

// Split class indices into three groups whose log-weights are balanced to
// within one unit (one unit = a factor of the class-size base): start with
// everything in the third group and repeatedly move the heaviest element from
// the heaviest group to the lightest while they differ by more than a unit;
// afterwards populate any empty group from the most populous one (lightest
// element first) so all three groups are usable, which keeps the balance
// because every group weighs at most one unit at that point.  Returned groups
// are sorted by weight ascending; all tie-breaking is by smallest index.
std::array<std::vector<std::uint32_t>, 3> partition_three(const std::vector<Rat>& log_sizes);

// Split class indices into two groups with roughly equal size products:
// greedily assign classes in descending size (ties by smaller index) to the
// lighter group.  The products then differ by at most a factor of the largest
// class size.  Both groups are nonempty when k >= 2.
std::array<std::vector<std::uint32_t>, 2> partition_two(const std::vector<std::uint64_t>& sizes);

} // namespace hycount
