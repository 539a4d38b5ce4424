#pragma once

#include "rankone/classifier.hpp"

#include <vector>

namespace testing_support {

/// Exhaustive enumeration: every start face, every catalog model on it, every
/// far face and every far model kind. Output matches classify(..., keep_all).
std::vector<rankone::PolytopeRecord> brute_force(const rankone::RootSystem& sys, rankone::Mode mode);

}  // namespace testing_support
