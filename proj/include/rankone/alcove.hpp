#pragma once

#include "rankone/cartan.hpp"
#include "rankone/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rankone {

/// Point of the closed fundamental alcove (affine) or Weyl chamber (finite),
/// stored by its values on the simple coroots. Affine points satisfy
/// sum_i comark_i * values_i = 1.
struct AlcovePoint {
  RationalVector values;
  bool operator==(const AlcovePoint&) const = default;
};

/// values + c * profile(w).
RationalVector translate(const RootSystem& sys, const AlcovePoint& x, const Rational& c, const RationalVector& w);

/// Same, with the direction already given by its pairing profile.
RationalVector translate_by_profile(const AlcovePoint& x, const Rational& c, const RationalVector& profile);

NodeSet zero_set(const RationalVector& values);
inline NodeSet zero_set(const AlcovePoint& x) { return zero_set(x.values); }

bool nonnegative(const RationalVector& values);
/// Nonnegative and, for affine systems, normalized.
bool in_closed_alcove(const RootSystem& sys, const RationalVector& values);

/// Weight coefficients (simple-root basis) realizing a pairing profile.
/// Affine profiles are realizable iff sum_i comark_i * p_i = 0; the coefficient
/// at `gauge` is then fixed to 0. Returns nullopt if the profile is not realizable.
std::optional<RationalVector> weight_from_profile(const RootSystem& sys, const RationalVector& profile,
                                                  int gauge = 0);

/// Direction of travel for face_solve. profile[j] is fixed for nodes outside
/// `free`; on `free` nodes the pairing is an unknown.
struct DirectionSpec {
  RationalVector profile;
  NodeSet free;
  /// Extra requirements profile[j] == value (used for the far end model).
  std::vector<std::pair<int, Rational>> far;
};

enum class FaceStatus { solved, nonpositive, inconsistent, family };

struct FaceSolution {
  AlcovePoint x1;
  Rational c;
  RationalVector profile;  // fully resolved pairing profile of the direction
  AlcovePoint x2;          // x1 + c * direction
};

struct FaceResult {
  FaceStatus status = FaceStatus::inconsistent;
  std::optional<FaceSolution> solution;  // present iff status == solved
};

/// Solves { x1 vanishes on s1; normalization; x1 + c*w vanishes on s2 } for
/// (x1 off s1, c, c * free pairings). Affine systems also require the
/// resolved profile to be a gradient. Finite systems fix c = 1 (the chamber
/// is a cone). Membership of x1, x2 in the closed alcove is not checked.
FaceResult face_solve(const RootSystem& sys, NodeSet s1, NodeSet s2, const DirectionSpec& direction);

}  // namespace rankone
