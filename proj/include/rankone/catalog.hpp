#pragma once

#include "rankone/cartan.hpp"
#include "rankone/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rankone {

enum class ModelKind { homogeneous, inhomogeneous };

/// A rank-one local model at a point whose local root system is `local`.
struct LocalModel {
  ModelKind kind = ModelKind::homogeneous;
  NodeSet local;
  /// Homogeneous: support of the weight. Inhomogeneous: the component holding k.
  NodeSet support;
  /// Finite type of `support`.
  FiniteType shape;
  /// Pattern identifier, e.g. "A3", "A3+", "B3+", "A1xA1", "I:A2", "I:C3".
  std::string pattern;
  Rational factor = 1;
  /// Homogeneous: simple-root coefficients, zero off `support`.
  RationalVector weight;
  /// Inhomogeneous: distinguished node k.
  int distinguished = -1;
  std::string triple;
  bool operator==(const LocalModel&) const = default;
};

/// Nodes of `subset` orthogonal to w.
NodeSet sp_set(const RootSystem& sys, const RationalVector& w, NodeSet subset);

/// Every instance of every spherical root pattern supported in `local`,
/// with duplicate weights removed. Order is deterministic.
std::vector<LocalModel> homogeneous_models(const RootSystem& sys, NodeSet local);
inline std::vector<LocalModel> homogeneous_models(const RootSystem& sys, const Subdiagram& sub) {
  return homogeneous_models(sys, sub.nodes);
}

/// One model per admissible distinguished node: ends of A components, the
/// short end of C components (the short node for B2).
std::vector<LocalModel> inhomogeneous_models(const RootSystem& sys, NodeSet local);
inline std::vector<LocalModel> inhomogeneous_models(const RootSystem& sys, const Subdiagram& sub) {
  return inhomogeneous_models(sys, sub.nodes);
}

/// Pairing profile required by an inhomogeneous model on its local root
/// system: 1 at k, 0 on the other local nodes. Entries off `local` are 0 and
/// meant to be treated as free.
RationalVector inhomogeneous_profile(const RootSystem& sys, const LocalModel& model);

struct SharpMatch {
  Rational t;
  LocalModel model;  // homogeneous model of t*delta - w on `far`
};

/// Tests whether t*delta - w is a homogeneous model on the local root system `far`.
std::optional<SharpMatch> match_sharp(const RootSystem& sys, const RationalVector& w, NodeSet far);

/// Triple label of a homogeneous pattern or inhomogeneous component, without center scalars.
std::string triple_label(const LocalModel& model);

}  // namespace rankone
