#pragma once

#include "rankone/alcove.hpp"
#include "rankone/cartan.hpp"
#include "rankone/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rankone {

enum class RecordKind { bihom, mixed, biinhom };
std::string to_string(RecordKind kind);
RecordKind parse_record_kind(const std::string& text);

enum class Mode { genuine, hamiltonian };

/// One end of a rank-one momentum polytope.
struct PolytopeEnd {
  AlcovePoint x;
  NodeSet zeros;
  LocalModel model;
  /// Model weight at this end (simple-root coefficients). Inhomogeneous
  /// weights on affine systems are gauged to 0 at the smallest missing node.
  RationalVector weight;
  /// Center scalars, one per missing node (affine: all but the smallest).
  std::vector<Rational> center;
  bool operator==(const PolytopeEnd&) const = default;
};

/// Segment [X1 X2] with its local models; X2 = X1 + c * omega.
struct PolytopeRecord {
  SystemId system;
  RecordKind kind = RecordKind::bihom;
  PolytopeEnd end1, end2;
  Rational c;
  /// t with omega + sharp = t * delta (bihom only).
  std::optional<Rational> t;
  bool canonical = true;
  std::size_t orbit_size = 1;
  /// Index of the geometric orbit (records that differ only in the lattice
  /// factor share it).
  std::size_t polytope = 0;

  bool operator==(const PolytopeRecord&) const = default;

  const RationalVector& omega() const { return end1.weight; }
  const Rational& factor() const { return end1.model.factor; }
};

/// The model at the far end of a candidate, before solving.
struct FarModel {
  ModelKind kind = ModelKind::homogeneous;
  int distinguished = -1;  // inhomogeneous only
};

/// Solves and validates one candidate (start model on s1, far zero set s2,
/// far model kind). Returns a complete record in stored orientation, or
/// nothing if the candidate is not a polytope of the requested mode.
std::optional<PolytopeRecord> evaluate_candidate(const RootSystem& sys, Mode mode, const LocalModel& start,
                                                 NodeSet s2, const FarModel& far);

/// Center scalars of a weight at a point with the given zero set.
std::vector<Rational> center_scalar(const RootSystem& sys, const RationalVector& weight, NodeSet zeros);
std::vector<Rational> center_scalar(const RootSystem& sys, const PolytopeRecord& record, int end);

/// Pruned enumerations. Results are normalized, sorted and deduplicated;
/// with `keep_all` every member of every automorphism orbit is returned,
/// otherwise only the canonical representatives.
std::vector<PolytopeRecord> classify_genuine(const RootSystem& sys, bool keep_all = false);
std::vector<PolytopeRecord> classify_hamiltonian(const RootSystem& sys, bool keep_all = false);
std::vector<PolytopeRecord> classify(const RootSystem& sys, Mode mode, bool keep_all = false);

/// Puts a record in stored orientation (homogeneous end first for mixed
/// records, otherwise the smaller key first).
PolytopeRecord normalize(const RootSystem& sys, PolytopeRecord record);

/// Applies a diagram automorphism to every node index of a record.
PolytopeRecord apply(const RootSystem& sys, const Permutation& p, const PolytopeRecord& record);

/// Total order key of a record (orientation sensitive).
std::string record_key(const PolytopeRecord& record);

/// Removes duplicates, groups automorphism orbits, and sets canonical,
/// orbit_size and polytope. Output is sorted by key.
std::vector<PolytopeRecord> dedupe(const RootSystem& sys, std::vector<PolytopeRecord> records, bool keep_all);

/// Invariant violations of a record (empty if it is sound).
std::vector<std::string> check_record(const RootSystem& sys, Mode mode, const PolytopeRecord& record);

}  // namespace rankone
