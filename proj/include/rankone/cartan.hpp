#pragma once

#include "rankone/rational.hpp"

#include <bit>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace rankone {

/// Set of node indices of a diagram (at most 32 nodes).
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t bits) : bits_(bits) {}
  static NodeSet all(std::size_t n) { return NodeSet(n >= 32 ? ~0u : ((1u << n) - 1u)); }
  static NodeSet single(int i) { return NodeSet(1u << i); }
  static NodeSet of(std::initializer_list<int> nodes) {
    NodeSet s;
    for (int i : nodes) s.insert(i);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  void insert(int i) { bits_ |= 1u << i; }
  void erase(int i) { bits_ &= ~(1u << i); }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }

  NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  NodeSet minus(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }
  NodeSet complement(std::size_t n) const { return all(n).minus(*this); }
  auto operator<=>(const NodeSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Family plus index, as written in selectors: "A5~1", "D4~3", "F4".
struct SystemId {
  char letter = 'A';
  int index = 1;  // the subscript N of X_N^(twist)
  int twist = 0;  // 0 for finite types
  bool affine() const { return twist != 0; }
  std::string selector() const;
  auto operator<=>(const SystemId&) const = default;
};

/// Parses `<Family><rank>[~<twist>]`. Throws std::invalid_argument.
SystemId parse_selector(const std::string& text);

/// Affine or finite root system given by its generalized Cartan matrix.
/// Convention: gcm(i, j) = <alpha_j, alpha_i^vee>; row = coroot.
class RootSystem {
 public:
  RootSystem(SystemId id, std::vector<std::vector<int>> gcm, std::vector<int> marks,
             std::vector<int> comarks);

  const SystemId& id() const { return id_; }
  bool affine() const { return id_.affine(); }
  /// Number of nodes (n + 1 for affine systems, n for finite ones).
  std::size_t size() const { return gcm_.size(); }
  /// The rank n of the underlying (gradient) root system.
  std::size_t rank() const { return affine() ? size() - 1 : size(); }

  int gcm(int i, int j) const { return gcm_[i][j]; }
  const std::vector<std::vector<int>>& matrix() const { return gcm_; }
  const std::vector<int>& marks() const { return marks_; }
  const std::vector<int>& comarks() const { return comarks_; }
  RationalVector delta() const;

  /// Output label of node i (affine: i, finite: i + 1).
  int label(int i) const { return affine() ? i : i + 1; }
  int index_of_label(int label) const { return affine() ? label : label - 1; }
  NodeSet all_nodes() const { return NodeSet::all(size()); }
  bool adjacent(int i, int j) const { return i != j && gcm_[i][j] != 0; }

  /// <w, alpha_i^vee> for w given by simple-root coefficients.
  Rational pairing(const RationalVector& w, int i) const;
  /// All pairings at once.
  RationalVector profile(const RationalVector& w) const;

 private:
  SystemId id_;
  std::vector<std::vector<int>> gcm_;
  std::vector<int> marks_;
  std::vector<int> comarks_;
};

/// Builds an affine system. Throws std::invalid_argument for inadmissible input.
RootSystem build_system(const SystemId& id);
/// Convenience overloads.
RootSystem build_affine(char letter, int index, int twist = 1);
RootSystem build_finite(char letter, int index);

/// Raw text of the embedded family tables.
const char* cartan_tables_text();

/// Finite Cartan type of a connected diagram.
struct FiniteType {
  char letter = 'A';
  int rank = 1;
  std::string name() const { return std::string(1, letter) + std::to_string(rank); }
  auto operator<=>(const FiniteType&) const = default;
};

/// One connected component of an induced subdiagram.
struct Component {
  FiniteType type;
  /// relabel[t] = parent node playing the role of template node t
  /// (template nodes in Bourbaki order, 0-based).
  std::vector<int> relabel;
  NodeSet nodes() const {
    NodeSet s;
    for (int v : relabel) s.insert(v);
    return s;
  }
};

struct Subdiagram {
  NodeSet nodes;
  std::vector<Component> components;
};

/// Connected components of the diagram induced on `subset`, each recognized
/// as a finite type. Throws std::logic_error if a component is not of finite type.
Subdiagram components(const RootSystem& sys, NodeSet subset);

/// Classifies one connected subset.
Component classify_connected(const RootSystem& sys, NodeSet subset);

/// Automorphisms of the finite-type template diagram (as permutations of template nodes).
const std::vector<std::vector<int>>& template_automorphisms(const FiniteType& type);

using Permutation = std::vector<int>;

/// All node permutations p with gcm(p[i], p[j]) == gcm(i, j); identity first.
std::vector<Permutation> diagram_automorphisms(const RootSystem& sys);

NodeSet apply(const Permutation& p, NodeSet s);
RationalVector apply(const Permutation& p, const RationalVector& v);

}  // namespace rankone
