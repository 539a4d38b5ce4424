#include "rankone/alcove.hpp"

#include "rankone/linsolve.hpp"

#include <cassert>

namespace rankone {

RationalVector translate(const RootSystem& sys, const AlcovePoint& x, const Rational& c, const RationalVector& w) {
  return translate_by_profile(x, c, sys.profile(w));
}

RationalVector translate_by_profile(const AlcovePoint& x, const Rational& c, const RationalVector& profile) {
  assert(x.values.size() == profile.size());
  RationalVector out(x.values.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.values[i] + c * profile[i];
  return out;
}

NodeSet zero_set(const RationalVector& values) {
  NodeSet s;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == 0) s.insert(static_cast<int>(i));
  return s;
}

bool nonnegative(const RationalVector& values) {
  for (const auto& v : values)
    if (v < 0) return false;
  return true;
}

bool in_closed_alcove(const RootSystem& sys, const RationalVector& values) {
  if (values.size() != sys.size() || !nonnegative(values)) return false;
  if (!sys.affine()) return true;
  Rational total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) total += sys.comarks()[i] * values[i];
  return total == 1;
}

std::optional<RationalVector> weight_from_profile(const RootSystem& sys, const RationalVector& profile, int gauge) {
  const std::size_t n = sys.size();
  RationalMatrix rows;
  RationalVector rhs;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = sys.gcm(static_cast<int>(i), static_cast<int>(j));
    rows.push_back(std::move(row));
    rhs.push_back(profile[i]);
  }
  if (sys.affine()) {
    RationalVector row = zeros(n);
    row[gauge] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }
  auto solution = solve_linear(std::move(rows), std::move(rhs), n);
  if (solution.status != SolveStatus::unique) return std::nullopt;
  return solution.values;
}

FaceResult face_solve(const RootSystem& sys, NodeSet s1, NodeSet s2, const DirectionSpec& direction) {
  const std::size_t n = sys.size();
  // Unknown layout: u_i (i not in s1), then c, then r_m = c * p_m (m free).
  std::vector<int> u_index(n, -1), r_index(n, -1);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!s1.contains(static_cast<int>(i))) u_index[i] = static_cast<int>(count++);
  const std::size_t c_index = count++;
  for (std::size_t i = 0; i < n; ++i)
    if (direction.free.contains(static_cast<int>(i))) r_index[i] = static_cast<int>(count++);

  RationalMatrix rows;
  RationalVector rhs;
  auto add_step = [&](RationalVector& row, std::size_t j, const Rational& scale) {
    // adds scale * (c * p_j) to row
    if (r_index[j] >= 0)
      row[r_index[j]] += scale;
    else
      row[c_index] += scale * direction.profile[j];
  };

  {
    RationalVector row = zeros(count);
    if (sys.affine()) {
      for (std::size_t i = 0; i < n; ++i)
        if (u_index[i] >= 0) row[u_index[i]] = sys.comarks()[i];
    } else {
      row[c_index] = 1;
    }
    rows.push_back(std::move(row));
    rhs.push_back(1);
  }
  for (int j : s2.to_vector()) {
    RationalVector row = zeros(count);
    if (u_index[j] >= 0) row[u_index[j]] = 1;
    add_step(row, static_cast<std::size_t>(j), 1);
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }
  if (sys.affine()) {
    RationalVector row = zeros(count);
    for (std::size_t i = 0; i < n; ++i) add_step(row, i, sys.comarks()[i]);
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }
  for (const auto& [j, value] : direction.far) {
    RationalVector row = zeros(count);
    add_step(row, static_cast<std::size_t>(j), 1);
    row[c_index] -= value;
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }

  auto solved = solve_linear(std::move(rows), std::move(rhs), count);
  FaceResult result;
  if (solved.status == SolveStatus::inconsistent) return result;
  if (solved.status == SolveStatus::family) {
    result.status = FaceStatus::family;
    return result;
  }
  const Rational c = solved.values[c_index];
  if (c <= 0) {
    result.status = FaceStatus::nonpositive;
    return result;
  }
  FaceSolution sol;
  sol.c = c;
  sol.x1.values = zeros(n);
  sol.profile = RationalVector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u_index[i] >= 0) sol.x1.values[i] = solved.values[u_index[i]];
    sol.profile[i] = r_index[i] >= 0 ? solved.values[r_index[i]] / c : direction.profile[i];
  }
  sol.x2.values = translate_by_profile(sol.x1, c, sol.profile);
  result.status = FaceStatus::solved;
  result.solution = std::move(sol);
  return result;
}

}  // namespace rankone
