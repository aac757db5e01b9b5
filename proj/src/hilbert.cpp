#include "helixforge/hilbert.hpp"

#include <string>

namespace helixforge {

std::int64_t h_quad(std::int64_t n) {
  if (n < 0) return 0;
  return (n + 1) * (n + 2) / 2;
}

std::int64_t h_cub(std::int64_t n) {
  if (n < 0) return 0;
  std::int64_t a = n / 2;
  return (n % 2 == 0) ? (a + 1) * (a + 1) : (a + 1) * (a + 2);
}

std::int64_t colength(std::int64_t i) {
  if (i < 0) raise(Errc::negative_index, "colength index must be >= 0, got " + std::to_string(i));
  std::int64_t a = i / 2;
  return (i % 2 == 0) ? a * (a + 1) : (a + 1) * (a + 1);
}

std::int64_t dim_D(std::int64_t i) {
  std::int64_t v = h_quad(i) - colength(i);
  if (v != h_cub(i))
    raise(Errc::identity_check_failed,
          "h_quad - colength != h_cub at i=" + std::to_string(i));
  return v;
}

const char* host_kind_name(HostKind k) {
  return k == HostKind::quadratic_host ? "quadratic" : "cubic";
}

GridDim grid_dim(HostKind host, std::int64_t a, std::int64_t b) {
  if (host == HostKind::quadratic_host) {
    // h = h_quad, h' = h_cub
    if (a < 0) return {h_cub(b + 2 * a), false};
    if (a == 0) return {b >= 0 ? h_cub(b) : h_quad(a + b), false};
    if (b <= 0) return {h_quad(a + b), false};
  } else {
    // h = h_cub, h' = h_quad
    if (a == 0 && b >= 0) return {h_quad(b), false};
    if (a >= 0 && b <= 0) return {h_cub(a + 2 * b), false};
    if (a == -1) return {h_quad(b - 1), false};
    if (a <= -2) return {h_quad(b + 2 * a), true};
  }
  raise(Errc::region_not_specified,
        std::string(host_kind_name(host)) + " host grid dimension not specified at (a=" +
            std::to_string(a) + ", b=" + std::to_string(b) + ")");
}

GridIndex step_target(HostKind host, GridIndex at, PathStep s) {
  if (host == HostKind::quadratic_host)
    return s == PathStep::delta ? GridIndex{at.i - 1, at.j + 2} : GridIndex{at.i + 1, at.j - 1};
  return s == PathStep::delta ? GridIndex{at.i - 1, at.j + 1} : GridIndex{at.i + 2, at.j - 1};
}

std::int64_t conserved_functional(HostKind host, PathStep s, GridIndex at) {
  if (host == HostKind::quadratic_host)
    return s == PathStep::delta ? 2 * at.i + at.j : at.i + at.j;
  return s == PathStep::delta ? at.i + at.j : at.i + 2 * at.j;
}

GridIndex compose_path(HostKind host, GridIndex start, std::span<const PathStep> steps) {
  GridIndex at = start;
  for (PathStep s : steps) {
    GridIndex next = step_target(host, at, s);
    if (conserved_functional(host, s, next) != conserved_functional(host, s, at))
      raise(Errc::identity_check_failed, "path step broke its conservation law");
    at = next;
  }
  return at;
}

std::int64_t grid_degree(HostKind host, GridIndex at) {
  return host == HostKind::quadratic_host ? at.i + at.j : at.i + 2 * at.j;
}

std::pair<std::int64_t, std::int64_t> inner_witness_slot(HostKind host, std::int64_t i) {
  if (host == HostKind::quadratic_host) return {2 * i, i};
  // Derived from composing the two canonical paths: i delta steps take
  // (i, 0) to (0, i), then i gamma steps take (0, i) to (2i, 0). The slot is
  // the pair of ambient degrees of the endpoints; the displacements are
  // linear, so the formal composition also covers negative i.
  GridIndex start{i, 0};
  GridIndex mid{start.i - i, start.j + i};        // i delta displacements
  GridIndex end{mid.i + 2 * i, mid.j - i};        // i gamma displacements
  return {grid_degree(host, end), grid_degree(host, start)};
}

}  // namespace helixforge
