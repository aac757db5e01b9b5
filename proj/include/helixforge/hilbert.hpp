#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "helixforge/errors.hpp"

namespace helixforge {

/// Hilbert function of a quadratic AS-regular algebra (series 1/(1-t)^3).
std::int64_t h_quad(std::int64_t n);

/// Hilbert function of a cubic AS-regular Z-algebra (series 1/(1-t)^2(1-t^2)).
std::int64_t h_cub(std::int64_t n);

/// Colength of the product of i ideal bimodules inside the identity bimodule.
std::int64_t colength(std::int64_t i);

/// dim D_{m,m+i} = h_quad(i) - colength(i); checked against h_cub(i).
std::int64_t dim_D(std::int64_t i);

/// Which algebra plays the ambient role in the Z^2-grid. For a quadratic
/// host h is the quadratic Hilbert function and h' the cubic one; for a
/// cubic host the roles swap.
enum class HostKind { quadratic_host, cubic_host };

const char* host_kind_name(HostKind k);

struct GridIndex {
  std::int64_t i;
  std::int64_t j;

  friend bool operator==(const GridIndex&, const GridIndex&) = default;
};

enum class PathStep { delta, gamma };

struct GridDim {
  std::int64_t value;
  bool conjectural;
};

/// Dimension of the grid space at relative offset (a, b); independent of the
/// base index. The cubic-host region a <= -2 is returned with a conjectural
/// marker; offsets with a > 0 and b > 0 are not covered by any clause.
GridDim grid_dim(HostKind host, std::int64_t a, std::int64_t b);

GridIndex step_target(HostKind host, GridIndex at, PathStep s);

/// The linear functional conserved by the given step type.
std::int64_t conserved_functional(HostKind host, PathStep s, GridIndex at);

/// Fold the step displacements from `start`, asserting per-step conservation.
GridIndex compose_path(HostKind host, GridIndex start, std::span<const PathStep> steps);

/// Ambient algebra degree of a grid index: i + j (quadratic host) or
/// i + 2j (cubic host).
std::int64_t grid_degree(HostKind host, GridIndex at);

/// (row, column) degrees of the inner-morphism witness z_i in Frac(A).
std::pair<std::int64_t, std::int64_t> inner_witness_slot(HostKind host, std::int64_t i);

}  // namespace helixforge
