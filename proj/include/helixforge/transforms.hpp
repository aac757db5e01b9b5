#pragma once

#include <string>
#include <vector>

#include "helixforge/helix.hpp"

namespace helixforge {

/// Noncommutative P^2 -> P^1 x P^1 constructed with respect to two points of
/// the quadratic host; the points must lie in different tau-orbits
/// (tau = psi^3).
struct BlowUpSpec {
  QuadraticHelixSpec host;
  GroupElement p;
  GroupElement q;
};

/// Noncommutative P^1 x P^1 -> P^2 constructed with respect to one point of
/// the cubic host.
struct BlowDownSpec {
  CubicHelixSpec host;
  GroupElement p;
};

/// Cremona transform of the quadratic host with respect to three pairwise
/// different-orbit, non-collinear points.
struct CremonaSpec {
  QuadraticHelixSpec host;
  GroupElement p;
  GroupElement q;
  GroupElement r;
};

std::vector<std::string> validate(const BlowUpSpec& spec);
std::vector<std::string> validate(const BlowDownSpec& spec);
std::vector<std::string> validate(const CremonaSpec& spec);

// ---------------------------------------------------------------------------
// Class-formula layer. These are total functions of the spec data; the
// validated operations below are built on top of them.
// ---------------------------------------------------------------------------

/// d_i: tau^{-j}p for i = 2j, tau^{-j}q for i = 2j+1.
GroupElement base_divisor_point(const BlowUpSpec& spec, std::int64_t i);

/// [G_i] = psi^{i*}[L] - d_i.
DivisorClass blow_up_class(const BlowUpSpec& spec, std::int64_t i);

/// [G_i] = [L_{2i}] + [L_{2i+1}] - tau^{-i}p.
DivisorClass blow_down_class(const BlowDownSpec& spec, std::int64_t i);

/// Direct Cremona class [L_{2i}] + [L_{2i+1}] - tau^{-i}(p + q + r).
DivisorClass cremona_class(const CremonaSpec& spec, std::int64_t i);

/// p' with p + q + tau p' ~ [L_0], i.e. p' = tau^{-1}(s_L - p - q).
GroupElement inverse_point(const BlowUpSpec& spec);

struct InversePoints {
  GroupElement p_prime;
  GroupElement q_prime;
};

/// (p', q') with p + p' ~ [L_1] and p + tau q' ~ [L_0].
InversePoints inverse_points(const BlowDownSpec& spec);

/// d'_i: tau^{-l}p' for i = 2l, tau^{-l}q' for i = 2l+1.
GroupElement inverse_divisor_point(const BlowDownSpec& spec, const InversePoints& inv,
                                   std::int64_t i);

// ---------------------------------------------------------------------------
// Validated operations.
// ---------------------------------------------------------------------------

struct BlowUpResult {
  CubicHelixSpec target;                  // (G_0, G_1, alpha), first canonical root
  std::vector<GroupElement> alpha_roots;  // all translations with alpha^2 = tau
  std::vector<DivisorClass> window;
  Window window_range;
  HelixReport axioms;
};

/// Errors: orbit_condition when p, q share a tau-orbit; no_square_root when
/// tau has no square root in the backend.
BlowUpResult blow_up(const BlowUpSpec& spec, Window w = {});

struct BlowDownResult {
  QuadraticHelixSpec target;            // (G_0, psi'), first canonical root
  std::vector<GroupElement> psi_roots;  // all translations with psi'^3 = tau
  std::vector<DivisorClass> window;
  Window window_range;
  HelixReport axioms;
};

/// Errors: no_cube_root when tau has no cube root in the backend.
BlowDownResult blow_down(const BlowDownSpec& spec, Window w = {});

struct CremonaResult {
  BlowUpSpec gamma2;
  BlowDownSpec gamma1;
  std::vector<DivisorClass> composed;  // blow-down of the blow-up, per index
  std::vector<DivisorClass> direct;    // direct Cremona classes
  bool matches;
  Window window_range;
};

/// Factors the Cremona transform through a blow-up at (p, q) and a blow-down
/// at r, and verifies the composed helix classes against the direct ones.
CremonaResult cremona_factor(const CremonaSpec& spec, Window w = {});

/// Inverse transform data: blow_up(spec) must succeed.
BlowDownSpec invert_blow_up(const BlowUpSpec& spec);

/// Inverse transform data: blow_down(spec) must succeed.
BlowUpSpec invert_blow_down(const BlowDownSpec& spec);

struct RoundTripMismatch {
  std::string kind;
  std::int64_t index;
  std::string expected;
  std::string actual;
};

struct RoundTripReport {
  std::vector<GroupElement> inverse_points;    // p' (quadratic host) or p', q'
  std::vector<GroupElement> recovered_points;  // p'', q'' resp. p''
  std::vector<DivisorClass> recovered_window;
  bool matches = false;
  std::vector<RoundTripMismatch> mismatches;
  std::vector<std::string> notes;  // diagnostics that do not affect matches
};

/// Forward construction, inverse, forward again; compares recovered base
/// points and the recovered helix window with the host. The chain is
/// evaluated at class level, so missing roots and orbit violations are
/// reported as notes rather than failures.
RoundTripReport verify_roundtrip(const BlowUpSpec& start, Window w = {});
RoundTripReport verify_roundtrip(const BlowDownSpec& start, Window w = {});

/// Same, but against a claimed inverse point instead of the computed one.
RoundTripReport verify_roundtrip(const BlowUpSpec& start, const GroupElement& p_prime,
                                 Window w = {});
RoundTripReport verify_roundtrip(const BlowDownSpec& start, const InversePoints& inv,
                                 Window w = {});

struct TrivialityCell {
  std::int64_t i;
  std::int64_t j;
  DivisorClass value;
};

struct TrivialityReport {
  std::int64_t cells_checked = 0;
  std::vector<TrivialityCell> failures;  // cells whose class is not trivial

  bool all_trivial() const { return failures.empty(); }
};

/// Quadratic host: the class of L_{i+j}(-d_j - d_{j+1} - tau^{-i+1} p') at
/// every cell of the window.
TrivialityReport section_triviality_check(const BlowUpSpec& spec, const GroupElement& p_prime,
                                          Window w = {});

/// Cubic host: the class of L_{i+2j}(-tau^{-j}p - d'_{i-1}).
TrivialityReport section_triviality_check(const BlowDownSpec& spec, const InversePoints& inv,
                                          Window w = {});

}  // namespace helixforge
