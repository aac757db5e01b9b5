#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "helixforge/picard.hpp"

namespace helixforge {

/// Inclusive integer range of helix / grid indices.
struct Window {
  std::int64_t lo = -10;
  std::int64_t hi = 10;

  std::int64_t length() const { return hi - lo + 1; }
};

/// Geometric data (Y, L, psi) of a quadratic Sklyanin algebra: a degree-3
/// class and a translation with psi^3 != id.
struct QuadraticHelixSpec {
  DivisorClass ell;
  Translation psi;
};

/// Geometric data of a cubic Sklyanin Z-algebra, pinned by the two degree-2
/// classes L0, L1 and the translation alpha with L_{i+2} = alpha^* L_i.
struct CubicHelixSpec {
  DivisorClass ell0;
  DivisorClass ell1;
  Translation alpha;
};

/// Named invariant violations; empty means the spec is valid.
std::vector<std::string> validate(const QuadraticHelixSpec& spec);
std::vector<std::string> validate(const CubicHelixSpec& spec);
void require_valid(const QuadraticHelixSpec& spec);
void require_valid(const CubicHelixSpec& spec);

/// tau = psi^3 resp. tau = alpha^2.
Translation tau_of(const QuadraticHelixSpec& spec);
Translation tau_of(const CubicHelixSpec& spec);

DivisorClass helix_class(const QuadraticHelixSpec& spec, std::int64_t i);
DivisorClass helix_class(const CubicHelixSpec& spec, std::int64_t i);

std::vector<DivisorClass> helix_window(const QuadraticHelixSpec& spec, Window w);
std::vector<DivisorClass> helix_window(const CubicHelixSpec& spec, Window w);

struct AxiomResult {
  std::string name;
  bool pass;
  std::string details;
};

struct HelixReport {
  std::vector<AxiomResult> axioms;
  std::vector<GroupElement> shift_roots;  // translations realizing the shift axiom

  bool all_pass() const;
  bool core_pass() const;  // everything except the shift axiom
  const AxiomResult* find(const std::string& name) const;
};

/// Quadratic elliptic-helix axioms on a window of consecutive classes:
/// degree 3, [G_0] != [G_1], second difference trivial, and the existence of
/// a translation psi with psi^*(G_i) = G_{i+1}.
HelixReport validate_quadratic_helix(std::span<const DivisorClass> window,
                                     std::int64_t cap = kDefaultEnumerationCap);

/// Cubic helix axioms: degree 2, [G_0] != [G_2], third-order relation
/// trivial, and alpha^*(G_i) = G_{i+2} for some translation alpha (checked
/// against the supplied candidate when one is given).
HelixReport validate_cubic_helix(std::span<const DivisorClass> window,
                                 std::optional<Translation> alpha = std::nullopt,
                                 std::int64_t cap = kDefaultEnumerationCap);

/// dim Gamma(Y, L_i x ... x L_{j-1}) of the twisted coordinate ring.
std::int64_t thcr_dim(const QuadraticHelixSpec& spec, std::int64_t i, std::int64_t j);
std::int64_t thcr_dim(const CubicHelixSpec& spec, std::int64_t i, std::int64_t j);

}  // namespace helixforge
