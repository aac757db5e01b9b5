#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "helixforge/picard.hpp"

namespace helixforge {

/// Commutative monomial x^alpha y^beta z^lambda. The third exponent is
/// written lambda throughout; it plays the role the source material's third
/// Greek letter would, which collides with the transform name.
struct Monomial {
  std::int64_t alpha;
  std::int64_t beta;
  std::int64_t lambda;

  std::int64_t total_degree() const { return alpha + beta + lambda; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Base-point data for the monomial basis of a quadratic Sklyanin algebra:
/// o_i are the psi-translates of three points p, q, r lying in pairwise
/// different tau-orbits (tau = psi^3).
class BasePoints {
 public:
  static BasePoints make(const GroupElement& p, const GroupElement& q, const GroupElement& r,
                         const Translation& psi);

  const GroupElement& p() const { return p_; }
  const GroupElement& q() const { return q_; }
  const GroupElement& r() const { return r_; }
  const Translation& psi() const { return psi_; }
  Translation tau() const { return {scalar_mul(3, psi_.t)}; }

  GroupElement o1() const { return add(p_, psi_.t); }
  GroupElement o2() const { return add(q_, psi_.t); }
  GroupElement o3() const { return add(r_, psi_.t); }

 private:
  BasePoints(GroupElement p, GroupElement q, GroupElement r, Translation psi)
      : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), psi_(std::move(psi)) {}

  GroupElement p_, q_, r_;
  Translation psi_;
};

/// Orbit of the base triple under the monomial action:
/// (psi^{a-2b-2l} o1, psi^{b-2a-2l} o2, psi^{l-2a-2b} o3).
std::array<GroupElement, 3> obar(const Monomial& g, const BasePoints& base);

struct VanishingDivisor {
  std::vector<GroupElement> at_p;  // tau^0 p .. tau^{-(beta+lambda-1)} p
  std::vector<GroupElement> at_q;  // tau^0 q .. tau^{-(alpha+lambda-1)} q
  std::vector<GroupElement> at_r;  // tau^0 r .. tau^{-(alpha+beta-1)} r
};

VanishingDivisor vanishing_divisor(const Monomial& g, const BasePoints& base);

/// ceil(h/2) <= beta + lambda and floor(h/2) <= alpha + lambda.
bool admissible(const Monomial& g, std::int64_t h);

/// Brute-force count of monomials with alpha+beta+lambda = a+b,
/// alpha <= a+b-ceil(b/2), beta <= a+b-floor(b/2).
std::int64_t count_admissible(std::int64_t a, std::int64_t b);

/// Closed form (a+r+1)^2 / (a+r+1)(a+r+2) for b = 2r / 2r+1, zero when
/// 2a+b < 0, cross-checked against an independent inclusion-exclusion
/// evaluation. The two routes agree exactly on a <= 0, the regime the
/// derivation covers; disagreement raises identity_check_failed.
std::int64_t closed_form_count(std::int64_t a, std::int64_t b);

/// Brute-force count of h-admissible monomials of total degree n; checked
/// against the closed form whenever n >= h-1.
std::int64_t dim_M(std::int64_t n, std::int64_t h);

/// The closed form itself: h_quad(n) minus the colength correction.
std::int64_t dim_M_closed_form(std::int64_t n, std::int64_t h);

}  // namespace helixforge
