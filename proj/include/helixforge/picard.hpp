#pragma once

#include <cstdint>

#include "helixforge/group.hpp"

namespace helixforge {

/// A class in Pic(Y): on an elliptic curve a divisor class is determined by
/// its degree and the group sum of its points, so equality of classes is
/// componentwise equality.
struct DivisorClass {
  std::int64_t degree;
  GroupElement sum;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  std::string describe() const {
    return "(" + std::to_string(degree) + ", " + sum.describe() + ")";
  }
};

/// Translation automorphism y -> y + t and its pullback action on classes.
struct Translation {
  GroupElement t;
};

DivisorClass class_add(const DivisorClass& c1, const DivisorClass& c2);
DivisorClass class_sub(const DivisorClass& c1, const DivisorClass& c2);
DivisorClass class_scale(std::int64_t k, const DivisorClass& c);
DivisorClass point_class(const GroupElement& p);
DivisorClass trivial_class(const GroupDescriptor& d);
bool is_trivial(const DivisorClass& c);

/// tau^k as a map on points: p + k*t.
GroupElement apply_translation(const Translation& tr, std::int64_t k, const GroupElement& p);

/// Pullback of a class along translation by t: (degree, sum - degree*t).
/// With this convention n_class(tr) = (0, -t) satisfies
/// pullback(tr, c) = c + deg(c) * n_class(tr).
DivisorClass pullback(const Translation& tr, const DivisorClass& c);

/// Pullback along the k-th power of the translation.
DivisorClass pullback_power(const Translation& tr, std::int64_t k, const DivisorClass& c);

DivisorClass n_class(const Translation& tr);

/// Riemann-Roch section count for a class on an elliptic curve.
std::int64_t h0(const DivisorClass& c);

/// p, q, r lie on a common line of the degree-3 embedding iff p+q+r ~ [L].
bool collinear(const GroupElement& p, const GroupElement& q, const GroupElement& r,
               const DivisorClass& embedding);

/// True iff p - q lies in the subgroup generated by the translation point.
bool same_tau_orbit(const GroupElement& p, const GroupElement& q, const Translation& tau);

}  // namespace helixforge
