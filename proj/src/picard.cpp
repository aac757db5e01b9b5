#include "helixforge/picard.hpp"

namespace helixforge {

DivisorClass class_add(const DivisorClass& c1, const DivisorClass& c2) {
  return {c1.degree + c2.degree, add(c1.sum, c2.sum)};
}

DivisorClass class_sub(const DivisorClass& c1, const DivisorClass& c2) {
  return {c1.degree - c2.degree, sub(c1.sum, c2.sum)};
}

DivisorClass class_scale(std::int64_t k, const DivisorClass& c) {
  return {k * c.degree, scalar_mul(k, c.sum)};
}

DivisorClass point_class(const GroupElement& p) { return {1, p}; }

DivisorClass trivial_class(const GroupDescriptor& d) { return {0, GroupElement::identity(d)}; }

bool is_trivial(const DivisorClass& c) { return c.degree == 0 && c.sum.is_identity(); }

GroupElement apply_translation(const Translation& tr, std::int64_t k, const GroupElement& p) {
  return add(p, scalar_mul(k, tr.t));
}

DivisorClass pullback(const Translation& tr, const DivisorClass& c) {
  return {c.degree, sub(c.sum, scalar_mul(c.degree, tr.t))};
}

DivisorClass pullback_power(const Translation& tr, std::int64_t k, const DivisorClass& c) {
  return {c.degree, sub(c.sum, scalar_mul(k * c.degree, tr.t))};
}

DivisorClass n_class(const Translation& tr) { return {0, neg(tr.t)}; }

std::int64_t h0(const DivisorClass& c) {
  if (c.degree > 0) return c.degree;
  if (c.degree == 0) return is_trivial(c) ? 1 : 0;
  return 0;
}

bool collinear(const GroupElement& p, const GroupElement& q, const GroupElement& r,
               const DivisorClass& embedding) {
  if (embedding.degree != 3)
    raise(Errc::invalid_embedding,
          "collinearity needs a degree-3 embedding class, got " + embedding.describe());
  DivisorClass s = class_add(class_add(point_class(p), point_class(q)), point_class(r));
  return s == embedding;
}

bool same_tau_orbit(const GroupElement& p, const GroupElement& q, const Translation& tau) {
  GroupElement diff = sub(p, q);
  std::int64_t ord = element_order(tau.t);
  GroupElement acc = GroupElement::identity(p.descriptor());
  for (std::int64_t k = 0; k < ord; ++k) {
    if (acc == diff) return true;
    acc = add(acc, tau.t);
  }
  return false;
}

}  // namespace helixforge
