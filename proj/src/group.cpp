#include "helixforge/group.hpp"

#include <cmath>
#include <utility>

namespace helixforge {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::descriptor_mismatch: return "descriptor-mismatch";
    case Errc::invalid_descriptor: return "invalid-descriptor";
    case Errc::invalid_element: return "invalid-element";
    case Errc::capacity_exceeded: return "capacity-exceeded";
    case Errc::invalid_embedding: return "invalid-embedding";
    case Errc::window_too_short: return "window-too-short";
    case Errc::orbit_condition: return "orbit-condition";
    case Errc::collinear_points: return "collinear-points";
    case Errc::no_square_root: return "no-square-root";
    case Errc::no_cube_root: return "no-cube-root";
    case Errc::region_not_specified: return "region-not-specified";
    case Errc::negative_index: return "negative-index";
    case Errc::identity_check_failed: return "identity-check-failed";
    case Errc::config_error: return "config-error";
  }
  return "unknown";
}

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  // extended Euclid; a must be invertible mod p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = floor_mod(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) raise(Errc::invalid_element, "element not invertible modulo " + std::to_string(p));
  return floor_mod(t, p);
}

void require_same(const GroupElement& g, const GroupElement& h) {
  if (!(g.descriptor() == h.descriptor()))
    raise(Errc::descriptor_mismatch, "operands from " + g.descriptor().describe() + " and " +
                                         h.descriptor().describe());
}

}  // namespace

GroupDescriptor GroupDescriptor::cyclic(std::int64_t n) {
  if (n < 1) raise(Errc::invalid_descriptor, "cyclic order must be >= 1, got " + std::to_string(n));
  return GroupDescriptor(Backend::cyclic, n, 0, 0);
}

GroupDescriptor GroupDescriptor::weierstrass(std::int64_t p, std::int64_t a, std::int64_t b) {
  if (p <= 3 || !is_prime(p))
    raise(Errc::invalid_descriptor, "field characteristic must be a prime > 3, got " + std::to_string(p));
  std::int64_t aa = floor_mod(a, p);
  std::int64_t bb = floor_mod(b, p);
  std::int64_t disc = floor_mod(4 * floor_mod(aa * aa % p * aa, p) + 27 * bb % p * bb, p);
  if (disc == 0)
    raise(Errc::invalid_descriptor, "singular curve: 4a^3 + 27b^2 = 0 in F_" + std::to_string(p));
  return GroupDescriptor(Backend::weierstrass, p, aa, bb);
}

std::int64_t GroupDescriptor::modulus() const {
  if (backend_ != Backend::cyclic) raise(Errc::invalid_descriptor, "modulus() on non-cyclic group");
  return n_;
}

std::int64_t GroupDescriptor::prime() const {
  if (backend_ != Backend::weierstrass) raise(Errc::invalid_descriptor, "prime() on non-curve group");
  return n_;
}

std::int64_t GroupDescriptor::curve_a() const {
  if (backend_ != Backend::weierstrass) raise(Errc::invalid_descriptor, "curve_a() on non-curve group");
  return a_;
}

std::int64_t GroupDescriptor::curve_b() const {
  if (backend_ != Backend::weierstrass) raise(Errc::invalid_descriptor, "curve_b() on non-curve group");
  return b_;
}

std::int64_t GroupDescriptor::order(std::int64_t cap) const {
  if (backend_ == Backend::cyclic) {
    if (n_ > cap) raise(Errc::capacity_exceeded, describe() + " exceeds enumeration cap");
    return n_;
  }
  return static_cast<std::int64_t>(enumerate_group(*this, cap).size());
}

std::string GroupDescriptor::describe() const {
  if (backend_ == Backend::cyclic) return "cyclic(" + std::to_string(n_) + ")";
  return "weierstrass(p=" + std::to_string(n_) + ", a=" + std::to_string(a_) +
         ", b=" + std::to_string(b_) + ")";
}

GroupElement GroupElement::residue(const GroupDescriptor& d, std::int64_t r) {
  if (d.backend() != Backend::cyclic)
    raise(Errc::invalid_element, "residue element requested on " + d.describe());
  return GroupElement(d, false, floor_mod(r, d.modulus()), 0);
}

GroupElement GroupElement::affine(const GroupDescriptor& d, std::int64_t x, std::int64_t y) {
  if (d.backend() != Backend::weierstrass)
    raise(Errc::invalid_element, "affine point requested on " + d.describe());
  std::int64_t p = d.prime();
  std::int64_t xx = floor_mod(x, p);
  std::int64_t yy = floor_mod(y, p);
  std::int64_t lhs = yy * yy % p;
  std::int64_t rhs = floor_mod(xx * xx % p * xx + d.curve_a() * xx + d.curve_b(), p);
  if (lhs != rhs)
    raise(Errc::invalid_element, "(" + std::to_string(xx) + "," + std::to_string(yy) +
                                     ") does not satisfy the curve equation over F_" + std::to_string(p));
  return GroupElement(d, false, xx, yy);
}

GroupElement GroupElement::infinity(const GroupDescriptor& d) {
  if (d.backend() != Backend::weierstrass)
    raise(Errc::invalid_element, "point at infinity requested on " + d.describe());
  return GroupElement(d, true, 0, 0);
}

GroupElement GroupElement::identity(const GroupDescriptor& d) {
  return d.backend() == Backend::cyclic ? residue(d, 0) : infinity(d);
}

bool GroupElement::is_identity() const noexcept {
  return desc_.backend() == Backend::cyclic ? x_ == 0 : infinity_;
}

std::int64_t GroupElement::residue_value() const {
  if (desc_.backend() != Backend::cyclic) raise(Errc::invalid_element, "residue_value() on curve point");
  return x_;
}

std::int64_t GroupElement::x() const {
  if (desc_.backend() != Backend::weierstrass || infinity_)
    raise(Errc::invalid_element, "x() needs an affine curve point");
  return x_;
}

std::int64_t GroupElement::y() const {
  if (desc_.backend() != Backend::weierstrass || infinity_)
    raise(Errc::invalid_element, "y() needs an affine curve point");
  return y_;
}

std::string GroupElement::describe() const {
  if (desc_.backend() == Backend::cyclic) return std::to_string(x_);
  if (infinity_) return "inf";
  return "(" + std::to_string(x_) + "," + std::to_string(y_) + ")";
}

GroupElement add(const GroupElement& g, const GroupElement& h) {
  require_same(g, h);
  const GroupDescriptor& d = g.descriptor();
  if (d.backend() == Backend::cyclic)
    return GroupElement::residue(d, g.residue_value() + h.residue_value());

  // chord-tangent law with infinity as identity
  if (g.is_infinity()) return h;
  if (h.is_infinity()) return g;
  std::int64_t p = d.prime();
  std::int64_t x1 = g.x(), y1 = g.y(), x2 = h.x(), y2 = h.y();
  std::int64_t lambda;
  if (x1 == x2) {
    if (floor_mod(y1 + y2, p) == 0) return GroupElement::infinity(d);
    // x1 == x2 with y1 != -y2 forces y1 == y2 != 0: tangent case
    lambda = floor_mod((3 * x1 % p * x1 + d.curve_a()) % p * mod_inv(2 * y1, p), p);
  } else {
    lambda = floor_mod((y2 - y1) * mod_inv(x2 - x1, p), p);
  }
  std::int64_t x3 = floor_mod(lambda * lambda - x1 - x2, p);
  std::int64_t y3 = floor_mod(lambda * (x1 - x3) - y1, p);
  return GroupElement::affine(d, x3, y3);
}

GroupElement neg(const GroupElement& g) {
  const GroupDescriptor& d = g.descriptor();
  if (d.backend() == Backend::cyclic) return GroupElement::residue(d, -g.residue_value());
  if (g.is_infinity()) return g;
  return GroupElement::affine(d, g.x(), -g.y());
}

GroupElement sub(const GroupElement& g, const GroupElement& h) { return add(g, neg(h)); }

GroupElement scalar_mul(std::int64_t k, const GroupElement& g) {
  if (k < 0) return scalar_mul(-k, neg(g));
  GroupElement acc = GroupElement::identity(g.descriptor());
  GroupElement base = g;
  std::uint64_t n = static_cast<std::uint64_t>(k);
  while (n != 0) {
    if (n & 1) acc = add(acc, base);
    n >>= 1;
    if (n != 0) base = add(base, base);
  }
  return acc;
}

std::int64_t element_order(const GroupElement& g, std::int64_t cap) {
  GroupElement acc = g;
  std::int64_t k = 1;
  while (!acc.is_identity()) {
    acc = add(acc, g);
    ++k;
    if (k > cap) raise(Errc::capacity_exceeded, "element order exceeds enumeration cap");
  }
  return k;
}

std::vector<GroupElement> enumerate_group(const GroupDescriptor& d, std::int64_t cap) {
  std::vector<GroupElement> out;
  if (d.backend() == Backend::cyclic) {
    std::int64_t n = d.modulus();
    if (n > cap) raise(Errc::capacity_exceeded, d.describe() + " exceeds enumeration cap");
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) out.push_back(GroupElement::residue(d, r));
    return out;
  }
  std::int64_t p = d.prime();
  if (p > cap) raise(Errc::capacity_exceeded, d.describe() + " exceeds enumeration cap");
  // square-root table: roots[r] lists all y with y^2 = r (mod p)
  std::vector<std::vector<std::int64_t>> roots(static_cast<std::size_t>(p));
  for (std::int64_t y = 0; y < p; ++y) roots[static_cast<std::size_t>(y * y % p)].push_back(y);
  out.push_back(GroupElement::infinity(d));
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t rhs = floor_mod(x * x % p * x + d.curve_a() * x + d.curve_b(), p);
    for (std::int64_t y : roots[static_cast<std::size_t>(rhs)])
      out.push_back(GroupElement::affine(d, x, y));
  }
  if (static_cast<std::int64_t>(out.size()) > cap)
    raise(Errc::capacity_exceeded, d.describe() + " exceeds enumeration cap");
  return out;
}

std::vector<GroupElement> solve_division(std::int64_t k, const GroupElement& c, std::int64_t cap) {
  if (k < 1) raise(Errc::invalid_element, "division index must be >= 1, got " + std::to_string(k));
  std::vector<GroupElement> out;
  for (const GroupElement& x : enumerate_group(c.descriptor(), cap))
    if (scalar_mul(k, x) == c) out.push_back(x);
  return out;
}

bool canonical_less(const GroupElement& g, const GroupElement& h) {
  if (g.descriptor().backend() == Backend::cyclic) return g.residue_value() < h.residue_value();
  if (g.is_infinity() || h.is_infinity()) return g.is_infinity() && !h.is_infinity();
  if (g.x() != h.x()) return g.x() < h.x();
  return g.y() < h.y();
}

}  // namespace helixforge
