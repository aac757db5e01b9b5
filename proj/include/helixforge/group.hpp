#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "helixforge/errors.hpp"

namespace helixforge {

inline constexpr std::int64_t kDefaultEnumerationCap = 1'000'000;

// Floor division and remainder; C++ '/' truncates toward zero, which is the
// wrong convention for negative helix indices.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  std::int64_t r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  return a - floor_div(a, b) * b;
}

enum class Backend { cyclic, weierstrass };

/// Finite abelian group standing in for the k-points of the curve Y.
/// Two backends: Z/n and the points of y^2 = x^3 + ax + b over F_p.
class GroupDescriptor {
 public:
  static GroupDescriptor cyclic(std::int64_t n);
  static GroupDescriptor weierstrass(std::int64_t p, std::int64_t a, std::int64_t b);

  Backend backend() const noexcept { return backend_; }
  std::int64_t modulus() const;  // cyclic n
  std::int64_t prime() const;    // field prime
  std::int64_t curve_a() const;
  std::int64_t curve_b() const;

  std::int64_t order(std::int64_t cap = kDefaultEnumerationCap) const;
  std::string describe() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

 private:
  GroupDescriptor(Backend bk, std::int64_t n, std::int64_t a, std::int64_t b)
      : backend_(bk), n_(n), a_(a), b_(b) {}

  Backend backend_;
  std::int64_t n_;  // cyclic modulus or field prime
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

/// Immutable group element. Equality is structural and includes the
/// descriptor; operations on mixed descriptors raise descriptor_mismatch.
class GroupElement {
 public:
  static GroupElement residue(const GroupDescriptor& d, std::int64_t r);
  static GroupElement affine(const GroupDescriptor& d, std::int64_t x, std::int64_t y);
  static GroupElement infinity(const GroupDescriptor& d);
  static GroupElement identity(const GroupDescriptor& d);

  const GroupDescriptor& descriptor() const noexcept { return desc_; }
  bool is_identity() const noexcept;
  bool is_infinity() const noexcept { return infinity_; }
  std::int64_t residue_value() const;
  std::int64_t x() const;
  std::int64_t y() const;

  std::string describe() const;

  friend bool operator==(const GroupElement& g, const GroupElement& h) {
    if (!(g.desc_ == h.desc_)) return false;
    if (g.desc_.backend() == Backend::cyclic) return g.x_ == h.x_;
    if (g.infinity_ || h.infinity_) return g.infinity_ == h.infinity_;
    return g.x_ == h.x_ && g.y_ == h.y_;
  }
  friend bool operator!=(const GroupElement& g, const GroupElement& h) { return !(g == h); }

 private:
  GroupElement(const GroupDescriptor& d, bool inf, std::int64_t x, std::int64_t y)
      : desc_(d), infinity_(inf), x_(x), y_(y) {}

  GroupDescriptor desc_;
  bool infinity_ = false;
  std::int64_t x_ = 0;
  std::int64_t y_ = 0;
};

GroupElement add(const GroupElement& g, const GroupElement& h);
GroupElement neg(const GroupElement& g);
GroupElement sub(const GroupElement& g, const GroupElement& h);
GroupElement scalar_mul(std::int64_t k, const GroupElement& g);

/// Least k >= 1 with k*g = identity, by iteration bounded by the group order.
std::int64_t element_order(const GroupElement& g, std::int64_t cap = kDefaultEnumerationCap);

/// Complete solution set of k*x = c, in canonical order (possibly empty).
std::vector<GroupElement> solve_division(std::int64_t k, const GroupElement& c,
                                         std::int64_t cap = kDefaultEnumerationCap);

/// All group elements in canonical order: cyclic residue order, or infinity
/// first then lexicographic on (x, y).
std::vector<GroupElement> enumerate_group(const GroupDescriptor& d,
                                          std::int64_t cap = kDefaultEnumerationCap);

bool canonical_less(const GroupElement& g, const GroupElement& h);

}  // namespace helixforge
