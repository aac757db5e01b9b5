#include "helixforge/ibasis.hpp"

#include <string>

#include "helixforge/hilbert.hpp"

namespace helixforge {

namespace {

// Number of monomials of total degree n in three variables, zero for n < 0.
std::int64_t triangle(std::int64_t n) { return n < 0 ? 0 : (n + 1) * (n + 2) / 2; }

std::int64_t ceil_half(std::int64_t h) { return (h + 1) / 2; }

void require_nonneg(std::int64_t v, const char* what) {
  if (v < 0) raise(Errc::negative_index, std::string(what) + " must be >= 0, got " + std::to_string(v));
}

}  // namespace

BasePoints BasePoints::make(const GroupElement& p, const GroupElement& q, const GroupElement& r,
                            const Translation& psi) {
  Translation tau{scalar_mul(3, psi.t)};
  if (same_tau_orbit(p, q, tau) || same_tau_orbit(p, r, tau) || same_tau_orbit(q, r, tau))
    raise(Errc::orbit_condition, "base points must lie in pairwise different tau-orbits");
  return BasePoints(p, q, r, psi);
}

std::array<GroupElement, 3> obar(const Monomial& g, const BasePoints& base) {
  std::int64_t a = g.alpha, b = g.beta, l = g.lambda;
  return {apply_translation(base.psi(), a - 2 * b - 2 * l, base.o1()),
          apply_translation(base.psi(), b - 2 * a - 2 * l, base.o2()),
          apply_translation(base.psi(), l - 2 * a - 2 * b, base.o3())};
}

VanishingDivisor vanishing_divisor(const Monomial& g, const BasePoints& base) {
  require_nonneg(g.alpha, "alpha");
  require_nonneg(g.beta, "beta");
  require_nonneg(g.lambda, "lambda");
  Translation tau = base.tau();
  auto translates = [&](const GroupElement& pt, std::int64_t count) {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) out.push_back(apply_translation(tau, -k, pt));
    return out;
  };
  VanishingDivisor v;
  v.at_p = translates(base.p(), g.beta + g.lambda);
  v.at_q = translates(base.q(), g.alpha + g.lambda);
  v.at_r = translates(base.r(), g.alpha + g.beta);
  return v;
}

bool admissible(const Monomial& g, std::int64_t h) {
  return ceil_half(h) <= g.beta + g.lambda && h / 2 <= g.alpha + g.lambda;
}

std::int64_t count_admissible(std::int64_t a, std::int64_t b) {
  require_nonneg(b, "b");
  std::int64_t n = a + b;
  if (n < 0) return 0;
  std::int64_t alpha_max = n - ceil_half(b);
  std::int64_t beta_max = n - b / 2;
  std::int64_t count = 0;
  for (std::int64_t alpha = 0; alpha <= n; ++alpha)
    for (std::int64_t beta = 0; alpha + beta <= n; ++beta)
      if (alpha <= alpha_max && beta <= beta_max) ++count;  // lambda = n - alpha - beta
  return count;
}

std::int64_t closed_form_count(std::int64_t a, std::int64_t b) {
  require_nonneg(b, "b");
  if (2 * a + b < 0) return 0;
  std::int64_t r = b / 2;
  std::int64_t closed =
      (b % 2 == 0) ? (a + r + 1) * (a + r + 1) : (a + r + 1) * (a + r + 2);
  // independent route: inclusion-exclusion over the two exponent bounds
  std::int64_t by_ie =
      triangle(a + b) - triangle(ceil_half(b) - 1) - triangle(b / 2 - 1) + triangle(-a - 2);
  if (closed != by_ie)
    raise(Errc::identity_check_failed,
          "closed form and inclusion-exclusion disagree at (a=" + std::to_string(a) +
              ", b=" + std::to_string(b) + "): " + std::to_string(closed) + " vs " +
              std::to_string(by_ie));
  return closed;
}

std::int64_t dim_M(std::int64_t n, std::int64_t h) {
  require_nonneg(n, "n");
  require_nonneg(h, "h");
  std::int64_t count = 0;
  for (std::int64_t alpha = 0; alpha <= n; ++alpha)
    for (std::int64_t beta = 0; alpha + beta <= n; ++beta)
      if (admissible({alpha, beta, n - alpha - beta}, h)) ++count;
  if (n >= h - 1 && count != dim_M_closed_form(n, h))
    raise(Errc::identity_check_failed,
          "dim_M brute force disagrees with closed form at (n=" + std::to_string(n) +
              ", h=" + std::to_string(h) + ")");
  return count;
}

std::int64_t dim_M_closed_form(std::int64_t n, std::int64_t h) {
  require_nonneg(n, "n");
  require_nonneg(h, "h");
  std::int64_t a = h / 2;
  if (h % 2 == 0) return h_quad(n) - 2 * (a * (a + 1) / 2);
  return h_quad(n) - a * (a + 1) / 2 - (a + 1) * (a + 2) / 2;
}

}  // namespace helixforge
