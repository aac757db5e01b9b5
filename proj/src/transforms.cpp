#include "helixforge/transforms.hpp"

namespace helixforge {

namespace {

CubicHelixSpec cubic_target_of(const BlowUpSpec& spec, const GroupElement& alpha_root) {
  return {blow_up_class(spec, 0), blow_up_class(spec, 1), Translation{alpha_root}};
}

QuadraticHelixSpec quadratic_target_of(const BlowDownSpec& spec, const GroupElement& psi_root) {
  return {blow_down_class(spec, 0), Translation{psi_root}};
}

void append(std::vector<std::string>& out, std::vector<std::string> more) {
  for (auto& s : more) out.push_back(std::move(s));
}

}  // namespace

std::vector<std::string> validate(const BlowUpSpec& spec) {
  std::vector<std::string> out;
  append(out, validate(spec.host));
  if (out.empty() && same_tau_orbit(spec.p, spec.q, tau_of(spec.host)))
    out.push_back("p and q must lie in different tau-orbits");
  return out;
}

std::vector<std::string> validate(const BlowDownSpec& spec) { return validate(spec.host); }

std::vector<std::string> validate(const CremonaSpec& spec) {
  std::vector<std::string> out;
  append(out, validate(spec.host));
  if (!out.empty()) return out;
  Translation tau = tau_of(spec.host);
  if (same_tau_orbit(spec.p, spec.q, tau) || same_tau_orbit(spec.p, spec.r, tau) ||
      same_tau_orbit(spec.q, spec.r, tau))
    out.push_back("p, q, r must lie in pairwise different tau-orbits");
  if (collinear(spec.p, spec.q, spec.r, spec.host.ell))
    out.push_back("p, q, r must be non-collinear with respect to [L]");
  return out;
}

GroupElement base_divisor_point(const BlowUpSpec& spec, std::int64_t i) {
  Translation tau = tau_of(spec.host);
  std::int64_t j = floor_div(i, 2);
  const GroupElement& base = floor_mod(i, 2) == 0 ? spec.p : spec.q;
  return apply_translation(tau, -j, base);
}

DivisorClass blow_up_class(const BlowUpSpec& spec, std::int64_t i) {
  return class_sub(helix_class(spec.host, i), point_class(base_divisor_point(spec, i)));
}

DivisorClass blow_down_class(const BlowDownSpec& spec, std::int64_t i) {
  DivisorClass pair = class_add(helix_class(spec.host, 2 * i), helix_class(spec.host, 2 * i + 1));
  GroupElement pt = apply_translation(tau_of(spec.host), -i, spec.p);
  return class_sub(pair, point_class(pt));
}

DivisorClass cremona_class(const CremonaSpec& spec, std::int64_t i) {
  Translation tau = tau_of(spec.host);
  DivisorClass acc =
      class_add(helix_class(spec.host, 2 * i), helix_class(spec.host, 2 * i + 1));
  acc = class_sub(acc, point_class(apply_translation(tau, -i, spec.p)));
  acc = class_sub(acc, point_class(apply_translation(tau, -i, spec.q)));
  acc = class_sub(acc, point_class(apply_translation(tau, -i, spec.r)));
  return acc;
}

GroupElement inverse_point(const BlowUpSpec& spec) {
  Translation tau = tau_of(spec.host);
  return apply_translation(tau, -1, sub(sub(spec.host.ell.sum, spec.p), spec.q));
}

InversePoints inverse_points(const BlowDownSpec& spec) {
  Translation tau = tau_of(spec.host);
  GroupElement p_prime = sub(spec.host.ell1.sum, spec.p);
  GroupElement q_prime = apply_translation(tau, -1, sub(spec.host.ell0.sum, spec.p));
  return {p_prime, q_prime};
}

GroupElement inverse_divisor_point(const BlowDownSpec& spec, const InversePoints& inv,
                                   std::int64_t i) {
  Translation tau = tau_of(spec.host);
  std::int64_t l = floor_div(i, 2);
  const GroupElement& base = floor_mod(i, 2) == 0 ? inv.p_prime : inv.q_prime;
  return apply_translation(tau, -l, base);
}

BlowUpResult blow_up(const BlowUpSpec& spec, Window w) {
  require_valid(spec.host);
  if (same_tau_orbit(spec.p, spec.q, tau_of(spec.host)))
    raise(Errc::orbit_condition, "blow-up points p=" + spec.p.describe() + " and q=" +
                                     spec.q.describe() + " lie in the same tau-orbit");
  std::vector<GroupElement> roots = solve_division(2, tau_of(spec.host).t);
  if (roots.empty())
    raise(Errc::no_square_root,
          "no translation alpha with alpha^2 = tau exists in " + spec.p.descriptor().describe());

  BlowUpResult res{cubic_target_of(spec, roots.front()), std::move(roots), {}, w, {}};
  res.window.reserve(static_cast<std::size_t>(w.length()));
  for (std::int64_t i = w.lo; i <= w.hi; ++i) res.window.push_back(blow_up_class(spec, i));
  res.axioms = validate_cubic_helix(res.window, res.target.alpha);
  return res;
}

BlowDownResult blow_down(const BlowDownSpec& spec, Window w) {
  require_valid(spec.host);
  std::vector<GroupElement> roots = solve_division(3, tau_of(spec.host).t);
  if (roots.empty())
    raise(Errc::no_cube_root,
          "no translation psi with psi^3 = tau exists in " + spec.p.descriptor().describe());

  BlowDownResult res{quadratic_target_of(spec, roots.front()), std::move(roots), {}, w, {}};
  res.window.reserve(static_cast<std::size_t>(w.length()));
  for (std::int64_t i = w.lo; i <= w.hi; ++i) res.window.push_back(blow_down_class(spec, i));
  res.axioms = validate_quadratic_helix(res.window);
  return res;
}

CremonaResult cremona_factor(const CremonaSpec& spec, Window w) {
  require_valid(spec.host);
  Translation tau = tau_of(spec.host);
  if (same_tau_orbit(spec.p, spec.q, tau) || same_tau_orbit(spec.p, spec.r, tau) ||
      same_tau_orbit(spec.q, spec.r, tau))
    raise(Errc::orbit_condition, "Cremona points must lie in pairwise different tau-orbits");
  if (collinear(spec.p, spec.q, spec.r, spec.host.ell))
    raise(Errc::collinear_points, "Cremona points are collinear with respect to [L]");

  BlowUpSpec gamma2{spec.host, spec.p, spec.q};
  BlowUpResult up = blow_up(gamma2, w);
  BlowDownSpec gamma1{up.target, spec.r};
  CremonaResult res{std::move(gamma2), std::move(gamma1), {}, {}, true, w};

  res.composed.reserve(static_cast<std::size_t>(w.length()));
  res.direct.reserve(static_cast<std::size_t>(w.length()));
  for (std::int64_t i = w.lo; i <= w.hi; ++i) {
    // blow-down formula applied to the blow-up classes at r
    DivisorClass pair =
        class_add(blow_up_class(res.gamma2, 2 * i), blow_up_class(res.gamma2, 2 * i + 1));
    DivisorClass composed =
        class_sub(pair, point_class(apply_translation(tau, -i, spec.r)));
    DivisorClass direct = cremona_class(spec, i);
    if (!(composed == direct)) res.matches = false;
    res.composed.push_back(composed);
    res.direct.push_back(direct);
  }
  return res;
}

BlowDownSpec invert_blow_up(const BlowUpSpec& spec) {
  BlowUpResult up = blow_up(spec, Window{0, 3});
  return BlowDownSpec{up.target, inverse_point(spec)};
}

BlowUpSpec invert_blow_down(const BlowDownSpec& spec) {
  BlowDownResult down = blow_down(spec, Window{0, 2});
  InversePoints inv = inverse_points(spec);
  return BlowUpSpec{down.target, inv.p_prime, inv.q_prime};
}

namespace {

void note_spec_issues(RoundTripReport& rep, const std::vector<std::string>& issues,
                      const char* which) {
  for (const auto& s : issues) rep.notes.push_back(std::string(which) + ": " + s);
}

void note_missing_root(RoundTripReport& rep, std::int64_t k, const Translation& tau,
                       const char* name) {
  if (solve_division(k, tau.t).empty())
    rep.notes.push_back(std::string(name) + ": no root of order " + std::to_string(k) +
                        " for tau in this backend; target spec cannot be packaged");
}

void compare_point(RoundTripReport& rep, const char* kind, std::int64_t index,
                   const GroupElement& expected, const GroupElement& actual) {
  if (!(expected == actual))
    rep.mismatches.push_back({kind, index, expected.describe(), actual.describe()});
}

}  // namespace

RoundTripReport verify_roundtrip(const BlowUpSpec& start, const GroupElement& p_prime,
                                 Window w) {
  RoundTripReport rep;
  note_spec_issues(rep, validate(start), "start spec");
  Translation tau = tau_of(start.host);
  note_missing_root(rep, 2, tau, "alpha");

  rep.inverse_points.push_back(p_prime);

  // recovered helix: [L''_i] = [G_{2i}] + [G_{2i+1}] - tau^{-i} p'
  rep.recovered_window.reserve(static_cast<std::size_t>(w.length()));
  for (std::int64_t i = w.lo; i <= w.hi; ++i) {
    DivisorClass pair = class_add(blow_up_class(start, 2 * i), blow_up_class(start, 2 * i + 1));
    DivisorClass rec = class_sub(pair, point_class(apply_translation(tau, -i, p_prime)));
    DivisorClass host = helix_class(start.host, i);
    if (!(rec == host))
      rep.mismatches.push_back({"helix-class", i, host.describe(), rec.describe()});
    rep.recovered_window.push_back(rec);
  }

  // recovered base points from the target cubic data and p'
  DivisorClass g0 = blow_up_class(start, 0);
  DivisorClass g1 = blow_up_class(start, 1);
  GroupElement p_rec = sub(g1.sum, p_prime);
  GroupElement q_rec = apply_translation(tau, -1, sub(g0.sum, p_prime));
  rep.recovered_points.push_back(p_rec);
  rep.recovered_points.push_back(q_rec);
  compare_point(rep, "base-point-p", 0, start.p, p_rec);
  compare_point(rep, "base-point-q", 1, start.q, q_rec);

  rep.matches = rep.mismatches.empty();
  return rep;
}

RoundTripReport verify_roundtrip(const BlowUpSpec& start, Window w) {
  return verify_roundtrip(start, inverse_point(start), w);
}

RoundTripReport verify_roundtrip(const BlowDownSpec& start, const InversePoints& inv, Window w) {
  RoundTripReport rep;
  note_spec_issues(rep, validate(start), "start spec");
  Translation tau = tau_of(start.host);
  note_missing_root(rep, 3, tau, "psi");
  if (same_tau_orbit(inv.p_prime, inv.q_prime, tau))
    rep.notes.push_back(
        "inverse points p' and q' lie in the same tau-orbit; the inverse spec is degenerate");

  rep.inverse_points.push_back(inv.p_prime);
  rep.inverse_points.push_back(inv.q_prime);

  // recovered helix: [L''_i] = [G_i] - d'_i
  rep.recovered_window.reserve(static_cast<std::size_t>(w.length()));
  for (std::int64_t i = w.lo; i <= w.hi; ++i) {
    DivisorClass rec = class_sub(blow_down_class(start, i),
                                 point_class(inverse_divisor_point(start, inv, i)));
    DivisorClass host = helix_class(start.host, i);
    if (!(rec == host))
      rep.mismatches.push_back({"helix-class", i, host.describe(), rec.describe()});
    rep.recovered_window.push_back(rec);
  }

  // recovered base point: p' + q' + tau p'' ~ [G_0]
  DivisorClass g0 = blow_down_class(start, 0);
  GroupElement p_rec = apply_translation(tau, -1, sub(sub(g0.sum, inv.p_prime), inv.q_prime));
  rep.recovered_points.push_back(p_rec);
  compare_point(rep, "base-point-p", 0, start.p, p_rec);

  rep.matches = rep.mismatches.empty();
  return rep;
}

RoundTripReport verify_roundtrip(const BlowDownSpec& start, Window w) {
  return verify_roundtrip(start, inverse_points(start), w);
}

TrivialityReport section_triviality_check(const BlowUpSpec& spec, const GroupElement& p_prime,
                                          Window w) {
  TrivialityReport rep;
  Translation tau = tau_of(spec.host);
  for (std::int64_t i = w.lo; i <= w.hi; ++i) {
    for (std::int64_t j = w.lo; j <= w.hi; ++j) {
      DivisorClass c = helix_class(spec.host, i + j);
      c = class_sub(c, point_class(base_divisor_point(spec, j)));
      c = class_sub(c, point_class(base_divisor_point(spec, j + 1)));
      c = class_sub(c, point_class(apply_translation(tau, -i + 1, p_prime)));
      ++rep.cells_checked;
      if (!is_trivial(c)) rep.failures.push_back({i, j, c});
    }
  }
  return rep;
}

TrivialityReport section_triviality_check(const BlowDownSpec& spec, const InversePoints& inv,
                                          Window w) {
  TrivialityReport rep;
  Translation tau = tau_of(spec.host);
  for (std::int64_t i = w.lo; i <= w.hi; ++i) {
    for (std::int64_t j = w.lo; j <= w.hi; ++j) {
      DivisorClass c = helix_class(spec.host, i + 2 * j);
      c = class_sub(c, point_class(apply_translation(tau, -j, spec.p)));
      c = class_sub(c, point_class(inverse_divisor_point(spec, inv, i - 1)));
      ++rep.cells_checked;
      if (!is_trivial(c)) rep.failures.push_back({i, j, c});
    }
  }
  return rep;
}

}  // namespace helixforge
