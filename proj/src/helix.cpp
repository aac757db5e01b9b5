#include "helixforge/helix.hpp"

namespace helixforge {

namespace {

std::string rule_degree(const char* which, std::int64_t want, const DivisorClass& got) {
  return std::string(which) + " must have degree " + std::to_string(want) + ", got " +
         got.describe();
}

// Constant consecutive difference s(G_i) - s(G_{i+step}) across the window,
// or nullopt when the differences disagree.
std::optional<GroupElement> constant_shift(std::span<const DivisorClass> w, std::size_t step) {
  std::optional<GroupElement> d;
  for (std::size_t i = 0; i + step < w.size(); ++i) {
    GroupElement diff = sub(w[i].sum, w[i + step].sum);
    if (!d) {
      d = diff;
    } else if (!(*d == diff)) {
      return std::nullopt;
    }
  }
  return d;
}

}  // namespace

std::vector<std::string> validate(const QuadraticHelixSpec& spec) {
  std::vector<std::string> out;
  if (spec.ell.degree != 3) out.push_back(rule_degree("L", 3, spec.ell));
  if (scalar_mul(3, spec.psi.t).is_identity())
    out.push_back("tau = psi^3 must not be the identity translation");
  return out;
}

std::vector<std::string> validate(const CubicHelixSpec& spec) {
  std::vector<std::string> out;
  if (spec.ell0.degree != 2) out.push_back(rule_degree("L0", 2, spec.ell0));
  if (spec.ell1.degree != 2) out.push_back(rule_degree("L1", 2, spec.ell1));
  if (spec.alpha.t.is_identity() || scalar_mul(2, spec.alpha.t).is_identity())
    out.push_back("alpha must be translation by a point of order at least 3");
  return out;
}

void require_valid(const QuadraticHelixSpec& spec) {
  auto v = validate(spec);
  if (!v.empty()) raise(Errc::invalid_descriptor, "quadratic helix spec: " + v.front());
}

void require_valid(const CubicHelixSpec& spec) {
  auto v = validate(spec);
  if (!v.empty()) raise(Errc::invalid_descriptor, "cubic helix spec: " + v.front());
}

Translation tau_of(const QuadraticHelixSpec& spec) { return {scalar_mul(3, spec.psi.t)}; }

Translation tau_of(const CubicHelixSpec& spec) { return {scalar_mul(2, spec.alpha.t)}; }

DivisorClass helix_class(const QuadraticHelixSpec& spec, std::int64_t i) {
  return pullback_power(spec.psi, i, spec.ell);
}

DivisorClass helix_class(const CubicHelixSpec& spec, std::int64_t i) {
  const DivisorClass& base = floor_mod(i, 2) == 0 ? spec.ell0 : spec.ell1;
  return pullback_power(spec.alpha, floor_div(i, 2), base);
}

std::vector<DivisorClass> helix_window(const QuadraticHelixSpec& spec, Window w) {
  std::vector<DivisorClass> out;
  out.reserve(static_cast<std::size_t>(w.length()));
  for (std::int64_t i = w.lo; i <= w.hi; ++i) out.push_back(helix_class(spec, i));
  return out;
}

std::vector<DivisorClass> helix_window(const CubicHelixSpec& spec, Window w) {
  std::vector<DivisorClass> out;
  out.reserve(static_cast<std::size_t>(w.length()));
  for (std::int64_t i = w.lo; i <= w.hi; ++i) out.push_back(helix_class(spec, i));
  return out;
}

bool HelixReport::all_pass() const {
  for (const auto& a : axioms)
    if (!a.pass) return false;
  return true;
}

bool HelixReport::core_pass() const {
  for (const auto& a : axioms)
    if (!a.pass && a.name != "psi-shift" && a.name != "alpha-shift") return false;
  return true;
}

const AxiomResult* HelixReport::find(const std::string& name) const {
  for (const auto& a : axioms)
    if (a.name == name) return &a;
  return nullptr;
}

HelixReport validate_quadratic_helix(std::span<const DivisorClass> window, std::int64_t cap) {
  if (window.size() < 3)
    raise(Errc::window_too_short, "quadratic helix validation needs at least 3 classes");
  HelixReport rep;

  bool deg_ok = true;
  std::string deg_detail;
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (window[i].degree != 3) {
      deg_ok = false;
      deg_detail = "class " + std::to_string(i) + " is " + window[i].describe();
      break;
    }
  }
  rep.axioms.push_back({"degree", deg_ok, deg_detail});

  bool distinct = !(window[0] == window[1]);
  rep.axioms.push_back({"g0-not-g1", distinct, distinct ? "" : "[G_0] = [G_1]"});

  bool rel_ok = true;
  std::string rel_detail;
  for (std::size_t i = 0; i + 2 < window.size(); ++i) {
    DivisorClass d =
        class_add(class_sub(window[i], class_scale(2, window[i + 1])), window[i + 2]);
    if (!is_trivial(d)) {
      rel_ok = false;
      rel_detail = "second difference at offset " + std::to_string(i) + " is " + d.describe();
      break;
    }
  }
  rep.axioms.push_back({"second-difference", rel_ok, rel_detail});

  bool shift_ok = false;
  std::string shift_detail;
  if (deg_ok) {
    if (auto d = constant_shift(window, 1)) {
      rep.shift_roots = solve_division(3, *d, cap);
      shift_ok = !rep.shift_roots.empty();
      if (!shift_ok) shift_detail = "no translation psi with 3*t = " + d->describe();
    } else {
      shift_detail = "consecutive sum differences are not constant";
    }
  } else {
    shift_detail = "skipped: degree axiom failed";
  }
  rep.axioms.push_back({"psi-shift", shift_ok, shift_detail});
  return rep;
}

HelixReport validate_cubic_helix(std::span<const DivisorClass> window,
                                 std::optional<Translation> alpha, std::int64_t cap) {
  if (window.size() < 4)
    raise(Errc::window_too_short, "cubic helix validation needs at least 4 classes");
  HelixReport rep;

  bool deg_ok = true;
  std::string deg_detail;
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (window[i].degree != 2) {
      deg_ok = false;
      deg_detail = "class " + std::to_string(i) + " is " + window[i].describe();
      break;
    }
  }
  rep.axioms.push_back({"degree", deg_ok, deg_detail});

  bool distinct = !(window[0] == window[2]);
  rep.axioms.push_back({"g0-not-g2", distinct, distinct ? "" : "[G_0] = [G_2]"});

  bool rel_ok = true;
  std::string rel_detail;
  for (std::size_t i = 0; i + 3 < window.size(); ++i) {
    DivisorClass d = class_add(class_sub(class_sub(window[i], window[i + 1]), window[i + 2]),
                               window[i + 3]);
    if (!is_trivial(d)) {
      rel_ok = false;
      rel_detail = "third-order relation at offset " + std::to_string(i) + " is " + d.describe();
      break;
    }
  }
  rep.axioms.push_back({"third-order-relation", rel_ok, rel_detail});

  bool shift_ok = false;
  std::string shift_detail;
  if (deg_ok) {
    if (auto d = constant_shift(window, 2)) {
      if (alpha) {
        shift_ok = sub(window[0].sum, scalar_mul(2, alpha->t)) == window[2].sum;
        if (shift_ok) rep.shift_roots.push_back(alpha->t);
        else shift_detail = "supplied alpha does not realize the shift";
      } else {
        rep.shift_roots = solve_division(2, *d, cap);
        shift_ok = !rep.shift_roots.empty();
        if (!shift_ok) shift_detail = "no translation alpha with 2*t = " + d->describe();
      }
    } else {
      shift_detail = "sum differences at distance 2 are not constant";
    }
  } else {
    shift_detail = "skipped: degree axiom failed";
  }
  rep.axioms.push_back({"alpha-shift", shift_ok, shift_detail});
  return rep;
}

namespace {

template <typename Spec>
std::int64_t thcr_dim_impl(const Spec& spec, std::int64_t i, std::int64_t j) {
  if (i > j) return 0;
  if (i == j) return 1;
  DivisorClass acc = helix_class(spec, i);
  for (std::int64_t k = i + 1; k < j; ++k) acc = class_add(acc, helix_class(spec, k));
  return h0(acc);
}

}  // namespace

std::int64_t thcr_dim(const QuadraticHelixSpec& spec, std::int64_t i, std::int64_t j) {
  return thcr_dim_impl(spec, i, j);
}

std::int64_t thcr_dim(const CubicHelixSpec& spec, std::int64_t i, std::int64_t j) {
  return thcr_dim_impl(spec, i, j);
}

}  // namespace helixforge
