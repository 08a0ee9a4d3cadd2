#include "lemniscate/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <numbers>
#include <random>

namespace lemniscate {

namespace {

// |sum| / max(1, max |term|)
double residual(std::initializer_list<Complex> terms) {
  Complex sum{};
  double scale = 1.0;
  for (const Complex& t : terms) {
    sum += t;
    scale = std::max(scale, std::abs(t));
  }
  return std::abs(sum) / scale;
}

struct Point {
  Complex s;
  Complex c;
  Complex sp;  // s' = c (1 + s^2)
  Complex cp;  // c' = -s (1 + c^2)
};

Point at(const Evaluator& ev, Complex z) {
  const FullValue v = ev.full(z);
  Point p;
  p.s = v.s.value();
  p.c = v.c.value();
  p.sp = p.c * (1.0 + p.s * p.s);
  p.cp = -p.s * (1.0 + p.c * p.c);
  return p;
}

using Args = std::vector<Complex>;

struct Identity {
  std::string name;
  std::function<Args(const LemniscateConstants&, Complex z, Complex a)> args;
  std::function<double(const Evaluator&, Complex z, Complex a)> eval;
};

const std::vector<Identity>& registry() {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> v;
    const auto only_z = [](const LemniscateConstants&, Complex z, Complex) { return Args{z}; };
    const auto z_2z = [](const LemniscateConstants&, Complex z, Complex) {
      return Args{z, 2.0 * z};
    };
    const auto addition = [](const LemniscateConstants&, Complex z, Complex a) {
      return Args{z, a, a + z};
    };

    v.push_back({"pythagorean", only_z, [](const Evaluator& ev, Complex z, Complex) {
                   const Point p = at(ev, z);
                   const Complex s2 = p.s * p.s;
                   const Complex c2 = p.c * p.c;
                   return residual({s2, s2 * c2, c2, -1.0});
                 }});
    v.push_back({"product_form", only_z, [](const Evaluator& ev, Complex z, Complex) {
                   const Point p = at(ev, z);
                   return residual({(1.0 + p.s * p.s) * (1.0 + p.c * p.c), -2.0});
                 }});
    v.push_back({"sl_duplication", z_2z, [](const Evaluator& ev, Complex z, Complex) {
                   const Point p = at(ev, z);
                   const Point d = at(ev, 2.0 * z);
                   const Complex s4 = p.s * p.s * p.s * p.s;
                   return residual({d.s, -2.0 * p.s * p.sp / (1.0 + s4)});
                 }});
    v.push_back({"joint_duplication_s", z_2z, [](const Evaluator& ev, Complex z, Complex) {
                   const Point p = at(ev, z);
                   const Point d = at(ev, 2.0 * z);
                   const Complex sc = p.s * p.c;
                   return residual({d.s, -2.0 * sc / (1.0 - sc * sc)});
                 }});
    v.push_back({"joint_duplication_c", z_2z, [](const Evaluator& ev, Complex z, Complex) {
                   const Point p = at(ev, z);
                   const Point d = at(ev, 2.0 * z);
                   const Complex sc = p.s * p.c;
                   return residual({d.c, -(p.c * p.c - p.s * p.s) / (1.0 + sc * sc)});
                 }});
    v.push_back({"cl_duplication_quartic", z_2z, [](const Evaluator& ev, Complex z, Complex) {
                   const Point p = at(ev, z);
                   const Point d = at(ev, 2.0 * z);
                   const Complex c2 = p.c * p.c;
                   const Complex c4 = c2 * c2;
                   return residual({d.c, (c4 + 2.0 * c2 - 1.0) / (c4 - 2.0 * c2 - 1.0)});
                 }});
    v.push_back({"cl_duplication_derivative", z_2z,
                 [](const Evaluator& ev, Complex z, Complex) {
                   const Point p = at(ev, z);
                   const Point d = at(ev, 2.0 * z);
                   const Complex c2 = p.c * p.c;
                   const Complex cp2 = p.cp * p.cp;
                   return residual({d.c, -(2.0 * c2 - cp2) / (2.0 * c2 + cp2)});
                 }});
    v.push_back({"complementary",
                 [](const LemniscateConstants& k, Complex z, Complex) {
                   return Args{z, k.L - z};
                 },
                 [](const Evaluator& ev, Complex z, Complex) {
                   const double L = ev.constants().L;
                   return residual({at(ev, z).c, -at(ev, L - z).s});
                 }});
    v.push_back({"complement_shift_s",
                 [](const LemniscateConstants& k, Complex z, Complex) {
                   return Args{z, k.L + z};
                 },
                 [](const Evaluator& ev, Complex z, Complex) {
                   const double L = ev.constants().L;
                   return residual({at(ev, L + z).s, -at(ev, z).c});
                 }});
    v.push_back({"complement_shift_c",
                 [](const LemniscateConstants& k, Complex z, Complex) {
                   return Args{z, k.L + z};
                 },
                 [](const Evaluator& ev, Complex z, Complex) {
                   const double L = ev.constants().L;
                   return residual({at(ev, L + z).c, at(ev, z).s});
                 }});
    v.push_back({"sign_flip_real",
                 [](const LemniscateConstants& k, Complex z, Complex) {
                   return Args{z, 2.0 * k.L + z};
                 },
                 [](const Evaluator& ev, Complex z, Complex) {
                   const Point p = at(ev, z);
                   const Point q = at(ev, 2.0 * ev.constants().L + z);
                   return std::max(residual({q.s, p.s}), residual({q.c, p.c}));
                 }});
    v.push_back({"sign_flip_imag",
                 [](const LemniscateConstants& k, Complex z, Complex) {
                   return Args{z, Complex(0.0, 2.0 * k.L) + z};
                 },
                 [](const Evaluator& ev, Complex z, Complex) {
                   const Point p = at(ev, z);
                   const Point q = at(ev, Complex(0.0, 2.0 * ev.constants().L) + z);
                   return std::max(residual({q.s, p.s}), residual({q.c, p.c}));
                 }});
    v.push_back({"imaginary_transform_s",
                 [](const LemniscateConstants&, Complex z, Complex) {
                   return Args{z, kI * z};
                 },
                 [](const Evaluator& ev, Complex z, Complex) {
                   return residual({at(ev, kI * z).s, -kI * at(ev, z).s});
                 }});
    v.push_back({"imaginary_transform_c",
                 [](const LemniscateConstants&, Complex z, Complex) {
                   return Args{z, kI * z};
                 },
                 [](const Evaluator& ev, Complex z, Complex) {
                   return residual({at(ev, kI * z).c * at(ev, z).c, -1.0});
                 }});
    v.push_back({"conjugation",
                 [](const LemniscateConstants&, Complex z, Complex) {
                   return Args{z, std::conj(z)};
                 },
                 [](const Evaluator& ev, Complex z, Complex) {
                   const Point p = at(ev, z);
                   const Point q = at(ev, std::conj(z));
                   return std::max(residual({q.s, -std::conj(p.s)}),
                                   residual({q.c, -std::conj(p.c)}));
                 }});
    v.push_back({"parity",
                 [](const LemniscateConstants&, Complex z, Complex) {
                   return Args{z, -z};
                 },
                 [](const Evaluator& ev, Complex z, Complex) {
                   const Point p = at(ev, z);
                   const Point q = at(ev, -z);
                   return std::max(residual({q.s, p.s}), residual({q.c, -p.c}));
                 }});
    v.push_back({"sl_addition", addition, [](const Evaluator& ev, Complex z, Complex a) {
                   const Point pa = at(ev, a);
                   const Point pz = at(ev, z);
                   const Complex num = pa.sp * pz.s + pa.s * pz.sp;
                   const Complex den = 1.0 + pa.s * pa.s * pz.s * pz.s;
                   return residual({at(ev, a + z).s, -num / den});
                 }});
    v.push_back({"joint_addition_s", addition, [](const Evaluator& ev, Complex z, Complex a) {
                   const Point pa = at(ev, a);
                   const Point pz = at(ev, z);
                   const Complex num = pa.s * pz.c + pa.c * pz.s;
                   const Complex den = 1.0 - pa.s * pa.c * pz.s * pz.c;
                   return residual({at(ev, a + z).s, -num / den});
                 }});
    v.push_back({"joint_addition_c", addition, [](const Evaluator& ev, Complex z, Complex a) {
                   const Point pa = at(ev, a);
                   const Point pz = at(ev, z);
                   const Complex num = pa.c * pz.c - pa.s * pz.s;
                   const Complex den = 1.0 + pa.s * pa.c * pz.s * pz.c;
                   return residual({at(ev, a + z).c, -num / den});
                 }});
    // sqrt(2) conj(gamma) = 1 - i
    v.push_back({"lemniscate_KL",
                 [](const LemniscateConstants&, Complex z, Complex) {
                   return Args{z, Complex(1.0, -1.0) * z};
                 },
                 [](const Evaluator& ev, Complex z, Complex) {
                   const Complex s = at(ev, z).s;
                   const Complex t = at(ev, Complex(1.0, -1.0) * z).s;
                   const Complex s2 = s * s;
                   return residual({(1.0 - s2 * s2) * t * t, 2.0 * kI * s2});
                 }});
    v.push_back({"canonical_sqrt", z_2z, [](const Evaluator& ev, Complex z, Complex) {
                   const Point p = at(ev, z);
                   const Complex s2 = at(ev, 2.0 * z).s;
                   const Complex sc = p.s * p.c;
                   const Complex q = (1.0 + sc * sc) / (1.0 - sc * sc);
                   return residual({1.0 + s2 * s2, -q * q});
                 }});
    return v;
  }();
  return ids;
}

bool any_near_pole(const Args& args, const Evaluator& ev) {
  return std::any_of(args.begin(), args.end(),
                     [&](Complex w) { return near_pole(w, kPoleThreshold, ev); });
}

// 1 / sl(u) and sl'(u) / sl(u)^2, or nullopt where sl(u) = 0.
struct Reciprocal {
  Complex r;
  Complex t;
};

std::optional<Reciprocal> reciprocal(const Evaluator& ev, Complex u) {
  const FullValue v = ev.full(u);
  if (v.s_inv.is_pole()) return std::nullopt;
  const Complex r = v.s_inv.value();
  Complex t;
  if (v.c.is_pole() || std::abs(v.c.value()) > 2.0) {
    const Complex ci = v.c_inv.value();
    t = 2.0 * ci / (1.0 + ci * ci) * r * r;
  } else {
    t = v.c.value() * (1.0 + r * r);
  }
  return Reciprocal{r, t};
}

}  // namespace

double ResidualReport::max_residual() const {
  double m = 0.0;
  for (const auto& [name, r] : residuals) m = std::max(m, r);
  return m;
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& id : registry()) n.push_back(id.name);
    return n;
  }();
  return names;
}

bool near_pole(Complex z, double radius, const Evaluator& ev) {
  const ReducedArgument r = ev.reduce(z);
  const double L = ev.constants().L;
  const double sx = r.z0.real() >= 0.0 ? L : -L;
  const double sy = r.z0.imag() >= 0.0 ? L : -L;
  return std::abs(r.z0 - Complex(sx, sy)) < radius || std::abs(r.z0 - Complex(0.0, sy)) < radius;
}

ResidualReport residuals_at(std::span<const Complex> zs, std::span<const Complex> as,
                            const Evaluator& ev) {
  if (zs.size() != as.size()) throw DomainError("residuals_at needs one a per z");
  ResidualReport report;
  for (const auto& id : registry()) report.residuals[id.name] = 0.0;
  std::vector<double> row(registry().size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const Complex z = zs[i];
    const Complex a = as[i];
    bool usable = true;
    for (const auto& id : registry()) {
      if (any_near_pole(id.args(ev.constants(), z, a), ev)) {
        usable = false;
        break;
      }
    }
    if (usable) {
      try {
        for (std::size_t k = 0; k < registry().size(); ++k) {
          row[k] = registry()[k].eval(ev, z, a);
        }
      } catch (const DomainError&) {
        // a value landed on a pole the proximity check did not see
        usable = false;
      }
    }
    if (!usable) {
      ++report.excluded_count;
      continue;
    }
    ++report.sample_count;
    for (std::size_t k = 0; k < registry().size(); ++k) {
      double& slot = report.residuals[registry()[k].name];
      slot = std::max(slot, row[k]);
    }
  }
  return report;
}

ResidualReport residual_suite(std::uint64_t seed, int samples, double window,
                              const Evaluator& ev) {
  if (samples < 1) throw DomainError("residual suite needs at least one sample");
  if (!(window > 0.0)) throw DomainError("residual suite window must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-window, window);
  std::vector<Complex> zs, as;
  zs.reserve(static_cast<std::size_t>(samples));
  as.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double zr = coord(rng);
    const double zi = coord(rng);
    const double ar = coord(rng);
    const double ai = coord(rng);
    zs.emplace_back(zr, zi);
    as.emplace_back(ar, ai);
  }
  ResidualReport report = residuals_at(zs, as, ev);
  if (report.sample_count == 0) throw DomainError("no usable samples: every point was excluded");
  return report;
}

std::optional<double> identity_residual(std::string_view name, Complex z, Complex a,
                                        const Evaluator& ev) {
  for (const auto& id : registry()) {
    if (id.name != name) continue;
    if (any_near_pole(id.args(ev.constants(), z, a), ev)) return std::nullopt;
    try {
      return id.eval(ev, z, a);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  }
  throw DomainError("unknown identity: " + std::string(name));
}

WeierstrassValue weierstrass_pseudo(Complex z, const Evaluator& ev) {
  const Complex lambda = ev.constants().lambda;
  const auto rec = reciprocal(ev, lambda * z);
  if (!rec) return {ExtendedValue::pole(), ExtendedValue::pole()};
  const Complex l2 = lambda * lambda;
  return {l2 * rec->r * rec->r, -2.0 * l2 * lambda * rec->r * rec->t};
}

WeierstrassValue weierstrass_lemniscatic(Complex z, const Evaluator& ev) {
  const auto rec = reciprocal(ev, z / std::numbers::sqrt2);
  if (!rec) return {ExtendedValue::pole(), ExtendedValue::pole()};
  return {0.5 * rec->r * rec->r, -rec->r * rec->t / std::numbers::sqrt2};
}

HalfPeriods half_periods(const LemniscateConstants& consts) {
  const double L = consts.L;
  return {Complex(2.0 * L, 0.0), Complex(-L, L), Complex(-L, -L),
          Complex(0.0, 0.0),     Complex(0.0, 0.5), Complex(0.0, -0.5)};
}

NevilleValue neville_primitives(Complex z, const Evaluator& ev) {
  const Complex lambda = ev.constants().lambda;
  NevilleValue out;
  const FullValue f = ev.full(lambda * z);
  out.fj = f.s_inv.is_pole() ? ExtendedValue::pole() : ExtendedValue(lambda * f.s_inv.value());

  const FullValue h = ev.full(0.5 * lambda * z);
  if (h.s.is_pole() || h.c.is_pole() || h.s_inv.is_pole() || h.c_inv.is_pole()) {
    out.gj = ExtendedValue::pole();
    out.hj = ExtendedValue::pole();
    return out;
  }
  const Complex s = h.s.value();
  const Complex c = h.c.value();
  const Complex si = h.s_inv.value();
  const Complex ci = h.c_inv.value();
  out.gj = 0.5 * lambda * (c * si - s * ci);
  out.hj = 0.5 * lambda * (si * ci + s * c);
  return out;
}

}  // namespace lemniscate
