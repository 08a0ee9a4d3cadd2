#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <system_error>

#include "lemniscate/cli.hpp"
#include "lemniscate/constants.hpp"
#include "lemniscate/evaluator.hpp"
#include "lemniscate/identities.hpp"

namespace lemniscate::cli {

namespace {

double parse_real(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw DomainError("not a finite real number: '" + text + "'");
  }
  return value;
}

std::string format_fixed_digits(double x, int digits) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x + 0.0, std::chars_format::general, digits);
  return std::string(buf, r.ptr);
}

std::string format_residual(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 3);
  return std::string(buf, r.ptr);
}

int cmd_eval(const std::string& fn, const std::string& re, const std::string& im,
             std::ostream& out) {
  const Function f = parse_function(fn);
  const Complex z(parse_real(re), parse_real(im));
  const ExtendedValue v = evaluate(f, z);
  nlohmann::ordered_json record;
  record["function"] = std::string(function_name(f));
  record["z"] = {{"re", z.real()}, {"im", z.imag()}};
  if (v.is_pole()) {
    record["value"] = "pole";
  } else {
    record["value"] = {{"re", v.value().real() + 0.0}, {"im", v.value().imag() + 0.0}};
  }
  out << record.dump() << '\n';
  return kExitOk;
}

int cmd_constants(int digits, std::ostream& out, std::ostream& err) {
  if (digits < 1 || digits > 13) {
    err << "constants: --digits must lie in [1, 13]\n";
    return kExitUsage;
  }
  const LemniscateConstants& k = standard_constants();
  out << "K=" << format_fixed_digits(k.K, digits) << '\n';
  out << "L=" << format_fixed_digits(k.L, digits) << '\n';
  out << "varpi=" << format_fixed_digits(k.varpi, digits) << '\n';
  out << "deviation=" << format_fixed_digits(std::abs(k.L - std::numbers::sqrt2 * k.K), digits)
      << '\n';
  return kExitOk;
}

int cmd_check(std::uint64_t seed, int samples, double window, double tol, std::ostream& out,
              std::ostream& err) {
  if (samples < 1) {
    err << "check: --samples must be at least 1\n";
    return kExitUsage;
  }
  if (!(window > 0.0) || !(tol >= 0.0)) {
    err << "check: --window must be positive and --tol nonnegative\n";
    return kExitUsage;
  }
  const std::vector<CheckItem> items = run_checks(seed, samples, window);
  int failed = 0;
  for (const auto& item : items) {
    const bool ok = item.residual <= tol;
    if (!ok) ++failed;
    out << item.name << '=' << format_residual(item.residual) << (ok ? "" : " FAIL") << '\n';
  }
  out << "checks=" << items.size() << " failed=" << failed << '\n';
  out << "result=" << (failed == 0 ? "pass" : "fail") << '\n';
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_grid(const GridSpec& spec, const std::string& path, std::ostream& err) {
  try {
    validate(spec);
  } catch (const DomainError& e) {
    err << "grid: " << e.what() << '\n';
    return kExitUsage;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "grid: cannot open '" << path << "' for writing\n";
    return kExitIo;
  }
  write_grid(spec, file);
  file.flush();
  if (!file) {
    err << "grid: write to '" << path << "' failed\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

Function parse_function(std::string_view name) {
  if (name == "sl") return Function::sl;
  if (name == "cl") return Function::cl;
  if (name == "wp_pseudo") return Function::wp_pseudo;
  if (name == "wp_lem") return Function::wp_lem;
  throw DomainError("unknown function '" + std::string(name) +
                    "' (expected sl, cl, wp_pseudo or wp_lem)");
}

std::string_view function_name(Function f) {
  switch (f) {
    case Function::sl:
      return "sl";
    case Function::cl:
      return "cl";
    case Function::wp_pseudo:
      return "wp_pseudo";
    case Function::wp_lem:
      return "wp_lem";
  }
  return "?";
}

ExtendedValue evaluate(Function f, Complex z) {
  switch (f) {
    case Function::sl:
      return eval_sl(z);
    case Function::cl:
      return eval_cl(z);
    case Function::wp_pseudo:
      return weierstrass_pseudo(z).p;
    case Function::wp_lem:
      return weierstrass_lemniscatic(z).p;
  }
  return ExtendedValue::pole();
}

std::string format_double(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x + 0.0);
  return std::string(buf, r.ptr);
}

void validate(const GridSpec& spec) {
  const bool finite = std::isfinite(spec.xmin) && std::isfinite(spec.xmax) &&
                      std::isfinite(spec.ymin) && std::isfinite(spec.ymax);
  if (!finite || !(spec.xmin < spec.xmax) || !(spec.ymin < spec.ymax)) {
    throw DomainError("grid bounds must be finite with xmin < xmax and ymin < ymax");
  }
  if (spec.nx < 1 || spec.ny < 1) throw DomainError("grid sizes must be positive");
  if (spec.nx > kMaxGridPoints / spec.ny) {
    throw DomainError("grid has more than 1e8 points");
  }
}

void write_grid(const GridSpec& spec, std::ostream& out) {
  validate(spec);
  const auto coord = [](double lo, double hi, long long count, long long i) {
    if (count == 1) return lo;
    return lo + static_cast<double>(i) * (hi - lo) / static_cast<double>(count - 1);
  };
  const auto nx = static_cast<std::size_t>(spec.nx);
  std::vector<Complex> row(nx);
  std::vector<FullValue> values(nx);
  std::string line;
  out << "x,y,re,im,is_pole\n";
  for (long long j = 0; j < spec.ny; ++j) {
    const double y = coord(spec.ymin, spec.ymax, spec.ny, j);
    for (std::size_t i = 0; i < nx; ++i) {
      row[i] = Complex(coord(spec.xmin, spec.xmax, spec.nx, static_cast<long long>(i)), y);
    }
    const bool batched = spec.function == Function::sl || spec.function == Function::cl;
    if (batched) Evaluator::standard().full_batch(row, values);
    for (std::size_t i = 0; i < nx; ++i) {
      ExtendedValue v;
      if (batched) {
        v = spec.function == Function::sl ? values[i].s : values[i].c;
      } else {
        v = evaluate(spec.function, row[i]);
      }
      line = format_double(row[i].real());
      line += ',';
      line += format_double(y);
      if (v.is_pole()) {
        line += ",0,0,1\n";
      } else {
        line += ',';
        line += format_double(v.value().real());
        line += ',';
        line += format_double(v.value().imag());
        line += ",0\n";
      }
      out << line;
    }
  }
}

std::vector<CheckItem> run_checks(std::uint64_t seed, int samples, double window) {
  std::vector<CheckItem> items;
  const ResidualReport report = residual_suite(seed, samples, window);
  for (const auto& name : identity_names()) items.push_back({name, report.residuals.at(name)});

  const LemniscateConstants& k = standard_constants();
  items.push_back({"constants_L_sqrt2K", std::abs(k.L - std::numbers::sqrt2 * k.K)});
  items.push_back({"constants_L_substitution",
                   std::abs(k.L - lemniscate_L_square_substitution(kMinConstantsTarget))});

  const double L = k.L;
  const Complex corners[] = {{L, L}, {-L, L}, {-L, -L}, {L, -L}};
  const Complex translates[] = {{0, 0}, {4 * L, 0}, {0, 4 * L}, {-2 * L, 2 * L}, {6 * L, -8 * L}};
  double missed_sl = 0.0;
  double cured = 0.0;
  for (const Complex& p : corners) {
    for (const Complex& t : translates) {
      if (!eval_sl(p + t).is_pole()) missed_sl += 1.0;
      if (!eval_sl(p + t + Complex(3e-7, -4e-7)).is_pole()) missed_sl += 1.0;
    }
    const ExtendedValue c = eval_cl(p);
    cured = std::max(cured, c.is_pole() ? 1.0 : std::abs(std::abs(c.value()) - 1.0));
  }
  items.push_back({"pole_sl_corners", missed_sl});
  items.push_back({"cured_cl_modulus", cured});

  const Complex cl_poles[] = {{0, L}, {0, -L}, {2 * L, L}, {2 * L, -L}};
  double missed_cl = 0.0;
  for (const Complex& p : cl_poles) {
    for (const Complex& t : translates) {
      if (!eval_cl(p + t).is_pole()) missed_cl += 1.0;
    }
  }
  items.push_back({"pole_cl", missed_cl});

  double residue = 0.0;
  for (int j = 0; j < 8; ++j) {
    const Complex w = std::polar(1e-3, 2.0 * std::numbers::pi * j / 8.0);
    const Complex g = w * eval_sl(Complex(L, L) + w).value();
    residue = std::max(residue, std::abs(g + kI));
  }
  items.push_back({"residue_sl", residue});
  return items;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lemniscatic functions sl, cl and their Weierstrass companions"};
  app.require_subcommand(1);

  std::string fn, re, im;
  auto* eval = app.add_subcommand("eval", "Evaluate a function at one point");
  eval->add_option("function", fn, "sl, cl, wp_pseudo or wp_lem")->required();
  eval->add_option("re", re, "real part")->required();
  eval->add_option("im", im, "imaginary part")->required();

  GridSpec spec;
  std::string grid_fn, grid_out;
  std::string xmin, xmax, ymin, ymax;
  auto* grid = app.add_subcommand("grid", "Write a CSV grid of values");
  grid->add_option("function", grid_fn, "sl, cl, wp_pseudo or wp_lem")->required();
  grid->add_option("--xmin", xmin)->required();
  grid->add_option("--xmax", xmax)->required();
  grid->add_option("--ymin", ymin)->required();
  grid->add_option("--ymax", ymax)->required();
  grid->add_option("--nx", spec.nx)->required();
  grid->add_option("--ny", spec.ny)->required();
  grid->add_option("--out", grid_out, "output CSV path")->required();

  int digits = 13;
  auto* constants = app.add_subcommand("constants", "Print K, L and varpi");
  constants->add_option("--digits", digits, "significant digits, 1 to 13");

  std::uint64_t seed = kStandardSeed;
  int samples = kStandardSamples;
  double window = kStandardWindow;
  double tol = 1e-8;
  auto* check = app.add_subcommand("check", "Run the identity and pole checks");
  check->add_option("--seed", seed);
  check->add_option("--samples", samples);
  check->add_option("--window", window, "half-width of the sampling square");
  check->add_option("--tol", tol);

  // CLI11 consumes the vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(fn, re, im, out);
    if (*grid) {
      spec.function = parse_function(grid_fn);
      spec.xmin = parse_real(xmin);
      spec.xmax = parse_real(xmax);
      spec.ymin = parse_real(ymin);
      spec.ymax = parse_real(ymax);
      return cmd_grid(spec, grid_out, err);
    }
    if (*constants) return cmd_constants(digits, out, err);
    if (*check) return cmd_check(seed, samples, window, tol, out, err);
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lemniscate::cli
