#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lemniscate/types.hpp"

namespace lemniscate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

enum class Function { sl, cl, wp_pseudo, wp_lem };

// Throws DomainError for an unknown name.
Function parse_function(std::string_view name);
std::string_view function_name(Function f);

ExtendedValue evaluate(Function f, Complex z);

// Shortest round-trip decimal form, locale independent, -0 printed as 0.
std::string format_double(double x);

struct GridSpec {
  double xmin = 0.0;
  double xmax = 0.0;
  double ymin = 0.0;
  double ymax = 0.0;
  long long nx = 0;
  long long ny = 0;
  Function function = Function::sl;
};

inline constexpr long long kMaxGridPoints = 100'000'000;

// Throws DomainError when the spec is invalid.
void validate(const GridSpec& spec);

// CSV with header x,y,re,im,is_pole; y outer, x inner; pole rows carry zeros
// and is_pole=1.
void write_grid(const GridSpec& spec, std::ostream& out);

struct CheckItem {
  std::string name;
  double residual;
};

// The identity suite followed by the constants, pole and residue checks.
std::vector<CheckItem> run_checks(std::uint64_t seed, int samples, double window);

// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lemniscate::cli
