#pragma once

// Command implementations behind the `sqz` executable. Kept in a library so
// the tests can drive them without spawning processes.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqz/compare.hpp"
#include "sqz/distribution.hpp"

namespace sqz::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

inline constexpr const char* output_dir_env = "SQZ_OUTPUT_DIR";
inline constexpr const char* distribution_schema = "sqz.distribution/1";
inline constexpr const char* comparison_schema = "sqz.comparison/1";
inline constexpr const char* manifest_schema = "sqz.sweep-manifest/1";

enum class Format { csv, json, svg };

std::optional<Format> parse_format(const std::string& name);
const char* extension(Format format);

/// Tolerances recorded in every metadata header.
struct Tolerances {
  double ring_tol = 1e-8;
};

/// Runs one method. exact-recurrence falls back to quadrature (and says so
/// in the notes) when the recurrence reports lost precision.
Distribution compute(Method method, unsigned n, double r, unsigned m_max,
                     const Tolerances& tol = {});

struct OutputOptions {
  bool timestamp = true;
};

std::string format_csv(const Distribution& d, const Tolerances& tol, const OutputOptions& out);
std::string format_json(const Distribution& d, const Tolerances& tol, const OutputOptions& out);
std::string format_svg(const Distribution& d);
std::string format_report_json(const ComparisonReport& report, const OutputOptions& out);
std::string format_overlay_svg(const Distribution& a, const Distribution& b);

/// Shortest round-trip spelling of r, used in file names ("2", "0.5").
std::string r_label(double r);

/// Default file name for one (n, r, method) result.
std::string default_file_name(unsigned n, double r, Method method, Format format);

struct DistCommand {
  unsigned n = 0;
  double r = 0;
  std::string method;
  std::optional<unsigned> m_max;
  std::string format = "csv";
  std::string out;  // empty: $SQZ_OUTPUT_DIR/<default name>, else stdout
  bool timestamp = true;
};

struct CompareCommand {
  unsigned n = 0;
  double r = 0;
  std::string method_a;
  std::string method_b;
  std::optional<unsigned> m_max;
  std::string out;  // report JSON; the overlay SVG goes next to it
  std::string svg;  // explicit overlay path
  bool timestamp = true;
};

struct SweepCommand {
  std::vector<unsigned> n_list;
  std::vector<double> r_list;
  std::vector<std::string> methods;
  std::optional<unsigned> m_max;
  std::string format = "csv";
  std::string out_dir;  // empty: $SQZ_OUTPUT_DIR, else current directory
  unsigned jobs = 0;    // 0: hardware concurrency
  bool timestamp = true;
};

int run_dist(const DistCommand& cmd, std::ostream& out, std::ostream& err);
int run_compare(const CompareCommand& cmd, std::ostream& out, std::ostream& err);
int run_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& err);

/// Full command line, including CLI11 parsing; returns the exit code.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace sqz::cli
