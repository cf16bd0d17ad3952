#include "sqz_cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "sqz/cohen.hpp"
#include "sqz/error.hpp"
#include "sqz/exact.hpp"
#include "sqz/interference.hpp"
#include "sqz/wkb.hpp"

#ifndef SQZ_VERSION
#define SQZ_VERSION "0.0.0"
#endif

namespace sqz::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr double clamp_floor = 1e-300;

std::string number(double v, int precision = 17) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json tolerances_json(const Tolerances& tol) {
  return json{{"tangency_threshold", tangency_threshold},
              {"clamp_floor", clamp_floor},
              {"ring_tol", tol.ring_tol},
              {"wkb_guard", WkbOptions{}.guard},
              {"relative_error_floor", relative_error_floor},
              {"last_maximum_threshold", last_maximum_threshold}};
}

json metadata_json(const Distribution& d, const Tolerances& tol, const OutputOptions& out) {
  json meta;
  meta["schema"] = distribution_schema;
  meta["generator"] = json{{"name", "sqz"}, {"version", SQZ_VERSION}};
  meta["n"] = d.n;
  meta["r"] = d.r;
  meta["method"] = std::string(to_string(d.method));
  meta["m_max"] = d.size() == 0 ? 0 : d.size() - 1;
  meta["total"] = d.total();
  meta["tolerances"] = tolerances_json(tol);
  meta["notes"] = d.notes;
  if (out.timestamp) meta["generated"] = utc_timestamp();
  return meta;
}

std::string resolve_output(const std::string& explicit_path, const std::string& file_name) {
  if (!explicit_path.empty()) return explicit_path;
  if (const char* dir = std::getenv(output_dir_env); dir != nullptr && *dir != '\0') {
    return (fs::path(dir) / file_name).string();
  }
  return {};
}

void write_file(const std::string& path, const std::string& payload) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream file(p, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << payload;
  if (!file) throw std::runtime_error("failed writing " + path);
}

void emit(const std::string& path, const std::string& payload, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << payload;
  } else {
    write_file(path, payload);
  }
}

Method require_method(const std::string& name) {
  if (auto m = parse_method(name)) return *m;
  throw CLI::ValidationError("--method",
                             "unknown method '" + name +
                                 "' (expected exact|exact-recurrence|wkb|cohen|wigner-ring)");
}

Format require_format(const std::string& name) {
  if (auto f = parse_format(name)) return *f;
  throw CLI::ValidationError("--format", "unknown format '" + name + "' (expected csv|json|svg)");
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// SVG

struct Frame {
  double width = 960;
  double height = 420;
  double left = 70;
  double right = 20;
  double top = 40;
  double bottom = 50;

  double plot_w() const { return width - left - right; }
  double plot_h() const { return height - top - bottom; }
};

double finite_peak(const Distribution& d) {
  double peak = 0;
  for (double v : d.values) {
    if (std::isfinite(v)) peak = std::max(peak, v);
  }
  return peak > 0 ? peak : 1.0;
}

void svg_axes(std::ostringstream& s, const Frame& f, std::size_t count, double y_max,
              const std::string& title) {
  s << "<rect x=\"0\" y=\"0\" width=\"" << fixed(f.width) << "\" height=\"" << fixed(f.height)
    << "\" fill=\"white\"/>\n";
  s << "<text x=\"" << fixed(f.width / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
    << title << "</text>\n";
  const double x0 = f.left;
  const double y0 = f.top + f.plot_h();
  s << "<line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x0 + f.plot_w())
    << "\" y2=\"" << fixed(y0) << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(f.top) << "\" x2=\"" << fixed(x0)
    << "\" y2=\"" << fixed(y0) << "\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double v = y_max * i / 5;
    const double y = y0 - f.plot_h() * i / 5;
    s << "<line x1=\"" << fixed(x0 - 5) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(x0)
      << "\" y2=\"" << fixed(y) << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << fixed(x0 - 8) << "\" y=\"" << fixed(y + 4)
      << "\" text-anchor=\"end\" font-size=\"11\">" << number(v, 3) << "</text>\n";
  }
  const std::size_t step = std::max<std::size_t>(1, count / 10);
  for (std::size_t m = 0; m < count; m += step) {
    const double x = x0 + f.plot_w() * (m + 0.5) / count;
    s << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x)
      << "\" y2=\"" << fixed(y0 + 5) << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(y0 + 18)
      << "\" text-anchor=\"middle\" font-size=\"11\">" << m << "</text>\n";
  }
  s << "<text x=\"" << fixed(x0 + f.plot_w() / 2) << "\" y=\"" << fixed(f.height - 10)
    << "\" text-anchor=\"middle\" font-size=\"13\">photon number m</text>\n";
  s << "<text x=\"16\" y=\"" << fixed(f.top + f.plot_h() / 2)
    << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
    << fixed(f.top + f.plot_h() / 2) << ")\">P(m)</text>\n";
}

void svg_bars(std::ostringstream& s, const Frame& f, const Distribution& d, std::size_t count,
              double y_max, const char* color) {
  const double y0 = f.top + f.plot_h();
  const double slot = f.plot_w() / count;
  const double bar = std::max(slot * 0.8, 0.5);
  for (std::size_t m = 0; m < d.size() && m < count; ++m) {
    const double x = f.left + slot * m + (slot - bar) / 2;
    if (d.flagged(m) && !std::isfinite(d.values[m])) {
      s << "<line class=\"flag-" << to_string(d.flags[m]) << "\" x1=\"" << fixed(x + bar / 2)
        << "\" y1=\"" << fixed(f.top) << "\" x2=\"" << fixed(x + bar / 2) << "\" y2=\"" << fixed(y0)
        << "\" stroke=\"#c0392b\" stroke-dasharray=\"3,3\"/>\n";
      continue;
    }
    const double v = std::max(0.0, d.values[m]);
    if (v <= 0 && !d.flagged(m)) continue;
    const double h = f.plot_h() * std::min(v / y_max, 1.0);
    s << "<rect x=\"" << fixed(x) << "\" y=\"" << fixed(y0 - h) << "\" width=\"" << fixed(bar)
      << "\" height=\"" << fixed(h) << "\" fill=\"" << (d.flagged(m) ? "#c0392b" : color)
      << "\"/>\n";
  }
}

std::string svg_open(const Frame& f) {
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(f.width) << "\" height=\""
    << fixed(f.height) << "\" viewBox=\"0 0 " << fixed(f.width) << " " << fixed(f.height)
    << "\" font-family=\"sans-serif\">\n";
  return s.str();
}

std::string state_title(const Distribution& d) {
  return "P(m) for n=" + std::to_string(d.n) + ", r=" + r_label(d.r);
}

}  // namespace

std::optional<Format> parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "svg") return Format::svg;
  return std::nullopt;
}

const char* extension(Format format) {
  switch (format) {
    case Format::csv: return "csv";
    case Format::json: return "json";
    case Format::svg: return "svg";
  }
  return "txt";
}

Distribution compute(Method method, unsigned n, double r, unsigned m_max, const Tolerances& tol) {
  switch (method) {
    case Method::exact_quadrature: return exact_distribution(n, r, m_max);
    case Method::exact_recurrence:
      try {
        return exact_recurrence_distribution(n, r, m_max);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::recurrence_instability) throw;
        Distribution d = exact_distribution(n, r, m_max);
        d.notes.emplace_back(std::string("recurrence lost precision, fell back to quadrature: ") +
                             e.what());
        return d;
      }
    case Method::wkb: return wkb_distribution(n, r, m_max);
    case Method::cohen_closed_form: return cohen_distribution(n, r, m_max);
    case Method::wigner_ring: return wigner_ring_distribution(n, r, m_max, tol.ring_tol);
  }
  throw Error(ErrorCode::invalid_argument, "compute: unknown method");
}

std::string format_csv(const Distribution& d, const Tolerances& tol, const OutputOptions& out) {
  const json meta = metadata_json(d, tol, out);
  std::ostringstream s;
  s << "# schema: " << distribution_schema << "\n";
  s << "# generator: sqz " << SQZ_VERSION << "\n";
  s << "# n: " << d.n << "\n";
  s << "# r: " << number(d.r) << "\n";
  s << "# method: " << to_string(d.method) << "\n";
  s << "# m_max: " << (d.size() == 0 ? 0 : d.size() - 1) << "\n";
  s << "# total: " << number(d.total()) << "\n";
  s << "# tolerances: " << meta["tolerances"].dump() << "\n";
  for (const auto& note : d.notes) s << "# note: " << note << "\n";
  if (out.timestamp) s << "# generated: " << meta["generated"].get<std::string>() << "\n";
  s << "m,P,flag\n";
  for (std::size_t m = 0; m < d.size(); ++m) {
    s << m << ',' << number(d.values[m]) << ',' << to_string(d.flags[m]) << '\n';
  }
  return s.str();
}

std::string format_json(const Distribution& d, const Tolerances& tol, const OutputOptions& out) {
  json doc;
  doc["metadata"] = metadata_json(d, tol, out);
  json values = json::array();
  for (std::size_t m = 0; m < d.size(); ++m) {
    values.push_back(json{{"m", m}, {"P", finite_or_null(d.values[m])},
                          {"flag", std::string(to_string(d.flags[m]))}});
  }
  doc["values"] = std::move(values);
  return doc.dump(2) + "\n";
}

std::string format_svg(const Distribution& d) {
  const Frame f;
  const std::size_t count = std::max<std::size_t>(1, d.size());
  const double y_max = finite_peak(d) * 1.05;
  std::ostringstream s;
  s << svg_open(f);
  svg_axes(s, f, count, y_max, state_title(d) + " (" + std::string(cli_name(d.method)) + ")");
  svg_bars(s, f, d, count, y_max, "#3b6ea5");
  s << "</svg>\n";
  return s.str();
}

std::string format_overlay_svg(const Distribution& a, const Distribution& b) {
  const Frame f;
  const std::size_t count = std::max<std::size_t>(1, std::max(a.size(), b.size()));
  const double y_max = std::max(finite_peak(a), finite_peak(b)) * 1.05;
  std::ostringstream s;
  s << svg_open(f);
  svg_axes(s, f, count, y_max,
           state_title(a) + ": " + std::string(cli_name(a.method)) + " (bars) vs " +
               std::string(cli_name(b.method)) + " (dots)");
  svg_bars(s, f, a, count, y_max, "#9aa9b8");

  const double y0 = f.top + f.plot_h();
  const double slot = f.plot_w() / count;
  for (std::size_t m = 0; m < b.size(); ++m) {
    const double x = f.left + slot * (m + 0.5);
    if (b.flagged(m) && !std::isfinite(b.values[m])) {
      s << "<line class=\"flag-" << to_string(b.flags[m]) << "\" x1=\"" << fixed(x) << "\" y1=\""
        << fixed(f.top) << "\" x2=\"" << fixed(x) << "\" y2=\"" << fixed(y0)
        << "\" stroke=\"#c0392b\" stroke-dasharray=\"3,3\"/>\n";
      continue;
    }
    if (!(b.values[m] > 0)) continue;
    const double y = y0 - f.plot_h() * std::min(b.values[m] / y_max, 1.0);
    s << "<circle cx=\"" << fixed(x) << "\" cy=\"" << fixed(y) << "\" r=\"1.8\" fill=\"#e67e22\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string format_report_json(const ComparisonReport& report, const OutputOptions& out) {
  json doc;
  doc["schema"] = comparison_schema;
  doc["generator"] = json{{"name", "sqz"}, {"version", SQZ_VERSION}};
  doc["n"] = report.n;
  doc["r"] = report.r;
  doc["method_a"] = std::string(to_string(report.method_a));
  doc["method_b"] = std::string(to_string(report.method_b));
  doc["total_variation"] = report.total_variation;
  doc["last_max_location_a"] =
      report.last_max_location_a >= 0 ? json(report.last_max_location_a) : json(nullptr);
  doc["last_max_location_b"] =
      report.last_max_location_b >= 0 ? json(report.last_max_location_b) : json(nullptr);
  doc["rel_error_at_last_max"] = finite_or_null(report.rel_error_at_last_max);
  doc["last_max_flagged"] = report.last_max_flagged;
  doc["flags_summary"] = json{{"a", json{{"tangency", report.flagged_tangency_a},
                                         {"clamped", report.flagged_clamped_a}}},
                              {"b", json{{"tangency", report.flagged_tangency_b},
                                         {"clamped", report.flagged_clamped_b}}}};
  json per_m = json::array();
  for (std::size_t m = 0; m < report.per_m_abs_error.size(); ++m) {
    per_m.push_back(json{{"m", m},
                         {"abs_error", finite_or_null(report.per_m_abs_error[m])},
                         {"rel_error", finite_or_null(report.per_m_rel_error[m])}});
  }
  doc["per_m"] = std::move(per_m);
  if (out.timestamp) doc["generated"] = utc_timestamp();
  return doc.dump(2) + "\n";
}

std::string r_label(double r) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), r);
  return std::string(buf, res.ptr);
}

std::string default_file_name(unsigned n, double r, Method method, Format format) {
  return "dist_n" + std::to_string(n) + "_r" + r_label(r) + "_" + std::string(cli_name(method)) +
         "." + extension(format);
}

namespace {

std::string render(const Distribution& d, Format format, const Tolerances& tol,
                   const OutputOptions& out) {
  switch (format) {
    case Format::csv: return format_csv(d, tol, out);
    case Format::json: return format_json(d, tol, out);
    case Format::svg: return format_svg(d);
  }
  return {};
}

void check_r(double r) {
  if (!std::isfinite(r)) throw UsageError("--r must be a finite number");
}

}  // namespace

int run_dist(const DistCommand& cmd, std::ostream& out, std::ostream& err) {
  Method method;
  Format format;
  try {
    method = require_method(cmd.method);
    format = require_format(cmd.format);
    check_r(cmd.r);
  } catch (const std::exception& e) {
    err << "sqz dist: " << e.what() << "\n";
    return exit_usage;
  }
  try {
    const unsigned m_max = cmd.m_max.value_or(default_m_max(cmd.n, cmd.r));
    const Tolerances tol;
    const Distribution d = compute(method, cmd.n, cmd.r, m_max, tol);
    const std::string path =
        resolve_output(cmd.out, default_file_name(cmd.n, cmd.r, method, format));
    emit(path, render(d, format, tol, OutputOptions{cmd.timestamp}), out);
    return exit_ok;
  } catch (const Error& e) {
    err << "sqz dist: " << to_string(e.code()) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "sqz dist: " << e.what() << "\n";
  }
  return exit_failure;
}

int run_compare(const CompareCommand& cmd, std::ostream& out, std::ostream& err) {
  Method method_a;
  Method method_b;
  try {
    method_a = require_method(cmd.method_a);
    method_b = require_method(cmd.method_b);
    check_r(cmd.r);
  } catch (const std::exception& e) {
    err << "sqz compare: " << e.what() << "\n";
    return exit_usage;
  }
  try {
    const unsigned m_max = cmd.m_max.value_or(default_m_max(cmd.n, cmd.r));
    const Distribution a = compute(method_a, cmd.n, cmd.r, m_max);
    const Distribution b = compute(method_b, cmd.n, cmd.r, m_max);
    const ComparisonReport report = compare(a, b);

    const std::string stem = "compare_n" + std::to_string(cmd.n) + "_r" + r_label(cmd.r) + "_" +
                             std::string(cli_name(method_a)) + "_vs_" +
                             std::string(cli_name(method_b));
    const std::string path = resolve_output(cmd.out, stem + ".json");
    emit(path, format_report_json(report, OutputOptions{cmd.timestamp}), out);

    std::string svg_path = cmd.svg;
    if (svg_path.empty() && !path.empty() && path != "-") {
      svg_path = fs::path(path).replace_extension(".svg").string();
    }
    if (!svg_path.empty()) write_file(svg_path, format_overlay_svg(a, b));
    return exit_ok;
  } catch (const Error& e) {
    err << "sqz compare: " << to_string(e.code()) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "sqz compare: " << e.what() << "\n";
  }
  return exit_failure;
}

int run_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& err) {
  std::vector<Method> methods;
  Format format;
  try {
    if (cmd.n_list.empty() || cmd.r_list.empty() || cmd.methods.empty()) {
      throw UsageError("--n, --r and --methods need at least one value each");
    }
    for (const auto& name : cmd.methods) methods.push_back(require_method(name));
    for (double r : cmd.r_list) check_r(r);
    format = require_format(cmd.format);
  } catch (const std::exception& e) {
    err << "sqz sweep: " << e.what() << "\n";
    return exit_usage;
  }

  fs::path dir = cmd.out_dir;
  if (dir.empty()) {
    const char* env = std::getenv(output_dir_env);
    dir = (env != nullptr && *env != '\0') ? fs::path(env) : fs::current_path();
  }

  struct Task {
    unsigned n;
    double r;
    Method method;
    std::string file;
    bool ok = false;
    std::string error_code;
    std::string message;
  };
  std::vector<Task> tasks;
  for (unsigned n : cmd.n_list) {
    for (double r : cmd.r_list) {
      for (Method m : methods) tasks.push_back({n, r, m, default_file_name(n, r, m, format), false, {}, {}});
    }
  }

  try {
    fs::create_directories(dir);
  } catch (const std::exception& e) {
    err << "sqz sweep: " << e.what() << "\n";
    return exit_failure;
  }

  const Tolerances tol;
  const OutputOptions options{cmd.timestamp};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      Task& t = tasks[i];
      try {
        const unsigned m_max = cmd.m_max.value_or(default_m_max(t.n, t.r));
        const Distribution d = compute(t.method, t.n, t.r, m_max, tol);
        write_file((dir / t.file).string(), render(d, format, tol, options));
        t.ok = true;
      } catch (const Error& e) {
        t.error_code = std::string(to_string(e.code()));
        t.message = e.what();
      } catch (const std::exception& e) {
        t.error_code = "io";
        t.message = e.what();
      }
    }
  };

  unsigned jobs = cmd.jobs != 0 ? cmd.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json manifest;
  manifest["schema"] = manifest_schema;
  manifest["generator"] = json{{"name", "sqz"}, {"version", SQZ_VERSION}};
  manifest["format"] = extension(format);
  json entries = json::array();
  std::size_t failures = 0;
  for (const Task& t : tasks) {
    json e{{"n", t.n}, {"r", t.r}, {"method", std::string(cli_name(t.method))}};
    if (t.ok) {
      e["status"] = "ok";
      e["file"] = t.file;
    } else {
      ++failures;
      e["status"] = "error";
      e["error_code"] = t.error_code;
      e["message"] = t.message;
    }
    entries.push_back(std::move(e));
  }
  manifest["entries"] = std::move(entries);
  manifest["failures"] = failures;
  if (cmd.timestamp) manifest["generated"] = utc_timestamp();

  try {
    write_file((dir / "manifest.json").string(), manifest.dump(2) + "\n");
  } catch (const std::exception& e) {
    err << "sqz sweep: " << e.what() << "\n";
    return exit_failure;
  }
  out << "sqz sweep: " << tasks.size() - failures << " of " << tasks.size() << " results written to "
      << dir.string() << "\n";
  for (const Task& t : tasks) {
    if (!t.ok) err << "sqz sweep: n=" << t.n << " r=" << r_label(t.r) << " " << cli_name(t.method)
                   << ": " << t.message << "\n";
  }
  return failures == 0 ? exit_ok : exit_failure;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Photon statistics of squeezed number states: exact, WKB and phase-space routes"};
  app.set_version_flag("--version", SQZ_VERSION);
  app.require_subcommand(1);

  DistCommand dist;
  auto* dist_cmd = app.add_subcommand("dist", "Compute one photon-number distribution");
  dist_cmd->add_option("--n", dist.n, "Photon number of the squeezed Fock state")->required();
  dist_cmd->add_option("--r", dist.r, "Squeezing parameter")->required();
  dist_cmd->add_option("--method", dist.method, "exact|exact-recurrence|wkb|cohen|wigner-ring")
      ->required();
  dist_cmd->add_option("--m-max", dist.m_max, "Largest photon number (default: classical edge + 50)");
  dist_cmd->add_option("--format", dist.format, "csv|json|svg")->capture_default_str();
  dist_cmd->add_option("--out", dist.out, "Output file ('-' for stdout)");
  bool dist_no_ts = false;
  dist_cmd->add_flag("--no-timestamp", dist_no_ts, "Omit the generation timestamp");

  CompareCommand cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Compare two methods and write a JSON report");
  cmp_cmd->add_option("--n", cmp.n, "Photon number of the squeezed Fock state")->required();
  cmp_cmd->add_option("--r", cmp.r, "Squeezing parameter")->required();
  cmp_cmd->add_option("--method-a", cmp.method_a, "Reference method")->required();
  cmp_cmd->add_option("--method-b", cmp.method_b, "Method under test")->required();
  cmp_cmd->add_option("--m-max", cmp.m_max, "Largest photon number");
  cmp_cmd->add_option("--out", cmp.out, "Report JSON path ('-' for stdout)");
  cmp_cmd->add_option("--svg", cmp.svg, "Overlay SVG path (default: next to --out)");
  bool cmp_no_ts = false;
  cmp_cmd->add_flag("--no-timestamp", cmp_no_ts, "Omit the generation timestamp");

  SweepCommand sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run every (n, r, method) combination");
  sweep_cmd->add_option("--n", sweep.n_list, "Photon numbers, comma separated")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--r", sweep.r_list, "Squeezing parameters, comma separated")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--methods,--method", sweep.methods, "Methods, comma separated")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--m-max", sweep.m_max, "Largest photon number (default per state)");
  sweep_cmd->add_option("--format", sweep.format, "csv|json|svg")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out_dir, "Output directory");
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads (default: logical cores)");
  bool sweep_no_ts = false;
  sweep_cmd->add_flag("--no-timestamp", sweep_no_ts, "Omit generation timestamps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  if (dist_cmd->parsed()) {
    dist.timestamp = !dist_no_ts;
    return run_dist(dist, out, err);
  }
  if (cmp_cmd->parsed()) {
    cmp.timestamp = !cmp_no_ts;
    return run_compare(cmp, out, err);
  }
  sweep.timestamp = !sweep_no_ts;
  return run_sweep(sweep, out, err);
}

}  // namespace sqz::cli
