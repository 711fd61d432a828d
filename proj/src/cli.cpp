#include "twonormal/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "twonormal/curves.hpp"
#include "twonormal/dd.hpp"
#include "twonormal/enumerate.hpp"
#include "twonormal/ghs.hpp"
#include "twonormal/matching.hpp"
#include "twonormal/pieces.hpp"

namespace twonormal {

namespace {

constexpr const char* kVersion = "twonormal 0.1.0";

const char* kUsage = R"(usage: twonormal <command> [options]

commands:
  validate <triangulation>    parse and check a triangulation
  enumerate <triangulation>   list vertex surfaces for a mode
  selftest                    run built-in consistency checks
  ghs-compare <a> <b>         compare two splitting complexities
  version                     print the version

a <triangulation> is a file path or a built-in name (single, double2)

options for enumerate:
  --mode normal|almost|2normal   surface pattern to hunt (default: normal)
  --format json|csv|text         output format (default: text)
  --max-tets N                   refuse larger inputs (default: 8)
  --allow-nested-tubes           permit repeated tube slots
  --require-closed               keep only closed surfaces

options for selftest:
  --max-curve-length N           curve census bound (default: 24)
  --inject-fault                 deliberately break one check

set TWONORMAL_THREADS to parallelize enumeration.
)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> positional;
  EnumerationOptions enumeration;
  std::string format = "text";
  bool inject_fault = false;
};

int parse_positive(const std::string& flag, const std::string& value) {
  size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(value, &used);
  } catch (const std::exception&) {
    throw UsageError(flag + " needs a positive integer");
  }
  if (used != value.size() || n <= 0)
    throw UsageError(flag + " needs a positive integer");
  return n;
}

Options parse_options(const std::vector<std::string>& args, size_t start) {
  Options opts;
  if (const char* env = std::getenv("TWONORMAL_THREADS")) {
    opts.enumeration.threads = parse_positive("TWONORMAL_THREADS", env);
  }
  for (size_t i = start; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto value = [&]() -> const std::string& {
      if (i + 1 >= args.size()) throw UsageError(a + " needs a value");
      return args[++i];
    };
    if (a == "--mode") {
      auto mode = parse_mode(value());
      if (!mode) throw UsageError("unknown mode; use normal, almost or 2normal");
      opts.enumeration.mode = *mode;
    } else if (a == "--format") {
      const std::string& f = value();
      if (f != "json" && f != "csv" && f != "text")
        throw UsageError("unknown format; use json, csv or text");
      opts.format = f;
    } else if (a == "--max-tets") {
      opts.enumeration.max_tets = parse_positive(a, value());
    } else if (a == "--max-curve-length") {
      opts.enumeration.max_curve_length = parse_positive(a, value());
    } else if (a == "--allow-nested-tubes") {
      opts.enumeration.allow_nested_tubes = true;
    } else if (a == "--require-closed") {
      opts.enumeration.require_closed = true;
    } else if (a == "--inject-fault") {
      opts.inject_fault = true;
    } else if (a.rfind("--", 0) == 0) {
      // Single-dash tokens stay positional: complexity strings look like -2.
      throw UsageError("unknown option " + a);
    } else {
      opts.positional.push_back(a);
    }
  }
  return opts;
}

// Reads a builtin by name or a file from disk.  Missing files are usage
// errors (exit 2); malformed content is an operation failure (exit 1).
std::string load_source(const std::string& name) {
  if (const char* builtin = builtin_triangulation(name)) return builtin;
  std::ifstream in(name);
  if (!in) throw UsageError("cannot open " + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

int cmd_validate(const std::string& name, std::ostream& out,
                 std::ostream& err) {
  std::string source = load_source(name);
  try {
    Triangulation tri = Triangulation::parse(source);
    tri.validate();
    Skeleton sk = compute_skeleton(tri);
    out << name << ": " << tri.tet_count()
        << (tri.tet_count() == 1 ? " tetrahedron" : " tetrahedra") << ", "
        << (tri.closed() ? "closed" : "has boundary") << ", "
        << sk.edges.size() << " edge classes, " << sk.vertices.size()
        << " vertex classes, euler " << sk.euler() << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << name << ": " << e.what() << "\n";
    return 1;
  }
}

nlohmann::ordered_json surface_record(const CensusEntry& entry) {
  nlohmann::ordered_json rec;
  rec["coordinates"] = nlohmann::ordered_json::array();
  for (const BigInt& c : entry.coords) rec["coordinates"].push_back(to_int64(c));
  rec["tubes"] = nlohmann::ordered_json::array();
  for (const TubeDecoration& t : entry.tubes)
    rec["tubes"].push_back(
        {{"tet", t.tet}, {"edge", t.edge}, {"slot", t.slot}});
  rec["class"] = entry.surface.cls;
  rec["edge_weights"] = entry.surface.edge_weights;
  rec["euler"] = entry.surface.euler();
  rec["connected"] = entry.surface.connected();
  rec["components"] = nlohmann::ordered_json::array();
  for (const ComponentInfo& c : entry.surface.components)
    rec["components"].push_back({{"euler", c.euler},
                                 {"orientable", c.orientable},
                                 {"sphere", c.sphere},
                                 {"class", c.cls}});
  return rec;
}

std::string join_tubes(const std::vector<TubeDecoration>& tubes) {
  std::string out;
  for (const TubeDecoration& t : tubes) {
    if (!out.empty()) out += ';';
    out += std::to_string(t.tet) + ":" + std::to_string(t.edge) + ":" +
           std::to_string(t.slot);
  }
  return out;
}

std::string describe_coords(const std::vector<BigInt>& coords, int tets) {
  std::string out;
  for (int t = 0; t < tets; ++t)
    for (int s = 0; s < kPieceTypesPerTet; ++s) {
      const BigInt& c = coords[kPieceTypesPerTet * t + s];
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      if (c != 1) out += c.str() + "*";
      out += piece_from_coordinate(s).label(t);
    }
  return out.empty() ? "(empty)" : out;
}

int cmd_enumerate(const std::string& name, const Options& opts,
                  std::ostream& out, std::ostream& err) {
  std::string source = load_source(name);
  Triangulation tri(0);
  try {
    tri = Triangulation::parse(source);
    tri.validate();
  } catch (const std::exception& e) {
    err << name << ": " << e.what() << "\n";
    return 1;
  }
  if (tri.tet_count() > opts.enumeration.max_tets) {
    err << name << ": " << tri.tet_count()
        << " tetrahedra exceed the cap of " << opts.enumeration.max_tets
        << " (raise --max-tets)\n";
    return 3;
  }

  std::vector<CensusEntry> census = enumerate_census(tri, opts.enumeration);
  Skeleton sk = compute_skeleton(tri);

  if (opts.format == "json") {
    nlohmann::ordered_json doc;
    doc["tool"] = kVersion;
    doc["mode"] = mode_name(opts.enumeration.mode);
    doc["triangulation"] = {{"name", name},
                            {"tets", tri.tet_count()},
                            {"closed", tri.closed()},
                            {"euler", sk.euler()}};
    doc["surfaces"] = nlohmann::ordered_json::array();
    for (const CensusEntry& entry : census)
      doc["surfaces"].push_back(surface_record(entry));
    doc["count"] = census.size();
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (opts.format == "csv") {
    out << "index,class,euler,connected,components,tubes,edge_weights,"
           "coordinates\n";
    for (size_t i = 0; i < census.size(); ++i) {
      const CensusEntry& entry = census[i];
      std::string weights, coords;
      for (long long w : entry.surface.edge_weights) {
        if (!weights.empty()) weights += ' ';
        weights += std::to_string(w);
      }
      for (const BigInt& c : entry.coords) {
        if (!coords.empty()) coords += ' ';
        coords += c.str();
      }
      out << i << ',' << entry.surface.cls << ',' << entry.surface.euler()
          << ',' << (entry.surface.connected() ? "true" : "false") << ','
          << entry.surface.components.size() << ',' << join_tubes(entry.tubes)
          << ',' << weights << ',' << coords << "\n";
    }
    return 0;
  }

  out << name << ": mode " << mode_name(opts.enumeration.mode) << ", "
      << census.size() << (census.size() == 1 ? " surface" : " surfaces")
      << "\n";
  for (size_t i = 0; i < census.size(); ++i) {
    const CensusEntry& entry = census[i];
    out << "[" << i << "] " << entry.surface.cls << ", euler "
        << entry.surface.euler() << ", "
        << (entry.surface.connected()
                ? "connected"
                : std::to_string(entry.surface.components.size()) +
                      " components")
        << (entry.surface.closed ? "" : ", boundary") << "\n";
    out << "    " << describe_coords(entry.coords, tri.tet_count());
    if (!entry.tubes.empty()) out << " | tubes " << join_tubes(entry.tubes);
    out << "\n";
  }
  return 0;
}

long long totient(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int cmd_selftest(const Options& opts, std::ostream& out, std::ostream& err) {
  int failures = 0;
  auto check = [&](const std::string& label, bool ok) {
    if (ok) {
      out << "ok: " << label << "\n";
    } else {
      err << "FAIL: " << label << "\n";
      ++failures;
    }
  };

  // Connected curve counts follow the slope law: 4 triangles, then
  // 3 phi(n) curves of length 4n.
  {
    int bound = opts.enumeration.max_curve_length;
    auto types = connected_curve_types(bound);
    std::map<int, long long> histogram;
    bool lengths_ok = true;
    for (const auto& w : types) {
      int len = curve_length(w);
      histogram[len] += 1;
      if (len != 3 && len % 4 != 0) lengths_ok = false;
    }
    check("curve lengths are 3 or multiples of 4", lengths_ok);
    long long fault = opts.inject_fault ? 1 : 0;
    bool counts_ok = histogram[3] == 4 + fault;
    for (int len = 4; len <= bound; len += 4)
      if (histogram[len] != 3 * totient(len / 4)) counts_ok = false;
    check("curve counts match the slope law", counts_ok);
  }

  // The two ray routes agree on the double tetrahedron's matching cone.
  {
    Triangulation tri = Triangulation::parse(kBuiltinDouble2);
    Skeleton sk = compute_skeleton(tri);
    MatchingSystem ms = build_matching_system(tri, sk);
    std::vector<int> active;
    for (int t = 0; t < 2; ++t)
      for (int s = 0; s < 5; ++s)
        active.push_back(kPieceTypesPerTet * t + s);
    auto fast = extreme_rays(ms.coefficient_rows(), ms.cols, active);
    auto slow = brute_force_rays(ms.coefficient_rows(), ms.cols, active);
    check("ray enumeration matches the exhaustive route", fast == slow);
  }

  // The double tetrahedron carries its four vertex links and three
  // double quads, nothing else.
  {
    Triangulation tri = Triangulation::parse(kBuiltinDouble2);
    EnumerationOptions eo;
    eo.mode = SurfaceMode::Normal;
    auto census = enumerate_census(tri, eo);
    bool ok = census.size() == 7;
    for (const CensusEntry& entry : census)
      ok = ok && entry.surface.connected() &&
           entry.surface.euler() == 2 && entry.surface.components[0].sphere;
    check("double tetrahedron normal census is seven spheres", ok);
  }

  // Compressions strictly decrease the complexity measure.
  {
    SurfaceComplexity genus2{-2};
    long long before = complexity_measure(genus2);
    bool ok = complexity_measure(compress_nonseparating(genus2, -2)) < before;
    ok = ok &&
         complexity_measure(compress_separating(genus2, -2, 0, 0)) < before;
    check("compression decreases complexity", ok);
  }

  if (failures > 0) {
    err << failures << " check(s) failed\n";
    return 1;
  }
  out << "all checks passed\n";
  return 0;
}

int cmd_ghs_compare(const std::string& a, const std::string& b,
                    std::ostream& out, std::ostream& err) {
  try {
    int c = compare_ghs(parse_ghs(a), parse_ghs(b));
    out << (c < 0 ? "less" : c > 0 ? "greater" : "equal") << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    if (args.empty()) {
      err << kUsage;
      return 2;
    }
    const std::string& cmd = args[0];
    if (cmd == "version" || cmd == "--version") {
      out << kVersion << "\n";
      return 0;
    }
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
      out << kUsage;
      return 0;
    }
    Options opts = parse_options(args, 1);
    if (cmd == "validate") {
      if (opts.positional.size() != 1)
        throw UsageError("validate needs exactly one triangulation");
      return cmd_validate(opts.positional[0], out, err);
    }
    if (cmd == "enumerate") {
      if (opts.positional.size() != 1)
        throw UsageError("enumerate needs exactly one triangulation");
      return cmd_enumerate(opts.positional[0], opts, out, err);
    }
    if (cmd == "selftest") {
      if (!opts.positional.empty())
        throw UsageError("selftest takes no positional arguments");
      return cmd_selftest(opts, out, err);
    }
    if (cmd == "ghs-compare") {
      if (opts.positional.size() != 2)
        throw UsageError("ghs-compare needs two complexity strings");
      return cmd_ghs_compare(opts.positional[0], opts.positional[1], out,
                             err);
    }
    throw UsageError("unknown command " + cmd);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kUsage;
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace twonormal
