// fockspace command-line tool: eval, table, verify and their aliases.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fockspace/hydrogen.hpp"
#include "fockspace/specfun.hpp"
#include "fockspace/verify.hpp"

namespace fs = fockspace;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + out_path);
  f << text;
}

struct Grid {
  std::vector<double> bounds;

  std::vector<double> points() const {
    if (bounds.size() != 3) throw UsageError("grid needs start stop count");
    const double count = bounds[2];
    if (!(count >= 1 && count <= 1e6) || count != std::floor(count))
      throw UsageError("grid count must be an integer in [1, 1e6]");
    if (!std::isfinite(bounds[0]) || !std::isfinite(bounds[1])) throw UsageError("grid bounds must be finite");
    const int n = int(count);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = n == 1 ? bounds[0] : bounds[0] + (bounds[1] - bounds[0]) * i / (n - 1);
    return out;
  }
};

// Rows of a table as CSV (with a units comment) or a JSON array of objects.
std::string render(const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows,
                   const std::string& format, const std::string& units) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
      arr.push_back(obj);
    }
    return json{{"units", units}, {"columns", columns}, {"rows", arr}}.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# units: " << units << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << fmt17(row[i]);
    os << "\n";
  }
  return os.str();
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& raw) {
  std::map<std::string, double> out;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--tol expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != val.size() || val.empty()) throw UsageError("--tol value for '" + key + "' is not a number");
    out[key] = v;
  }
  return out;
}

int run_verify(const std::string& suite, const std::string& group_filter, std::uint64_t seed,
               const std::vector<std::string>& tol, const std::string& format, const std::string& out, int nodes) {
  fs::VerifyOptions opt;
  opt.seed = seed;
  opt.tolerance_overrides = parse_tolerances(tol);
  opt.nodes = nodes;
  fs::VerificationReport report;
  try {
    report = fs::run_suite(suite, opt);
  } catch (const fs::DomainError& e) {
    throw UsageError(e.what());
  }
  if (!group_filter.empty()) {
    std::vector<fs::CaseRecord> kept;
    report.passed = report.failed = 0;
    for (auto& c : report.cases) {
      if (c.group != group_filter) continue;
      (c.pass ? report.passed : report.failed)++;
      kept.push_back(std::move(c));
    }
    report.cases = std::move(kept);
    report.suite = suite + "/" + group_filter;
  }
  emit(format == "csv" ? report.to_csv() : report.to_json().dump(2) + "\n", out);
  std::cerr << report.suite << ": " << report.passed << " passed, " << report.failed << " failed (seed "
            << report.seed << ")\n";
  return report.ok() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hydrogen wavefunctions, quadratic maps, Clifford determinants and identity checks"};
  app.require_subcommand(1);

  std::string format = "csv", out;
  int n = 1, l = 0, m = 0;

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a position or momentum wavefunction at a point");
  std::string kind;
  std::vector<double> point;
  std::string phase = "printed";
  eval->add_option("kind", kind, "position | momentum")->required()->check(CLI::IsMember({"position", "momentum"}));
  eval->add_option("--n", n)->required();
  eval->add_option("--l", l)->required();
  eval->add_option("--m", m)->required();
  eval->add_option("--point", point, "x y z (bohr) or px py pz (atomic units)")->expected(3)->required();
  eval->add_option("--phase", phase, "momentum phase convention")->check(CLI::IsMember({"printed", "fourier"}));
  eval->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  eval->add_option("--out", out);

  // table
  auto* table = app.add_subcommand("table", "Tabulate a function on a uniform grid");
  std::string table_kind;
  Grid grid, grid_p;
  double a = 1.0, delta = 1.0;
  int degree = 0;
  std::vector<double> dir{0.0, 0.0, 1.0};
  table->add_option("kind", table_kind, "radial | momentum-radial | gegenbauer | fock")
      ->required()
      ->check(CLI::IsMember({"radial", "momentum-radial", "gegenbauer", "fock"}));
  table->add_option("--n", n);
  table->add_option("--l", l);
  table->add_option("--a", a, "Gegenbauer order");
  table->add_option("--m", degree, "Gegenbauer degree");
  table->add_option("--delta", delta, "Fock scale 1/n");
  table->add_option("--dir", dir, "momentum direction for fock")->expected(3);
  table->add_option("--grid", grid.bounds, "start stop count")->expected(3);
  table->add_option("--grid-p", grid_p.bounds, "start stop count (momentum)")->expected(3);
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out);

  auto* fock_alias = app.add_subcommand("fock-map", "Alias of 'table fock'");
  fock_alias->add_option("--delta", delta);
  fock_alias->add_option("--dir", dir)->expected(3);
  fock_alias->add_option("--grid-p", grid_p.bounds)->expected(3);
  fock_alias->add_option("--grid", grid.bounds)->expected(3);
  fock_alias->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  fock_alias->add_option("--out", out);

  // verify
  std::string suite;
  std::uint64_t seed = 42;
  std::vector<std::string> tol;
  int nodes = 0;
  std::string vformat = "json";
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 0 iff every case passes");
  verify->add_option("suite", suite, "hydrogen | maps | clifford | identities | all")->required();
  verify->add_option("--seed", seed);
  verify->add_option("--tol", tol, "key=value tolerance override (repeatable)")->take_all();
  verify->add_option("--format", vformat)->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", out);
  verify->add_option("--nodes", nodes, "quadrature node override")->check(CLI::NonNegativeNumber);

  auto* det_alias = app.add_subcommand("clifford-det", "Determinant cases of 'verify clifford'");
  det_alias->add_option("--seed", seed);
  det_alias->add_option("--tol", tol)->take_all();
  det_alias->add_option("--format", vformat)->check(CLI::IsMember({"csv", "json"}));
  det_alias->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (eval->parsed()) {
      const fs::QuantumNumbers qn = fs::QuantumNumbers::make(n, l, m);
      const fs::Vec3 x{point[0], point[1], point[2]};
      const fs::cplx v = kind == "position"
                             ? fs::psi_position(qn, x)
                             : fs::psi_momentum(qn, x, phase == "fourier" ? fs::PhaseConvention::fourier
                                                                          : fs::PhaseConvention::printed);
      if (format == "json") {
        const json j{{"kind", kind}, {"n", n},          {"l", l},           {"m", m},
                     {"point", point}, {"re", v.real()}, {"im", v.imag()}, {"abs", std::abs(v)},
                     {"units", "atomic"}};
        emit(j.dump(2) + "\n", out);
      } else {
        std::ostringstream os;
        os << "n,l,m,px_or_x,py_or_y,pz_or_z,re,im,abs\n"
           << n << "," << l << "," << m << "," << fmt17(x[0]) << "," << fmt17(x[1]) << "," << fmt17(x[2]) << ","
           << fmt17(v.real()) << "," << fmt17(v.imag()) << "," << fmt17(std::abs(v)) << "\n";
        emit(os.str(), out);
      }
      return 0;
    }

    if (table->parsed() || fock_alias->parsed()) {
      if (fock_alias->parsed()) table_kind = "fock";
      std::vector<std::string> cols;
      std::vector<std::vector<double>> rows;
      std::string units = "atomic (bohr, hartree)";
      if (table_kind == "radial" || table_kind == "momentum-radial") {
        if (!fs::QuantumNumbers::valid(n, l, 0)) throw UsageError("need n >= 1 and 0 <= l < n");
        const bool pos = table_kind == "radial";
        const Grid& g = pos ? (grid.bounds.empty() ? grid_p : grid) : (grid_p.bounds.empty() ? grid : grid_p);
        cols = pos ? std::vector<std::string>{"r", "R_nl"} : std::vector<std::string>{"p", "F_nl"};
        for (double t : g.points()) {
          if (t < 0.0) throw UsageError("radial grid must be non-negative");
          rows.push_back({t, pos ? fs::radial_position(n, l, t) : fs::momentum_radial(n, l, t)});
        }
      } else if (table_kind == "gegenbauer") {
        if (!(a > 0.0) || degree < 0) throw UsageError("need --a > 0 and --m >= 0");
        cols = {"x", "C"};
        units = "dimensionless";
        for (double x : grid.points()) rows.push_back({x, fs::gegenbauer(degree, a, x)});
      } else {
        if (!(delta > 0.0)) throw UsageError("--delta must be positive");
        const double d = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
        if (!(d > 0.0)) throw UsageError("--dir must be non-zero");
        const Grid& g = grid_p.bounds.empty() ? grid : grid_p;
        cols = {"p", "y1", "y2", "y3", "y4", "norm"};
        for (double p : g.points()) {
          const fs::Vec3 pv{p * dir[0] / d, p * dir[1] / d, p * dir[2] / d};
          const fs::FockPoint f = fs::fock_map(pv, delta);
          rows.push_back({p, f.y[0], f.y[1], f.y[2], f.y[3], fs::norm(f.y)});
        }
      }
      emit(render(cols, rows, format, units), out);
      return 0;
    }

    if (verify->parsed()) return run_verify(suite, "", seed, tol, vformat, out, nodes);
    if (det_alias->parsed()) return run_verify("clifford", "det_identity", seed, tol, vformat, out, 0);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::IndexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
