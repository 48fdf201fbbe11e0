#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pointint/errors.hpp"
#include "pointint/extensions.hpp"
#include "pointint/matrixkernel.hpp"
#include "pointint/resolvent.hpp"
#include "pointint/scattering.hpp"
#include "pointint/weyl.hpp"

namespace pointint::cli {

namespace {

// Bad flag values (as opposed to a bad config file).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string key_path(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

std::string index_path(const std::string& parent, std::size_t i) {
  return parent + "[" + std::to_string(i) + "]";
}

double get_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  return j.get<double>();
}

long get_integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<long>();
}

Complex get_complex(const Json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ConfigError(path, "expected a number or an [re, im] pair");
  return {get_number(j[0], index_path(path, 0)), get_number(j[1], index_path(path, 1))};
}

CMatrix get_cmatrix(const Json& j, const std::string& path, Index size) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of rows");
  if (static_cast<Index>(j.size()) != size) {
    throw ConfigError(path, "expected " + std::to_string(size) + " rows, got " + std::to_string(j.size()));
  }
  CMatrix a(size, size);
  for (Index r = 0; r < size; ++r) {
    const Json& row = j[r];
    const std::string rp = index_path(path, r);
    if (!row.is_array() || static_cast<Index>(row.size()) != size) {
      throw ConfigError(rp, "expected a row of " + std::to_string(size) + " entries");
    }
    for (Index c = 0; c < size; ++c) a(r, c) = get_complex(row[c], index_path(rp, c));
  }
  return a;
}

const Json& require(const Json& obj, const std::string& key, const std::string& parent) {
  if (!obj.contains(key)) throw ConfigError(key_path(parent, key), "missing required field");
  return obj[key];
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> known, const std::string& parent) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string& k = it.key();
    if (!k.empty() && k[0] == '_') continue;  // comments
    bool ok = false;
    for (const char* name : known) ok = ok || k == name;
    if (!ok) throw ConfigError(key_path(parent, k), "unknown field");
  }
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    item = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    if (item.empty()) {
      if (end == text.size() && out.empty() && pos == 0) break;  // the empty list
      throw UsageError(what + ": empty item in '" + text + "'");
    }
    double v = 0.0;
    const char* first = item.data() + (item[0] == '+');
    const auto [ptr, ec] = std::from_chars(first, item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || !std::isfinite(v)) {
      throw UsageError(what + ": '" + item + "' is not a finite number");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

Complex parse_z(const std::string& text) {
  const std::vector<double> v = parse_list(text, "--z");
  if (v.size() != 1 && v.size() != 2) throw UsageError("--z expects re or re,im");
  return {v[0], v.size() == 2 ? v[1] : 0.0};
}

std::string fmt(double v) {
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

Json real_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return nullptr;
  return v;
}

Json real_vector_json(const RVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(real_json(v(i)));
  return out;
}

Json columns_json(const CMatrix& a) {
  Json cols = Json::array();
  for (Index c = 0; c < a.cols(); ++c) {
    Json col = Json::array();
    for (Index r = 0; r < a.rows(); ++r) col.push_back(to_json(a(r, c)));
    cols.push_back(std::move(col));
  }
  return cols;
}

Json indices_json(const std::vector<Index>& v) {
  Json out = Json::array();
  for (Index i : v) out.push_back(i);
  return out;
}

struct Outcome {
  Json results;
  std::vector<std::string> warnings;
};

// ---- commands -------------------------------------------------------------

Outcome cmd_check(const JobConfig& job) {
  Outcome o;
  const ExtensionReport rep = is_self_adjoint(job.pair);
  Json& r = o.results;
  r["coupling"] = job.coupling;
  r["kind"] = to_string(job.pair.kind);
  r["self_adjoint"] = rep.self_adjoint;
  r["defect_cd"] = rep.defect_cd;
  r["regularity_gap"] = rep.regularity_gap;
  r["tolerance"] = rep.tolerance;
  r["nonnegative"] = nullptr;
  r["nonnegative_method"] = nullptr;
  if (job.config.dimension == 2) r["nonnegative_verdict"] = nullptr;
  if (job.config.dimension == 3) r["kappa_minus"] = nullptr;

  if (job.config.dimension == 2 && job.reduced_pair) {
    // the reduced pair is judged on its own; it need not come from (C, D)
    const NonnegativeVerdict v = is_nonnegative_2d_reduced(job.reduced_pair->C, job.reduced_pair->D, job.config);
    r["nonnegative"] = v != NonnegativeVerdict::not_nonnegative;
    r["nonnegative_method"] = "reduced_pair";
    r["nonnegative_verdict"] = to_string(v);
  } else if (!rep.self_adjoint) {
    o.warnings.push_back("pair is not self-adjoint; nonnegativity not assessed");
  } else if (job.config.dimension == 3) {
    r["nonnegative"] = is_nonnegative_3d(job.pair, job.config);
    r["nonnegative_method"] = "inertia";
    r["kappa_minus"] = kappa_minus(job.pair, job.config);
  } else {
    // nonnegative <=> no negative eigenvalues, since the essential spectrum is [0, inf)
    const BoundStateScan scan = bound_states(job.pair, job.config, job.scan);
    for (const auto& w : scan.warnings) o.warnings.push_back(w);
    r["nonnegative_method"] = "bound_state_scan";
    if (!scan.states.empty()) {
      r["nonnegative"] = false;
      r["nonnegative_verdict"] = to_string(NonnegativeVerdict::not_nonnegative);
    } else if (!scan.boundary_warning) {
      r["nonnegative"] = true;
      r["nonnegative_verdict"] = to_string(job.config.sites() == 1 ? NonnegativeVerdict::unique_nonnegative
                                                                    : NonnegativeVerdict::nonnegative);
    }
  }
  Json notes = Json::array();
  for (const auto& n : rep.notes) notes.push_back(n);
  r["notes"] = std::move(notes);
  return o;
}

Outcome cmd_spectrum(const JobConfig& job) {
  Outcome o;
  const BoundStateScan scan = bound_states(job.pair, job.config, job.scan);
  o.warnings = scan.warnings;
  Json states = Json::array();
  for (const BoundState& st : scan.states) {
    Json s;
    s["z"] = st.z;
    s["s"] = std::sqrt(-st.z);
    s["multiplicity"] = st.multiplicity;
    s["refinement_residual"] = st.refinement_residual;
    s["best_effort"] = st.best_effort;
    s["coefficients"] = columns_json(st.coefficients);
    states.push_back(std::move(s));
  }
  const EssentialSpectrum ess = essential_spectrum(job.config);
  Json& r = o.results;
  r["bound_states"] = std::move(states);
  r["total_multiplicity"] = scan.total_multiplicity();
  r["essential_spectrum"] = {{"lower", real_json(ess.lower)}, {"upper", real_json(ess.upper)}};
  r["max_negative_eigenvalues"] = ess.max_negative_eigenvalues;
  r["kappa_minus"] = nullptr;
  if (job.config.dimension == 3) {
    const Index k = kappa_minus(job.pair, job.config);
    r["kappa_minus"] = k;
    if (k != scan.total_multiplicity()) {
      o.warnings.push_back("bound-state count " + std::to_string(scan.total_multiplicity()) +
                           " differs from kappa_minus " + std::to_string(k) + " (raise s_max or grid)");
    }
  }
  r["scan"] = {{"s_min", scan.s_min},
               {"s_max", scan.s_max},
               {"grid", job.scan.grid},
               {"tol", job.scan.rel_tol},
               {"method", job.scan.method == ScanOptions::Method::count ? "count" : "sigma_min"},
               {"boundary_warning", scan.boundary_warning}};
  return o;
}

Outcome cmd_scattering(const JobConfig& job, const std::vector<double>& energies) {
  Outcome o;
  Json rows = Json::array();
  for (double x : energies) {
    if (!(x > 0.0)) throw UsageError("--energies: energies must be positive, got " + fmt(x));
    Json row;
    row["x"] = x;
    try {
      const ScatteringResult s = scattering_matrix(job.pair, job.config, x);
      row["rank"] = s.rank;
      row["unitarity_defect"] = s.unitarity_defect;
      row["s_matrix"] = to_json(s.s_matrix);
      row["range_basis"] = to_json(s.range_basis);
    } catch (const ResonanceError& e) {
      row["resonance"] = true;
      row["error"] = e.what();
      o.warnings.push_back(e.what());
    }
    rows.push_back(std::move(row));
  }
  o.results["energies"] = std::move(rows);
  return o;
}

struct PointRow {
  RVector x, xp;
  std::size_t line;
};

std::vector<PointRow> read_points(const std::string& path, int d) {
  std::ifstream in(path);
  if (!in) throw UsageError("--points: cannot read " + path);
  std::vector<PointRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    for (char& c : line) c = c == ',' ? ' ' : c;
    std::istringstream ss(line);
    std::vector<double> v;
    std::string tok;
    while (ss >> tok) {
      double val = 0.0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), val);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(val)) {
        throw UsageError(path + ":" + std::to_string(lineno) + ": '" + tok + "' is not a finite number");
      }
      v.push_back(val);
    }
    if (v.empty()) continue;
    if (static_cast<int>(v.size()) != 2 * d) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(2 * d) +
                       " numbers (x then x')");
    }
    PointRow row{RVector(d), RVector(d), lineno};
    for (int i = 0; i < d; ++i) row.x(i) = v[i], row.xp(i) = v[d + i];
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw UsageError("--points: " + path + " has no evaluation points");
  return rows;
}

Outcome cmd_resolvent(const JobConfig& job, Complex z, const std::string& points_file) {
  Outcome o;
  const std::vector<PointRow> pts = read_points(points_file, job.config.dimension);
  const ResolventEvaluator ev(job.pair, job.config, z);
  Json rows = Json::array();
  for (const PointRow& p : pts) {
    Json row;
    row["x"] = real_vector_json(p.x);
    row["xp"] = real_vector_json(p.xp);
    try {
      row["kernel"] = to_json(ev(p.x, p.xp));
    } catch (const EvaluationError& e) {
      throw UsageError("--points line " + std::to_string(p.line) + ": " + e.what());
    }
    rows.push_back(std::move(row));
  }
  o.results["z"] = to_json(z);
  o.results["cond_estimate"] = ev.cond_estimate();
  o.results["values"] = std::move(rows);
  return o;
}

Outcome cmd_gerschgorin(const JobConfig& job, const std::vector<double>& k_raw) {
  if (!job.alpha) throw ConfigError("coupling.type", "gerschgorin needs an alpha coupling");
  if (job.config.dimension != 3) throw ConfigError("dimension", "gerschgorin is a 3D test");
  std::vector<Index> K;
  for (double k : k_raw) {
    if (k != std::floor(k) || k < 0 || k >= static_cast<double>(job.config.sites())) {
      throw UsageError("--K: " + fmt(k) + " is not a site index in 0.." + std::to_string(job.config.sites() - 1));
    }
    K.push_back(static_cast<Index>(k));
  }
  const GerschgorinReport g = gerschgorin_check(*job.alpha, job.config, K);
  Outcome o;
  Json& r = o.results;
  r["K"] = indices_json(g.K);
  r["strict_indices"] = indices_json(g.strict_indices);
  r["m_prime"] = g.m_prime;
  r["bound"] = g.bound;
  r["lower_bound_holds"] = g.lower_bound_holds;
  r["exact"] = g.exact;
  r["kappa_minus"] = kappa_minus(job.pair, job.config);
  return o;
}

struct WeylTable {
  double s_min = 0.0, s_max = 0.0;
  int steps = 0;
};

WeylTable parse_table(const std::string& text, int d) {
  const std::vector<double> v = parse_list(text, "--table");
  if (v.size() != 3) throw UsageError("--table expects s_min,s_max,steps");
  WeylTable t{v[0], v[1], static_cast<int>(v[2])};
  if (v[2] != std::floor(v[2]) || t.steps < 1) throw UsageError("--table: steps must be a positive integer");
  if (t.s_min < 0 || t.s_max < t.s_min) throw UsageError("--table: need 0 <= s_min <= s_max");
  if (d == 2 && t.s_min == 0) throw UsageError("--table: the 2D Weyl function is singular at s = 0");
  if (t.steps == 1 && t.s_max != t.s_min) throw UsageError("--table: one step needs s_min == s_max");
  return t;
}

std::vector<std::string> table_header(Index m, bool with_alpha) {
  std::vector<std::string> h = {"s", "z"};
  for (Index j = 0; j < m; ++j)
    for (Index k = 0; k < m; ++k) h.push_back("M_" + std::to_string(j) + "_" + std::to_string(k));
  if (with_alpha) h.push_back("lambda_min");
  return h;
}

// Rows of the table: s, z = -s^2, the block entries, and for alpha couplings the
// smallest eigenvalue of diag(alpha) - M(-s^2), whose zeros are the bound states.
std::vector<std::vector<double>> table_rows(const JobConfig& job, const WeylTable& t) {
  const DistanceMatrix dist = validate(job.config);
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < t.steps; ++i) {
    const double s = t.steps == 1 ? t.s_min : t.s_min + (t.s_max - t.s_min) * i / (t.steps - 1);
    const RMatrix b = detail::weyl_block_negative(job.config, dist, s);
    std::vector<double> row = {s, s == 0.0 ? 0.0 : -s * s};
    for (Index j = 0; j < b.rows(); ++j)
      for (Index k = 0; k < b.cols(); ++k) row.push_back(b(j, k));
    if (job.alpha) {
      const RMatrix a = RMatrix(job.alpha->asDiagonal()) - b;
      row.push_back(herm_eig(a).eigenvalues(0));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Outcome cmd_weyl_point(const JobConfig& job, Complex z) {
  Outcome o;
  const WeylEvaluation w = weyl_matrix(job.config, z);
  const WeylEvaluation wc = weyl_matrix(job.config, std::conj(z));
  o.results["z"] = to_json(z);
  o.results["multiplicity"] = job.config.multiplicity;
  o.results["block"] = to_json(w.block);
  o.results["conjugate_defect"] = (wc.block - w.block.adjoint()).norm();
  return o;
}

Outcome cmd_weyl_table(const JobConfig& job, const WeylTable& t) {
  Outcome o;
  const auto header = table_header(job.config.sites(), job.alpha.has_value());
  Json cols = Json::array();
  for (const auto& h : header) cols.push_back(h);
  Json rows = Json::array();
  for (const auto& row : table_rows(job, t)) {
    Json jr = Json::array();
    for (double v : row) jr.push_back(v);
    rows.push_back(std::move(jr));
  }
  o.results["multiplicity"] = job.config.multiplicity;
  o.results["columns"] = std::move(cols);
  o.results["rows"] = std::move(rows);
  return o;
}

void write_csv(std::ostream& out, const JobConfig& job, const WeylTable& t) {
  const auto header = table_header(job.config.sites(), job.alpha.has_value());
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : table_rows(job, t)) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << fmt(row[i]);
    out << '\n';
  }
}

Json envelope(const std::string& command, const JobConfig& job, Outcome& o, double seconds) {
  Json env;
  env["command"] = command;
  env["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  env["config"] = job.source;
  env["results"] = std::move(o.results);
  Json w = Json::array();
  for (const auto& s : o.warnings) w.push_back(s);
  env["warnings"] = std::move(w);
  env["wall_time_s"] = seconds;
  return env;
}

}  // namespace

Json to_json(Complex z) { return Json::array({real_json(z.real()), real_json(z.imag())}); }

Json to_json(const CMatrix& a) {
  Json rows = Json::array();
  for (Index r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < a.cols(); ++c) row.push_back(to_json(a(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

JobConfig parse_job(const Json& j) {
  if (!j.is_object()) throw ConfigError("(root)", "expected a JSON object");
  reject_unknown(j, {"dimension", "points", "n", "coupling", "scan", "reduced_pair"}, "");
  JobConfig job;
  job.source = j;

  const long d = get_integer(require(j, "dimension", ""), "dimension");
  if (d != 2 && d != 3) throw ConfigError("dimension", "must be 2 or 3");

  const Json& pts = require(j, "points", "");
  if (!pts.is_array() || pts.empty()) throw ConfigError("points", "expected a non-empty array of coordinates");
  std::vector<std::vector<double>> coords;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string p = index_path("points", i);
    if (!pts[i].is_array() || static_cast<long>(pts[i].size()) != d) {
      throw ConfigError(p, "expected " + std::to_string(d) + " coordinates");
    }
    std::vector<double> c;
    for (std::size_t k = 0; k < pts[i].size(); ++k) c.push_back(get_number(pts[i][k], index_path(p, k)));
    coords.push_back(std::move(c));
  }

  long n = 1;
  if (j.contains("n")) {
    n = get_integer(j["n"], "n");
    if (n < 1) throw ConfigError("n", "must be a positive integer");
  }
  job.config = make_configuration(static_cast<int>(d), coords, static_cast<int>(n));
  try {
    validate(job.config);
  } catch (const DuplicateCentersError& e) {
    throw ConfigError(index_path("points", e.pair().second), e.what());
  } catch (const ConfigurationError& e) {
    throw ConfigError("points", e.what());
  }
  const Index m = job.config.sites();
  const Index nm = job.config.boundary_size();

  const Json& cp = require(j, "coupling", "");
  if (!cp.is_object()) throw ConfigError("coupling", "expected an object");
  const Json& type = require(cp, "type", "coupling");
  if (!type.is_string()) throw ConfigError("coupling.type", "expected a string");
  job.coupling = type.get<std::string>();
  if (job.coupling == "alpha") {
    reject_unknown(cp, {"type", "alpha"}, "coupling");
    const Json& a = require(cp, "alpha", "coupling");
    if (!a.is_array() || static_cast<Index>(a.size()) != m) {
      throw ConfigError("coupling.alpha", "expected " + std::to_string(m) + " numbers, one per center");
    }
    RVector alpha(m);
    for (Index k = 0; k < m; ++k) alpha(k) = get_number(a[k], index_path("coupling.alpha", k));
    job.alpha = alpha;
    job.pair = diagonal_family(alpha, static_cast<int>(n));
  } else if (job.coupling == "cd") {
    reject_unknown(cp, {"type", "C", "D"}, "coupling");
    const CMatrix C = get_cmatrix(require(cp, "C", "coupling"), "coupling.C", nm);
    const CMatrix D = get_cmatrix(require(cp, "D", "coupling"), "coupling.D", nm);
    job.pair = general_pair(C, D);
  } else if (job.coupling == "krein") {
    reject_unknown(cp, {"type"}, "coupling");
    try {
      job.pair = krein_pair(job.config);
    } catch (const ConditioningError& e) {
      throw ConfigError("points", e.what());
    }
  } else if (job.coupling == "friedrichs") {
    reject_unknown(cp, {"type"}, "coupling");
    job.pair = friedrichs_pair(nm);
  } else {
    throw ConfigError("coupling.type", "expected one of alpha, cd, krein, friedrichs");
  }

  if (j.contains("scan")) {
    const Json& sc = j["scan"];
    if (!sc.is_object()) throw ConfigError("scan", "expected an object");
    reject_unknown(sc, {"s_max", "grid", "tol", "method"}, "scan");
    if (sc.contains("s_max")) {
      const double v = get_number(sc["s_max"], "scan.s_max");
      if (!(v > 0)) throw ConfigError("scan.s_max", "must be positive");
      job.scan.s_max = v;
    }
    if (sc.contains("grid")) {
      const long g = get_integer(sc["grid"], "scan.grid");
      if (g < 2 || g > 10'000'000) throw ConfigError("scan.grid", "must be in [2, 1e7]");
      job.scan.grid = static_cast<int>(g);
    }
    if (sc.contains("tol")) {
      const double v = get_number(sc["tol"], "scan.tol");
      if (!(v > 0 && v < 1)) throw ConfigError("scan.tol", "must be in (0, 1)");
      job.scan.rel_tol = v;
    }
    if (sc.contains("method")) {
      const Json& me = sc["method"];
      if (me == "count") job.scan.method = ScanOptions::Method::count;
      else if (me == "sigma_min") job.scan.method = ScanOptions::Method::sigma_min;
      else throw ConfigError("scan.method", "expected \"count\" or \"sigma_min\"");
    }
  }

  if (j.contains("reduced_pair")) {
    if (d != 2) throw ConfigError("reduced_pair", "only meaningful in dimension 2");
    const Json& rp = j["reduced_pair"];
    if (!rp.is_object()) throw ConfigError("reduced_pair", "expected an object");
    reject_unknown(rp, {"C", "D"}, "reduced_pair");
    const Index size = n * (m - 1);
    ReducedPair red;
    red.C = get_cmatrix(require(rp, "C", "reduced_pair"), "reduced_pair.C", size);
    red.D = get_cmatrix(require(rp, "D", "reduced_pair"), "reduced_pair.D", size);
    job.reduced_pair = std::move(red);
  }
  return job;
}

JobConfig load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("(file)", "cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("(file)", std::string("not valid JSON: ") + e.what());
  }
  return parse_job(j);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schrodinger operators with point interactions: spectra, scattering, resolvents", kToolName};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  bool strict = false;
  bool compact = false;
  app.add_flag("--strict", strict, "exit with code 3 when the results carry warnings");
  app.add_flag("--compact", compact, "print the envelope on one line");

  std::string config_path;
  auto add_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("config", config_path, "JSON job file")->required();
    return sub;
  };

  CLI::App* check = add_cmd("check", "self-adjointness and nonnegativity of the coupling");
  CLI::App* spectrum = add_cmd("spectrum", "bound states and essential spectrum");
  std::optional<double> s_max;
  std::optional<int> grid;
  std::string method;
  spectrum->add_option("--s-max", s_max, "upper limit of the scan in s = sqrt(-z)");
  spectrum->add_option("--grid", grid, "scan grid size");
  spectrum->add_option("--method", method, "count | sigma_min")->check(CLI::IsMember({"count", "sigma_min"}));

  CLI::App* scattering = add_cmd("scattering", "scattering matrices at positive energies");
  std::string energies_text;
  scattering->add_option("--energies", energies_text, "comma-separated energies x > 0")->required();

  CLI::App* resolvent = add_cmd("resolvent", "resolvent kernel values");
  std::string z_text, points_file;
  resolvent->add_option("--z", z_text, "spectral parameter re,im")->required();
  resolvent->add_option("--points", points_file, "file with one pair x x' per line")->required();

  CLI::App* gersch = add_cmd("gerschgorin", "diagonal-dominance count test (3D, alpha coupling)");
  std::string k_text;
  gersch->add_option("--K", k_text, "comma-separated 0-based site indices")->required();

  CLI::App* weyl = add_cmd("weyl", "Weyl function at a point or along the negative axis");
  std::string wz_text, table_text;
  bool csv = false;
  auto* wz = weyl->add_option("--z", wz_text, "spectral parameter re,im");
  auto* wt = weyl->add_option("--table", table_text, "s_min,s_max,steps on z = -s^2");
  wz->excludes(wt);
  weyl->add_flag("--csv", csv, "write the table as CSV instead of JSON");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::string command;
  JobConfig job;
  Outcome outcome;
  try {
    job = load_job(config_path);
    if (check->parsed()) {
      command = "check";
      outcome = cmd_check(job);
    } else if (spectrum->parsed()) {
      command = "spectrum";
      if (s_max) {
        if (!(*s_max > 0)) throw UsageError("--s-max must be positive");
        job.scan.s_max = *s_max;
      }
      if (grid) {
        if (*grid < 2) throw UsageError("--grid must be at least 2");
        job.scan.grid = *grid;
      }
      if (!method.empty()) {
        job.scan.method = method == "count" ? ScanOptions::Method::count : ScanOptions::Method::sigma_min;
      }
      outcome = cmd_spectrum(job);
    } else if (scattering->parsed()) {
      command = "scattering";
      const std::vector<double> e = parse_list(energies_text, "--energies");
      if (e.empty()) throw UsageError("--energies: the list is empty");
      outcome = cmd_scattering(job, e);
    } else if (resolvent->parsed()) {
      command = "resolvent";
      outcome = cmd_resolvent(job, parse_z(z_text), points_file);
    } else if (gersch->parsed()) {
      command = "gerschgorin";
      outcome = cmd_gerschgorin(job, parse_list(k_text, "--K"));
    } else {
      command = "weyl";
      if (wz->count() == 0 && wt->count() == 0) throw UsageError("weyl needs --z or --table");
      if (wz->count()) {
        if (csv) throw UsageError("--csv applies to --table only");
        outcome = cmd_weyl_point(job, parse_z(wz_text));
      } else {
        const WeylTable t = parse_table(table_text, job.config.dimension);
        if (csv) {
          write_csv(out, job, t);
          return kExitOk;
        }
        outcome = cmd_weyl_table(job, t);
      }
    }
  } catch (const ConfigError& e) {
    err << "pointint: invalid config: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "pointint: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SpectrumHitError& e) {
    err << "pointint: spectrum hit: " << e.what() << '\n';
    return kExitSpectrumHit;
  } catch (const DomainError& e) {
    err << "pointint: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "pointint: unsupported: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "pointint: " << to_string(e.kind()) << " error: " << e.what() << '\n';
    return kExitFailure;
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool warned = !outcome.warnings.empty();
  const Json env = envelope(command, job, outcome, secs);
  out << env.dump(compact ? -1 : 2) << '\n';
  if (warned) {
    for (const auto& w : env["warnings"]) err << "pointint: warning: " << w.get<std::string>() << '\n';
  }
  return strict && warned ? kExitStrict : kExitOk;
}

}  // namespace pointint::cli
