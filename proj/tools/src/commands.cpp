#include "afd/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "afd/circulant3.hpp"
#include "afd/cli/json_out.hpp"
#include "afd/cli/matrix_io.hpp"
#include "afd/cli/report.hpp"
#include "afd/embed.hpp"
#include "afd/two_by_two.hpp"

namespace afd::cli {

namespace {

double parse_endpoint(const std::string& text) {
  if (text == "pi") return std::numbers::pi;
  if (text == "-pi") return -std::numbers::pi;
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid range endpoint \"" + text + "\"");
  }
  if (used != text.size() || !std::isfinite(x)) {
    throw ParseError("invalid range endpoint \"" + text + "\"");
  }
  return x;
}

std::string real_text(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

double resolve_tol(const CLI::Option* flag, double flag_value, const MatrixFile& file) {
  if (flag->count() > 0) return flag_value;
  return file.tol.value_or(kDefaultTol);
}

}  // namespace

double Range::at(int i) const {
  if (n == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / (n - 1);
}

Range parse_range(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (a == std::string::npos || b == std::string::npos || text.find(':', b + 1) != std::string::npos) {
    throw ParseError("range must have the form lo:hi:n, got \"" + text + "\"");
  }
  Range r;
  r.lo = parse_endpoint(text.substr(0, a));
  r.hi = parse_endpoint(text.substr(a + 1, b - a - 1));
  const std::string count = text.substr(b + 1);
  std::size_t used = 0;
  long n = 0;
  try {
    n = std::stol(count, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid point count \"" + count + "\"");
  }
  if (used != count.size() || n < 1 || n > 100000) {
    throw ParseError("invalid point count \"" + count + "\"");
  }
  r.n = static_cast<int>(n);
  if (r.hi < r.lo) throw ParseError("range upper end is below the lower end");
  return r;
}

std::vector<ScanRow> scan_circulant(const Range& s, const Range& t, unsigned threads) {
  if (s.lo < 0.0) throw ParseError("s range must be nonnegative");
  std::vector<ScanRow> rows(static_cast<std::size_t>(s.n) * static_cast<std::size_t>(t.n));
  const double third = 2.0 * std::numbers::pi / 3.0;
  auto work = [&](unsigned worker, unsigned workers) {
    for (int i = static_cast<int>(worker); i < s.n; i += static_cast<int>(workers)) {
      for (int j = 0; j < t.n; ++j) {
        ScanRow& row = rows[static_cast<std::size_t>(i) * t.n + j];
        row.s = s.at(i);
        row.t = t.at(j);
        const CirculantParams p(row.s, row.t);
        const double i3 = circulant_limit_margin(p, 0.0);
        const double c3 = circulant_limit_margin(p, -third);
        const double c3sq = circulant_limit_margin(p, third);
        const double nonneg = circulant_nonneg_margin(p);
        row.nonneg = circulant_is_nonneg(p);
        // Same flag semantics as circulant_classify: I3 brings C3 and C3^2 along.
        row.i3_limit = row.nonneg && i3 >= -kBoundaryTol;
        row.c3_suff = row.nonneg && (row.i3_limit || c3 >= -kBoundaryTol);
        row.c3sq_suff = row.nonneg && (row.i3_limit || c3sq >= -kBoundaryTol);
        row.boundary = std::abs(nonneg) <= kBoundaryTol || std::abs(i3) <= kBoundaryTol ||
                       std::abs(c3) <= kBoundaryTol || std::abs(c3sq) <= kBoundaryTol;
      }
    }
  };
  threads = std::clamp(threads, 1u, static_cast<unsigned>(std::max(1, s.n)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w, threads);
  work(0, threads);
  for (auto& th : pool) th.join();
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stochastic matrix roots and arbitrarily fine divisibility", "afd"};
  app.require_subcommand(1);

  std::string path;
  std::string root_path;
  double tol = kDefaultTol;
  int c_max = kDefaultCmax;
  int c = 2;
  std::string s_range = "0:2:100";
  std::string t_range = "-pi:pi:100";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());

  auto* analyze = app.add_subcommand("analyze", "Classify a stochastic matrix (JSON)");
  analyze->add_option("matrix", path, "Matrix file (.json or .csv)")->required();
  auto* analyze_tol = analyze->add_option("--tol", tol, "Stochastic tolerance");
  analyze->add_option("--cmax", c_max, "Largest sampled root order")->check(CLI::Range(1, 10000));

  auto* roots = app.add_subcommand("roots", "Stochastic c-th roots (JSON)");
  roots->add_option("matrix", path, "Matrix file")->required();
  roots->add_option("--c", c, "Root order")->required()->check(CLI::Range(1, 100000));
  auto* roots_tol = roots->add_option("--tol", tol, "Stochastic tolerance");

  auto* scan = app.add_subcommand("scan-circulant", "Circulant region flags on a grid (CSV)");
  scan->add_option("--s-range", s_range, "lo:hi:n for s");
  scan->add_option("--t-range", t_range, "lo:hi:n for t");
  scan->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 1024u));

  auto* verify = app.add_subcommand("verify", "Check that B^c = A for a candidate root B");
  verify->add_option("matrix", path, "Matrix file for A")->required();
  verify->add_option("--root", root_path, "Matrix file for B")->required();
  verify->add_option("--c", c, "Root order")->required()->check(CLI::Range(1, 100000));
  auto* verify_tol = verify->add_option("--tol", tol, "Tolerance");

  auto* embed = app.add_subcommand("embed", "Generator extraction (JSON)");
  embed->add_option("matrix", path, "Matrix file")->required();
  auto* embed_tol = embed->add_option("--tol", tol, "Tolerance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (analyze->parsed()) {
      const MatrixFile file = read_matrix_file(path);
      const StochasticMatrix a = StochasticMatrix::from(file.matrix, resolve_tol(analyze_tol, tol, file));
      out << dump_json(analyze_report(a, c_max));
      return kExitOk;
    }
    if (roots->parsed()) {
      const MatrixFile file = read_matrix_file(path);
      const StochasticMatrix a = StochasticMatrix::from(file.matrix, resolve_tol(roots_tol, tol, file));
      Json j;
      j["c"] = c;
      j["roots"] = Json::array();
      for (const auto& r : stochastic_roots(a, c, a.tol())) j["roots"].push_back(matrix_json(r.matrix()));
      j["count"] = j["roots"].size();
      j["status"] = j["roots"].empty() ? "none" : "found";
      j["claim"] = {{"provenance", "sampled"}, {"method", "primary roots"}};
      out << dump_json(j);
      return kExitOk;
    }
    if (scan->parsed()) {
      const Range sr = parse_range(s_range);
      const Range tr = parse_range(t_range);
      const auto rows = scan_circulant(sr, tr, threads);
      out << "s,t,nonneg,i3_limit,c3_suff,c3sq_suff\n";
      int boundary = 0;
      for (const auto& r : rows) {
        out << real_text(r.s) << ',' << real_text(r.t) << ',' << r.nonneg << ',' << r.i3_limit
            << ',' << r.c3_suff << ',' << r.c3sq_suff << '\n';
        if (r.boundary) {
          ++boundary;
          err << "boundary: s=" << real_text(r.s) << " t=" << real_text(r.t) << "\n";
        }
      }
      if (boundary > 0) err << boundary << " grid points within 1e-12 of a region boundary\n";
      return kExitOk;
    }
    if (verify->parsed()) {
      const MatrixFile fa = read_matrix_file(path);
      const MatrixFile fb = read_matrix_file(root_path);
      if (fa.matrix.rows() != fb.matrix.rows()) {
        throw ParseError("shape mismatch: A is " + std::to_string(fa.matrix.rows()) + "x" +
                         std::to_string(fa.matrix.rows()) + ", root is " +
                         std::to_string(fb.matrix.rows()) + "x" + std::to_string(fb.matrix.rows()));
      }
      const double t = resolve_tol(verify_tol, tol, fa);
      const StochasticMatrix a = StochasticMatrix::from(fa.matrix, t);
      const auto violation = stochastic_violation(fb.matrix, t);
      const double residual =
          inf_norm(RealMatrix(matrix_power(fb.matrix, static_cast<unsigned>(c)) - a.matrix()));
      const bool pass = !violation && residual <= 10.0 * t;
      Json j;
      j["c"] = c;
      j["tol"] = t;
      j["residual"] = residual;
      j["residual_ok"] = residual <= 10.0 * t;
      j["root_stochastic"] = !violation;
      if (violation) j["root_violation"] = *violation;
      j["pass"] = pass;
      out << dump_json(j);
      return pass ? kExitOk : kExitFailed;
    }
    if (embed->parsed()) {
      const MatrixFile file = read_matrix_file(path);
      const StochasticMatrix a = StochasticMatrix::from(file.matrix, resolve_tol(embed_tol, tol, file));
      const GeneratorResult g = extract_generator(a, a.tol());
      Json j;
      j["embeddable"] = g.ok();
      if (g.ok()) {
        j["generator"] = matrix_json(*g.generator);
        j["claim"] = {{"provenance", "theorem-certified"},
                      {"hook", "Kingman embedding: principal log is a generator"}};
      } else {
        j["rejection"] = to_string(g.rejection);
        j["detail"] = g.detail;
      }
      j["inverse_m_matrix"] = is_inverse_M_matrix(a, a.tol());
      out << dump_json(j);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::not_stochastic:
      case ErrorKind::singular:
        return kExitMatrix;
      case ErrorKind::not_square:
      case ErrorKind::invalid_argument:
        return kExitInput;
      default:
        return kExitFailed;
    }
  }
  return kExitFailed;
}

}  // namespace afd::cli
