#include "afd/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "afd/circulant3.hpp"
#include "afd/embed.hpp"
#include "afd/limits.hpp"
#include "afd/rank_two.hpp"
#include "afd/two_by_two.hpp"

namespace afd::cli {

namespace {

constexpr const char* kCertified = "theorem-certified";
constexpr const char* kSampled = "sampled";
constexpr const char* kEmpirical = "empirical";

constexpr const char* kHook2x2 = "2x2 classification via the odd-root bound b";
constexpr const char* kHookI3 = "circulant I3 limit condition s0 >= sqrt(3)|t0|";
constexpr const char* kHookC3 = "circulant C3 sufficient condition sqrt(3)|t0 + 2pi/3| <= s0";
constexpr const char* kHookC3sq = "circulant C3^2 sufficient condition sqrt(3)|t0 - 2pi/3| <= s0";
constexpr const char* kHookRank2 = "rank-two block form B(alpha, lambda)";
constexpr const char* kHookKingman = "Kingman embedding: principal log is a generator";
constexpr const char* kHookInverseM = "stochastic inverse of an M-matrix";
constexpr const char* kHookFactor = "limit factorization A = L exp(Q) gives CP(l0) in P+(A)";
constexpr const char* kHookIndex = "cyclic index bound P+(A) in CP(h)";

Json certified(const char* hook) { return {{"provenance", kCertified}, {"hook", hook}}; }

Json sampled(int c_max) { return {{"provenance", kSampled}, {"c_max", c_max}}; }

Json divisibility_json(const DivisibilityReport& r, Json claim) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["members"] = r.members;
  j["c_max"] = r.c_max;
  if (r.kind == DivisibilityKind::superset_cp) j["cp_modulus"] = r.cp_modulus;
  j["undetermined"] = r.undetermined;
  j["index_bound"] = r.index_bound ? Json(*r.index_bound) : Json(nullptr);
  if (r.index_bound) j["index_bound_claim"] = certified(kHookIndex);
  j["warnings"] = r.warnings;
  j["claim"] = std::move(claim);
  return j;
}

Json limit_json(const RealMatrix& l, Json claim) {
  Json j = std::move(claim);
  j["matrix"] = matrix_json(l);
  return j;
}

bool nonsingular(const RealMatrix& a) {
  return numerical_rank(a.cast<Complex>(), 1e-12 * std::max(1.0, inf_norm(a))) == a.rows();
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<int> parts;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

Json generator_json(const StochasticMatrix& a, bool& embeddable) {
  embeddable = false;
  if (!nonsingular(a.matrix())) {
    return {{"status", "not_applicable"}, {"detail", "singular matrix has no logarithm"}};
  }
  const GeneratorResult g = extract_generator(a, a.tol());
  if (g.ok()) {
    embeddable = true;
    Json j = certified(kHookKingman);
    j["status"] = "certified";
    j["matrix"] = matrix_json(*g.generator);
    return j;
  }
  return {{"status", "rejected"}, {"reason", to_string(g.rejection)}, {"detail", g.detail}};
}

void add_two_by_two(const StochasticMatrix& a, Json& report) {
  const TwoByTwoParams p = TwoByTwoParams::from_matrix(a);
  const TwoByTwoClassification cl = two_by_two_classify(p);
  report["family"] = {{"name", "2x2"},
                      {"parameters",
                       {{"s", p.s},
                        {"t", p.t},
                        {"lambda", p.lambda()},
                        {"odd_bound", real_json(cl.odd_bound)},
                        {"singular", cl.singular}}}};
  report["boundary"] = cl.boundary;
  report["divisibility"] = divisibility_json(cl.report, certified(kHook2x2));
  for (const auto& l : cl.limits) report["limits"].push_back(limit_json(l, certified(kHook2x2)));
}

void add_circulant(const StochasticMatrix& a, int c_max, Json& report) {
  const CirculantParams p = circulant_from_matrix(a);
  const CirculantClassification cl = circulant_classify(p, c_max);
  report["family"] = {{"name", "circulant-3"},
                      {"parameters", {{"s", p.s}, {"t", p.t}}},
                      {"flags",
                       {{"i3_limit", cl.i3_limit},
                        {"c3_sufficient", cl.c3_sufficient},
                        {"c3sq_sufficient", cl.c3sq_sufficient},
                        {"i3_margin", cl.i3_margin},
                        {"c3_margin", cl.c3_margin},
                        {"c3sq_margin", cl.c3sq_margin}}}};
  report["boundary"] = cl.boundary;
  Json claim;
  if (cl.i3_limit) {
    claim = certified(kHookI3);
  } else if (cl.c3_sufficient) {
    claim = certified(kHookC3);
    claim["members_claim"] = sampled(c_max);
  } else if (cl.c3sq_sufficient) {
    claim = certified(kHookC3sq);
    claim["members_claim"] = sampled(c_max);
  } else {
    claim = sampled(c_max);
  }
  report["divisibility"] = divisibility_json(cl.report, claim);
  const RealMatrix c3 = cycle_matrix(3);
  if (cl.i3_limit) {
    report["limits"].push_back(limit_json(RealMatrix::Identity(3, 3), certified(kHookI3)));
  }
  if (cl.c3_sufficient) {
    report["limits"].push_back(limit_json(c3, certified(cl.i3_limit ? kHookI3 : kHookC3)));
  }
  if (cl.c3sq_sufficient) {
    report["limits"].push_back(
        limit_json(RealMatrix(c3 * c3), certified(cl.i3_limit ? kHookI3 : kHookC3sq)));
  }
}

void add_rank_two(const StochasticMatrix& a, int c_max, Json& report) {
  const RankTwoClassification cl = rank_two_classify(a, c_max);
  Json family = {{"name", "rank-2"}};
  if (cl.params) {
    const RankTwoParams& p = *cl.params;
    family["parameters"] = {{"n1", p.n1()},
                            {"n2", p.n2()},
                            {"w", std::vector<double>(p.w.data(), p.w.data() + p.w.size())},
                            {"v", std::vector<double>(p.v.data(), p.v.data() + p.v.size())},
                            {"alpha", p.alpha},
                            {"lambda", p.lambda},
                            {"order", cl.order}};
    report["divisibility"] = divisibility_json(cl.report, certified(kHookRank2));
    auto permuted = [&](const RealMatrix& b) {
      RealMatrix out(b.rows(), b.cols());
      for (Eigen::Index i = 0; i < b.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
          out(cl.order[static_cast<std::size_t>(i)], cl.order[static_cast<std::size_t>(j)]) = b(i, j);
        }
      }
      return out;
    };
    report["limits"].push_back(
        limit_json(permuted(rank_two_root(p, 1.0).real()), certified(kHookRank2)));
    if (std::abs(p.alpha - 1.0) <= 1e-8) {
      report["limits"].push_back(
          limit_json(permuted(rank_two_root(p, -1.0).real()), certified(kHookRank2)));
    }
  } else {
    family["rejection"] = *cl.rejection;
    Json claim = sampled(c_max);
    if (cl.report.kind == DivisibilityKind::finite) {
      claim = certified(kHookRank2);
      claim["members_claim"] = sampled(c_max);
    }
    report["divisibility"] = divisibility_json(cl.report, claim);
  }
  report["family"] = std::move(family);
}

void add_generic(const StochasticMatrix& a, int c_max, bool embeddable, Json& report) {
  report["family"] = {{"name", "generic"}};
  DivisibilityReport div;
  try {
    div = sample_p_plus(a, c_max, a.tol());
  } catch (const Error& e) {
    div.kind = DivisibilityKind::sampled;
    div.c_max = c_max;
    div.undetermined = true;
    div.warnings.push_back(std::string("root sampling failed: ") + e.what());
  }

  const bool inverse_m = nonsingular(a.matrix()) && is_inverse_M_matrix(a, a.tol());
  Json claim = sampled(c_max);
  if (embeddable || inverse_m) {
    div.kind = DivisibilityKind::all_n;
    claim = certified(embeddable ? kHookKingman : kHookInverseM);
  }

  const auto limits = certify_permutation_limits(a, a.tol());
  Json supersets = Json::array();
  std::set<int> moduli;
  for (const auto& l : limits) {
    Json j = limit_json(l.limit, certified(kHookFactor));
    j["partition"] = l.cycle_type;
    j["l0"] = l.l0;
    report["limits"].push_back(std::move(j));
    moduli.insert(l.l0);
  }
  for (int m : moduli) {
    Json s = certified(kHookFactor);
    s["cp_modulus"] = m;
    supersets.push_back(std::move(s));
  }
  Json d = divisibility_json(div, claim);
  d["certified_supersets"] = std::move(supersets);
  report["divisibility"] = std::move(d);

  // Empirical clusters among the sampled witnesses.
  std::vector<std::pair<int, StochasticMatrix>> seq;
  for (const auto& [c, w] : div.witnesses) {
    if (c > 1) seq.emplace_back(c, StochasticMatrix::from(w, std::max(a.tol(), 1e-9)));
  }
  for (const auto& p : accumulation_points(seq, 0.1)) {
    if (!p.empirical) continue;
    Json j = limit_json(p.center, {{"provenance", kEmpirical}, {"members", p.members},
                                   {"first_c", p.first_c}, {"last_c", p.last_c}});
    j["matched_partition"] = p.matched_partition ? Json(*p.matched_partition) : Json(nullptr);
    report["limits"].push_back(std::move(j));
  }
}

}  // namespace

std::string detect_family(const StochasticMatrix& a) {
  const RealMatrix& m = a.matrix();
  if (a.size() == 2 && m(0, 0) < 1.0 && m(1, 1) < 1.0) return "2x2";
  if (a.size() == 3 && is_circulant3(m, std::max(a.tol(), 1e-12)) && nonsingular(m)) {
    return "circulant-3";
  }
  if (a.size() >= 3 && a.irreducible() && has_rank_two(m)) return "rank-2";
  return "generic";
}

std::vector<CertifiedLimit> certify_permutation_limits(const StochasticMatrix& a, double tol) {
  std::vector<CertifiedLimit> out;
  const int n = a.size();
  if (n > 6 || !nonsingular(a.matrix())) return out;
  const RealMatrix& m = a.matrix();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    RealMatrix l = RealMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) l(i, perm[static_cast<std::size_t>(i)]) = 1.0;
    if (inf_norm(RealMatrix(l * m - m * l)) > tol) continue;
    const auto a0 = StochasticMatrix::try_from(RealMatrix(l.transpose() * m), tol);
    if (!a0) continue;
    const GeneratorResult g = extract_generator(*a0, tol);
    if (!g.ok()) continue;
    CertifiedLimit c;
    c.limit = l;
    c.cycle_type = cycle_type(perm);
    c.l0 = std::accumulate(c.cycle_type.begin(), c.cycle_type.end(), 1,
                           [](int x, int y) { return std::lcm(x, y); });
    c.generator = *g.generator;
    out.push_back(std::move(c));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Json spectrum_json(const StochasticMatrix& a) {
  Json out = Json::array();
  const EigenDecomposition d = spectrum(a.complex());
  for (std::size_t k = 0; k < d.distinct_count(); ++k) {
    out.push_back({{"re", d.eigenvalues[k].real()},
                   {"im", d.eigenvalues[k].imag()},
                   {"multiplicity", d.multiplicities[k]},
                   {"jordan_blocks", d.block_sizes[k]}});
  }
  return out;
}

Json analyze_report(const StochasticMatrix& a, int c_max) {
  Json report;
  report["n"] = a.size();
  report["tol"] = a.tol();
  report["c_max"] = c_max;
  report["matrix"] = matrix_json(a.matrix());
  report["irreducible"] = a.irreducible();
  report["limits"] = Json::array();
  report["boundary"] = false;
  report["warnings"] = Json::array();
  try {
    report["spectrum"] = spectrum_json(a);
  } catch (const Error& e) {
    report["spectrum"] = nullptr;
    report["warnings"].push_back(std::string("spectrum: ") + e.what());
  }

  bool embeddable = false;
  report["generator"] = generator_json(a, embeddable);
  report["inverse_m_matrix"] =
      nonsingular(a.matrix()) ? Json(is_inverse_M_matrix(a, a.tol())) : Json(nullptr);

  const std::string family = detect_family(a);
  if (family == "2x2") {
    add_two_by_two(a, report);
  } else if (family == "circulant-3") {
    add_circulant(a, c_max, report);
  } else if (family == "rank-2") {
    add_rank_two(a, c_max, report);
  } else {
    add_generic(a, c_max, embeddable, report);
  }
  return report;
}

}  // namespace afd::cli
