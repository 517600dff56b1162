#include "afd/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace afd {

const char* to_string(DivisibilityKind kind) noexcept {
  switch (kind) {
    case DivisibilityKind::all_n: return "ALL_N";
    case DivisibilityKind::odd_n: return "ODD_N";
    case DivisibilityKind::finite: return "FINITE";
    case DivisibilityKind::superset_cp: return "SUPERSET_CP";
    case DivisibilityKind::sampled: return "SAMPLED";
  }
  return "UNKNOWN";
}

std::optional<bool> DivisibilityReport::contains(int c) const {
  if (c < 1) return false;
  const bool observed = std::find(members.begin(), members.end(), c) != members.end();
  switch (kind) {
    case DivisibilityKind::all_n: return true;
    case DivisibilityKind::odd_n: return c % 2 == 1;
    case DivisibilityKind::finite: return observed;
    case DivisibilityKind::superset_cp:
      if (std::gcd(c, cp_modulus) == 1) return true;
      [[fallthrough]];
    case DivisibilityKind::sampled:
      if (c <= c_max) return observed;
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

void require_semisimple_zero(const EigenDecomposition& d) {
  for (std::size_t k = 0; k < d.distinct_count(); ++k) {
    if (d.eigenvalues[k] != Complex(0.0, 0.0)) continue;
    if (d.block_sizes[k].empty() || d.block_sizes[k].front() > 1) {
      throw Error(ErrorKind::unsupported,
                  "root enumeration: nontrivial nilpotent part is not supported");
    }
  }
}

std::size_t checked_product(const std::vector<std::size_t>& counts, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t c : counts) {
    if (c == 0) return 0;
    if (total > cap / c) {
      std::ostringstream os;
      os << "root enumeration: branch count exceeds the cap of " << cap;
      throw Error(ErrorKind::enumeration_cap, os.str());
    }
    total *= c;
  }
  return total;
}

// Calls visit(indices) for every tuple in the product of [0, counts[i]).
template <typename Visit>
void for_each_tuple(const std::vector<std::size_t>& counts, Visit&& visit) {
  std::vector<std::size_t> idx(counts.size(), 0);
  while (true) {
    visit(idx);
    std::size_t pos = 0;
    while (pos < idx.size()) {
      if (++idx[pos] < counts[pos]) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) return;
  }
}

}  // namespace

ComplexMatrix primary_root(const ComplexMatrix& a, const EigenDecomposition& decomp, int p,
                           const std::vector<Complex>& root_values) {
  const Eigen::Index n = a.rows();
  ComplexMatrix result = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < decomp.distinct_count(); ++k) {
    const Complex lambda = decomp.eigenvalues[k];
    if (lambda == Complex(0.0, 0.0)) continue;
    const int m = decomp.multiplicities[k];
    const int largest_block = decomp.block_sizes[k].front();
    const ComplexMatrix nilpotent =
        decomp.restrict(a, k) - lambda * ComplexMatrix::Identity(m, m);
    const auto binom = generalized_binomials(1.0 / p, largest_block);
    ComplexMatrix local = root_values[k] * ComplexMatrix::Identity(m, m);
    ComplexMatrix nil_power = ComplexMatrix::Identity(m, m);
    Complex lambda_power = 1.0;
    for (int i = 1; i < largest_block; ++i) {
      nil_power = nil_power * nilpotent;
      lambda_power *= lambda;
      local += (binom[i] * root_values[k] / lambda_power) * nil_power;
    }
    result += decomp.right_block(k) * local * decomp.left_block(k);
  }
  return result;
}

std::vector<ComplexMatrix> enumerate_polynomial_roots(const ComplexMatrix& a, int p, double tol,
                                                      std::size_t cap) {
  if (p < 1) throw Error(ErrorKind::invalid_argument, "root order must be >= 1");
  const EigenDecomposition decomp = spectrum(a, tol);
  require_semisimple_zero(decomp);

  std::vector<std::size_t> nonzero;
  for (std::size_t k = 0; k < decomp.distinct_count(); ++k) {
    if (decomp.eigenvalues[k] != Complex(0.0, 0.0)) nonzero.push_back(k);
  }
  const std::vector<std::size_t> counts(nonzero.size(), static_cast<std::size_t>(p));
  checked_product(counts, cap);

  std::vector<ComplexMatrix> roots;
  std::vector<Complex> values(decomp.distinct_count(), 0.0);
  for_each_tuple(counts, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < nonzero.size(); ++i) {
      const std::size_t k = nonzero[i];
      values[k] = scalar_root_branch(decomp.eigenvalues[k], RootBranch(p, static_cast<int>(idx[i])));
    }
    roots.push_back(primary_root(a, decomp, p, values));
  });
  return roots;
}

std::vector<StochasticMatrix> stochastic_roots(const StochasticMatrix& a, int c, double tol,
                                               std::size_t cap) {
  if (c < 1) throw Error(ErrorKind::invalid_argument, "root order must be >= 1");
  if (c == 1) return {a};

  const ComplexMatrix ac = a.complex();
  const EigenDecomposition decomp = spectrum(ac);
  require_semisimple_zero(decomp);

  // Each slot assigns root values to one real eigenvalue or one conjugate pair.
  struct Slot {
    std::size_t index;
    int partner = -1;
    std::vector<Complex> choices;
  };
  std::vector<Slot> slots;
  for (std::size_t k = 0; k < decomp.distinct_count(); ++k) {
    const Complex lambda = decomp.eigenvalues[k];
    if (lambda == Complex(0.0, 0.0) || lambda.imag() < 0.0) continue;
    Slot slot;
    slot.index = k;
    if (lambda.imag() == 0.0) {
      const double r = std::pow(std::abs(lambda.real()), 1.0 / c);
      if (lambda.real() > 0.0) {
        slot.choices.push_back(r);
        if (c % 2 == 0) slot.choices.push_back(-r);
      } else if (c % 2 == 1) {
        slot.choices.push_back(-r);
      }
    } else {
      slot.partner = decomp.find(std::conj(lambda), decomp.tolerance);
      if (slot.partner >= 0) {
        for (int j = 0; j < c; ++j) slot.choices.push_back(scalar_root_branch(lambda, RootBranch(c, j)));
      }
    }
    slots.push_back(std::move(slot));
  }

  std::vector<std::size_t> counts;
  for (const auto& s : slots) counts.push_back(s.choices.size());
  if (checked_product(counts, cap) == 0) return {};

  const double scale = std::max(1.0, inf_norm(a.matrix()));
  std::vector<StochasticMatrix> out;
  std::vector<Complex> values(decomp.distinct_count(), 0.0);
  for_each_tuple(counts, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const Complex v = slots[i].choices[idx[i]];
      values[slots[i].index] = v;
      if (slots[i].partner >= 0) values[slots[i].partner] = std::conj(v);
    }
    const ComplexMatrix b = primary_root(ac, decomp, c, values);
    if (max_imag(b) > 1e-8 * scale) return;
    auto candidate = StochasticMatrix::try_from(RealMatrix(b.real()), tol);
    if (!candidate) return;
    const double residual =
        inf_norm(RealMatrix(matrix_power(candidate->matrix(), static_cast<unsigned>(c)) - a.matrix()));
    if (residual <= 10.0 * tol) out.push_back(std::move(*candidate));
  });
  return out;
}

int cyclic_index(const StochasticMatrix& a) {
  if (!a.irreducible()) throw Error(ErrorKind::reducible, "cyclic_index: matrix is reducible");
  const int n = a.size();
  const double edge = a.tol();
  std::vector<int> level(n, -1);
  std::vector<int> queue{0};
  level[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v = 0; v < n; ++v) {
      if (a(u, v) > edge && level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  int period = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (a(u, v) > edge) period = std::gcd(period, std::abs(level[u] + 1 - level[v]));
    }
  }
  return period;
}

DivisibilityReport sample_p_plus(const StochasticMatrix& a, int c_max, double tol) {
  if (c_max < 1) throw Error(ErrorKind::invalid_argument, "sample_p_plus: c_max must be >= 1");
  DivisibilityReport report;
  report.kind = DivisibilityKind::sampled;
  report.c_max = c_max;
  if (a.irreducible()) {
    report.index_bound = cyclic_index(a);
  } else {
    report.warnings.push_back("reducible input: index bound omitted");
  }
  for (int c = 1; c <= c_max; ++c) {
    if (report.index_bound && std::gcd(c, *report.index_bound) > 1) continue;
    auto roots = stochastic_roots(a, c, tol);
    if (roots.empty()) continue;
    report.members.push_back(c);
    report.witnesses.emplace(c, roots.front().matrix());
  }
  return report;
}

}  // namespace afd
