#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lapbound/graph.hpp"

namespace lapbound {

/// Dense symmetric matrix; mirror entries are stored bit-identically.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int order);
    /// Builds 0.5*(A + Aᵀ) from arbitrary row-major input.
    static SymmetricMatrix symmetrized(int order, const std::vector<double>& row_major);

    int order() const { return n_; }
    double operator()(int i, int j) const { return a_[idx(i, j)]; }
    /// Sets (i,j) and (j,i) to the same value.
    void set(int i, int j, double v);
    double frobenius_norm() const;
    const std::vector<double>& data() const { return a_; }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
    int n_;
    std::vector<double> a_;
};

/// Descending real spectrum.  For Laplacians, eigenvalues within zero_tol of 0
/// are clamped to exactly 0; raw keeps the unclamped values for diagnostics.
struct Spectrum {
    std::vector<double> values;
    std::vector<double> raw;
    double zero_tol = 0.0;

    int size() const { return static_cast<int>(values.size()); }
    /// 1-based, λ_1 is the largest.
    double lambda(int i) const;
    double sum_largest(int m) const;
    /// Sum of the m smallest, including λ_n.
    double sum_smallest(int m) const;
    /// Σ_{i=1..m} λ_{n-i}: the m smallest with λ_n excluded.
    double sum_smallest_excluding_min(int m) const;
    int zero_multiplicity() const;
};

/// Cyclic Jacobi on dense symmetric storage.  Converged when the off-diagonal
/// Frobenius norm drops below 1e-12*(1+‖A‖_F); hard cap of 100 sweeps.
/// Deterministic: fixed rotation order, no data-dependent pivoting.
Spectrum eigenvalues_sym(const SymmetricMatrix& a);

struct EigenDecomposition {
    Spectrum spectrum;
    int order = 0;
    std::vector<double> vectors;  // row-major; column k pairs with spectrum.values[k]
    double vector_entry(int row, int k) const {
        return vectors[static_cast<std::size_t>(row) * order + k];
    }
};
EigenDecomposition eigen_sym(const SymmetricMatrix& a);

/// Largest eigenvalue with a unit eigenvector; residual-checked.
std::pair<double, std::vector<double>> eigenpair_max(const SymmetricMatrix& a);

SymmetricMatrix laplacian(const Graph& g);
/// Laplacian spectrum with zero clamping at 1e-9*(1+‖L‖_F).
Spectrum laplacian_spectrum(const Graph& g);

/// Comparison tolerance for inequality/equality checks: 1e-8*(1+‖a‖_F).
double comparison_tol(const SymmetricMatrix& a);
double comparison_tol(const Graph& g);

struct Partition {
    std::vector<VertexSubset> classes;

    static Partition singletons(int n);
    int class_count() const { return static_cast<int>(classes.size()); }
    /// Disjoint, covering [0,order), no empty class.
    void validate(int order) const;
};

/// {u1},...,{um} as singletons, then the complement as one class.
Partition pointed_partition(const VertexSubset& u, int n);

struct QuotientMatrix {
    int m = 0;
    std::vector<double> row_average;  // average block row sums, row-major m×m
    SymmetricMatrix sym;              // D^{1/2} B D^{-1/2}: similar, symmetric

    double b(int i, int j) const { return row_average[static_cast<std::size_t>(i) * m + j]; }
};
QuotientMatrix quotient(const SymmetricMatrix& a, const Partition& p);

struct InterlacingReport {
    bool holds = false;
    std::vector<double> upper_slack;  // λ_i − μ_i
    std::vector<double> lower_slack;  // μ_i − λ_{n-m+i}
    bool tight = false;
    std::optional<int> tight_split_k;  // largest feasible split index
};
/// Checks λ_i ≥ μ_i ≥ λ_{n-m+i} for i=1..m within tol.
InterlacingReport check_interlacing(const Spectrum& big, const Spectrum& small, double tol);

struct AlmostEquitableResult {
    bool equitable = false;
    std::optional<std::pair<int, int>> violation;  // first failing (vertex, class index)
};
/// True when every vertex of U_i has the same number of neighbors in U_j for
/// all i ≠ j (within-class regularity not required).
AlmostEquitableResult is_almost_equitable(const Graph& g, const Partition& p);

/// Constant row sums inside every block, within tol.
bool is_equitable(const SymmetricMatrix& a, const Partition& p, double tol);

struct EquitableSpectrumReport {
    bool quotient_spectrum_contained = false;
    bool eigenvectors_split = false;
    bool shift_invariant = false;
    bool ok = false;
};
/// For an equitable partition, confirms the quotient spectrum is a sub-multiset
/// of the full spectrum, that an eigenbasis splits into class-constant vectors
/// and vectors orthogonal to all class indicators, and that the orthogonal
/// eigenpairs survive constant per-block shifts (shift constants drawn from the
/// given seed).
EquitableSpectrumReport verify_equitable_spectrum(const SymmetricMatrix& a, const Partition& p,
                                                  std::uint64_t seed, double tol);

} // namespace lapbound
