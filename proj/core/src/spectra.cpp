#include "lapbound/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lapbound/rng.hpp"

namespace lapbound {

SymmetricMatrix::SymmetricMatrix(int order)
    : n_(order), a_(static_cast<std::size_t>(order) * order, 0.0) {
    if (order < 1) throw std::invalid_argument("matrix order must be >= 1");
}

SymmetricMatrix SymmetricMatrix::symmetrized(int order, const std::vector<double>& row_major) {
    if (row_major.size() != static_cast<std::size_t>(order) * order)
        throw std::invalid_argument("symmetrized: size mismatch");
    SymmetricMatrix m(order);
    for (int i = 0; i < order; ++i)
        for (int j = i; j < order; ++j) {
            double v = 0.5 * (row_major[static_cast<std::size_t>(i) * order + j] +
                              row_major[static_cast<std::size_t>(j) * order + i]);
            m.set(i, j, v);
        }
    return m;
}

void SymmetricMatrix::set(int i, int j, double v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
}

double SymmetricMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double Spectrum::lambda(int i) const {
    if (i < 1 || i > size()) throw std::invalid_argument("lambda: index out of range");
    return values[static_cast<std::size_t>(i - 1)];
}

double Spectrum::sum_largest(int m) const {
    if (m < 0 || m > size()) throw std::invalid_argument("sum_largest: m out of range");
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += values[static_cast<std::size_t>(i)];
    return s;
}

double Spectrum::sum_smallest(int m) const {
    if (m < 0 || m > size()) throw std::invalid_argument("sum_smallest: m out of range");
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += values[static_cast<std::size_t>(size() - 1 - i)];
    return s;
}

double Spectrum::sum_smallest_excluding_min(int m) const {
    if (m < 0 || m > size() - 1)
        throw std::invalid_argument("sum_smallest_excluding_min: m out of range");
    double s = 0.0;
    for (int i = 1; i <= m; ++i) s += values[static_cast<std::size_t>(size() - 1 - i)];
    return s;
}

int Spectrum::zero_multiplicity() const {
    int c = 0;
    for (double v : values)
        if (v == 0.0) ++c;
    return c;
}

namespace {

struct JacobiState {
    std::vector<double> a;  // row-major, mutated in place
    std::vector<double> v;  // eigenvector accumulator (optional)
    int n = 0;
};

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double x = a[static_cast<std::size_t>(i) * n + j];
            s += 2.0 * x * x;
        }
    return std::sqrt(s);
}

void jacobi(JacobiState& st, double fro, bool want_vectors) {
    const int n = st.n;
    auto& a = st.a;
    const double target = 1e-12 * (1.0 + fro);
    constexpr int kMaxSweeps = 100;

    if (want_vectors) {
        st.v.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) st.v[static_cast<std::size_t>(i) * n + i] = 1.0;
    }

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a, n) <= target) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[static_cast<std::size_t>(p) * n + q];
                if (apq == 0.0) continue;
                double app = a[static_cast<std::size_t>(p) * n + p];
                double aqq = a[static_cast<std::size_t>(q) * n + q];
                double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = ((theta >= 0.0) ? 1.0 : -1.0) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = a[static_cast<std::size_t>(k) * n + p];
                    double akq = a[static_cast<std::size_t>(k) * n + q];
                    double nkp = c * akp - s * akq;
                    double nkq = s * akp + c * akq;
                    a[static_cast<std::size_t>(k) * n + p] = nkp;
                    a[static_cast<std::size_t>(p) * n + k] = nkp;
                    a[static_cast<std::size_t>(k) * n + q] = nkq;
                    a[static_cast<std::size_t>(q) * n + k] = nkq;
                }
                a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
                a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
                a[static_cast<std::size_t>(p) * n + q] = 0.0;
                a[static_cast<std::size_t>(q) * n + p] = 0.0;

                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        double vkp = st.v[static_cast<std::size_t>(k) * n + p];
                        double vkq = st.v[static_cast<std::size_t>(k) * n + q];
                        st.v[static_cast<std::size_t>(k) * n + p] = c * vkp - s * vkq;
                        st.v[static_cast<std::size_t>(k) * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    if (!converged && off_diagonal_norm(a, n) > target)
        throw std::runtime_error("symmetric eigensolver did not converge within the sweep cap");
}

// Descending eigenvalue order; ties keep the lower original index first so the
// result is deterministic.
std::vector<int> sort_permutation(const std::vector<double>& d) {
    std::vector<int> perm(d.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
        return d[static_cast<std::size_t>(x)] > d[static_cast<std::size_t>(y)];
    });
    return perm;
}

} // namespace

Spectrum eigenvalues_sym(const SymmetricMatrix& a) {
    JacobiState st{a.data(), {}, a.order()};
    jacobi(st, a.frobenius_norm(), false);
    std::vector<double> d(static_cast<std::size_t>(a.order()));
    for (int i = 0; i < a.order(); ++i) d[static_cast<std::size_t>(i)] = st.a[static_cast<std::size_t>(i) * a.order() + i];
    auto perm = sort_permutation(d);
    Spectrum sp;
    sp.values.reserve(d.size());
    for (int k : perm) sp.values.push_back(d[static_cast<std::size_t>(k)]);
    sp.raw = sp.values;
    return sp;
}

EigenDecomposition eigen_sym(const SymmetricMatrix& a) {
    const int n = a.order();
    JacobiState st{a.data(), {}, n};
    jacobi(st, a.frobenius_norm(), true);
    std::vector<double> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = st.a[static_cast<std::size_t>(i) * n + i];
    auto perm = sort_permutation(d);

    EigenDecomposition out;
    out.order = n;
    out.spectrum.values.reserve(d.size());
    for (int k : perm) out.spectrum.values.push_back(d[static_cast<std::size_t>(k)]);
    out.spectrum.raw = out.spectrum.values;
    out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) {
        int src = perm[static_cast<std::size_t>(k)];
        for (int r = 0; r < n; ++r)
            out.vectors[static_cast<std::size_t>(r) * n + k] = st.v[static_cast<std::size_t>(r) * n + src];
    }
    return out;
}

std::pair<double, std::vector<double>> eigenpair_max(const SymmetricMatrix& a) {
    auto ed = eigen_sym(a);
    const int n = a.order();
    std::vector<double> vec(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) vec[static_cast<std::size_t>(r)] = ed.vector_entry(r, 0);
    double value = ed.spectrum.values[0];

    double resid = 0.0;
    for (int i = 0; i < n; ++i) {
        double av = 0.0;
        for (int j = 0; j < n; ++j) av += a(i, j) * vec[static_cast<std::size_t>(j)];
        double r = av - value * vec[static_cast<std::size_t>(i)];
        resid += r * r;
    }
    if (std::sqrt(resid) > 1e-8 * (1.0 + a.frobenius_norm()))
        throw std::runtime_error("eigenpair_max: residual check failed");
    return {value, vec};
}

SymmetricMatrix laplacian(const Graph& g) {
    const int n = g.order();
    SymmetricMatrix l(n);
    for (int i = 0; i < n; ++i) {
        l.set(i, i, static_cast<double>(g.degree(i)));
        for (int j : g.neighbors(i))
            if (j > i) l.set(i, j, -1.0);
    }
    return l;
}

Spectrum laplacian_spectrum(const Graph& g) {
    SymmetricMatrix l = laplacian(g);
    Spectrum sp = eigenvalues_sym(l);
    double tol = 1e-9 * (1.0 + l.frobenius_norm());
    sp.zero_tol = tol;
    for (double v : sp.values)
        if (v < -tol) throw std::runtime_error("laplacian spectrum: eigenvalue below -zero_tol");
    for (double& v : sp.values)
        if (std::abs(v) <= tol) v = 0.0;
    return sp;
}

double comparison_tol(const SymmetricMatrix& a) {
    return 1e-8 * (1.0 + a.frobenius_norm());
}

double comparison_tol(const Graph& g) {
    return comparison_tol(laplacian(g));
}

Partition Partition::singletons(int n) {
    Partition p;
    p.classes.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.classes.push_back(VertexSubset::of({i}));
    return p;
}

void Partition::validate(int order) const {
    std::vector<bool> seen(static_cast<std::size_t>(order), false);
    int covered = 0;
    for (const auto& cls : classes) {
        if (cls.empty()) throw std::invalid_argument("partition: empty class");
        for (int v : cls.members) {
            if (v < 0 || v >= order) throw std::invalid_argument("partition: vertex out of range");
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("partition: vertex in two classes");
            seen[static_cast<std::size_t>(v)] = true;
            ++covered;
        }
    }
    if (covered != order) throw std::invalid_argument("partition: does not cover all indices");
}

Partition pointed_partition(const VertexSubset& u, int n) {
    Partition p;
    for (int v : u.members) p.classes.push_back(VertexSubset::of({v}));
    VertexSubset rest = u.complement(n);
    if (!rest.empty()) p.classes.push_back(rest);
    p.validate(n);
    return p;
}

QuotientMatrix quotient(const SymmetricMatrix& a, const Partition& p) {
    p.validate(a.order());
    const int m = p.class_count();
    std::vector<double> block_sum(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            double s = 0.0;
            for (int r : p.classes[static_cast<std::size_t>(i)].members)
                for (int c : p.classes[static_cast<std::size_t>(j)].members) s += a(r, c);
            block_sum[static_cast<std::size_t>(i) * m + j] = s;
            block_sum[static_cast<std::size_t>(j) * m + i] = s;
        }

    QuotientMatrix q{m, std::vector<double>(static_cast<std::size_t>(m) * m, 0.0), SymmetricMatrix(m)};
    for (int i = 0; i < m; ++i) {
        double si = static_cast<double>(p.classes[static_cast<std::size_t>(i)].size());
        for (int j = 0; j < m; ++j)
            q.row_average[static_cast<std::size_t>(i) * m + j] =
                block_sum[static_cast<std::size_t>(i) * m + j] / si;
    }
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            double si = static_cast<double>(p.classes[static_cast<std::size_t>(i)].size());
            double sj = static_cast<double>(p.classes[static_cast<std::size_t>(j)].size());
            q.sym.set(i, j, block_sum[static_cast<std::size_t>(i) * m + j] / std::sqrt(si * sj));
        }
    return q;
}

InterlacingReport check_interlacing(const Spectrum& big, const Spectrum& small, double tol) {
    const int n = big.size();
    const int m = small.size();
    if (m > n) throw std::invalid_argument("check_interlacing: small spectrum larger than big");

    InterlacingReport rep;
    rep.upper_slack.reserve(static_cast<std::size_t>(m));
    rep.lower_slack.reserve(static_cast<std::size_t>(m));
    rep.holds = true;
    for (int i = 1; i <= m; ++i) {
        double up = big.lambda(i) - small.lambda(i);
        double lo = small.lambda(i) - big.lambda(n - m + i);
        rep.upper_slack.push_back(up);
        rep.lower_slack.push_back(lo);
        if (up < -tol || lo < -tol) rep.holds = false;
    }

    // Tight split: λ_i = μ_i for i <= k and μ_i = λ_{n-m+i} for i > k.
    std::vector<bool> up_eq(static_cast<std::size_t>(m)), lo_eq(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        up_eq[static_cast<std::size_t>(i)] = std::abs(rep.upper_slack[static_cast<std::size_t>(i)]) <= tol;
        lo_eq[static_cast<std::size_t>(i)] = std::abs(rep.lower_slack[static_cast<std::size_t>(i)]) <= tol;
    }
    for (int k = m; k >= 0; --k) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) ok = up_eq[static_cast<std::size_t>(i)];
        for (int i = k; i < m && ok; ++i) ok = lo_eq[static_cast<std::size_t>(i)];
        if (ok) {
            rep.tight = true;
            rep.tight_split_k = k;
            break;
        }
    }
    return rep;
}

AlmostEquitableResult is_almost_equitable(const Graph& g, const Partition& p) {
    p.validate(g.order());
    const int m = p.class_count();
    std::vector<std::vector<std::uint64_t>> masks;
    masks.reserve(static_cast<std::size_t>(m));
    for (const auto& cls : p.classes) masks.push_back(g.subset_mask(cls));

    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const auto& cls = p.classes[static_cast<std::size_t>(i)];
            int expected = g.neighbors_in(cls.members[0], masks[static_cast<std::size_t>(j)]);
            for (int v : cls.members) {
                if (g.neighbors_in(v, masks[static_cast<std::size_t>(j)]) != expected)
                    return {false, std::make_pair(v, j)};
            }
        }
    }
    return {true, std::nullopt};
}

bool is_equitable(const SymmetricMatrix& a, const Partition& p, double tol) {
    p.validate(a.order());
    const int m = p.class_count();
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const auto& rows = p.classes[static_cast<std::size_t>(i)].members;
            const auto& cols = p.classes[static_cast<std::size_t>(j)].members;
            double first = 0.0;
            bool have_first = false;
            for (int r : rows) {
                double s = 0.0;
                for (int c : cols) s += a(r, c);
                if (!have_first) {
                    first = s;
                    have_first = true;
                } else if (std::abs(s - first) > tol) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Greedy nearest-unused matching; adequate for multiset inclusion at desk scale.
bool multiset_contained(const std::vector<double>& sub, const std::vector<double>& super, double tol) {
    std::vector<bool> used(super.size(), false);
    for (double x : sub) {
        int best = -1;
        double best_gap = 0.0;
        for (std::size_t k = 0; k < super.size(); ++k) {
            if (used[k]) continue;
            double gap = std::abs(super[k] - x);
            if (best < 0 || gap < best_gap) {
                best = static_cast<int>(k);
                best_gap = gap;
            }
        }
        if (best < 0 || best_gap > tol) return false;
        used[static_cast<std::size_t>(best)] = true;
    }
    return true;
}

} // namespace

EquitableSpectrumReport verify_equitable_spectrum(const SymmetricMatrix& a, const Partition& p,
                                                  std::uint64_t seed, double tol) {
    if (!is_equitable(a, p, tol))
        throw std::invalid_argument("verify_equitable_spectrum: partition is not equitable");
    const int n = a.order();
    const int m = p.class_count();

    EquitableSpectrumReport rep;

    QuotientMatrix q = quotient(a, p);
    Spectrum qs = eigenvalues_sym(q.sym);
    Spectrum full = eigenvalues_sym(a);
    rep.quotient_spectrum_contained = multiset_contained(qs.values, full.values, tol);

    // Split every eigenvector into its class-constant part (projection onto the
    // indicator span) and the rest; both parts must stay eigenvectors.
    EigenDecomposition ed = eigen_sym(a);
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < m; ++c)
        for (int v : p.classes[static_cast<std::size_t>(c)].members) class_of[static_cast<std::size_t>(v)] = c;

    auto residual_ok = [&](const std::vector<double>& w, double lambda) {
        double norm2 = 0.0;
        for (double x : w) norm2 += x * x;
        double norm = std::sqrt(norm2);
        if (norm < 1e-6) return true;  // numerically absent component
        double resid = 0.0;
        for (int i = 0; i < n; ++i) {
            double av = 0.0;
            for (int j = 0; j < n; ++j) av += a(i, j) * w[static_cast<std::size_t>(j)];
            double r = av - lambda * w[static_cast<std::size_t>(i)];
            resid += r * r;
        }
        return std::sqrt(resid) / norm <= tol;
    };

    // Deterministic per-block shift constants, symmetric in (i,j).
    SplitMix64 rng(seed);
    std::vector<double> shift(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            double c = 2.0 * rng.next_double() - 1.0;
            shift[static_cast<std::size_t>(i) * m + j] = c;
            shift[static_cast<std::size_t>(j) * m + i] = c;
        }
    SymmetricMatrix shifted(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            shifted.set(i, j, a(i, j) + shift[static_cast<std::size_t>(class_of[static_cast<std::size_t>(i)]) * m +
                                              class_of[static_cast<std::size_t>(j)]]);

    auto shifted_residual_ok = [&](const std::vector<double>& w, double lambda) {
        double norm2 = 0.0;
        for (double x : w) norm2 += x * x;
        double norm = std::sqrt(norm2);
        if (norm < 1e-6) return true;
        double resid = 0.0;
        for (int i = 0; i < n; ++i) {
            double av = 0.0;
            for (int j = 0; j < n; ++j) av += shifted(i, j) * w[static_cast<std::size_t>(j)];
            double r = av - lambda * w[static_cast<std::size_t>(i)];
            resid += r * r;
        }
        return std::sqrt(resid) / norm <= tol;
    };

    bool split_ok = true;
    bool shift_ok = true;
    double constant_mass = 0.0;
    std::vector<double> vc(static_cast<std::size_t>(n)), vp(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double lambda = ed.spectrum.values[static_cast<std::size_t>(k)];
        // class means
        std::vector<double> mean(static_cast<std::size_t>(m), 0.0);
        for (int i = 0; i < n; ++i)
            mean[static_cast<std::size_t>(class_of[static_cast<std::size_t>(i)])] += ed.vector_entry(i, k);
        for (int c = 0; c < m; ++c)
            mean[static_cast<std::size_t>(c)] /= static_cast<double>(p.classes[static_cast<std::size_t>(c)].size());
        for (int i = 0; i < n; ++i) {
            vc[static_cast<std::size_t>(i)] = mean[static_cast<std::size_t>(class_of[static_cast<std::size_t>(i)])];
            vp[static_cast<std::size_t>(i)] = ed.vector_entry(i, k) - vc[static_cast<std::size_t>(i)];
        }
        for (double x : vc) constant_mass += x * x;
        if (!residual_ok(vc, lambda) || !residual_ok(vp, lambda)) split_ok = false;
        if (!shifted_residual_ok(vp, lambda)) shift_ok = false;
    }
    // The projector onto class-constant vectors has rank m.
    if (std::abs(constant_mass - static_cast<double>(m)) > tol * n) split_ok = false;

    rep.eigenvectors_split = split_ok;
    rep.shift_invariant = shift_ok;
    rep.ok = rep.quotient_spectrum_contained && split_ok && shift_ok;
    return rep;
}

} // namespace lapbound
