#pragma once

#include <utility>
#include <vector>

#include "lapbound/bounds.hpp"
#include "lapbound/graph.hpp"
#include "lapbound/rational.hpp"
#include "lapbound/spectra.hpp"

namespace lapbound {

/// Oriented incidence structure for a subset U of a connected graph:
/// every cut edge points from U into the complement, and every vertex of U
/// has at least one outgoing arc.  Columns are ordered with the U-side block
/// first (E[U] and the cut edges), then the edges inside the complement.
struct OrientedIncidence {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // (tail, head)
    int q1_count = 0;                       // columns in the U-side block
    std::vector<int> owner;                 // per U-side column: its tail in U
    VertexSubset u;

    int arc_count() const { return static_cast<int>(arcs.size()); }
    /// Number of arcs with tail v.
    int out_degree(int v) const;
};

/// Deterministic orientation: cut edges point out of U; inside each component
/// of G[U] a BFS tree rooted at the lowest-index vertex adjacent to the
/// complement is oriented child->parent; all remaining edges point from the
/// higher to the lower index.
OrientedIncidence orient(const Graph& g, const VertexSubset& u);

/// Dense signed incidence matrix: n rows, one column per arc, +1 at the tail
/// and -1 at the head.
std::vector<std::vector<int>> incidence_rows(const OrientedIncidence& oi);

/// Exact integer check of Q·Qᵀ = L.
bool incidence_factorizes_laplacian(const Graph& g, const OrientedIncidence& oi);

/// Edge Gram matrix M = QᵀQ (diagonal 2, off-diagonal in {-1,0,+1}) and its
/// principal submatrix on the U-side columns.
struct EdgeGram {
    SymmetricMatrix m_full;
    SymmetricMatrix m1;
};
EdgeGram edge_gram(const OrientedIncidence& oi);

/// Quotient of M1 over the partition of U-side columns by arc tail.  The
/// diagonal entries are out_degree(u)+1 exactly and the trace realizes
/// Σ d_u - |E[U]| + m; the spectrum interlaces M1 and M.
struct EdgeGramQuotient {
    std::vector<Rational> b1;  // m×m row-major, exact
    SymmetricMatrix b1_sym;
    Spectrum b1_spectrum;
    Spectrum m1_spectrum;
    Spectrum m_spectrum;
    InterlacingReport b1_vs_m1;
    InterlacingReport m1_vs_m;
    bool gram_nonzero_spectrum_matches = false;  // nonzero spectra of M and L agree
    BoundReport report;                          // eq12 through this route
};
EdgeGramQuotient edge_gram_quotient(const GraphContext& ctx, const VertexSubset& u);

/// The (m+1)×(m+1) compression extending the tail partition by the top
/// eigenvector of the complement block; its trace realizes the eq13 bound.
struct EdgeGramQuotientAugmented {
    SymmetricMatrix b;
    Spectrum b_spectrum;
    Spectrum m_spectrum;
    double theta1 = 0.0;
    bool trace_matches = false;
    InterlacingReport b_vs_m;
    bool degenerate_no_complement_edges = false;
    BoundReport report;  // eq13 through this route
};
EdgeGramQuotientAugmented edge_gram_quotient_augmented(const GraphContext& ctx,
                                                       const VertexSubset& u);

} // namespace lapbound
