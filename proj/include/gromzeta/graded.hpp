#pragma once

#include <vector>

#include "gromzeta/matrix.hpp"
#include "gromzeta/ratfun.hpp"
#include "gromzeta/series.hpp"

namespace gromzeta {

// A graded endomorphism of homology: one square integer matrix per degree
// 0..top_degree. Degrees of rank zero carry the 0x0 matrix. The degree-0 map
// must be the 1x1 identity (connected space, orientation preserved).
class GradedMap {
  public:
    explicit GradedMap(std::vector<Matrix> maps);

    // The action on H_*(surface of genus dim/2): degrees [1], A, [det A].
    // A must be an even-dimensional integer matrix with det A = 1, so the
    // top map is again the identity (orientation preserved).
    static GradedMap surface(const Matrix& monodromy);

    int top_degree() const { return static_cast<int>(maps_.size()) - 1; }
    const Matrix& map(int degree) const;
    const std::vector<Matrix>& maps() const { return maps_; }

    // Whether the shape is [1], A, [1] with A of even dimension.
    bool is_surface_shape() const;

  private:
    std::vector<Matrix> maps_;
};

// Alternating sum of traces sum_k (-1)^k tr(f_k^n), n >= 1.
Int lefschetz(const GradedMap& g, long n);

// The first n values, 1-indexed: result[i-1] = lefschetz(g, i).
std::vector<Int> lefschetz_sequence(const GradedMap& g, int n);

// zeta_f as a rational function: product over degrees of det(I - t f_k) with
// odd degrees upstairs and even degrees downstairs.
RationalFunction zeta_det(const GradedMap& g);

// zeta_f as a truncated series: exp(sum_{n<=N} lefschetz(g,n) t^n / n).
TruncatedSeries zeta_trace(const GradedMap& g, int order);

// Weighted count sum_{m=k*d} d * lefschetz(g, k) over ordered factorizations
// of m; the section-class Taubes count for a mapping torus.
Int rt_section(const GradedMap& g, long m);

// prod_{m<=N} weight_factor(t^m)^(rt_section(g,m)/m), the degree-zero Gromov
// series of the mapping torus assembled from local contributions.
TruncatedSeries gromov_section(const GradedMap& g, int order);

// Expected dimension 2(n-3)(1-g) - 2*kappa_dot_a + 2*marked of the genus-g
// degree-zero moduli space on a complex n-fold with marked points.
long moduli_dimension(int n, long genus, long marked, long kappa_dot_a);

// Solutions g >= 0 of moduli_dimension(n, g, 0, kappa_dot_a) == 0.
struct GenusSolution {
    enum class Kind { None, Unique, All };
    Kind kind = Kind::None;
    long genus = -1;  // set only for Unique
};
GenusSolution degree_zero_genus(int n, long kappa_dot_a);

}  // namespace gromzeta
