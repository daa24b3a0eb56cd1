#pragma once

#include <vector>

#include "skoda/complex.hpp"
#include "skoda/ideal_ops.hpp"

namespace skoda {

/// Exterior-algebra complex on f; basis of degree i is the i-subsets in lex order.
FreeComplex koszul(const Presentation& R, const std::vector<Poly>& f);

/// k x (n+k-1) matrix whose row r carries f_1..f_n in columns r..r+n-1.
ModuleMatrix bs_matrix(const Presentation& R, const std::vector<Poly>& f, unsigned k);

/// Degree-k exponent vectors in n symbols, first coordinate descending.
std::vector<Exponent> degree_k_exponents(std::size_t n, unsigned k);

/// Eagon-Northcott complex of bs_matrix(f, k), with F_1 rebased so that d_1 is
/// the row of degree-k monomials in f (in degree_k_exponents order). Degree i >= 2
/// has basis (subset of size k+i-1, divided-power exponent of weight i-1).
FreeComplex l_complex(const Presentation& R, const std::vector<Poly>& f, unsigned k);

/// Integer matrix C with (maximal minor on columns S) = sum_mu C[S][mu] f^mu.
const std::vector<std::vector<long>>& minor_expansion(std::size_t n, unsigned k);

/// Unit-ideal L-complex on a chart together with the exponents of f_j that
/// identify it with the twisted complex: degree i >= 1 carries n - i, degree 0 carries n + k - 1.
struct TwistedChartComplex {
  FreeComplex complex;
  std::size_t chart = 0;
  std::vector<unsigned> twist;
};

TwistedChartComplex twisted_chart_complex(const std::vector<Poly>& ratios, unsigned k, std::size_t chart,
                                          const Presentation& chart_ring);

}  // namespace skoda
