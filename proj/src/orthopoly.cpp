#include "gafz/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

namespace gafz {

OrthoBasis gram_basis(const ModelSpec& spec, int m) {
    if (m < 1) throw std::domain_error("gram_basis requires m >= 1");
    const LowerFactor f = cholesky(build_finite(spec, m));
    OrthoBasis basis;
    basis.spec = spec;
    basis.m = m;
    basis.coeffs = f.L.triangularView<Eigen::Lower>().solve(Matrix::Identity(m, m));
    return basis;
}

Complex eval_P(const OrthoBasis& basis, int k, Complex z) {
    if (k < 1 || k > basis.m) throw std::domain_error("eval_P: k out of range");
    const int row = k - 1;
    Complex acc = 0.0;
    for (int j = row; j >= 0; --j) acc = acc * z + basis.coeffs(row, j);
    return acc;
}

Complex kernel_partial_sum(const OrthoBasis& basis, int m, Complex z, Complex w) {
    if (m < 1 || m > basis.m) throw std::domain_error("kernel_partial_sum: m out of range");
    Complex acc = 0.0;
    for (int k = 1; k <= m; ++k) acc += eval_P(basis, k, z) * std::conj(eval_P(basis, k, w));
    return acc;
}

Complex fgn0_P(int n, Complex z) {
    if (n < 1) throw std::domain_error("fgn0_P requires n >= 1");
    Complex acc = 0.0;
    for (int m = n; m >= 1; --m) acc = acc * z + static_cast<double>(m);
    return std::sqrt(2.0 / (static_cast<double>(n) * (n + 1.0))) * acc;
}

}  // namespace gafz
