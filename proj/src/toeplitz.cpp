#include "gafz/toeplitz.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gafz {

Complex gamma_of(const ModelSpec& spec, long k) {
    spec.validate();
    const long a = std::labs(k);
    switch (spec.family) {
        case Family::Identity:
            return a == 0 ? 1.0 : 0.0;
        case Family::Tridiagonal:
            if (a == 0) return 1.0;
            return a == 1 ? spec.q : 0.0;
        case Family::Kms:
            return std::pow(spec.q, static_cast<double>(a));
        case Family::Fgn: {
            const double e = 2.0 * spec.h;
            const double ad = static_cast<double>(a);
            return 0.5 * std::pow(ad + 1.0, e) + 0.5 * std::pow(std::abs(ad - 1.0), e) -
                   std::pow(ad, e);
        }
        case Family::Fgn0:
            if (a == 0) return 1.0;
            return a == 1 ? -0.5 : 0.0;
    }
    return 0.0;
}

Matrix FiniteToeplitz::dense() const {
    Matrix G(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) G(k, j) = entry(k, j);
    return G;
}

FiniteToeplitz build_finite(const ModelSpec& spec, int n) {
    if (n < 1) throw std::domain_error("build_finite requires n >= 1");
    FiniteToeplitz T;
    T.spec = spec;
    T.n = n;
    T.first_column.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) T.first_column[static_cast<size_t>(k)] = gamma_of(spec, k);
    return T;
}

LowerFactor cholesky(const FiniteToeplitz& T) {
    const int n = T.n;
    Matrix L = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        Complex d = T.entry(j, j);
        for (int k = 0; k < j; ++k) d -= L(j, k) * std::conj(L(j, k));
        const double piv = d.real();
        if (!(piv > 0.0) || !std::isfinite(piv)) {
            std::ostringstream os;
            os << "not positive definite: pivot " << piv << " at index " << j + 1;
            throw std::runtime_error(os.str());
        }
        const double diag = std::sqrt(piv);
        L(j, j) = diag;
        for (int i = j + 1; i < n; ++i) {
            Complex s = T.entry(i, j);
            for (int k = 0; k < j; ++k) s -= L(i, k) * std::conj(L(j, k));
            L(i, j) = s / diag;
        }
    }
    return {n, std::move(L)};
}

namespace {

// Levinson-Durbin on the first column. Returns prediction coefficients
// a (a_0 = 1) with sum_j gamma(k-j) a_j = E delta_{k0} and the final
// prediction error E. Sets *ok = false when a pivot falls under tol.
bool levinson(const FiniteToeplitz& T, Vector& a, double& E, double tol) {
    const int n = T.n;
    a = Vector::Zero(n);
    a(0) = 1.0;
    E = T.first_column[0].real();
    if (!(E > tol)) return false;
    Vector next = a;
    for (int m = 1; m < n; ++m) {
        Complex acc = 0.0;
        for (int j = 0; j < m; ++j) acc += a(j) * T.first_column[static_cast<size_t>(m - j)];
        const Complex refl = -acc / E;
        for (int j = 1; j < m; ++j) next(j) = a(j) + refl * std::conj(a(m - j));
        next(m) = refl;
        for (int j = 1; j <= m; ++j) a(j) = next(j);
        E *= (1.0 - std::norm(refl));
        if (!(E > tol) || !std::isfinite(E)) return false;
    }
    return true;
}

double pivot_tolerance(const FiniteToeplitz& T) {
    double norm = 0.0;
    for (const Complex& c : T.first_column) norm += std::norm(c);
    return 1e-12 * std::sqrt(norm);
}

}  // namespace

Matrix trench_inverse(const FiniteToeplitz& T) {
    const int n = T.n;
    Vector a;
    double E = 0.0;
    if (!levinson(T, a, E, pivot_tolerance(T)))
        throw std::runtime_error("trench_inverse: Levinson recursion lost positivity");
    // Gohberg-Semencul in telescoped form: first row/column from a, then
    // inv(i+1,j+1) = inv(i,j) + (a_{i+1} conj(a_{j+1}) - b_{i+1} conj(b_{j+1}))/E
    // with b_i = conj(a_{n-i}).
    Matrix B(n, n);
    for (int j = 0; j < n; ++j) {
        B(0, j) = std::conj(a(j)) / E;
        B(j, 0) = a(j) / E;
    }
    auto b = [&](int i) -> Complex { return i == 0 ? Complex(0.0) : std::conj(a(n - i)); };
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j)
            B(i + 1, j + 1) =
                B(i, j) + (a(i + 1) * std::conj(a(j + 1)) - b(i + 1) * std::conj(b(j + 1))) / E;
    return B;
}

Matrix cholesky_inverse(const FiniteToeplitz& T) {
    LowerFactor f = cholesky(T);
    Matrix Li = f.L.triangularView<Eigen::Lower>().solve(Matrix::Identity(T.n, T.n));
    return Li.adjoint() * Li;
}

Matrix invert_finite(const FiniteToeplitz& T) {
    Vector a;
    double E = 0.0;
    if (levinson(T, a, E, pivot_tolerance(T))) return trench_inverse(T);
    return cholesky_inverse(T);
}

double chebyshev_U(int k, double x) {
    if (k < 0) throw std::domain_error("chebyshev_U requires k >= 0");
    double prev = 1.0;  // U_0
    if (k == 0) return prev;
    double cur = 2.0 * x;  // U_1
    for (int i = 1; i < k; ++i) {
        const double nxt = 2.0 * x * cur - prev;
        prev = cur;
        cur = nxt;
    }
    return cur;
}

namespace {

void require_tridiag_q(double q) {
    if (!(std::abs(q) > 0.0 && std::abs(q) < 0.5)) {
        std::ostringstream os;
        os << "tridiagonal inverse requires 0 < |q| < 1/2, got q = " << q;
        throw std::domain_error(os.str());
    }
}

}  // namespace

// Evaluated through the explicit |x|>1 form of U_k so that the huge
// U values never appear: with t = alpha + sqrt(alpha^2-1) and u = 1/t,
//   U_{k-1} U_{n-j} / U_n
//     = t^{k-j} (1-u^{2k}) (1-u^{2(n-j+1)}) / (2 sqrt(alpha^2-1) (1-u^{2(n+1)})).
double tridiag_inverse_entry(double q, int n, int k, int j) {
    require_tridiag_q(q);
    if (k < 1 || j < 1 || k > n || j > n) throw std::domain_error("index out of range");
    if (k > j) std::swap(k, j);  // real symmetric
    const double alpha = 1.0 / (2.0 * std::abs(q));
    const double s = std::sqrt(alpha * alpha - 1.0);
    const double t = alpha + s;
    const double u = 1.0 / t;
    const double ratio = std::pow(t, static_cast<double>(k - j)) *
                         (1.0 - std::pow(u, 2.0 * k)) * (1.0 - std::pow(u, 2.0 * (n - j + 1))) /
                         (2.0 * s * (1.0 - std::pow(u, 2.0 * (n + 1))));
    const double sign = (q > 0 && ((j - k) % 2 != 0)) ? -1.0 : 1.0;
    return sign * ratio / std::abs(q);
}

double tridiag_infinite_inverse_entry(double q, int k, int j) {
    require_tridiag_q(q);
    if (k < 1 || j < 1) throw std::domain_error("index out of range");
    if (k > j) std::swap(k, j);
    const double alpha = 1.0 / (2.0 * std::abs(q));
    const double s = std::sqrt(alpha * alpha - 1.0);
    const double t = alpha + s;
    const double u = 1.0 / t;
    const double ratio = std::pow(t, static_cast<double>(k - j)) *
                         (1.0 - std::pow(u, 2.0 * k)) / (2.0 * s);
    const double sign = (q > 0 && ((j - k) % 2 != 0)) ? -1.0 : 1.0;
    return sign * ratio / std::abs(q);
}

Complex kms_inverse_entry(Complex q, int k, int j) {
    const double aq = std::abs(q);
    if (!(aq < 1.0)) {
        std::ostringstream os;
        os << "KMS inverse requires |q| < 1, got |q| = " << aq;
        throw std::domain_error(os.str());
    }
    if (k < 1 || j < 1) throw std::domain_error("index out of range");
    const double denom = 1.0 - aq * aq;
    if (k == j) return k == 1 ? 1.0 / denom : (1.0 + aq * aq) / denom;
    if (k - j == 1) return -q / denom;
    if (j - k == 1) return -std::conj(q) / denom;
    return 0.0;
}

}  // namespace gafz
