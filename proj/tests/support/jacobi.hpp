// Test-only eigenvalue oracle: cyclic Jacobi rotations for complex Hermitian
// matrices. Independent of the production eigh() path (which tridiagonalizes);
// used to cross-check spectra at modest dimensions.
#ifndef OIPTB_TESTS_JACOBI_HPP
#define OIPTB_TESTS_JACOBI_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace oiptb::testing {

inline std::vector<double> jacobi_eigenvalues(Eigen::MatrixXcd a, int max_sweeps = 100,
                                              double tol = 1e-13) {
    const Eigen::Index n = a.rows();
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= tol * scale) break;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const std::complex<double> apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                // Unitary 2x2 rotation annihilating a(p,q): diagonalize the
                // Hermitian block [[app, apq], [conj(apq), aqq]].
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * std::abs(apq), aqq - app);
                const double c = std::cos(theta);
                const std::complex<double> phase = apq / std::abs(apq);
                const std::complex<double> s = std::sin(theta) * phase;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const std::complex<double> akp = a(k, p);
                    const std::complex<double> akq = a(k, q);
                    a(k, p) = c * akp - std::conj(s) * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const std::complex<double> apk = a(p, k);
                    const std::complex<double> aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = std::conj(s) * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace oiptb::testing

#endif
