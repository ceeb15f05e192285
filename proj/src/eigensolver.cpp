#include "oiptb/eigensolver.hpp"

#include <string>

#ifdef OIPTB_USE_LAPACKE
#include <lapacke.h>
#endif

namespace oiptb {

#ifdef OIPTB_USE_LAPACKE

EigenResult eigh(const Eigen::MatrixXcd& h, bool want_vectors) {
    const int n = static_cast<int>(h.rows());
    EigenResult out;
    out.values.resize(n);
    Eigen::MatrixXcd work = h;  // overwritten by LAPACK
    const int info =
        LAPACKE_zheev(LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'L', n,
                      reinterpret_cast<lapack_complex_double*>(work.data()), n, out.values.data());
    if (info < 0) throw NumericalError("eigh: illegal argument " + std::to_string(-info));
    if (info > 0)
        throw NumericalError("eigh: eigensolver failed to converge on dim " + std::to_string(n) +
                             " (" + std::to_string(info) + " off-diagonal elements unresolved)");
    if (want_vectors) out.vectors = std::move(work);
    return out;
}

#else

EigenResult eigh(const Eigen::MatrixXcd& h, bool want_vectors) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        h, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericalError("eigh: eigensolver failed to converge on dim " +
                             std::to_string(h.rows()));
    EigenResult out;
    out.values = es.eigenvalues();
    if (want_vectors) out.vectors = es.eigenvectors();
    return out;
}

#endif

EigenResult eigh(const HermitianMatrix& h, bool want_vectors) { return eigh(h.mat(), want_vectors); }

}  // namespace oiptb
