#ifndef OIPTB_HERMITIAN_HPP
#define OIPTB_HERMITIAN_HPP

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "oiptb/types.hpp"

namespace oiptb {

// Dense complex square matrix with an enforced Hermitian invariant.
// Construction rejects input whose max |H - H^dagger| entry exceeds the
// tolerance and symmetrizes the rest, so holders can rely on exact
// Hermiticity afterwards.
class HermitianMatrix {
  public:
    static constexpr double kTolerance = 1e-12;

    explicit HermitianMatrix(Eigen::MatrixXcd m, double tolerance = kTolerance) {
        if (m.rows() != m.cols()) throw ConfigError("HermitianMatrix: matrix must be square");
        const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
        if (!(dev <= tolerance))
            throw ConfigError("HermitianMatrix: Hermiticity violated by " + std::to_string(dev));
        mat_ = 0.5 * (m + m.adjoint().eval());
        for (Eigen::Index i = 0; i < mat_.rows(); ++i) mat_(i, i) = std::complex<double>(mat_(i, i).real(), 0.0);
    }

    // For builders that fill an exact upper triangle and mirror it themselves.
    static HermitianMatrix from_exact(Eigen::MatrixXcd m) {
        HermitianMatrix h;
        h.mat_ = std::move(m);
        return h;
    }

    Eigen::Index dim() const { return mat_.rows(); }
    const Eigen::MatrixXcd& mat() const { return mat_; }

    double hermiticity_deviation() const { return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff(); }

  private:
    HermitianMatrix() = default;
    Eigen::MatrixXcd mat_;
};

}  // namespace oiptb

#endif
