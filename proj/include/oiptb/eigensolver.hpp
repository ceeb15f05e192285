#ifndef OIPTB_EIGENSOLVER_HPP
#define OIPTB_EIGENSOLVER_HPP

#include <Eigen/Dense>
#include <optional>

#include "oiptb/hermitian.hpp"

namespace oiptb {

struct EigenResult {
    Eigen::VectorXd values;                   // ascending
    std::optional<Eigen::MatrixXcd> vectors;  // orthonormal columns, same order
};

// Full spectrum of a Hermitian matrix. Deterministic for identical input
// bits. Throws NumericalError if the underlying decomposition fails to
// converge.
EigenResult eigh(const HermitianMatrix& h, bool want_vectors = false);

// Convenience overload for matrices that are Hermitian by construction.
EigenResult eigh(const Eigen::MatrixXcd& h, bool want_vectors = false);

}  // namespace oiptb

#endif
