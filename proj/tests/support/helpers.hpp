#ifndef OIPTB_TESTS_HELPERS_HPP
#define OIPTB_TESTS_HELPERS_HPP

#include <Eigen/Dense>
#include <filesystem>
#include <random>

#include "oiptb/types.hpp"

#ifndef OIPTB_DATA_DIR
#define OIPTB_DATA_DIR "data"
#endif

namespace oiptb::testing {

inline std::filesystem::path data_dir() { return OIPTB_DATA_DIR; }

inline Eigen::MatrixXcd random_hermitian(int n, std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = std::complex<double>(g(rng), g(rng));
    Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
    for (int i = 0; i < n; ++i) h(i, i) = std::complex<double>(h(i, i).real(), 0.0);
    return h;
}

inline OipSet random_oips(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::uniform_real_distribution<double> upos(0.0, 0.6);
    OipSet o;
    for (const auto& f : oip_fields) o.*(f.member) = u(rng);
    o.delta_a = upos(rng);
    o.delta_c = upos(rng);
    return o;
}

inline WaveVector random_k(std::mt19937_64& rng, double span = 1.5) {
    std::uniform_real_distribution<double> u(-span, span);
    return {u(rng), u(rng), u(rng)};
}

}  // namespace oiptb::testing

#endif
