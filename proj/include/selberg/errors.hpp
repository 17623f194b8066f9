#ifndef SELBERG_ERRORS_HPP
#define SELBERG_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace selberg {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (z = 0, invalid nome, ...).
struct domain_error : error {
    using error::error;
};

// A product did not reach its truncation threshold within max_terms factors.
struct truncation_error : error {
    using error::error;
};

// An evaluation point landed within the guard radius of a pole factor.
struct near_pole_error : error {
    using error::error;
};

// A parameter set is too close to the zero set of a denominator; the
// instance should be discarded and resampled.
struct instance_error : error {
    using error::error;
};

// A sampler exhausted its retry budget.
struct sampling_error : error {
    using error::error;
};

// Adaptive quadrature hit its node cap before two successive estimates
// agreed; carries the last two estimates for diagnostics.
struct quadrature_error : error {
    std::complex<double> previous_estimate;
    std::complex<double> last_estimate;
    quadrature_error(const std::string& what, std::complex<double> prev,
                     std::complex<double> last)
        : error(what), previous_estimate(prev), last_estimate(last) {}
};

// Invalid CLI or config-file input.
struct config_error : error {
    using error::error;
};

}  // namespace selberg

#endif
