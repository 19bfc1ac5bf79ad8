#ifndef HURSUM_PRECISION_HPP
#define HURSUM_PRECISION_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/math/constants/constants.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hursum {

namespace mp = boost::multiprecision;

// Working-precision tiers. Generic evaluation runs at 256 bits; the
// near-pole expansion checks run at 512 to survive singular-term
// cancellation. precision_bits in a PrecisionContext is mapped to the
// smallest tier that covers it.
using real256 = mp::number<mp::cpp_bin_float<256, mp::digit_base_2>, mp::et_off>;
using real512 = mp::number<mp::cpp_bin_float<512, mp::digit_base_2>, mp::et_off>;

template <class Real>
inline constexpr int precision_bits_of = 0;
template <>
inline constexpr int precision_bits_of<real256> = 256;
template <>
inline constexpr int precision_bits_of<real512> = 512;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct divergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Thrown when a tolerance cannot be met within ctx.max_terms. Carries the
// bound that was achieved so callers can report it.
struct precision_error : std::runtime_error {
    double achieved;
    explicit precision_error(const std::string& msg, double got)
        : std::runtime_error(msg), achieved(got) {}
};
struct spec_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Working precision plus target tolerance, threaded through every
// evaluation. All evaluators are pure functions of (args, ctx).
struct PrecisionContext {
    int precision_bits = 256;
    double target_tol = 1e-30;
    long max_terms = 4'000'000;
    double pole_guard = 1e-6;  // reject inputs this close to an excluded lattice

    PrecisionContext() = default;
    PrecisionContext(int bits, double tol, long mt = 4'000'000, double guard = 1e-6)
        : precision_bits(bits), target_tol(tol), max_terms(mt), pole_guard(guard) {
        validate();
    }
    void validate() const {
        if (precision_bits <= 0) throw spec_error("precision_bits must be positive");
        if (target_tol <= 0) throw spec_error("target_tol must be positive");
        if (max_terms <= 0) throw spec_error("max_terms must be positive");
        // tolerance not tighter than representable at the stated precision
        double representable = std::ldexp(1.0, 1 - (precision_bits > 1060 ? 1060 : precision_bits));
        if (target_tol < representable)
            throw spec_error("target_tol is below 2^(1-precision_bits)");
    }
    PrecisionContext with_tol(double tol) const {
        PrecisionContext c = *this;
        c.target_tol = tol;
        return c;
    }
};

template <class Real>
Real pi_v() {
    return boost::math::constants::pi<Real>();
}
template <class Real>
Real euler_gamma_v() {
    return boost::math::constants::euler<Real>();
}
template <class Real>
Real ln2_v() {
    return boost::math::constants::ln_two<Real>();
}

}  // namespace hursum

#endif
