#include "flyq/scatter/special_functions.hpp"

#include "flyq/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace flyq::scatter {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

cplx lanczos(cplx z) {
    z -= 1.0;
    cplx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        x += kLanczos[i] / (z + static_cast<double>(i));
    }
    const cplx t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

constexpr double kSeriesTolerance = 1e-15;
constexpr int kMaxTerms = 100000;

cplx series(cplx a, cplx b, cplx c, double z) {
    cplx sum = 1.0;
    cplx term = 1.0;
    for (int n = 0; n < kMaxTerms; ++n) {
        const double dn = static_cast<double>(n);
        const cplx ratio = (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        term *= ratio;
        sum += term;
        if (term == 0.0) {
            return sum;
        }
        if (std::abs(term) <= kSeriesTolerance * std::abs(sum) && std::abs(ratio) < 1.0) {
            return sum;
        }
    }
    throw ConvergenceError("2F1 power series did not converge within 1e5 terms");
}

bool near_integer(cplx x) {
    return std::abs(x.imag()) < 1e-12 && std::abs(x.real() - std::round(x.real())) < 1e-12;
}

} // namespace

cplx complex_gamma(cplx z) {
    if (is_nonpositive_integer(z)) {
        throw DomainError("Gamma has a pole at z = " + std::to_string(z.real()));
    }
    if (z.real() < 0.5) {
        return kPi / (std::sin(kPi * z) * lanczos(1.0 - z));
    }
    return lanczos(z);
}

cplx reciprocal_gamma(cplx z) {
    if (is_nonpositive_integer(z)) {
        return 0.0;
    }
    if (z.real() < 0.5) {
        return std::sin(kPi * z) * lanczos(1.0 - z) / kPi;
    }
    return 1.0 / lanczos(z);
}

cplx hypergeom_2f1(cplx a, cplx b, cplx c, double z) {
    return hypergeom_2f1(a, b, c, z, 1.0 - z);
}

cplx hypergeom_2f1(cplx a, cplx b, cplx c, double z, double one_minus_z) {
    if (!(z >= 0.0 && z < 1.0) || !(one_minus_z > 0.0)) {
        throw DomainError("2F1 argument must lie in [0, 1), got z = " + std::to_string(z));
    }
    if (is_nonpositive_integer(c)) {
        throw DomainError("2F1 undefined for non-positive integer c");
    }
    if (z == 0.0) {
        return 1.0;
    }
    const cplx excess = c - a - b;
    if (z <= 0.5 || near_integer(excess)) {
        return series(a, b, c, z);
    }
    // F(a,b;c;z) = G(c)G(c-a-b)/(G(c-a)G(c-b)) F(a,b;a+b-c+1;1-z)
    //            + (1-z)^{c-a-b} G(c)G(a+b-c)/(G(a)G(b)) F(c-a,c-b;c-a-b+1;1-z)
    const cplx gc = complex_gamma(c);
    const cplx first = gc * complex_gamma(excess) * reciprocal_gamma(c - a) *
                       reciprocal_gamma(c - b);
    const cplx second = gc * complex_gamma(-excess) * reciprocal_gamma(a) * reciprocal_gamma(b);
    cplx result = 0.0;
    if (first != 0.0) {
        result += first * series(a, b, 1.0 - excess, one_minus_z);
    }
    if (second != 0.0) {
        result += second * std::exp(excess * std::log(one_minus_z)) *
                  series(c - a, c - b, 1.0 + excess, one_minus_z);
    }
    return result;
}

} // namespace flyq::scatter
