#ifndef FORESTCOL_PARAMS_HPP
#define FORESTCOL_PARAMS_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace forestcol {

/// Exact rational p/q, q > 0. Only used at the edges (parsing, display,
/// sparsity thresholds); all interior arithmetic is scaled integers.
struct Rational {
    std::int64_t num{0};
    std::int64_t den{1};

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
    }

    Rational reduced() const {
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g == 0) return Rational(0, 1);
        return Rational(num / g, den / g);
    }

    std::string str() const {
        Rational r = reduced();
        if (r.den == 1) return std::to_string(r.num);
        return std::to_string(r.num) + "/" + std::to_string(r.den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        Rational x = a.reduced(), y = b.reduced();
        return x.num == y.num && x.den == y.den;
    }
};

Rational parse_rational(const std::string& text);

/// Degree bounds d1, d2 and the derived exact constants.
///
/// alpha = (d2+2)/((d1+2)(d2+1)), beta = 1/(d2+1). Everything downstream
/// works with potentials multiplied by the scale D = (d1+2)(d2+1), so
/// alpha*D = d2+2 and beta*D = d1+2 are plain integers.
class Params {
public:
    Params(int d1, int d2) : d1_(d1), d2_(d2) {
        if (d1 < 0) throw std::invalid_argument("d1 must be >= 0");
        if (d2 < 2) throw std::invalid_argument("d2 must be >= 2");
    }

    int d1() const { return d1_; }
    int d2() const { return d2_; }
    int d(int color) const { return color == 1 ? d1_ : d2_; }

    std::int64_t scale() const { return std::int64_t(d1_ + 2) * (d2_ + 1); }
    std::int64_t alpha_scaled() const { return d2_ + 2; }
    std::int64_t beta_scaled() const { return d1_ + 2; }
    std::int64_t coef_scaled(int color) const {
        return color == 1 ? alpha_scaled() : beta_scaled();
    }

    Rational alpha() const { return Rational(alpha_scaled(), scale()).reduced(); }
    Rational beta() const { return Rational(beta_scaled(), scale()).reduced(); }

    /// The coloring engine requires d2 >= 2*d1 + 2; other modules do not.
    bool regime_ok() const { return d2_ >= 2 * d1_ + 2; }

    bool operator==(const Params&) const = default;

private:
    int d1_;
    int d2_;
};

inline Params make_params(int d1, int d2) { return Params(d1, d2); }

/// A potential value times the scale D, so comparisons against the
/// thresholds -beta, 0, alpha-beta are exact integer comparisons.
struct ScaledPotential {
    std::int64_t value{0};

    friend auto operator<=>(const ScaledPotential&, const ScaledPotential&) = default;

    Rational as_rational(const Params& p) const {
        return Rational(value, p.scale()).reduced();
    }
};

}  // namespace forestcol

#endif
