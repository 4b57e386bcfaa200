#pragma once

#include "polyco/rational.hpp"
#include "polyco/spacexpr.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace polyco {

/// A power series with exact rational coefficients, truncated after t^N.
class PoincareSeries {
public:
    /// The zero series.
    explicit PoincareSeries(int degree_bound);
    /// Pads or truncates `coefficients` to length N+1.
    PoincareSeries(std::vector<Rational> coefficients, int degree_bound);

    static PoincareSeries one(int degree_bound);
    /// c * t^d (zero when d > N).
    static PoincareSeries monomial(int degree_bound, int d, Rational c = 1);
    /// num/den expanded to degree N.  den[0] must be nonzero.
    static PoincareSeries from_rational_function(const SeriesSpec& spec, int degree_bound);

    int degree_bound() const { return n_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }

    bool operator==(const PoincareSeries&) const = default;

private:
    std::vector<Rational> coeffs_;
    int n_;
};

PoincareSeries add(const PoincareSeries& p, const PoincareSeries& q);
PoincareSeries sub(const PoincareSeries& p, const PoincareSeries& q);
PoincareSeries mul(const PoincareSeries& p, const PoincareSeries& q);
/// Multiplicative inverse.  Throws std::domain_error("non-invertible series")
/// when the constant term is zero.
PoincareSeries invert(const PoincareSeries& p);
/// p - 1
PoincareSeries reduced(const PoincareSeries& p);
/// t * p
PoincareSeries shift(const PoincareSeries& p);

inline PoincareSeries operator+(const PoincareSeries& p, const PoincareSeries& q) { return add(p, q); }
inline PoincareSeries operator-(const PoincareSeries& p, const PoincareSeries& q) { return sub(p, q); }
inline PoincareSeries operator*(const PoincareSeries& p, const PoincareSeries& q) { return mul(p, q); }

struct SeriesComparison {
    bool equal = true;
    /// First degree where the coefficients differ (meaningful when !equal).
    int degree = -1;
    Rational lhs, rhs;
};

SeriesComparison compare(const PoincareSeries& p, const PoincareSeries& q);

/// Either a series or the reason it could not be computed.
struct SeriesResult {
    std::optional<PoincareSeries> series;
    std::string reason;

    bool supported() const { return series.has_value(); }
};

/// Rational homology Poincare series of `e` to degree N, or Unsupported.
SeriesResult series_of(const SpaceExpr& e, int degree_bound);

/// "1 + 2t + 4t^2"
std::string to_string(const PoincareSeries& p);
/// [[num, den], ...] indexed by degree.
nlohmann::json to_json(const PoincareSeries& p);
nlohmann::json to_json(const Rational& r);

}  // namespace polyco
