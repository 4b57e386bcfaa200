#pragma once

#include "polyco/decomp.hpp"
#include "polyco/series.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace polyco {

enum class Verdict { Equal, FirstDifference, Skipped };

std::string verdict_name(Verdict v);

struct VerificationReport {
    std::string name;
    int degree_bound = 0;
    int weight_bound = 0;
    std::string lhs_label, rhs_label;
    SeriesResult lhs, rhs;
    /// Further series that must agree with lhs.
    std::vector<std::pair<std::string, SeriesResult>> oracles;

    Verdict verdict = Verdict::Skipped;
    /// FirstDifference data.
    int difference_degree = -1;
    Rational lhs_coefficient, rhs_coefficient;
    /// Skipped reason, or which oracle disagreed.
    std::string detail;
};

/// Product of the factor series raised to their multiplicities.
SeriesResult decomposition_series(const Decomposition& d, int degree_bound);

/// Summands are the wedge summands Sigma X_i (spheres or suspensions).
VerificationReport check_hilton_milnor(const std::vector<SpaceExpr>& summands, int degree_bound);
VerificationReport check_porter(const std::vector<SpaceExpr>& spaces, int degree_bound);
/// Requires K to be a full simplex; any other complex is Skipped.
VerificationReport check_wedge_case(const SimplicialComplex& k, const std::vector<SpaceExpr>& spaces,
                                    int degree_bound);
/// Boundary of a square with CP^inf-type atoms against the free-product
/// series of Omega((CP^inf)^2 v (CP^inf)^2).
VerificationReport check_counterexample(int degree_bound);
VerificationReport check_disjoint_union(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                        const std::vector<SpaceExpr>& spaces, int degree_bound);

/// Atom with conn 1, series 1/(1-t^2) and loop space S^1.
SpaceExpr cp_infinity();

std::string to_text(const VerificationReport& r);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace polyco
