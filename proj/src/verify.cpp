#include "polyco/verify.hpp"

#include <sstream>

namespace polyco {

using Kind = SpaceExpr::Kind;

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Equal: return "Equal";
        case Verdict::FirstDifference: return "FirstDifference";
        case Verdict::Skipped: return "Skipped";
    }
    return "?";
}

SeriesResult decomposition_series(const Decomposition& d, int degree_bound) {
    PoincareSeries acc = PoincareSeries::one(degree_bound);
    for (const auto& f : d.factors) {
        SeriesResult s = series_of(f.expr, degree_bound);
        if (!s.supported()) return {std::nullopt, "factor " + to_text(f.expr) + " (" + f.provenance.to_string() + "): " + s.reason};
        for (int c = 0; c < f.multiplicity; ++c) acc = acc * *s.series;
    }
    return {acc, {}};
}

SpaceExpr cp_infinity() {
    AtomSpec spec;
    spec.name = "CP^inf";
    spec.conn = 1;
    spec.loop = std::make_shared<const SpaceExpr>(SpaceExpr::sphere(1));
    spec.series = SeriesSpec{{1}, {1, 0, -1}};
    return SpaceExpr::atom(std::move(spec));
}

namespace {

Truncation truncation_for(int degree_bound) { return {degree_bound + 1, degree_bound}; }

VerificationReport start(std::string name, int degree_bound, std::string lhs_label, std::string rhs_label) {
    if (degree_bound < 1) throw InputError("degree bound must be at least 1");
    VerificationReport r;
    r.name = std::move(name);
    r.degree_bound = degree_bound;
    r.weight_bound = degree_bound + 1;
    r.lhs_label = std::move(lhs_label);
    r.rhs_label = std::move(rhs_label);
    return r;
}

void skip(VerificationReport& r, std::string reason) {
    r.verdict = Verdict::Skipped;
    r.detail = std::move(reason);
}

void decide(VerificationReport& r) {
    auto unsupported = [&](const std::string& label, const SeriesResult& s) {
        if (s.supported()) return false;
        skip(r, label + " unsupported: " + s.reason);
        return true;
    };
    if (unsupported(r.lhs_label, r.lhs) || unsupported(r.rhs_label, r.rhs)) return;
    for (const auto& [label, s] : r.oracles)
        if (unsupported(label, s)) return;
    const SeriesComparison main = compare(*r.lhs.series, *r.rhs.series);
    if (!main.equal) {
        r.verdict = Verdict::FirstDifference;
        r.difference_degree = main.degree;
        r.lhs_coefficient = main.lhs;
        r.rhs_coefficient = main.rhs;
        r.detail = r.lhs_label + " vs " + r.rhs_label;
        return;
    }
    for (const auto& [label, s] : r.oracles) {
        const SeriesComparison c = compare(*r.lhs.series, *s.series);
        if (!c.equal) {
            r.verdict = Verdict::FirstDifference;
            r.difference_degree = c.degree;
            r.lhs_coefficient = c.lhs;
            r.rhs_coefficient = c.rhs;
            r.detail = r.lhs_label + " vs " + label;
            return;
        }
    }
    r.verdict = Verdict::Equal;
}

// X with Sigma X = e, when e is visibly a suspension.
std::optional<SpaceExpr> desuspend(const SpaceExpr& e) {
    const SpaceExpr n = normalize(e);
    if (n.kind() == Kind::Sphere && n.sphere_dim() >= 1) return SpaceExpr::sphere(n.sphere_dim() - 1);
    if (n.kind() == Kind::Susp) return n.child();
    return std::nullopt;
}

SeriesResult free_product_series(const std::vector<SpaceExpr>& spaces, int degree_bound) {
    return series_of(SpaceExpr::loop(SpaceExpr::wedge(spaces)), degree_bound);
}

}  // namespace

VerificationReport check_hilton_milnor(const std::vector<SpaceExpr>& summands, int degree_bound) {
    VerificationReport r = start("hilton-milnor", degree_bound, "Hilton-Milnor product", "Bott-Samelson");
    std::vector<SpaceExpr> desuspended;
    for (const auto& y : summands) {
        auto x = desuspend(y);
        if (!x) {
            skip(r, "summand " + to_text(y) + " is not a suspension");
            return r;
        }
        desuspended.push_back(*x);
    }
    r.lhs = decomposition_series(hilton_milnor(desuspended, truncation_for(degree_bound)), degree_bound);
    r.rhs = series_of(SpaceExpr::loop(SpaceExpr::susp(SpaceExpr::wedge(desuspended))), degree_bound);
    r.oracles.emplace_back("free product", free_product_series(summands, degree_bound));
    decide(r);
    return r;
}

VerificationReport check_porter(const std::vector<SpaceExpr>& spaces, int degree_bound) {
    VerificationReport r = start("porter", degree_bound, "Porter product", "free product");
    auto porter_side = [&]() -> SeriesResult {
        PoincareSeries acc = PoincareSeries::one(degree_bound);
        for (const auto& x : spaces) {
            SeriesResult s = series_of(SpaceExpr::loop(x), degree_bound);
            if (!s.supported()) return s;
            acc = acc * *s.series;
        }
        // Omega of the fibre wedge, expanded by Hilton-Milnor on its desuspended summands.
        const SpaceExpr fiber = porter_fiber(spaces);
        if (fiber.is_point()) return {acc, {}};
        const auto summands = fiber.kind() == Kind::Wedge ? fiber.children() : std::vector<SpaceExpr>{fiber};
        std::vector<SpaceExpr> desuspended;
        for (const auto& y : summands) desuspended.push_back(*desuspend(y));
        SeriesResult s = decomposition_series(hilton_milnor(desuspended, truncation_for(degree_bound)), degree_bound);
        if (!s.supported()) return s;
        return {acc * *s.series, {}};
    };
    r.lhs = porter_side();
    r.rhs = free_product_series(spaces, degree_bound);
    decide(r);
    return r;
}

VerificationReport check_wedge_case(const SimplicialComplex& k, const std::vector<SpaceExpr>& spaces,
                                    int degree_bound) {
    VerificationReport r = start("wedge-case", degree_bound, "A=* decomposition", "free product");
    if (!(k.facets().size() == 1 && k.facets().front() == k.ground_set())) {
        skip(r, "no independent oracle unless K is a full simplex");
        return r;
    }
    r.lhs = decomposition_series(loop_decompose_wedge(k, spaces, truncation_for(degree_bound)), degree_bound);
    r.rhs = free_product_series(spaces, degree_bound);
    decide(r);
    return r;
}

VerificationReport check_counterexample(int degree_bound) {
    VerificationReport r = start("counterexample", degree_bound, "square decomposition", "free product of (CP^inf)^2");
    const SimplicialComplex square = SimplicialComplex::build(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    const SpaceExpr cp = cp_infinity();
    r.lhs = decomposition_series(loop_decompose_wedge(square, {cp, cp, cp, cp}, truncation_for(degree_bound)),
                                 degree_bound);
    const SpaceExpr pair = SpaceExpr::product({cp, cp});
    r.rhs = free_product_series({pair, pair}, degree_bound);
    decide(r);
    return r;
}

VerificationReport check_disjoint_union(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                        const std::vector<SpaceExpr>& spaces, int degree_bound) {
    VerificationReport r = start("disjoint-union", degree_bound, "union decomposition", "product of components");
    const Truncation t = truncation_for(degree_bound);
    const auto m1 = static_cast<std::ptrdiff_t>(k1.vertex_count());
    if (spaces.size() != static_cast<std::size_t>(k1.vertex_count() + k2.vertex_count()))
        throw InputError("space list does not match the two complexes");
    r.lhs = decomposition_series(disjoint_union_decomp(k1, k2, spaces, t), degree_bound);
    const SeriesResult s1 =
        decomposition_series(loop_decompose_wedge(k1, {spaces.begin(), spaces.begin() + m1}, t), degree_bound);
    const SeriesResult s2 =
        decomposition_series(loop_decompose_wedge(k2, {spaces.begin() + m1, spaces.end()}, t), degree_bound);
    if (!s1.supported())
        r.rhs = s1;
    else if (!s2.supported())
        r.rhs = s2;
    else
        r.rhs = {*s1.series * *s2.series, {}};
    r.oracles.emplace_back("decomposition of the union complex",
                           decomposition_series(loop_decompose_wedge(disjoint_union(k1, k2), spaces, t), degree_bound));
    decide(r);
    return r;
}

namespace {

std::string coefficient_string(const Rational& q) {
    std::ostringstream out;
    out << q;
    return out.str();
}

std::string series_line(const SeriesResult& s) { return s.supported() ? to_string(*s.series) : "unsupported: " + s.reason; }

nlohmann::json series_json(const SeriesResult& s) {
    if (s.supported()) return {{"coefficients", to_json(*s.series)}, {"text", to_string(*s.series)}};
    return {{"unsupported", s.reason}};
}

}  // namespace

std::string to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << r.name << ": " << verdict_name(r.verdict);
    if (r.verdict == Verdict::FirstDifference)
        out << " at degree " << r.difference_degree << " (" << coefficient_string(r.lhs_coefficient) << " vs "
            << coefficient_string(r.rhs_coefficient) << ", " << r.detail << ")";
    if (r.verdict == Verdict::Skipped) out << " (" << r.detail << ")";
    out << "  N=" << r.degree_bound << " W=" << r.weight_bound << "\n";
    out << "  " << r.lhs_label << ": " << series_line(r.lhs) << "\n";
    out << "  " << r.rhs_label << ": " << series_line(r.rhs) << "\n";
    for (const auto& [label, s] : r.oracles) out << "  " << label << ": " << series_line(s) << "\n";
    return out.str();
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json oracles = nlohmann::json::array();
    for (const auto& [label, s] : r.oracles) oracles.push_back({{"label", label}, {"series", series_json(s)}});
    nlohmann::json j = {{"name", r.name},
                        {"verdict", verdict_name(r.verdict)},
                        {"degree_bound", r.degree_bound},
                        {"weight_bound", r.weight_bound},
                        {"lhs", {{"label", r.lhs_label}, {"series", series_json(r.lhs)}}},
                        {"rhs", {{"label", r.rhs_label}, {"series", series_json(r.rhs)}}},
                        {"oracles", oracles},
                        {"detail", r.detail}};
    if (r.verdict == Verdict::FirstDifference)
        j["difference"] = {{"degree", r.difference_degree},
                           {"lhs", to_json(r.lhs_coefficient)},
                           {"rhs", to_json(r.rhs_coefficient)}};
    return j;
}

}  // namespace polyco
