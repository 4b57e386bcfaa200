#include "polyco/series.hpp"

#include <stdexcept>

namespace polyco {

PoincareSeries::PoincareSeries(int degree_bound) : n_(degree_bound) {
    if (degree_bound < 0) throw InputError("truncation degree must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(degree_bound) + 1, Rational(0));
}

PoincareSeries::PoincareSeries(std::vector<Rational> coefficients, int degree_bound)
    : coeffs_(std::move(coefficients)), n_(degree_bound) {
    if (degree_bound < 0) throw InputError("truncation degree must be non-negative");
    coeffs_.resize(static_cast<std::size_t>(degree_bound) + 1, Rational(0));
}

PoincareSeries PoincareSeries::one(int degree_bound) { return monomial(degree_bound, 0); }

PoincareSeries PoincareSeries::monomial(int degree_bound, int d, Rational c) {
    PoincareSeries p(degree_bound);
    if (d < 0) throw std::logic_error("negative monomial degree");
    if (d <= degree_bound) p.coeffs_[static_cast<std::size_t>(d)] = std::move(c);
    return p;
}

PoincareSeries PoincareSeries::from_rational_function(const SeriesSpec& spec, int degree_bound) {
    auto poly = [degree_bound](const std::vector<long long>& c) {
        std::vector<Rational> out;
        for (long long x : c) out.emplace_back(x);
        return PoincareSeries(std::move(out), degree_bound);
    };
    return mul(poly(spec.numerator), invert(poly(spec.denominator)));
}

namespace {

void require_same_bound(const PoincareSeries& p, const PoincareSeries& q) {
    if (p.degree_bound() != q.degree_bound())
        throw std::invalid_argument("series truncation degrees differ (" + std::to_string(p.degree_bound()) + " vs " +
                                    std::to_string(q.degree_bound()) + ")");
}

}  // namespace

PoincareSeries add(const PoincareSeries& p, const PoincareSeries& q) {
    require_same_bound(p, q);
    std::vector<Rational> c = p.coefficients();
    for (std::size_t d = 0; d < c.size(); ++d) c[d] += q.coefficients()[d];
    return PoincareSeries(std::move(c), p.degree_bound());
}

PoincareSeries sub(const PoincareSeries& p, const PoincareSeries& q) {
    require_same_bound(p, q);
    std::vector<Rational> c = p.coefficients();
    for (std::size_t d = 0; d < c.size(); ++d) c[d] -= q.coefficients()[d];
    return PoincareSeries(std::move(c), p.degree_bound());
}

PoincareSeries mul(const PoincareSeries& p, const PoincareSeries& q) {
    require_same_bound(p, q);
    const int n = p.degree_bound();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (p[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j)
            if (q[j] != 0) c[static_cast<std::size_t>(i + j)] += p[i] * q[j];
    }
    return PoincareSeries(std::move(c), n);
}

PoincareSeries invert(const PoincareSeries& p) {
    if (p[0] == 0) throw std::domain_error("non-invertible series");
    const int n = p.degree_bound();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[0] = Rational(1) / p[0];
    for (int d = 1; d <= n; ++d) {
        Rational acc = 0;
        for (int i = 1; i <= d; ++i)
            if (p[i] != 0) acc += p[i] * c[static_cast<std::size_t>(d - i)];
        c[static_cast<std::size_t>(d)] = -acc * c[0];
    }
    return PoincareSeries(std::move(c), n);
}

PoincareSeries reduced(const PoincareSeries& p) { return sub(p, PoincareSeries::one(p.degree_bound())); }

PoincareSeries shift(const PoincareSeries& p) {
    std::vector<Rational> c = p.coefficients();
    c.insert(c.begin(), Rational(0));
    return PoincareSeries(std::move(c), p.degree_bound());
}

SeriesComparison compare(const PoincareSeries& p, const PoincareSeries& q) {
    require_same_bound(p, q);
    for (int d = 0; d <= p.degree_bound(); ++d)
        if (p[d] != q[d]) return {false, d, p[d], q[d]};
    return {};
}

// --------------------------------------------------------------- evaluation

namespace {

using Kind = SpaceExpr::Kind;

SeriesResult unsupported(const SpaceExpr& e, const std::string& why) {
    return {std::nullopt, to_text(e) + ": " + why};
}

SeriesResult nested(const SpaceExpr& e, const SeriesResult& inner) {
    return {std::nullopt, "in " + to_text(e) + " <- " + inner.reason};
}

SeriesResult ok(PoincareSeries p) { return {std::move(p), {}}; }

// Rationally Omega^k S^n is a product of Eilenberg-MacLane spaces: one in
// degree n-k for odd n, and in degrees n-k and 2n-1-k for even n.
PoincareSeries iterated_sphere_loop(int n, int k, int bound) {
    auto factor = [bound](int d) {
        if (d % 2 == 0) return invert(PoincareSeries::one(bound) - PoincareSeries::monomial(bound, d));
        return PoincareSeries::one(bound) + PoincareSeries::monomial(bound, d);
    };
    PoincareSeries p = factor(n - k);
    if (n % 2 == 0) p = p * factor(2 * n - 1 - k);
    return p;
}

SeriesResult eval(const SpaceExpr& e, int bound);

SeriesResult eval_loop(const SpaceExpr& e, int bound) {
    const SpaceExpr& base = e.child();
    const int k = e.loop_count();
    if (base.kind() == Kind::Sphere) {
        const int n = base.sphere_dim();
        if (n - k < 1) return unsupported(e, "loop space is not simply connected");
        return ok(iterated_sphere_loop(n, k, bound));
    }
    if (k != 1) return unsupported(e, "iterated loops are supported on spheres only");
    if (base.kind() == Kind::Susp) {
        // Bott-Samelson: H_*(Omega Sigma Y) is the tensor algebra on reduced H_*(Y).
        const SpaceExpr& inner = base.child();
        if (conn(inner) < 0) return unsupported(e, "suspended space is not known to be connected");
        SeriesResult s = eval(inner, bound);
        if (!s.supported()) return nested(e, s);
        return ok(invert(PoincareSeries::one(bound) - reduced(*s.series)));
    }
    if (base.kind() == Kind::Wedge) {
        // Free product: 1/P(Omega(V Y_i)) = sum 1/P(Omega Y_i) - (k - 1).
        PoincareSeries total(bound);
        for (const auto& c : base.children()) {
            if (conn(c) < 1) return unsupported(e, "wedge summand " + to_text(c) + " is not simply connected");
            SeriesResult s = eval(normalize(SpaceExpr::loop(c)), bound);
            if (!s.supported()) return nested(e, s);
            total = total + invert(*s.series);
        }
        const auto extra = static_cast<long long>(base.children().size()) - 1;
        total = total - PoincareSeries::monomial(bound, 0, Rational(extra));
        return ok(invert(total));
    }
    return unsupported(e, "no loop-space rule for this expression");
}

SeriesResult eval(const SpaceExpr& e, int bound) {
    const PoincareSeries one = PoincareSeries::one(bound);
    switch (e.kind()) {
        case Kind::Point:
            return ok(one);
        case Kind::Sphere:
            if (e.sphere_dim() == 0) return unsupported(e, "S^0 is disconnected");
            return ok(one + PoincareSeries::monomial(bound, e.sphere_dim()));
        case Kind::Atom:
            if (!e.atom_spec().series) return unsupported(e, "atom has no declared series");
            return ok(PoincareSeries::from_rational_function(*e.atom_spec().series, bound));
        case Kind::Susp: {
            SeriesResult s = eval(e.child(), bound);
            if (!s.supported()) return nested(e, s);
            return ok(one + shift(reduced(*s.series)));
        }
        case Kind::Loop:
            return eval_loop(e, bound);
        case Kind::Wedge:
        case Kind::Product:
        case Kind::Smash: {
            PoincareSeries acc = e.kind() == Kind::Wedge ? PoincareSeries(bound) : one;
            for (const auto& c : e.children()) {
                SeriesResult s = eval(c, bound);
                if (!s.supported()) return nested(e, s);
                if (e.kind() == Kind::Wedge)
                    acc = acc + reduced(*s.series);
                else if (e.kind() == Kind::Product)
                    acc = acc * *s.series;
                else
                    acc = acc * reduced(*s.series);
            }
            return ok(e.kind() == Kind::Product ? acc : one + acc);
        }
        case Kind::Map:
            return unsupported(e, "mapping space out of an uncertified complex");
        case Kind::Realization:
            return unsupported(e, "realization of an uncertified or empty complex");
        case Kind::SmashCoproduct:
            return unsupported(e, "unevaluated homotopy limit");
    }
    return unsupported(e, "unknown expression kind");
}

}  // namespace

SeriesResult series_of(const SpaceExpr& e, int degree_bound) {
    if (degree_bound < 0) throw InputError("truncation degree must be non-negative");
    return eval(normalize(e), degree_bound);
}

// ---------------------------------------------------------------- printing

namespace {

std::string coefficient_text(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : "(" + num.str() + "/" + den.str() + ")";
}

}  // namespace

std::string to_string(const PoincareSeries& p) {
    std::string out;
    for (int d = 0; d <= p.degree_bound(); ++d) {
        Rational c = p[d];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string power = d == 0 ? "" : (d == 1 ? "t" : "t^" + std::to_string(d));
        if (d == 0 || c != 1) out += coefficient_text(c);
        out += power;
    }
    return out.empty() ? "0" : out;
}

nlohmann::json to_json(const Rational& r) {
    auto number = [](const BigInt& x) -> nlohmann::json {
        if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
            return x.convert_to<long long>();
        return x.str();
    };
    return {number(boost::multiprecision::numerator(r)), number(boost::multiprecision::denominator(r))};
}

nlohmann::json to_json(const PoincareSeries& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_json(c));
    return out;
}

}  // namespace polyco
