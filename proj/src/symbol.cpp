#include "fht/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fht {

namespace {

constexpr double kCircleTol = 1e-12;
constexpr double kHitTol = 1e-14;     // "exactly at" a singular point
constexpr double kMinB = 1e-8;        // b must stay above this on the grid

double theta_of(cplx z) {
    double th = std::arg(z);
    if (th < 0.0) th += 2.0 * pi;
    return th;
}

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

bool integer_exponent(cplx e) { return e.imag() == 0.0 && near_integer(e.real()); }

void check_on_circle(cplx z) {
    if (std::abs(std::abs(z) - 1.0) > kCircleTol)
        throw NotOnUnitCircle("eval: |z| = " + std::to_string(std::abs(z)) + " is not 1 within 1e-12");
}

}  // namespace

SymbolSpec SymbolSpec::singular(cplx alpha, cplx beta) {
    SymbolSpec s;
    s.kind = SymbolKind::Singular;
    s.alpha = alpha;
    s.beta = beta;
    return s;
}

SymbolSpec SymbolSpec::type1(cplx alpha, cplx beta, bool wiener_hopf) {
    SymbolSpec s;
    s.kind = SymbolKind::TypeI;
    s.alpha = alpha;
    s.beta = beta;
    s.require_wiener_hopf = wiener_hopf;
    return s;
}

SymbolSpec SymbolSpec::type2(cplx z0, cplx delta, cplx gamma, BKind b) {
    SymbolSpec s;
    s.kind = SymbolKind::TypeII;
    s.z0 = z0;
    s.delta = delta;
    s.gamma = gamma;
    s.b_kind = b;
    return s;
}

SymbolSpec SymbolSpec::type3(std::vector<PointSingularity> sing) {
    SymbolSpec s;
    s.kind = SymbolKind::TypeIII;
    s.singularities = std::move(sing);
    return s;
}

cplx SymbolSpec::effective_alpha() const {
    switch (kind) {
        case SymbolKind::Singular: return alpha;
        case SymbolKind::TypeI: return alpha / 2.0;
        case SymbolKind::TypeII: return (delta + gamma) / 2.0;
        case SymbolKind::TypeIII:
            return singularities.empty() ? cplx{0.0, 0.0} : cplx{singularities.front().alpha, 0.0};
    }
    return {0.0, 0.0};
}

std::vector<double> SymbolSpec::singular_angles() const {
    std::vector<double> out;
    switch (kind) {
        case SymbolKind::Singular:
        case SymbolKind::TypeI:
            if (alpha != cplx{} || beta != cplx{}) out.push_back(0.0);
            break;
        case SymbolKind::TypeII:
            if (delta != cplx{} || gamma != cplx{}) out.push_back(theta_of(z0));
            break;
        case SymbolKind::TypeIII:
            for (const auto& s : singularities)
                if (s.alpha != 0.0) out.push_back(theta_of(std::exp(-iu * s.theta)));
            break;
    }
    return out;
}

bool SymbolSpec::is_smooth() const {
    switch (kind) {
        case SymbolKind::Singular:
        case SymbolKind::TypeI:
            return integer_exponent(alpha) && integer_exponent(beta);
        case SymbolKind::TypeII:
            return integer_exponent(delta) && integer_exponent(gamma);
        case SymbolKind::TypeIII:
            return std::all_of(singularities.begin(), singularities.end(),
                               [](const PointSingularity& s) { return s.alpha == 0.0; });
    }
    return true;
}

cplx SymbolSpec::b_value(cplx z) const {
    switch (b_kind) {
        case BKind::One: return {1.0, 0.0};
        case BKind::TableRow1: return std::exp(-2.0 * pi * iu * static_cast<double>(table_l));
        case BKind::TableRow2: return pow_principal(1.0 - z0 / z, -delta);
        case BKind::TableRow3: return pow_principal(1.0 - z / z0, -gamma);
        case BKind::TableRow4:
            return pow_principal(1.0 - z0 / z, -delta) * pow_principal(1.0 - z / z0, -gamma);
        case BKind::TableRow5:
            return pow_principal((1.0 - z0 / z) * (1.0 - z / z0), -std::abs(delta + gamma));
        case BKind::Custom:
            if (!b_custom) throw ConfigError("TypeII: b_kind is Custom but no b_custom supplied");
            return b_custom(z);
    }
    return {1.0, 0.0};
}

cplx SymbolSpec::c_value(cplx z) const {
    if (c_kind == CKind::One) return {1.0, 0.0};
    if (!c_custom) throw ConfigError("TypeIII: c_kind is Custom but no c_custom supplied");
    return c_custom(z);
}

const SymbolSpec& validate(const SymbolSpec& spec) {
    switch (spec.kind) {
        case SymbolKind::Singular:
        case SymbolKind::TypeI:
            if (spec.alpha.real() <= -0.5)
                throw ParameterOutOfRange("alpha: Re(alpha) > -1/2 required");
            if (spec.kind == SymbolKind::TypeI && spec.require_wiener_hopf) {
                double a = spec.alpha.real(), b = spec.beta.real();
                if (std::abs(spec.alpha.imag()) > 1e-14 || std::abs(spec.beta.imag()) > 1e-14)
                    throw ParameterOutOfRange("alpha/beta: real parameters required on the Wiener-Hopf route");
                if (!(0.0 < a / 2.0 && a / 2.0 < -b && -b < 1.0))
                    throw ParameterOutOfRange("alpha/beta: 0 < alpha/2 < -beta < 1 required");
            }
            break;
        case SymbolKind::TypeII: {
            if (spec.delta.real() + spec.gamma.real() <= -1.0)
                throw ParameterOutOfRange("delta/gamma: Re(delta) + Re(gamma) > -1 required");
            if (std::abs(std::abs(spec.z0) - 1.0) > 1e-14)
                throw ParameterOutOfRange("z0: |z0| = 1 required within 1e-14");
            break;
        }
        case SymbolKind::TypeIII: {
            for (const auto& s : spec.singularities)
                if (!(s.alpha > -0.5 && s.alpha < 0.5))
                    throw ParameterOutOfRange("alpha_j: -1/2 < alpha_j < 1/2 required");
            for (std::size_t i = 0; i < spec.singularities.size(); ++i)
                for (std::size_t j = i + 1; j < spec.singularities.size(); ++j) {
                    double d = std::remainder(spec.singularities[i].theta - spec.singularities[j].theta,
                                              2.0 * pi);
                    if (std::abs(d) < 1e-12) throw ParameterOutOfRange("theta_j: angles must be distinct");
                }
            break;
        }
    }
    return spec;
}

namespace {

void check_singular_hit(const SymbolSpec& spec, cplx z) {
    for (double th : spec.singular_angles()) {
        if (std::abs(z - std::exp(iu * th)) < kHitTol)
            throw EvaluationAtSingularity("eval: z coincides with a singular point of the symbol");
    }
}

cplx eval_type2_at(const SymbolSpec& spec, cplx z) {
    return pow_principal(1.0 - spec.z0 / z, spec.delta) *
           pow_principal(1.0 - z / spec.z0, spec.gamma) * spec.b_value(z);
}

cplx eval_type3_at(const SymbolSpec& spec, cplx z) {
    cplx out{1.0, 0.0};
    for (const auto& s : spec.singularities) {
        cplx zj = std::exp(-iu * s.theta);
        out *= std::pow(std::abs(zj), 2.0 * s.alpha) * std::pow(std::abs(z / zj - 1.0), 2.0 * s.alpha);
    }
    return out * spec.c_value(z);
}

}  // namespace

cplx eval(const SymbolSpec& spec, cplx z) {
    check_on_circle(z);
    check_singular_hit(spec, z);
    const double th = theta_of(z);
    switch (spec.kind) {
        case SymbolKind::Singular:
            return pow_nonneg(2.0 - 2.0 * std::cos(th), spec.alpha) * pow_principal(-z, spec.beta);
        case SymbolKind::TypeI:
            return pow_nonneg(2.0 - 2.0 * std::cos(th), spec.alpha / 2.0) * pow_principal(-z, spec.beta);
        case SymbolKind::TypeII:
            return eval_type2_at(spec, z);
        case SymbolKind::TypeIII:
            return eval_type3_at(spec, z);
    }
    return {0.0, 0.0};
}

cplx eval_continued(const SymbolSpec& spec, cplx z) {
    check_singular_hit(spec, z);
    switch (spec.kind) {
        case SymbolKind::Singular:
            return pow_principal(2.0 - z - 1.0 / z, spec.alpha) * pow_principal(-z, spec.beta);
        case SymbolKind::TypeI:
            return pow_principal(2.0 - z - 1.0 / z, spec.alpha / 2.0) * pow_principal(-z, spec.beta);
        case SymbolKind::TypeII:
            return eval_type2_at(spec, z);
        case SymbolKind::TypeIII:
            return eval_type3_at(spec, z);
    }
    return {0.0, 0.0};
}

cplx singular_form_factored(const SymbolSpec& spec, cplx z) {
    if (spec.kind != SymbolKind::Singular)
        throw ParameterOutOfRange("singular_form_factored: Singular family only");
    check_on_circle(z);
    check_singular_hit(spec, z);
    const double th = theta_of(z);
    const double s = std::sin(0.5 * th);
    // Branches continuous on theta in (0, 2 pi): arg(z-1) = (theta+pi)/2,
    // arg(z) = theta.
    const cplx log_zm1{std::log(2.0 * s), 0.5 * (th + pi)};
    const cplx log_z{0.0, th};
    return std::exp(-iu * pi * (spec.alpha + spec.beta)) *
           std::exp(2.0 * spec.alpha * log_zm1) * std::exp((spec.beta - spec.alpha) * log_z);
}

OffsetGrid make_offset_grid(const SymbolSpec& spec, std::size_t m) {
    if (m < 8) throw ParameterOutOfRange("grid: m >= 8 required");
    const auto angles = spec.singular_angles();
    constexpr double offsets[] = {0.5, 0.25, 0.375, 0.3125, 0.28125};
    double chosen = offsets[0];
    for (double off : offsets) {
        bool clash = false;
        for (double th : angles) {
            double pos = th * static_cast<double>(m) / (2.0 * pi) - off;
            if (std::abs(pos - std::round(pos)) < 1e-9) {
                clash = true;
                break;
            }
        }
        if (!clash) {
            chosen = off;
            break;
        }
    }
    OffsetGrid g;
    g.m = m;
    g.offset = chosen;
    g.nodes.resize(m);
    for (std::size_t k = 0; k < m; ++k) g.nodes[k] = std::exp(iu * g.theta(k));
    return g;
}

std::vector<cplx> eval_grid(const SymbolSpec& spec, std::size_t m) {
    OffsetGrid g = make_offset_grid(spec, m);
    std::vector<cplx> vals(m);
    for (std::size_t k = 0; k < m; ++k) vals[k] = eval(spec, g.nodes[k]);
    if (spec.kind == SymbolKind::TypeII && spec.b_kind != BKind::One) {
        double bmin = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < m; ++k) bmin = std::min(bmin, std::abs(spec.b_value(g.nodes[k])));
        if (bmin < kMinB)
            throw ParameterOutOfRange("b: vanishes on the circle (min |b| < 1e-8 on the grid)");
    }
    return vals;
}

namespace {

nlohmann::json cplx_json(cplx v) { return nlohmann::json::array({v.real(), v.imag()}); }

cplx cplx_from(const nlohmann::json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

const char* bkind_name(BKind b) {
    switch (b) {
        case BKind::One: return "one";
        case BKind::TableRow1: return "row1";
        case BKind::TableRow2: return "row2";
        case BKind::TableRow3: return "row3";
        case BKind::TableRow4: return "row4";
        case BKind::TableRow5: return "row5";
        case BKind::Custom: return "custom";
    }
    return "one";
}

BKind bkind_from(const std::string& s) {
    if (s == "one") return BKind::One;
    if (s == "row1") return BKind::TableRow1;
    if (s == "row2") return BKind::TableRow2;
    if (s == "row3") return BKind::TableRow3;
    if (s == "row4") return BKind::TableRow4;
    if (s == "row5") return BKind::TableRow5;
    throw ConfigError("unknown b_kind: " + s);
}

}  // namespace

std::string kind_name(SymbolKind k) {
    switch (k) {
        case SymbolKind::Singular: return "singular";
        case SymbolKind::TypeI: return "type1";
        case SymbolKind::TypeII: return "type2";
        case SymbolKind::TypeIII: return "type3";
    }
    return "singular";
}

nlohmann::json to_json(const SymbolSpec& spec) {
    if (spec.b_kind == BKind::Custom || spec.c_kind == CKind::Custom)
        throw ConfigError("custom b/c plug-ins are API-only and not serializable");
    nlohmann::json j;
    j["kind"] = kind_name(spec.kind);
    j["alpha"] = cplx_json(spec.alpha);
    j["beta"] = cplx_json(spec.beta);
    j["delta"] = cplx_json(spec.delta);
    j["gamma"] = cplx_json(spec.gamma);
    j["z0_angle"] = theta_of(spec.z0);
    j["b_kind"] = bkind_name(spec.b_kind);
    j["table_l"] = spec.table_l;
    j["c_kind"] = spec.c_kind == CKind::One ? "one" : "custom";
    auto arr = nlohmann::json::array();
    for (const auto& s : spec.singularities) arr.push_back({{"theta", s.theta}, {"alpha_j", s.alpha}});
    j["singularities"] = arr;
    j["require_wiener_hopf"] = spec.require_wiener_hopf;
    return j;
}

SymbolSpec symbol_from_json(const nlohmann::json& j) {
    SymbolSpec spec;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "singular") spec.kind = SymbolKind::Singular;
    else if (kind == "type1") spec.kind = SymbolKind::TypeI;
    else if (kind == "type2") spec.kind = SymbolKind::TypeII;
    else if (kind == "type3") spec.kind = SymbolKind::TypeIII;
    else throw ConfigError("unknown symbol kind: " + kind);
    if (j.contains("alpha")) spec.alpha = cplx_from(j["alpha"]);
    if (j.contains("beta")) spec.beta = cplx_from(j["beta"]);
    if (j.contains("delta")) spec.delta = cplx_from(j["delta"]);
    if (j.contains("gamma")) spec.gamma = cplx_from(j["gamma"]);
    if (j.contains("z0_angle")) spec.z0 = std::exp(iu * j["z0_angle"].get<double>());
    if (j.contains("b_kind")) spec.b_kind = bkind_from(j["b_kind"].get<std::string>());
    if (j.contains("table_l")) spec.table_l = j["table_l"].get<long>();
    if (j.contains("c_kind") && j["c_kind"].get<std::string>() != "one")
        throw ConfigError("c_kind: only \"one\" is serializable");
    if (j.contains("singularities"))
        for (const auto& s : j["singularities"])
            spec.singularities.push_back({s.at("theta").get<double>(), s.at("alpha_j").get<double>()});
    if (j.contains("require_wiener_hopf")) spec.require_wiener_hopf = j["require_wiener_hopf"].get<bool>();
    return validate(spec);
}

}  // namespace fht
