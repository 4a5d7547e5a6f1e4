#pragma once

// The four symbol families on the unit circle and their branch conventions.
//
// Writing z = e^{i theta}, theta in (0, 2 pi):
//
//   Singular:  a(z) = (2 - z - 1/z)^alpha (-z)^beta
//   Type I:    a(z) = (2 - z - 1/z)^{alpha/2} (-z)^beta
//   Type II:   a(z) = (1 - z0/z)^delta (1 - z/z0)^gamma b(z)
//   Type III:  a(z) = prod_j |z_j|^{2 alpha_j} |z/z_j - 1|^{2 alpha_j} c(z),
//              z_j = e^{-i theta_j}
//
// Every complex power is exp(e * Log w) with the principal Log.  The bases are
// arranged so that the principal cut is touched only at the singular points
// themselves: 2 - z - 1/z = 2 - 2 cos(theta) is real nonnegative, and -z
// crosses the positive real axis only at z = 1.  Consequently each family is
// continuous on the circle away from its singular points, and the cut of the
// family sits at z = 1 (Singular/Type I), z = z0 (Type II), z = z_j
// (Type III).  Type III is real valued and nonnegative.
//
// The equivalent factored display of the singular symbol,
// (z-1)^{2 alpha} z^{beta-alpha} e^{-i pi (alpha+beta)}, is reproduced by
// singular_form_factored() with the continuous branches arg(z-1) =
// (theta+pi)/2 and arg(z) = theta; both forms agree pointwise away from z = 1.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "fht/errors.hpp"
#include "fht/types.hpp"

#include "json.hpp"

namespace fht {

enum class SymbolKind { Singular, TypeI, TypeII, TypeIII };

// Smooth nonvanishing prefactors b for Type II.  The TableRow* entries are the
// rows of the E^{l,(Type II)} table; rows 2-5 close over the spec's own
// (z0, delta, gamma) and row 1 is the constant exp(-2 pi i l).
enum class BKind { One, TableRow1, TableRow2, TableRow3, TableRow4, TableRow5, Custom };

enum class CKind { One, Custom };

struct PointSingularity {
    double theta;   // z_j = exp(-i theta_j)
    double alpha;   // exponent, in (-1/2, 1/2)
};

struct SymbolSpec {
    SymbolKind kind = SymbolKind::Singular;

    cplx alpha{0.0, 0.0};   // Singular / Type I
    cplx beta{0.0, 0.0};

    cplx delta{0.0, 0.0};   // Type II
    cplx gamma{0.0, 0.0};
    cplx z0{1.0, 0.0};
    BKind b_kind = BKind::One;
    long table_l = 0;       // the l entering the TableRow1 constant
    std::function<cplx(cplx)> b_custom;

    std::vector<PointSingularity> singularities;   // Type III
    CKind c_kind = CKind::One;
    std::function<cplx(cplx)> c_custom;

    // When set, Type I parameters must satisfy 0 < alpha/2 < -beta < 1.
    bool require_wiener_hopf = false;

    static SymbolSpec singular(cplx alpha, cplx beta);
    static SymbolSpec type1(cplx alpha, cplx beta, bool wiener_hopf = false);
    static SymbolSpec type2(cplx z0, cplx delta, cplx gamma, BKind b = BKind::One);
    static SymbolSpec type3(std::vector<PointSingularity> sing);

    // Exponent a_eff of |z - z_*|^{2 a_eff} at the leading singularity:
    // alpha (Singular), alpha/2 (Type I), (delta+gamma)/2 (Type II),
    // alpha_1 (Type III; 0 when the product is empty).
    cplx effective_alpha() const;

    // Angles theta in [0, 2 pi) of the singular points that actually carry a
    // nonzero exponent.
    std::vector<double> singular_angles() const;

    // True when no factor has a genuine circle singularity (all exponents
    // integral, Type III exponents zero): quadrature converges at the smooth
    // 1e-10 default.
    bool is_smooth() const;

    // b / c evaluated under the spec's plug-in selection.
    cplx b_value(cplx z) const;
    cplx c_value(cplx z) const;
};

// Checks the family invariants and returns the spec unchanged.
// Throws ParameterOutOfRange naming the offending field.
const SymbolSpec& validate(const SymbolSpec& spec);

// a(z) for |z| = 1 (within 1e-12, else NotOnUnitCircle).  Evaluation exactly
// at a singular point carrying a nonzero exponent throws
// EvaluationAtSingularity.
cplx eval(const SymbolSpec& spec, cplx z);

// Principal-branch continuation used off the circle (full-momentum E^l,
// z_crit, momentum solves).  Agrees with eval() on the circle.
cplx eval_continued(const SymbolSpec& spec, cplx z);

// The factored display of the singular symbol (see the header comment); equal
// to eval() for the Singular family away from z = 1.
cplx singular_form_factored(const SymbolSpec& spec, cplx z);

// Quadrature grid z_k = exp(2 pi i (k + offset)/m).  The default offset 1/2
// keeps z = 1 off the nodes; make_offset_grid shifts the offset when another
// singular point lands on a node.
struct OffsetGrid {
    std::size_t m = 0;
    double offset = 0.5;
    std::vector<cplx> nodes;

    double theta(std::size_t k) const { return 2.0 * pi * (static_cast<double>(k) + offset) / static_cast<double>(m); }
};

OffsetGrid make_offset_grid(const SymbolSpec& spec, std::size_t m);

// eval on make_offset_grid(spec, m); m >= 8.
std::vector<cplx> eval_grid(const SymbolSpec& spec, std::size_t m);

// JSON form: {kind, alpha:[re,im], beta:[re,im], delta:[re,im],
// gamma:[re,im], z0_angle, b_kind, table_l, singularities:[{theta, alpha_j}],
// c_kind}.  Custom plug-ins are API-only and not serializable.
nlohmann::json to_json(const SymbolSpec& spec);
SymbolSpec symbol_from_json(const nlohmann::json& j);

std::string kind_name(SymbolKind k);

}  // namespace fht
