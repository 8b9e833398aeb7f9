#ifndef OREPOLY_TEXTIO_HPP
#define OREPOLY_TEXTIO_HPP

#include <memory>
#include <string>

#include "orepoly/centre.hpp"

namespace orepoly {

/*
 * Text formats.
 *
 * Field spec:   GF(p^n; modulus=c0,c1,...,cn; frob=s)
 *               modulus (little-endian over GF(p)) and frob clauses optional;
 *               frob defaults to 1, the modulus to the deterministic lowest
 *               irreducible.
 * Skew polys:   X^2 + (w+1)*X + w      with w the class of the defining
 *               variable of k.
 * Centre polys: Y^2 + u*Y + 1          with u the subfield generator and
 *               Y = X^r; an optional trailing "# Y = X^r" tag is accepted
 *               and produced in tagged form.
 */

struct FieldSpec {
    uint32_t p = 2, n = 1, s = 1;
    std::vector<uint32_t> modulus;  // empty: deterministic default
};

FieldSpec parse_field_spec(const std::string& text);
std::unique_ptr<SkewContext> make_context(const FieldSpec& spec);

std::string format_element(const SkewContext& ctx, uint64_t packed);
std::string format_subfield_element(const SkewContext& ctx, uint64_t packed);

SkewPoly parse_skew_poly(const SkewContext& ctx, const std::string& text);
std::string format_skew_poly(const SkewPoly& p);

CentrePoly parse_centre_poly(const SkewContext& ctx, const std::string& text);
std::string format_centre_poly(const CentrePoly& c, bool with_tag = false);

}  // namespace orepoly

#endif
