#pragma once

#include <map>
#include <string>
#include <vector>

#include "smithles/f2poly.hpp"

namespace smithles::gradedalg {

// The supported classifying spaces. A closed enumeration: each carries a
// hardcoded mod-2 cohomology ring, its generator bundles with their total
// Stiefel-Whitney classes, and the degree-2 integral-lift rule used by the
// spin^c check.
enum class Base { BZ2, BU1, BSO3, BSU2 };

struct BundleGenerator {
    std::string name;
    unsigned rank;
    F2Poly total_sw;  // in the base's cohomology generators, untruncated
};

struct BaseInfo {
    Base id;
    std::string name;
    std::vector<F2Generator> cohomology;   // polynomial generators of H^*(-; F2)
    std::vector<BundleGenerator> bundles;  // named generator bundles
    // Which sums of degree-2 monomials admit integral lifts. Encoded as:
    // true = every degree-2 class lifts, false = only zero lifts.
    bool every_degree2_class_lifts;
};

const BaseInfo& base_info(Base b);
Base base_by_name(const std::string& name);  // accepts BZ2, BU1, BSO3, BSU2

// Formal integer combination of generator bundles over one base; negative
// coefficients mean virtual bundles.
class BundleExpr {
public:
    explicit BundleExpr(Base base) : base_(base) {}
    BundleExpr(Base base, std::map<std::string, long> coefficients);

    Base base() const { return base_; }
    const std::map<std::string, long>& coefficients() const { return coeffs_; }

    long rank() const;  // weighted sum of generator ranks
    bool is_genuine() const;  // all coefficients >= 0, not all zero
    BundleExpr scaled(long k) const;
    BundleExpr operator+(const BundleExpr& rhs) const;
    BundleExpr operator-() const;

    std::string to_string() const;  // normalized grammar form, e.g. "3*sigma"

private:
    Base base_;
    std::map<std::string, long> coeffs_;
};

// Bundle-expression grammar (ASCII):
//   bundle := signed_term (("+"|"-") term)*
//   term   := [posint "*"] ident
BundleExpr parse_bundle(Base base, const std::string& text);

// Whitney product of generator classes raised to their coefficients,
// truncated at the given degree. Negative coefficients use the formal
// inverse power series over F2.
F2Poly total_sw(const BundleExpr& b, unsigned truncation);

}  // namespace smithles::gradedalg
