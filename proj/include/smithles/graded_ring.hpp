#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "smithles/fgab.hpp"

namespace smithles::gradedalg {

struct RingGenerator {
    std::string name;
    int degree;  // negative degrees allowed (coefficient rings)
};

// Monomial in ring generators; exponent per generator.
using RingMonomial = std::vector<unsigned>;

// Integer combination of monomials; all monomials of one element of a
// relation set share a degree.
using RingElement = std::map<RingMonomial, fgab::Int>;

// Graded ring presented by generators and homogeneous integer relations.
// Degreewise groups are cokernels of the degree-restricted relation
// matrix; monomial enumeration is bounded and bails out (rather than
// answering wrongly) when the basis of a degree cannot be certified finite.
class GradedRing {
public:
    GradedRing(std::string name, std::vector<RingGenerator> gens,
               std::vector<RingElement> relations, unsigned exponent_bound = 16);

    const std::string& name() const { return name_; }
    const std::vector<RingGenerator>& generators() const { return gens_; }
    unsigned exponent_bound() const { return exponent_bound_; }
    bool ordinary_h3_vanishes() const { return ordinary_h3_vanishes_; }
    void set_ordinary_h3_vanishes(bool v) { ordinary_h3_vanishes_ = v; }

    int monomial_degree(const RingMonomial& m) const;
    int element_degree(const RingElement& e) const;  // ContractError if mixed

    RingElement generator_element(const std::string& name) const;
    RingElement multiply(const RingElement& a, const RingElement& b) const;

    // Monomial basis of one degree (capped by pure-power relations, bounded
    // by the exponent bound; UnsupportedCaseError when truncation could
    // hide basis elements). Cached per degree; safe to query concurrently.
    std::vector<RingMonomial> degree_basis(int d) const;

    fgab::FgAbGroup graded_degree(int d) const;

    bool is_zero_in_degree(const RingElement& e, int d) const;

    std::string to_string(const RingElement& e) const;

private:
    std::string name_;
    std::vector<RingGenerator> gens_;
    std::vector<RingElement> relations_;
    unsigned exponent_bound_;
    bool ordinary_h3_vanishes_ = false;
    std::vector<unsigned> exponent_caps_;  // from pure-power relations; 0 = none
    // Write-once per degree, shared across copies of the ring.
    struct BasisCache {
        std::mutex mutex;
        std::map<int, std::vector<RingMonomial>> entries;
    };
    std::shared_ptr<BasisCache> cache_ = std::make_shared<BasisCache>();

    fgab::IntMatrix relation_matrix(int d) const;
};

// Result of the rank-3 ko-Euler-class rule e(V) = eta * p1H(S_V).
struct KoEulerResult {
    RingElement ko_euler;        // eta * input, in the ambient ring
    bool ordinary_euler_zero;    // H^3 of the base vanishes
};

// Builders for the rings used by the desk computations.
GradedRing ko_coefficients();        // Z[eta, v, w]/(2 eta, eta^3, eta v, v^2 - 4w)
GradedRing ko_of_s4();               // ko^*[z]/(z^2), |z| = 4
GradedRing ko_of_bsp1();             // ko^*[[p1H]], |p1H| = 4

// eta * x for a degree-4 element x; ContractError on degree mismatch.
KoEulerResult ko_euler_rank3(const GradedRing& ring, const RingElement& x);

// The cap-product rule p1H ∩ x^k = x^{k-1}, with x^{-1} = 0 encoded as
// nullopt.
std::optional<unsigned long> cap_p1h(unsigned long x_power);

}  // namespace smithles::gradedalg
