#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace smithles::gradedalg {

// A graded polynomial variable: name plus positive degree.
struct F2Generator {
    std::string name;
    unsigned degree;
    bool operator==(const F2Generator&) const = default;
};

// Monomial as an exponent vector over a fixed generator list.
using Monomial = std::vector<unsigned>;

// Polynomial over F2 in named graded generators, optionally truncated:
// monomials above the truncation degree are discarded on the fly, which is
// what makes inverse power series of virtual bundles finite objects.
class F2Poly {
public:
    F2Poly() = default;
    explicit F2Poly(std::vector<F2Generator> gens,
                    std::optional<unsigned> truncation = std::nullopt)
        : gens_(std::move(gens)), truncation_(truncation) {}

    static F2Poly one(std::vector<F2Generator> gens,
                      std::optional<unsigned> truncation = std::nullopt);

    const std::vector<F2Generator>& generators() const { return gens_; }
    std::optional<unsigned> truncation() const { return truncation_; }

    unsigned monomial_degree(const Monomial& m) const;
    bool is_zero() const { return monomials_.empty(); }
    bool is_one() const;

    void toggle(const Monomial& m);  // add one monomial mod 2

    F2Poly operator+(const F2Poly& rhs) const;  // == subtraction over F2
    F2Poly operator*(const F2Poly& rhs) const;

    // Multiplicative inverse as a power series cut at the truncation
    // degree; requires constant term 1.
    F2Poly inverse() const;

    F2Poly power(long e) const;  // negative exponents via inverse()

    // The sum of the degree-d monomials.
    F2Poly homogeneous_part(unsigned d) const;

    bool operator==(const F2Poly& rhs) const;

    std::string to_string() const;

private:
    std::vector<F2Generator> gens_;
    std::optional<unsigned> truncation_;
    std::map<Monomial, bool> monomials_;  // presence = coefficient 1

    void check_compatible(const F2Poly& rhs) const;
};

}  // namespace smithles::gradedalg
