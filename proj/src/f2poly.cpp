#include "smithles/f2poly.hpp"

#include <algorithm>
#include <sstream>

#include "smithles/errors.hpp"

namespace smithles::gradedalg {

F2Poly F2Poly::one(std::vector<F2Generator> gens, std::optional<unsigned> truncation) {
    F2Poly p(std::move(gens), truncation);
    p.toggle(Monomial(p.gens_.size(), 0));
    return p;
}

unsigned F2Poly::monomial_degree(const Monomial& m) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) d += m[i] * gens_[i].degree;
    return d;
}

bool F2Poly::is_one() const {
    return monomials_.size() == 1 && monomials_.begin()->first == Monomial(gens_.size(), 0);
}

void F2Poly::toggle(const Monomial& m) {
    if (truncation_ && monomial_degree(m) > *truncation_) return;
    auto it = monomials_.find(m);
    if (it == monomials_.end())
        monomials_.emplace(m, true);
    else
        monomials_.erase(it);
}

void F2Poly::check_compatible(const F2Poly& rhs) const {
    if (gens_ != rhs.gens_)
        throw ContractError("F2Poly operands live in different polynomial rings");
}

F2Poly F2Poly::operator+(const F2Poly& rhs) const {
    check_compatible(rhs);
    F2Poly out = *this;
    for (const auto& [m, _] : rhs.monomials_) out.toggle(m);
    return out;
}

F2Poly F2Poly::operator*(const F2Poly& rhs) const {
    check_compatible(rhs);
    F2Poly out(gens_, truncation_ ? truncation_ : rhs.truncation_);
    for (const auto& [a, _] : monomials_)
        for (const auto& [b, __] : rhs.monomials_) {
            Monomial m(gens_.size());
            for (std::size_t i = 0; i < gens_.size(); ++i) m[i] = a[i] + b[i];
            out.toggle(m);
        }
    return out;
}

F2Poly F2Poly::inverse() const {
    if (!truncation_)
        throw ContractError("power-series inverse needs a truncation degree");
    Monomial unit(gens_.size(), 0);
    if (!monomials_.count(unit))
        throw ContractError("power-series inverse needs constant term 1");
    // (1 + n)^{-1} = 1 + n + n^2 + ... ; n is the augmentation part and
    // raises degree each round, so the loop stops at the truncation.
    F2Poly n = *this;
    n.toggle(unit);
    F2Poly acc = one(gens_, truncation_);
    F2Poly term = one(gens_, truncation_);
    for (unsigned d = 0; d <= *truncation_ && !term.is_zero(); ++d) {
        term = term * n;
        acc = acc + term;
    }
    return acc;
}

F2Poly F2Poly::power(long e) const {
    F2Poly base = e >= 0 ? *this : inverse();
    unsigned long k = e >= 0 ? e : -e;
    F2Poly acc = one(gens_, truncation_);
    for (unsigned long i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

F2Poly F2Poly::homogeneous_part(unsigned d) const {
    F2Poly out(gens_, truncation_);
    for (const auto& [m, _] : monomials_)
        if (monomial_degree(m) == d) out.toggle(m);
    return out;
}

bool F2Poly::operator==(const F2Poly& rhs) const {
    return gens_ == rhs.gens_ && monomials_ == rhs.monomials_;
}

std::string F2Poly::to_string() const {
    if (monomials_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, _] : monomials_) {
        if (!first) os << " + ";
        first = false;
        bool any = false;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (m[i] == 0) continue;
            if (any) os << "*";
            os << gens_[i].name;
            if (m[i] > 1) os << "^" << m[i];
            any = true;
        }
        if (!any) os << "1";
    }
    return os.str();
}

}  // namespace smithles::gradedalg
