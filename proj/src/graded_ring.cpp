#include "smithles/graded_ring.hpp"

#include <algorithm>
#include <sstream>

#include "smithles/errors.hpp"

namespace smithles::gradedalg {

using fgab::FgAbGroup;
using fgab::Int;
using fgab::IntMatrix;

GradedRing::GradedRing(std::string name, std::vector<RingGenerator> gens,
                       std::vector<RingElement> relations, unsigned exponent_bound)
    : name_(std::move(name)),
      gens_(std::move(gens)),
      relations_(std::move(relations)),
      exponent_bound_(exponent_bound) {
    for (const RingElement& r : relations_) {
        if (r.empty()) throw ContractError("empty relation");
        element_degree(r);  // homogeneity check
    }
    // A relation "g^k = 0" with unit coefficient caps the exponent of g at
    // k-1 in every basis enumeration.
    exponent_caps_.assign(gens_.size(), 0);
    for (const RingElement& r : relations_) {
        if (r.size() != 1) continue;
        const auto& [mono, coeff] = *r.begin();
        if (coeff != 1 && coeff != -1) continue;
        std::size_t nonzero = 0, which = 0;
        for (std::size_t i = 0; i < mono.size(); ++i)
            if (mono[i] > 0) {
                ++nonzero;
                which = i;
            }
        if (nonzero == 1) exponent_caps_[which] = mono[which];
    }
}

int GradedRing::monomial_degree(const RingMonomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) d += (int)m[i] * gens_[i].degree;
    return d;
}

int GradedRing::element_degree(const RingElement& e) const {
    if (e.empty()) throw ContractError("degree of the zero element is undefined");
    int d = monomial_degree(e.begin()->first);
    for (const auto& [m, _] : e)
        if (monomial_degree(m) != d)
            throw ContractError("element is not homogeneous");
    return d;
}

RingElement GradedRing::generator_element(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) {
            RingMonomial m(gens_.size(), 0);
            m[i] = 1;
            return {{m, Int(1)}};
        }
    throw ContractError("unknown ring generator '" + name + "'");
}

RingElement GradedRing::multiply(const RingElement& a, const RingElement& b) const {
    RingElement out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            RingMonomial m(gens_.size());
            for (std::size_t i = 0; i < gens_.size(); ++i) m[i] = ma[i] + mb[i];
            Int c = out.count(m) ? out[m] : Int(0);
            c += ca * cb;
            if (c == 0)
                out.erase(m);
            else
                out[m] = c;
        }
    return out;
}

std::vector<RingMonomial> GradedRing::degree_basis(int d) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->entries.find(d);
        if (it != cache_->entries.end()) return it->second;
    }

    // Finiteness certificate: generators without a pure-power cap must all
    // sit on one strict side of degree zero. Then any degree-d monomial's
    // uncapped exponents are bounded by what the capped generators can
    // compensate, and the enumeration below is exact. Mixed signs (a power
    // series situation like ko^*[[p1H]]) get a refusal, never a guess.
    bool uncapped_neg = false, uncapped_pos = false, uncapped_zero = false;
    int capped_pos_max = 0, capped_neg_max = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (exponent_caps_[i] > 0) {
            int contrib = (int)(exponent_caps_[i] - 1) * gens_[i].degree;
            if (contrib > 0) capped_pos_max += contrib;
            if (contrib < 0) capped_neg_max -= contrib;
        } else {
            if (gens_[i].degree < 0) uncapped_neg = true;
            if (gens_[i].degree > 0) uncapped_pos = true;
            if (gens_[i].degree == 0) uncapped_zero = true;
        }
    }
    if ((uncapped_neg && uncapped_pos) || uncapped_zero)
        throw UnsupportedCaseError("monomial basis of " + name_ + " in degree " +
                                   std::to_string(d) +
                                   " is not finitely enumerable (mixed-sign generators)");

    std::vector<unsigned> limits(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (exponent_caps_[i] > 0) {
            limits[i] = exponent_caps_[i] - 1;
        } else if (gens_[i].degree < 0) {
            int budget = capped_pos_max - d;  // total weight available downward
            limits[i] = budget > 0 ? (unsigned)(budget / -gens_[i].degree) : 0;
        } else {
            int budget = d + capped_neg_max;
            limits[i] = budget > 0 ? (unsigned)(budget / gens_[i].degree) : 0;
        }
    }

    std::vector<RingMonomial> basis;
    RingMonomial cur(gens_.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, int degree_so_far) -> void {
        if (idx == gens_.size()) {
            if (degree_so_far == d) basis.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= limits[idx]; ++e) {
            cur[idx] = e;
            self(self, idx + 1, degree_so_far + (int)e * gens_[idx].degree);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, 0);

    for (const RingMonomial& m : basis) {
        unsigned total = 0;
        for (unsigned e : m) total += e;
        if (total > exponent_bound_)
            throw UnsupportedCaseError("degree " + std::to_string(d) + " of " + name_ +
                                       " needs monomials past the exponent bound " +
                                       std::to_string(exponent_bound_));
    }
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto [pos, _] = cache_->entries.emplace(d, std::move(basis));
    return pos->second;
}

IntMatrix GradedRing::relation_matrix(int d) const {
    const std::vector<RingMonomial>& basis = degree_basis(d);
    std::map<RingMonomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

    std::vector<std::vector<Int>> columns;
    for (const RingElement& r : relations_) {
        int rd = element_degree(r);
        int want = d - rd;
        // All multiplier monomials of degree d - deg(r); reuse the basis
        // enumerator, which respects caps and the bound.
        std::vector<RingMonomial> multipliers;
        try {
            multipliers = degree_basis(want);
        } catch (const UnsupportedCaseError&) {
            throw;  // same refusal applies to the relation layer
        }
        for (const RingMonomial& mult : multipliers) {
            std::vector<Int> col(basis.size(), Int(0));
            bool in_span = true;
            for (const auto& [mono, coeff] : r) {
                RingMonomial m(gens_.size());
                for (std::size_t i = 0; i < gens_.size(); ++i) m[i] = mono[i] + mult[i];
                auto it = index.find(m);
                if (it == index.end()) {
                    // Product fell outside the capped basis: it is divisible
                    // by a pure-power relation, i.e. already zero.
                    bool killed = false;
                    for (std::size_t i = 0; i < gens_.size(); ++i)
                        if (exponent_caps_[i] > 0 && m[i] >= exponent_caps_[i]) killed = true;
                    if (!killed) in_span = false;
                    continue;
                }
                col[it->second] += coeff;
            }
            if (!in_span)
                throw UnsupportedCaseError("relation multiple escapes the bounded basis in " +
                                           name_ + " degree " + std::to_string(d));
            columns.push_back(std::move(col));
        }
    }

    IntMatrix rel(basis.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < basis.size(); ++i) rel(i, j) = columns[j][i];
    return rel;
}

FgAbGroup GradedRing::graded_degree(int d) const { return fgab::cokernel(relation_matrix(d)); }

bool GradedRing::is_zero_in_degree(const RingElement& e, int d) const {
    const std::vector<RingMonomial>& basis = degree_basis(d);
    std::map<RingMonomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::vector<Int> vec(basis.size(), Int(0));
    for (const auto& [mono, coeff] : e) {
        if (monomial_degree(mono) != d) throw ContractError("element degree mismatch");
        auto it = index.find(mono);
        if (it == index.end()) {
            bool killed = false;
            for (std::size_t i = 0; i < gens_.size(); ++i)
                if (exponent_caps_[i] > 0 && mono[i] >= exponent_caps_[i]) killed = true;
            if (killed) continue;
            throw UnsupportedCaseError("element escapes the bounded basis");
        }
        vec[it->second] += coeff;
    }
    std::vector<Int> sol;
    return fgab::solve_linear(relation_matrix(d), vec, sol);
}

std::string GradedRing::to_string(const RingElement& e) const {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e) {
        if (!first) os << " + ";
        first = false;
        bool any = false;
        if (c != 1) {
            os << c;
            any = true;
        }
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

namespace {

RingMonomial mono(std::initializer_list<unsigned> exps) { return RingMonomial(exps); }

}  // namespace

GradedRing ko_coefficients() {
    std::vector<RingGenerator> gens = {{"eta", -1}, {"v", -4}, {"w", -8}};
    std::vector<RingElement> rels = {
        {{mono({1, 0, 0}), Int(2)}},                         // 2 eta
        {{mono({3, 0, 0}), Int(1)}},                         // eta^3
        {{mono({1, 1, 0}), Int(1)}},                         // eta v
        {{mono({0, 2, 0}), Int(1)}, {mono({0, 0, 1}), Int(-4)}},  // v^2 - 4w
    };
    GradedRing ring("ko^*", std::move(gens), std::move(rels));
    return ring;
}

GradedRing ko_of_s4() {
    std::vector<RingGenerator> gens = {{"eta", -1}, {"v", -4}, {"w", -8}, {"z", 4}};
    std::vector<RingElement> rels = {
        {{mono({1, 0, 0, 0}), Int(2)}},
        {{mono({3, 0, 0, 0}), Int(1)}},
        {{mono({1, 1, 0, 0}), Int(1)}},
        {{mono({0, 2, 0, 0}), Int(1)}, {mono({0, 0, 1, 0}), Int(-4)}},
        {{mono({0, 0, 0, 2}), Int(1)}},  // z^2
    };
    GradedRing ring("ko^*(S^4)", std::move(gens), std::move(rels));
    ring.set_ordinary_h3_vanishes(true);  // H^3(S^4; Z) = 0
    return ring;
}

GradedRing ko_of_bsp1() {
    std::vector<RingGenerator> gens = {{"eta", -1}, {"v", -4}, {"w", -8}, {"p1H", 4}};
    std::vector<RingElement> rels = {
        {{mono({1, 0, 0, 0}), Int(2)}},
        {{mono({3, 0, 0, 0}), Int(1)}},
        {{mono({1, 1, 0, 0}), Int(1)}},
        {{mono({0, 2, 0, 0}), Int(1)}, {mono({0, 0, 1, 0}), Int(-4)}},
    };
    GradedRing ring("ko^*(BSp(1))", std::move(gens), std::move(rels));
    ring.set_ordinary_h3_vanishes(true);  // BSp(1) is 3-connected
    return ring;
}

KoEulerResult ko_euler_rank3(const GradedRing& ring, const RingElement& x) {
    if (!x.empty() && ring.element_degree(x) != 4)
        throw ContractError("ko_euler_rank3 expects a degree-4 element");
    KoEulerResult out;
    out.ordinary_euler_zero = ring.ordinary_h3_vanishes();
    if (x.empty()) {
        out.ko_euler = {};
        return out;
    }
    out.ko_euler = ring.multiply(ring.generator_element("eta"), x);
    return out;
}

std::optional<unsigned long> cap_p1h(unsigned long x_power) {
    if (x_power == 0) return std::nullopt;  // x^{-1} = 0
    return x_power - 1;
}

}  // namespace smithles::gradedalg
