#include "smithles/fgab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "smithles/errors.hpp"

namespace smithles::fgab {

namespace {

std::map<Int, unsigned> factorize(Int n) {
    if (n < 0) n = -n;
    std::map<Int, unsigned> out;
    if (n <= 1) return out;
    for (Int p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

Int pow_int(const Int& base, unsigned e) {
    Int r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

// Exponent partition (descending) of the p-primary part.
std::vector<unsigned> primary_partition(const FgAbGroup& g, const Int& p) {
    std::vector<unsigned> part;
    for (const Int& d : g.invariant_factors()) {
        Int m = d;
        unsigned e = 0;
        while (m % p == 0) {
            ++e;
            m /= p;
        }
        if (e > 0) part.push_back(e);
    }
    std::sort(part.rbegin(), part.rend());
    return part;
}

std::set<Int> prime_support(const FgAbGroup& g) {
    std::set<Int> primes;
    for (const Int& d : g.invariant_factors())
        for (const auto& [p, e] : factorize(d)) primes.insert(p);
    return primes;
}

std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned rest, unsigned maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Littlewood-Richardson positivity: is there a subgroup of type mu in a
// p-group of type lambda with quotient of type nu? Classical answer: yes
// iff the skew shape lambda/mu has an LR filling of content nu. Backtracks
// over the reverse reading word (rows top to bottom, right to left).
bool lr_positive(const std::vector<unsigned>& lambda, const std::vector<unsigned>& mu,
                 const std::vector<unsigned>& nu) {
    unsigned total_l = 0, total_m = 0, total_n = 0;
    for (unsigned x : lambda) total_l += x;
    for (unsigned x : mu) total_m += x;
    for (unsigned x : nu) total_n += x;
    if (total_l != total_m + total_n) return false;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (i >= lambda.size() || mu[i] > lambda[i]) return false;
    if (nu.empty()) return total_l == total_m;
    if (nu.size() > lambda.size()) return false;

    struct Cell {
        std::size_t row;
        std::size_t col;
    };
    std::vector<Cell> cells;  // reverse reading order
    for (std::size_t r = 0; r < lambda.size(); ++r) {
        unsigned lo = r < mu.size() ? mu[r] : 0;
        for (unsigned c = lambda[r]; c > lo; --c) cells.push_back({r, c - 1});
    }

    std::vector<std::vector<unsigned>> fill(lambda.size());
    for (std::size_t r = 0; r < lambda.size(); ++r) fill[r].assign(lambda[r], 0);
    std::vector<unsigned> count(nu.size() + 1, 0);

    auto rec = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == cells.size()) return true;
        auto [r, c] = cells[idx];
        for (unsigned v = 1; v <= nu.size(); ++v) {
            if (count[v] >= nu[v - 1]) continue;
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;  // lattice word
            if (c + 1 < fill[r].size() && fill[r][c + 1] != 0 && v > fill[r][c + 1]) continue;
            if (r > 0 && c < fill[r - 1].size()) {
                unsigned above = fill[r - 1][c];
                bool above_in_skew = c >= (r - 1 < mu.size() ? mu[r - 1] : 0);
                if (above_in_skew && v <= above) continue;  // column strict
            }
            fill[r][c] = v;
            ++count[v];
            if (self(self, idx + 1)) return true;
            --count[v];
            fill[r][c] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

FgAbGroup::FgAbGroup(unsigned long free_rank, std::vector<Int> torsion_moduli)
    : free_rank_(free_rank) {
    // Split every modulus into prime powers, then reassemble the divisor chain.
    std::map<Int, std::vector<unsigned>> primary;  // prime -> exponents
    for (const Int& d : torsion_moduli) {
        Int m = abs(d);
        if (m == 0) {
            ++free_rank_;
            continue;
        }
        if (m == 1) continue;
        for (const auto& [p, e] : factorize(m)) primary[p].push_back(e);
    }
    std::size_t chain_len = 0;
    for (auto& [p, exps] : primary) {
        std::sort(exps.begin(), exps.end());  // ascending
        chain_len = std::max(chain_len, exps.size());
    }
    factors_.assign(chain_len, Int(1));
    for (auto& [p, exps] : primary) {
        // Right-align so the largest exponents feed the largest factors.
        std::size_t offset = chain_len - exps.size();
        for (std::size_t i = 0; i < exps.size(); ++i) factors_[offset + i] *= pow_int(p, exps[i]);
    }
}

FgAbGroup FgAbGroup::cyclic(const Int& n) {
    if (n == 0) return free_group(1);
    return FgAbGroup(0, {n});
}

std::optional<Int> FgAbGroup::order() const {
    if (free_rank_ > 0) return std::nullopt;
    Int o = 1;
    for (const Int& d : factors_) o *= d;
    return o;
}

Int FgAbGroup::generator_order(std::size_t i) const {
    if (i < free_rank_) return 0;
    return factors_.at(i - free_rank_);
}

IntMatrix FgAbGroup::relation_matrix() const {
    std::size_t n = generator_count();
    IntMatrix rel(n, n);
    for (std::size_t i = free_rank_; i < n; ++i) rel(i, i) = factors_[i - free_rank_];
    return rel;
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& other) const {
    std::vector<Int> moduli = factors_;
    moduli.insert(moduli.end(), other.factors_.begin(), other.factors_.end());
    return FgAbGroup(free_rank_ + other.free_rank_, std::move(moduli));
}

bool FgAbGroup::operator<(const FgAbGroup& other) const {
    if (free_rank_ != other.free_rank_) return free_rank_ < other.free_rank_;
    return std::lexicographical_compare(factors_.begin(), factors_.end(),
                                        other.factors_.begin(), other.factors_.end(),
                                        [](const Int& a, const Int& b) { return cmp(a, b) < 0; });
}

std::string FgAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (unsigned long i = 0; i < free_rank_; ++i) {
        os << (first ? "" : "+") << "Z";
        first = false;
    }
    for (const Int& d : factors_) {
        os << (first ? "" : "+") << "Z/" << d;
        first = false;
    }
    return os.str();
}

FgAbGroup cokernel(const IntMatrix& m) {
    SmithDecomposition d = smith_normal_form(m);
    std::vector<Int> moduli;
    for (std::size_t t = 0; t < d.rank; ++t)
        if (d.diag(t, t) >= 2) moduli.push_back(d.diag(t, t));
    unsigned long rank = m.rows() - d.rank;
    return FgAbGroup(rank, std::move(moduli));
}

bool embeds(const FgAbGroup& a, const FgAbGroup& b) {
    if (!a.is_finite() || !b.is_finite())
        throw UnsupportedCaseError("embeds requires finite groups");
    for (const Int& p : prime_support(a)) {
        std::vector<unsigned> pa = primary_partition(a, p);
        std::vector<unsigned> pb = primary_partition(b, p);
        if (pa.size() > pb.size()) return false;
        for (std::size_t i = 0; i < pa.size(); ++i)
            if (pa[i] > pb[i]) return false;
    }
    return true;
}

std::vector<FgAbGroup> abelian_groups_of_order(const Int& n) {
    if (n <= 0) throw ContractError("abelian_groups_of_order needs n >= 1");
    std::vector<FgAbGroup> out{FgAbGroup::trivial()};
    for (const auto& [p, e] : factorize(n)) {
        std::vector<FgAbGroup> next;
        for (const auto& part : partitions_of(e))
            for (const FgAbGroup& g : out) {
                std::vector<Int> moduli = g.invariant_factors();
                for (unsigned x : part) moduli.push_back(pow_int(p, x));
                next.emplace_back(0, std::move(moduli));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FgAbGroup> extension_candidates(const FgAbGroup& k, const FgAbGroup& q) {
    if (!k.is_finite() || !q.is_finite())
        throw UnsupportedCaseError("extension_candidates requires finite groups");
    Int n = *k.order() * *q.order();
    std::vector<FgAbGroup> out;
    for (const FgAbGroup& g : abelian_groups_of_order(n)) {
        bool ok = true;
        for (const Int& p : prime_support(g)) {
            if (!lr_positive(primary_partition(g, p), primary_partition(k, p),
                             primary_partition(q, p))) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(g);
    }
    return out;  // already sorted
}

GroupHom::GroupHom(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != codomain_.generator_count() ||
        matrix_.cols() != domain_.generator_count())
        throw PresentationError("hom matrix shape does not match generator counts");
    // Reduce entries modulo the codomain relations first.
    for (std::size_t i = 0; i < matrix_.rows(); ++i) {
        Int e = codomain_.generator_order(i);
        if (e == 0) continue;
        for (std::size_t j = 0; j < matrix_.cols(); ++j) {
            Int r = matrix_(i, j) % e;
            if (r < 0) r += e;
            matrix_(i, j) = r;
        }
    }
    // A torsion generator of order d must land on a d-torsion element.
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
        Int d = domain_.generator_order(j);
        if (d == 0) continue;
        for (std::size_t i = 0; i < matrix_.rows(); ++i) {
            Int e = codomain_.generator_order(i);
            if (e == 0) {
                if (matrix_(i, j) != 0)
                    throw PresentationError(
                        "torsion generator mapped to infinite-order element");
            } else if ((d * matrix_(i, j)) % e != 0) {
                throw PresentationError("hom matrix incompatible with codomain relations");
            }
        }
    }
}

GroupHom GroupHom::zero(const FgAbGroup& domain, const FgAbGroup& codomain) {
    return GroupHom(domain, codomain,
                    IntMatrix(codomain.generator_count(), domain.generator_count()));
}

GroupHom GroupHom::identity(const FgAbGroup& g) {
    return GroupHom(g, g, IntMatrix::identity(g.generator_count()));
}

GroupHom GroupHom::cyclic_map(const FgAbGroup& domain, const FgAbGroup& codomain, long value) {
    if (domain.generator_count() != 1 || codomain.generator_count() != 1)
        throw ContractError("cyclic_map needs single-generator groups");
    IntMatrix m(1, 1);
    m(0, 0) = value;
    return GroupHom(domain, codomain, std::move(m));
}

GroupHom GroupHom::compose_after(const GroupHom& inner) const {
    if (!(inner.codomain_ == domain_))
        throw ContractError("composition: inner codomain differs from outer domain");
    return GroupHom(inner.domain_, codomain_, matrix_ * inner.matrix_);
}

namespace {

// Lattice of x with f(x) = 0 in the codomain, as generators in domain
// generator coordinates: x-projection of ker [M | R_C].
IntMatrix preimage_of_relations(const GroupHom& f) {
    const IntMatrix& m = f.matrix();
    IntMatrix rc = f.codomain().relation_matrix();
    std::size_t n = m.cols(), k = rc.cols();
    IntMatrix big(m.rows(), n + k);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) big(i, j) = m(i, j);
        for (std::size_t j = 0; j < k; ++j) big(i, n + j) = rc(i, j);
    }
    IntMatrix ker = kernel_lattice(big);
    IntMatrix proj(n, ker.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < ker.cols(); ++j) proj(i, j) = ker(i, j);
    return proj;
}

}  // namespace

IntMatrix zero_preimage_lattice(const GroupHom& f) { return preimage_of_relations(f); }

FgAbGroup GroupHom::kernel() const {
    IntMatrix lat = preimage_of_relations(*this);
    IntMatrix basis = lattice_basis(lat);
    // Kernel = (preimage lattice) / (domain relations); express the domain
    // relations in basis coordinates.
    IntMatrix rd = domain_.relation_matrix();
    IntMatrix coords(basis.cols(), rd.cols());
    for (std::size_t j = 0; j < rd.cols(); ++j) {
        std::vector<Int> sol;
        if (!solve_linear(basis, rd.column(j), sol))
            throw PresentationError("domain relation escapes the kernel lattice");
        for (std::size_t i = 0; i < basis.cols(); ++i) coords(i, j) = sol[i];
    }
    return fgab::cokernel(coords);
}

FgAbGroup GroupHom::image() const {
    // First isomorphism theorem: image = Z^n / (preimage of relations).
    return fgab::cokernel(preimage_of_relations(*this));
}

FgAbGroup GroupHom::cokernel() const {
    IntMatrix rc = codomain_.relation_matrix();
    std::size_t n = matrix_.cols(), k = rc.cols();
    IntMatrix big(matrix_.rows(), n + k);
    for (std::size_t i = 0; i < matrix_.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) big(i, j) = matrix_(i, j);
        for (std::size_t j = 0; j < k; ++j) big(i, n + j) = rc(i, j);
    }
    return fgab::cokernel(big);
}

bool GroupHom::operator==(const GroupHom& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ && matrix_ == other.matrix_;
}

std::string GroupHom::to_string() const {
    std::ostringstream os;
    os << domain_.to_string() << " -> " << codomain_.to_string() << " via "
       << matrix_.to_string();
    return os.str();
}

KernelImageCokernel kernel_image_cokernel(const GroupHom& f) {
    return {f.kernel(), f.image(), f.cokernel()};
}

std::pair<FgAbGroup, unsigned long> torsion_and_rank(const FgAbGroup& g) {
    return {g.torsion_subgroup(), g.free_rank()};
}

std::vector<GroupHom> enumerate_maps(const FgAbGroup& a, const FgAbGroup& b,
                                     const HomFlagsFilter& filter, long window) {
    if (a.free_rank() > 2 || b.free_rank() > 2)
        throw UnsupportedCaseError("enumerate_maps: rank bound exceeded");
    Int limit = 65536;
    if (*a.torsion_subgroup().order() > limit || *b.torsion_subgroup().order() > limit)
        throw UnsupportedCaseError("enumerate_maps: torsion bound exceeded");

    std::size_t n = a.generator_count(), m = b.generator_count();
    // Choice list per matrix entry.
    std::vector<std::vector<Int>> choices(n * m);
    double log_total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Int d = a.generator_order(j);
        for (std::size_t i = 0; i < m; ++i) {
            Int e = b.generator_order(i);
            std::vector<Int>& c = choices[j * m + i];
            if (d == 0 && e == 0) {
                for (long v = -window; v <= window; ++v) c.push_back(v);
            } else if (d == 0) {
                for (Int v = 0; v < e; ++v) c.push_back(v);
            } else if (e == 0) {
                c.push_back(0);
            } else {
                Int g;
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
                Int step = e / g;
                for (Int v = 0; v < e; v += step) c.push_back(v);
            }
            log_total += std::log2(c.size() ? (double)c.size() : 1.0);
            if (log_total > 24) throw UnsupportedCaseError("enumerate_maps: search space too large");
        }
    }

    std::vector<GroupHom> out;
    IntMatrix mat(m, n);
    bool needs_kic =
        filter.injective || filter.surjective || filter.kernel || filter.image;
    auto passes = [&](const GroupHom& h) {
        if (filter.zero && *filter.zero != h.is_zero()) return false;
        if (!needs_kic) return true;
        KernelImageCokernel kic = kernel_image_cokernel(h);
        if (filter.injective && *filter.injective != kic.kernel.is_trivial()) return false;
        if (filter.surjective && *filter.surjective != kic.cokernel.is_trivial()) return false;
        if (filter.kernel && !(*filter.kernel == kic.kernel)) return false;
        if (filter.image && !(*filter.image == kic.image)) return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == n * m) {
            GroupHom h(a, b, mat);
            if (passes(h)) out.push_back(std::move(h));
            return;
        }
        std::size_t j = idx / m, i = idx % m;
        for (const Int& v : choices[idx]) {
            mat(i, j) = v;
            self(self, idx + 1);
        }
        mat(i, j) = 0;
    };
    rec(rec, 0);
    return out;
}

std::vector<GroupHom> automorphisms(const FgAbGroup& g) {
    if (!g.is_finite()) throw UnsupportedCaseError("automorphisms: finite groups only");
    HomFlagsFilter f;
    f.injective = true;
    f.surjective = true;
    return enumerate_maps(g, g, f, 0);
}

std::vector<GroupHom> dedup_modulo_codomain_aut(const std::vector<GroupHom>& maps) {
    if (maps.empty()) return {};
    std::vector<GroupHom> auts = automorphisms(maps.front().codomain());
    std::vector<GroupHom> reps;
    std::set<std::string> seen;
    for (const GroupHom& f : maps) {
        if (seen.count(f.to_string())) continue;
        reps.push_back(f);
        for (const GroupHom& phi : auts) seen.insert(phi.compose_after(f).to_string());
    }
    return reps;
}

}  // namespace smithles::fgab
