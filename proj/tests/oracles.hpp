#pragma once

// Test-only brute-force oracles, independent of the library's algebraic
// routines: groups are realized as explicit tuple groups and everything is
// decided by enumeration.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "smithles/fgab.hpp"

namespace oracles {

using smithles::fgab::FgAbGroup;
using smithles::fgab::Int;

// Product of cyclic groups with explicit element tuples. Small orders only.
class ExplicitGroup {
public:
    explicit ExplicitGroup(std::vector<long> moduli) : moduli_(std::move(moduli)) {
        elements_.push_back(std::vector<long>(moduli_.size(), 0));
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
            std::vector<std::vector<long>> next;
            for (const auto& e : elements_)
                for (long v = 0; v < moduli_[i]; ++v) {
                    auto e2 = e;
                    e2[i] = v;
                    next.push_back(e2);
                }
            elements_ = next;
        }
        std::sort(elements_.begin(), elements_.end());
    }

    static ExplicitGroup from(const FgAbGroup& g) {
        std::vector<long> moduli;
        for (const Int& d : g.invariant_factors()) moduli.push_back(d.get_si());
        return ExplicitGroup(std::move(moduli));
    }

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::vector<long>>& elements() const { return elements_; }

    std::vector<long> add(const std::vector<long>& a, const std::vector<long>& b) const {
        std::vector<long> c(moduli_.size());
        for (std::size_t i = 0; i < moduli_.size(); ++i) c[i] = (a[i] + b[i]) % moduli_[i];
        return c;
    }
    std::vector<long> scale(long n, const std::vector<long>& a) const {
        std::vector<long> c(moduli_.size());
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
            long v = (n % moduli_[i]) * a[i] % moduli_[i];
            c[i] = v < 0 ? v + moduli_[i] : v;
        }
        return c;
    }
    long element_order(const std::vector<long>& a) const {
        long n = 1;
        auto cur = a;
        while (!std::all_of(cur.begin(), cur.end(), [](long v) { return v == 0; })) {
            cur = add(cur, a);
            ++n;
        }
        return n;
    }

    std::set<std::vector<long>> span(const std::vector<std::vector<long>>& gens) const {
        std::set<std::vector<long>> sub{std::vector<long>(moduli_.size(), 0)};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<long>> frontier(sub.begin(), sub.end());
            for (const auto& x : frontier)
                for (const auto& g : gens) {
                    auto y = add(x, g);
                    if (sub.insert(y).second) grew = true;
                }
        }
        return sub;
    }

    // Recover the isomorphism type of a subset that forms a subgroup, by
    // counting solutions of p^j x = 0 within it.
    FgAbGroup subgroup_type(const std::set<std::vector<long>>& sub) const {
        long n = (long)sub.size();
        std::vector<Int> moduli;
        for (long p = 2; p <= n; ++p) {
            if (n % p != 0) continue;
            bool prime = true;
            for (long q = 2; q * q <= p; ++q)
                if (p % q == 0) prime = false;
            if (!prime) continue;
            // counts[j] = #{x in sub : p^j x = 0}
            std::vector<long> exps;
            long prev_count = 1;
            long pj = p;
            while (true) {
                long count = 0;
                for (const auto& x : sub) {
                    auto y = scale(pj, x);
                    if (std::all_of(y.begin(), y.end(), [](long v) { return v == 0; })) ++count;
                }
                if (count == prev_count) break;
                // count/prev_count = p^{#parts >= j}
                long ratio = count / prev_count;
                long parts = 0;
                while (ratio > 1) {
                    ratio /= p;
                    ++parts;
                }
                exps.push_back(parts);
                prev_count = count;
                pj *= p;
            }
            // exps[j-1] = number of parts >= j: conjugate back to the partition.
            std::vector<long> partition;
            for (std::size_t j = 0; j < exps.size(); ++j)
                for (long i = 0; i < exps[j] - (j + 1 < exps.size() ? exps[j + 1] : 0); ++i)
                    partition.push_back((long)j + 1);
            for (long e : partition) {
                Int m = 1;
                for (long i = 0; i < e; ++i) m *= p;
                moduli.push_back(m);
            }
        }
        return FgAbGroup(0, moduli);
    }

    const std::vector<long>& moduli() const { return moduli_; }

private:
    std::vector<long> moduli_;
    std::vector<std::vector<long>> elements_;
};

// Does a embed in b? Decided by enumerating generator images.
inline bool embeds_brute_force(const FgAbGroup& a, const FgAbGroup& b) {
    ExplicitGroup ga = ExplicitGroup::from(a);
    ExplicitGroup gb = ExplicitGroup::from(b);
    std::size_t k = ga.moduli().size();
    if (k == 0) return true;
    std::vector<std::size_t> pick(k, 0);
    while (true) {
        std::vector<std::vector<long>> gens;
        for (std::size_t i = 0; i < k; ++i) gens.push_back(gb.elements()[pick[i]]);
        bool orders_ok = true;
        for (std::size_t i = 0; i < k; ++i) {
            long d = ga.moduli()[i];
            auto y = gb.scale(d, gens[i]);
            if (!std::all_of(y.begin(), y.end(), [](long v) { return v == 0; })) orders_ok = false;
        }
        if (orders_ok) {
            // Injective iff the image subgroup has full size; the map is a
            // hom by the order check, so test |span| == |a| and that all
            // elements of a map distinctly: for abelian groups span size
            // equals |a| iff injective when a maps onto its span.
            auto sub = gb.span(gens);
            if (sub.size() == ga.size()) {
                // Verify injectivity element by element.
                std::set<std::vector<long>> images;
                bool inj = true;
                for (const auto& x : ga.elements()) {
                    std::vector<long> y(gb.moduli().size(), 0);
                    for (std::size_t i = 0; i < k; ++i) y = gb.add(y, gb.scale(x[i], gens[i]));
                    if (!images.insert(y).second) {
                        inj = false;
                        break;
                    }
                }
                if (inj) return true;
            }
        }
        std::size_t i = 0;
        while (i < k && ++pick[i] == gb.size()) pick[i++] = 0;
        if (i == k) return false;
    }
}

// All iso classes G of order |k|*|q| admitting 0 -> k -> G -> q -> 0,
// by enumerating subgroups of each candidate G.
inline std::vector<FgAbGroup> extensions_brute_force(const FgAbGroup& k, const FgAbGroup& q) {
    std::vector<FgAbGroup> out;
    Int n = *k.order() * *q.order();
    for (const FgAbGroup& g : smithles::fgab::abelian_groups_of_order(n)) {
        ExplicitGroup gg = ExplicitGroup::from(g);
        std::size_t ngen = std::max<std::size_t>(k.invariant_factors().size(), 1);
        std::vector<std::size_t> pick(ngen, 0);
        bool found = false;
        while (!found) {
            std::vector<std::vector<long>> gens;
            for (std::size_t i = 0; i < ngen; ++i) gens.push_back(gg.elements()[pick[i]]);
            auto sub = gg.span(gens);
            if ((Int)(long)sub.size() == *k.order() && gg.subgroup_type(sub) == k) {
                // Quotient type via coset order counts.
                std::map<std::vector<long>, int> coset_of;
                // order of x+H = least m with m*x in H
                std::set<std::vector<long>> subset(sub.begin(), sub.end());
                long qsize = (long)(gg.size() / sub.size());
                // count solutions of m(x+H)=0 per m: #{x : m x in H} / |H|
                std::vector<Int> moduli;
                for (long p = 2; p <= qsize; ++p) {
                    if (qsize % p != 0) continue;
                    bool prime = true;
                    for (long r = 2; r * r <= p; ++r)
                        if (p % r == 0) prime = false;
                    if (!prime) continue;
                    std::vector<long> exps;
                    long prev = 1;
                    long pj = p;
                    while (true) {
                        long cnt = 0;
                        for (const auto& x : gg.elements()) {
                            auto y = gg.scale(pj, x);
                            if (subset.count(y)) ++cnt;
                        }
                        long cosets = cnt / (long)sub.size();
                        if (cosets == prev) break;
                        long ratio = cosets / prev, parts = 0;
                        while (ratio > 1) {
                            ratio /= p;
                            ++parts;
                        }
                        exps.push_back(parts);
                        prev = cosets;
                        pj *= p;
                    }
                    std::vector<long> partition;
                    for (std::size_t j = 0; j < exps.size(); ++j)
                        for (long i = 0; i < exps[j] - (j + 1 < exps.size() ? exps[j + 1] : 0); ++i)
                            partition.push_back((long)j + 1);
                    for (long e : partition) {
                        Int m = 1;
                        for (long i = 0; i < e; ++i) m *= p;
                        moduli.push_back(m);
                    }
                }
                if (FgAbGroup(0, moduli) == q) found = true;
            }
            std::size_t i = 0;
            while (i < ngen && ++pick[i] == gg.size()) pick[i++] = 0;
            if (i == ngen) break;
        }
        if (found) out.push_back(g);
    }
    return out;
}

}  // namespace oracles
