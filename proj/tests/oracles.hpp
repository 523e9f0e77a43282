#pragma once

// Test-only oracles. Everything here recomputes answers along a different
// path than the library: lengths by sparse row echelon on truncated Macaulay
// spans (no Buchberger, no staircase walker), staircase counts by dumb box
// enumeration, substitution by direct term-by-term expansion, and reduction
// by anywhere-in-the-polynomial rewriting. Shared with the library are only
// the primitive carriers (Monomial, scalars).

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "entrolab/dynamics.hpp"
#include "entrolab/local_ring.hpp"

namespace oracle {

using entrolab::BigInt;
using entrolab::Monomial;
using entrolab::MonomialOrder;
using entrolab::Polynomial;

struct OrdLess {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return ord->less(a, b);
    }
};

template <class K>
using MapPoly = std::map<Monomial, K, OrdLess>;

template <class K>
MapPoly<K> make_map(const MonomialOrder& ord) {
    return MapPoly<K>(OrdLess{&ord});
}

template <class K>
void map_add_term(MapPoly<K>& p, const Monomial& m, const K& c) {
    if (entrolab::is_zero(c)) return;
    auto it = p.find(m);
    if (it == p.end()) {
        p.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (entrolab::is_zero(it->second)) p.erase(it);
    }
}

template <class K>
MapPoly<K> to_map(const Polynomial<K>& f) {
    auto r = make_map<K>(f.order());
    for (const auto& t : f.terms()) map_add_term(r, t.mono, t.coeff);
    return r;
}

template <class K>
bool map_equals_poly(const MapPoly<K>& m, const Polynomial<K>& f) {
    if (m.size() != f.term_count()) return false;
    for (const auto& t : f.terms()) {
        auto it = m.find(t.mono);
        if (it == m.end() || !(it->second == t.coeff)) return false;
    }
    return true;
}

template <class K>
MapPoly<K> map_mul(const MapPoly<K>& a, const MapPoly<K>& b,
                   const MonomialOrder& ord) {
    auto r = make_map<K>(ord);
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) map_add_term(r, ma * mb, K(ca * cb));
    return r;
}

// p - c * (m * g)
template <class K>
void map_sub_scaled(MapPoly<K>& p, const K& c, const Monomial& m,
                    const MapPoly<K>& g) {
    for (const auto& [mg, cg] : g) map_add_term(p, m * mg, K(-(c * cg)));
}

template <class K>
MapPoly<K> truncate_below(const MapPoly<K>& p, std::uint32_t N,
                          const MonomialOrder& ord) {
    auto r = make_map<K>(ord);
    for (const auto& [m, c] : p)
        if (m.degree() < N) r.emplace(m, c);
    return r;
}

inline std::uint64_t count_monomials_below(std::size_t nvars, std::uint32_t N) {
    // C(N - 1 + nvars, nvars)
    BigInt r = entrolab::binomial(N - 1 + nvars, nvars);
    return r.convert_to<std::uint64_t>();
}

// dim_k k[x]/(gens + m^N) by row echelon over the monomial basis of degree
// < N: the ideal's image is spanned by the truncations of m * g over all
// monomials m of degree < N.
template <class K>
std::uint64_t macaulay_colength(const std::vector<Polynomial<K>>& gens,
                                std::size_t nvars, const MonomialOrder& ord,
                                std::uint32_t N) {
    std::map<Monomial, MapPoly<K>, OrdLess> pivots{OrdLess{&ord}};

    auto reduce_insert = [&](MapPoly<K> row) {
        while (!row.empty()) {
            const Monomial lead = row.rbegin()->first;
            K lc = row.rbegin()->second;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                // normalize to monic and store
                K inv = entrolab::one_like(lc) / lc;
                auto monic = make_map<K>(ord);
                for (const auto& [m, c] : row) monic.emplace(m, K(c * inv));
                pivots.emplace(lead, std::move(monic));
                return;
            }
            map_sub_scaled(row, lc, Monomial(nvars), it->second);
        }
    };

    std::vector<Monomial> multipliers;
    for (std::uint32_t d = 0; d < N; ++d)
        for (auto& m : entrolab::monomials_of_degree(nvars, d))
            multipliers.push_back(std::move(m));

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        MapPoly<K> gm = to_map(g);
        for (const auto& m : multipliers) {
            auto row = make_map<K>(ord);
            for (const auto& [mg, c] : gm) {
                Monomial prod = m * mg;
                if (prod.degree() < N) row.emplace(std::move(prod), c);
            }
            if (!row.empty()) reduce_insert(std::move(row));
        }
    }
    return count_monomials_below(nvars, N) - pivots.size();
}

// Local length by the same ladder rule as the library but with the Macaulay
// rank backend. Returns nullopt when no stabilization below the cap.
template <class K>
std::optional<std::uint64_t> local_length(
    const std::vector<Polynomial<K>>& relations,
    const std::vector<Polynomial<K>>& J, std::size_t nvars,
    const MonomialOrder& ord, std::uint32_t cap = 512) {
    std::vector<Polynomial<K>> gens = relations;
    gens.insert(gens.end(), J.begin(), J.end());

    std::uint64_t max_deg = 0;
    for (const auto& g : J)
        if (!g.is_zero()) max_deg = std::max(max_deg, g.total_degree());
    std::uint32_t N = std::max<std::uint32_t>(2, static_cast<std::uint32_t>(max_deg));

    std::optional<std::uint64_t> prev;
    for (; N <= cap; ++N) {
        std::uint64_t L = macaulay_colength(gens, nvars, ord, N);
        if (prev && *prev == L) return L;
        prev = L;
    }
    return std::nullopt;
}

// Staircase count for a monomial ideal given by exponent vectors; no Groebner
// machinery at all. Returns nullopt when some variable has no pure power (the
// quotient is then infinite-dimensional).
inline std::optional<std::uint64_t> staircase_count(
    const std::vector<Monomial>& gens, std::size_t nvars) {
    std::vector<std::uint32_t> bound(nvars, 0);
    std::vector<bool> bounded(nvars, false);
    for (const auto& g : gens) {
        std::size_t nz = SIZE_MAX;
        bool pure = true;
        for (std::size_t i = 0; i < nvars; ++i)
            if (g[i] > 0) {
                if (nz != SIZE_MAX) { pure = false; break; }
                nz = i;
            }
        if (pure && nz != SIZE_MAX && (!bounded[nz] || g[nz] < bound[nz])) {
            bounded[nz] = true;
            bound[nz] = g[nz];
        }
    }
    for (std::size_t i = 0; i < nvars; ++i)
        if (!bounded[i]) return std::nullopt;

    std::uint64_t count = 0;
    Monomial work(nvars);
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == nvars) {
            for (const auto& g : gens)
                if (g.divides(work)) return;
            ++count;
            return;
        }
        for (std::uint32_t e = 0; e < bound[depth]; ++e) {
            work[depth] = e;
            self(self, depth + 1);
        }
        work[depth] = 0;
    };
    rec(rec, 0);
    return count;
}

// Direct expansion of f(images) with its own multiplication.
template <class K>
MapPoly<K> naive_substitute(const Polynomial<K>& f,
                            const std::vector<Polynomial<K>>& images) {
    const MonomialOrder& ord = images.empty() ? f.order() : images[0].order();
    std::size_t out_nvars = images.empty() ? f.nvars() : images[0].nvars();
    auto acc = make_map<K>(ord);
    for (const auto& t : f.terms()) {
        auto prod = make_map<K>(ord);
        prod.emplace(Monomial(out_nvars), t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i) {
            MapPoly<K> img = to_map(images[i]);
            for (std::uint32_t e = 0; e < t.mono[i]; ++e)
                prod = map_mul(prod, img, ord);
        }
        for (const auto& [m, c] : prod) map_add_term(acc, m, c);
    }
    return acc;
}

// S-polynomial on map representations.
template <class K>
MapPoly<K> naive_spoly(const Polynomial<K>& f, const Polynomial<K>& g,
                       const MonomialOrder& ord) {
    MapPoly<K> fm = to_map(f), gm = to_map(g);
    const Monomial& lf = fm.rbegin()->first;
    const Monomial& lg = gm.rbegin()->first;
    Monomial L = lcm(lf, lg);
    K one = entrolab::one_like(fm.rbegin()->second);
    auto r = make_map<K>(ord);
    K cf = one / fm.rbegin()->second;
    K cg = one / gm.rbegin()->second;
    for (const auto& [m, c] : fm) map_add_term(r, lf.quotient_of(L) * m, K(c * cf));
    for (const auto& [m, c] : gm)
        map_add_term(r, lg.quotient_of(L) * m, K(-(c * cg)));
    return r;
}

// Rewrites ANY divisible term (not just the leading one) until none is left.
// Used to confirm Buchberger outputs independently of the library reducer.
template <class K>
MapPoly<K> naive_reduce(MapPoly<K> h, const std::vector<Polynomial<K>>& basis,
                        const MonomialOrder& ord) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [m, c] : h) {
            for (const auto& b : basis) {
                if (b.is_zero()) continue;
                if (b.leading_monomial().divides(m)) {
                    K q = c / b.leading_coeff();
                    map_sub_scaled(h, q, b.leading_monomial().quotient_of(m),
                                   to_map(b));
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    (void)ord;
    return h;
}

template <class K>
MapPoly<K> naive_reduce(const Polynomial<K>& f,
                        const std::vector<Polynomial<K>>& basis) {
    return naive_reduce(to_map(f), basis, f.order());
}

} // namespace oracle
