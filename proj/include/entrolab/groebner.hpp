#pragma once

// Buchberger's algorithm with the normal selection strategy (smallest lcm
// degree first) and the product and chain criteria, plus normal forms and
// staircase enumeration for zero-dimensional leading-term ideals.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "entrolab/polynomial.hpp"

namespace entrolab {

// Reduced Groebner basis: monic elements, no term of any element divisible
// by the leading monomial of another, sorted descending by leading monomial.
// For a fixed ideal and order this representation is unique.
template <class K>
struct GroebnerBasis {
    std::vector<Polynomial<K>> elements;
    MonomialOrder order;

    bool represents_zero_ideal() const { return elements.empty(); }

    bool is_unit_ideal() const {
        return elements.size() == 1 && elements.front().leading_monomial().is_one();
    }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        out.reserve(elements.size());
        for (const auto& g : elements) out.push_back(g.leading_monomial());
        return out;
    }
};

// Full normal form: no term of the result is divisible by any leading
// monomial of the reducers. f - result lies in the ideal they generate.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f,
                          std::span<const Polynomial<K>> reducers) {
    Polynomial<K> h = f;
    Polynomial<K> r = Polynomial<K>::zero(f.nvars(), f.order());
    std::vector<typename Polynomial<K>::Term> kept;
    while (!h.is_zero()) {
        bool divided = false;
        for (const auto& g : reducers) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(h.leading_monomial())) {
                K c = h.leading_coeff() / g.leading_coeff();
                Monomial m = g.leading_monomial().quotient_of(h.leading_monomial());
                h = h.minus_scaled(c, m, g);
                divided = true;
                break;
            }
        }
        if (!divided) {
            kept.push_back(h.terms().front());
            h = h.tail();
        }
    }
    // kept is already strictly descending: each moved term was the leading one
    // and reduction only produces smaller terms.
    return Polynomial<K>::from_terms(f.nvars(), f.order(), std::move(kept));
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& basis) {
    return normal_form(f, std::span<const Polynomial<K>>(basis.elements));
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f,
                          const std::vector<Polynomial<K>>& reducers) {
    return normal_form(f, std::span<const Polynomial<K>>(reducers));
}

// S-polynomial, normalized so both leading terms cancel monically.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
    Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
    K one = one_like(f.leading_coeff());
    Polynomial<K> a =
        f.scaled(one / f.leading_coeff(), f.leading_monomial().quotient_of(L));
    Polynomial<K> b =
        g.scaled(one / g.leading_coeff(), g.leading_monomial().quotient_of(L));
    return a - b;
}

namespace detail {

struct PairKey {
    std::uint64_t lcm_degree;
    Monomial lcm;
    std::uint32_t i, j; // i < j
};

inline std::uint64_t pair_id(std::uint32_t i, std::uint32_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
}

template <class K>
void interreduce(std::vector<Polynomial<K>>& G) {
    // drop elements whose leading monomial another element's divides
    std::vector<Polynomial<K>> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mi = G[i].leading_monomial();
            const Monomial& mj = G[j].leading_monomial();
            if (mj.divides(mi) && !(mi == mj)) redundant = true;
            // equal leading monomials cannot occur: insertion always reduces
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    G = std::move(minimal);

    // fully reduce tails until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            std::vector<Polynomial<K>> others;
            others.reserve(G.size() - 1);
            for (std::size_t j = 0; j < G.size(); ++j)
                if (j != i) others.push_back(G[j]);
            Polynomial<K> r = normal_form(G[i], others).monic();
            if (!(r == G[i])) {
                G[i] = std::move(r);
                changed = true;
            }
        }
    }
}

} // namespace detail

template <class K>
GroebnerBasis<K> buchberger(std::vector<Polynomial<K>> gens,
                            const MonomialOrder& order) {
    std::vector<Polynomial<K>> G;

    auto key_less = [&order](const detail::PairKey& a, const detail::PairKey& b) {
        if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
        auto c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<detail::PairKey, decltype(key_less)> queue(key_less);
    std::unordered_set<std::uint64_t> pending;

    auto create_pairs_for = [&](std::uint32_t t) {
        for (std::uint32_t k = 0; k < t; ++k) {
            const Monomial& mk = G[k].leading_monomial();
            const Monomial& mt = G[t].leading_monomial();
            // S-polynomial of two monic monomials is identically zero
            if (G[k].is_monomial() && G[t].is_monomial()) continue;
            // product criterion
            if (mk.coprime_with(mt)) continue;
            Monomial L = lcm(mk, mt);
            queue.insert({L.degree(), L, k, t});
            pending.insert(detail::pair_id(k, t));
        }
    };

    auto insert_element = [&](const Polynomial<K>& h) {
        G.push_back(h.monic());
        create_pairs_for(static_cast<std::uint32_t>(G.size() - 1));
    };

    for (auto& g : gens) {
        if (g.is_zero()) continue;
        Polynomial<K> r = normal_form(g, G);
        if (!r.is_zero()) insert_element(r);
    }

    while (!queue.empty()) {
        detail::PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        pending.erase(detail::pair_id(pk.i, pk.j));

        // chain criterion: skip if some other element divides the lcm and both
        // pairs with it have already left the queue
        bool skip = false;
        for (std::uint32_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!G[k].leading_monomial().divides(pk.lcm)) continue;
            std::uint32_t a1 = std::min(k, pk.i), b1 = std::max(k, pk.i);
            std::uint32_t a2 = std::min(k, pk.j), b2 = std::max(k, pk.j);
            if (!pending.contains(detail::pair_id(a1, b1)) &&
                !pending.contains(detail::pair_id(a2, b2)))
                skip = true;
        }
        if (skip) continue;

        Polynomial<K> r = normal_form(s_polynomial(G[pk.i], G[pk.j]), G);
        if (!r.is_zero()) insert_element(r);
    }

    detail::interreduce(G);
    std::sort(G.begin(), G.end(),
              [&order](const Polynomial<K>& a, const Polynomial<K>& b) {
                  return order.compare(a.leading_monomial(),
                                       b.leading_monomial()) > 0;
              });
    return GroebnerBasis<K>{std::move(G), order};
}

// Generators plus a lazily computed, cached reduced basis. Concurrent reads
// of a filled cache are safe; the first fill must be externally serialized
// (recomputation would yield the identical canonical basis either way).
template <class K>
class Ideal {
public:
    Ideal(std::vector<Polynomial<K>> generators, MonomialOrder order)
        : order_(std::move(order)) {
        for (auto& g : generators)
            if (!g.is_zero()) gens_.push_back(std::move(g));
    }

    const std::vector<Polynomial<K>>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }

    const GroebnerBasis<K>& groebner() const {
        if (!basis_) basis_ = buchberger(gens_, order_);
        return *basis_;
    }

    bool contains(const Polynomial<K>& f) const {
        return normal_form(f, groebner()).is_zero();
    }

private:
    std::vector<Polynomial<K>> gens_;
    MonomialOrder order_;
    mutable std::optional<GroebnerBasis<K>> basis_;
};

// ---- staircase enumeration ------------------------------------------------

struct StandardMonomials {
    bool finite = false;
    std::vector<Monomial> monomials; // empty when infinite
};

inline constexpr std::uint64_t kDefaultMonomialCap = 2'000'000;

namespace detail {

// Walks the complement of the leading-term staircase. `emit` is called with
// each standard monomial when materializing, or with a count when null.
template <class Emit>
std::optional<std::uint64_t> walk_staircase(const std::vector<Monomial>& lms,
                                            std::size_t nvars,
                                            std::uint64_t cap, Emit&& emit,
                                            bool materialize) {
    // pure-power bounds; absence of one means infinitely many standard monomials
    std::vector<std::uint32_t> bound(nvars, 0);
    std::vector<bool> bounded(nvars, false);
    for (const auto& m : lms) {
        std::size_t nonzero = SIZE_MAX;
        bool pure = true;
        for (std::size_t i = 0; i < nvars; ++i) {
            if (m[i] > 0) {
                if (nonzero != SIZE_MAX) { pure = false; break; }
                nonzero = i;
            }
        }
        if (pure && nonzero != SIZE_MAX) {
            if (!bounded[nonzero] || m[nonzero] < bound[nonzero]) {
                bounded[nonzero] = true;
                bound[nonzero] = m[nonzero];
            }
        }
    }
    for (std::size_t i = 0; i < nvars; ++i)
        if (!bounded[i]) return std::nullopt;

    std::uint64_t count = 0;
    Monomial work(nvars);
    auto bump = [&](std::uint64_t add) {
        count += add;
        if (count > cap)
            throw capacity_error("standard monomial count exceeds cap", cap);
    };

    auto rec = [&](auto&& self, std::size_t depth,
                   const std::vector<const Monomial*>& compat) -> void {
        if (nvars == 0) return;
        if (depth + 1 == nvars) {
            // the largest exponent the staircase admits in the last variable
            std::uint32_t b = bound[depth];
            for (const Monomial* m : compat)
                b = std::min(b, (*m)[depth]);
            bump(b);
            if (materialize)
                for (std::uint32_t e = 0; e < b; ++e) {
                    work[depth] = e;
                    emit(work);
                }
            work[depth] = 0;
            return;
        }
        for (std::uint32_t e = 0; e < bound[depth]; ++e) {
            work[depth] = e;
            std::vector<const Monomial*> next;
            bool dead = false;
            for (const Monomial* m : compat) {
                if ((*m)[depth] <= e) {
                    bool trailing_one = true;
                    for (std::size_t j = depth + 1; j < nvars; ++j)
                        if ((*m)[j] > 0) { trailing_one = false; break; }
                    if (trailing_one) { dead = true; break; } // divides every extension
                    next.push_back(m);
                }
            }
            if (!dead) self(self, depth + 1, next);
        }
        work[depth] = 0;
    };

    std::vector<const Monomial*> all;
    all.reserve(lms.size());
    for (const auto& m : lms) all.push_back(&m);
    if (nvars == 0) {
        bump(1);
        if (materialize) emit(Monomial(std::size_t{0}));
    } else {
        rec(rec, 0, all);
    }
    return count;
}

} // namespace detail

// All monomials outside the leading-term ideal of a reduced basis; these form
// a field basis of the quotient. Infinite unless every variable has a pure
// power among the leading monomials.
template <class K>
StandardMonomials standard_monomials(const GroebnerBasis<K>& basis,
                                     std::size_t nvars,
                                     std::uint64_t cap = kDefaultMonomialCap) {
    StandardMonomials out;
    if (basis.is_unit_ideal()) {
        out.finite = true;
        return out;
    }
    if (basis.represents_zero_ideal() && nvars > 0) return out; // infinite
    std::vector<Monomial> lms = basis.leading_monomials();
    std::vector<Monomial> collected;
    auto counted = detail::walk_staircase(
        lms, nvars, cap, [&](const Monomial& m) { collected.push_back(m); },
        true);
    if (!counted) return out; // infinite
    out.finite = true;
    out.monomials = std::move(collected);
    return out;
}

// Vector-space dimension of the quotient by the ideal, or nullopt when it is
// infinite. Counting only; never materializes the staircase.
template <class K>
std::optional<std::uint64_t> colength(const GroebnerBasis<K>& basis,
                                      std::size_t nvars,
                                      std::uint64_t cap = kDefaultMonomialCap) {
    if (basis.is_unit_ideal()) return 0;
    if (basis.represents_zero_ideal() && nvars > 0) return std::nullopt;
    std::vector<Monomial> lms = basis.leading_monomials();
    return detail::walk_staircase(lms, nvars, cap, [](const Monomial&) {}, false);
}

template <class K>
std::optional<std::uint64_t> colength(const Ideal<K>& ideal,
                                      std::size_t nvars,
                                      std::uint64_t cap = kDefaultMonomialCap) {
    return colength(ideal.groebner(), nvars, cap);
}

} // namespace entrolab
