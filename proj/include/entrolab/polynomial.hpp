#pragma once

// Exact multivariate polynomials in canonical form: term lists sorted
// strictly descending under the ambient order, no zero coefficients, the
// empty list is 0. Two polynomials are equal iff their term lists are.

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "entrolab/fields.hpp"
#include "entrolab/monomial.hpp"

namespace entrolab {

template <class K>
class Polynomial {
public:
    struct Term {
        Monomial mono;
        K coeff;
    };

    Polynomial(std::size_t nvars, MonomialOrder order)
        : nvars_(nvars), order_(std::move(order)) {
        if (order_.nvars() != nvars_)
            throw structural_error("order arity does not match variable count");
    }

    static Polynomial zero(std::size_t nvars, const MonomialOrder& order) {
        return Polynomial(nvars, order);
    }

    static Polynomial constant(std::size_t nvars, const MonomialOrder& order,
                               const K& c) {
        Polynomial r(nvars, order);
        if (!entrolab::is_zero(c)) r.terms_.push_back({Monomial(nvars), c});
        return r;
    }

    static Polynomial monomial(std::size_t nvars, const MonomialOrder& order,
                               Monomial m, const K& c) {
        Polynomial r(nvars, order);
        if (!entrolab::is_zero(c)) r.terms_.push_back({std::move(m), c});
        return r;
    }

    static Polynomial variable(std::size_t nvars, const MonomialOrder& order,
                               std::size_t index, const K& one) {
        Monomial m(nvars);
        m[index] = 1;
        return monomial(nvars, order, std::move(m), one);
    }

    // Normalizing constructor: sorts, merges duplicate monomials, drops zeros.
    static Polynomial from_terms(std::size_t nvars, const MonomialOrder& order,
                                 std::vector<Term> terms) {
        Polynomial r(nvars, order);
        for (const auto& t : terms)
            if (t.mono.nvars() != nvars)
                throw structural_error("term arity does not match variable count");
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return order.compare(a.mono, b.mono) > 0;
        });
        for (auto& t : terms) {
            if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
                r.terms_.back().coeff = r.terms_.back().coeff + t.coeff;
                if (entrolab::is_zero(r.terms_.back().coeff)) r.terms_.pop_back();
            } else if (!entrolab::is_zero(t.coeff)) {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    std::size_t nvars() const { return nvars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const K& leading_coeff() const { return terms_.front().coeff; }

    bool is_monomial() const { return terms_.size() == 1; }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    // Coefficient of the constant monomial (zero of the field if absent).
    bool has_constant_term() const {
        return !terms_.empty() && terms_.back().mono.is_one();
    }

    Polynomial tail() const {
        Polynomial r(nvars_, order_);
        r.terms_.assign(terms_.begin() + 1, terms_.end());
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(nvars_, order_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, false);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, true);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        std::vector<Term> prods;
        prods.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                prods.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
        return from_terms(a.nvars_, a.order_, std::move(prods));
    }

    Polynomial scaled(const K& c, const Monomial& m) const {
        Polynomial r(nvars_, order_);
        if (entrolab::is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
        return r;
    }

    Polynomial scaled(const K& c) const {
        return scaled(c, Monomial(nvars_));
    }

    // this - c * (m * g), the S-polynomial / reduction workhorse.
    Polynomial minus_scaled(const K& c, const Monomial& m,
                            const Polynomial& g) const {
        return merge(*this, g.scaled(c, m), true);
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        K inv = one_like(leading_coeff()) / leading_coeff();
        return scaled(inv);
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_ || !(a.order_ == b.order_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) ||
                !(a.terms_[i].coeff == b.terms_[i].coeff))
                return false;
        return true;
    }

private:
    void check_compatible(const Polynomial& o) const {
        if (nvars_ != o.nvars_)
            throw structural_error("polynomials over different variable counts");
        if (!(order_ == o.order_))
            throw structural_error("polynomials under different monomial orders");
    }

    static Polynomial merge(const Polynomial& a, const Polynomial& b,
                            bool subtract) {
        a.check_compatible(b);
        Polynomial r(a.nvars_, a.order_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            auto cmp = a.order_.compare(a.terms_[i].mono, b.terms_[j].mono);
            if (cmp > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                const auto& t = b.terms_[j++];
                r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
            } else {
                K c = subtract ? K(a.terms_[i].coeff - b.terms_[j].coeff)
                               : K(a.terms_[i].coeff + b.terms_[j].coeff);
                if (!entrolab::is_zero(c)) r.terms_.push_back({a.terms_[i].mono, c});
                ++i; ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            const auto& t = b.terms_[j];
            r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
        }
        return r;
    }

    std::size_t nvars_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

// f with each variable x_i replaced by images[i], fully expanded. This is a
// ring homomorphism, which is what lets it carry phi and phi^n around.
template <class K>
Polynomial<K> substitute(const Polynomial<K>& f,
                         std::span<const Polynomial<K>> images) {
    if (images.size() != f.nvars())
        throw structural_error("substitution needs one image per variable");
    if (f.is_zero()) return f;
    for (const auto& g : images)
        if (g.nvars() != images[0].nvars() || !(g.order() == images[0].order()))
            throw structural_error("substitution images disagree on arity or order");

    const std::size_t out_nvars = images.empty() ? f.nvars() : images[0].nvars();
    const MonomialOrder& out_order = images.empty() ? f.order() : images[0].order();

    // lazily grown power tables, pows[i][e] = images[i]^e
    std::vector<std::vector<Polynomial<K>>> pows(images.size());
    K one = one_like(f.leading_coeff());
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial<K>& {
        auto& tab = pows[i];
        if (tab.empty())
            tab.push_back(Polynomial<K>::constant(out_nvars, out_order, one));
        while (tab.size() <= e) tab.push_back(tab.back() * images[i]);
        return tab[e];
    };

    Polynomial<K> acc = Polynomial<K>::zero(out_nvars, out_order);
    for (const auto& t : f.terms()) {
        Polynomial<K> prod =
            Polynomial<K>::constant(out_nvars, out_order, t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (t.mono[i] > 0) prod = prod * power(i, t.mono[i]);
        acc = acc + prod;
    }
    return acc;
}

template <class K>
Polynomial<K> substitute(const Polynomial<K>& f,
                         const std::vector<Polynomial<K>>& images) {
    return substitute(f, std::span<const Polynomial<K>>(images));
}

} // namespace entrolab
