#pragma once

// Dense exponent vectors and the two supported term orders. Exponents are
// dense because the target examples live in <= 4 variables.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "entrolab/errors.hpp"

namespace entrolab {

class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents)
        : e_(std::move(exponents)) {}

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint64_t degree() const {
        return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
    }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        a.check(b);
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }

    // componentwise <=
    bool divides(const Monomial& other) const {
        check(other);
        for (std::size_t i = 0; i < nvars(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    // other / this; caller guarantees divisibility
    Monomial quotient_of(const Monomial& other) const {
        check(other);
        Monomial r(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) r.e_[i] = other.e_[i] - e_[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check(b);
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i)
            r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }

    bool coprime_with(const Monomial& b) const {
        check(b);
        for (std::size_t i = 0; i < nvars(); ++i)
            if (e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.e_ == b.e_;
    }

private:
    void check(const Monomial& o) const {
        if (nvars() != o.nvars())
            throw structural_error("monomials over different variable counts");
    }

    std::vector<std::uint32_t> e_;
};

// Total multiplicative order on monomials. `precedence[0]` is the most
// significant variable index. degrevlex is degree-compatible; lex is not.
class MonomialOrder {
public:
    enum class Kind { degrevlex, lex };

    static MonomialOrder degrevlex(std::size_t nvars) {
        return MonomialOrder(Kind::degrevlex, identity(nvars));
    }
    static MonomialOrder lex(std::size_t nvars) {
        return MonomialOrder(Kind::lex, identity(nvars));
    }

    MonomialOrder(Kind kind, std::vector<std::uint32_t> precedence)
        : kind_(kind), prec_(std::move(precedence)) {
        std::vector<bool> seen(prec_.size(), false);
        for (auto i : prec_) {
            if (i >= prec_.size() || seen[i])
                throw structural_error("variable precedence is not a permutation");
            seen[i] = true;
        }
    }

    Kind kind() const { return kind_; }
    std::size_t nvars() const { return prec_.size(); }
    const std::vector<std::uint32_t>& precedence() const { return prec_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (kind_ == Kind::degrevlex) {
            auto da = a.degree(), db = b.degree();
            if (da != db) return da <=> db;
            // reverse lex on the least significant end: the monomial with the
            // smaller exponent in the last differing position is larger.
            for (std::size_t k = prec_.size(); k-- > 0;) {
                std::uint32_t i = prec_[k];
                if (a[i] != b[i]) return b[i] <=> a[i];
            }
            return std::strong_ordering::equal;
        }
        for (std::size_t k = 0; k < prec_.size(); ++k) {
            std::uint32_t i = prec_[k];
            if (a[i] != b[i]) return a[i] <=> b[i];
        }
        return std::strong_ordering::equal;
    }

    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) < 0;
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.prec_ == b.prec_;
    }

private:
    static std::vector<std::uint32_t> identity(std::size_t n) {
        std::vector<std::uint32_t> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>(i);
        return v;
    }

    Kind kind_;
    std::vector<std::uint32_t> prec_;
};

// All monomials of total degree exactly d, in deterministic order (the first
// variable's exponent descending). Used to spell out powers of the maximal
// ideal.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars,
                                                 std::uint32_t d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(std::size_t{0});
        return out;
    }
    Monomial work(nvars);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t remaining) -> void {
        if (i + 1 == nvars) {
            work[i] = remaining;
            out.push_back(work);
            return;
        }
        for (std::uint32_t e = remaining + 1; e-- > 0;) {
            work[i] = e;
            self(self, i + 1, remaining - e);
        }
        work[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

} // namespace entrolab
