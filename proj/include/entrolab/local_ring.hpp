#pragma once

// R = (k[x_1..x_n]/I) localized at the origin. All lengths are computed with
// the m^N truncation trick: L_N = colength(I + J + m^N) is nondecreasing in N,
// and once L_N = L_{N+1} we have m^N <= I + J + m^{N+1}, so by Nakayama
// m^N lies in I + J locally; the truncated quotient is then supported at the
// origin only and L_N is the exact local length.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "entrolab/groebner.hpp"

namespace entrolab {

template <class K>
K field_one(const FieldSpec& spec);

template <>
inline Fp field_one<Fp>(const FieldSpec& spec) {
    return Fp(1, spec.characteristic());
}
template <>
inline Rat field_one<Rat>(const FieldSpec&) {
    return Rat(1);
}

template <class K>
bool scalar_matches_field(const K& c, const FieldSpec& spec);

template <>
inline bool scalar_matches_field<Fp>(const Fp& c, const FieldSpec& spec) {
    return c.modulus() == spec.characteristic();
}
template <>
inline bool scalar_matches_field<Rat>(const Rat&, const FieldSpec& spec) {
    return spec.characteristic() == 0;
}

// Generators of m^N as polynomials.
template <class K>
std::vector<Polynomial<K>> maximal_ideal_power(std::size_t nvars,
                                               const MonomialOrder& order,
                                               std::uint32_t N, const K& one) {
    std::vector<Polynomial<K>> out;
    for (auto& m : monomials_of_degree(nvars, N))
        out.push_back(Polynomial<K>::monomial(nvars, order, std::move(m), one));
    return out;
}

template <class K>
class LocalRingPresentation {
public:
    LocalRingPresentation(FieldSpec field, std::vector<std::string> variables,
                          std::vector<Polynomial<K>> relations)
        : LocalRingPresentation(field, variables, std::move(relations),
                                MonomialOrder::degrevlex(variables.size())) {}

    LocalRingPresentation(FieldSpec field, std::vector<std::string> variables,
                          std::vector<Polynomial<K>> relations,
                          MonomialOrder order)
        : field_(field),
          vars_(std::move(variables)),
          relations_(std::move(relations), std::move(order)) {
        if (vars_.empty())
            throw structural_error("a presentation needs at least one variable");
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw structural_error("duplicate variable name '" + vars_[i] +
                                           "'");
        if (relations_.order().nvars() != vars_.size())
            throw structural_error("order arity does not match variable count");
        for (const auto& g : relations_.generators()) {
            if (g.nvars() != vars_.size())
                throw structural_error("relation arity does not match variable count");
            if (!scalar_matches_field(g.leading_coeff(), field_))
                throw structural_error("relation coefficients disagree with the field");
            if (g.has_constant_term())
                throw structural_error(
                    "relation has a nonzero constant term; the ideal must lie "
                    "in the maximal ideal");
        }
    }

    const FieldSpec& field() const { return field_; }
    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const Ideal<K>& relations() const { return relations_; }
    const MonomialOrder& order() const { return relations_.order(); }

    K one() const { return field_one<K>(field_); }

private:
    FieldSpec field_;
    std::vector<std::string> vars_;
    Ideal<K> relations_;
};

struct LengthOptions {
    std::uint32_t truncation_cap = 512;           // largest truncation degree tried
    std::uint64_t monomial_cap = kDefaultMonomialCap; // staircase size guardrail
};

// Outcome of a truncation ladder. When `length` is set, the last two ladder
// entries are equal and the value is the exact local length.
struct LocalLengthResult {
    std::optional<std::uint64_t> length; // nullopt = INFINITE_OR_UNKNOWN
    std::uint32_t stabilized_at = 0;     // first N with L_N = L_{N+1}
    std::vector<std::pair<std::uint32_t, std::uint64_t>> ladder;

    bool finite() const { return length.has_value(); }
};

// One rung: colength(I + J + m^N). Always finite since m^N is included.
template <class K>
std::uint64_t truncated_colength(const LocalRingPresentation<K>& R,
                                 const std::vector<Polynomial<K>>& J,
                                 std::uint32_t N,
                                 std::uint64_t monomial_cap = kDefaultMonomialCap) {
    std::vector<Polynomial<K>> gens = R.relations().generators();
    gens.insert(gens.end(), J.begin(), J.end());
    auto mN = maximal_ideal_power(R.nvars(), R.order(), N, R.one());
    gens.insert(gens.end(), mN.begin(), mN.end());
    Ideal<K> ideal(std::move(gens), R.order());
    auto c = colength(ideal, R.nvars(), monomial_cap);
    if (!c)
        throw structural_error("truncated quotient unexpectedly infinite");
    return *c;
}

// Exact local length of R/JR, or INFINITE_OR_UNKNOWN when the ladder fails
// to stabilize below the truncation cap.
template <class K>
LocalLengthResult local_length(const LocalRingPresentation<K>& R,
                               const std::vector<Polynomial<K>>& J,
                               const LengthOptions& opts = {}) {
    for (const auto& g : J)
        if (!g.is_zero() && g.nvars() != R.nvars())
            throw structural_error("ideal generator arity does not match the ring");

    std::uint64_t max_deg = 0;
    for (const auto& g : J)
        if (!g.is_zero()) max_deg = std::max(max_deg, g.total_degree());
    std::uint32_t N = std::max<std::uint32_t>(
        2, static_cast<std::uint32_t>(std::min<std::uint64_t>(
               max_deg, std::numeric_limits<std::uint32_t>::max())));

    LocalLengthResult result;
    std::optional<std::uint64_t> previous;
    for (; N <= opts.truncation_cap; ++N) {
        std::uint64_t L = truncated_colength(R, J, N, opts.monomial_cap);
        result.ladder.emplace_back(N, L);
        if (previous && *previous == L) {
            result.length = L;
            result.stabilized_at = N - 1;
            return result;
        }
        previous = L;
    }
    return result; // no stabilization: infinite or cap too small
}

// l_R(R/m^N) = colength(I + m^N); the Hilbert-Samuel function of R.
template <class K>
std::uint64_t hilbert_samuel(const LocalRingPresentation<K>& R, std::uint32_t N,
                             std::uint64_t monomial_cap = kDefaultMonomialCap) {
    if (N < 1) throw structural_error("hilbert_samuel needs N >= 1");
    return truncated_colength(R, {}, N, monomial_cap);
}

// dim_k m/(m^2 + I)
template <class K>
std::uint32_t embedding_dim(const LocalRingPresentation<K>& R) {
    return static_cast<std::uint32_t>(hilbert_samuel(R, 2) - 1);
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r *= BigInt(n - i);
        r /= BigInt(i + 1);
    }
    return r;
}

// Semi-decision procedure: compares the Hilbert-Samuel function with the
// binomial pattern of a regular ring. A mismatch certifies non-regularity;
// full agreement up to N_max is evidence only, and is labeled as such.
struct RegularityResult {
    enum class Verdict { regular_up_to_n, not_regular };
    Verdict verdict;
    std::uint32_t n_max;                    // range that was checked
    std::optional<std::uint32_t> witness_N; // set when not regular
    std::uint32_t edim = 0;
    // (N, observed length, regular-ring prediction) rows actually examined
    std::vector<std::tuple<std::uint32_t, std::uint64_t, BigInt>> table;

    bool certified_not_regular() const {
        return verdict == Verdict::not_regular;
    }
};

template <class K>
RegularityResult regularity_check(const LocalRingPresentation<K>& R,
                                  std::uint32_t N_max,
                                  std::uint64_t monomial_cap = kDefaultMonomialCap) {
    if (N_max < 2) throw structural_error("regularity_check needs N_max >= 2");
    RegularityResult out;
    out.n_max = N_max;
    out.edim = embedding_dim(R);
    for (std::uint32_t N = 2; N <= N_max; ++N) {
        std::uint64_t observed = hilbert_samuel(R, N, monomial_cap);
        BigInt predicted = binomial(N - 1 + out.edim, out.edim);
        out.table.emplace_back(N, observed, predicted);
        if (BigInt(observed) != predicted) {
            out.verdict = RegularityResult::Verdict::not_regular;
            out.witness_N = N;
            return out;
        }
    }
    out.verdict = RegularityResult::Verdict::regular_up_to_n;
    return out;
}

} // namespace entrolab
