#pragma once

// Lambda sequences, entropy bounds, the Kunz regularity test with certificate
// semantics, Hilbert-Kunz multiplicity ratios, the Nagata flatness sampler,
// and the induced-functor computation on cyclic modules. All verdicts rest on
// exact integer comparisons; logarithms appear only in decimal renderings.

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "entrolab/endomorphism.hpp"

namespace entrolab {

inline BigInt bigint_pow(std::uint64_t base, std::uint32_t exp) {
    return boost::multiprecision::pow(BigInt(base), exp);
}

inline BigRat bigrat_pow(const BigRat& base, std::uint32_t exp) {
    using boost::multiprecision::pow;
    return BigRat(pow(boost::multiprecision::numerator(base), exp),
                  pow(boost::multiprecision::denominator(base), exp));
}

// lambda(phi^n) = l_R(R/phi^n(m)R). Throws not_finite_length when the
// truncation ladder fails to stabilize, which signals that phi^n(m)R is not
// m-primary (or that the cap is too small); the ladder rides along.
template <class K>
std::uint64_t lambda_n(const Endomorphism<K>& phi, std::uint32_t n,
                       const LengthOptions& opts = {}) {
    if (n < 1) throw structural_error("lambda_n needs n >= 1");
    LocalLengthResult r = local_length(phi.ring(), phi.iterate(n), opts);
    if (!r.finite())
        throw not_finite_length(
            "NOT_FINITE_LENGTH: the truncation ladder for lambda(phi^" +
                std::to_string(n) + ") did not stabilize by N = " +
                std::to_string(opts.truncation_cap),
            r.ladder);
    return *r.length;
}

// lambda(phi^1..phi^n_max) with the entropy bookkeeping. a_n = log(lambda_n)/n
// is kept as the exact pair (n, lambda_n); the minimum over computed a_n is a
// certified upper bound for the algebraic entropy because the sequence
// converges to its infimum. No lower bound is claimed.
struct LambdaSequence {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> values; // (n, lambda)
    bool exact_if_multiplicative = false; // lambda(phi^n) = lambda(phi)^n for all computed n
    std::uint32_t argmin_n = 1;           // n minimizing a_n, exact comparison
    std::vector<std::pair<std::uint32_t, double>> a_n; // decimal renderings
    double entropy_upper_bound = 0.0;     // decimal rendering of min a_n

    std::uint64_t value_at(std::uint32_t n) const {
        for (const auto& [m, v] : values)
            if (m == n) return v;
        throw structural_error("lambda sequence has no entry for n = " +
                               std::to_string(n));
    }
};

namespace detail {

// a_m <= a_n as exact logs: log(l_m)/m <= log(l_n)/n <=> l_m^n <= l_n^m
inline bool log_ratio_leq(std::uint64_t lm, std::uint32_t m, std::uint64_t ln,
                          std::uint32_t n) {
    return bigint_pow(lm, n) <= bigint_pow(ln, m);
}

} // namespace detail

template <class K>
LambdaSequence entropy_report(const Endomorphism<K>& phi, std::uint32_t n_max,
                              const LengthOptions& opts = {}) {
    if (n_max < 1) throw structural_error("entropy_report needs n_max >= 1");
    LambdaSequence seq;
    for (std::uint32_t n = 1; n <= n_max; ++n)
        seq.values.emplace_back(n, lambda_n(phi, n, opts));

    // The following are theorems about lambda; a violation means the engine
    // is broken, so fail loudly rather than report nonsense.
    for (const auto& [n, v] : seq.values) {
        if (v < 1) throw std::logic_error("lambda value below 1");
        (void)n;
    }
    for (std::size_t i = 1; i < seq.values.size(); ++i)
        if (seq.values[i].second < seq.values[i - 1].second)
            throw std::logic_error("lambda sequence decreased");
    for (std::uint32_t m = 1; m <= n_max; ++m)
        for (std::uint32_t n = m; m + n <= n_max; ++n)
            if (BigInt(seq.value_at(m + n)) >
                BigInt(seq.value_at(m)) * BigInt(seq.value_at(n)))
                throw std::logic_error("lambda sequence not submultiplicative");

    std::uint64_t l1 = seq.value_at(1);
    seq.exact_if_multiplicative = true;
    for (const auto& [n, v] : seq.values)
        if (BigInt(v) != bigint_pow(l1, n)) {
            seq.exact_if_multiplicative = false;
            break;
        }

    seq.argmin_n = 1;
    for (const auto& [n, v] : seq.values) {
        std::uint64_t best = seq.value_at(seq.argmin_n);
        if (!detail::log_ratio_leq(best, seq.argmin_n, v, n))
            seq.argmin_n = n;
    }
    for (const auto& [n, v] : seq.values)
        seq.a_n.emplace_back(n, std::log(static_cast<double>(v)) / n);
    seq.entropy_upper_bound =
        std::log(static_cast<double>(seq.value_at(seq.argmin_n))) / seq.argmin_n;
    return seq;
}

// Kunz test certificates. Soundness of each label traces to one implication
// direction of the regularity criterion:
//   - a strict drop lambda(phi^n) < lambda(phi)^n refutes flatness of phi,
//     hence regularity of R: CERTIFIED_NOT_REGULAR, with witness n.
//   - multiplicativity up to n_max plus the contracting property is only
//     evidence (the growth base is bounded, never computed exactly):
//     CONSISTENT_WITH_REGULAR.
//   - without the contracting hypothesis the converse direction is
//     unavailable, so a clean sequence proves nothing:
//     INCONCLUSIVE_NOT_CONTRACTING.
enum class KunzVerdict {
    certified_not_regular,
    consistent_with_regular,
    inconclusive_not_contracting,
};

inline std::string to_string(KunzVerdict v) {
    switch (v) {
        case KunzVerdict::certified_not_regular: return "CERTIFIED_NOT_REGULAR";
        case KunzVerdict::consistent_with_regular: return "CONSISTENT_WITH_REGULAR";
        case KunzVerdict::inconclusive_not_contracting:
            return "INCONCLUSIVE_NOT_CONTRACTING";
    }
    return "UNKNOWN";
}

struct KunzReport {
    LambdaSequence lambda_seq;
    ContractingResult contracting;
    KunzVerdict verdict;
    std::optional<std::uint32_t> witness_n; // first drop, when certified
    RegularityResult cross_check;           // independent Hilbert-Samuel oracle
    std::uint32_t n_max = 0;
};

template <class K>
KunzReport kunz_test(const Endomorphism<K>& phi, std::uint32_t n_max,
                     std::uint32_t cross_check_N_max = 6,
                     const LengthOptions& opts = {}) {
    if (n_max < 2) throw structural_error("kunz_test needs n_max >= 2");
    KunzReport report;
    report.n_max = n_max;
    report.lambda_seq = entropy_report(phi, n_max, opts);
    report.contracting = phi.contracting_check();
    report.cross_check = regularity_check(phi.ring(), cross_check_N_max,
                                          opts.monomial_cap);

    std::uint64_t l1 = report.lambda_seq.value_at(1);
    for (const auto& [n, v] : report.lambda_seq.values) {
        if (BigInt(v) < bigint_pow(l1, n)) {
            report.verdict = KunzVerdict::certified_not_regular;
            report.witness_n = n;
            return report;
        }
    }
    report.verdict = report.contracting.contracting
                         ? KunzVerdict::consistent_with_regular
                         : KunzVerdict::inconclusive_not_contracting;
    return report;
}

// Hilbert-Kunz ratio sequence lambda(phi^n)/q^n. q is either user-supplied or
// inferred as lambda(phi) when the sequence is multiplicative; the library
// refuses to guess the limit otherwise.
struct HKEstimate {
    enum class QProvenance { user_supplied, inferred_from_multiplicativity };

    BigRat q_used;
    QProvenance provenance;
    std::vector<std::pair<std::uint32_t, BigRat>> ratios;
};

inline std::string to_string(HKEstimate::QProvenance p) {
    return p == HKEstimate::QProvenance::user_supplied
               ? "user-supplied"
               : "inferred-from-multiplicativity";
}

template <class K>
HKEstimate hk_estimate(const Endomorphism<K>& phi, std::uint32_t n_max,
                       std::optional<BigRat> q = std::nullopt,
                       const LengthOptions& opts = {}) {
    LambdaSequence seq = entropy_report(phi, n_max, opts);
    HKEstimate out;
    if (q) {
        if (*q <= 0) throw structural_error("q must be positive");
        out.q_used = *q;
        out.provenance = HKEstimate::QProvenance::user_supplied;
    } else {
        if (!seq.exact_if_multiplicative)
            throw q_unavailable(
                "Q_UNAVAILABLE: the lambda sequence is not multiplicative up "
                "to n_max, so no growth base can be inferred; pass q "
                "explicitly");
        out.q_used = BigRat(seq.value_at(1));
        out.provenance = HKEstimate::QProvenance::inferred_from_multiplicativity;
    }
    for (const auto& [n, v] : seq.values)
        out.ratios.emplace_back(n, BigRat(v) / bigrat_pow(out.q_used, n));
    return out;
}

// Deterministic splitmix64 stream; self-contained so that identical seeds
// give identical samples on every platform and standard library.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t m) { return next() % m; }

private:
    std::uint64_t state_;
};

namespace detail {

template <class K>
K random_coeff(SampleRng& rng, const FieldSpec& spec);

template <>
inline Fp random_coeff<Fp>(SampleRng& rng, const FieldSpec& spec) {
    return Fp(rng.below(spec.characteristic()), spec.characteristic());
}

// height at most 10: numerator in [-10, 10], denominator in [1, 10]
template <>
inline Rat random_coeff<Rat>(SampleRng& rng, const FieldSpec&) {
    std::int64_t num = static_cast<std::int64_t>(rng.below(21)) - 10;
    std::int64_t den = static_cast<std::int64_t>(rng.below(10)) + 1;
    return Rat(BigInt(num), BigInt(den));
}

} // namespace detail

// One Nagata comparison: l_R(R/phi^n(q)R) against l_R(R/q) * lambda(phi^n).
// Equality for every m-primary q is Nagata's flatness criterion; a single
// inequality certifies that phi^n is not flat (hence R is not regular).
template <class K>
struct NagataSample {
    std::vector<Polynomial<K>> q_gens;
    std::uint64_t len_q = 0; // l_R(R/q)
    std::uint64_t lhs = 0;   // l_R(R/phi^n(q)R)
    BigInt rhs;              // len_q * lambda(phi^n)
    bool equal = false;
};

template <class K>
NagataSample<K> nagata_check_ideal(const Endomorphism<K>& phi, std::uint32_t n,
                                   std::vector<Polynomial<K>> q_gens,
                                   std::uint64_t lambda_value,
                                   const LengthOptions& opts = {}) {
    NagataSample<K> s;
    s.q_gens = std::move(q_gens);

    LocalLengthResult len_q = local_length(phi.ring(), s.q_gens, opts);
    if (!len_q.finite())
        throw not_finite_length("sampled ideal is not m-primary", len_q.ladder);
    s.len_q = *len_q.length;

    const auto& it = phi.iterate(n);
    std::vector<Polynomial<K>> image_gens;
    image_gens.reserve(s.q_gens.size());
    for (const auto& g : s.q_gens) image_gens.push_back(substitute(g, it));
    LocalLengthResult len_img = local_length(phi.ring(), image_gens, opts);
    if (!len_img.finite())
        throw not_finite_length("image of sampled ideal is not m-primary",
                                len_img.ladder);
    s.lhs = *len_img.length;
    s.rhs = BigInt(s.len_q) * BigInt(lambda_value);
    s.equal = BigInt(s.lhs) == s.rhs;
    return s;
}

// Samples m-primary ideals q = (x_1^a_1, ..., x_v^a_v) + up to two random
// polynomials with zero constant term. The pure-power block guarantees
// m-primariness by construction; exponents a_i are uniform in [1, 4], the
// extra polynomials have 1..3 terms with per-variable exponents in [0, 3],
// and coefficients are uniform in the field (height <= 10 over the
// rationals). Deterministic for a fixed seed.
template <class K>
std::vector<NagataSample<K>> nagata_sample_test(const Endomorphism<K>& phi,
                                                std::uint32_t n,
                                                std::uint32_t samples,
                                                std::uint64_t seed,
                                                const LengthOptions& opts = {}) {
    std::uint64_t lambda_value = lambda_n(phi, n, opts);
    const auto& R = phi.ring();
    SampleRng rng(seed);
    std::vector<NagataSample<K>> out;
    out.reserve(samples);

    for (std::uint32_t s = 0; s < samples; ++s) {
        std::vector<Polynomial<K>> q_gens;
        for (std::size_t i = 0; i < R.nvars(); ++i) {
            Monomial m(R.nvars());
            m[i] = static_cast<std::uint32_t>(1 + rng.below(4));
            q_gens.push_back(
                Polynomial<K>::monomial(R.nvars(), R.order(), std::move(m), R.one()));
        }
        std::uint64_t extras = rng.below(3);
        for (std::uint64_t e = 0; e < extras; ++e) {
            std::vector<typename Polynomial<K>::Term> terms;
            std::uint64_t nterms = 1 + rng.below(3);
            for (std::uint64_t t = 0; t < nterms; ++t) {
                Monomial m(R.nvars());
                do {
                    for (std::size_t i = 0; i < R.nvars(); ++i)
                        m[i] = static_cast<std::uint32_t>(rng.below(4));
                } while (m.is_one()); // zero constant term required
                K c = detail::random_coeff<K>(rng, R.field());
                if (!is_zero(c)) terms.push_back({std::move(m), std::move(c)});
            }
            Polynomial<K> extra = Polynomial<K>::from_terms(
                R.nvars(), R.order(), std::move(terms));
            if (!extra.is_zero()) q_gens.push_back(std::move(extra));
        }
        out.push_back(nagata_check_ideal(phi, n, std::move(q_gens), lambda_value,
                                         opts));
    }
    return out;
}

// Phi^n applied to the cyclic module R/a, realized as the ideal image:
// Phi^n(R/a) is R/phi^n(a)R, so the output is generated by the images of a's
// generators under phi^n. Both lengths ride along, and the general bound
// len_out <= len_in * lambda(phi^n) is checked.
template <class K>
struct PhiCyclicResult {
    std::vector<Polynomial<K>> image_gens; // generators of phi^n(a)R, reduced
    std::uint64_t len_in = 0;              // l_R(R/a)
    std::uint64_t len_out = 0;             // l_R(R/phi^n(a)R)
    std::uint64_t lambda_value = 0;        // lambda(phi^n)
    bool bound_is_equality = false;
};

template <class K>
PhiCyclicResult<K> phi_cyclic(const Endomorphism<K>& phi,
                              const std::vector<Polynomial<K>>& a_gens,
                              std::uint32_t n, const LengthOptions& opts = {}) {
    PhiCyclicResult<K> out;

    LocalLengthResult len_in = local_length(phi.ring(), a_gens, opts);
    if (!len_in.finite())
        throw not_finite_length(
            "NOT_FINITE_LENGTH: l_R(R/a) is infinite or the cap is too small",
            len_in.ladder);
    out.len_in = *len_in.length;
    out.lambda_value = lambda_n(phi, n, opts);

    const auto& it = phi.iterate(n);
    const auto& basis = phi.ring().relations().groebner();
    for (const auto& g : a_gens) {
        Polynomial<K> img = normal_form(substitute(g, it), basis);
        if (!img.is_zero()) out.image_gens.push_back(std::move(img));
    }
    LocalLengthResult len_out = local_length(phi.ring(), out.image_gens, opts);
    if (!len_out.finite())
        throw not_finite_length("image ideal unexpectedly of infinite length",
                                len_out.ladder);
    out.len_out = *len_out.length;

    BigInt bound = BigInt(out.len_in) * BigInt(out.lambda_value);
    if (BigInt(out.len_out) > bound)
        throw std::logic_error("phi_cyclic length bound violated");
    out.bound_is_equality = BigInt(out.len_out) == bound;
    return out;
}

} // namespace entrolab
