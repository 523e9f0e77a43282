#pragma once

// Local self-maps phi of a presented ring, given by one image polynomial per
// variable. Validation checks locality (phi(m) <= m) and well-definedness
// (phi(I)R <= I, via global membership of each relation's image). Iterated
// images are cached and always reduced modulo the relations basis, which is
// semantically free downstream and fights degree blow-up.

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "entrolab/local_ring.hpp"
#include "entrolab/parser.hpp"

namespace entrolab {

struct ValidationIssue {
    enum class Kind { arity_mismatch, not_local, not_well_defined };

    Kind kind;
    std::size_t index = 0;  // offending image (not_local) or relation index
    std::string detail;     // human-readable diagnostic

    std::string label() const {
        switch (kind) {
            case Kind::arity_mismatch: return "ARITY_MISMATCH";
            case Kind::not_local: return "NOT_LOCAL";
            case Kind::not_well_defined: return "WELL_DEFINEDNESS_FAILURE";
        }
        return "UNKNOWN";
    }
};

class validation_error : public error {
public:
    explicit validation_error(ValidationIssue issue)
        : error(issue.label() + ": " + issue.detail), issue_(std::move(issue)) {}

    const ValidationIssue& issue() const { return issue_; }

private:
    ValidationIssue issue_;
};

struct ContractingResult {
    bool contracting = false;
    std::optional<std::size_t> witness_variable; // index of a variable whose
                                                 // phi^e image escapes m^2 + I
    std::uint32_t edim = 0;
};

template <class K>
class Endomorphism {
public:
    static std::variant<Endomorphism, ValidationIssue> try_make(
        LocalRingPresentation<K> ring, std::vector<Polynomial<K>> images) {
        if (images.size() != ring.nvars()) {
            return ValidationIssue{ValidationIssue::Kind::arity_mismatch, 0,
                                   "expected " + std::to_string(ring.nvars()) +
                                       " images, got " +
                                       std::to_string(images.size())};
        }
        for (std::size_t i = 0; i < images.size(); ++i) {
            const auto& g = images[i];
            if (g.nvars() != ring.nvars() || !(g.order() == ring.order()))
                throw structural_error("image arity or order does not match the ring");
            if (!g.is_zero() && !scalar_matches_field(g.leading_coeff(), ring.field()))
                throw structural_error("image coefficients disagree with the field");
            if (g.has_constant_term()) {
                return ValidationIssue{
                    ValidationIssue::Kind::not_local, i,
                    "image of " + ring.variables()[i] + " = " +
                        to_string(g, ring.variables()) +
                        " has a nonzero constant term, so the map is not local"};
            }
        }
        const auto& basis = ring.relations().groebner();
        const auto& rels = ring.relations().generators();
        for (std::size_t r = 0; r < rels.size(); ++r) {
            Polynomial<K> image = substitute(rels[r], images);
            Polynomial<K> nf = normal_form(image, basis);
            if (!nf.is_zero()) {
                return ValidationIssue{
                    ValidationIssue::Kind::not_well_defined, r,
                    "relation " + to_string(rels[r], ring.variables()) +
                        " maps to " + to_string(nf, ring.variables()) +
                        " (nonzero normal form), so the map does not descend "
                        "to the quotient"};
            }
        }
        return Endomorphism(std::move(ring), std::move(images));
    }

    static Endomorphism make(LocalRingPresentation<K> ring,
                             std::vector<Polynomial<K>> images) {
        auto r = try_make(std::move(ring), std::move(images));
        if (auto* issue = std::get_if<ValidationIssue>(&r))
            throw validation_error(*issue);
        return std::get<Endomorphism>(std::move(r));
    }

    const LocalRingPresentation<K>& ring() const { return ring_; }
    const std::vector<Polynomial<K>>& images() const { return images_; }

    // Images of the variables under phi^n, reduced modulo the relations
    // basis. iterate(0) is the identity. The cache is append-only with
    // idempotent entries; concurrent first fills of the same n must be
    // serialized (they would produce the identical canonical value).
    const std::vector<Polynomial<K>>& iterate(std::uint32_t n) const {
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;

        std::vector<Polynomial<K>> entry;
        if (n == 0) {
            for (std::size_t i = 0; i < ring_.nvars(); ++i)
                entry.push_back(Polynomial<K>::variable(
                    ring_.nvars(), ring_.order(), i, ring_.one()));
        } else if (n == 1) {
            const auto& basis = ring_.relations().groebner();
            for (const auto& g : images_)
                entry.push_back(normal_form(g, basis));
        } else {
            // phi^n(x_i) = phi(phi^(n-1)(x_i)): substitute the first iterate
            // into the previous one
            const auto& prev = iterate(n - 1);
            const auto& first = iterate(1);
            const auto& basis = ring_.relations().groebner();
            for (const auto& g : prev)
                entry.push_back(normal_form(substitute(g, first), basis));
        }
        return cache_.emplace(n, std::move(entry)).first->second;
    }

    // Remark-1.2 test: phi is contracting iff phi^edim(R)(m)R <= m^2.
    ContractingResult contracting_check() const {
        ContractingResult out;
        out.edim = embedding_dim(ring_);
        std::vector<Polynomial<K>> gens = ring_.relations().generators();
        auto m2 = maximal_ideal_power(ring_.nvars(), ring_.order(), 2, ring_.one());
        gens.insert(gens.end(), m2.begin(), m2.end());
        Ideal<K> ideal(std::move(gens), ring_.order());
        const auto& basis = ideal.groebner();
        const auto& it = iterate(out.edim);
        for (std::size_t i = 0; i < it.size(); ++i) {
            if (!normal_form(it[i], basis).is_zero()) {
                out.contracting = false;
                out.witness_variable = i;
                return out;
            }
        }
        out.contracting = true;
        return out;
    }

private:
    Endomorphism(LocalRingPresentation<K> ring, std::vector<Polynomial<K>> images)
        : ring_(std::move(ring)), images_(std::move(images)) {}

    LocalRingPresentation<K> ring_;
    std::vector<Polynomial<K>> images_;
    mutable std::map<std::uint32_t, std::vector<Polynomial<K>>> cache_;
};

} // namespace entrolab
