#include "kstab/arrangement.hpp"

#include "kstab/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace kstab {

LinearForm::LinearForm(RationalRow coefficients) : coeffs_(std::move(coefficients))
{
    auto lead = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x != 0; });
    if (lead == coeffs_.end()) {
        throw InputError("linear form is zero");
    }
    const Rational scale = 1 / *lead;
    for (auto& x : coeffs_) {
        x *= scale;
    }
}

CentralArrangement::CentralArrangement(std::size_t ambient_dim, std::vector<LinearForm> forms)
    : dim_(ambient_dim), forms_(std::move(forms))
{
    if (dim_ == 0) {
        throw InputError("ambient dimension must be positive");
    }
    if (forms_.empty()) {
        throw InputError("arrangement has no hyperplanes");
    }
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        if (forms_[i].dimension() != dim_) {
            throw InputError("form " + std::to_string(i) + " has length "
                             + std::to_string(forms_[i].dimension()) + ", expected "
                             + std::to_string(dim_));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (forms_[i] == forms_[j]) {
                throw InputError("forms " + std::to_string(j) + " and " + std::to_string(i)
                                 + " define the same hyperplane (arrangement must be reduced)");
            }
        }
    }
}

CentralArrangement CentralArrangement::from_rows(std::size_t ambient_dim, std::vector<RationalRow> rows)
{
    std::vector<LinearForm> forms;
    forms.reserve(rows.size());
    for (auto& row : rows) {
        forms.emplace_back(std::move(row));
    }
    return CentralArrangement(ambient_dim, std::move(forms));
}

bool flat_less(const Flat& a, const Flat& b)
{
    if (a.rank != b.rank) {
        return a.rank < b.rank;
    }
    if (a.count != b.count) {
        return a.count < b.count;
    }
    return a.hyperplanes < b.hyperplanes;
}

namespace {

struct FlatState {
    std::vector<RationalRow> basis; // RREF of the forms vanishing on W
    std::vector<std::size_t> members;
};

FlatState close_flat(const CentralArrangement& arr, std::vector<RationalRow> generators)
{
    FlatState state;
    state.basis = row_echelon(std::move(generators));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (in_row_space(state.basis, arr.forms()[i].coefficients())) {
            state.members.push_back(i);
        }
    }
    return state;
}

Rational min_ratio(const std::vector<Flat>& flats)
{
    Rational best = 1;
    for (const auto& f : flats) {
        best = std::min(best, ratio(f.rank, f.count));
    }
    return best;
}

LctCertificate certificate_from(const std::vector<Flat>& sorted_flats)
{
    LctCertificate cert{min_ratio(sorted_flats), {}};
    for (const auto& f : sorted_flats) {
        if (ratio(f.rank, f.count) == cert.value) {
            cert.minimizers.push_back(f);
        }
    }
    return cert;
}

} // namespace

std::vector<Flat> intersection_lattice(const CentralArrangement& arr, const LatticeOptions& options)
{
    // Level-by-level closure: every flat of rank r+1 is W ∩ H for a flat W of rank r
    // and a hyperplane H not containing W. Flats are keyed by their member set.
    std::map<std::vector<std::size_t>, FlatState> found;
    std::vector<const FlatState*> frontier;
    std::size_t candidates = 0;

    auto note_candidate = [&] {
        if (++candidates > options.max_candidates) {
            throw SizeError("intersection lattice exceeded " + std::to_string(options.max_candidates)
                            + " candidate subspaces");
        }
    };

    for (std::size_t i = 0; i < arr.size(); ++i) {
        note_candidate();
        FlatState state = close_flat(arr, {arr.forms()[i].coefficients()});
        auto [it, inserted] = found.try_emplace(state.members, std::move(state));
        if (inserted) {
            frontier.push_back(&it->second);
        }
    }
    while (!frontier.empty()) {
        std::vector<const FlatState*> next;
        for (const FlatState* flat : frontier) {
            std::size_t m = 0;
            for (std::size_t h = 0; h < arr.size(); ++h) {
                if (m < flat->members.size() && flat->members[m] == h) {
                    ++m;
                    continue;
                }
                note_candidate();
                std::vector<RationalRow> gens = flat->basis;
                gens.push_back(arr.forms()[h].coefficients());
                FlatState state = close_flat(arr, std::move(gens));
                if (found.contains(state.members)) {
                    continue;
                }
                auto key = state.members;
                auto [it, inserted] = found.try_emplace(std::move(key), std::move(state));
                next.push_back(&it->second);
            }
        }
        frontier = std::move(next);
    }

    std::vector<Flat> flats;
    flats.reserve(found.size());
    for (const auto& [members, state] : found) {
        flats.push_back(Flat{members, static_cast<int>(state.basis.size()),
                             static_cast<int>(members.size())});
    }
    std::sort(flats.begin(), flats.end(), flat_less);
    return flats;
}

LctCertificate lct_central(const CentralArrangement& arr, const LatticeOptions& options)
{
    return certificate_from(intersection_lattice(arr, options));
}

Rational diagonal_discrepancy(int g, const Rational& c)
{
    if (g < 2) {
        throw InputError("diagonal discrepancy needs g >= 2");
    }
    if (c < 0) {
        throw InputError("boundary coefficient must be nonnegative");
    }
    return Rational(g - 2) - c * ratio(g * (g - 1), 2);
}

} // namespace kstab
