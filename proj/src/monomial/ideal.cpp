#include "kstab/monomial.hpp"

#include "kstab/error.hpp"

#include <algorithm>
#include <sstream>

namespace kstab {

namespace {

bool dominates(const ExponentVector& v, const ExponentVector& g)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < g[i]) {
            return false;
        }
    }
    return true;
}

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExponentVector> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            redundant = j != i && dominates(gens[i], gens[j]);
        }
        if (!redundant) {
            out.push_back(gens[i]);
        }
    }
    return out;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::size_t arity, std::vector<ExponentVector> generators) : arity_(arity)
{
    if (generators.empty()) {
        throw InputError("monomial ideal needs at least one generator");
    }
    for (const auto& g : generators) {
        if (g.size() != arity_) {
            throw InputError("generator length " + std::to_string(g.size()) + " does not match arity "
                             + std::to_string(arity_));
        }
        for (long x : g) {
            if (x < 0) {
                throw InputError("negative exponent in monomial generator");
            }
        }
    }
    gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::size_t arity)
{
    return MonomialIdeal(arity, {ExponentVector(arity, 0)});
}

MonomialIdeal MonomialIdeal::principal(ExponentVector exponents)
{
    const std::size_t n = exponents.size();
    return MonomialIdeal(n, {std::move(exponents)});
}

bool MonomialIdeal::is_unit() const
{
    return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(), [](long x) { return x == 0; });
}

bool MonomialIdeal::contains_monomial(const ExponentVector& v) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return dominates(v, g); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const
{
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const ExponentVector& g) { return contains_monomial(g); });
}

ExponentVector MonomialIdeal::generator_max() const
{
    ExponentVector out(arity_, 0);
    for (const auto& g : gens_) {
        for (std::size_t i = 0; i < arity_; ++i) {
            out[i] = std::max(out[i], g[i]);
        }
    }
    return out;
}

std::string MonomialIdeal::to_string() const
{
    static constexpr const char* kNames[] = {"x", "y", "z", "w"};
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (k > 0) {
            os << ", ";
        }
        bool first = true;
        for (std::size_t i = 0; i < arity_; ++i) {
            if (gens_[gens_.size() - 1 - k][i] == 0) {
                continue;
            }
            os << (first ? "" : "*");
            if (arity_ <= 4) {
                os << kNames[i];
            } else {
                os << 'x' << (i + 1);
            }
            if (gens_[gens_.size() - 1 - k][i] > 1) {
                os << '^' << gens_[gens_.size() - 1 - k][i];
            }
            first = false;
        }
        if (first) {
            os << '1';
        }
    }
    os << ')';
    return os.str();
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (a.arity() != b.arity()) {
        throw InputError("ideal arity mismatch");
    }
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.arity(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (a.arity() != b.arity()) {
        throw InputError("ideal arity mismatch");
    }
    std::vector<ExponentVector> gens;
    for (const auto& x : a.generators()) {
        for (const auto& y : b.generators()) {
            ExponentVector z(a.arity());
            for (std::size_t i = 0; i < z.size(); ++i) {
                z[i] = x[i] + y[i];
            }
            gens.push_back(std::move(z));
        }
    }
    return MonomialIdeal(a.arity(), std::move(gens));
}

MonomialIdeal times_monomial(const MonomialIdeal& a, const ExponentVector& m)
{
    return ideal_product(a, MonomialIdeal::principal(m));
}

MonomialIdeal embed(const MonomialIdeal& a, std::size_t offset, std::size_t arity)
{
    if (offset + a.arity() > arity) {
        throw InputError("embedding does not fit in the target arity");
    }
    std::vector<ExponentVector> gens;
    for (const auto& g : a.generators()) {
        ExponentVector e(arity, 0);
        std::copy(g.begin(), g.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(arity, std::move(gens));
}

} // namespace kstab
