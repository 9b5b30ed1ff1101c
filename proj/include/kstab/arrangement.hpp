#pragma once

#include "kstab/linear_algebra.hpp"
#include "kstab/rational.hpp"

#include <cstddef>
#include <vector>

namespace kstab {

/// A nonzero linear form, scaled so its first nonzero coefficient is 1.
class LinearForm {
public:
    explicit LinearForm(RationalRow coefficients);

    const RationalRow& coefficients() const noexcept { return coeffs_; }
    std::size_t dimension() const noexcept { return coeffs_.size(); }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    RationalRow coeffs_;
};

/// Reduced central arrangement: distinct hyperplanes through the origin of Q^n.
class CentralArrangement {
public:
    CentralArrangement(std::size_t ambient_dim, std::vector<LinearForm> forms);
    static CentralArrangement from_rows(std::size_t ambient_dim, std::vector<RationalRow> rows);

    std::size_t ambient_dim() const noexcept { return dim_; }
    const std::vector<LinearForm>& forms() const noexcept { return forms_; }
    std::size_t size() const noexcept { return forms_.size(); }

private:
    std::size_t dim_;
    std::vector<LinearForm> forms_;
};

/// A proper flat W of the intersection lattice. `hyperplanes` lists every
/// arrangement hyperplane containing W, ascending; count = hyperplanes.size().
struct Flat {
    std::vector<std::size_t> hyperplanes;
    int rank = 0;
    int count = 0;

    friend bool operator==(const Flat&, const Flat&) = default;
};

/// Ordering used for every flat list: (rank, count, hyperplanes lexicographic).
bool flat_less(const Flat& a, const Flat& b);

struct LctCertificate {
    Rational value;
    std::vector<Flat> minimizers;

    friend bool operator==(const LctCertificate&, const LctCertificate&) = default;
};

struct LatticeOptions {
    /// Abort threshold on generated candidate subspaces.
    std::size_t max_candidates = std::size_t{1} << 20;
};

/// All flats except the ambient space, sorted by flat_less.
/// Throws SizeError once more than max_candidates subspaces have been generated.
std::vector<Flat> intersection_lattice(const CentralArrangement& arr, const LatticeOptions& options = {});

/// lct at the origin: min r(W)/s(W) over proper flats, with every minimizing flat.
LctCertificate lct_central(const CentralArrangement& arr, const LatticeOptions& options = {});

/// Hyperplanes u_i - u_j (i < j) on g variables, in lexicographic pair order.
CentralArrangement braid_arrangement(int g);

/// Index of the hyperplane u_i - u_j (0-based, i < j) in braid_arrangement(g).
std::size_t braid_pair_index(int g, int i, int j);

inline constexpr int kMaxBraidRank = 13;

/// Flats of the braid arrangement read off set partitions of {1..g}: a partition with
/// blocks b has rank g - #blocks and count sum C(|b|, 2). g <= 10.
std::vector<Flat> braid_flats(int g);

/// lct of the braid arrangement by walking the partition lattice; no matrices involved.
/// Requires 2 <= g <= kMaxBraidRank.
LctCertificate lct_braid(int g);

/// g - 2 - c g (g-1) / 2: discrepancy of the exceptional divisor over the small diagonal.
Rational diagonal_discrepancy(int g, const Rational& c);

} // namespace kstab
