#include "kstab/arrangement.hpp"

#include "kstab/error.hpp"

#include <algorithm>
#include <string>

namespace kstab {

std::size_t braid_pair_index(int g, int i, int j)
{
    return static_cast<std::size_t>(i * (2 * g - i - 1) / 2 + (j - i - 1));
}

CentralArrangement braid_arrangement(int g)
{
    if (g < 2) {
        throw InputError("braid arrangement needs g >= 2, got " + std::to_string(g));
    }
    std::vector<RationalRow> rows;
    for (int i = 0; i < g; ++i) {
        for (int j = i + 1; j < g; ++j) {
            RationalRow row(static_cast<std::size_t>(g));
            row[static_cast<std::size_t>(i)] = 1;
            row[static_cast<std::size_t>(j)] = -1;
            rows.push_back(std::move(row));
        }
    }
    return CentralArrangement::from_rows(static_cast<std::size_t>(g), std::move(rows));
}

namespace {

// Restricted growth strings: block[i] <= 1 + max(block[0..i-1]). Visits each set
// partition of {0..g-1} exactly once, keeping block sizes up to date incrementally.
template <typename Visitor>
class PartitionWalker {
public:
    PartitionWalker(int g, Visitor& visit) : g_(g), visit_(visit), block_(g), sizes_(g, 0) {}

    void run()
    {
        block_[0] = 0;
        sizes_[0] = 1;
        descend(1, 1, 0);
    }

private:
    // pairs = sum over blocks of C(|b|, 2) so far
    void descend(int pos, int blocks, long pairs)
    {
        if (pos == g_) {
            visit_(block_, blocks, pairs);
            return;
        }
        for (int b = 0; b <= blocks && b < g_; ++b) {
            block_[pos] = b;
            const long added = sizes_[b];
            ++sizes_[b];
            descend(pos + 1, b == blocks ? blocks + 1 : blocks, pairs + added);
            --sizes_[b];
        }
    }

    int g_;
    Visitor& visit_;
    std::vector<int> block_;
    std::vector<long> sizes_;
};

Flat flat_of_partition(int g, const std::vector<int>& block, int blocks, long pairs)
{
    Flat f;
    for (int i = 0; i < g; ++i) {
        for (int j = i + 1; j < g; ++j) {
            if (block[i] == block[j]) {
                f.hyperplanes.push_back(braid_pair_index(g, i, j));
            }
        }
    }
    std::sort(f.hyperplanes.begin(), f.hyperplanes.end());
    f.rank = g - blocks;
    f.count = static_cast<int>(pairs);
    return f;
}

} // namespace

std::vector<Flat> braid_flats(int g)
{
    if (g < 2 || g > 10) {
        throw InputError("braid_flats supports 2 <= g <= 10, got " + std::to_string(g));
    }
    std::vector<Flat> flats;
    auto visit = [&](const std::vector<int>& block, int blocks, long pairs) {
        if (pairs > 0) {
            flats.push_back(flat_of_partition(g, block, blocks, pairs));
        }
    };
    PartitionWalker walker(g, visit);
    walker.run();
    std::sort(flats.begin(), flats.end(), flat_less);
    return flats;
}

LctCertificate lct_braid(int g)
{
    if (g < 2) {
        throw InputError("lct_braid needs g >= 2, got " + std::to_string(g));
    }
    if (g > kMaxBraidRank) {
        throw SizeError("lct_braid supports g <= " + std::to_string(kMaxBraidRank) + ", got "
                        + std::to_string(g));
    }
    // Track the best r/s as a pair of integers; every single hyperplane gives 1/1.
    long best_r = 1;
    long best_s = 1;
    std::vector<Flat> minimizers;
    auto visit = [&](const std::vector<int>& block, int blocks, long pairs) {
        if (pairs == 0) {
            return;
        }
        const long r = g - blocks;
        const long lhs = r * best_s;
        const long rhs = best_r * pairs;
        if (lhs < rhs) {
            best_r = r;
            best_s = pairs;
            minimizers.clear();
        }
        if (lhs <= rhs) {
            minimizers.push_back(flat_of_partition(g, block, blocks, pairs));
        }
    };
    PartitionWalker walker(g, visit);
    walker.run();
    std::sort(minimizers.begin(), minimizers.end(), flat_less);
    return LctCertificate{ratio(best_r, best_s), std::move(minimizers)};
}

} // namespace kstab
