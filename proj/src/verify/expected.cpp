#include "kstab/verify.hpp"

#include <stdexcept>

namespace kstab::verify {

// Origins: literature = stated closed forms for braid lct, gamma(P^1) and the diagonal
// discrepancy; oracle = recomputed by brute-force enumeration before being frozen here;
// direct = immediate from the definitions.
const std::vector<ExpectedValue>& expected_values()
{
    static const std::vector<ExpectedValue> table{
        {"lct_braid/g=2", "1", Origin::literature},
        {"lct_braid/g=3", "2/3", Origin::literature},
        {"lct_braid/g=4", "1/2", Origin::literature},
        {"lct_braid/g=5", "2/5", Origin::literature},
        {"lct_braid/g=6", "1/3", Origin::literature},
        {"lct_braid/g=7", "2/7", Origin::literature},
        {"lct_braid/g=8", "1/4", Origin::literature},
        {"lct_braid/g=9", "2/9", Origin::literature},
        {"discrepancy/at_threshold", "-1", Origin::literature},
        {"gamma_k/k=1", "2/3", Origin::literature},
        {"gamma_k/k=2", "4/5", Origin::literature},
        {"gamma_k/k=3", "6/7", Origin::literature},
        {"gamma_k/k=4", "8/9", Origin::literature},
        {"gamma/P1", "1", Origin::literature},
        {"verdict/P1", "semistable_not_stable", Origin::literature},
        {"vandermonde/terms/k=1", "6", Origin::direct},
        {"vandermonde/terms/k=2", "120", Origin::oracle},
        {"w_poly/point/s=1", "-1/2*k^2 - 1/2*k", Origin::oracle},
        {"DF0/point/s=1", "2", Origin::oracle},
        {"DF0/fat_point/a=2", "4", Origin::oracle},
        {"DF0/fat_point/a=3", "16/3", Origin::oracle},
        {"DF0/fat_point/a=4", "6", Origin::oracle},
        {"DF0/fat_point/a=5", "32/5", Origin::oracle},
        {"DF0/point/s=2", "0", Origin::oracle},
        {"DF0/two_step/s=1", "2", Origin::oracle},
        {"multiplier/(x,y)^2", "(x, y)", Origin::oracle},
        {"lct_monomial/(x^2,y^3)", "5/6", Origin::oracle},
    };
    return table;
}

std::string_view expected(std::string_view key)
{
    for (const auto& entry : expected_values()) {
        if (entry.key == key) {
            return entry.value;
        }
    }
    throw std::out_of_range("no expected value for " + std::string(key));
}

} // namespace kstab::verify
