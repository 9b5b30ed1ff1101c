#include "mixed_polyhedron.hpp"

#include "kstab/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace kstab {

namespace detail {

namespace {

long long small_det(std::vector<IntVector> m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m[0][0];
    }
    long long total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col] == 0) {
            continue;
        }
        std::vector<IntVector> minor;
        for (std::size_t r = 1; r < n; ++r) {
            IntVector row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) {
                    row.push_back(m[r][c]);
                }
            }
            minor.push_back(std::move(row));
        }
        const long long term = m[0][col] * small_det(std::move(minor));
        total += (col % 2 == 0) ? term : -term;
    }
    return total;
}

// Normal to the span of n-1 vectors in Z^n via signed maximal minors.
IntVector cross_normal(const std::vector<IntVector>& dirs, std::size_t n)
{
    IntVector normal(n);
    for (std::size_t skip = 0; skip < n; ++skip) {
        std::vector<IntVector> minor;
        for (const auto& d : dirs) {
            IntVector row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != skip) {
                    row.push_back(d[c]);
                }
            }
            minor.push_back(std::move(row));
        }
        const long long det = small_det(std::move(minor));
        normal[skip] = (skip % 2 == 0) ? det : -det;
    }
    return normal;
}

long long dot(const IntVector& a, const IntVector& b)
{
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

std::vector<IntVector> minimal_points(std::vector<IntVector> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
            if (j == i) {
                continue;
            }
            dominated = true;
            for (std::size_t c = 0; c < points[i].size(); ++c) {
                dominated = dominated && points[i][c] >= points[j][c];
            }
        }
        if (!dominated) {
            out.push_back(points[i]);
        }
    }
    return out;
}

} // namespace

std::vector<IntVector> facet_normals(std::vector<IntVector> points, std::size_t n)
{
    points = minimal_points(std::move(points));
    std::set<IntVector> normals;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        normals.insert(e);
    }

    // A facet is spanned by one point plus n-1 further points or orthant rays.
    std::vector<IntVector> items = points;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        items.push_back(e);
    }
    const std::size_t n_points = points.size();
    std::vector<std::size_t> pick(n);
    auto consider = [&] {
        const IntVector& base = items[pick[0]];
        std::vector<IntVector> dirs;
        for (std::size_t t = 1; t < n; ++t) {
            IntVector d = items[pick[t]];
            if (pick[t] < n_points) {
                for (std::size_t c = 0; c < n; ++c) {
                    d[c] -= base[c];
                }
            }
            dirs.push_back(std::move(d));
        }
        IntVector normal = cross_normal(dirs, n);
        const bool any_pos = std::any_of(normal.begin(), normal.end(), [](long long x) { return x > 0; });
        const bool any_neg = std::any_of(normal.begin(), normal.end(), [](long long x) { return x < 0; });
        if (any_pos == any_neg) {
            return; // zero normal or mixed signs: not a facet of an orthant-closed polyhedron
        }
        if (any_neg) {
            for (auto& x : normal) {
                x = -x;
            }
        }
        const long long level = dot(normal, base);
        for (const auto& p : points) {
            if (dot(normal, p) < level) {
                return;
            }
        }
        long long g = 0;
        for (long long x : normal) {
            g = std::gcd(g, x);
        }
        for (auto& x : normal) {
            x /= g;
        }
        normals.insert(std::move(normal));
    };

    // Lexicographic n-subsets of items whose smallest element is a point.
    for (std::size_t first = 0; first < n_points; ++first) {
        pick[0] = first;
        if (n == 1) {
            consider();
            continue;
        }
        std::vector<std::size_t> rest(n - 1);
        std::iota(rest.begin(), rest.end(), first + 1);
        if (rest.back() >= items.size()) {
            continue;
        }
        while (true) {
            std::copy(rest.begin(), rest.end(), pick.begin() + 1);
            consider();
            std::size_t t = rest.size();
            while (t > 0 && rest[t - 1] == items.size() - rest.size() + t - 1) {
                --t;
            }
            if (t == 0) {
                break;
            }
            ++rest[t - 1];
            for (std::size_t u = t; u < rest.size(); ++u) {
                rest[u] = rest[u - 1] + 1;
            }
        }
    }
    return {normals.begin(), normals.end()};
}

MixedPolyhedron::MixedPolyhedron(std::vector<MonomialIdeal> ideals) : ideals_(std::move(ideals))
{
    if (ideals_.empty()) {
        throw InputError("mixed polyhedron needs at least one ideal");
    }
    arity_ = ideals_[0].arity();
    if (arity_ > kMaxMonomialArity) {
        throw SizeError("Newton polyhedra are limited to " + std::to_string(kMaxMonomialArity)
                        + " variables, got " + std::to_string(arity_));
    }
    if (ideals_.size() > 16) {
        throw SizeError("mixed polyhedron supports at most 16 factors");
    }
    for (const auto& a : ideals_) {
        if (a.arity() != arity_) {
            throw InputError("all ideals of a product must share one arity");
        }
    }
}

const std::vector<IntVector>& MixedPolyhedron::normals_for(unsigned mask)
{
    auto it = cache_.find(mask);
    if (it != cache_.end()) {
        return it->second;
    }
    std::vector<IntVector> sums{IntVector(arity_, 0)};
    for (std::size_t i = 0; i < ideals_.size(); ++i) {
        if (!(mask & (1u << i))) {
            continue;
        }
        std::vector<IntVector> next;
        for (const auto& s : sums) {
            for (const auto& g : ideals_[i].generators()) {
                IntVector v = s;
                for (std::size_t c = 0; c < arity_; ++c) {
                    v[c] += g[c];
                }
                next.push_back(std::move(v));
            }
        }
        sums = minimal_points(std::move(next));
    }
    return cache_.emplace(mask, facet_normals(std::move(sums), arity_)).first->second;
}

std::vector<HalfSpace> MixedPolyhedron::inequalities(const std::vector<Rational>& exponents)
{
    if (exponents.size() != ideals_.size()) {
        throw InputError("exponent count does not match factor count");
    }
    unsigned mask = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0) {
            throw InputError("multiplier exponents must be nonnegative");
        }
        if (exponents[i] > 0) {
            mask |= 1u << i;
        }
    }
    std::vector<HalfSpace> out;
    for (const auto& normal : normals_for(mask)) {
        HalfSpace h;
        for (long long x : normal) {
            h.normal.emplace_back(static_cast<long>(x));
        }
        // Support function of a Minkowski sum is the weighted sum of supports.
        for (std::size_t i = 0; i < ideals_.size(); ++i) {
            if (exponents[i] == 0) {
                continue;
            }
            std::optional<long long> best;
            for (const auto& g : ideals_[i].generators()) {
                long long v = 0;
                for (std::size_t c = 0; c < arity_; ++c) {
                    v += normal[c] * g[c];
                }
                best = best ? std::min(*best, v) : v;
            }
            h.offset += exponents[i] * Rational(static_cast<long>(*best));
        }
        out.push_back(std::move(h));
    }
    return out;
}

MonomialIdeal MixedPolyhedron::multiplier_ideal(const std::vector<Rational>& exponents)
{
    const auto ineqs = inequalities(exponents);
    const std::size_t n = arity_;

    // Minimal generators satisfy v_i <= sum_j c_j max(a_j)_i, so this box is enough.
    std::vector<long> bound(n, 0);
    std::vector<Rational> corner(n);
    for (std::size_t i = 0; i < ideals_.size(); ++i) {
        const auto m = ideals_[i].generator_max();
        for (std::size_t c = 0; c < n; ++c) {
            corner[c] += exponents[i] * Rational(m[c]);
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        bound[c] = floor(corner[c]).get_si() + 1;
    }

    // Scan the first n-1 coordinates; the least admissible last coordinate is explicit:
    // a.(v+1) > b with a_last > 0 means v_last >= floor((b - rest) / a_last).
    std::vector<ExponentVector> found;
    ExponentVector v(n, 0);
    const std::size_t last = n - 1;
    while (true) {
        std::optional<Integer> least = Integer(0);
        for (const auto& h : ineqs) {
            Rational rest = 0;
            for (std::size_t c = 0; c < last; ++c) {
                rest += h.normal[c] * Rational(v[c] + 1);
            }
            if (h.normal[last] == 0) {
                if (rest <= h.offset) {
                    least.reset();
                    break;
                }
                continue;
            }
            const Integer need = floor((h.offset - rest) / h.normal[last]);
            if (need > *least) {
                least = need;
            }
        }
        if (least) {
            ExponentVector g = v;
            g[last] = least->get_si();
            found.push_back(std::move(g));
        }
        std::size_t c = 0;
        while (c < last && v[c] == bound[c]) {
            v[c] = 0;
            ++c;
        }
        if (c == last) {
            break;
        }
        ++v[c];
    }
    if (found.empty()) {
        throw std::logic_error("multiplier ideal scan found no generators");
    }
    return MonomialIdeal(n, std::move(found));
}

} // namespace detail

bool HalfSpace::is_coordinate_bound() const
{
    if (offset != 0) {
        return false;
    }
    int ones = 0;
    for (const auto& x : normal) {
        if (x == 1) {
            ++ones;
        } else if (x != 0) {
            return false;
        }
    }
    return ones == 1;
}

bool NewtonPolyhedron::contains(const std::vector<Rational>& x) const
{
    for (const auto& h : inequalities) {
        Rational s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            s += h.normal[i] * x[i];
        }
        if (s < h.offset) {
            return false;
        }
    }
    return true;
}

bool NewtonPolyhedron::interior_contains(const std::vector<Rational>& x) const
{
    for (const auto& h : inequalities) {
        Rational s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            s += h.normal[i] * x[i];
        }
        if (s <= h.offset) {
            return false;
        }
    }
    return true;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a)
{
    detail::MixedPolyhedron mixed({a});
    auto ineqs = mixed.inequalities({Rational(1)});
    std::stable_sort(ineqs.begin(), ineqs.end(), [](const HalfSpace& l, const HalfSpace& r) {
        return l.is_coordinate_bound() && !r.is_coordinate_bound();
    });
    return NewtonPolyhedron{a, std::move(ineqs)};
}

WeightedIdealProduct::WeightedIdealProduct(std::vector<WeightedFactor> factors) : factors_(std::move(factors))
{
    if (factors_.empty()) {
        throw InputError("weighted ideal product needs at least one factor");
    }
    arity_ = factors_[0].ideal.arity();
    for (const auto& f : factors_) {
        if (f.ideal.arity() != arity_) {
            throw InputError("all factors must share one arity");
        }
        if (f.exponent < 0) {
            throw InputError("factor exponent must be nonnegative, got " + to_string(f.exponent));
        }
    }
}

MonomialIdeal multiplier_ideal(const WeightedIdealProduct& product)
{
    std::vector<MonomialIdeal> ideals;
    std::vector<Rational> exponents;
    for (const auto& f : product.factors()) {
        ideals.push_back(f.ideal);
        exponents.push_back(f.exponent);
    }
    detail::MixedPolyhedron mixed(std::move(ideals));
    return mixed.multiplier_ideal(exponents);
}

Rational lct_monomial(const MonomialIdeal& a)
{
    if (a.is_unit()) {
        throw InputError("lct undefined/infinite for the unit ideal");
    }
    const auto poly = newton_polyhedron(a);
    std::optional<Rational> best;
    for (const auto& h : poly.inequalities) {
        if (h.offset <= 0) {
            continue;
        }
        Rational total = 0;
        for (const auto& x : h.normal) {
            total += x;
        }
        const Rational candidate = total / h.offset;
        if (!best || candidate < *best) {
            best = candidate;
        }
    }
    return *best;
}

} // namespace kstab
