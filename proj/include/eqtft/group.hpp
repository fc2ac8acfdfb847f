#pragma once

/**
 * @file group.hpp
 * @brief Finite groups as multiplication tables, homomorphisms, and a small catalog.
 *
 * Elements are indices 0..n-1. Every catalog group puts the identity at 0.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace eqtft {

using Elem = std::uint32_t;

class FiniteGroup {
public:
    FiniteGroup() : FiniteGroup(trivial()) {}

    /// Validates closure, associativity, identity and inverses on the full table.
    static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table, std::string name = {}) {
        const std::size_t n = table.size();
        if (n == 0) throw InvalidInput("group nonempty", "size 0");
        std::vector<Elem> mul(n * n);
        for (std::size_t a = 0; a < n; ++a) {
            if (table[a].size() != n)
                throw InvalidInput("square multiplication table", "row " + std::to_string(a) + " has length " +
                                                                      std::to_string(table[a].size()));
            for (std::size_t b = 0; b < n; ++b) {
                if (table[a][b] >= n)
                    throw InvalidInput("closure", "mul[" + std::to_string(a) + "][" + std::to_string(b) +
                                                      "] = " + std::to_string(table[a][b]));
                mul[a * n + b] = table[a][b];
            }
        }
        return FiniteGroup(std::move(name), n, std::move(mul), true);
    }

    static FiniteGroup trivial() { return FiniteGroup("1", 1, {0}, false); }

    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return n_; }
    Elem identity() const noexcept { return identity_; }

    Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
    Elem inv(Elem a) const { return inv_[a]; }
    /// h g h^-1
    Elem conj(Elem h, Elem g) const { return mul(mul(h, g), inv(h)); }
    /// a b a^-1 b^-1
    Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

    Elem pow(Elem a, std::int64_t k) const {
        if (k < 0) return pow(inv(a), -k);
        Elem r = identity_;
        for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }

    std::size_t element_order(Elem a) const {
        std::size_t k = 1;
        for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
        return k;
    }

    bool is_abelian() const {
        for (Elem a = 0; a < n_; ++a)
            for (Elem b = 0; b < n_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    std::vector<Elem> centralizer(Elem g) const {
        std::vector<Elem> c;
        for (Elem h = 0; h < n_; ++h)
            if (mul(h, g) == mul(g, h)) c.push_back(h);
        return c;
    }

    /// Conjugacy classes ordered by smallest member; each class sorted.
    std::vector<std::vector<Elem>> conjugacy_classes() const {
        std::vector<int> seen(n_, 0);
        std::vector<std::vector<Elem>> classes;
        for (Elem g = 0; g < n_; ++g) {
            if (seen[g]) continue;
            std::vector<Elem> cls;
            for (Elem h = 0; h < n_; ++h) {
                const Elem c = conj(h, g);
                if (!seen[c]) {
                    seen[c] = 1;
                    cls.push_back(c);
                }
            }
            std::sort(cls.begin(), cls.end());
            classes.push_back(std::move(cls));
        }
        return classes;
    }

    /// Subgroup generated by the given elements, sorted.
    std::vector<Elem> generated_subgroup(const std::vector<Elem>& gens) const {
        std::vector<int> in(n_, 0);
        std::vector<Elem> members{identity_};
        in[identity_] = 1;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Elem s : gens) {
                const Elem x = mul(members[i], s);
                if (!in[x]) {
                    in[x] = 1;
                    members.push_back(x);
                }
            }
        std::sort(members.begin(), members.end());
        return members;
    }

    /// Greedy generating set: repeatedly adds the smallest element outside the span.
    std::vector<Elem> generators() const {
        std::vector<Elem> gens;
        std::vector<Elem> span{identity_};
        while (span.size() < n_) {
            Elem next = 0;
            while (std::binary_search(span.begin(), span.end(), next)) ++next;
            gens.push_back(next);
            span = generated_subgroup(gens);
        }
        return gens;
    }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.mul_ == b.mul_; }

    const std::vector<Elem>& table() const noexcept { return mul_; }

private:
    FiniteGroup(std::string name, std::size_t n, std::vector<Elem> mul, bool validate)
        : name_(std::move(name)), n_(n), mul_(std::move(mul)), inv_(n) {
        // identity: the unique e with e*a = a for all a
        bool found = false;
        for (Elem e = 0; e < n_ && !found; ++e) {
            bool ok = true;
            for (Elem a = 0; a < n_ && ok; ++a) ok = this->mul(e, a) == a && this->mul(a, e) == a;
            if (ok) {
                identity_ = e;
                found = true;
            }
        }
        if (!found) throw InvalidInput("identity element", "no two-sided identity in table");
        for (Elem a = 0; a < n_; ++a) {
            bool has = false;
            for (Elem b = 0; b < n_ && !has; ++b)
                if (this->mul(a, b) == identity_ && this->mul(b, a) == identity_) {
                    inv_[a] = b;
                    has = true;
                }
            if (!has) throw InvalidInput("inverse", "element " + std::to_string(a) + " has no inverse");
        }
        if (!validate) return;
        for (Elem a = 0; a < n_; ++a)
            for (Elem b = 0; b < n_; ++b)
                for (Elem c = 0; c < n_; ++c)
                    if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c)))
                        throw InvalidInput("associativity", "(" + std::to_string(a) + "*" + std::to_string(b) +
                                                                ")*" + std::to_string(c) + " != " +
                                                                std::to_string(a) + "*(" + std::to_string(b) +
                                                                "*" + std::to_string(c) + ")");
    }

    std::string name_;
    std::size_t n_ = 1;
    std::vector<Elem> mul_;
    std::vector<Elem> inv_;
    Elem identity_ = 0;
};

/// A homomorphism given by its image table.
class GroupHom {
public:
    GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> images)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
        if (images_.size() != domain_.size())
            throw InvalidInput("hom table covers the domain", "expected " + std::to_string(domain_.size()) +
                                                                 " images, got " + std::to_string(images_.size()));
        for (Elem a = 0; a < images_.size(); ++a)
            if (images_[a] >= codomain_.size())
                throw InvalidInput("hom image in codomain", "image of " + std::to_string(a) + " is " +
                                                                std::to_string(images_[a]));
        for (Elem a = 0; a < domain_.size(); ++a)
            for (Elem b = 0; b < domain_.size(); ++b)
                if ((*this)(domain_.mul(a, b)) != codomain_.mul((*this)(a), (*this)(b)))
                    throw InvalidInput("hom preserves multiplication",
                                       "pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        if ((*this)(domain_.identity()) != codomain_.identity())
            throw InvalidInput("hom preserves identity", "image of identity is " +
                                                             std::to_string((*this)(domain_.identity())));
    }

    static GroupHom identity(const FiniteGroup& g) {
        std::vector<Elem> img(g.size());
        std::iota(img.begin(), img.end(), Elem{0});
        return GroupHom(g, g, std::move(img));
    }

    static GroupHom to_trivial(const FiniteGroup& g) {
        return GroupHom(g, FiniteGroup::trivial(), std::vector<Elem>(g.size(), 0));
    }

    static GroupHom from_trivial(const FiniteGroup& g) { return GroupHom(FiniteGroup::trivial(), g, {g.identity()}); }

    const FiniteGroup& domain() const noexcept { return domain_; }
    const FiniteGroup& codomain() const noexcept { return codomain_; }
    const std::vector<Elem>& images() const noexcept { return images_; }
    Elem operator()(Elem a) const { return images_[a]; }

    bool is_injective() const {
        std::vector<int> hit(codomain_.size(), 0);
        for (Elem x : images_)
            if (hit[x]++) return false;
        return true;
    }
    bool is_surjective() const {
        std::vector<int> hit(codomain_.size(), 0);
        for (Elem x : images_) hit[x] = 1;
        return std::all_of(hit.begin(), hit.end(), [](int h) { return h != 0; });
    }

    std::vector<Elem> kernel() const {
        std::vector<Elem> k;
        for (Elem a = 0; a < domain_.size(); ++a)
            if (images_[a] == codomain_.identity()) k.push_back(a);
        return k;
    }

    std::vector<Elem> image() const {
        std::vector<Elem> im(images_);
        std::sort(im.begin(), im.end());
        im.erase(std::unique(im.begin(), im.end()), im.end());
        return im;
    }

    friend bool operator==(const GroupHom&, const GroupHom&) = default;

private:
    FiniteGroup domain_;
    FiniteGroup codomain_;
    std::vector<Elem> images_;
};

/// mu after lambda.
inline GroupHom compose(const GroupHom& mu, const GroupHom& lambda) {
    if (!(lambda.codomain() == mu.domain())) throw InvalidInput("composable homs", "codomain/domain mismatch");
    std::vector<Elem> img(lambda.domain().size());
    for (Elem a = 0; a < img.size(); ++a) img[a] = mu(lambda(a));
    return GroupHom(lambda.domain(), mu.codomain(), std::move(img));
}

/// All homomorphisms G -> H, ordered lexicographically by generator images.
inline std::vector<GroupHom> enumerate_homs(const FiniteGroup& g, const FiniteGroup& h) {
    const auto gens = g.generators();
    std::vector<GroupHom> out;
    std::vector<Elem> choice(gens.size(), 0);
    const std::size_t n = g.size();
    while (true) {
        std::vector<Elem> img(n, 0);
        std::vector<int> set(n, 0);
        img[g.identity()] = h.identity();
        set[g.identity()] = 1;
        std::vector<Elem> queue{g.identity()};
        bool ok = true;
        for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
            const Elem x = queue[qi];
            for (std::size_t i = 0; i < gens.size() && ok; ++i) {
                const Elem y = g.mul(x, gens[i]);
                const Elem iy = h.mul(img[x], choice[i]);
                if (!set[y]) {
                    set[y] = 1;
                    img[y] = iy;
                    queue.push_back(y);
                } else if (img[y] != iy) {
                    ok = false;
                }
            }
        }
        if (ok) out.emplace_back(g, h, std::move(img));
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == h.size()) choice[pos++] = 0;
        if (pos == choice.size()) break;
    }
    return out;
}

/// Some isomorphism G -> H as an image table, or nullopt.
inline std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
    if (g.size() != h.size()) return std::nullopt;
    auto order_profile = [](const FiniteGroup& x) {
        std::vector<std::size_t> p;
        for (Elem a = 0; a < x.size(); ++a) p.push_back(x.element_order(a));
        std::sort(p.begin(), p.end());
        return p;
    };
    if (order_profile(g) != order_profile(h)) return std::nullopt;
    for (const auto& hom : enumerate_homs(g, h))
        if (hom.is_injective()) return hom.images();
    return std::nullopt;
}

namespace groups {

inline FiniteGroup cyclic(std::size_t n) {
    if (n == 0) throw InvalidInput("cyclic order positive", "n = 0");
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Elem>((a + b) % n);
    return FiniteGroup::from_table(t, "Z" + std::to_string(n));
}

/// Permutations of {0..n-1} in lexicographic order; composition (p*q)(i) = p(q(i)).
inline FiniteGroup symmetric(std::size_t n) {
    if (n == 0 || n > 5) throw InvalidInput("symmetric degree in 1..5", "n = " + std::to_string(n));
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](const std::vector<int>& q) {
        return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<Elem>> t(perms.size(), std::vector<Elem>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<int> c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
            t[a][b] = index(c);
        }
    return FiniteGroup::from_table(t, "S" + std::to_string(n));
}

/// Dihedral group of order 2n: r^k s^j at index k + n j, with s r s = r^-1.
inline FiniteGroup dihedral(std::size_t n) {
    std::vector<std::vector<Elem>> t(2 * n, std::vector<Elem>(2 * n));
    for (std::size_t a = 0; a < 2 * n; ++a)
        for (std::size_t b = 0; b < 2 * n; ++b) {
            const std::size_t k1 = a % n, j1 = a / n, k2 = b % n, j2 = b / n;
            const std::size_t k = j1 == 0 ? (k1 + k2) % n : (k1 + n - k2) % n;
            t[a][b] = static_cast<Elem>(k + n * ((j1 + j2) % 2));
        }
    return FiniteGroup::from_table(t, "D" + std::to_string(n));
}

/// Quaternion group: 1, i, j, k, -1, -i, -j, -k.
inline FiniteGroup quaternion() {
    // unit table for basis 1, i, j, k as (sign, index)
    const int unit[4][4][2] = {{{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                               {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
                               {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
                               {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
    std::vector<std::vector<Elem>> t(8, std::vector<Elem>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const int sa = a < 4 ? 1 : -1, sb = b < 4 ? 1 : -1;
            const auto& u = unit[a % 4][b % 4];
            const int s = sa * sb * u[0];
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<Elem>(u[1] + (s > 0 ? 0 : 4));
        }
    return FiniteGroup::from_table(t, "Q8");
}

/// (a, b) at index a * |B| + b.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t n = a.size() * b.size();
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            t[x][y] = static_cast<Elem>(a.mul(static_cast<Elem>(x / b.size()), static_cast<Elem>(y / b.size())) *
                                            b.size() +
                                        b.mul(static_cast<Elem>(x % b.size()), static_cast<Elem>(y % b.size())));
    return FiniteGroup::from_table(t, a.name() + "x" + b.name());
}

/// Parses "1", "Zn", "Sn", "Dn", "Q8" and products joined by 'x' (e.g. "Z2xZ2").
inline FiniteGroup by_name(const std::string& name) {
    const auto cross = name.find('x');
    if (cross != std::string::npos)
        return direct_product(by_name(name.substr(0, cross)), by_name(name.substr(cross + 1)));
    auto number = [&](std::size_t from) -> std::size_t {
        if (name.size() <= from) throw InvalidInput("known group name", "'" + name + "'");
        for (std::size_t i = from; i < name.size(); ++i)
            if (name[i] < '0' || name[i] > '9') throw InvalidInput("known group name", "'" + name + "'");
        return std::stoul(name.substr(from));
    };
    if (name == "1") return FiniteGroup::trivial();
    if (name == "Q8") return quaternion();
    if (!name.empty() && name[0] == 'Z') return cyclic(number(1));
    if (!name.empty() && name[0] == 'S') return symmetric(number(1));
    if (!name.empty() && name[0] == 'D') return dihedral(number(1));
    throw InvalidInput("known group name", "'" + name + "'");
}

/// The groups every catalog-wide check runs over.
inline std::vector<FiniteGroup> builtins() {
    std::vector<FiniteGroup> out;
    for (const char* n : {"1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "S3", "D4", "Q8", "Z2xZ2xZ2", "S4"})
        out.push_back(by_name(n));
    return out;
}

}  // namespace groups

}  // namespace eqtft
