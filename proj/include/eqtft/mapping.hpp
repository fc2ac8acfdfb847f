#pragma once

/**
 * @file mapping.hpp
 * @brief Finite models of G-bundles on surfaces as homomorphism tuples.
 *
 * A model stores the tuples (images of the standard fundamental-group
 * generators) and G acting by simultaneous conjugation. Orbits are computed
 * eagerly; the action groupoid itself is built on first request.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "config.hpp"
#include "groupoid.hpp"

namespace eqtft {

struct SurfaceSpec {
    enum class Kind { kCircle, kClosed, kPants, kCylinder, kDisk };
    Kind kind = Kind::kCircle;
    int genus = 0;

    static SurfaceSpec circle() { return {Kind::kCircle, 0}; }
    static SurfaceSpec closed(int g) {
        if (g < 0) throw InvalidInput("genus >= 0", "genus " + std::to_string(g));
        return {Kind::kClosed, g};
    }
    static SurfaceSpec pants() { return {Kind::kPants, 0}; }
    static SurfaceSpec cylinder() { return {Kind::kCylinder, 0}; }
    static SurfaceSpec disk() { return {Kind::kDisk, 0}; }

    /// "circle", "genus:g", "pants", "cylinder" or "disk".
    static SurfaceSpec parse(const std::string& text) {
        if (text == "circle") return circle();
        if (text == "pants") return pants();
        if (text == "cylinder") return cylinder();
        if (text == "disk") return disk();
        if (text.rfind("genus:", 0) == 0) {
            std::size_t pos = 0;
            int g = -1;
            try {
                g = std::stoi(text.substr(6), &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos == 0 || pos != text.size() - 6) throw InvalidInput("surface syntax", "'" + text + "'");
            return closed(g);
        }
        throw InvalidInput("supported surface kind", "'" + text + "'");
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::kCircle: return "circle";
            case Kind::kClosed: return "genus:" + std::to_string(genus);
            case Kind::kPants: return "pants";
            case Kind::kCylinder: return "cylinder";
            case Kind::kDisk: return "disk";
        }
        return "?";
    }

    /// Number of group elements in a tuple.
    std::size_t tuple_length() const {
        switch (kind) {
            case Kind::kClosed: return static_cast<std::size_t>(2 * genus);
            case Kind::kPants: return 2;
            case Kind::kDisk: return 0;
            default: return 1;
        }
    }

    friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

class MappingModel {
public:
    MappingModel(const FiniteGroup& g, SurfaceSpec surface, const RunConfig& config = {})
        : group_(g), surface_(surface), len_(surface.tuple_length()) {
        config.validate();
        enumerate(config);
        for (std::size_t i = 0; i < size(); ++i) index_.emplace(key(tuple(i)), static_cast<std::uint32_t>(i));
        compute_orbits();
    }

    const FiniteGroup& group() const noexcept { return group_; }
    const SurfaceSpec& surface() const noexcept { return surface_; }
    std::size_t tuple_length() const noexcept { return len_; }
    std::size_t size() const noexcept { return len_ == 0 ? 1 : tuples_.size() / len_; }

    std::span<const Elem> tuple(std::size_t i) const {
        return std::span<const Elem>(tuples_.data() + i * len_, len_);
    }

    /// Index of a tuple, or SIZE_MAX if it is not an object of the model.
    std::size_t find(std::span<const Elem> t) const {
        if (t.size() != len_) return SIZE_MAX;
        const auto it = index_.find(key(t));
        return it == index_.end() ? SIZE_MAX : it->second;
    }

    /// Index of h.t = (h t_1 h^-1, ...).
    std::size_t conjugate(Elem h, std::size_t i) const {
        std::vector<Elem> c(len_);
        const auto t = tuple(i);
        for (std::size_t k = 0; k < len_; ++k) c[k] = group_.conj(h, t[k]);
        return find(c);
    }

    std::size_t num_orbits() const noexcept { return orbit_reps_.size(); }
    const std::vector<std::size_t>& orbit_representatives() const noexcept { return orbit_reps_; }
    std::size_t orbit_of(std::size_t i) const { return orbit_of_[i]; }
    std::size_t orbit_size(std::size_t orbit) const { return orbit_size_[orbit]; }
    /// Size of the simultaneous centralizer of tuple i.
    std::size_t stabilizer_size(std::size_t i) const { return group_.size() / orbit_size_[orbit_of_[i]]; }

    /// |X|/|G| without building the groupoid.
    Rational cardinality() const {
        return Rational(static_cast<Rational::Int>(size()), static_cast<Rational::Int>(group_.size()));
    }

    /// The action groupoid X//G; morphism (h, x) at x*|G| + h.
    const GroupoidPtr& groupoid() const {
        std::call_once(built_->flag, [this] {
            built_->groupoid = groupoids::action(group_, size(), [this](Elem h, std::size_t x) { return conjugate(h, x); });
        });
        return built_->groupoid;
    }

private:
    static std::uint64_t key_of(std::span<const Elem> t, std::size_t n) {
        std::uint64_t k = 0;
        for (Elem e : t) k = k * n + e;
        return k;
    }
    std::uint64_t key(std::span<const Elem> t) const { return key_of(t, group_.size()); }

    void enumerate(const RunConfig& config) {
        const std::size_t n = group_.size();
        long double work = 1;
        for (std::size_t k = 0; k < len_; ++k) work *= static_cast<long double>(n);
        if (work > static_cast<long double>(config.budget))
            throw BudgetExceeded("enumerating " + surface_.to_string() + " over a group of order " + std::to_string(n) +
                                 " needs |G|^" + std::to_string(len_) + " candidates, budget is " +
                                 std::to_string(config.budget));
        if (len_ == 0) return;
        if (surface_.kind != SurfaceSpec::Kind::kClosed) {
            // free fundamental group: every tuple is a homomorphism
            tuples_.resize(static_cast<std::size_t>(work) * len_);
            std::vector<Elem> t(len_, 0);
            for (std::size_t i = 0; i < static_cast<std::size_t>(work); ++i) {
                std::copy(t.begin(), t.end(), tuples_.begin() + static_cast<std::ptrdiff_t>(i * len_));
                for (std::size_t k = len_; k-- > 0;) {
                    if (++t[k] < n) break;
                    t[k] = 0;
                }
            }
            return;
        }
        // closed genus g: backtrack over pairs, prefix product carried along,
        // last pair checked against the relator
        const unsigned width = std::max(1u, std::min<unsigned>(config.width, static_cast<unsigned>(n)));
        std::vector<std::vector<Elem>> parts(n);
        auto work_on = [&](Elem first) {
            std::vector<Elem> t(len_);
            t[0] = first;
            auto rec = [&](auto& self, std::size_t pos, Elem prefix) -> void {
                if (pos == len_) {
                    if (prefix == group_.identity()) parts[first].insert(parts[first].end(), t.begin(), t.end());
                    return;
                }
                const std::size_t pair_end = pos + 2;
                for (Elem a = (pos == 0 ? first : 0); a < (pos == 0 ? first + 1 : n); ++a) {
                    t[pos] = a;
                    for (Elem b = 0; b < n; ++b) {
                        t[pos + 1] = b;
                        self(self, pair_end, group_.mul(prefix, group_.commutator(a, b)));
                    }
                }
            };
            rec(rec, 0, group_.identity());
        };
        if (width == 1) {
            for (Elem a = 0; a < n; ++a) work_on(a);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < width; ++w)
                pool.emplace_back([&, w] {
                    for (Elem a = w; a < n; a += width) work_on(a);
                });
            for (auto& th : pool) th.join();
        }
        for (const auto& p : parts) tuples_.insert(tuples_.end(), p.begin(), p.end());
    }

    void compute_orbits() {
        const std::size_t m = size();
        orbit_of_.assign(m, SIZE_MAX);
        for (std::size_t i = 0; i < m; ++i) {
            if (orbit_of_[i] != SIZE_MAX) continue;
            const std::size_t o = orbit_reps_.size();
            orbit_reps_.push_back(i);
            std::size_t count = 0;
            for (Elem h = 0; h < group_.size(); ++h) {
                const std::size_t j = len_ == 0 ? 0 : conjugate(h, i);
                if (orbit_of_[j] == SIZE_MAX) {
                    orbit_of_[j] = o;
                    ++count;
                }
            }
            orbit_size_.push_back(count);
        }
    }

    struct Lazy {
        std::once_flag flag;
        GroupoidPtr groupoid;
    };

    FiniteGroup group_;
    SurfaceSpec surface_;
    std::size_t len_;
    std::vector<Elem> tuples_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<std::size_t> orbit_of_;
    std::vector<std::size_t> orbit_reps_;
    std::vector<std::size_t> orbit_size_;
    std::shared_ptr<Lazy> built_ = std::make_shared<Lazy>();
};

using ModelPtr = std::shared_ptr<const MappingModel>;

inline ModelPtr mapping_groupoid(SurfaceSpec surface, const FiniteGroup& g, const RunConfig& config = {}) {
    return std::make_shared<const MappingModel>(g, surface, config);
}

/// Memoizes models by group table and surface.
class ModelCache {
public:
    explicit ModelCache(RunConfig config = {}) : config_(config) {}

    ModelPtr get(const FiniteGroup& g, SurfaceSpec surface) {
        std::lock_guard lock(mutex_);
        auto k = std::make_pair(g.table(), surface.to_string());
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        auto m = mapping_groupoid(surface, g, config_);
        cache_.emplace(std::move(k), m);
        return m;
    }

    const RunConfig& config() const noexcept { return config_; }

private:
    RunConfig config_;
    std::mutex mutex_;
    std::map<std::pair<std::vector<Elem>, std::string>, ModelPtr> cache_;
};

/// lambda_* : model over G -> model over H, entrywise on tuples and conjugators.
inline GroupoidFunctor induced_functor(const GroupHom& lambda, const MappingModel& from, const MappingModel& to) {
    if (!(from.surface() == to.surface())) throw InvalidInput("same surface", "surfaces differ");
    if (!(from.group() == lambda.domain()) || !(to.group() == lambda.codomain()))
        throw InvalidInput("models over the hom's groups", "group mismatch");
    std::vector<ObjId> objs(from.size());
    std::vector<Elem> img(from.tuple_length());
    for (std::size_t i = 0; i < objs.size(); ++i) {
        const auto t = from.tuple(i);
        for (std::size_t k = 0; k < img.size(); ++k) img[k] = lambda(t[k]);
        objs[i] = to.find(img);
        if (objs[i] == SIZE_MAX) throw Error("image tuple missing from target model");
    }
    return functors::between_actions(from.groupoid(), from.group(), to.groupoid(), lambda, objs, Validation::kTrusted);
}

/// Restriction to a boundary circle, with the circle model(s) it lands in.
struct BoundaryLeg {
    GroupoidFunctor functor;
    GroupoidPtr circle_model;
};

/// Labels: pants "in" (both incoming circles, into G//G x G//G) and "out"
/// (multiplication (a, b) -> ab); cylinder "in" and "out"; disk "boundary".
inline BoundaryLeg boundary_restriction(const MappingModel& model, const std::string& label) {
    const auto& g = model.group();
    const std::size_t n = g.size();
    const auto circle = groupoids::conjugation(g);
    const auto& dom = model.groupoid();
    switch (model.surface().kind) {
        case SurfaceSpec::Kind::kPants: {
            if (label == "out") {
                std::vector<ObjId> o(model.size());
                for (std::size_t i = 0; i < o.size(); ++i) o[i] = g.mul(model.tuple(i)[0], model.tuple(i)[1]);
                return {functors::between_actions(dom, g, circle, GroupHom::identity(g), o), circle};
            }
            if (label == "in") {
                auto two = groupoids::product(*circle, *circle);
                std::vector<ObjId> o(model.size());
                for (std::size_t i = 0; i < o.size(); ++i) o[i] = model.tuple(i)[0] * n + model.tuple(i)[1];
                std::vector<MorId> m(dom->num_morphisms());
                const std::size_t cm = circle->num_morphisms();
                for (MorId f = 0; f < m.size(); ++f) {
                    const auto t = model.tuple(dom->source(f));
                    const Elem h = static_cast<Elem>(f % n);
                    m[f] = groupoids::action_morphism(g, t[0], h) * cm + groupoids::action_morphism(g, t[1], h);
                }
                return {GroupoidFunctor(dom, two, std::move(o), std::move(m)), two};
            }
            break;
        }
        case SurfaceSpec::Kind::kCylinder:
        case SurfaceSpec::Kind::kCircle: {
            if (label == "in" || label == "out") {
                std::vector<ObjId> o(model.size());
                for (std::size_t i = 0; i < o.size(); ++i) o[i] = model.tuple(i)[0];
                return {functors::between_actions(dom, g, circle, GroupHom::identity(g), o), circle};
            }
            break;
        }
        case SurfaceSpec::Kind::kDisk: {
            if (label == "boundary")
                return {functors::between_actions(dom, g, circle, GroupHom::identity(g), {g.identity()}), circle};
            break;
        }
        case SurfaceSpec::Kind::kClosed: break;
    }
    throw InvalidInput("boundary label of the surface", "'" + label + "' on " + model.surface().to_string());
}

}  // namespace eqtft
