#include "wlp/subset.hpp"

#include "wlp/errors.hpp"

namespace wlp {

namespace {

// Thrown from inside a visitor to stop an unbounded sweep.
struct StopSweep {};

}  // namespace

SubsetSpec SubsetSpec::naturals(const Group& group) {
    if (!group.is_lattice() || group.rank() != 1) throw UsageError("the naturals subset is defined on Z only");
    return SubsetSpec(Kind::Naturals, group);
}

SubsetSpec SubsetSpec::whole_group(const Group& group) { return SubsetSpec(Kind::WholeGroup, group); }

SubsetSpec SubsetSpec::powers(const Group& group, GroupElement g) {
    group.require(g);
    SubsetSpec s(Kind::Powers, group);
    s.base_ = std::move(g);
    return s;
}

SubsetSpec SubsetSpec::explicit_list(const Group& group, std::vector<GroupElement> elements) {
    for (const auto& g : elements) group.require(g);
    SubsetSpec s(Kind::Explicit, group);
    s.listed_ = std::make_shared<const FiniteSet>(std::move(elements));
    return s;
}

SubsetSpec SubsetSpec::semigroup(const Group& group, std::vector<GroupElement> generators, unsigned max_depth) {
    if (generators.empty()) throw ValidationError("a semigroup subset needs at least one generator");
    for (const auto& g : generators) group.require(g);
    SubsetSpec s(Kind::Semigroup, group);
    s.generators_ = std::move(generators);
    s.max_depth_ = max_depth;

    FiniteSet members;
    members.insert(group.identity());
    std::vector<GroupElement> frontier{group.identity()};
    for (unsigned depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
        std::vector<GroupElement> next;
        for (const auto& w : frontier) {
            for (const auto& gen : s.generators_) {
                GroupElement product = group.multiply(w, gen);
                if (members.insert(product)) next.push_back(std::move(product));
                if (members.size() > group.cap()) {
                    throw ResourceError("semigroup enumeration to depth " + std::to_string(max_depth) +
                                        " exceeds the enumeration cap of " + std::to_string(group.cap()));
                }
            }
        }
        frontier = std::move(next);
    }
    s.listed_ = std::make_shared<const FiniteSet>(std::move(members));
    return s;
}

std::size_t SubsetSpec::enumerate(std::size_t horizon, const std::function<bool(const GroupElement&)>& visit) const {
    std::size_t count = 0;
    auto emit = [&](const GroupElement& g) {
        if (count >= horizon) return false;
        ++count;
        return visit(g);
    };
    switch (kind_) {
        case Kind::Naturals:
            for (long long n = 1; count < horizon; ++n) {
                if (!emit(LatticePoint{n})) break;
            }
            break;
        case Kind::Powers: {
            GroupElement cur = base_;
            while (count < horizon) {
                if (!emit(cur)) break;
                cur = group_.multiply(cur, base_);
            }
            break;
        }
        case Kind::Explicit:
        case Kind::Semigroup:
            for (const auto& g : *listed_) {
                if (!emit(g)) break;
            }
            break;
        case Kind::WholeGroup:
            try {
                for (unsigned r = 0; count < horizon; ++r) {
                    group_.for_each_in_sphere(r, [&](const GroupElement& g) {
                        if (!emit(group_.is_lattice() ? group_.invert(g) : g)) throw StopSweep{};
                    });
                }
            } catch (const StopSweep&) {
            }
            break;
    }
    return count;
}

std::vector<GroupElement> SubsetSpec::take(std::size_t count) const {
    std::vector<GroupElement> out;
    enumerate(count, [&](const GroupElement& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

bool SubsetSpec::contains(const GroupElement& g) const {
    if (!group_.contains(g)) return false;
    switch (kind_) {
        case Kind::Naturals: return std::get<LatticePoint>(g).coords[0] >= 1;
        case Kind::WholeGroup: return true;
        case Kind::Explicit:
        case Kind::Semigroup: return listed_->contains(g);
        case Kind::Powers: {
            if (base_ == group_.identity()) return g == base_;
            // |base^n| = 2m + n c for n >= 1 in both group kinds.
            BigInt l1 = group_.word_length(base_);
            BigInt c = group_.word_length(group_.multiply(base_, base_)) - l1;
            BigInt offset = l1 - c;
            BigInt rest = group_.word_length(g) - offset;
            if (c <= 0 || rest < c || rest % c != 0) return false;
            return group_.power(base_, rest / c) == g;
        }
    }
    return false;
}

bool SubsetSpec::finite() const noexcept { return kind_ == Kind::Explicit || kind_ == Kind::Semigroup; }

std::string SubsetSpec::describe() const {
    switch (kind_) {
        case Kind::Naturals: return "naturals";
        case Kind::WholeGroup: return "whole group " + group_.name();
        case Kind::Powers: return "powers of " + to_string(base_);
        case Kind::Explicit: return "explicit list of " + std::to_string(listed_->size());
        case Kind::Semigroup: {
            std::string out = "semigroup<";
            for (std::size_t i = 0; i < generators_.size(); ++i) {
                if (i) out += ", ";
                out += to_string(generators_[i]);
            }
            return out + "> to depth " + std::to_string(max_depth_);
        }
    }
    return "?";
}

}  // namespace wlp
