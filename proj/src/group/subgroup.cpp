#include <algorithm>
#include <deque>

#include "kazhdan/error.hpp"
#include "kazhdan/group.hpp"

namespace kazhdan::group {

Subgroup::Subgroup(GroupPtr parent, std::vector<std::size_t> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    if (!parent_) throw InputError("subgroup needs a parent group");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    member_.assign(parent_->order(), 0);
    for (std::size_t g : elements_) {
        if (g >= parent_->order()) throw InputError("subgroup element out of range");
        member_[g] = 1;
    }
}

bool Subgroup::contains(std::size_t g) const { return g < member_.size() && member_[g]; }

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<std::size_t>& generators) {
    std::vector<std::size_t> gens;
    for (std::size_t s : generators) {
        if (s >= g->order()) throw InputError("generator index out of range");
        if (s != g->identity()) gens.push_back(s);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<char> seen(g->order(), 0);
    std::vector<std::size_t> elements{g->identity()};
    seen[g->identity()] = 1;
    for (std::size_t cur = 0; cur < elements.size(); ++cur) {
        for (std::size_t s : gens) {
            const std::size_t next = g->mult(elements[cur], s);
            if (!seen[next]) {
                seen[next] = 1;
                elements.push_back(next);
            }
        }
    }
    return Subgroup(g, std::move(elements));
}

Subgroup subgroup_join(const GroupPtr& g, const std::vector<Subgroup>& parts) {
    std::vector<std::size_t> gens;
    for (const auto& h : parts) {
        if (h.parent() != g) throw InputError("subgroup belongs to a different group");
        gens.insert(gens.end(), h.elements().begin(), h.elements().end());
    }
    return subgroup_closure(g, gens);
}

Subgroup whole_group(const GroupPtr& g) {
    std::vector<std::size_t> all(g->order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return Subgroup(g, std::move(all));
}

bool generates(const GroupPtr& g, const std::vector<Subgroup>& parts) {
    return subgroup_join(g, parts).order() == g->order();
}

bool is_normal(const Subgroup& h) {
    const auto& g = h.parent();
    for (std::size_t x = 0; x < g->order(); ++x)
        for (std::size_t e : h.elements())
            if (!h.contains(g->mult(g->mult(x, e), g->inverse(x)))) return false;
    return true;
}

bool commute(const Subgroup& a, const Subgroup& b) {
    const auto& g = a.parent();
    for (std::size_t x : a.elements())
        for (std::size_t y : b.elements())
            if (g->mult(x, y) != g->mult(y, x)) return false;
    return true;
}

bool is_abelian(const Subgroup& h) { return commute(h, h); }

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
    if (a.parent() != b.parent()) throw InputError("subgroups belong to different groups");
    const auto& g = a.parent();
    std::vector<std::size_t> gens;
    for (std::size_t x : a.elements())
        for (std::size_t y : b.elements()) gens.push_back(g->commutator(x, y));
    return subgroup_closure(g, gens);
}

}  // namespace kazhdan::group
