#include "cohom/case_tag.hpp"

#include <algorithm>

namespace cohom {

Singular make_singular(unsigned k, const MultiIndex& t)
{
    Singular tag;
    tag.k = k;
    tag.t = t;
    tag.sigma = t.total();
    tag.m = static_cast<long>(tag.sigma) - static_cast<long>(k);
    const auto& e = t.entries();
    auto count = [&](auto pred) { return static_cast<unsigned>(std::count_if(e.begin(), e.end(), pred)); };
    if (tag.m == 0) {
        tag.s = count([](unsigned ti) { return ti >= 1; });
    } else if (tag.m == 1) {
        tag.s = count([](unsigned ti) { return ti >= 1; });
        tag.r = count([](unsigned ti) { return ti == 1; });
    } else if (tag.m >= 2) {
        const auto m = static_cast<unsigned>(tag.m);
        tag.s = count([m](unsigned ti) { return ti > m; });
    }
    return tag;
}

CaseTag classify(const Weights& w)
{
    const auto k = w.delta_natural();
    if (!k)
        return NonIntegerDelta{};
    const auto t = w.t_vector();
    if (!t || std::any_of(t->begin(), t->end(), [&](unsigned ti) { return ti >= *k; }))
        return NonResonant{*k};
    return make_singular(*k, MultiIndex(*t));
}

std::string case_name(const CaseTag& tag)
{
    struct {
        std::string operator()(const NonIntegerDelta&) const { return "delta-not-natural"; }
        std::string operator()(const NonResonant&) const { return "nonresonant"; }
        std::string operator()(const Singular&) const { return "singular"; }
    } visitor;
    return std::visit(visitor, tag);
}

std::optional<unsigned> tag_k(const CaseTag& tag)
{
    if (const auto* nr = std::get_if<NonResonant>(&tag))
        return nr->k;
    if (const auto* s = std::get_if<Singular>(&tag))
        return s->k;
    return std::nullopt;
}

} // namespace cohom
