#include "cohom/closed_form.hpp"

#include <algorithm>

namespace cohom {

Rational base_dimension(unsigned n, unsigned k)
{
    return Rational(multiset_coeff(static_cast<long>(n) - 1, k));
}

std::optional<Rational> dim_h2_closed_form(const CaseTag& tag, unsigned n)
{
    if (std::holds_alternative<NonIntegerDelta>(tag))
        return Rational(0);
    if (const auto* nr = std::get_if<NonResonant>(&tag))
        return base_dimension(n, nr->k);

    const auto& sg = std::get<Singular>(tag);
    if (sg.t.size() != n)
        return std::nullopt;
    const Rational base = base_dimension(n, sg.k);
    const Rational s(sg.s);
    const Rational r(sg.r);
    const Rational three_halves(3, 2);
    const long k = sg.k;
    const long sigma = sg.sigma;

    if (sigma < k - 1)
        return base;
    if (sigma == k - 1)
        return base + Rational(3);
    if (sigma == k)
        return base + Rational(3) * (s - Rational(1));
    if (sigma == k + 1) {
        const auto& t = sg.t.entries();
        const unsigned max_t = t.empty() ? 0 : *std::max_element(t.begin(), t.end());
        if (max_t >= 2)
            return base + three_halves * s * (s - Rational(1)) - Rational(3) * r;
        if (max_t == 1)
            return base;
        return std::nullopt;
    }
    return base + three_halves * s * (s - Rational(1));
}

std::optional<Rational> dim_h2_summary(const CaseTag& tag, unsigned n)
{
    const auto* sg = std::get_if<Singular>(&tag);
    if (!sg || sg->t.size() != n)
        return std::nullopt;
    const auto& t = sg->t.entries();
    const long k = sg->k;
    const long sigma = sg->sigma;
    const long m = sigma - k;
    const Rational s(static_cast<long>(std::count_if(t.begin(), t.end(), [m](unsigned ti) { return ti > m; })));
    const Rational r(static_cast<long>(std::count(t.begin(), t.end(), 1u)));
    const Rational base = base_dimension(n, sg->k);
    const Rational three_halves(3, 2);
    const unsigned max_t = t.empty() ? 0 : *std::max_element(t.begin(), t.end());

    Rational inner;
    if (sigma < k - 1)
        inner = base;
    else if (sigma == k - 1)
        inner = base + Rational(3);
    else if (sigma == k)
        inner = base + three_halves * (s - Rational(1));
    else if (sigma == k + 1 && max_t >= 2)
        inner = base + three_halves * (s + r) * (s + r - Rational(1)) - Rational(3) * r;
    else if (sigma == k + 1)
        inner = base;
    else
        inner = base + three_halves * s * (s - Rational(1));
    return Rational(2) * inner;
}

namespace {

CohomResult make(const Weights& w, Method method, std::optional<Rational> dim)
{
    CohomResult r;
    r.method = method;
    r.tag = classify(w);
    r.weights = w;
    r.dim = std::move(dim);
    if (!r.dim)
        r.note = "unsupported";
    return r;
}

} // namespace

CohomResult closed_form_result(const Weights& w)
{
    const CaseTag tag = classify(w);
    return make(w, Method::Closed, dim_h2_closed_form(tag, static_cast<unsigned>(w.n())));
}

CohomResult summary_result(const Weights& w)
{
    const CaseTag tag = classify(w);
    return make(w, Method::Summary, dim_h2_summary(tag, static_cast<unsigned>(w.n())));
}

} // namespace cohom
