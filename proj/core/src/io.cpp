#include "cohom/io.hpp"

#include <stdexcept>

namespace cohom {

Json to_json(const Rational& r)
{
    return r.str();
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Json to_json(const Polynomial& p)
{
    Json out = Json::array();
    for (const auto& c : p.coefficients())
        out.push_back(c.str());
    return out;
}

Polynomial polynomial_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected a coefficient array, got " + j.dump());
    std::vector<Rational> coeffs;
    for (const auto& c : j)
        coeffs.push_back(rational_from_json(c));
    return Polynomial(std::move(coeffs));
}

Json to_json(const Weights& w)
{
    Json lambdas = Json::array();
    for (const auto& l : w.lambdas)
        lambdas.push_back(l.str());
    return Json{{"n", w.n()}, {"lambdas", std::move(lambdas)}, {"mu", w.mu.str()}};
}

Weights weights_from_json(const Json& j)
{
    Weights w;
    for (const auto& l : j.at("lambdas"))
        w.lambdas.push_back(rational_from_json(l));
    w.mu = rational_from_json(j.at("mu"));
    if (j.contains("n") && j.at("n").get<std::size_t>() != w.n())
        throw std::invalid_argument("weights: n does not match the number of lambdas");
    return w;
}

namespace {

Json terms_json(const std::map<MultiIndex, Polynomial>& terms)
{
    Json out = Json::object();
    for (const auto& [alpha, p] : terms)
        out[alpha.str()] = to_json(p);
    return out;
}

} // namespace

Json to_json(const DiffOperator& op)
{
    Json out = to_json(op.weights());
    out["terms"] = terms_json(op.terms());
    return out;
}

DiffOperator diff_operator_from_json(const Json& j)
{
    DiffOperator op(weights_from_json(j));
    for (const auto& [key, coeffs] : j.at("terms").items())
        op.add_term(MultiIndex::parse(key), polynomial_from_json(coeffs));
    return op;
}

Json to_json(const ReducedTwoCochain& f)
{
    Json out = Json::object();
    const std::pair<const char*, const Family*> parts[] = {{"A", &f.A}, {"B", &f.B}, {"C", &f.C}};
    for (const auto& [name, family] : parts) {
        Json op = to_json(f.weights);
        op["terms"] = terms_json(*family);
        out[name] = std::move(op);
    }
    return out;
}

ReducedTwoCochain reduced_two_cochain_from_json(const Json& j)
{
    ReducedTwoCochain f{weights_from_json(j.at("A")), {}, {}, {}};
    const std::pair<const char*, Family*> parts[] = {{"A", &f.A}, {"B", &f.B}, {"C", &f.C}};
    for (const auto& [name, family] : parts) {
        const DiffOperator op = diff_operator_from_json(j.at(name));
        if (op.weights() != f.weights)
            throw std::invalid_argument("reduced cochain families disagree on weights");
        *family = Family(op.terms().begin(), op.terms().end());
    }
    return f;
}

Json to_json(const CaseTag& tag)
{
    Json out{{"case", case_name(tag)}};
    if (const auto* nr = std::get_if<NonResonant>(&tag)) {
        out["k"] = nr->k;
    } else if (const auto* s = std::get_if<Singular>(&tag)) {
        out["k"] = s->k;
        out["t"] = s->t.entries();
        out["sigma"] = s->sigma;
        out["s"] = s->s;
        out["r"] = s->r;
        out["m"] = s->m;
    }
    return out;
}

Json to_json(const CohomResult& r)
{
    Json out;
    if (!r.dim)
        out["dim"] = nullptr;
    else if (const auto v = r.dim->to_long())
        out["dim"] = *v;
    else
        out["dim"] = r.dim->str();
    out["method"] = method_name(r.method);
    out["case"] = to_json(r.tag);
    if (r.alpha_max)
        out["alpha_max"] = *r.alpha_max;
    out["stable"] = r.stable;
    if (r.rank)
        out["rank"] = *r.rank;
    if (r.ell)
        out["ell"] = *r.ell;
    out["weights"] = to_json(r.weights);
    if (!r.note.empty())
        out["note"] = r.note;
    return out;
}

} // namespace cohom
