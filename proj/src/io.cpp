#include "hopfgl/io.hpp"

#include <fstream>

#include "hopfgl/error.hpp"
#include "hopfgl/expression.hpp"

namespace hopfgl
{

Json to_json(const PolyElement &p)
{
    Json out = Json::array();
    for (const auto &t : p.terms()) {
        Json mono = Json::object();
        for (const auto &[index, exponent] : t.monomial.powers()) {
            mono[p.ring()->generator(index).name] = exponent;
        }
        out.push_back({{"monomial", std::move(mono)}, {"coefficient", to_string(t.coefficient)}});
    }
    return out;
}

PolyElement poly_from_json(const Ring &ring, const Json &j)
{
    if (!j.is_array()) {
        throw ParseError("polynomial must be an array of terms");
    }
    std::vector<PolyElement::Term> terms;
    for (const auto &t : j) {
        std::vector<Monomial::Power> powers;
        for (const auto &[name, exponent] : t.at("monomial").items()) {
            const auto index = ring->index_of(name);
            if (!index) {
                throw ParseError("unknown generator '" + name + "'");
            }
            powers.emplace_back(static_cast<std::uint32_t>(*index), exponent.get<std::uint32_t>());
        }
        terms.push_back({Monomial(*ring, std::move(powers)), parse_rational(t.at("coefficient").get<std::string>())});
    }
    return PolyElement::from_terms(ring, std::move(terms));
}

namespace
{

template <std::size_t Vars>
Json series_to_json(const TruncatedSeries<Vars> &s)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < s.layout().size(); ++i) {
        const auto &c = s.coefficient_at(i);
        if (!c.is_zero()) {
            const auto &e = s.layout().tuple(i);
            out.push_back({{"exponents", Json(std::vector<unsigned>(e.begin(), e.end()))}, {"coefficient", to_json(c)}});
        }
    }
    return out;
}

template <std::size_t Vars>
TruncatedSeries<Vars> series_from_json(const Ring &ring, unsigned order, const Json &j)
{
    if (!j.is_array()) {
        throw ParseError("series must be an array of records");
    }
    TruncatedSeries<Vars> s(ring, order);
    for (const auto &rec : j) {
        const auto e = rec.at("exponents").get<std::vector<unsigned>>();
        if (e.size() != Vars) {
            throw ParseError("series record with " + std::to_string(e.size()) + " exponents, expected " +
                             std::to_string(Vars));
        }
        Exponents<Vars> ex{};
        std::copy(e.begin(), e.end(), ex.begin());
        if (total_degree<Vars>(ex) == 0) {
            throw ParseError("series carry no constant term");
        }
        s.set(ex, poly_from_json(ring, rec.at("coefficient")));
    }
    return s;
}

std::vector<Generator> generators_from_json(const Json &j)
{
    std::vector<Generator> gens;
    if (j.is_null()) {
        return gens;
    }
    for (const auto &g : j) {
        gens.push_back({g.at("name").get<std::string>(), g.at("weight").get<long>()});
    }
    return gens;
}

// Wrap nlohmann parse/type errors into ParseError.
template <typename F>
auto guarded(const std::string &what, F &&f)
{
    try {
        return f();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(what + ": " + e.what());
    }
}

} // namespace

Json to_json(const Series1 &s) { return series_to_json(s); }
Json to_json(const Series2 &s) { return series_to_json(s); }

Series1 series1_from_json(const Ring &ring, unsigned order, const Json &j)
{
    return guarded("series", [&] { return series_from_json<1>(ring, order, j); });
}

Series2 series2_from_json(const Ring &ring, unsigned order, const Json &j)
{
    return guarded("series", [&] { return series_from_json<2>(ring, order, j); });
}

Json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

FormalGroupLaw law_from_json(const Json &doc, unsigned order)
{
    return guarded("formal group law", [&] {
        const auto ring = make_base_ring(generators_from_json(doc.value("base_generators", Json())));
        const auto name = doc.value("name", std::string("custom"));
        if (doc.contains("logarithm")) {
            Series1 log(ring, order);
            unsigned k = 1;
            for (const auto &c : doc.at("logarithm")) {
                log.set({k++}, parse_polynomial(ring, c.get<std::string>()));
            }
            return from_logarithm(log, name);
        }
        if (doc.contains("law")) {
            Series2 law(ring, order);
            for (const auto &rec : doc.at("law")) {
                const Exponents<2> e{rec.at("u").get<unsigned>(), rec.at("v").get<unsigned>()};
                if (total_degree<2>(e) == 0) {
                    throw ParseError("a formal group law has no constant term");
                }
                law.set(e, parse_polynomial(ring, rec.at("coefficient").get<std::string>()));
            }
            return FormalGroupLaw(std::move(law), name);
        }
        throw ParseError("formal group law document needs \"logarithm\" or \"law\"");
    });
}

FormalGroupLaw load_law(std::string_view selector, unsigned order)
{
    if (selector == "additive") {
        return additive(order);
    }
    if (selector == "multiplicative") {
        return multiplicative(order);
    }
    if (selector == "mishchenko-model") {
        return mishchenko_model(order);
    }
    return law_from_json(read_json_file(std::string(selector)), order);
}

Hopf hopf_from_json(const Json &doc, const Ring &base)
{
    return guarded("Hopf descriptor", [&] {
        const auto carrier = make_hopf_carrier(base, generators_from_json(doc.at("generators")));
        const auto &diag = doc.at("diagonal");
        std::vector<PolyElement> diagonals;
        for (std::size_t i = carrier->base_count(); i < carrier->size(); ++i) {
            const auto &name = carrier->generator(i).name;
            if (!diag.contains(name)) {
                throw ParseError("no diagonal given for generator '" + name + "'");
            }
            diagonals.push_back(parse_polynomial(carrier->tensor_square(), diag.at(name).get<std::string>()));
        }
        return HopfDescriptor::create(carrier, std::move(diagonals), doc.value("cocommutative", false),
                                      doc.value("name", std::string("custom")));
    });
}

Hopf load_hopf(std::string_view selector, const Ring &base, unsigned order)
{
    if (selector == "beta") {
        return beta_instance(order, base);
    }
    if (selector == "trivial") {
        return trivial_instance(base);
    }
    return hopf_from_json(read_json_file(std::string(selector)), base);
}

CoveringSeries twist_series_from_json(const Json &doc, const Hopf &hopf, unsigned order)
{
    return guarded("twist series", [&] {
        Series1 b(hopf->carrier(), order);
        unsigned k = 1;
        for (const auto &c : doc.at("coefficients")) {
            b.set({k++}, parse_polynomial(hopf->carrier(), c.get<std::string>()));
        }
        return CoveringSeries(hopf, std::move(b));
    });
}

CoveringSeries load_twist_series(const std::string &path, const Hopf &hopf, unsigned order)
{
    return twist_series_from_json(read_json_file(path), hopf, order);
}

} // namespace hopfgl
