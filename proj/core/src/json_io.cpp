#include "qsl2/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace qsl2 {

using Json = nlohmann::ordered_json;

namespace {

Json laurent_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e, rational_to_string(c)}));
    return arr;
}

LaurentPoly laurent_parse(const Json& j) {
    if (!j.is_array()) throw ParseError("LaurentPoly: expected an array");
    LaurentPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw ParseError("LaurentPoly: expected [exp, \"p/q\"] pairs");
        p.add_term(term[0].get<int>(), rational_from_string(term[1].get<std::string>()));
    }
    return p;
}

Json ratfun_json(const RationalFunction& r) {
    return Json{{"num", laurent_json(r.num())}, {"den", laurent_json(r.den())}};
}

RationalFunction ratfun_parse(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("RationalFunction: expected {num, den}");
    return RationalFunction(laurent_parse(j["num"]), laurent_parse(j["den"]));
}

Json upoly_json(const UPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e, ratfun_json(c)}));
    return arr;
}

UPoly upoly_parse(const Json& j) {
    if (!j.is_array()) throw ParseError("UPoly: expected an array");
    UPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw ParseError("UPoly: expected [uexp, coeff] pairs");
        p.add_term(term[0].get<int>(), ratfun_parse(term[1]));
    }
    return p;
}

Json udot_json(const UdotElement& x) {
    Json terms = Json::array();
    for (const auto& [ab, c] : x.terms()) {
        CBIndex i = cb_index(ab.first, ab.second, x.weight());
        terms.push_back(Json{{"a", i.a},
                             {"b", i.b},
                             {"orient", i.orient == Orient::EF ? "EF" : "FE"},
                             {"coeff", ratfun_json(c)}});
    }
    return Json{{"m", x.weight()}, {"terms", terms}};
}

UdotElement udot_parse(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("terms"))
        throw ParseError("UdotElement: expected {m, terms}");
    UdotElement x(j["m"].get<int>());
    for (const auto& t : j["terms"]) {
        std::string orient = t.value("orient", "EF");
        if (orient != "EF" && orient != "FE")
            throw ParseError("UdotElement: orient must be \"EF\" or \"FE\"");
        CBIndex i = cb_canonicalize(t.at("a").get<int>(), t.at("b").get<int>(), x.weight(),
                                    orient == "EF" ? Orient::EF : Orient::FE);
        x.add_term(i.a, i.b, ratfun_parse(t.at("coeff")));
    }
    return x;
}

Json parse_or_throw(std::string_view s) {
    Json j = Json::parse(s, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

}  // namespace

std::string laurent_to_json(const LaurentPoly& p) { return laurent_json(p).dump(); }

LaurentPoly laurent_from_json(std::string_view s) { return laurent_parse(parse_or_throw(s)); }

std::string ratfun_to_json(const RationalFunction& r) { return ratfun_json(r).dump(); }

RationalFunction ratfun_from_json(std::string_view s) { return ratfun_parse(parse_or_throw(s)); }

std::string upoly_to_json(const UPoly& p) { return upoly_json(p).dump(); }

UPoly upoly_from_json(std::string_view s) { return upoly_parse(parse_or_throw(s)); }

std::string udot_to_json(const UdotElement& x) { return udot_json(x).dump(); }

UdotElement udot_from_json(std::string_view s) { return udot_parse(parse_or_throw(s)); }

std::string pbw_combo_to_json(const PBWCombo& x) {
    Json terms = Json::array();
    for (const auto& [ab, c] : x.terms())
        terms.push_back(Json{{"a", ab.first}, {"b", ab.second}, {"coeff", ratfun_json(c)}});
    return Json{{"m", x.weight()}, {"terms", terms}}.dump();
}

std::string tensor_to_json(const TensorVector& v) {
    Json j;
    j["mode"] = v.param().is_symbolic() ? "symbolic" : "concrete";
    if (!v.param().is_symbolic()) j["p"] = v.param().p;
    j["m"] = v.param().m;
    Json terms = Json::array();
    for (const auto& [ab, c] : v.terms()) {
        Json t{{"a", ab.first}, {"b", ab.second}};
        t["coeff"] = v.param().is_symbolic() ? upoly_json(c) : ratfun_json(c.coeff_u(0));
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

TensorVector tensor_from_json(std::string_view s) {
    Json j = parse_or_throw(s);
    if (!j.is_object() || !j.contains("mode") || !j.contains("m") || !j.contains("terms"))
        throw ParseError("TensorVector: expected {mode, m, terms}");
    const std::string mode = j["mode"].get<std::string>();
    WeightParam wp;
    if (mode == "symbolic") {
        wp = WeightParam::symbolic(j["m"].get<int>());
    } else if (mode == "concrete") {
        if (!j.contains("p")) throw ParseError("TensorVector: concrete mode needs p");
        wp = WeightParam::concrete(j["p"].get<int>(), j["m"].get<int>());
    } else {
        throw ParseError("TensorVector: mode must be \"symbolic\" or \"concrete\"");
    }
    TensorVector v(wp);
    for (const auto& t : j["terms"]) {
        UPoly c = wp.is_symbolic() ? upoly_parse(t.at("coeff"))
                                   : UPoly(ratfun_parse(t.at("coeff")));
        v.add_term(t.at("a").get<int>(), t.at("b").get<int>(), std::move(c));
    }
    return v;
}

std::string transition_matrix_to_json(const TransitionMatrix& t) {
    Json j;
    j["m"] = t.m;
    Json ladder = Json::array();
    for (const auto& [a, b] : t.ladder) ladder.push_back(Json::array({a, b}));
    j["ladder"] = std::move(ladder);
    Json rows = Json::array();
    for (const auto& row : t.entries) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(ratfun_json(c));
        rows.push_back(std::move(r));
    }
    j["entries"] = std::move(rows);
    return j.dump();
}

std::string transition_matrix_to_csv(const TransitionMatrix& t) {
    std::ostringstream os;
    os << "row_a,row_b";
    for (const auto& [a, b] : t.ladder) os << ",(" << a << ";" << b << ")";
    os << "\n";
    for (size_t i = 0; i < t.size(); ++i) {
        os << t.ladder[i].first << "," << t.ladder[i].second;
        for (const auto& c : t.entries[i]) os << "," << c.str();
        os << "\n";
    }
    return os.str();
}

std::string positivity_report_to_json(const PositivityReport& r) {
    Json j;
    j["index"] = Json{{"a", r.index.a},
                      {"b", r.index.b},
                      {"m", r.index.m},
                      {"orient", r.index.orient == Orient::EF ? "EF" : "FE"}};
    j["order"] = r.order;
    j["pass"] = r.pass;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json ej{{"s", e.s}, {"coeff", ratfun_json(e.coeff)}, {"ok", e.ok}};
        ej["series"] = e.series.str();
        entries.push_back(std::move(ej));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

std::string positivity_report_to_csv(const PositivityReport& r) {
    std::ostringstream os;
    os << "s,coeff,series,ok\n";
    for (const auto& e : r.entries)
        os << e.s << "," << e.coeff.str() << "," << e.series.str() << ","
           << (e.ok ? "pass" : "fail") << "\n";
    return os.str();
}

}  // namespace qsl2
