#include "cfst/json_io.hpp"

#include <sstream>

namespace cfst::io {

json to_json(const RepetitionWitness& wit) {
    return json{{"r", wit.r},
                {"s", wit.s},
                {"m", wit.m},
                {"exponent", rat_to_string(wit.exponent())},
                {"ratio", rat_to_string(wit.ratio())},
                {"truncated", wit.truncated}};
}

json to_json(const PeriodicityEvidence& pe) {
    return json{{"preperiod", pe.preperiod}, {"period", pe.period}, {"checked_len", pe.checked_len}};
}

json to_json(const GrowthStats& g) {
    return json{{"M", g.M_hat},
                {"m", g.m_hat},
                {"window", json::array({g.window_lo, g.window_hi})},
                {"bounded_evidence", g.bounded_evidence},
                {"approx", true}};
}

json to_json(const Enclosure& e) {
    return json{{"lo", rat_to_string(e.lo)}, {"hi", rat_to_string(e.hi)}};
}

json to_json(const QuadraticPoly& p) {
    return json{{"A", p.A.str()}, {"B", p.B.str()}, {"C", p.C.str()}};
}

json to_json(const QuadraticSurd& s) {
    return json{{"P", s.P.str()}, {"Q", s.Q.str()}, {"D", s.D.str()}};
}

json to_json(const InequalityCheck& c) {
    return json{{"holds", c.holds}, {"threshold", c.threshold}, {"margin", c.margin}, {"approx", true}};
}

namespace {

const char* status_name(ApproximantStatus s) {
    switch (s) {
        case ApproximantStatus::ok: return "ok";
        case ApproximantStatus::degenerate_linear: return "degenerate_linear";
        case ApproximantStatus::degenerate_rational: return "degenerate_rational";
    }
    return "?";
}

}  // namespace

json to_json(const WitnessDiagnostics& d) {
    json out{{"witness", to_json(d.witness)},
             {"poly", to_json(d.poly)},
             {"root", d.root ? to_json(*d.root) : json(nullptr)},
             {"status", status_name(d.status)},
             {"pn_alpha", to_json(d.pn_alpha)},
             {"pn_abs_hi", rat_to_string(d.pn_abs_hi)},
             {"q_s_inequality_ok", d.q_s_inequality_ok},
             {"pure_bound_ok", d.pure_bound_ok ? json(*d.pure_bound_ok) : json(nullptr)},
             {"q_r", d.q_r.str()},
             {"q_r_plus_s", d.q_rs.str()},
             {"q_agree", d.q_agree.str()},
             {"bound_ratio", json{{"value", d.bound_ratio}, {"approx", true}}}};
    return out;
}

json to_json(const CriterionReport& r) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    json diagnostics = json::array();
    for (const auto& d : r.diagnostics) diagnostics.push_back(to_json(d));
    return json{{"theorem", to_string(r.theorem)},
                {"params", json{{"w", rat_to_string(r.w)},
                                {"wprime", rat_to_string(r.wprime)},
                                {"min_witnesses", r.min_witnesses},
                                {"required_margin", r.required_margin}}},
                {"N", r.N},
                {"witnesses", witnesses},
                {"growth", r.growth ? to_json(*r.growth) : json(nullptr)},
                {"periodicity", r.periodicity ? to_json(*r.periodicity) : json(nullptr)},
                {"inequality", r.inequality ? to_json(*r.inequality) : json(nullptr)},
                {"verdict", to_string(r.verdict)},
                {"diagnostics", diagnostics}};
}

json to_json(const ComplexityProfile& p) {
    json values = json::array();
    for (std::size_t n = 1; n <= p.n_max; ++n)
        values.push_back(json{{"n", n}, {"p_n", p.p[n]}, {"near_horizon", bool(p.near_horizon[n])}});
    return json{{"N", p.N}, {"n_max", p.n_max}, {"values", values}};
}

json to_json(const RecurrenceStats& r) {
    json values = json::array();
    for (std::size_t n = 1; n <= r.n_max; ++n)
        values.push_back(json{{"n", n},
                              {"worst_gap", r.worst_gap[n]},
                              {"has_nonrecurrent", bool(r.has_nonrecurrent[n])}});
    return json{{"N", r.N},
                {"n_max", r.n_max},
                {"values", values},
                {"c_hat", rat_to_string(r.c_hat)},
                {"lower_bound_only", r.lower_bound_only}};
}

std::string subshift_csv(const ComplexityProfile* profile, const RecurrenceStats* stats) {
    std::ostringstream out;
    out << "n,p_n,p_n_minus_n,worst_gap,gap_ratio\n";
    std::size_t n_max = 0;
    if (profile) n_max = std::max(n_max, profile->n_max);
    if (stats) n_max = std::max(n_max, stats->n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        out << n << ',';
        if (profile && n <= profile->n_max) {
            out << profile->p[n] << ','
                << (static_cast<long long>(profile->p[n]) - static_cast<long long>(n)) << ',';
        } else {
            out << ",,";
        }
        if (stats && n <= stats->n_max) {
            out << stats->worst_gap[n] << ',';
            if (stats->worst_gap[n] > 0)
                out << rat_to_string(BigRat(BigInt(stats->worst_gap[n]), BigInt(n)));
        } else {
            out << ',';
        }
        out << '\n';
    }
    return out.str();
}

Dfao dfao_from_json(const json& j) {
    Dfao d;
    if (!j.is_object()) throw std::invalid_argument("dfao spec must be a JSON object");
    d.base = j.at("base").get<int>();
    d.initial = j.at("initial").get<std::size_t>();
    const auto& trans = j.at("transitions");
    const auto& output = j.at("output");
    if (!trans.is_array() || !output.is_array())
        throw std::invalid_argument("dfao transitions/output must be arrays");
    if (j.contains("states")) {
        const auto declared = j.at("states").get<std::size_t>();
        if (declared != output.size())
            throw std::invalid_argument("dfao states count disagrees with output table");
    }
    for (const auto& row : trans) d.transitions.push_back(row.get<std::vector<std::size_t>>());
    for (const auto& v : output) d.output.push_back(v.get<Letter>());
    d.validate();
    return d;
}

}  // namespace cfst::io
