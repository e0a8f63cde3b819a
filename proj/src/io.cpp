#include "wavefront/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wavefront {

double round15(double v) {
    if (!std::isfinite(v)) return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

namespace {

Json num(double v) {
    if (!std::isfinite(v)) return nullptr;
    return round15(v);
}

double read_num(const Json& j, const char* key, double fallback = std::numeric_limits<double>::quiet_NaN()) {
    if (!j.contains(key)) return fallback;
    const Json& v = j.at(key);
    if (v.is_null()) return std::numeric_limits<double>::infinity();
    return v.get<double>();
}

}  // namespace

Json to_json(const WaveParams& p) {
    return Json{{"n", num(p.n)}, {"p", num(p.p)}, {"q", num(p.q)}, {"k", num(p.k)}};
}

WaveParams params_from_json(const Json& j) {
    return validate(j.at("n").get<double>(), j.at("p").get<double>(), j.at("q").get<double>(),
                    j.at("k").get<double>());
}

Json to_json(const CStarResult& r) {
    Json j;
    j["params"] = to_json(r.params);
    j["c_star"] = num(r.c_star);
    j["bracket"] = Json::array({num(r.bracket_lo), num(r.bracket_hi)});
    j["iterations"] = r.iterations;
    j["kn"] = num(r.kn());
    j["upper_bound"] = num(r.upper_bound());
    j["bounds_hold"] = r.bounds_hold;
    j["homoclinic_matched"] = r.homoclinic_matched;
    j["homoclinic_c"] = r.homoclinic_matched ? num(r.homoclinic_c) : Json(nullptr);
    return j;
}

CStarResult cstar_from_json(const Json& j) {
    CStarResult r;
    r.params = params_from_json(j.at("params"));
    r.c_star = j.at("c_star").get<double>();
    r.bracket_lo = j.at("bracket").at(0).get<double>();
    r.bracket_hi = j.at("bracket").at(1).get<double>();
    r.iterations = j.at("iterations").get<int>();
    r.bounds_hold = j.value("bounds_hold", false);
    r.homoclinic_matched = j.value("homoclinic_matched", false);
    if (r.homoclinic_matched) r.homoclinic_c = j.at("homoclinic_c").get<double>();
    return r;
}

Json to_json(const CycleResult& r) {
    Json j;
    j["found"] = r.found;
    j["c"] = num(r.c);
    if (r.found) {
        j["fixed_point_x"] = num(r.fixed_point_x);
        j["period"] = num(r.period);
        j["amplitude"] = num(r.amplitude);
        j["closure"] = num(r.closure);
        j["winding"] = r.winding;
        j["stability"] = to_string(r.stability);
        Json all = Json::array();
        for (double x : r.all_fixed_points) all.push_back(num(x));
        j["fixed_points"] = std::move(all);
    } else {
        j["fixed_point_x"] = nullptr;
        j["period"] = nullptr;
        j["stability"] = nullptr;
    }
    j["scan"] = Json::array({num(r.scan_lo), num(r.scan_hi)});
    return j;
}

CycleResult cycle_from_json(const Json& j) {
    CycleResult r;
    r.found = j.at("found").get<bool>();
    r.c = j.at("c").get<double>();
    if (r.found) {
        r.fixed_point_x = j.at("fixed_point_x").get<double>();
        r.period = j.at("period").get<double>();
        r.amplitude = read_num(j, "amplitude", 0.0);
        r.closure = read_num(j, "closure", 0.0);
        r.winding = j.value("winding", 0);
        const std::string s = j.at("stability").get<std::string>();
        if (s != "unstable" && s != "stable") throw std::runtime_error("cycle json: bad stability '" + s + "'");
        r.stability = s == "unstable" ? CycleStability::Unstable : CycleStability::Stable;
        if (j.contains("fixed_points")) {
            for (const auto& x : j.at("fixed_points")) r.all_fixed_points.push_back(x.get<double>());
        }
    }
    if (j.contains("scan")) {
        r.scan_lo = j.at("scan").at(0).get<double>();
        r.scan_hi = j.at("scan").at(1).get<double>();
    }
    return r;
}

Json to_json(const TailLaw& law) {
    Json j;
    j["end"] = to_string(law.end);
    j["kind"] = to_string(law.kind);
    j[law.kind == TailKind::Exponential ? "rate" : "exponent"] = num(law.rate_or_exponent);
    j["constant"] = law.constant ? num(*law.constant) : Json(nullptr);
    return j;
}

TailLaw tail_law_from_json(const Json& j) {
    TailLaw law;
    const std::string end = j.at("end").get<std::string>();
    const std::string kind = j.at("kind").get<std::string>();
    if (end != "-inf" && end != "+inf") throw std::runtime_error("tail json: bad end '" + end + "'");
    if (kind != "exp" && kind != "alg") throw std::runtime_error("tail json: bad kind '" + kind + "'");
    law.end = end == "-inf" ? TailEnd::MinusInfinity : TailEnd::PlusInfinity;
    law.kind = kind == "exp" ? TailKind::Exponential : TailKind::Algebraic;
    law.rate_or_exponent = j.at(law.kind == TailKind::Exponential ? "rate" : "exponent").get<double>();
    if (j.contains("constant") && !j.at("constant").is_null()) law.constant = j.at("constant").get<double>();
    return law;
}

Json to_json(const WaveClass& wc) {
    Json j;
    j["c"] = num(wc.c);
    j["class"] = to_string(wc.kind);
    j["monotone"] = wc.monotone ? Json(*wc.monotone) : Json(nullptr);
    j["periodic_companion"] = wc.periodic_companion;
    Json tails = Json::array();
    for (const auto& t : wc.tails) tails.push_back(to_json(t));
    j["tails"] = std::move(tails);
    return j;
}

WaveClass wave_class_from_json(const Json& j) {
    WaveClass wc;
    wc.c = j.at("c").get<double>();
    const std::string name = j.at("class").get<std::string>();
    const auto kind = wave_kind_from_string(name);
    if (!kind) throw std::runtime_error("class json: unknown class '" + name + "'");
    wc.kind = *kind;
    if (!j.at("monotone").is_null()) wc.monotone = j.at("monotone").get<bool>();
    wc.periodic_companion = j.value("periodic_companion", false);
    for (const auto& t : j.at("tails")) wc.tails.push_back(tail_law_from_json(t));
    return wc;
}

Json to_json(const VerifyReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        entries.push_back(Json{{"check", e.name}, {"passed", e.passed}, {"detail", e.detail}});
    }
    return Json{{"passed", r.passed()}, {"checks", std::move(entries)}};
}

Json to_json(const CalculusReport& r) {
    Json j;
    j["h_increasing"] = r.h_increasing;
    j["h_bounded"] = r.h_bounded;
    j["h_max"] = num(r.h_max);
    j["phi_prime_nonnegative"] = r.phi_prime_nonnegative;
    j["exponent_inequality"] = r.exponent_inequality;
    j["inequality"] = Json::array({num(r.inequality_lhs), num(r.inequality_rhs)});
    j["y1_origin_decreasing"] = r.y1_origin_decreasing;
    j["violations"] = r.violations;
    j["passed"] = r.passed();
    return j;
}

Json to_json(const LienardCurves& l) {
    return Json{{"c", num(l.c)},
                {"grid", l.x.size()},
                {"min_gap", num(l.min_gap)},
                {"y1_decreasing", l.y1_decreasing},
                {"y2_decreasing", l.y2_decreasing}};
}

Json to_json(const TailFit& fit, const TailLaw& law) {
    Json j = to_json(law);
    j["measured"] = num(fit.measured);
    j["fitted_constant"] = num(fit.constant);
    j["residual"] = num(fit.residual);
    j["origin"] = num(fit.origin);
    j["samples"] = fit.samples;
    return j;
}

Json to_json(const Profile& profile) {
    Json j;
    j["class"] = to_string(profile.kind);
    j["c"] = num(profile.c);
    j["anchor"] = to_string(profile.anchor);
    Json rows = Json::array();
    for (const auto& s : profile.samples) rows.push_back(Json::array({num(s.xi), num(s.f), num(s.fprime)}));
    j["samples"] = std::move(rows);
    return j;
}

Profile profile_from_json(const Json& j) {
    Profile prof;
    const std::string name = j.at("class").get<std::string>();
    const auto kind = wave_kind_from_string(name);
    if (!kind) throw std::runtime_error("profile json: unknown class '" + name + "'");
    prof.kind = *kind;
    prof.c = j.at("c").get<double>();
    const auto anchor = anchor_from_string(j.at("anchor").get<std::string>());
    if (!anchor) throw std::runtime_error("profile json: unknown anchor");
    prof.anchor = *anchor;
    for (const auto& row : j.at("samples")) {
        if (!row.is_array() || row.size() != 3) throw std::runtime_error("profile json: malformed sample");
        prof.samples.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
    return prof;
}

void write_profile_csv(std::ostream& os, const Profile& profile) {
    os << "xi,f,fprime\n";
    char buf[96];
    for (const auto& s : profile.samples) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g\n", s.xi, s.f, s.fprime);
        os << buf;
    }
}

Profile read_profile_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "xi,f,fprime") {
        throw std::runtime_error("profile csv: missing header xi,f,fprime");
    }
    Profile prof;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        ProfileSample s;
        char tail = 0;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf%c", &s.xi, &s.f, &s.fprime, &tail) != 3) {
            throw std::runtime_error("profile csv: malformed line " + std::to_string(lineno));
        }
        prof.samples.push_back(s);
    }
    return prof;
}

}  // namespace wavefront
