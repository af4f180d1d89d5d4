#include <zetap/json_io.hpp>

namespace zetap {

std::string residue_digits(const Int& r, const Int& p) {
    if (r == 0) return "0";
    std::string s;
    bool small = p < 10;
    Int u = r;
    bool first = true;
    while (u > 0) {
        Int d = u % p;
        u /= p;
        if (!small && !first) s += '.';
        s += d.convert_to<std::string>();
        first = false;
    }
    return s;
}

Int residue_from_digits(const std::string& s, const Int& p) {
    Int acc = 0;
    Int pw = 1;
    if (p < 10) {
        for (char c : s) {
            acc += Int(c - '0') * pw;
            pw *= p;
        }
    } else {
        std::string cur;
        auto flush = [&]() {
            if (cur.empty()) return;
            acc += Int(cur) * pw;
            pw *= p;
            cur.clear();
        };
        for (char c : s) {
            if (c == '.')
                flush();
            else
                cur += c;
        }
        flush();
    }
    return acc;
}

Json padic_to_json(const Padic& x) {
    Json j;
    if (x.is_zero()) {
        j["zero"] = true;
        j["prec"] = x.abs_prec();
        return j;
    }
    j["v"] = x.valuation();
    j["digits"] = x.digit_string();
    j["M"] = x.rel_prec();
    return j;
}

Padic padic_from_json(const Json& j, const Int& p) {
    if (j.contains("zero") && j["zero"].get<bool>())
        return Padic::zero(p, j["prec"].get<long>());
    long v = j["v"].get<long>();
    int M = j["M"].get<int>();
    Int u = residue_from_digits(j["digits"].get<std::string>(), p);
    return Padic::from_unit(p, v, std::move(u), M);
}

Json ring_to_json(const CycloRingPtr& R) {
    Json j;
    if (R->degree() == 1 && R->root_order() == 1) {
        j["kind"] = "zp";
    } else if (R->ram_level() >= 1 && R->tame_conductor() == 1) {
        j["kind"] = "ramified";
        j["level"] = R->ram_level();
    } else if (R->ram_level() == 0) {
        j["kind"] = "unramified";
        j["conductor"] = R->tame_conductor();
    } else {
        j["kind"] = "composite";
        j["conductor"] = R->tame_conductor();
        j["level"] = R->ram_level();
    }
    return j;
}

CycloRingPtr ring_from_json_with(const Json& j, const Int& p, int M) {
    std::string kind = j["kind"].get<std::string>();
    if (kind == "zp") return CycloRing::zp(p, M);
    if (kind == "ramified") return CycloRing::ramified(p, j["level"].get<int>(), M);
    if (kind == "unramified") return CycloRing::unramified(p, j["conductor"].get<unsigned long>(), M);
    if (kind == "composite")
        return CycloRing::composite(p, j["conductor"].get<unsigned long>(), j["level"].get<int>(), M);
    throw ZetapError("ring_from_json: unknown kind");
}

CycloRingPtr ring_from_json(const Json& j) {
    Int p(j.at("prime").get<std::string>());
    return ring_from_json_with(j.at("ring"), p, j.at("M").get<int>());
}

Json measure_to_json(const Measure& mu) {
    Json j;
    j["schema"] = kSchema;
    j["type"] = "measure";
    j["prime"] = mu.ring()->prime().convert_to<std::string>();
    j["M"] = mu.prec();
    j["N"] = mu.degree();
    j["ring"] = ring_to_json(mu.ring());
    j["unit_supported"] = mu.unit_supported();
    Json coeffs = Json::array();
    const Int& p = mu.ring()->prime();
    for (long k = 0; k < mu.degree(); ++k) {
        const Poly& c = mu.t_coeff(k).coords();
        if (mu.ring()->degree() == 1) {
            coeffs.push_back(residue_digits(c.empty() ? Int(0) : c[0], p));
        } else {
            Json arr = Json::array();
            for (unsigned long i = 0; i < mu.ring()->degree(); ++i)
                arr.push_back(residue_digits(i < c.size() ? c[i] : Int(0), p));
            coeffs.push_back(arr);
        }
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

Measure measure_from_json(const Json& j) {
    if (j.at("schema").get<std::string>() != kSchema) throw ZetapError("measure_from_json: schema");
    Int p(j.at("prime").get<std::string>());
    int M = j.at("M").get<int>();
    long N = j.at("N").get<long>();
    auto R = ring_from_json_with(j.at("ring"), p, M);
    std::vector<CycloElement> t;
    t.reserve(N);
    for (const auto& e : j.at("coeffs")) {
        Poly c;
        if (e.is_string()) {
            c.push_back(residue_from_digits(e.get<std::string>(), p));
        } else {
            for (const auto& s : e) c.push_back(residue_from_digits(s.get<std::string>(), p));
        }
        poly_trim(c);
        t.emplace_back(R, std::move(c), M);
    }
    t.resize(N, CycloElement::zero(R));
    Measure mu = Measure::from_t_coeffs(R, std::move(t));
    if (j.value("unit_supported", false)) mu = mu.flagged_unit_supported();
    return mu;
}

Json tower_to_json(const UnitTower& t) {
    Json j;
    j["schema"] = kSchema;
    j["type"] = "unit_tower";
    j["prime"] = t.p.convert_to<std::string>();
    j["M"] = t.M;
    j["depth"] = t.depth;
    Json levels = Json::array();
    for (int n = 1; n <= t.depth; ++n) {
        Json arr = Json::array();
        const Poly& c = t.levels[n - 1].coords();
        unsigned long deg = t.rings[n - 1]->degree();
        for (unsigned long i = 0; i < deg; ++i)
            arr.push_back(residue_digits(i < c.size() ? c[i] : Int(0), t.p));
        levels.push_back(arr);
    }
    j["levels"] = std::move(levels);
    return j;
}

UnitTower tower_from_json(const Json& j) {
    if (j.at("schema").get<std::string>() != kSchema) throw ZetapError("tower_from_json: schema");
    UnitTower t;
    t.p = Int(j.at("prime").get<std::string>());
    t.M = j.at("M").get<int>();
    t.depth = j.at("depth").get<int>();
    int n = 1;
    for (const auto& lvl : j.at("levels")) {
        auto R = CycloRing::ramified(t.p, n, t.M);
        Poly c;
        for (const auto& s : lvl) c.push_back(residue_from_digits(s.get<std::string>(), t.p));
        poly_trim(c);
        t.rings.push_back(R);
        t.levels.emplace_back(R, std::move(c));
        ++n;
    }
    if (static_cast<int>(t.levels.size()) != t.depth) throw ZetapError("tower_from_json: depth mismatch");
    return t;
}

Json series_to_json(const ModCtx& m, const Poly& f) {
    Json j;
    j["schema"] = kSchema;
    j["type"] = "series";
    j["prime"] = m.p.convert_to<std::string>();
    j["M"] = m.M;
    Json arr = Json::array();
    for (const auto& c : f) arr.push_back(residue_digits(c, m.p));
    j["coeffs"] = std::move(arr);
    return j;
}

void series_from_json(const Json& j, ModCtx& m, Poly& f) {
    Int p(j.at("prime").get<std::string>());
    m = ModCtx(p, j.at("M").get<int>());
    f.clear();
    for (const auto& s : j.at("coeffs")) {
        if (s.is_string())
            f.push_back(m.reduce(residue_from_digits(s.get<std::string>(), p)));
        else
            f.push_back(m.reduce(Int(s.get<long>())));
    }
}

}  // namespace zetap
