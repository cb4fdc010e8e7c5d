#include "chow0/io_text.hpp"

namespace chow0 {

namespace {

std::string braced(unsigned e) {
    const std::string s = std::to_string(e);
    return s.size() == 1 ? s : "{" + s + "}";
}

template <class C>
std::string json_terms(const Polynomial<C>& p) {
    for (Var v : {Var::H, Var::l1, Var::l2, Var::h, Var::dsym}) {
        if (p.uses_var(v)) throw DomainError("chern_poly_json: polynomial outside the Chern ring");
    }
    std::string out = "[";
    bool first = true;
    // Canonical map order is already (degree ascending, then e1 descending).
    for (auto& [m, c] : p.terms()) {
        if (!first) out += ",";
        first = false;
        out += "[\"" + c.to_string() + "\"," + std::to_string(m.exp(Var::c1)) + "," +
               std::to_string(m.exp(Var::c2)) + "]";
    }
    return out + "]";
}

template <class C>
std::string latex(const Polynomial<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto& [m, c] : p.terms()) {
        std::string cs = c.to_string();
        bool negative = false;
        if (!cs.empty() && cs[0] == '-') {
            negative = true;
            cs = cs.substr(1);
        }
        std::string mono;
        if (m.exp(Var::c1) > 0) {
            mono += "c_1";
            if (m.exp(Var::c1) > 1) mono += "^" + braced(m.exp(Var::c1));
        }
        if (m.exp(Var::c2) > 0) {
            mono += "c_2";
            if (m.exp(Var::c2) > 1) mono += "^" + braced(m.exp(Var::c2));
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + mono;
        }
    }
    return out;
}

} // namespace

std::string chern_poly_json(const ZPoly& p) { return json_terms(p); }
std::string chern_poly_json(const QPoly& p) { return json_terms(p); }
std::string chern_poly_latex(const ZPoly& p) { return latex(p); }
std::string chern_poly_latex(const QPoly& p) { return latex(p); }

namespace {

template <class C>
std::string membership_json(const char* ring, const Polynomial<C>& query, bool member,
                            const std::vector<Polynomial<C>>& certificate) {
    std::string out = "{\"query\":" + json_terms(query);
    out += ",\"ring\":\"";
    out += ring;
    out += "\",\"member\":";
    out += member ? "true" : "false";
    out += ",\"certificate\":[";
    for (std::size_t t = 0; t < certificate.size(); ++t) {
        if (t > 0) out += ",";
        out += json_terms(certificate[t]);
    }
    return out + "]}";
}

} // namespace

std::string membership_report_json(const ZPoly& query, bool member,
                                   const std::vector<ZPoly>& certificate) {
    return membership_json("Z", query, member, certificate);
}

std::string membership_report_json(const QPoly& query, bool member,
                                   const std::vector<QPoly>& certificate) {
    return membership_json("Q", query, member, certificate);
}

} // namespace chow0
