#include "hypconv/term_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hypconv {

using nlohmann::json;

ParseError::ParseError(const std::string& what, std::size_t l, std::size_t c)
    : InvalidInput(l ? what + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")" : what),
      line(l),
      column(c) {}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ParseError("term description: " + path + ": " + msg, 0, 0);
}

Rational rational_of(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const InvalidInput& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected an integer or a rational string such as \"-3/4\"");
}

long integer_of(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long>();
}

// "r", r, or [re, im]
GaussianRational gaussian_of(const json& j, const std::string& path) {
    if (j.is_array()) {
        if (j.size() != 2) fail(path, "expected [re, im]");
        return {rational_of(j[0], path + "[0]"), rational_of(j[1], path + "[1]")};
    }
    return GaussianRational(rational_of(j, path));
}

std::vector<PfqParam> params_of(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected a list of [re, im, shift]");
    std::vector<PfqParam> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        const json& e = j[i];
        if (!e.is_array() || e.size() != 3) fail(p, "expected [re, im, shift]");
        out.push_back({{rational_of(e[0], p), rational_of(e[1], p)}, integer_of(e[2], p)});
    }
    return out;
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

ProperTerm parse_term(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [l, c] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("malformed term description", l, c);
    }
    if (!doc.is_object()) fail("/", "expected an object");
    for (const auto& [key, val] : doc.items())
        if (key != "P" && key != "xi" && key != "theta" && key != "factors" && key != "pfq" && key != "normalize")
            fail("/" + key, "unknown field");

    ProperTerm t;
    if (doc.contains("pfq")) {
        const json& p = doc["pfq"];
        if (!p.is_object() || !p.contains("argument")) fail("/pfq", "expected {upper, lower, argument}");
        PfqSpec s;
        s.upper = params_of(p.value("upper", json::array()), "/pfq/upper");
        s.lower = params_of(p.value("lower", json::array()), "/pfq/lower");
        s.argument = gaussian_of(p["argument"], "/pfq/argument");
        t = from_pfq(s);
    }
    if (doc.contains("P")) {
        const json& P = doc["P"];
        if (!P.is_array()) fail("/P", "expected a list of [deg_n, deg_k, re, im]");
        BivarPoly poly;
        for (std::size_t i = 0; i < P.size(); ++i) {
            std::string path = "/P[" + std::to_string(i) + "]";
            const json& m = P[i];
            if (!m.is_array() || m.size() != 4) fail(path, "expected [deg_n, deg_k, re, im]");
            long dn = integer_of(m[0], path), dk = integer_of(m[1], path);
            if (dn < 0 || dk < 0) fail(path, "negative degree");
            poly.add_term(static_cast<int>(dn), static_cast<int>(dk), {rational_of(m[2], path), rational_of(m[3], path)});
        }
        t.P = poly;
    }
    if (doc.contains("xi")) t.xi *= gaussian_of(doc["xi"], "/xi");
    if (doc.contains("theta")) t.theta *= gaussian_of(doc["theta"], "/theta");
    if (doc.contains("factors")) {
        const json& F = doc["factors"];
        if (!F.is_array()) fail("/factors", "expected a list of [b_re, b_im, alpha, beta]");
        for (std::size_t i = 0; i < F.size(); ++i) {
            std::string path = "/factors[" + std::to_string(i) + "]";
            const json& f = F[i];
            if (!f.is_array() || f.size() != 4) fail(path, "expected [b_re, b_im, alpha, beta]");
            t.factors.push_back({{rational_of(f[0], path), rational_of(f[1], path)}, integer_of(f[2], path),
                                 integer_of(f[3], path)});
        }
    }
    t = validate(std::move(t));
    if (doc.value("normalize", false)) t = normalize(t);
    return t;
}

ProperTerm read_term_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_term(ss.str());
}

std::string write_term(const ProperTerm& term) {
    auto g = [](const GaussianRational& z) { return json::array({to_string(z.re), to_string(z.im)}); };
    json doc;
    doc["P"] = json::array();
    for (const auto& [key, c] : term.P.terms())
        doc["P"].push_back({key.first, key.second, to_string(c.re), to_string(c.im)});
    doc["xi"] = g(term.xi);
    doc["theta"] = g(term.theta);
    doc["factors"] = json::array();
    for (const auto& f : term.factors) doc["factors"].push_back({to_string(f.b.re), to_string(f.b.im), f.alpha, f.beta});
    return doc.dump(2);
}

}  // namespace hypconv
