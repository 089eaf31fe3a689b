#include "hypconv/verdict_io.hpp"

#include <json.hpp>

#include <sstream>

namespace hypconv {

using nlohmann::json;

std::string verdict_to_json(const Verdict& v) {
    json doc;
    doc["uniform"] = v.uniform;
    doc["sufficient_shortcut"] = v.sufficient_shortcut;
    doc["limit"] = v.limit ? json(to_string(*v.limit)) : json(nullptr);
    doc["conditions"] = json::array();
    for (const auto& c : v.conditions)
        doc["conditions"].push_back({{"id", c.id},
                                     {"name", roman(c.id)},
                                     {"applicable", c.applicable},
                                     {"satisfied", c.satisfied},
                                     {"witnesses", c.witnesses}});
    return doc.dump(2);
}

Verdict verdict_from_json(const std::string& text) {
    Verdict v;
    try {
        json doc = json::parse(text);
        v.uniform = doc.at("uniform").get<bool>();
        v.sufficient_shortcut = doc.at("sufficient_shortcut").get<bool>();
        const json& lim = doc.at("limit");
        if (!lim.is_null()) {
            std::string s = lim.get<std::string>();
            if (s == "zero") v.limit = LimitKind::Zero;
            else if (s == "constant") v.limit = LimitKind::ConstantH0Q0;
            else if (s == "series") v.limit = LimitKind::SeriesGlimzn;
            else throw InvalidInput("unknown limit kind " + s);
        }
        const json& cs = doc.at("conditions");
        if (cs.size() != 7) throw InvalidInput("expected seven conditions");
        for (std::size_t i = 0; i < 7; ++i) {
            auto& c = v.conditions[i];
            c.id = cs[i].at("id").get<int>();
            c.applicable = cs[i].at("applicable").get<bool>();
            c.satisfied = cs[i].at("satisfied").get<bool>();
            c.witnesses = cs[i].at("witnesses").get<std::vector<std::string>>();
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed verdict: ") + e.what());
    }
    return v;
}

std::string verdict_to_text(const Verdict& v) {
    std::ostringstream os;
    os << (v.uniform ? "uniformly convergent" : "not uniformly convergent");
    if (v.sufficient_shortcut) os << " (settled by D0 < 0 or D0* < 0)";
    os << "\n";
    for (const auto& c : v.conditions) {
        os << "  (" << roman(c.id) << ") ";
        if (!c.applicable) os << "n/a";
        else os << (c.satisfied ? "holds" : "FAILS");
        os << "\n";
        for (const auto& w : c.witnesses) os << "        " << w << "\n";
    }
    if (v.limit) os << "  limit: " << to_string(*v.limit) << "\n";
    return os.str();
}

}  // namespace hypconv
